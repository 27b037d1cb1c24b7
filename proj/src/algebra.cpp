#include "awbench/algebra.hpp"

namespace awbench {

std::string kind_name(AlgebraKind k) {
    switch (k) {
        case AlgebraKind::Assoc: return "assoc";
        case AlgebraKind::CommAssoc: return "comm-assoc";
        case AlgebraKind::AlmostPoisson: return "almost-poisson";
        case AlgebraKind::AwbLeft: return "awb-left";
        case AlgebraKind::AwbRight: return "awb-right";
    }
    return "assoc";
}

std::optional<AlgebraKind> kind_from_name(const std::string& name) {
    if (name == "assoc") return AlgebraKind::Assoc;
    if (name == "comm-assoc") return AlgebraKind::CommAssoc;
    if (name == "almost-poisson") return AlgebraKind::AlmostPoisson;
    if (name == "awb-left") return AlgebraKind::AwbLeft;
    if (name == "awb-right") return AlgebraKind::AwbRight;
    return std::nullopt;
}

AlgebraData AlgebraData::zero(int dim, AlgebraKind kind, bool with_bracket) {
    AlgebraData a;
    a.dim = dim;
    a.kind = kind;
    a.product = Tensor3(dim, dim, dim);
    if (with_bracket) a.bracket = Tensor3(dim, dim, dim);
    return a;
}

namespace {

void require_product(const AlgebraData& a) {
    if (a.product.dim_left() != a.dim || a.product.dim_right() != a.dim ||
        a.product.dim_out() != a.dim)
        throw InputError("algebra: product tensor shape does not match dim");
}

void require_bracket(const AlgebraData& a) {
    if (!a.bracket) throw InputError("algebra: bracket required but missing");
    if (a.bracket->dim_left() != a.dim || a.bracket->dim_right() != a.dim ||
        a.bracket->dim_out() != a.dim)
        throw InputError("algebra: bracket tensor shape does not match dim");
}

void check_associativity(CheckReport& rep, const Tensor3& c, int dim) {
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            Vec ij = bilinear_apply(c, unit_vec(dim, i), unit_vec(dim, j));
            for (int k = 0; k < dim; ++k) {
                Vec lhs = bilinear_apply(c, ij, unit_vec(dim, k));
                Vec jk = bilinear_apply(c, unit_vec(dim, j), unit_vec(dim, k));
                Vec rhs = bilinear_apply(c, unit_vec(dim, i), jk);
                rep.require_equal("associative", {i + 1, j + 1, k + 1}, lhs, rhs);
            }
        }
}

void check_commutativity(CheckReport& rep, const Tensor3& c, int dim) {
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j) {
            Vec lhs = bilinear_apply(c, unit_vec(dim, i), unit_vec(dim, j));
            Vec rhs = bilinear_apply(c, unit_vec(dim, j), unit_vec(dim, i));
            rep.require_equal("commutative", {i + 1, j + 1}, lhs, rhs);
        }
}

void check_skew(CheckReport& rep, const Tensor3& b, int dim) {
    for (int i = 0; i < dim; ++i)
        for (int j = i; j < dim; ++j) {
            Vec lhs = bilinear_apply(b, unit_vec(dim, i), unit_vec(dim, j));
            Vec rhs = scale(Rational(-1),
                            bilinear_apply(b, unit_vec(dim, j), unit_vec(dim, i)));
            rep.require_equal("skew", {i + 1, j + 1}, lhs, rhs);
        }
}

}  // namespace

CheckReport check_assoc(const AlgebraData& a) {
    require_product(a);
    CheckReport rep;
    check_associativity(rep, a.product, a.dim);
    return rep;
}

CheckReport check_comm_assoc(const AlgebraData& a) {
    require_product(a);
    CheckReport rep;
    check_commutativity(rep, a.product, a.dim);
    check_associativity(rep, a.product, a.dim);
    return rep;
}

CheckReport check_almost_poisson(const AlgebraData& a) {
    require_product(a);
    require_bracket(a);
    CheckReport rep;
    check_commutativity(rep, a.product, a.dim);
    check_associativity(rep, a.product, a.dim);
    check_skew(rep, *a.bracket, a.dim);
    const Tensor3& c = a.product;
    const Tensor3& b = *a.bracket;
    const int n = a.dim;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Vec jk = bilinear_apply(c, unit_vec(n, j), unit_vec(n, k));
                Vec lhs = bilinear_apply(b, unit_vec(n, i), jk);
                Vec ij = bilinear_apply(b, unit_vec(n, i), unit_vec(n, j));
                Vec ik = bilinear_apply(b, unit_vec(n, i), unit_vec(n, k));
                Vec rhs = add(bilinear_apply(c, ij, unit_vec(n, k)),
                              bilinear_apply(c, unit_vec(n, j), ik));
                rep.require_equal("leibniz", {i + 1, j + 1, k + 1}, lhs, rhs);
            }
    return rep;
}

CheckReport check_awb(const AlgebraData& a, AwbVariant variant) {
    require_product(a);
    require_bracket(a);
    CheckReport rep;
    check_associativity(rep, a.product, a.dim);
    const Tensor3& c = a.product;
    const Tensor3& b = *a.bracket;
    const int n = a.dim;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Vec ei = unit_vec(n, i), ej = unit_vec(n, j), ek = unit_vec(n, k);
                if (variant == AwbVariant::Left) {
                    // {x, y.z} = {x,y}.z + y.{x,z}
                    Vec lhs = bilinear_apply(b, ei, bilinear_apply(c, ej, ek));
                    Vec rhs = add(bilinear_apply(c, bilinear_apply(b, ei, ej), ek),
                                  bilinear_apply(c, ej, bilinear_apply(b, ei, ek)));
                    rep.require_equal("awb-left", {i + 1, j + 1, k + 1}, lhs, rhs);
                } else {
                    // [x.y, z] = x.[y,z] + [x,z].y
                    Vec lhs = bilinear_apply(b, bilinear_apply(c, ei, ej), ek);
                    Vec rhs = add(bilinear_apply(c, ei, bilinear_apply(b, ej, ek)),
                                  bilinear_apply(c, bilinear_apply(b, ei, ek), ej));
                    rep.require_equal("awb-right", {i + 1, j + 1, k + 1}, lhs, rhs);
                }
            }
    return rep;
}

CheckReport check_opposite_bracket(const AlgebraData& a) {
    CheckReport left = check_awb(a, AwbVariant::Left);
    if (!left.passed()) return left;
    AlgebraData opposite = a;
    opposite.bracket = a.bracket->flip_arguments();
    return check_awb(opposite, AwbVariant::Right);
}

}  // namespace awbench
