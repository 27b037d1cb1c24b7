#include "awbench/operators.hpp"

namespace awbench {

const RepresentationData& OperatorData::rep() const {
    if (const auto* m = std::get_if<ModuleAlgebraData>(&context)) return m->rep;
    return std::get<RepresentationData>(context);
}

void validate_shape(const OperatorData& op) {
    const RepresentationData& r = op.rep();
    validate_shape(r);
    if (op.map.rows() != r.base.dim || op.map.cols() != r.carrier_dim)
        throw InputError("operator: map must be base_dim x carrier_dim");
}

namespace {

const RepresentationData& rep_checked(const OperatorData& op) {
    validate_shape(op);
    return op.rep();
}

}  // namespace

CheckReport check_weighted_rrb(const OperatorData& op) {
    const auto* mod = std::get_if<ModuleAlgebraData>(&op.context);
    if (!mod) throw InputError("check_weighted_rrb: context must be a module algebra");
    const RepresentationData& r = rep_checked(op);
    if (!op.weight) throw InputError("check_weighted_rrb: weight missing");
    const Rational& w = *op.weight;
    const bool with_bracket = r.rho.has_value();
    if (with_bracket && (!mod->carrier_bracket || !r.base.bracket))
        throw InputError("check_weighted_rrb: bracket data incomplete");
    const int cd = r.carrier_dim;
    CheckReport report;
    for (int a = 0; a < cd; ++a)
        for (int b = 0; b < cd; ++b) {
            Vec ea = unit_vec(cd, a), eb = unit_vec(cd, b);
            Vec Ra = op.map.apply(ea), Rb = op.map.apply(eb);
            Vec lhs = bilinear_apply(r.base.product, Ra, Rb);
            Vec inner = action_at(*r.mu, Ra).apply(eb);
            inner = add(inner, action_at(*r.mu, Rb).apply(ea));
            inner = add(inner, scale(w, bilinear_apply(mod->carrier_product, ea, eb)));
            Vec rhs = op.map.apply(inner);
            report.require_equal("rrb-product", {a + 1, b + 1}, lhs, rhs);
        }
    if (with_bracket) {
        for (int a = 0; a < cd; ++a)
            for (int b = 0; b < cd; ++b) {
                Vec ea = unit_vec(cd, a), eb = unit_vec(cd, b);
                Vec Ra = op.map.apply(ea), Rb = op.map.apply(eb);
                Vec lhs = bilinear_apply(*r.base.bracket, Ra, Rb);
                Vec inner = action_at(*r.rho, Ra).apply(eb);
                inner = sub(inner, action_at(*r.rho, Rb).apply(ea));
                inner = add(inner, scale(w, bilinear_apply(*mod->carrier_bracket, ea, eb)));
                Vec rhs = op.map.apply(inner);
                report.require_equal("rrb-bracket", {a + 1, b + 1}, lhs, rhs);
            }
    }
    return report;
}

CheckReport check_relative_averaging(const OperatorData& op, AveragingBracketForm form) {
    if (!std::holds_alternative<RepresentationData>(op.context))
        throw InputError("check_relative_averaging: context must be a representation");
    if (op.weight) throw InputError("check_relative_averaging: weight not allowed");
    const RepresentationData& r = rep_checked(op);
    if (profile_of(r) == RepProfile::Awb)
        throw InputError("check_relative_averaging: profile must contain mu");
    const int cd = r.carrier_dim;
    CheckReport report;
    for (int a = 0; a < cd; ++a)
        for (int b = 0; b < cd; ++b) {
            Vec ea = unit_vec(cd, a), eb = unit_vec(cd, b);
            Vec Ka = op.map.apply(ea), Kb = op.map.apply(eb);
            Vec lhs = bilinear_apply(r.base.product, Ka, Kb);
            Vec rhs = op.map.apply(action_at(*r.mu, Ka).apply(eb));
            report.require_equal("averaging-product", {a + 1, b + 1}, lhs, rhs);
        }
    if (r.rho) {
        if (!r.base.bracket) throw InputError("check_relative_averaging: base bracket missing");
        const auto& bracket_action = form == AveragingBracketForm::Rho ? *r.rho : *r.mu;
        for (int a = 0; a < cd; ++a)
            for (int b = 0; b < cd; ++b) {
                Vec ea = unit_vec(cd, a), eb = unit_vec(cd, b);
                Vec Ka = op.map.apply(ea), Kb = op.map.apply(eb);
                Vec lhs = bilinear_apply(*r.base.bracket, Ka, Kb);
                Vec rhs = op.map.apply(action_at(bracket_action, Ka).apply(eb));
                report.require_equal("averaging-bracket", {a + 1, b + 1}, lhs, rhs);
            }
    }
    return report;
}

CheckReport check_nijenhuis_awb(const Matrix& nmap, const AlgebraData& a) {
    if (nmap.rows() != a.dim || nmap.cols() != a.dim)
        throw InputError("check_nijenhuis_awb: map must be square of the algebra dimension");
    CheckReport report;
    const int n = a.dim;
    auto deformed = [&](const Tensor3& op, const char* name) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Vec ei = unit_vec(n, i), ej = unit_vec(n, j);
                Vec Ni = nmap.apply(ei), Nj = nmap.apply(ej);
                Vec lhs = bilinear_apply(op, Ni, Nj);
                Vec inner = add(bilinear_apply(op, Ni, ej), bilinear_apply(op, ei, Nj));
                inner = sub(inner, nmap.apply(bilinear_apply(op, ei, ej)));
                Vec rhs = nmap.apply(inner);
                report.require_equal(name, {i + 1, j + 1}, lhs, rhs);
            }
    };
    deformed(a.product, "nijenhuis-product");
    if (a.bracket) deformed(*a.bracket, "nijenhuis-bracket");
    return report;
}

std::pair<Matrix, AlgebraData> nijenhuis_from_operator(const OperatorData& op) {
    if (!std::holds_alternative<RepresentationData>(op.context))
        throw InputError("nijenhuis_from_operator: context must be a representation");
    const RepresentationData& r = rep_checked(op);
    AlgebraData hemi = hemisemi_direct(r);
    const int n = r.base.dim, m = r.carrier_dim;
    Matrix lifted(n + m, n + m);
    for (int i = 0; i < n; ++i)
        for (int b = 0; b < m; ++b) lifted.at(i, n + b) = op.map.at(i, b);
    return {std::move(lifted), std::move(hemi)};
}

CheckReport graph_subalgebra_check(const OperatorData& op) {
    if (!std::holds_alternative<RepresentationData>(op.context))
        throw InputError("graph_subalgebra_check: context must be a representation");
    const RepresentationData& r = rep_checked(op);
    AlgebraData hemi = hemisemi_direct(r);
    const int n = r.base.dim, m = r.carrier_dim;
    Matrix graph(n + m, m);
    for (int b = 0; b < m; ++b) {
        for (int i = 0; i < n; ++i) graph.at(i, b) = op.map.at(i, b);
        graph.at(n + b, b) = Rational(1);
    }
    CheckReport report;
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            Vec ga = zero_vec(n + m), gb = zero_vec(n + m);
            for (int i = 0; i < n; ++i) {
                ga[static_cast<size_t>(i)] = op.map.at(i, a);
                gb[static_cast<size_t>(i)] = op.map.at(i, b);
            }
            ga[static_cast<size_t>(n + a)] = Rational(1);
            gb[static_cast<size_t>(n + b)] = Rational(1);
            Vec prod = bilinear_apply(hemi.product, ga, gb);
            if (!in_column_span(graph, prod))
                report.record("graph-product", {a + 1, b + 1}, prod, zero_vec(n + m));
            if (hemi.bracket) {
                Vec brk = bilinear_apply(*hemi.bracket, ga, gb);
                if (!in_column_span(graph, brk))
                    report.record("graph-bracket", {a + 1, b + 1}, brk, zero_vec(n + m));
            }
        }
    return report;
}

TridendriformData dendrify(const OperatorData& op) {
    const auto* mod = std::get_if<ModuleAlgebraData>(&op.context);
    if (!mod) throw InputError("dendrify: context must be a module algebra");
    const RepresentationData& r = rep_checked(op);
    CheckReport context_check = r.rho ? check_module_ap(*mod) : check_module_comm_assoc(*mod);
    if (!context_check.passed())
        throw PreconditionError("dendrify: module context fails its check at " +
                                context_check.violations.front().identity);
    CheckReport rrb = check_weighted_rrb(op);
    if (!rrb.passed())
        throw PreconditionError("dendrify: operator fails the Rota-Baxter check at " +
                                rrb.violations.front().identity);
    const Rational& w = *op.weight;
    const int cd = r.carrier_dim;
    TridendriformData t;
    t.dim = cd;
    t.bracket_part = r.rho ? mod->carrier_bracket->scaled(w) : Tensor3(cd, cd, cd);
    t.dot_part = mod->carrier_product.scaled(w);
    t.diamond = Tensor3(cd, cd, cd);
    t.triangle = Tensor3(cd, cd, cd);
    for (int a = 0; a < cd; ++a) {
        Vec Ra = op.map.apply(unit_vec(cd, a));
        Matrix tri = action_at(*r.mu, Ra);
        Matrix dia = r.rho ? action_at(*r.rho, Ra) : Matrix(cd, cd);
        for (int b = 0; b < cd; ++b)
            for (int k = 0; k < cd; ++k) {
                t.triangle.at(a, b, k) = tri.at(k, b);
                t.diamond.at(a, b, k) = dia.at(k, b);
            }
    }
    return t;
}

namespace {

void require_tridendriform_shape(const TridendriformData& t) {
    auto bad = [&](const Tensor3& x) {
        return x.dim_left() != t.dim || x.dim_right() != t.dim || x.dim_out() != t.dim;
    };
    if (bad(t.bracket_part) || bad(t.diamond) || bad(t.dot_part) || bad(t.triangle))
        throw InputError("tridendriform: tensor shape mismatch");
    for (int i = 0; i < t.dim; ++i)
        for (int j = 0; j < t.dim; ++j)
            for (int k = 0; k < t.dim; ++k) {
                if (t.dot_part.at(i, j, k) != t.dot_part.at(j, i, k))
                    throw InputError("tridendriform: dot operation must be symmetric");
                if (t.bracket_part.at(i, j, k) != -t.bracket_part.at(j, i, k))
                    throw InputError("tridendriform: bracket operation must be skew");
            }
}

// Induced operations: x o y = x tri y + y tri x + x.y and
// {x,y}_c = x dia y - y dia x + {x,y}.
Tensor3 induced_product(const TridendriformData& t) {
    Tensor3 out(t.dim, t.dim, t.dim);
    for (int i = 0; i < t.dim; ++i)
        for (int j = 0; j < t.dim; ++j)
            for (int k = 0; k < t.dim; ++k)
                out.at(i, j, k) =
                    t.triangle.at(i, j, k) + t.triangle.at(j, i, k) + t.dot_part.at(i, j, k);
    return out;
}

Tensor3 induced_bracket(const TridendriformData& t) {
    Tensor3 out(t.dim, t.dim, t.dim);
    for (int i = 0; i < t.dim; ++i)
        for (int j = 0; j < t.dim; ++j)
            for (int k = 0; k < t.dim; ++k)
                out.at(i, j, k) =
                    t.diamond.at(i, j, k) - t.diamond.at(j, i, k) + t.bracket_part.at(i, j, k);
    return out;
}

}  // namespace

CheckReport check_tridendriform(const TridendriformData& t) {
    require_tridendriform_shape(t);
    CheckReport report;
    const int n = t.dim;

    AlgebraData ap;
    ap.dim = n;
    ap.product = t.dot_part;
    ap.bracket = t.bracket_part;
    ap.kind = AlgebraKind::AlmostPoisson;
    report.absorb("", check_almost_poisson(ap));

    Tensor3 circ = induced_product(t);
    Tensor3 curly = induced_bracket(t);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Vec ei = unit_vec(n, i), ej = unit_vec(n, j), ek = unit_vec(n, k);
                // (x o y) tri z = x tri (y tri z); the left factor is the
                // induced product, as in the classical tridendriform axiom.
                Vec lhs = bilinear_apply(t.triangle, bilinear_apply(circ, ei, ej), ek);
                Vec rhs = bilinear_apply(t.triangle, ei, bilinear_apply(t.triangle, ej, ek));
                report.require_equal("dendr-left", {i + 1, j + 1, k + 1}, lhs, rhs);
                // (x tri y).z = x tri (y.z)
                lhs = bilinear_apply(t.dot_part, bilinear_apply(t.triangle, ei, ej), ek);
                rhs = bilinear_apply(t.triangle, ei, bilinear_apply(t.dot_part, ej, ek));
                report.require_equal("dendr-mixed", {i + 1, j + 1, k + 1}, lhs, rhs);
                // x dia (y.z) = (x dia y).z + y.(x dia z)
                lhs = bilinear_apply(t.diamond, ei, bilinear_apply(t.dot_part, ej, ek));
                rhs = add(bilinear_apply(t.dot_part, bilinear_apply(t.diamond, ei, ej), ek),
                          bilinear_apply(t.dot_part, ej, bilinear_apply(t.diamond, ei, ek)));
                report.require_equal("tri-compat-1", {i + 1, j + 1, k + 1}, lhs, rhs);
                // [x, z tri y] = z tri [x,y] - y.(z dia x)
                lhs = bilinear_apply(t.bracket_part, ei, bilinear_apply(t.triangle, ek, ej));
                rhs = sub(bilinear_apply(t.triangle, ek, bilinear_apply(t.bracket_part, ei, ej)),
                          bilinear_apply(t.dot_part, ej, bilinear_apply(t.diamond, ek, ei)));
                report.require_equal("tri-compat-2", {i + 1, j + 1, k + 1}, lhs, rhs);
                // (y o z) dia x = z tri (y dia x) + y tri (z dia x)
                lhs = bilinear_apply(t.diamond, bilinear_apply(circ, ej, ek), ei);
                rhs = add(bilinear_apply(t.triangle, ek, bilinear_apply(t.diamond, ej, ei)),
                          bilinear_apply(t.triangle, ej, bilinear_apply(t.diamond, ek, ei)));
                report.require_equal("tri-compat-3", {i + 1, j + 1, k + 1}, lhs, rhs);
                // {x,z}_c tri y = x dia (z tri y) - z tri (x dia y)
                lhs = bilinear_apply(t.triangle, bilinear_apply(curly, ei, ek), ej);
                rhs = sub(bilinear_apply(t.diamond, ei, bilinear_apply(t.triangle, ek, ej)),
                          bilinear_apply(t.triangle, ek, bilinear_apply(t.diamond, ei, ej)));
                report.require_equal("tri-compat-4", {i + 1, j + 1, k + 1}, lhs, rhs);
            }
    return report;
}

AlgebraData associated_ap(const TridendriformData& t) {
    CheckReport check = check_tridendriform(t);
    if (!check.passed())
        throw PreconditionError("associated_ap: tridendriform check fails at " +
                                check.violations.front().identity);
    AlgebraData out;
    out.dim = t.dim;
    out.product = induced_product(t);
    out.bracket = induced_bracket(t);
    out.kind = AlgebraKind::AlmostPoisson;
    return out;
}

CheckReport check_homomorphism(const Matrix& f, const AlgebraData& src, const AlgebraData& dst) {
    if (f.rows() != dst.dim || f.cols() != src.dim)
        throw InputError("check_homomorphism: map must be dst_dim x src_dim");
    if (src.bracket.has_value() != dst.bracket.has_value())
        throw InputError("check_homomorphism: bracket present on only one side");
    CheckReport report;
    const int n = src.dim;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec ei = unit_vec(n, i), ej = unit_vec(n, j);
            Vec lhs = f.apply(bilinear_apply(src.product, ei, ej));
            Vec rhs = bilinear_apply(dst.product, f.apply(ei), f.apply(ej));
            report.require_equal("hom-product", {i + 1, j + 1}, lhs, rhs);
            if (src.bracket) {
                Vec bl = f.apply(bilinear_apply(*src.bracket, ei, ej));
                Vec br = bilinear_apply(*dst.bracket, f.apply(ei), f.apply(ej));
                report.require_equal("hom-bracket", {i + 1, j + 1}, bl, br);
            }
        }
    return report;
}

AlgebraData induced_awb(const OperatorData& op) {
    if (!std::holds_alternative<RepresentationData>(op.context))
        throw InputError("induced_awb: context must be a representation");
    const RepresentationData& r = rep_checked(op);
    if (profile_of(r) != RepProfile::MuRho)
        throw InputError("induced_awb: profile must be {mu, rho}");
    CheckReport avg = check_relative_averaging(op);
    if (!avg.passed())
        throw PreconditionError("induced_awb: operator fails the averaging check at " +
                                avg.violations.front().identity);
    const int cd = r.carrier_dim;
    AlgebraData out = AlgebraData::zero(cd, AlgebraKind::AwbLeft, true);
    for (int a = 0; a < cd; ++a) {
        Vec Ka = op.map.apply(unit_vec(cd, a));
        Matrix mu_k = action_at(*r.mu, Ka);
        Matrix rho_k = action_at(*r.rho, Ka);
        for (int b = 0; b < cd; ++b)
            for (int k = 0; k < cd; ++k) {
                out.product.at(a, b, k) = mu_k.at(k, b);
                out.bracket->at(a, b, k) = rho_k.at(k, b);
            }
    }
    return out;
}

}  // namespace awbench
