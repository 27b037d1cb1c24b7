#include "awbench/bialgebra.hpp"

#include <algorithm>

namespace awbench {

CoalgebraData CoalgebraData::zero(int dim) {
    CoalgebraData c;
    c.dim = dim;
    c.Delta = Tensor3(dim, dim, dim);
    c.delta = Tensor3(dim, dim, dim);
    return c;
}

Rational BilinearForm::eval(const Vec& x, const Vec& y) const {
    Rational acc;
    for (int r = 0; r < gram.rows(); ++r) {
        if (x[static_cast<size_t>(r)].is_zero()) continue;
        for (int c = 0; c < gram.cols(); ++c)
            acc += x[static_cast<size_t>(r)] * gram.at(r, c) * y[static_cast<size_t>(c)];
    }
    return acc;
}

namespace {

void require_coalgebra_shape(const CoalgebraData& c) {
    auto bad = [&](const Tensor3& t) {
        return t.dim_left() != c.dim || t.dim_right() != c.dim || t.dim_out() != c.dim;
    };
    if (bad(c.Delta) || bad(c.delta)) throw InputError("coalgebra: tensor shape mismatch");
}

void require_bialgebra_shape(const BialgebraData& b) {
    require_coalgebra_shape(b.coalgebra);
    if (b.algebra.dim != b.coalgebra.dim)
        throw InputError("bialgebra: algebra and coalgebra dimensions differ");
}

}  // namespace

CheckReport check_coalgebra(const CoalgebraData& c) {
    require_coalgebra_shape(c);
    CheckReport report;
    const int n = c.dim;
    const Tensor3& D = c.Delta;
    const Tensor3& d = c.delta;
    for (int k = 0; k < n; ++k) {
        Matrix lhs(n, n), rhs(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                lhs.at(i, j) = D.at(k, j, i);  // tau applied to Delta(e_k)
                rhs.at(i, j) = D.at(k, i, j);
            }
        report.require_equal("cocommutative", {k + 1}, lhs, rhs);
    }
    for (int k = 0; k < n; ++k) {
        Matrix lhs(n, n), rhs(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                lhs.at(i, j) = -d.at(k, j, i);
                rhs.at(i, j) = d.at(k, i, j);
            }
        report.require_equal("coskew", {k + 1}, lhs, rhs);
    }
    // (id (x) Delta) Delta = (Delta (x) id) Delta, coefficients of e_i (x) e_p (x) e_q.
    for (int k = 0; k < n; ++k) {
        bool ok = true;
        Vec lhs_flat, rhs_flat;
        lhs_flat.reserve(static_cast<size_t>(n) * n * n);
        rhs_flat.reserve(static_cast<size_t>(n) * n * n);
        for (int i = 0; i < n; ++i)
            for (int p = 0; p < n; ++p)
                for (int q = 0; q < n; ++q) {
                    Rational lhs, rhs;
                    for (int m = 0; m < n; ++m) {
                        lhs += D.at(k, i, m) * D.at(m, p, q);
                        rhs += D.at(k, m, q) * D.at(m, i, p);
                    }
                    if (lhs != rhs) ok = false;
                    lhs_flat.push_back(lhs);
                    rhs_flat.push_back(rhs);
                }
        if (!ok) report.record("coassociative", {k + 1}, lhs_flat, rhs_flat);
    }
    // Co-Leibniz, coefficients of e_i (x) e_p (x) e_q per source index k.
    for (int k = 0; k < n; ++k) {
        bool ok = true;
        Vec lhs_flat, rhs_flat;
        for (int i = 0; i < n; ++i)
            for (int p = 0; p < n; ++p)
                for (int q = 0; q < n; ++q) {
                    Rational lhs, rhs;
                    for (int m = 0; m < n; ++m) {
                        lhs += d.at(k, i, m) * D.at(m, p, q);
                        rhs += D.at(k, m, q) * d.at(m, i, p) + D.at(k, p, m) * d.at(m, i, q);
                    }
                    if (lhs != rhs) ok = false;
                    lhs_flat.push_back(lhs);
                    rhs_flat.push_back(rhs);
                }
        if (!ok) report.record("co-leibniz", {k + 1}, lhs_flat, rhs_flat);
    }
    return report;
}

AlgebraData dualize_coalgebra(const CoalgebraData& c) {
    require_coalgebra_shape(c);
    AlgebraData a = AlgebraData::zero(c.dim, AlgebraKind::AlmostPoisson, true);
    for (int i = 0; i < c.dim; ++i)
        for (int j = 0; j < c.dim; ++j)
            for (int k = 0; k < c.dim; ++k) {
                a.product.at(i, j, k) = c.Delta.at(k, i, j);
                a.bracket->at(i, j, k) = c.delta.at(k, i, j);
            }
    return a;
}

CoalgebraData coalgebra_of_algebra(const AlgebraData& a) {
    CoalgebraData c = CoalgebraData::zero(a.dim);
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j)
            for (int k = 0; k < a.dim; ++k) {
                c.Delta.at(k, i, j) = a.product.at(i, j, k);
                if (a.bracket) c.delta.at(k, i, j) = a.bracket->at(i, j, k);
            }
    return c;
}

CheckReport check_infinitesimal(const BialgebraData& b) {
    require_bialgebra_shape(b);
    CheckReport report;
    const int n = b.algebra.dim;
    const Tensor3& c = b.algebra.product;
    const Tensor3& D = b.coalgebra.Delta;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Matrix lhs(n, n), rhs(n, n);
            for (int s = 0; s < n; ++s)
                for (int t = 0; t < n; ++t) {
                    Rational l, r;
                    for (int m = 0; m < n; ++m) {
                        l += c.at(i, j, m) * D.at(m, s, t);
                        r += c.at(i, m, s) * D.at(j, m, t) + D.at(i, s, m) * c.at(j, m, t);
                    }
                    lhs.at(s, t) = l;
                    rhs.at(s, t) = r;
                }
            report.require_equal("infinitesimal", {i + 1, j + 1}, lhs, rhs);
        }
    return report;
}

CheckReport check_dbialgebra(const BialgebraData& b) {
    require_bialgebra_shape(b);
    if (!b.algebra.bracket) throw InputError("bialgebra: algebra bracket missing");
    CheckReport ap = check_almost_poisson(b.algebra);
    if (!ap.passed())
        throw PreconditionError("check_dbialgebra: algebra fails the almost Poisson check at " +
                                ap.violations.front().identity);
    CheckReport co = check_coalgebra(b.coalgebra);
    if (!co.passed())
        throw PreconditionError("check_dbialgebra: coalgebra fails the coalgebra check at " +
                                co.violations.front().identity);

    CheckReport report = check_infinitesimal(b);
    const int n = b.algebra.dim;
    const Tensor3& c = b.algebra.product;
    const Tensor3& br = *b.algebra.bracket;
    const Tensor3& D = b.coalgebra.Delta;
    const Tensor3& d = b.coalgebra.delta;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            // delta(x.y) + (ad(y) (x) id) Delta(x) - (id (x) L(x)) delta(y)
            //            + (ad(x) (x) id) Delta(y) - (id (x) L(y)) delta(x) = 0
            Matrix acc(n, n);
            for (int s = 0; s < n; ++s)
                for (int t = 0; t < n; ++t) {
                    Rational v;
                    for (int m = 0; m < n; ++m) {
                        v += c.at(i, j, m) * d.at(m, s, t);
                        v += D.at(i, m, t) * br.at(j, m, s);
                        v -= d.at(j, s, m) * c.at(i, m, t);
                        v += D.at(j, m, t) * br.at(i, m, s);
                        v -= d.at(i, s, m) * c.at(j, m, t);
                    }
                    acc.at(s, t) = v;
                }
            report.require_equal("compat-cobracket", {i + 1, j + 1}, acc, Matrix(n, n));
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            // Delta([x,y]) - (L(y) (x) id) delta(x) - (id (x) ad(x)) Delta(y)
            //             + (id (x) L(y)) delta(x) - (ad(x) (x) id) Delta(y) = 0
            Matrix acc(n, n);
            for (int s = 0; s < n; ++s)
                for (int t = 0; t < n; ++t) {
                    Rational v;
                    for (int m = 0; m < n; ++m) {
                        v += br.at(i, j, m) * D.at(m, s, t);
                        v -= d.at(i, m, t) * c.at(j, m, s);
                        v -= D.at(j, s, m) * br.at(i, m, t);
                        v += d.at(i, s, m) * c.at(j, m, t);
                        v -= D.at(j, m, t) * br.at(i, m, s);
                    }
                    acc.at(s, t) = v;
                }
            report.require_equal("compat-coproduct", {i + 1, j + 1}, acc, Matrix(n, n));
        }
    return report;
}

MatchedPairData build_dual_maps(const BialgebraData& b) {
    require_bialgebra_shape(b);
    if (!b.algebra.bracket) throw InputError("bialgebra: algebra bracket missing");
    const int n = b.algebra.dim;
    MatchedPairData mp;
    mp.a1 = b.algebra;
    mp.a2 = dualize_coalgebra(b.coalgebra);
    const Tensor3& c = b.algebra.product;
    const Tensor3& br = *b.algebra.bracket;
    const Tensor3& D = b.coalgebra.Delta;
    const Tensor3& d = b.coalgebra.delta;
    std::vector<Matrix> mu1(static_cast<size_t>(n), Matrix(n, n));
    std::vector<Matrix> rho1(static_cast<size_t>(n), Matrix(n, n));
    std::vector<Matrix> mu2(static_cast<size_t>(n), Matrix(n, n));
    std::vector<Matrix> rho2(static_cast<size_t>(n), Matrix(n, n));
    for (int a = 0; a < n; ++a)
        for (int s = 0; s < n; ++s)
            for (int t = 0; t < n; ++t) {
                // mu1 = -(L_A)* and rho1 = (ad_A)* acting on the dual space.
                mu1[a].at(s, t) = c.at(a, s, t);
                rho1[a].at(s, t) = -br.at(a, s, t);
                // mu2 = -(L_{A*})* and rho2 = (ad_{A*})* acting back on A.
                mu2[a].at(s, t) = D.at(t, a, s);
                rho2[a].at(s, t) = -d.at(t, a, s);
            }
    mp.mu1 = std::move(mu1);
    mp.rho1 = std::move(rho1);
    mp.mu2 = std::move(mu2);
    mp.rho2 = std::move(rho2);
    return mp;
}

std::pair<AlgebraData, BilinearForm> build_double(const BialgebraData& b) {
    MatchedPairData mp = build_dual_maps(b);
    AlgebraData algebra = bowtie(mp);
    const int n = b.algebra.dim;
    BilinearForm form;
    form.dim = 2 * n;
    form.gram = Matrix(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
        form.gram.at(i, n + i) = Rational(1);
        form.gram.at(n + i, i) = Rational(1);
    }
    return {std::move(algebra), std::move(form)};
}

Split standard_split(int base_dim) {
    Split s;
    for (int i = 0; i < base_dim; ++i) s.first.push_back(i);
    for (int i = 0; i < base_dim; ++i) s.second.push_back(base_dim + i);
    return s;
}

namespace {

void check_summand(CheckReport& report, const AlgebraData& a, const BilinearForm& form,
                   const std::vector<int>& indices, const std::vector<bool>& member,
                   const char* closed_name, const char* isotropic_name) {
    const int n = a.dim;
    for (int x : indices)
        for (int y : indices) {
            Vec prod = bilinear_apply(a.product, unit_vec(n, x), unit_vec(n, y));
            Vec outside = prod;
            for (int k = 0; k < n; ++k)
                if (member[static_cast<size_t>(k)]) outside[static_cast<size_t>(k)] = Rational(0);
            if (!is_zero(outside))
                report.record(std::string(closed_name) + "-product", {x + 1, y + 1}, prod,
                              zero_vec(n));
            if (a.bracket) {
                Vec brk = bilinear_apply(*a.bracket, unit_vec(n, x), unit_vec(n, y));
                Vec out2 = brk;
                for (int k = 0; k < n; ++k)
                    if (member[static_cast<size_t>(k)]) out2[static_cast<size_t>(k)] = Rational(0);
                if (!is_zero(out2))
                    report.record(std::string(closed_name) + "-bracket", {x + 1, y + 1}, brk,
                                  zero_vec(n));
            }
            Rational pairing = form.gram.at(x, y);
            if (!pairing.is_zero())
                report.record(isotropic_name, {x + 1, y + 1}, {pairing}, {Rational(0)});
        }
}

}  // namespace

CheckReport check_manin_triple(const AlgebraData& a, const Split& split,
                               const BilinearForm& form) {
    if (form.dim != a.dim || form.gram.rows() != a.dim || form.gram.cols() != a.dim)
        throw InputError("manin triple: form dimension mismatch");
    std::vector<bool> seen(static_cast<size_t>(a.dim), false);
    for (int i : split.first) {
        if (i < 0 || i >= a.dim || seen[static_cast<size_t>(i)])
            throw InputError("manin triple: split is not a complementary pair of index sets");
        seen[static_cast<size_t>(i)] = true;
    }
    for (int i : split.second) {
        if (i < 0 || i >= a.dim || seen[static_cast<size_t>(i)])
            throw InputError("manin triple: split is not a complementary pair of index sets");
        seen[static_cast<size_t>(i)] = true;
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end())
        throw InputError("manin triple: split does not span the whole space");

    CheckReport report;
    report.absorb("ambient:", check_almost_poisson(a));

    for (int i = 0; i < a.dim; ++i)
        for (int j = i + 1; j < a.dim; ++j)
            if (form.gram.at(i, j) != form.gram.at(j, i))
                report.record("form-symmetric", {i + 1, j + 1}, {form.gram.at(i, j)},
                              {form.gram.at(j, i)});
    if (exact_det(form.gram).is_zero())
        report.record("form-nondegenerate", {}, {Rational(0)}, {Rational(1)});

    const int n = a.dim;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Vec ei = unit_vec(n, i), ej = unit_vec(n, j), ek = unit_vec(n, k);
                Rational lhs = form.eval(bilinear_apply(a.product, ei, ej), ek);
                Rational rhs = form.eval(ei, bilinear_apply(a.product, ej, ek));
                if (lhs != rhs)
                    report.record("invariant-product", {i + 1, j + 1, k + 1}, {lhs}, {rhs});
                if (a.bracket) {
                    Rational bl = form.eval(bilinear_apply(*a.bracket, ei, ej), ek);
                    Rational brr = form.eval(ei, bilinear_apply(*a.bracket, ej, ek));
                    if (bl != brr)
                        report.record("invariant-bracket", {i + 1, j + 1, k + 1}, {bl}, {brr});
                }
            }

    std::vector<bool> in_first(static_cast<size_t>(n), false);
    for (int i : split.first) in_first[static_cast<size_t>(i)] = true;
    std::vector<bool> in_second(static_cast<size_t>(n), false);
    for (int i : split.second) in_second[static_cast<size_t>(i)] = true;
    check_summand(report, a, form, split.first, in_first, "closed-plus", "isotropic-plus");
    check_summand(report, a, form, split.second, in_second, "closed-minus", "isotropic-minus");
    return report;
}

EquivalenceReport equivalence_report(const BialgebraData& b) {
    // check_dbialgebra performs the precondition gate; its exceptions propagate.
    EquivalenceReport out;
    out.dbialgebra = check_dbialgebra(b);
    MatchedPairData mp = build_dual_maps(b);
    out.matched_pair = check_matched_pair_ap(mp);
    auto [dbl, form] = build_double(b);
    out.manin_triple = check_manin_triple(dbl, standard_split(b.algebra.dim), form);
    return out;
}

}  // namespace awbench
