#include "awbench/representation.hpp"

namespace awbench {

namespace {

// Action matrix of the product of basis vectors i, j, i.e. sum over k of
// c[i][j][k] * family[k].
Matrix action_at_product(const std::vector<Matrix>& family, const Tensor3& c, int i, int j,
                         int carrier) {
    Matrix acc(carrier, carrier);
    for (int k = 0; k < c.dim_out(); ++k) {
        const Rational& coeff = c.at(i, j, k);
        if (coeff.is_zero()) continue;
        acc = acc + coeff * family[static_cast<size_t>(k)];
    }
    return acc;
}

std::vector<Matrix> left_family(const AlgebraData& a, const Tensor3& op) {
    std::vector<Matrix> fam;
    fam.reserve(static_cast<size_t>(a.dim));
    for (int i = 0; i < a.dim; ++i) fam.push_back(left_operator(op, unit_vec(a.dim, i)));
    return fam;
}

std::vector<Matrix> right_family(const AlgebraData& a, const Tensor3& op) {
    std::vector<Matrix> fam;
    fam.reserve(static_cast<size_t>(a.dim));
    for (int i = 0; i < a.dim; ++i) fam.push_back(right_operator(op, unit_vec(a.dim, i)));
    return fam;
}

void validate_family(const std::vector<Matrix>& fam, int base_dim, int carrier,
                     const char* name) {
    if (static_cast<int>(fam.size()) != base_dim)
        throw InputError(std::string("representation: family '") + name +
                         "' must have one matrix per base basis vector");
    for (const auto& m : fam)
        if (m.rows() != carrier || m.cols() != carrier)
            throw InputError(std::string("representation: matrix in '") + name +
                             "' has wrong shape");
}

}  // namespace

RepProfile profile_of(const RepresentationData& rep) {
    const bool awb = rep.lmul || rep.rmul || rep.lbrk || rep.rbrk;
    const bool plain = rep.mu.has_value();
    if (awb && plain) throw InputError("representation: mixed action profiles");
    if (awb) {
        if (!(rep.lmul && rep.rmul && rep.lbrk && rep.rbrk))
            throw InputError("representation: AWB profile needs lmul, rmul, lbrk, rbrk");
        if (rep.rho) throw InputError("representation: rho not part of the AWB profile");
        return RepProfile::Awb;
    }
    if (!plain) throw InputError("representation: no action family present");
    return rep.rho ? RepProfile::MuRho : RepProfile::Mu;
}

void validate_shape(const RepresentationData& rep) {
    if (rep.carrier_dim < 0) throw InputError("representation: negative carrier dimension");
    switch (profile_of(rep)) {
        case RepProfile::Mu:
            validate_family(*rep.mu, rep.base.dim, rep.carrier_dim, "mu");
            break;
        case RepProfile::MuRho:
            validate_family(*rep.mu, rep.base.dim, rep.carrier_dim, "mu");
            validate_family(*rep.rho, rep.base.dim, rep.carrier_dim, "rho");
            break;
        case RepProfile::Awb:
            validate_family(*rep.lmul, rep.base.dim, rep.carrier_dim, "l");
            validate_family(*rep.rmul, rep.base.dim, rep.carrier_dim, "r");
            validate_family(*rep.lbrk, rep.base.dim, rep.carrier_dim, "L");
            validate_family(*rep.rbrk, rep.base.dim, rep.carrier_dim, "R");
            break;
    }
}

RepresentationData adjoint_rep(const AlgebraData& base) {
    if (!base.bracket) throw InputError("adjoint_rep: base has no bracket");
    RepresentationData rep;
    rep.base = base;
    rep.carrier_dim = base.dim;
    rep.mu = left_family(base, base.product);
    rep.rho = left_family(base, *base.bracket);
    return rep;
}

RepresentationData regular_assoc_rep(const AlgebraData& base) {
    RepresentationData rep;
    rep.base = base;
    rep.carrier_dim = base.dim;
    rep.mu = left_family(base, base.product);
    return rep;
}

RepresentationData regular_awb_rep(const AlgebraData& base) {
    if (!base.bracket) throw InputError("regular_awb_rep: base has no bracket");
    RepresentationData rep;
    rep.base = base;
    rep.carrier_dim = base.dim;
    rep.lmul = left_family(base, base.product);
    rep.rmul = right_family(base, base.product);
    rep.lbrk = left_family(base, *base.bracket);
    rep.rbrk = right_family(base, *base.bracket);
    return rep;
}

ModuleAlgebraData adjoint_module(const AlgebraData& base) {
    ModuleAlgebraData m;
    m.rep = adjoint_rep(base);
    m.carrier_product = base.product;
    m.carrier_bracket = base.bracket;
    return m;
}

CheckReport check_assoc_rep(const RepresentationData& rep) {
    validate_shape(rep);
    CheckReport report;
    const int n = rep.base.dim;
    const int cd = rep.carrier_dim;
    const Tensor3& c = rep.base.product;
    RepProfile p = profile_of(rep);
    if (p == RepProfile::Awb) {
        const auto& l = *rep.lmul;
        const auto& r = *rep.rmul;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                report.require_equal("bimodule-left", {i + 1, j + 1},
                                     action_at_product(l, c, i, j, cd), l[i] * l[j]);
                report.require_equal("bimodule-right", {i + 1, j + 1},
                                     action_at_product(r, c, i, j, cd), r[j] * r[i]);
                report.require_equal("bimodule-mixed", {i + 1, j + 1}, l[i] * r[j],
                                     r[j] * l[i]);
            }
        return report;
    }
    const auto& mu = *rep.mu;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            report.require_equal("rep-product", {i + 1, j + 1},
                                 action_at_product(mu, c, i, j, cd), mu[i] * mu[j]);
    return report;
}

CheckReport check_ap_rep(const RepresentationData& rep) {
    validate_shape(rep);
    if (profile_of(rep) != RepProfile::MuRho)
        throw InputError("check_ap_rep: profile must be {mu, rho}");
    if (rep.base.kind != AlgebraKind::AlmostPoisson)
        throw InputError("check_ap_rep: base kind must be almost-poisson");
    if (!rep.base.bracket) throw InputError("check_ap_rep: base bracket missing");
    CheckReport report = check_assoc_rep(rep);
    const int n = rep.base.dim;
    const int cd = rep.carrier_dim;
    const auto& mu = *rep.mu;
    const auto& rho = *rep.rho;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            report.require_equal("rep-rho-product", {i + 1, j + 1},
                                 action_at_product(rho, rep.base.product, i, j, cd),
                                 mu[j] * rho[i] + mu[i] * rho[j]);
            report.require_equal("rep-mu-bracket", {i + 1, j + 1},
                                 action_at_product(mu, *rep.base.bracket, i, j, cd),
                                 rho[i] * mu[j] - mu[j] * rho[i]);
        }
    return report;
}

CheckReport check_awb_rep(const RepresentationData& rep) {
    validate_shape(rep);
    if (profile_of(rep) != RepProfile::Awb)
        throw InputError("check_awb_rep: profile must be {l, r, L, R}");
    if (rep.base.kind != AlgebraKind::AwbLeft)
        throw InputError("check_awb_rep: base kind must be awb-left");
    if (!rep.base.bracket) throw InputError("check_awb_rep: base bracket missing");
    CheckReport report = check_assoc_rep(rep);
    const int n = rep.base.dim;
    const int cd = rep.carrier_dim;
    const auto& l = *rep.lmul;
    const auto& r = *rep.rmul;
    const auto& L = *rep.lbrk;
    const auto& R = *rep.rbrk;
    const Tensor3& b = *rep.base.bracket;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            report.require_equal("awb-rep-1", {i + 1, j + 1}, L[i] * l[j],
                                 action_at_product(l, b, i, j, cd) + l[j] * L[i]);
            report.require_equal("awb-rep-2", {i + 1, j + 1}, L[i] * r[j],
                                 r[j] * L[i] + action_at_product(r, b, i, j, cd));
            report.require_equal("awb-rep-3", {i + 1, j + 1},
                                 action_at_product(R, rep.base.product, i, j, cd),
                                 r[j] * R[i] + l[i] * R[j]);
        }
    return report;
}

RepresentationData dual_rep(const RepresentationData& rep) {
    validate_shape(rep);
    RepProfile p = profile_of(rep);
    if (p == RepProfile::Awb) throw InputError("dual_rep: AWB profile not supported");
    RepresentationData out;
    out.base = rep.base;
    out.carrier_dim = rep.carrier_dim;
    out.mu = dualize_action(*rep.mu, -1);
    if (p == RepProfile::MuRho) out.rho = dualize_action(*rep.rho, 1);
    return out;
}

AlgebraData semidirect_ap(const RepresentationData& rep) {
    validate_shape(rep);
    if (profile_of(rep) != RepProfile::MuRho)
        throw InputError("semidirect_ap: profile must be {mu, rho}");
    if (!rep.base.bracket) throw InputError("semidirect_ap: base bracket missing");
    const int n = rep.base.dim;
    const int m = rep.carrier_dim;
    const int total = n + m;
    if (total > 32) throw InputError("semidirect_ap: combined dimension too large");
    AlgebraData out = AlgebraData::zero(total, AlgebraKind::AlmostPoisson, true);
    const auto& mu = *rep.mu;
    const auto& rho = *rep.rho;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                out.product.at(i, j, k) = rep.base.product.at(i, j, k);
                out.bracket->at(i, j, k) = rep.base.bracket->at(i, j, k);
            }
    for (int i = 0; i < n; ++i)
        for (int b = 0; b < m; ++b)
            for (int a = 0; a < m; ++a) {
                // (x + 0).(0 + v) = mu(x)v, (0 + u).(y + 0) = mu(y)u
                out.product.at(i, n + b, n + a) = mu[i].at(a, b);
                out.product.at(n + b, i, n + a) = mu[i].at(a, b);
                // [x + 0, 0 + v] = rho(x)v, [0 + u, y + 0] = -rho(y)u
                out.bracket->at(i, n + b, n + a) = rho[i].at(a, b);
                out.bracket->at(n + b, i, n + a) = -rho[i].at(a, b);
            }
    return out;
}

AlgebraData awb_semidirect(const RepresentationData& rep) {
    validate_shape(rep);
    if (profile_of(rep) != RepProfile::Awb)
        throw InputError("awb_semidirect: profile must be {l, r, L, R}");
    if (!rep.base.bracket) throw InputError("awb_semidirect: base bracket missing");
    const int n = rep.base.dim;
    const int m = rep.carrier_dim;
    AlgebraData out = AlgebraData::zero(n + m, AlgebraKind::AwbLeft, true);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                out.product.at(i, j, k) = rep.base.product.at(i, j, k);
                out.bracket->at(i, j, k) = rep.base.bracket->at(i, j, k);
            }
    for (int i = 0; i < n; ++i)
        for (int b = 0; b < m; ++b)
            for (int a = 0; a < m; ++a) {
                out.product.at(i, n + b, n + a) = (*rep.lmul)[i].at(a, b);
                out.product.at(n + b, i, n + a) = (*rep.rmul)[i].at(a, b);
                out.bracket->at(i, n + b, n + a) = (*rep.lbrk)[i].at(a, b);
                out.bracket->at(n + b, i, n + a) = (*rep.rbrk)[i].at(a, b);
            }
    return out;
}

AlgebraData hemisemi_direct(const RepresentationData& rep) {
    validate_shape(rep);
    RepProfile p = profile_of(rep);
    if (p == RepProfile::Awb) throw InputError("hemisemi_direct: AWB profile not supported");
    const int n = rep.base.dim;
    const int m = rep.carrier_dim;
    const bool with_bracket = p == RepProfile::MuRho;
    if (with_bracket && !rep.base.bracket)
        throw InputError("hemisemi_direct: base bracket missing");
    AlgebraData out = AlgebraData::zero(
        n + m, with_bracket ? AlgebraKind::AwbLeft : AlgebraKind::Assoc, with_bracket);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                out.product.at(i, j, k) = rep.base.product.at(i, j, k);
                if (with_bracket) out.bracket->at(i, j, k) = rep.base.bracket->at(i, j, k);
            }
    for (int i = 0; i < n; ++i)
        for (int b = 0; b < m; ++b)
            for (int a = 0; a < m; ++a) {
                out.product.at(i, n + b, n + a) = (*rep.mu)[i].at(a, b);
                if (with_bracket) out.bracket->at(i, n + b, n + a) = (*rep.rho)[i].at(a, b);
            }
    return out;
}

namespace {

void check_module_action(CheckReport& report, const ModuleAlgebraData& m) {
    const int cd = m.rep.carrier_dim;
    const auto& mu = *m.rep.mu;
    for (int i = 0; i < m.rep.base.dim; ++i)
        for (int a = 0; a < cd; ++a)
            for (int b = 0; b < cd; ++b) {
                Vec ab = bilinear_apply(m.carrier_product, unit_vec(cd, a), unit_vec(cd, b));
                Vec lhs = mu[i].apply(ab);
                Vec rhs = bilinear_apply(m.carrier_product,
                                         mu[i].apply(unit_vec(cd, a)), unit_vec(cd, b));
                report.require_equal("module-action", {i + 1, a + 1, b + 1}, lhs, rhs);
            }
}

void validate_carrier_tensor(const Tensor3& t, int cd, const char* what) {
    if (t.dim_left() != cd || t.dim_right() != cd || t.dim_out() != cd)
        throw InputError(std::string("module: ") + what + " shape mismatch");
}

}  // namespace

CheckReport check_module_comm_assoc(const ModuleAlgebraData& m) {
    validate_shape(m.rep);
    if (profile_of(m.rep) == RepProfile::Awb)
        throw InputError("check_module_comm_assoc: profile must contain mu");
    validate_carrier_tensor(m.carrier_product, m.rep.carrier_dim, "carrier product");
    CheckReport report;
    AlgebraData carrier;
    carrier.dim = m.rep.carrier_dim;
    carrier.product = m.carrier_product;
    carrier.kind = AlgebraKind::CommAssoc;
    report.absorb("carrier:", check_comm_assoc(carrier));
    RepresentationData mu_only = m.rep;
    mu_only.rho.reset();
    report.absorb("", check_assoc_rep(mu_only));
    check_module_action(report, m);
    return report;
}

CheckReport check_module_ap(const ModuleAlgebraData& m) {
    validate_shape(m.rep);
    if (profile_of(m.rep) != RepProfile::MuRho)
        throw InputError("check_module_ap: profile must be {mu, rho}");
    if (!m.carrier_bracket) throw InputError("check_module_ap: carrier bracket missing");
    const int cd = m.rep.carrier_dim;
    validate_carrier_tensor(m.carrier_product, cd, "carrier product");
    validate_carrier_tensor(*m.carrier_bracket, cd, "carrier bracket");
    CheckReport report;
    AlgebraData carrier;
    carrier.dim = cd;
    carrier.product = m.carrier_product;
    carrier.bracket = m.carrier_bracket;
    carrier.kind = AlgebraKind::AlmostPoisson;
    report.absorb("carrier:", check_almost_poisson(carrier));
    report.absorb("", check_ap_rep(m.rep));
    check_module_action(report, m);
    const auto& mu = *m.rep.mu;
    const auto& rho = *m.rep.rho;
    for (int i = 0; i < m.rep.base.dim; ++i)
        for (int a = 0; a < cd; ++a)
            for (int b = 0; b < cd; ++b) {
                Vec ea = unit_vec(cd, a), eb = unit_vec(cd, b);
                Vec ab = bilinear_apply(m.carrier_product, ea, eb);
                Vec lhs1 = rho[i].apply(ab);
                Vec rhs1 = add(bilinear_apply(m.carrier_product, rho[i].apply(ea), eb),
                               bilinear_apply(m.carrier_product, ea, rho[i].apply(eb)));
                report.require_equal("module-rho-product", {i + 1, a + 1, b + 1}, lhs1, rhs1);

                Vec lhs2 = bilinear_apply(*m.carrier_bracket, ea, mu[i].apply(eb));
                Vec rhs2 = sub(mu[i].apply(bilinear_apply(*m.carrier_bracket, ea, eb)),
                               bilinear_apply(m.carrier_product, rho[i].apply(ea), eb));
                report.require_equal("module-bracket-action", {i + 1, a + 1, b + 1}, lhs2,
                                     rhs2);
            }
    return report;
}

}  // namespace awbench
