#pragma once

#include <optional>
#include <vector>

#include "awbench/algebra.hpp"

namespace awbench {

/// Action families over a carrier space, one square matrix per base basis
/// vector. Exactly one profile may be populated:
///   {mu}                          - module of an associative algebra
///   {mu, rho}                     - module of an almost Poisson algebra
///   {lmul, rmul, lbrk, rbrk}      - bimodule-with-bracket of an AWB
struct RepresentationData {
    AlgebraData base;
    int carrier_dim = 0;
    std::optional<std::vector<Matrix>> mu;
    std::optional<std::vector<Matrix>> rho;
    std::optional<std::vector<Matrix>> lmul;
    std::optional<std::vector<Matrix>> rmul;
    std::optional<std::vector<Matrix>> lbrk;
    std::optional<std::vector<Matrix>> rbrk;

    friend bool operator==(const RepresentationData&, const RepresentationData&) = default;
};

enum class RepProfile { Mu, MuRho, Awb };

/// Determines the populated profile; throws InputError on a mixed or empty one.
RepProfile profile_of(const RepresentationData& rep);

/// Validates family sizes and matrix shapes against base.dim and carrier_dim.
void validate_shape(const RepresentationData& rep);

/// Carrier algebra structure on top of an action profile.
struct ModuleAlgebraData {
    RepresentationData rep;
    Tensor3 carrier_product;
    std::optional<Tensor3> carrier_bracket;

    friend bool operator==(const ModuleAlgebraData&, const ModuleAlgebraData&) = default;
};

/// mu = left multiplication, rho = bracket action of the algebra on itself.
RepresentationData adjoint_rep(const AlgebraData& base);
/// mu = left multiplication only.
RepresentationData regular_assoc_rep(const AlgebraData& base);
/// lmul/rmul = two-sided multiplication, lbrk/rbrk = two-sided bracket action.
RepresentationData regular_awb_rep(const AlgebraData& base);
/// Base acting on its own underlying space via the adjoint profile.
ModuleAlgebraData adjoint_module(const AlgebraData& base);

/// mu profile: mu(x.y) = mu(x) mu(y).
/// AWB profile: lmul(x.y) = lmul(x) lmul(y), rmul(x.y) = rmul(y) rmul(x),
/// lmul(x) rmul(y) = rmul(y) lmul(x).
CheckReport check_assoc_rep(const RepresentationData& rep);

/// {mu, rho} profile over an almost Poisson base:
///   rho(x.y)    = mu(y) rho(x) + mu(x) rho(y)
///   mu([x, y])  = rho(x) mu(y) - mu(y) rho(x)
/// in addition to the associative condition on mu.
CheckReport check_ap_rep(const RepresentationData& rep);

/// AWB profile over an awb-left base: bimodule axioms plus
///   lbrk(x) lmul(y) = lmul({x,y}) + lmul(y) lbrk(x)
///   lbrk(x) rmul(y) = rmul(y) lbrk(x) + rmul({x,y})
///   rbrk(x.y)       = rmul(y) rbrk(x) + lmul(x) rbrk(y)
CheckReport check_awb_rep(const RepresentationData& rep);

/// Dual representation on the dual carrier: {mu} -> {-mu*}, and
/// {mu, rho} -> {rho*, -mu*}, with theta*(x) = -theta(x) transposed.
RepresentationData dual_rep(const RepresentationData& rep);

/// Almost Poisson structure on base + carrier:
///   (x+u).(y+v) = x.y + mu(x)v + mu(y)u
///   [x+u, y+v]  = [x,y] + rho(x)v - rho(y)u
AlgebraData semidirect_ap(const RepresentationData& rep);

/// AWB structure on base + carrier:
///   (x+u).(y+v) = x.y + lmul(x)v + rmul(y)u
///   {x+u, y+v}  = {x,y} + lbrk(x)v + rbrk(y)u
AlgebraData awb_semidirect(const RepresentationData& rep);

/// One-sided product on base + carrier: (x+u).(y+v) = x.y + mu(x)v and, when
/// rho is present, {x+u, y+v} = [x,y] + rho(x)v (an AWB in that case).
AlgebraData hemisemi_direct(const RepresentationData& rep);

/// Carrier is a commutative associative algebra, mu is a module action, and
/// mu(x)(a.b) = (mu(x)a).b on basis elements.
CheckReport check_module_comm_assoc(const ModuleAlgebraData& m);

/// Carrier is an almost Poisson algebra, the profile is an almost Poisson
/// module, and the two mixed compatibilities hold:
///   rho(x)(a.b)  = (rho(x)a).b + a.(rho(x)b)
///   [a, mu(x)b]  = -(rho(x)a).b + mu(x)[a, b]
CheckReport check_module_ap(const ModuleAlgebraData& m);

}  // namespace awbench
