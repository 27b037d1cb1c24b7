#pragma once

#include <optional>
#include <variant>

#include "awbench/representation.hpp"

namespace awbench {

/// Linear map from the carrier into the base algebra, with its coefficient
/// context. Weighted Rota-Baxter operators carry a ModuleAlgebra context and a
/// mandatory weight; averaging operators carry a plain representation context
/// and no weight.
struct OperatorData {
    Matrix map;  // base_dim x carrier_dim
    std::optional<Rational> weight;
    std::variant<ModuleAlgebraData, RepresentationData> context;

    const RepresentationData& rep() const;
    int carrier_dim() const { return rep().carrier_dim; }
    int base_dim() const { return rep().base.dim; }

    friend bool operator==(const OperatorData&, const OperatorData&) = default;
};

void validate_shape(const OperatorData& op);

/// Which bracket condition an averaging check verifies. The rho form
/// [K(u), K(v)] = K(rho(K(u))v) is the one the graph and Nijenhuis criteria
/// characterize; the mu form replaces rho by mu and exists for comparison.
enum class AveragingBracketForm { Rho, Mu };

/// Four operations on one space: an almost Poisson pair (bracket, dot) and a
/// splitting pair (diamond, triangle). bracket entries must be skew and dot
/// entries symmetric; both are enforced as input invariants.
struct TridendriformData {
    int dim = 0;
    Tensor3 bracket_part;
    Tensor3 diamond;
    Tensor3 dot_part;
    Tensor3 triangle;

    friend bool operator==(const TridendriformData&, const TridendriformData&) = default;
};

/// Weighted relative Rota-Baxter identities over a module context:
///   R(a).R(b)  = R(mu(R(a))b + mu(R(b))a + w a.b)
///   [R(a),R(b)] = R(rho(R(a))b - rho(R(b))a + w [a,b])   (when rho present)
/// Missing weight is an input error. Context validity is a precondition of the
/// callers that consume a verified operator (see dendrify).
CheckReport check_weighted_rrb(const OperatorData& op);

/// Relative averaging identities over a representation context:
///   K(u).K(v)  = K(mu(K(u))v)
///   [K(u),K(v)] = K(rho(K(u))v)   (when rho present; form selects rho vs mu)
CheckReport check_relative_averaging(const OperatorData& op,
                                     AveragingBracketForm form = AveragingBracketForm::Rho);

/// Nijenhuis conditions for a square map on an algebra:
///   N(x).N(y) = N(N(x).y + x.N(y) - N(x.y))  and the bracket analogue.
CheckReport check_nijenhuis_awb(const Matrix& n, const AlgebraData& a);

/// The operator K lifted to base + carrier, (x + u) -> K(u), paired with the
/// hemisemi-direct product it acts on. Its Nijenhuis verdict equals the
/// averaging verdict of op.
std::pair<Matrix, AlgebraData> nijenhuis_from_operator(const OperatorData& op);

/// Closure of the span of {K(e_i) + e_i} inside the hemisemi-direct product,
/// membership decided by exact rank. Verdict equals the averaging verdict.
CheckReport graph_subalgebra_check(const OperatorData& op);

/// Splitting of a verified weighted relative Rota-Baxter operator:
///   {a,b} = w [a,b],  a diamond b = rho(R(a))b,
///   a . b = w a.b,    a triangle b = mu(R(a))b.
/// Precondition (distinguished error): the context passes its module check and
/// the operator passes check_weighted_rrb.
TridendriformData dendrify(const OperatorData& op);

/// The defining identities of the four-operation structure, including the two
/// compatibilities stated through the induced operations
///   x o y = x tri y + y tri x + x.y,   {x,y}_c = x dia y - y dia x + {x,y}.
CheckReport check_tridendriform(const TridendriformData& t);

/// Collapses the four operations to the induced pair (o, {,}_c); passes the
/// almost Poisson check whenever the tridendriform check passes.
/// Precondition failure is a distinguished error.
AlgebraData associated_ap(const TridendriformData& t);

/// f(x .src y) = f(x) .dst f(y) on basis pairs, and the bracket analogue when
/// both sides carry brackets.
CheckReport check_homomorphism(const Matrix& f, const AlgebraData& src, const AlgebraData& dst);

/// AWB structure induced on the carrier by a verified averaging operator:
///   u. v = mu(K(u))v,  {u,v} = rho(K(u))v.
/// Precondition (distinguished error): check_relative_averaging passes with
/// profile {mu, rho}.
AlgebraData induced_awb(const OperatorData& op);

}  // namespace awbench
