#pragma once

#include <array>
#include <vector>

#include "awbench/matched_pair.hpp"

namespace awbench {

/// Coproduct and cobracket as rank-3 tensors: Delta.at(k, i, j) is the
/// coefficient of e_i (x) e_j in Delta(e_k), and likewise for delta.
struct CoalgebraData {
    int dim = 0;
    Tensor3 Delta;
    Tensor3 delta;

    static CoalgebraData zero(int dim);

    friend bool operator==(const CoalgebraData&, const CoalgebraData&) = default;
};

/// Almost Poisson algebra paired with a coalgebra on the same space.
struct BialgebraData {
    AlgebraData algebra;
    CoalgebraData coalgebra;

    friend bool operator==(const BialgebraData&, const BialgebraData&) = default;
};

/// Symmetric bilinear form on a total space, given by its Gram matrix.
struct BilinearForm {
    int dim = 0;
    Matrix gram;

    Rational eval(const Vec& x, const Vec& y) const;
};

/// Basis-index split of the total space into two summands (0-based indices).
struct Split {
    std::vector<int> first;
    std::vector<int> second;
};

/// Cocommutativity of Delta, coassociativity, anti-cocommutativity of delta,
/// and the co-Leibniz identity
///   (id (x) Delta) delta - (delta (x) id) Delta - (tau (x) id)(id (x) delta) Delta = 0,
/// each as an exact tensor identity per output basis index.
CheckReport check_coalgebra(const CoalgebraData& c);

/// Algebra on the dual space: product constants c[i][j][k] = Delta.at(k, i, j)
/// and bracket constants from delta likewise. Passes the almost Poisson check
/// exactly when the coalgebra check passes.
AlgebraData dualize_coalgebra(const CoalgebraData& c);

/// Encodes an algebra as the coalgebra its dual would produce (inverse of
/// dualize_coalgebra on structure constants).
CoalgebraData coalgebra_of_algebra(const AlgebraData& a);

/// Delta(x.y) = (L(x) (x) id) Delta(y) + (id (x) L(y)) Delta(x) per basis pair.
CheckReport check_infinitesimal(const BialgebraData& b);

/// Preconditions (distinguished errors, not verdicts): the algebra passes the
/// almost Poisson check and the coalgebra passes the coalgebra check. Then the
/// infinitesimal identity plus the two mixed compatibilities, per basis pair:
///   compat-cobracket: delta(x.y) + (ad(y) (x) id) Delta(x) - (id (x) L(x)) delta(y)
///                     + (ad(x) (x) id) Delta(y) - (id (x) L(y)) delta(x) = 0
///   compat-coproduct: Delta([x,y]) - (L(y) (x) id) delta(x) - (id (x) ad(x)) Delta(y)
///                     + (id (x) L(y)) delta(x) - (ad(x) (x) id) Delta(y) = 0
CheckReport check_dbialgebra(const BialgebraData& b);

/// Dual-action matched pair on (A, A*): the coadjoint action and the negated
/// dual of left multiplication on each side, with A* carrying the dualized
/// coalgebra structure.
MatchedPairData build_dual_maps(const BialgebraData& b);

/// Bowtie of the dual maps on A + A*, together with the canonical pairing form
/// (Gram matrix is the block-antidiagonal identity).
std::pair<AlgebraData, BilinearForm> build_double(const BialgebraData& b);

/// Canonical split of an n + n double into the first and second blocks.
Split standard_split(int base_dim);

/// Manin triple verification: the ambient algebra is almost Poisson, the form
/// is symmetric, nondegenerate and invariant for both operations, the split is
/// complementary (input error otherwise), and each summand is closed under
/// both operations and isotropic.
CheckReport check_manin_triple(const AlgebraData& a, const Split& split,
                               const BilinearForm& form);

struct EquivalenceReport {
    CheckReport dbialgebra;
    CheckReport matched_pair;
    CheckReport manin_triple;

    bool all_pass() const {
        return dbialgebra.passed() && matched_pair.passed() && manin_triple.passed();
    }
    bool agree() const {
        return dbialgebra.passed() == matched_pair.passed() &&
               matched_pair.passed() == manin_triple.passed();
    }
};

/// Runs the three equivalent characterizations on one input. Preconditions as
/// in check_dbialgebra; the three verdicts agree on every valid input.
EquivalenceReport equivalence_report(const BialgebraData& b);

}  // namespace awbench
