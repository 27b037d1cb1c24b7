#pragma once

#include <optional>
#include <vector>

#include "awbench/algebra.hpp"

namespace awbench {

/// Two algebras acting on each other. mu1/rho1 are indexed by the A1 basis and
/// act on A2 (dim2 x dim2 matrices); mu2/rho2 are indexed by the A2 basis and
/// act on A1. The rho families are absent in the purely associative case.
struct MatchedPairData {
    AlgebraData a1;
    AlgebraData a2;
    std::vector<Matrix> mu1;
    std::optional<std::vector<Matrix>> rho1;
    std::vector<Matrix> mu2;
    std::optional<std::vector<Matrix>> rho2;

    friend bool operator==(const MatchedPairData&, const MatchedPairData&) = default;
};

void validate_shape(const MatchedPairData& mp);

/// Matched pair of commutative associative algebras: both factors pass the
/// commutative-associative check, both mu families are module actions, and
///   mu1(x1)(x2.y2) = (mu1(x1)x2).y2 + mu1(mu2(x2)x1)y2   (match-assoc-1)
///   mu2(x2)(x1.y1) = (mu2(x2)x1).y1 + mu2(mu1(x1)x2)y1   (match-assoc-2)
CheckReport check_matched_pair_caa(const MatchedPairData& mp);

/// Matched pair of almost Poisson algebras: the associative matched pair,
/// both (rho, mu) profiles are almost Poisson modules, and the four mixed
/// compatibilities match-poisson-1..4 hold on all basis combinations.
CheckReport check_matched_pair_ap(const MatchedPairData& mp);

/// The algebra on A1 + A2 built from the matched-pair actions; restricted to
/// either block it reproduces the corresponding factor exactly. Carries a
/// bracket exactly when both rho families are present.
AlgebraData bowtie(const MatchedPairData& mp);

}  // namespace awbench
