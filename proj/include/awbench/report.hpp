#pragma once

#include <string>
#include <vector>

#include "awbench/linalg.hpp"

namespace awbench {

/// One failed identity instance: which identity, at which basis indices
/// (1-based), and the two sides that disagree. For tensor-valued identities
/// lhs/rhs hold the flattened coordinates.
struct Violation {
    std::string identity;
    std::vector<int> indices;
    Vec lhs;
    Vec rhs;

    friend bool operator==(const Violation& a, const Violation& b) {
        return a.identity == b.identity && a.indices == b.indices && a.lhs == b.lhs &&
               a.rhs == b.rhs;
    }
};

/// Verdict plus every violated identity instance. Checkers emit identities in
/// a fixed declaration order and scan basis indices lexicographically, so the
/// front entry is the canonical counterexample and reports are reproducible.
struct CheckReport {
    std::vector<Violation> violations;

    bool passed() const { return violations.empty(); }

    void record(std::string identity, std::vector<int> indices, Vec lhs, Vec rhs) {
        violations.push_back(
            {std::move(identity), std::move(indices), std::move(lhs), std::move(rhs)});
    }

    /// Compares lhs and rhs; records a violation when they differ.
    void require_equal(const std::string& identity, std::vector<int> indices, const Vec& lhs,
                       const Vec& rhs) {
        if (lhs != rhs) record(identity, std::move(indices), lhs, rhs);
    }

    void require_equal(const std::string& identity, std::vector<int> indices, const Matrix& lhs,
                       const Matrix& rhs) {
        if (lhs != rhs) record(identity, std::move(indices), lhs.flat(), rhs.flat());
    }

    /// Appends another report's violations, prefixing their identity names.
    void absorb(const std::string& prefix, const CheckReport& other) {
        for (const auto& v : other.violations)
            violations.push_back({prefix + v.identity, v.indices, v.lhs, v.rhs});
    }
};

}  // namespace awbench
