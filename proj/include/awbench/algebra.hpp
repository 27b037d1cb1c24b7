#pragma once

#include <optional>
#include <string>

#include "awbench/report.hpp"

namespace awbench {

enum class AlgebraKind { Assoc, CommAssoc, AlmostPoisson, AwbLeft, AwbRight };

std::string kind_name(AlgebraKind k);
std::optional<AlgebraKind> kind_from_name(const std::string& name);

/// Finite-dimensional algebra given by structure constants: a product and,
/// for the bracketed kinds, a bracket on the same space.
struct AlgebraData {
    int dim = 0;
    Tensor3 product;
    std::optional<Tensor3> bracket;
    AlgebraKind kind = AlgebraKind::Assoc;

    static AlgebraData zero(int dim, AlgebraKind kind, bool with_bracket);

    friend bool operator==(const AlgebraData& a, const AlgebraData& b) {
        return a.dim == b.dim && a.product == b.product && a.bracket == b.bracket &&
               a.kind == b.kind;
    }
};

enum class AwbVariant { Left, Right };

/// Associativity of the product only.
CheckReport check_assoc(const AlgebraData& a);

/// Commutativity plus associativity of the product.
CheckReport check_comm_assoc(const AlgebraData& a);

/// Commutative associative product, skew bracket, and the Leibniz rule
/// [x, y.z] = [x,y].z + y.[x,z] on all basis triples.
CheckReport check_almost_poisson(const AlgebraData& a);

/// Associative product plus the one-sided biderivation law of the bracket:
/// left variant  {x, y.z} = {x,y}.z + y.{x,z},
/// right variant [x.y, z] = x.[y,z] + [x,z].y.
CheckReport check_awb(const AlgebraData& a, AwbVariant variant);

/// Verifies the left check, then flips the bracket arguments and verifies the
/// right check on the flipped data. A failing left check is propagated as-is.
CheckReport check_opposite_bracket(const AlgebraData& a);

}  // namespace awbench
