#pragma once

#include <map>
#include <string>
#include <variant>

#include "awbench/bialgebra.hpp"
#include "awbench/operators.hpp"

namespace awbench {

/// Named rational parameter values for parametric fixtures. A document's own
/// "params" block supplies defaults; callers may override per load.
using ParamEnv = std::map<std::string, Rational>;

/// Evaluates a scalar expression over +, -, *, /, parentheses, integer
/// literals and parameter names. All evaluation is exact; an unknown name or a
/// division by zero is an input error.
Rational eval_scalar(const std::string& text, const ParamEnv& env);

/// One interchange object. The kind tag determines the payload alternative.
struct Document {
    enum class Kind {
        Algebra,
        Representation,
        ModuleAlgebra,
        MatchedPair,
        Coalgebra,
        Bialgebra,
        Operator,
        Tridendriform
    };

    Kind kind = Kind::Algebra;
    std::variant<AlgebraData, RepresentationData, ModuleAlgebraData, MatchedPairData,
                 CoalgebraData, BialgebraData, OperatorData, TridendriformData>
        payload;

    friend bool operator==(const Document&, const Document&) = default;
};

std::string kind_tag(Document::Kind k);

/// Parses a JSON interchange document. Structure constants are quadruple lists
/// [i, j, k, "value"] with 1-based indices; matrices are flat row-major arrays
/// of scalar strings. For commutative kinds the loader mirrors missing
/// symmetric entries, for brackets of skew kinds it mirrors with a sign flip;
/// contradictory duplicates are rejected. Parameter references are substituted
/// from the document's defaults merged with overrides.
Document parse_document(const std::string& text, const ParamEnv& overrides = {});

/// Canonical JSON serialization: nonzero entries in lexicographic index order,
/// scalars as reduced rational strings. parse(serialize(parse(x))) == parse(x).
std::string serialize_document(const Document& doc);

Document document_of(AlgebraData a);
Document document_of(RepresentationData r);
Document document_of(CoalgebraData c);
Document document_of(TridendriformData t);

}  // namespace awbench
