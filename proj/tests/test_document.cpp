#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "awbench/document.hpp"
#include "fixtures.hpp"

using namespace awbench;

namespace {

std::string slurp(const std::string& name) {
    std::ifstream in(std::string(AWBENCH_FIXTURE_DIR) + "/" + name);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST_CASE("scalar expressions") {
    CHECK(eval_scalar("3/4", {}) == Rational(3, 4));
    CHECK(eval_scalar("-10/3", {}) == Rational(-10, 3));
    CHECK(eval_scalar("2 + 3*4", {}) == Rational(14));
    CHECK(eval_scalar("(1+2)/(3*5)", {}) == Rational(1, 5));
    CHECK(eval_scalar("-(2-5)", {}) == Rational(3));

    ParamEnv env{{"alpha", Rational(2)}, {"beta", Rational(3)}};
    CHECK(eval_scalar("-alpha/beta", env) == Rational(-2, 3));
    CHECK(eval_scalar("alpha*alpha - beta", env) == Rational(1));

    CHECK_THROWS_AS(eval_scalar("gamma", env), InputError);
    CHECK_THROWS_AS(eval_scalar("1/0", {}), InputError);
    CHECK_THROWS_AS(eval_scalar("1 +", {}), InputError);
    CHECK_THROWS_AS(eval_scalar("2 3", {}), InputError);
}

TEST_CASE("parse the 2D AWB document") {
    Document doc = parse_document(slurp("awb2d.json"));
    REQUIRE(doc.kind == Document::Kind::Algebra);
    const auto& a = std::get<AlgebraData>(doc.payload);
    CHECK(a.dim == 2);
    CHECK(a.kind == AlgebraKind::AwbLeft);
    CHECK(a == fixtures::awb2d());
}

TEST_CASE("parametric document instantiation") {
    ParamEnv overrides{{"alpha", Rational(2)},
                       {"beta", Rational(3)},
                       {"gamma", Rational(5)},
                       {"nu", Rational(7)}};
    Document doc = parse_document(slurp("awb2d-parametric.json"), overrides);
    const auto& a = std::get<AlgebraData>(doc.payload);
    // {e1,e1} = gamma e1 - (alpha gamma / beta) e2 = 5 e1 - (10/3) e2.
    CHECK(a.bracket->at(0, 0, 0) == Rational(5));
    CHECK(a.bracket->at(0, 0, 1) == Rational(-10, 3));
    CHECK(a == fixtures::awb2d_parametric(Rational(2), Rational(3), Rational(5), Rational(7)));

    // Defaults from the document's own params block.
    Document defaults = parse_document(slurp("awb2d-parametric.json"));
    CHECK(std::get<AlgebraData>(defaults.payload) ==
          fixtures::awb2d_parametric(Rational(1), Rational(1), Rational(1), Rational(1)));
}

TEST_CASE("empty entry lists give the zero algebra") {
    Document doc = parse_document(R"({
        "kind": "algebra", "dim": 3, "algebra_kind": "comm-assoc", "product": []
    })");
    const auto& a = std::get<AlgebraData>(doc.payload);
    CHECK(a.dim == 3);
    CHECK(a.product.is_zero());
}

TEST_CASE("loader symmetrization conventions") {
    // One-sided product entry of a commutative kind gains its mirror.
    Document doc = parse_document(R"({
        "kind": "algebra", "dim": 2, "algebra_kind": "almost-poisson",
        "product": [[1, 2, 2, "1"]],
        "bracket": [[1, 2, 1, "2"]]
    })");
    const auto& a = std::get<AlgebraData>(doc.payload);
    CHECK(a.product.at(0, 1, 1) == Rational(1));
    CHECK(a.product.at(1, 0, 1) == Rational(1));
    CHECK(a.bracket->at(0, 1, 0) == Rational(2));
    CHECK(a.bracket->at(1, 0, 0) == Rational(-2));

    // Consistent mirrors are accepted.
    CHECK_NOTHROW(parse_document(R"({
        "kind": "algebra", "dim": 2, "algebra_kind": "comm-assoc",
        "product": [[1, 2, 1, "1"], [2, 1, 1, "1"]]
    })"));

    // Contradictory mirror entries are rejected.
    CHECK_THROWS_AS(parse_document(R"({
        "kind": "algebra", "dim": 2, "algebra_kind": "comm-assoc",
        "product": [[1, 2, 1, "1"], [2, 1, 1, "2"]]
    })"),
                    InputError);

    // Duplicate index triples with different values are rejected.
    CHECK_THROWS_AS(parse_document(R"({
        "kind": "algebra", "dim": 2, "algebra_kind": "assoc",
        "product": [[1, 2, 1, "1"], [1, 2, 1, "2"]]
    })"),
                    InputError);

    // Nonzero diagonal bracket entries contradict skewness.
    CHECK_THROWS_AS(parse_document(R"({
        "kind": "algebra", "dim": 2, "algebra_kind": "almost-poisson",
        "product": [],
        "bracket": [[1, 1, 2, "1"]]
    })"),
                    InputError);

    // AWB kinds take entries verbatim, no mirroring.
    Document awb = parse_document(R"({
        "kind": "algebra", "dim": 2, "algebra_kind": "awb-left",
        "product": [[1, 2, 2, "1"]],
        "bracket": [[1, 2, 2, "1"]]
    })");
    const auto& b = std::get<AlgebraData>(awb.payload);
    CHECK(b.product.at(1, 0, 1) == Rational(0));
    CHECK(b.bracket->at(1, 0, 1) == Rational(0));
}

TEST_CASE("document validation errors") {
    CHECK_THROWS_AS(parse_document("not json"), InputError);
    CHECK_THROWS_AS(parse_document(R"({"kind": "mystery"})"), InputError);
    CHECK_THROWS_AS(parse_document(R"({"dim": 2})"), InputError);
    CHECK_THROWS_AS(parse_document(R"({
        "kind": "algebra", "dim": 2, "algebra_kind": "weird", "product": []
    })"),
                    InputError);
    // Missing bracket for a bracketed kind.
    CHECK_THROWS_AS(parse_document(R"({
        "kind": "algebra", "dim": 2, "algebra_kind": "almost-poisson", "product": []
    })"),
                    InputError);
    // Out-of-range index.
    CHECK_THROWS_AS(parse_document(R"({
        "kind": "algebra", "dim": 2, "algebra_kind": "assoc", "product": [[3, 1, 1, "1"]]
    })"),
                    InputError);
    // Dimension beyond the supported desk scale.
    CHECK_THROWS_AS(parse_document(R"({
        "kind": "algebra", "dim": 40, "algebra_kind": "assoc", "product": []
    })"),
                    InputError);
    // Missing parameter value.
    CHECK_THROWS_AS(parse_document(R"({
        "kind": "algebra", "dim": 1, "algebra_kind": "assoc", "product": [[1,1,1,"t"]]
    })"),
                    InputError);
    // Weight on an averaging context / missing weight on a Rota-Baxter one.
    CHECK_THROWS_AS(parse_document(R"({
        "kind": "operator", "map": ["1"], "weight": "1",
        "context": {"kind": "representation",
                    "base": {"dim": 1, "algebra_kind": "assoc", "product": []},
                    "carrier_dim": 1, "mu": [["0"]]}
    })"),
                    InputError);
    CHECK_THROWS_AS(parse_document(R"({
        "kind": "operator", "map": ["1"],
        "context": {"kind": "module-algebra",
                    "base": {"dim": 1, "algebra_kind": "assoc", "product": []},
                    "carrier_dim": 1, "mu": [["0"]], "carrier_product": []}
    })"),
                    InputError);
}

TEST_CASE("operator and representation documents load") {
    Document avg = parse_document(slurp("avg-3d.json"));
    REQUIRE(avg.kind == Document::Kind::Operator);
    const auto& op = std::get<OperatorData>(avg.payload);
    CHECK_FALSE(op.weight.has_value());
    CHECK(op.map.at(0, 0) == Rational(1));
    const auto& rep = std::get<RepresentationData>(op.context);
    CHECK(rep.base == fixtures::avg3d_base());
    CHECK(rep == adjoint_rep(fixtures::avg3d_base()));

    Document rrb = parse_document(slurp("rrb-id-3d.json"));
    const auto& rop = std::get<OperatorData>(rrb.payload);
    CHECK(rop.weight == Rational(-1));
    const auto& mod = std::get<ModuleAlgebraData>(rop.context);
    CHECK(mod == adjoint_module(fixtures::ap3d()));

    Document reg = parse_document(slurp("rep-awb2d-regular.json"));
    const auto& reg_rep = std::get<RepresentationData>(reg.payload);
    CHECK(reg_rep == regular_awb_rep(fixtures::awb2d()));
}

TEST_CASE("round-trip through serialization is the identity") {
    namespace fs = std::filesystem;
    int count = 0;
    for (const auto& entry : fs::directory_iterator(AWBENCH_FIXTURE_DIR)) {
        if (entry.path().extension() != ".json") continue;
        ++count;
        std::ifstream in(entry.path());
        std::ostringstream buf;
        buf << in.rdbuf();
        Document first = parse_document(buf.str());
        Document second = parse_document(serialize_document(first));
        CHECK(first == second);
    }
    CHECK(count >= 10);
}

TEST_CASE("serialization of derived structures") {
    Document doc = document_of(fixtures::awb2d());
    std::string text = serialize_document(doc);
    Document back = parse_document(text);
    CHECK(back == doc);

    Document coa = document_of(coalgebra_of_algebra(fixtures::dual_numbers2d()));
    CHECK(parse_document(serialize_document(coa)) == coa);
}

TEST_CASE("constructed fractional constants survive the file format losslessly") {
    AlgebraData base = fixtures::ap3d();
    base.product = base.product.scaled(Rational(2, 3));
    base.bracket = base.bracket->scaled(Rational(-5, 7));
    AlgebraData sd = semidirect_ap(adjoint_rep(base));
    Document doc = document_of(sd);
    Document back = parse_document(serialize_document(doc));
    CHECK(back == doc);
    CHECK(std::get<AlgebraData>(back.payload).product.at(0, 0, 0) == Rational(2, 3));
}
