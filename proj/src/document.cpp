#include "awbench/document.hpp"

#include <cctype>
#include <json.hpp>

namespace awbench {

namespace {

using json = nlohmann::ordered_json;

constexpr int kMaxDim = 16;

// ---- scalar expressions ----------------------------------------------------

struct ExprParser {
    std::string_view text;
    size_t pos = 0;
    const ParamEnv& env;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    Rational parse_expr() {
        Rational acc = parse_term();
        for (;;) {
            if (eat('+'))
                acc += parse_term();
            else if (eat('-'))
                acc -= parse_term();
            else
                return acc;
        }
    }

    Rational parse_term() {
        Rational acc = parse_factor();
        for (;;) {
            if (eat('*'))
                acc *= parse_factor();
            else if (eat('/')) {
                Rational d = parse_factor();
                if (d.is_zero())
                    throw InputError("scalar expression: division by zero in '" +
                                     std::string(text) + "'");
                acc /= d;
            } else
                return acc;
        }
    }

    Rational parse_factor() {
        skip_ws();
        if (eat('-')) return -parse_factor();
        if (eat('+')) return parse_factor();
        if (eat('(')) {
            Rational r = parse_expr();
            if (!eat(')'))
                throw InputError("scalar expression: missing ')' in '" + std::string(text) + "'");
            return r;
        }
        if (pos >= text.size())
            throw InputError("scalar expression: unexpected end in '" + std::string(text) + "'");
        char c = text[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                ++pos;
            return Rational::parse(text.substr(start, pos - start));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos;
            while (pos < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
                ++pos;
            std::string name(text.substr(start, pos - start));
            auto it = env.find(name);
            if (it == env.end())
                throw InputError("scalar expression: missing parameter value for '" + name + "'");
            return it->second;
        }
        throw InputError("scalar expression: unexpected character '" + std::string(1, c) +
                         "' in '" + std::string(text) + "'");
    }
};

}  // namespace

Rational eval_scalar(const std::string& text, const ParamEnv& env) {
    ExprParser p{text, 0, env};
    Rational r = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size())
        throw InputError("scalar expression: trailing input in '" + text + "'");
    return r;
}

namespace {

// ---- field access helpers ----------------------------------------------------

const json& field(const json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end()) throw InputError(std::string("document: missing field '") + name + "'");
    return *it;
}

int int_field(const json& j, const char* name) {
    const json& f = field(j, name);
    if (!f.is_number_integer())
        throw InputError(std::string("document: field '") + name + "' must be an integer");
    return f.get<int>();
}

Rational scalar_field(const json& v, const ParamEnv& env, const char* where) {
    if (v.is_number_integer()) return Rational(v.get<long long>());
    if (v.is_string()) return eval_scalar(v.get<std::string>(), env);
    throw InputError(std::string("document: ") + where +
                     " must be an integer or a scalar string");
}

enum class Mirror { None, Symmetric, Skew };

// Entry lists are quadruples [i, j, k, value] with 1-based indices. Mirror
// entries of symmetric/skew operations are filled in when absent and checked
// for contradiction when present.
Tensor3 load_entries(const json& list, int d0, int d1, int d2, Mirror mirror,
                     const ParamEnv& env, const char* what) {
    if (!list.is_array())
        throw InputError(std::string("document: '") + what + "' must be an entry list");
    Tensor3 t(d0, d1, d2);
    std::vector<bool> given(static_cast<size_t>(d0) * d1 * d2, false);
    auto slot = [&](int i, int j, int k) -> size_t {
        return (static_cast<size_t>(i) * d1 + j) * d2 + k;
    };
    auto put = [&](int i, int j, int k, const Rational& v) {
        if (given[slot(i, j, k)]) {
            if (t.at(i, j, k) != v)
                throw InputError(std::string("document: contradictory duplicate entry in '") +
                                 what + "' at (" + std::to_string(i + 1) + "," +
                                 std::to_string(j + 1) + "," + std::to_string(k + 1) + ")");
            return;
        }
        given[slot(i, j, k)] = true;
        t.at(i, j, k) = v;
    };
    for (const auto& q : list) {
        if (!q.is_array() || q.size() != 4)
            throw InputError(std::string("document: entries of '") + what +
                             "' must be [i, j, k, value] quadruples");
        int i = q[0].get<int>(), j = q[1].get<int>(), k = q[2].get<int>();
        if (i < 1 || i > d0 || j < 1 || j > d1 || k < 1 || k > d2)
            throw InputError(std::string("document: index out of range in '") + what + "'");
        Rational v = scalar_field(q[3], env, what);
        put(i - 1, j - 1, k - 1, v);
    }
    if (mirror != Mirror::None) {
        for (int i = 0; i < d0; ++i)
            for (int j = 0; j < d1; ++j)
                for (int k = 0; k < d2; ++k) {
                    if (!given[slot(i, j, k)]) continue;
                    Rational mirrored =
                        mirror == Mirror::Symmetric ? t.at(i, j, k) : -t.at(i, j, k);
                    if (mirror == Mirror::Skew && i == j && !t.at(i, j, k).is_zero())
                        throw InputError(std::string("document: '") + what +
                                         "' must vanish on equal arguments");
                    if (given[slot(j, i, k)]) {
                        if (t.at(j, i, k) != mirrored)
                            throw InputError(std::string("document: contradictory mirror entry in '") +
                                             what + "' at (" + std::to_string(j + 1) + "," +
                                             std::to_string(i + 1) + "," + std::to_string(k + 1) +
                                             ")");
                    } else {
                        t.at(j, i, k) = mirrored;
                    }
                }
    }
    return t;
}

Matrix load_matrix(const json& v, int rows, int cols, const ParamEnv& env, const char* what) {
    if (!v.is_array() || static_cast<int>(v.size()) != rows * cols)
        throw InputError(std::string("document: '") + what + "' must be a flat row-major array of " +
                         std::to_string(rows * cols) + " scalars");
    Matrix m(rows, cols);
    int idx = 0;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m.at(r, c) = scalar_field(v[idx++], env, what);
    return m;
}

std::vector<Matrix> load_family(const json& j, const char* name, int count, int dim,
                                const ParamEnv& env) {
    const json& f = field(j, name);
    if (!f.is_array() || static_cast<int>(f.size()) != count)
        throw InputError(std::string("document: '") + name + "' must list one matrix per basis vector");
    std::vector<Matrix> fam;
    fam.reserve(static_cast<size_t>(count));
    for (const auto& m : f) fam.push_back(load_matrix(m, dim, dim, env, name));
    return fam;
}

int checked_dim(const json& j) {
    int dim = int_field(j, "dim");
    if (dim < 0 || dim > kMaxDim)
        throw InputError("document: dim must be between 0 and " + std::to_string(kMaxDim));
    return dim;
}

AlgebraData parse_algebra_payload(const json& j, const ParamEnv& env) {
    AlgebraData a;
    a.dim = checked_dim(j);
    std::string kind_str = field(j, "algebra_kind").get<std::string>();
    auto kind = kind_from_name(kind_str);
    if (!kind) throw InputError("document: unknown algebra_kind '" + kind_str + "'");
    a.kind = *kind;
    const bool symmetric_product =
        a.kind == AlgebraKind::CommAssoc || a.kind == AlgebraKind::AlmostPoisson;
    a.product = load_entries(field(j, "product"), a.dim, a.dim, a.dim,
                             symmetric_product ? Mirror::Symmetric : Mirror::None, env,
                             "product");
    const bool bracket_required =
        a.kind == AlgebraKind::AlmostPoisson || a.kind == AlgebraKind::AwbLeft ||
        a.kind == AlgebraKind::AwbRight;
    if (j.contains("bracket")) {
        Mirror m = a.kind == AlgebraKind::AlmostPoisson ? Mirror::Skew : Mirror::None;
        a.bracket = load_entries(j["bracket"], a.dim, a.dim, a.dim, m, env, "bracket");
    } else if (bracket_required) {
        throw InputError("document: algebra_kind '" + kind_str + "' requires a bracket");
    }
    return a;
}

CoalgebraData parse_coalgebra_payload(const json& j, const ParamEnv& env) {
    CoalgebraData c;
    c.dim = checked_dim(j);
    c.Delta = load_entries(field(j, "coproduct"), c.dim, c.dim, c.dim, Mirror::None, env,
                           "coproduct");
    c.delta = load_entries(field(j, "cobracket"), c.dim, c.dim, c.dim, Mirror::None, env,
                           "cobracket");
    return c;
}

RepresentationData parse_representation_payload(const json& j, const ParamEnv& env) {
    RepresentationData rep;
    rep.base = parse_algebra_payload(field(j, "base"), env);
    rep.carrier_dim = int_field(j, "carrier_dim");
    if (rep.carrier_dim < 0 || rep.carrier_dim > kMaxDim)
        throw InputError("document: carrier_dim out of range");
    const int n = rep.base.dim, cd = rep.carrier_dim;
    if (j.contains("mu")) rep.mu = load_family(j, "mu", n, cd, env);
    if (j.contains("rho")) rep.rho = load_family(j, "rho", n, cd, env);
    if (j.contains("l")) rep.lmul = load_family(j, "l", n, cd, env);
    if (j.contains("r")) rep.rmul = load_family(j, "r", n, cd, env);
    if (j.contains("L")) rep.lbrk = load_family(j, "L", n, cd, env);
    if (j.contains("R")) rep.rbrk = load_family(j, "R", n, cd, env);
    profile_of(rep);  // rejects mixed or empty profiles
    validate_shape(rep);
    return rep;
}

ModuleAlgebraData parse_module_payload(const json& j, const ParamEnv& env) {
    ModuleAlgebraData m;
    m.rep = parse_representation_payload(j, env);
    const int cd = m.rep.carrier_dim;
    m.carrier_product = load_entries(field(j, "carrier_product"), cd, cd, cd,
                                     Mirror::Symmetric, env, "carrier_product");
    if (j.contains("carrier_bracket"))
        m.carrier_bracket =
            load_entries(j["carrier_bracket"], cd, cd, cd, Mirror::Skew, env, "carrier_bracket");
    if (m.rep.rho && !m.carrier_bracket)
        throw InputError("document: module with rho requires a carrier_bracket");
    return m;
}

MatchedPairData parse_matched_pair_payload(const json& j, const ParamEnv& env) {
    MatchedPairData mp;
    mp.a1 = parse_algebra_payload(field(j, "a1"), env);
    mp.a2 = parse_algebra_payload(field(j, "a2"), env);
    mp.mu1 = load_family(j, "mu1", mp.a1.dim, mp.a2.dim, env);
    mp.mu2 = load_family(j, "mu2", mp.a2.dim, mp.a1.dim, env);
    if (j.contains("rho1")) mp.rho1 = load_family(j, "rho1", mp.a1.dim, mp.a2.dim, env);
    if (j.contains("rho2")) mp.rho2 = load_family(j, "rho2", mp.a2.dim, mp.a1.dim, env);
    validate_shape(mp);
    return mp;
}

OperatorData parse_operator_payload(const json& j, const ParamEnv& env) {
    OperatorData op;
    const json& ctx = field(j, "context");
    std::string ctx_kind = field(ctx, "kind").get<std::string>();
    if (ctx_kind == "module-algebra")
        op.context = parse_module_payload(ctx, env);
    else if (ctx_kind == "representation")
        op.context = parse_representation_payload(ctx, env);
    else
        throw InputError("document: operator context must be a representation or module-algebra");
    if (j.contains("weight")) op.weight = scalar_field(j["weight"], env, "weight");
    const RepresentationData& r = op.rep();
    op.map = load_matrix(field(j, "map"), r.base.dim, r.carrier_dim, env, "map");
    if (std::holds_alternative<ModuleAlgebraData>(op.context) && !op.weight)
        throw InputError("document: Rota-Baxter operator requires a weight");
    if (std::holds_alternative<RepresentationData>(op.context) && op.weight)
        throw InputError("document: averaging operator must not carry a weight");
    return op;
}

TridendriformData parse_tridendriform_payload(const json& j, const ParamEnv& env) {
    TridendriformData t;
    t.dim = checked_dim(j);
    t.bracket_part =
        load_entries(field(j, "bracket"), t.dim, t.dim, t.dim, Mirror::Skew, env, "bracket");
    t.diamond =
        load_entries(field(j, "diamond"), t.dim, t.dim, t.dim, Mirror::None, env, "diamond");
    t.dot_part =
        load_entries(field(j, "dot"), t.dim, t.dim, t.dim, Mirror::Symmetric, env, "dot");
    t.triangle =
        load_entries(field(j, "triangle"), t.dim, t.dim, t.dim, Mirror::None, env, "triangle");
    return t;
}

// ---- serialization ----------------------------------------------------------

json entries_json(const Tensor3& t) {
    json list = json::array();
    for (int i = 0; i < t.dim_left(); ++i)
        for (int j = 0; j < t.dim_right(); ++j)
            for (int k = 0; k < t.dim_out(); ++k)
                if (!t.at(i, j, k).is_zero())
                    list.push_back(json::array({i + 1, j + 1, k + 1, t.at(i, j, k).str()}));
    return list;
}

json matrix_json(const Matrix& m) {
    json list = json::array();
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) list.push_back(m.at(r, c).str());
    return list;
}

json family_json(const std::vector<Matrix>& fam) {
    json list = json::array();
    for (const auto& m : fam) list.push_back(matrix_json(m));
    return list;
}

json algebra_json(const AlgebraData& a) {
    json j;
    j["dim"] = a.dim;
    j["algebra_kind"] = kind_name(a.kind);
    j["product"] = entries_json(a.product);
    if (a.bracket) j["bracket"] = entries_json(*a.bracket);
    return j;
}

json coalgebra_json(const CoalgebraData& c) {
    json j;
    j["dim"] = c.dim;
    j["coproduct"] = entries_json(c.Delta);
    j["cobracket"] = entries_json(c.delta);
    return j;
}

json representation_json(const RepresentationData& r) {
    json j;
    j["base"] = algebra_json(r.base);
    j["carrier_dim"] = r.carrier_dim;
    if (r.mu) j["mu"] = family_json(*r.mu);
    if (r.rho) j["rho"] = family_json(*r.rho);
    if (r.lmul) j["l"] = family_json(*r.lmul);
    if (r.rmul) j["r"] = family_json(*r.rmul);
    if (r.lbrk) j["L"] = family_json(*r.lbrk);
    if (r.rbrk) j["R"] = family_json(*r.rbrk);
    return j;
}

json module_json(const ModuleAlgebraData& m) {
    json j = representation_json(m.rep);
    j["carrier_product"] = entries_json(m.carrier_product);
    if (m.carrier_bracket) j["carrier_bracket"] = entries_json(*m.carrier_bracket);
    return j;
}

json payload_json(const Document& doc) {
    switch (doc.kind) {
        case Document::Kind::Algebra:
            return algebra_json(std::get<AlgebraData>(doc.payload));
        case Document::Kind::Representation:
            return representation_json(std::get<RepresentationData>(doc.payload));
        case Document::Kind::ModuleAlgebra:
            return module_json(std::get<ModuleAlgebraData>(doc.payload));
        case Document::Kind::MatchedPair: {
            const auto& mp = std::get<MatchedPairData>(doc.payload);
            json j;
            j["a1"] = algebra_json(mp.a1);
            j["a2"] = algebra_json(mp.a2);
            j["mu1"] = family_json(mp.mu1);
            if (mp.rho1) j["rho1"] = family_json(*mp.rho1);
            j["mu2"] = family_json(mp.mu2);
            if (mp.rho2) j["rho2"] = family_json(*mp.rho2);
            return j;
        }
        case Document::Kind::Coalgebra:
            return coalgebra_json(std::get<CoalgebraData>(doc.payload));
        case Document::Kind::Bialgebra: {
            const auto& b = std::get<BialgebraData>(doc.payload);
            json j;
            j["algebra"] = algebra_json(b.algebra);
            j["coalgebra"] = coalgebra_json(b.coalgebra);
            return j;
        }
        case Document::Kind::Operator: {
            const auto& op = std::get<OperatorData>(doc.payload);
            json j;
            if (op.weight) j["weight"] = op.weight->str();
            j["map"] = matrix_json(op.map);
            json ctx;
            if (const auto* m = std::get_if<ModuleAlgebraData>(&op.context)) {
                ctx = module_json(*m);
                ctx["kind"] = "module-algebra";
            } else {
                ctx = representation_json(std::get<RepresentationData>(op.context));
                ctx["kind"] = "representation";
            }
            j["context"] = ctx;
            return j;
        }
        case Document::Kind::Tridendriform: {
            const auto& t = std::get<TridendriformData>(doc.payload);
            json j;
            j["dim"] = t.dim;
            j["bracket"] = entries_json(t.bracket_part);
            j["diamond"] = entries_json(t.diamond);
            j["dot"] = entries_json(t.dot_part);
            j["triangle"] = entries_json(t.triangle);
            return j;
        }
    }
    throw InputError("document: unknown kind");
}

}  // namespace

std::string kind_tag(Document::Kind k) {
    switch (k) {
        case Document::Kind::Algebra: return "algebra";
        case Document::Kind::Representation: return "representation";
        case Document::Kind::ModuleAlgebra: return "module-algebra";
        case Document::Kind::MatchedPair: return "matched-pair";
        case Document::Kind::Coalgebra: return "coalgebra";
        case Document::Kind::Bialgebra: return "bialgebra";
        case Document::Kind::Operator: return "operator";
        case Document::Kind::Tridendriform: return "tridendriform";
    }
    return "algebra";
}

Document parse_document(const std::string& text, const ParamEnv& overrides) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw InputError(std::string("document: malformed JSON: ") + e.what());
    }
    if (!j.is_object()) throw InputError("document: top level must be an object");

    ParamEnv env;
    if (j.contains("params")) {
        const json& params = j["params"];
        if (!params.is_object()) throw InputError("document: 'params' must be an object");
        for (auto it = params.begin(); it != params.end(); ++it)
            env[it.key()] = scalar_field(it.value(), ParamEnv{}, "params");
    }
    for (const auto& [name, value] : overrides) env[name] = value;

    std::string kind = field(j, "kind").get<std::string>();
    Document doc;
    if (kind == "algebra") {
        doc.kind = Document::Kind::Algebra;
        doc.payload = parse_algebra_payload(j, env);
    } else if (kind == "representation") {
        doc.kind = Document::Kind::Representation;
        doc.payload = parse_representation_payload(j, env);
    } else if (kind == "module-algebra") {
        doc.kind = Document::Kind::ModuleAlgebra;
        doc.payload = parse_module_payload(j, env);
    } else if (kind == "matched-pair") {
        doc.kind = Document::Kind::MatchedPair;
        doc.payload = parse_matched_pair_payload(j, env);
    } else if (kind == "coalgebra") {
        doc.kind = Document::Kind::Coalgebra;
        doc.payload = parse_coalgebra_payload(j, env);
    } else if (kind == "bialgebra") {
        doc.kind = Document::Kind::Bialgebra;
        BialgebraData b;
        b.algebra = parse_algebra_payload(field(j, "algebra"), env);
        b.coalgebra = parse_coalgebra_payload(field(j, "coalgebra"), env);
        if (b.algebra.dim != b.coalgebra.dim)
            throw InputError("document: bialgebra algebra/coalgebra dimension mismatch");
        doc.payload = std::move(b);
    } else if (kind == "operator") {
        doc.kind = Document::Kind::Operator;
        doc.payload = parse_operator_payload(j, env);
    } else if (kind == "tridendriform") {
        doc.kind = Document::Kind::Tridendriform;
        doc.payload = parse_tridendriform_payload(j, env);
    } else {
        throw InputError("document: unknown kind '" + kind + "'");
    }
    return doc;
}

std::string serialize_document(const Document& doc) {
    json j;
    j["kind"] = kind_tag(doc.kind);
    json payload = payload_json(doc);
    for (auto it = payload.begin(); it != payload.end(); ++it) j[it.key()] = it.value();
    return j.dump(2) + "\n";
}

Document document_of(AlgebraData a) {
    Document d;
    d.kind = Document::Kind::Algebra;
    d.payload = std::move(a);
    return d;
}

Document document_of(RepresentationData r) {
    Document d;
    d.kind = Document::Kind::Representation;
    d.payload = std::move(r);
    return d;
}

Document document_of(CoalgebraData c) {
    Document d;
    d.kind = Document::Kind::Coalgebra;
    d.payload = std::move(c);
    return d;
}

Document document_of(TridendriformData t) {
    Document d;
    d.kind = Document::Kind::Tridendriform;
    d.payload = std::move(t);
    return d;
}

}  // namespace awbench
