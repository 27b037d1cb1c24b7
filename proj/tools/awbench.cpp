// Command-line front end: check interchange documents, derive constructions,
// and run the three-way bialgebra equivalence. Exit codes: 0 all checks pass,
// 1 a verified identity fails, 2 input or precondition error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "awbench/document.hpp"

using namespace awbench;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

ParamEnv parse_params(const std::vector<std::string>& raw) {
    ParamEnv env;
    for (const auto& item : raw) {
        auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            throw InputError("parameter must be name=value: '" + item + "'");
        env[item.substr(0, eq)] = eval_scalar(item.substr(eq + 1), {});
    }
    return env;
}

std::string vec_str(const Vec& v) {
    std::string out = "[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += v[i].str();
    }
    return out + "]";
}

nlohmann::ordered_json violation_json(const Violation& v) {
    nlohmann::ordered_json j;
    j["identity"] = v.identity;
    j["indices"] = v.indices;
    nlohmann::ordered_json lhs = nlohmann::ordered_json::array();
    for (const auto& x : v.lhs) lhs.push_back(x.str());
    nlohmann::ordered_json rhs = nlohmann::ordered_json::array();
    for (const auto& x : v.rhs) rhs.push_back(x.str());
    j["lhs"] = lhs;
    j["rhs"] = rhs;
    return j;
}

nlohmann::ordered_json report_json(const CheckReport& rep) {
    nlohmann::ordered_json j;
    j["verdict"] = rep.passed() ? "pass" : "fail";
    nlohmann::ordered_json vs = nlohmann::ordered_json::array();
    for (const auto& v : rep.violations) vs.push_back(violation_json(v));
    j["violations"] = vs;
    return j;
}

void print_report_text(const CheckReport& rep, std::ostream& os) {
    if (rep.passed()) {
        os << "pass\n";
        return;
    }
    os << "fail: " << rep.violations.size() << " violated identity instance(s)\n";
    size_t shown = 0;
    for (const auto& v : rep.violations) {
        if (shown == 10) {
            os << "  ... " << rep.violations.size() - shown << " more\n";
            break;
        }
        os << "  " << v.identity << " at (";
        for (size_t i = 0; i < v.indices.size(); ++i) {
            if (i) os << ",";
            os << v.indices[i];
        }
        os << "): lhs = " << vec_str(v.lhs) << ", rhs = " << vec_str(v.rhs) << "\n";
        ++shown;
    }
}

CheckReport run_check(const Document& doc, AveragingBracketForm form) {
    switch (doc.kind) {
        case Document::Kind::Algebra: {
            const auto& a = std::get<AlgebraData>(doc.payload);
            switch (a.kind) {
                case AlgebraKind::Assoc: return check_assoc(a);
                case AlgebraKind::CommAssoc: return check_comm_assoc(a);
                case AlgebraKind::AlmostPoisson: return check_almost_poisson(a);
                case AlgebraKind::AwbLeft: return check_awb(a, AwbVariant::Left);
                case AlgebraKind::AwbRight: return check_awb(a, AwbVariant::Right);
            }
            throw InputError("unknown algebra kind");
        }
        case Document::Kind::Representation: {
            const auto& r = std::get<RepresentationData>(doc.payload);
            switch (profile_of(r)) {
                case RepProfile::Mu: return check_assoc_rep(r);
                case RepProfile::MuRho: return check_ap_rep(r);
                case RepProfile::Awb: return check_awb_rep(r);
            }
            throw InputError("unknown representation profile");
        }
        case Document::Kind::ModuleAlgebra: {
            const auto& m = std::get<ModuleAlgebraData>(doc.payload);
            return m.rep.rho ? check_module_ap(m) : check_module_comm_assoc(m);
        }
        case Document::Kind::MatchedPair: {
            const auto& mp = std::get<MatchedPairData>(doc.payload);
            return mp.rho1 ? check_matched_pair_ap(mp) : check_matched_pair_caa(mp);
        }
        case Document::Kind::Coalgebra:
            return check_coalgebra(std::get<CoalgebraData>(doc.payload));
        case Document::Kind::Bialgebra:
            return check_dbialgebra(std::get<BialgebraData>(doc.payload));
        case Document::Kind::Operator: {
            const auto& op = std::get<OperatorData>(doc.payload);
            if (std::holds_alternative<ModuleAlgebraData>(op.context)) {
                const auto& mod = std::get<ModuleAlgebraData>(op.context);
                CheckReport context_check =
                    mod.rep.rho ? check_module_ap(mod) : check_module_comm_assoc(mod);
                if (!context_check.passed())
                    throw PreconditionError("operator context fails its module check at " +
                                            context_check.violations.front().identity);
                return check_weighted_rrb(op);
            }
            return check_relative_averaging(op, form);
        }
        case Document::Kind::Tridendriform:
            return check_tridendriform(std::get<TridendriformData>(doc.payload));
    }
    throw InputError("unknown document kind");
}

Document run_derive(const std::string& construction, const Document& doc) {
    if (construction == "semidirect") {
        const auto& r = std::get<RepresentationData>(doc.payload);
        return document_of(profile_of(r) == RepProfile::Awb ? awb_semidirect(r)
                                                            : semidirect_ap(r));
    }
    if (construction == "hemisemi")
        return document_of(hemisemi_direct(std::get<RepresentationData>(doc.payload)));
    if (construction == "bowtie")
        return document_of(bowtie(std::get<MatchedPairData>(doc.payload)));
    if (construction == "double") {
        auto [algebra, form] = build_double(std::get<BialgebraData>(doc.payload));
        return document_of(std::move(algebra));
    }
    if (construction == "dendrify")
        return document_of(dendrify(std::get<OperatorData>(doc.payload)));
    if (construction == "awb")
        return document_of(induced_awb(std::get<OperatorData>(doc.payload)));
    if (construction == "dual-rep")
        return document_of(dual_rep(std::get<RepresentationData>(doc.payload)));
    if (construction == "dual-coalgebra")
        return document_of(dualize_coalgebra(std::get<CoalgebraData>(doc.payload)));
    if (construction == "associated")
        return document_of(associated_ap(std::get<TridendriformData>(doc.payload)));
    throw InputError("unknown construction '" + construction + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic workbench for algebras given by structure constants"};
    app.require_subcommand(1);

    std::vector<std::string> raw_params;
    std::string format = "text";
    std::string bracket_form = "rho";
    app.add_option("--param", raw_params, "Parameter value name=value (repeatable)")
        ->take_all();
    app.add_option("--format", format, "Report format: text or machine")
        ->check(CLI::IsMember({"text", "machine"}));
    app.add_option("--averaging-bracket", bracket_form,
                   "Bracket condition used by averaging checks: rho (default) or mu")
        ->check(CLI::IsMember({"rho", "mu"}));

    std::string check_file;
    CLI::App* check_cmd = app.add_subcommand("check", "Verify the identities of a document");
    check_cmd->add_option("file", check_file, "Input document")->required();

    std::string derive_construction, derive_file;
    CLI::App* derive_cmd =
        app.add_subcommand("derive", "Build a derived structure and print its document");
    derive_cmd
        ->add_option("construction", derive_construction,
                     "semidirect | hemisemi | bowtie | double | dendrify | awb | dual-rep | "
                     "dual-coalgebra | associated")
        ->required();
    derive_cmd->add_option("file", derive_file, "Input document")->required();

    std::string equiv_file;
    CLI::App* equiv_cmd =
        app.add_subcommand("equiv", "Run the three equivalent bialgebra characterizations");
    equiv_cmd->add_option("file", equiv_file, "Bialgebra document")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // Help requests exit 0; every usage problem is an input error.
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        ParamEnv params = parse_params(raw_params);
        AveragingBracketForm form =
            bracket_form == "mu" ? AveragingBracketForm::Mu : AveragingBracketForm::Rho;

        if (check_cmd->parsed()) {
            Document doc = parse_document(read_file(check_file), params);
            CheckReport rep = run_check(doc, form);
            if (format == "machine")
                std::cout << report_json(rep).dump(2) << "\n";
            else
                print_report_text(rep, std::cout);
            return rep.passed() ? 0 : 1;
        }

        if (derive_cmd->parsed()) {
            Document doc = parse_document(read_file(derive_file), params);
            Document out = run_derive(derive_construction, doc);
            std::cout << serialize_document(out);
            return 0;
        }

        if (equiv_cmd->parsed()) {
            Document doc = parse_document(read_file(equiv_file), params);
            EquivalenceReport eq = equivalence_report(std::get<BialgebraData>(doc.payload));
            if (format == "machine") {
                nlohmann::ordered_json j;
                j["d-bialgebra"] = report_json(eq.dbialgebra);
                j["matched-pair"] = report_json(eq.matched_pair);
                j["manin-triple"] = report_json(eq.manin_triple);
                std::cout << j.dump(2) << "\n";
            } else {
                auto line = [](const char* name, const CheckReport& r) {
                    std::cout << name << (r.passed() ? "pass" : "fail") << "\n";
                    if (!r.passed()) {
                        const Violation& v = r.violations.front();
                        std::cout << "  first violation: " << v.identity << " at (";
                        for (size_t i = 0; i < v.indices.size(); ++i) {
                            if (i) std::cout << ",";
                            std::cout << v.indices[i];
                        }
                        std::cout << ")\n";
                    }
                };
                line("d-bialgebra:   ", eq.dbialgebra);
                line("matched-pair:  ", eq.matched_pair);
                line("manin-triple:  ", eq.manin_triple);
            }
            if (!eq.agree())
                std::cerr << "warning: the three verdicts disagree; this indicates a defect\n";
            return eq.all_pass() ? 0 : 1;
        }
    } catch (const std::bad_variant_access&) {
        std::cerr << "error: document kind does not match the requested operation\n";
        return 2;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition error: " << e.what() << "\n";
        return 2;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
