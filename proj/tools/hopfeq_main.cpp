// Command-line surface: load matrices and bialgebra descriptions, run the
// equation and Hopf-function checkers, run exhaustive searches, and emit
// text or JSON reports.
//
// Exit codes: 0 all checks passed, 1 a check failed (witnesses printed),
// 2 inconclusive (degree-truncation bound hit), 3 usage or input error.

#include "hopfeq/catalog.hpp"
#include "hopfeq/io.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

using namespace hopfeq;
using nlohmann::json;

namespace {

int status_exit(Status s) {
    switch (s) {
        case Status::pass: return 0;
        case Status::fail: return 1;
        default: return 2;
    }
}

void print_verdict(const std::string& what, const Verdict& v) {
    std::cout << what << ": " << v.status_str() << "\n";
    if (!v.detail.empty()) std::cout << "  " << v.detail << "\n";
    for (const auto& w : v.witnesses)
        std::cout << "  witness " << w.location << ": expected " << w.expected << ", got " << w.actual
                  << "\n";
}

struct NamedVerdict {
    std::string name;
    Verdict verdict;
    bool informational = false;
};

int emit(const std::vector<NamedVerdict>& results, bool as_json) {
    Status worst = Status::pass;
    for (const auto& r : results) {
        if (r.informational) continue;
        if (r.verdict.status == Status::fail) worst = Status::fail;
        else if (r.verdict.status == Status::inconclusive && worst != Status::fail)
            worst = Status::inconclusive;
    }
    if (as_json) {
        json checks = json::array();
        for (const auto& r : results)
            checks.push_back(json{{"check", r.name},
                                  {"verdict", io::verdict_to_json(r.verdict)},
                                  {"informational", r.informational}});
        json out{{"checks", std::move(checks)},
                 {"status", Verdict{worst, {}, ""}.status_str()}};
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& r : results)
            print_verdict(r.name + (r.informational ? " [informational]" : ""), r.verdict);
        std::cout << "overall: " << Verdict{worst, {}, ""}.status_str() << "\n";
    }
    return status_exit(worst);
}

SearchRange parse_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) throw io::IoError("range must look like lo..hi");
    return SearchRange{std::stoull(text.substr(0, dots)), std::stoull(text.substr(dots + 2))};
}

EquationKind parse_kind(const std::string& k) {
    if (k == "hopf") return EquationKind::hopf;
    if (k == "qybe") return EquationKind::qybe;
    if (k == "inverse-eq") return EquationKind::inverse_eq;
    if (k == "commute13") return EquationKind::commute13;
    throw io::IoError("unknown equation kind: " + k);
}

std::string matrix_text(const EndoTensor& t) {
    std::string s;
    for (const auto& row : t.to_matrix()) {
        for (std::size_t j = 0; j < row.size(); ++j) s += (j ? " " : "") + row[j].str();
        s += "\n";
    }
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact checkers and searches for the Hopf equation, FRT-type bialgebras, "
                 "Hopf functions and Hopf elements"};
    app.require_subcommand(1);
    bool as_json = false;
    int degree = 4;
    app.add_flag("--json", as_json, "machine-readable output");
    app.add_option("--degree", degree, "degree bound for truncated ideal reductions")
        ->check(CLI::Range(2, 12));

    // check <kind> --matrix F
    auto* check = app.add_subcommand("check", "check an operator equation for a matrix");
    std::string check_kind, matrix_path;
    check->add_option("kind", check_kind, "hopf | qybe | inverse-eq | commute13")->required();
    check->add_option("--matrix", matrix_path, "matrix JSON file")->required();

    // build-br --matrix F [--emit-relations]
    auto* buildbr = app.add_subcommand("build-br", "build the bialgebra B(R) from a matrix");
    std::string br_matrix;
    bool emit_relations = false;
    buildbr->add_option("--matrix", br_matrix, "matrix JSON file")->required();
    buildbr->add_flag("--emit-relations", emit_relations, "print the presentation as JSON");

    // verify-sigma --bialgebra F --sigma F [--subcoalgebra a,b,c]
    auto* vsigma = app.add_subcommand("verify-sigma", "certify a Hopf function table");
    std::string vs_bialgebra, vs_sigma, vs_sub;
    vsigma->add_option("--bialgebra", vs_bialgebra, "bialgebra JSON file")->required();
    vsigma->add_option("--sigma", vs_sigma, "sigma table JSON file")->required();
    vsigma->add_option("--subcoalgebra", vs_sub, "comma-separated C basis (overrides the file)");

    // verify-example <name> [--q V] [--a V] [--field F] [--variant v]
    auto* vexample = app.add_subcommand("verify-example", "run the bundled checks of a named example");
    std::string ex_name, ex_field, ex_q, ex_a, ex_variant;
    int ex_order = 2;
    vexample->add_option("name", ex_name, "tk | fk | quantum_plane | bq2 | dq2 | eq2 | group_algebra | monoid")
        ->required();
    vexample->add_option("--field", ex_field, "Q or GF(p)");
    vexample->add_option("--q", ex_q, "deformation parameter");
    vexample->add_option("--a", ex_a, "quantum-plane sigma parameter");
    vexample->add_option("--order", ex_order, "group order for group_algebra");
    vexample->add_option("--variant", ex_variant, "verbatim | corrected (fk sigma tables)");

    // search <solutions|sigmas>
    auto* search = app.add_subcommand("search", "exhaustive searches over a prime field");
    std::string search_what, search_field, search_range, search_kind = "hopf";
    std::string search_bialgebra, search_example, search_sub;
    int search_n = 2;
    search->add_option("what", search_what, "solutions | sigmas")->required();
    search->add_option("--field", search_field, "GF(p)");
    search->add_option("--n", search_n, "dimension of M (solutions)");
    search->add_option("--range", search_range, "candidate index range lo..hi");
    search->add_option("--kind", search_kind, "equation kind for solutions (default hopf)");
    search->add_option("--bialgebra", search_bialgebra, "host bialgebra file (sigmas)");
    search->add_option("--example", search_example, "catalog host (sigmas)");
    search->add_option("--subcoalgebra", search_sub, "comma-separated C basis (sigmas)");

    // integrals --bialgebra F
    auto* integrals = app.add_subcommand("integrals", "basis of the space of right integrals");
    std::string int_bialgebra;
    integrals->add_option("--bialgebra", int_bialgebra, "table bialgebra JSON file")->required();

    // hopf-element --bialgebra F --element F
    auto* helem = app.add_subcommand("hopf-element", "check HE1-HE3 and related identities");
    std::string he_bialgebra, he_element;
    helem->add_option("--bialgebra", he_bialgebra, "bialgebra JSON file")->required();
    helem->add_option("--element", he_element, "tensor element JSON file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*check) {
            auto mf = io::load_matrix(io::load_json_file(matrix_path));
            Verdict v = check_equation(parse_kind(check_kind), mf.tensor);
            std::vector<NamedVerdict> results{{"check " + check_kind, v}};
            if (check_kind == "hopf")
                results.push_back({"componentwise cross-check", component_check_hopf(mf.tensor)});
            return emit(results, as_json);
        }

        if (*buildbr) {
            auto mf = io::load_matrix(io::load_json_file(br_matrix));
            Host br = build_br(mf.tensor, degree);
            if (emit_relations) {
                std::cout << io::presented_to_json(br).dump(2) << "\n";
                return 0;
            }
            if (as_json) {
                json out{{"generators", br.alphabet.names()},
                         {"relations", br.relations.size()},
                         {"coideal_check", "pass"}};
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << "B(R) built: " << br.alphabet.names().size() << " generators, "
                          << br.relations.size() << " relations; coideal check passed at degree "
                          << degree << "\n";
                for (std::size_t i = 0; i < br.relations.size(); ++i)
                    std::cout << "  " << chi_name(mf.n, i) << " = " << br.poly_str(br.relations[i])
                              << "\n";
            }
            return 0;
        }

        if (*vsigma) {
            auto host = std::make_shared<Host>(io::load_bialgebra(io::load_json_file(vs_bialgebra), degree));
            std::optional<std::vector<std::string>> sub;
            if (!vs_sub.empty()) {
                sub.emplace();
                std::string cur;
                for (char c : vs_sub + ",")
                    if (c == ',') {
                        if (!cur.empty()) sub->push_back(cur);
                        cur.clear();
                    } else {
                        cur += c;
                    }
            }
            Pairing s = io::load_sigma(host, io::load_json_file(vs_sigma), sub ? &*sub : nullptr);
            std::vector<NamedVerdict> results{
                {"well-defined over relations", check_well_defined(s)},
                {"(H2)", check_h2(s)},
                {"(H3)", check_h3(s, 2)},
                {"(H1) on generators", check_h1(s, H1Mode::generators, 3, degree)},
                {"convolution identity s23*s13*s12 = s12*s23", check_dec_identity(s, 2)},
            };
            return emit(results, as_json);
        }

        if (*vexample) {
            ExampleParams p;
            p.degree = degree;
            p.group_order = ex_order;
            if (!ex_field.empty()) p.field = io::parse_field_arg(ex_field);
            Field f = p.field.value_or(ex_name == "fk" || ex_name == "group_algebra"
                                           ? Field::gf(2)
                                           : Field::rationals());
            p.field = f;
            if (!ex_q.empty()) p.q = parse_scalar(f, ex_q);
            if (!ex_a.empty()) p.a = parse_scalar(f, ex_a);
            Report rep = verify_example(ex_name, p, ex_variant);
            if (as_json)
                std::cout << io::report_to_json(rep).dump(2) << "\n";
            else
                std::cout << rep.text();
            return status_exit(rep.raw_status());
        }

        if (*search) {
            if (search_what == "solutions") {
                Field f = io::parse_field_arg(search_field.empty() ? "GF(2)" : search_field);
                std::optional<SearchRange> range;
                if (!search_range.empty()) range = parse_range(search_range);
                auto hits = search_endos(f, search_n, parse_kind(search_kind), range);
                if (as_json) {
                    json out = json::array();
                    for (const auto& t : hits) out.push_back(io::matrix_to_json(t));
                    std::cout << out.dump(2) << "\n";
                } else {
                    for (const auto& t : hits) std::cout << matrix_text(t) << "\n";
                    std::cout << hits.size() << " solutions\n";
                }
                return 0;
            }
            if (search_what == "sigmas") {
                HostPtr host;
                if (!search_bialgebra.empty()) {
                    host = std::make_shared<Host>(
                        io::load_bialgebra(io::load_json_file(search_bialgebra), degree));
                } else if (!search_example.empty()) {
                    ExampleParams p;
                    p.degree = degree;
                    if (!search_field.empty()) p.field = io::parse_field_arg(search_field);
                    host = example(search_example, p).host;
                } else {
                    throw io::IoError("search sigmas needs --bialgebra or --example");
                }
                if (search_sub.empty()) throw io::IoError("search sigmas needs --subcoalgebra");
                std::vector<std::string> names;
                std::string cur;
                for (char c : search_sub + ",")
                    if (c == ',') {
                        if (!cur.empty()) names.push_back(cur);
                        cur.clear();
                    } else {
                        cur += c;
                    }
                Subcoalgebra C = Subcoalgebra::make(*host, names);
                auto found = search_hopf_functions(host, C);
                if (as_json) {
                    json out = json::array();
                    for (const auto& s : found) out.push_back(io::sigma_to_json(s));
                    std::cout << out.dump(2) << "\n";
                } else {
                    for (const auto& s : found) std::cout << io::sigma_to_json(s).dump() << "\n";
                    std::cout << found.size() << " hopf functions\n";
                }
                return 0;
            }
            throw io::IoError("search target must be solutions or sigmas");
        }

        if (*integrals) {
            auto host = io::load_bialgebra(io::load_json_file(int_bialgebra), degree);
            auto basis = right_integral_space(host);
            auto name_of = [&](std::size_t i) {
                return i == 0 ? host.unit_name : host.alphabet.name(static_cast<GenId>(i - 1));
            };
            if (as_json) {
                json out = json::array();
                for (const auto& t : basis) {
                    json row = json::object();
                    for (std::size_t i = 0; i < t.size(); ++i) row[name_of(i)] = t[i].str();
                    out.push_back(std::move(row));
                }
                std::cout << json{{"dimension", basis.size()}, {"basis", std::move(out)}}.dump(2)
                          << "\n";
            } else {
                std::cout << "right integral space dimension " << basis.size() << "\n";
                for (const auto& t : basis) {
                    std::cout << "  T:";
                    for (std::size_t i = 0; i < t.size(); ++i)
                        std::cout << " T(" << name_of(i) << ")=" << t[i].str();
                    std::cout << "\n";
                }
            }
            return 0;
        }

        if (*helem) {
            auto host = std::make_shared<Host>(io::load_bialgebra(io::load_json_file(he_bialgebra), degree));
            TensorElement te = io::load_element(host, io::load_json_file(he_element));
            std::vector<NamedVerdict> results{
                {"first slot lies in A", check_first_slot_in_subalgebra(te)},
                {"(HE1)", check_he1(te, degree)},
                {"(HE2)", check_he2(te, degree)},
                {"(HE3)", check_he3(te, degree)},
                {"R23R13R12 = R12R23", check_identity_101(te, degree)},
            };
            auto [t, tv] = integral_t(te, degree);
            results.push_back({"t = sum R1 eps(R2) = " + host->poly_str(t) + " (left integral, idempotent)", tv});
            auto qt = check_quasitriangular(host, te.elt, degree);
            for (const auto& [name, v] : qt)
                results.push_back({"quasitriangular contrast " + name, v, true});
            return emit(results, as_json);
        }
    } catch (const io::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 3;
}
