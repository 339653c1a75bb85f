#pragma once

// JSON file formats for the CLI: matrices, bialgebra tables, presentations,
// sigma tables, tensor elements, and verdict reports. Scalars are written as
// strings ("5", "-3/4", residues in [0,p)); both strings and plain JSON
// integers are accepted on input.

#include "hopfeq/catalog.hpp"
#include "hopfeq/endo.hpp"
#include "hopfeq/host.hpp"
#include "hopfeq/hopfelement.hpp"
#include "hopfeq/pairing.hpp"

#include <json.hpp>

#include <fstream>
#include <memory>
#include <stdexcept>
#include <string>

namespace hopfeq::io {

using nlohmann::json;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw IoError(path + ": " + e.what());
    }
    return j;
}

inline Field field_from_json(const json& j) {
    if (j.is_string() && j.get<std::string>() == "Q") return Field::rationals();
    if (j.is_object() && j.contains("GF")) return Field::gf(j.at("GF").get<std::uint64_t>());
    throw IoError("field must be \"Q\" or {\"GF\": p}");
}

inline json field_to_json(const Field& f) {
    if (f.kind() == FieldKind::rationals) return "Q";
    return json{{"GF", f.modulus()}};
}

inline Scalar scalar_from_json(const Field& f, const json& j) {
    if (j.is_string()) return parse_scalar(f, j.get<std::string>());
    if (j.is_number_integer()) return parse_scalar(f, std::to_string(j.get<long long>()));
    throw IoError("scalar must be a string or an integer");
}

inline Field parse_field_arg(const std::string& text) {
    if (text == "Q" || text == "q") return Field::rationals();
    if (text.rfind("GF(", 0) == 0 && text.back() == ')')
        return Field::gf(std::stoull(text.substr(3, text.size() - 4)));
    throw IoError("field must be Q or GF(p), got: " + text);
}

// ---- matrices ----------------------------------------------------------------

struct MatrixFile {
    Field field = Field::rationals();
    int n = 0;
    EndoTensor tensor = EndoTensor(Field::rationals(), 1);
};

/// {"field": "Q"|{"GF":p}, "n": N, "matrix": [[...]]}, row-major over the
/// lexicographic basis of M⊗M, first factor most significant.
inline MatrixFile load_matrix(const json& j) {
    MatrixFile mf;
    mf.field = field_from_json(j.at("field"));
    mf.n = j.at("n").get<int>();
    std::size_t N = static_cast<std::size_t>(mf.n) * static_cast<std::size_t>(mf.n);
    const json& rows = j.at("matrix");
    if (!rows.is_array() || rows.size() != N) throw IoError("matrix must have n^2 rows");
    std::vector<std::vector<Scalar>> m;
    for (const auto& row : rows) {
        if (!row.is_array() || row.size() != N) throw IoError("matrix rows must have n^2 entries");
        std::vector<Scalar> r;
        for (const auto& e : row) r.push_back(scalar_from_json(mf.field, e));
        m.push_back(std::move(r));
    }
    mf.tensor = endo_from_matrix(mf.field, mf.n, m);
    return mf;
}

inline json matrix_to_json(const EndoTensor& t) {
    json rows = json::array();
    for (const auto& row : t.to_matrix()) {
        json r = json::array();
        for (const auto& e : row) r.push_back(e.str());
        rows.push_back(std::move(r));
    }
    return json{{"field", field_to_json(t.field())}, {"n", t.dim()}, {"matrix", std::move(rows)}};
}

// ---- bialgebras ----------------------------------------------------------------

inline Host load_table_bialgebra(const json& j) {
    TableBialgebraData d;
    d.field = field_from_json(j.at("field"));
    d.basis = j.at("basis").get<std::vector<std::string>>();
    d.unit = j.value("unit", "1");
    for (const auto& row : j.at("mult")) {
        std::vector<std::vector<std::pair<std::string, Scalar>>> r;
        for (const auto& cell : row) {
            std::vector<std::pair<std::string, Scalar>> terms;
            for (const auto& t : cell)
                terms.emplace_back(t.at("b").get<std::string>(), scalar_from_json(d.field, t.at("c")));
            r.push_back(std::move(terms));
        }
        d.mult.push_back(std::move(r));
    }
    for (const auto& row : j.at("delta")) {
        std::vector<std::tuple<std::string, std::string, Scalar>> terms;
        for (const auto& t : row)
            terms.emplace_back(t.at("l").get<std::string>(), t.at("r").get<std::string>(),
                               scalar_from_json(d.field, t.at("c")));
        d.delta.push_back(std::move(terms));
    }
    for (const auto& e : j.at("eps")) d.eps.push_back(scalar_from_json(d.field, e));
    return make_table_bialgebra(d);
}

inline NCPoly poly_from_json(const Field& f, const Alphabet& a, const json& j) {
    NCPoly p(f);
    for (const auto& term : j) {
        Word w;
        for (const auto& g : term.at("w")) w.push_back(a.id(g.get<std::string>()));
        p.add_term(std::move(w), scalar_from_json(f, term.at("c")));
    }
    return p;
}

inline json poly_to_json(const NCPoly& p, const Alphabet& a) {
    json terms = json::array();
    for (const auto& [w, c] : p.terms()) {
        json ws = json::array();
        for (GenId g : w) ws.push_back(a.name(g));
        terms.push_back(json{{"c", c.str()}, {"w", std::move(ws)}});
    }
    return terms;
}

inline Host load_presented_bialgebra(const json& j, int default_degree = 4) {
    PresentedBialgebraData d;
    d.field = field_from_json(j.at("field"));
    d.generators = j.at("generators").get<std::vector<std::string>>();
    Alphabet a(d.generators);
    for (const auto& rel : j.at("relations")) d.relations.push_back(poly_from_json(d.field, a, rel));
    const json& dg = j.at("delta_gen");
    const json& eg = j.at("eps_gen");
    for (const auto& g : d.generators) {
        std::vector<std::tuple<std::string, std::string, Scalar>> terms;
        for (const auto& t : dg.at(g))
            terms.emplace_back(t.at("l").get<std::string>(), t.at("r").get<std::string>(),
                               scalar_from_json(d.field, t.at("c")));
        d.delta_gen.push_back(std::move(terms));
        d.eps_gen.push_back(scalar_from_json(d.field, eg.at(g)));
    }
    return make_presented_bialgebra(d, j.value("degree", default_degree));
}

/// Table or presented, keyed on "basis" vs "generators".
inline Host load_bialgebra(const json& j, int default_degree = 4) {
    if (j.contains("basis")) return load_table_bialgebra(j);
    if (j.contains("generators")) return load_presented_bialgebra(j, default_degree);
    throw IoError("bialgebra file needs \"basis\" (table) or \"generators\" (presentation)");
}

inline json presented_to_json(const Host& h) {
    if (h.kind != Host::Kind::presented) throw IoError("not a presented bialgebra");
    json j;
    j["field"] = field_to_json(h.field);
    j["generators"] = h.alphabet.names();
    json rels = json::array();
    for (const auto& r : h.relations) rels.push_back(poly_to_json(r, h.alphabet));
    j["relations"] = std::move(rels);
    json dg = json::object(), eg = json::object();
    for (GenId g = 0; g < static_cast<GenId>(h.num_letters()); ++g) {
        json terms = json::array();
        for (const auto& [k, c] : h.gen_delta[static_cast<std::size_t>(g)].terms())
            terms.push_back(json{{"l", k.first.empty() ? "1" : h.alphabet.name(k.first[0])},
                                 {"r", k.second.empty() ? "1" : h.alphabet.name(k.second[0])},
                                 {"c", c.str()}});
        dg[h.alphabet.name(g)] = std::move(terms);
        eg[h.alphabet.name(g)] = h.gen_eps[static_cast<std::size_t>(g)].str();
    }
    j["delta_gen"] = std::move(dg);
    j["eps_gen"] = std::move(eg);
    j["degree"] = h.default_degree;
    return j;
}

// ---- sigma tables ---------------------------------------------------------------

/// {"C": [names], "table": {cname: {hname_or_"1": scalar}}}
inline Pairing load_sigma(HostPtr host, const json& j,
                          const std::vector<std::string>* c_override = nullptr) {
    std::vector<std::string> cnames =
        c_override ? *c_override : j.at("C").get<std::vector<std::string>>();
    Subcoalgebra C = Subcoalgebra::make(*host, cnames);
    const Field& f = host->field;
    std::vector<std::vector<Scalar>> vals(C.size(), std::vector<Scalar>(host->num_letters(), Scalar::zero(f)));
    std::vector<Scalar> unit_vals(C.size(), Scalar::zero(f));
    const json& table = j.at("table");
    for (std::size_t c = 0; c < cnames.size(); ++c) {
        const json& row = table.at(cnames[c]);
        for (auto it = row.begin(); it != row.end(); ++it) {
            Scalar v = scalar_from_json(f, it.value());
            if (it.key() == "1" || it.key() == host->unit_name)
                unit_vals[c] = v;
            else
                vals[c][static_cast<std::size_t>(host->alphabet.id(it.key()))] = v;
        }
    }
    return pairing_from_table(std::move(host), std::move(C), std::move(vals), std::move(unit_vals));
}

inline json sigma_to_json(const Pairing& s) {
    json table = json::object();
    for (std::size_t c = 0; c < s.C.size(); ++c) {
        json row = json::object();
        row["1"] = s.unit_values[c].str();
        for (std::size_t g = 0; g < s.host->num_letters(); ++g)
            row[s.host->alphabet.name(static_cast<GenId>(g))] = s.values[c][g].str();
        table[s.C.names[c]] = std::move(row);
    }
    return json{{"C", s.C.names}, {"table", std::move(table)}};
}

// ---- tensor elements --------------------------------------------------------------

/// {"A": [gens], "terms": [{"first": [gen...], "second": [gen...], "c": scalar}]}
inline TensorElement load_element(HostPtr host, const json& j) {
    const Field& f = host->field;
    TensorSquare t(f);
    for (const auto& term : j.at("terms")) {
        Word w1, w2;
        for (const auto& g : term.at("first")) w1.push_back(host->alphabet.id(g.get<std::string>()));
        for (const auto& g : term.at("second")) w2.push_back(host->alphabet.id(g.get<std::string>()));
        t.add_term(std::move(w1), std::move(w2), scalar_from_json(f, term.at("c")));
    }
    std::vector<std::string> a_gens = j.at("A").get<std::vector<std::string>>();
    return TensorElement(std::move(host), std::move(a_gens), std::move(t));
}

// ---- reports ---------------------------------------------------------------------

inline json verdict_to_json(const Verdict& v) {
    json ws = json::array();
    for (const auto& w : v.witnesses)
        ws.push_back(json{{"location", w.location}, {"expected", w.expected}, {"actual", w.actual}});
    return json{{"status", v.status_str()}, {"witnesses", std::move(ws)}, {"detail", v.detail}};
}

inline json report_to_json(const Report& r) {
    json lines = json::array();
    for (const auto& l : r.lines)
        lines.push_back(json{{"check", l.check},
                             {"expected", Verdict{l.expected, {}, ""}.status_str()},
                             {"verdict", verdict_to_json(l.actual)},
                             {"informational", l.informational},
                             {"matched", l.matched()}});
    return json{{"example", r.example},
                {"checks", std::move(lines)},
                {"raw_status", Verdict{r.raw_status(), {}, ""}.status_str()},
                {"all_matched", r.all_matched()}};
}

}  // namespace hopfeq::io
