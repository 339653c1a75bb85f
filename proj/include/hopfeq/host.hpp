#pragma once

// Bialgebras in two representations: finite multiplication/comultiplication
// tables, and finite presentations (generators, relations, Delta and eps on
// generators). Elements of either kind are NCPolys over the host alphabet;
// the unit is the empty word, table basis elements are single letters.
//
// Equality of elements is exact for table hosts. For presented hosts it is
// decided by reduction modulo the degree-truncated relation ideal: equal
// normal forms are a definitive "equal", different normal forms are only
// bounded evidence and surface as `unknown`.

#include "hopfeq/endo.hpp"
#include "hopfeq/ideal.hpp"
#include "hopfeq/linalg.hpp"
#include "hopfeq/verdict.hpp"
#include "hopfeq/word.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace hopfeq {

struct PairDegLex {
    bool operator()(const std::pair<Word, Word>& a, const std::pair<Word, Word>& b) const {
        DegLexLess lt;
        if (lt(a.first, b.first)) return true;
        if (lt(b.first, a.first)) return false;
        return lt(a.second, b.second);
    }
};

struct TripleDegLex {
    bool operator()(const std::tuple<Word, Word, Word>& a, const std::tuple<Word, Word, Word>& b) const {
        DegLexLess lt;
        if (lt(std::get<0>(a), std::get<0>(b))) return true;
        if (lt(std::get<0>(b), std::get<0>(a))) return false;
        if (lt(std::get<1>(a), std::get<1>(b))) return true;
        if (lt(std::get<1>(b), std::get<1>(a))) return false;
        return lt(std::get<2>(a), std::get<2>(b));
    }
};

/// Formal element of T(C) ⊗ T(C).
class TensorSquare {
public:
    using Terms = std::map<std::pair<Word, Word>, Scalar, PairDegLex>;

    explicit TensorSquare(const Field& f) : field_(f) {}

    static TensorSquare unit_unit(const Field& f) {
        TensorSquare t(f);
        t.add_term({}, {}, Scalar::one(f));
        return t;
    }

    const Field& field() const { return field_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(Word a, Word b, const Scalar& c) {
        if (c.is_zero()) return;
        auto key = std::make_pair(std::move(a), std::move(b));
        auto [it, fresh] = terms_.emplace(std::move(key), c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    TensorSquare operator+(const TensorSquare& o) const {
        TensorSquare r = *this;
        for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, c);
        return r;
    }
    TensorSquare operator-(const TensorSquare& o) const {
        TensorSquare r = *this;
        for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, -c);
        return r;
    }
    TensorSquare scaled(const Scalar& c) const {
        TensorSquare r(field_);
        for (const auto& [k, cc] : terms_) r.add_term(k.first, k.second, cc * c);
        return r;
    }

    /// slot-wise concatenation product
    TensorSquare operator*(const TensorSquare& o) const {
        TensorSquare r(field_);
        for (const auto& [k1, c1] : terms_)
            for (const auto& [k2, c2] : o.terms_)
                r.add_term(word_concat(k1.first, k2.first), word_concat(k1.second, k2.second), c1 * c2);
        return r;
    }

    bool operator==(const TensorSquare& o) const { return terms_ == o.terms_; }

    std::string str(const Alphabet& a) const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [k, c] : terms_) {
            if (!s.empty()) s += " + ";
            std::string t = a.word_str(k.first) + "(x)" + a.word_str(k.second);
            s += c.is_one() ? t : c.str() + "*" + t;
        }
        return s;
    }

private:
    Field field_;
    Terms terms_;
};

/// Formal element of T(C) ⊗ T(C) ⊗ T(C).
class TensorTriple {
public:
    using Key = std::tuple<Word, Word, Word>;
    using Terms = std::map<Key, Scalar, TripleDegLex>;

    explicit TensorTriple(const Field& f) : field_(f) {}

    const Field& field() const { return field_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(Word a, Word b, Word c, const Scalar& s) {
        if (s.is_zero()) return;
        Key key{std::move(a), std::move(b), std::move(c)};
        auto [it, fresh] = terms_.emplace(std::move(key), s);
        if (!fresh) {
            it->second += s;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    TensorTriple operator+(const TensorTriple& o) const {
        TensorTriple r = *this;
        for (const auto& [k, c] : o.terms_) r.add_term(std::get<0>(k), std::get<1>(k), std::get<2>(k), c);
        return r;
    }
    TensorTriple operator-(const TensorTriple& o) const {
        TensorTriple r = *this;
        for (const auto& [k, c] : o.terms_) r.add_term(std::get<0>(k), std::get<1>(k), std::get<2>(k), -c);
        return r;
    }

    TensorTriple operator*(const TensorTriple& o) const {
        TensorTriple r(field_);
        for (const auto& [k1, c1] : terms_)
            for (const auto& [k2, c2] : o.terms_)
                r.add_term(word_concat(std::get<0>(k1), std::get<0>(k2)),
                           word_concat(std::get<1>(k1), std::get<1>(k2)),
                           word_concat(std::get<2>(k1), std::get<2>(k2)), c1 * c2);
        return r;
    }

    bool operator==(const TensorTriple& o) const { return terms_ == o.terms_; }

    std::string str(const Alphabet& a) const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [k, c] : terms_) {
            if (!s.empty()) s += " + ";
            std::string t = a.word_str(std::get<0>(k)) + "(x)" + a.word_str(std::get<1>(k)) + "(x)" +
                            a.word_str(std::get<2>(k));
            s += c.is_one() ? t : c.str() + "*" + t;
        }
        return s;
    }

private:
    Field field_;
    Terms terms_;
};

enum class Cmp { equal, not_equal, unknown };

class Host {
public:
    enum class Kind { table, presented };

    Kind kind;
    Field field;
    Alphabet alphabet;  // letters; the unit is the empty word

    // table representation
    std::vector<std::vector<NCPoly>> table_mult;  // [a][b] -> combination of unit/letters
    std::vector<TensorSquare> table_delta;        // [a]
    std::vector<Scalar> table_eps;                // [a]
    std::string unit_name = "1";

    // presentation
    std::vector<NCPoly> relations;
    std::vector<TensorSquare> gen_delta;  // [g], slots of length <= 1
    std::vector<Scalar> gen_eps;
    int default_degree = 4;

    Host(Kind k, const Field& f, Alphabet a) : kind(k), field(f), alphabet(std::move(a)) {}

    NCPoly one() const { return NCPoly::unit(field); }
    NCPoly gen_poly(GenId g) const { return NCPoly::gen(field, g); }
    NCPoly gen_poly(const std::string& name) const { return gen_poly(alphabet.id(name)); }

    std::size_t num_letters() const { return alphabet.size(); }

    /// table basis dimension including the unit
    std::size_t table_dim() const { return alphabet.size() + 1; }

    std::shared_ptr<const IdealBasis> ideal(int D) const {
        auto it = ideal_cache_.find(D);
        if (it != ideal_cache_.end()) return it->second;
        auto ib = std::make_shared<const IdealBasis>(field, alphabet.size(), relations, D);
        ideal_cache_.emplace(D, ib);
        return ib;
    }

    /// Table hosts: fold every word through the multiplication table (exact).
    /// Presented hosts: reduce modulo the truncated relation ideal at D.
    NCPoly normalize(const NCPoly& p, int D = -1) const {
        if (kind == Kind::table) return fold_table(p);
        if (relations.empty()) return p;
        return ideal(D < 0 ? default_degree : D)->reduce(p);
    }

    Scalar counit(const NCPoly& p) const {
        Scalar acc = Scalar::zero(field);
        for (const auto& [w, c] : p.terms()) {
            Scalar e = Scalar::one(field);
            for (GenId g : w) e *= eps_letter(g);
            acc += e * c;
        }
        return acc;
    }

    TensorSquare delta_word(const Word& w) const {
        TensorSquare acc = TensorSquare::unit_unit(field);
        for (GenId g : w) acc = acc * delta_letter(g);
        return acc;
    }

    TensorSquare delta(const NCPoly& p) const {
        TensorSquare acc(field);
        for (const auto& [w, c] : p.terms()) acc = acc + delta_word(w).scaled(c);
        return acc;
    }

    /// normalize both slots and re-expand bilinearly
    TensorSquare normalize_slots(const TensorSquare& t, int D = -1) const {
        TensorSquare out(field);
        for (const auto& [k, c] : t.terms()) {
            NCPoly a = normalize(NCPoly::monomial(field, k.first, Scalar::one(field)), D);
            NCPoly b = normalize(NCPoly::monomial(field, k.second, Scalar::one(field)), D);
            for (const auto& [wa, ca] : a.terms())
                for (const auto& [wb, cb] : b.terms()) out.add_term(wa, wb, c * ca * cb);
        }
        return out;
    }

    TensorTriple normalize_slots(const TensorTriple& t, int D = -1) const {
        TensorTriple out(field);
        for (const auto& [k, c] : t.terms()) {
            NCPoly a = normalize(NCPoly::monomial(field, std::get<0>(k), Scalar::one(field)), D);
            NCPoly b = normalize(NCPoly::monomial(field, std::get<1>(k), Scalar::one(field)), D);
            NCPoly d = normalize(NCPoly::monomial(field, std::get<2>(k), Scalar::one(field)), D);
            for (const auto& [wa, ca] : a.terms())
                for (const auto& [wb, cb] : b.terms())
                    for (const auto& [wd, cd] : d.terms()) out.add_term(wa, wb, wd, c * ca * cb * cd);
        }
        return out;
    }

    Cmp compare(const NCPoly& a, const NCPoly& b, int D = -1) const {
        NCPoly diff = a - b;
        if (kind == Kind::table) return fold_table(diff).is_zero() ? Cmp::equal : Cmp::not_equal;
        try {
            return normalize(diff, D).is_zero() ? Cmp::equal : Cmp::unknown;
        } catch (const DegreeOverflow&) {
            return Cmp::unknown;
        }
    }

    Cmp compare(const TensorSquare& a, const TensorSquare& b, int D = -1) const {
        try {
            if (normalize_slots(a - b, D).is_zero()) return Cmp::equal;
        } catch (const DegreeOverflow&) {
            return Cmp::unknown;
        }
        return kind == Kind::table ? Cmp::not_equal : Cmp::unknown;
    }

    Cmp compare(const TensorTriple& a, const TensorTriple& b, int D = -1) const {
        try {
            if (normalize_slots(a - b, D).is_zero()) return Cmp::equal;
        } catch (const DegreeOverflow&) {
            return Cmp::unknown;
        }
        return kind == Kind::table ? Cmp::not_equal : Cmp::unknown;
    }

    std::string poly_str(const NCPoly& p) const { return p.str(alphabet); }

    /// parse "1", a generator name, or an element name into a poly
    NCPoly letter_or_unit(const std::string& name) const {
        if (name == unit_name || name == "1") return one();
        return gen_poly(name);
    }

private:
    const TensorSquare& delta_letter(GenId g) const {
        return kind == Kind::table ? table_delta.at(static_cast<std::size_t>(g))
                                   : gen_delta.at(static_cast<std::size_t>(g));
    }
    const Scalar& eps_letter(GenId g) const {
        return kind == Kind::table ? table_eps.at(static_cast<std::size_t>(g))
                                   : gen_eps.at(static_cast<std::size_t>(g));
    }

    NCPoly fold_table(const NCPoly& p) const {
        NCPoly out(field);
        for (const auto& [w, c] : p.terms()) {
            NCPoly acc = NCPoly::monomial(field, {}, c);
            for (GenId g : w) {
                NCPoly next(field);
                for (const auto& [wa, ca] : acc.terms()) {
                    if (wa.empty()) {
                        next.add_term({g}, ca);
                    } else {
                        const NCPoly& prod = table_mult.at(static_cast<std::size_t>(wa[0]))
                                                 .at(static_cast<std::size_t>(g));
                        next += prod.scaled(ca);
                    }
                }
                acc = std::move(next);
            }
            out += acc;
        }
        return out;
    }

    mutable std::map<int, std::shared_ptr<const IdealBasis>> ideal_cache_;
};

using HostPtr = std::shared_ptr<const Host>;

// ---- construction & validation --------------------------------------------

struct TableBialgebraData {
    Field field = Field::rationals();
    std::vector<std::string> basis;  // includes the unit element
    std::string unit = "1";
    // mult[i][j]: image of basis[i]*basis[j] as (basis name, coeff) pairs
    std::vector<std::vector<std::vector<std::pair<std::string, Scalar>>>> mult;
    // delta[i]: (left name, right name, coeff) triples
    std::vector<std::vector<std::tuple<std::string, std::string, Scalar>>> delta;
    std::vector<Scalar> eps;
};

struct BialgebraInvalid : std::runtime_error {
    Verdict verdict;
    explicit BialgebraInvalid(Verdict v)
        : std::runtime_error("bialgebra axioms violated: " + v.summary()), verdict(std::move(v)) {}
};

namespace detail {

inline int table_index(const TableBialgebraData& d, const std::string& name) {
    for (std::size_t i = 0; i < d.basis.size(); ++i)
        if (d.basis[i] == name) return static_cast<int>(i);
    throw std::invalid_argument("unknown basis element: " + name);
}

}  // namespace detail

/// Re-checkable axiom scan: associativity, unit law, coassociativity, counit
/// law, and Delta/eps multiplicativity, each instance on basis elements.
Verdict validate_table_axioms(const Host& h);

/// Validating constructor; rejects invalid tables with the failing axiom
/// instances embedded in the error.
inline Host make_table_bialgebra(const TableBialgebraData& data) {
    std::size_t n = data.basis.size();
    if (data.mult.size() != n || data.delta.size() != n || data.eps.size() != n)
        throw std::invalid_argument("table sizes do not match basis");
    int unit_idx = detail::table_index(data, data.unit);

    std::vector<std::string> letters;
    std::vector<int> to_letter(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        if (static_cast<int>(i) == unit_idx) continue;
        to_letter[i] = static_cast<int>(letters.size());
        letters.push_back(data.basis[i]);
    }

    Host h(Host::Kind::table, data.field, Alphabet(letters));
    h.unit_name = data.unit;
    auto word_of = [&](int basis_idx) -> Word {
        return basis_idx == unit_idx ? Word{} : Word{to_letter[static_cast<std::size_t>(basis_idx)]};
    };

    Verdict v = Verdict::pass();
    // unit laws and unit coalgebra data, straight off the raw tables
    Scalar one = Scalar::one(data.field);
    {
        const auto& du = data.delta[static_cast<std::size_t>(unit_idx)];
        bool unit_grouplike = du.size() == 1 && std::get<0>(du[0]) == data.unit &&
                              std::get<1>(du[0]) == data.unit && std::get<2>(du[0]) == one;
        if (!unit_grouplike)
            v.merge(Verdict::fail({"delta(1)", "1(x)1", "other"}, "unit must be group-like"));
        if (data.eps[static_cast<std::size_t>(unit_idx)] != one)
            v.merge(Verdict::fail({"eps(1)", "1", data.eps[static_cast<std::size_t>(unit_idx)].str()}));
    }

    auto entry_poly = [&](const std::vector<std::pair<std::string, Scalar>>& e) {
        NCPoly p(data.field);
        for (const auto& [name, c] : e) p.add_term(word_of(detail::table_index(data, name)), c);
        return p;
    };

    for (std::size_t i = 0; i < n; ++i) {
        NCPoly bi = NCPoly::monomial(data.field, word_of(static_cast<int>(i)), one);
        NCPoly ui = entry_poly(data.mult[static_cast<std::size_t>(unit_idx)][i]);
        NCPoly iu = entry_poly(data.mult[i][static_cast<std::size_t>(unit_idx)]);
        if (ui != bi)
            v.merge(Verdict::fail({"1*" + data.basis[i], h.poly_str(bi), h.poly_str(ui)}, "unit law"));
        if (iu != bi)
            v.merge(Verdict::fail({data.basis[i] + "*1", h.poly_str(bi), h.poly_str(iu)}, "unit law"));
    }

    // distill letter tables
    std::size_t L = letters.size();
    h.table_mult.assign(L, std::vector<NCPoly>(L, NCPoly::zero(data.field)));
    h.table_delta.assign(L, TensorSquare(data.field));
    h.table_eps.assign(L, Scalar::zero(data.field));
    for (std::size_t i = 0; i < n; ++i) {
        if (static_cast<int>(i) == unit_idx) continue;
        std::size_t a = static_cast<std::size_t>(to_letter[i]);
        h.table_eps[a] = data.eps[i];
        TensorSquare d(data.field);
        for (const auto& [l, r, c] : data.delta[i])
            d.add_term(word_of(detail::table_index(data, l)), word_of(detail::table_index(data, r)), c);
        h.table_delta[a] = d;
        for (std::size_t j = 0; j < n; ++j) {
            if (static_cast<int>(j) == unit_idx) continue;
            h.table_mult[a][static_cast<std::size_t>(to_letter[j])] = entry_poly(data.mult[i][j]);
        }
    }

    v.merge(validate_table_axioms(h));
    if (!v.ok()) throw BialgebraInvalid(std::move(v));
    return h;
}

inline Verdict validate_table_axioms(const Host& h) {
    Verdict v = Verdict::pass();
    const Field& f = h.field;
    std::size_t L = h.num_letters();
    auto letter = [&](std::size_t a) { return h.gen_poly(static_cast<GenId>(a)); };

    for (std::size_t a = 0; a < L; ++a)
        for (std::size_t b = 0; b < L; ++b)
            for (std::size_t c = 0; c < L; ++c) {
                NCPoly lhs = h.normalize(h.normalize(letter(a) * letter(b)) * letter(c));
                NCPoly rhs = h.normalize(letter(a) * h.normalize(letter(b) * letter(c)));
                if (lhs != rhs)
                    v.merge(Verdict::fail({"associativity at (" + h.alphabet.name(static_cast<GenId>(a)) +
                                               "," + h.alphabet.name(static_cast<GenId>(b)) + "," +
                                               h.alphabet.name(static_cast<GenId>(c)) + ")",
                                           h.poly_str(rhs), h.poly_str(lhs)}));
            }

    for (std::size_t a = 0; a < L; ++a) {
        const TensorSquare& d = h.table_delta[a];
        // coassociativity
        TensorTriple lhs(f), rhs(f);
        for (const auto& [k, c] : d.terms()) {
            for (TensorSquare dl = h.delta_word(k.first); const auto& [k2, c2] : dl.terms())
                lhs.add_term(k2.first, k2.second, k.second, c * c2);
            for (TensorSquare dr = h.delta_word(k.second); const auto& [k2, c2] : dr.terms())
                rhs.add_term(k.first, k2.first, k2.second, c * c2);
        }
        if (!(lhs == rhs))
            v.merge(Verdict::fail({"coassociativity at " + h.alphabet.name(static_cast<GenId>(a)),
                                   rhs.str(h.alphabet), lhs.str(h.alphabet)}));
        // counit law
        NCPoly left(f), right(f);
        for (const auto& [k, c] : d.terms()) {
            left.add_term(k.second, c * h.counit(NCPoly::monomial(f, k.first, Scalar::one(f))));
            right.add_term(k.first, c * h.counit(NCPoly::monomial(f, k.second, Scalar::one(f))));
        }
        NCPoly self = letter(a);
        if (left != self)
            v.merge(Verdict::fail({"counit law (eps(x)I)delta at " + h.alphabet.name(static_cast<GenId>(a)),
                                   h.poly_str(self), h.poly_str(left)}));
        if (right != self)
            v.merge(Verdict::fail({"counit law (I(x)eps)delta at " + h.alphabet.name(static_cast<GenId>(a)),
                                   h.poly_str(self), h.poly_str(right)}));
    }

    // Delta and eps are algebra maps
    for (std::size_t a = 0; a < L; ++a)
        for (std::size_t b = 0; b < L; ++b) {
            NCPoly prod = h.normalize(letter(a) * letter(b));
            TensorSquare lhs = h.normalize_slots(h.delta(prod));
            TensorSquare rhs = h.normalize_slots(h.table_delta[a] * h.table_delta[b]);
            if (!(lhs == rhs))
                v.merge(Verdict::fail({"delta multiplicativity at (" + h.alphabet.name(static_cast<GenId>(a)) +
                                           "," + h.alphabet.name(static_cast<GenId>(b)) + ")",
                                       rhs.str(h.alphabet), lhs.str(h.alphabet)}));
            Scalar el = h.counit(prod), er = h.table_eps[a] * h.table_eps[b];
            if (el != er)
                v.merge(Verdict::fail({"eps multiplicativity at (" + h.alphabet.name(static_cast<GenId>(a)) +
                                           "," + h.alphabet.name(static_cast<GenId>(b)) + ")",
                                       er.str(), el.str()}));
        }
    return v;
}

struct PresentedBialgebraData {
    Field field = Field::rationals();
    std::vector<std::string> generators;
    std::vector<NCPoly> relations;
    // delta_gen[g]: (left, right, coeff) with left/right a generator name or "1"
    std::vector<std::vector<std::tuple<std::string, std::string, Scalar>>> delta_gen;
    std::vector<Scalar> eps_gen;
};

struct CoidealViolation : std::runtime_error {
    Verdict verdict;
    explicit CoidealViolation(Verdict v)
        : std::runtime_error("relations are not a coideal: " + v.summary()), verdict(std::move(v)) {}
};

/// Presentation with Delta extended multiplicatively. Construction verifies,
/// at bound D, that every relation r satisfies eps(r)=0 and Delta(r) = 0 in
/// (T/I)⊗(T/I), i.e. both tensor slots reduce away.
inline Host make_presented_bialgebra(const PresentedBialgebraData& data, int D = 4) {
    Host h(Host::Kind::presented, data.field, Alphabet(data.generators));
    std::size_t L = data.generators.size();
    if (data.delta_gen.size() != L || data.eps_gen.size() != L)
        throw std::invalid_argument("delta_gen/eps_gen sizes do not match generators");
    int max_rel_deg = 0;
    for (const auto& r : data.relations) max_rel_deg = std::max(max_rel_deg, r.degree());
    if (D < std::max(2, max_rel_deg))
        throw std::invalid_argument("degree bound too small for the relations");

    h.relations = data.relations;
    h.gen_eps = data.eps_gen;
    h.default_degree = D;
    h.gen_delta.assign(L, TensorSquare(data.field));
    for (std::size_t g = 0; g < L; ++g) {
        TensorSquare d(data.field);
        for (const auto& [l, r, c] : data.delta_gen[g]) {
            Word wl = (l == "1") ? Word{} : Word{h.alphabet.id(l)};
            Word wr = (r == "1") ? Word{} : Word{h.alphabet.id(r)};
            d.add_term(wl, wr, c);
        }
        h.gen_delta[g] = d;
    }

    Verdict v = Verdict::pass();
    for (std::size_t ri = 0; ri < h.relations.size(); ++ri) {
        const NCPoly& r = h.relations[ri];
        Scalar e = h.counit(r);
        if (!e.is_zero())
            v.merge(Verdict::fail({"eps(relation " + std::to_string(ri) + " = " + h.poly_str(r) + ")",
                                   "0", e.str()}));
        TensorSquare dr = h.normalize_slots(h.delta(r), D);
        if (!dr.is_zero())
            v.merge(Verdict::fail({"delta(relation " + std::to_string(ri) + " = " + h.poly_str(r) +
                                       ") mod ideal(x)T + T(x)ideal",
                                   "0", dr.str(h.alphabet)}));
    }
    if (!v.ok()) throw CoidealViolation(std::move(v));
    return h;
}

/// Sweedler components of an element, slots in normal form.
inline TensorSquare delta_eval(const Host& h, const NCPoly& p, int D = -1) {
    return h.normalize_slots(h.delta(p), D);
}

inline Scalar counit_eval(const Host& h, const NCPoly& p) { return h.counit(p); }

// ---- subcoalgebras ---------------------------------------------------------

/// A list of host elements (the unit or single generators) closed under
/// Delta, with the restricted coalgebra structure in indexed form.
struct Subcoalgebra {
    std::vector<std::string> names;
    std::vector<Word> basis;
    std::vector<std::vector<std::tuple<int, int, Scalar>>> delta;  // indices into basis
    std::vector<Scalar> eps;
    std::optional<int> unit_index;

    std::size_t size() const { return basis.size(); }

    int index_of(const Word& w) const {
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (basis[i] == w) return static_cast<int>(i);
        return -1;
    }

    static Subcoalgebra make(const Host& h, const std::vector<std::string>& elements) {
        Subcoalgebra c;
        for (const auto& name : elements) {
            if (name == "1" || name == h.unit_name) {
                c.unit_index = static_cast<int>(c.basis.size());
                c.basis.push_back({});
                c.names.push_back("1");
            } else {
                c.basis.push_back({h.alphabet.id(name)});
                c.names.push_back(name);
            }
        }
        for (const auto& w : c.basis) {
            std::vector<std::tuple<int, int, Scalar>> row;
            for (TensorSquare dw = h.delta_word(w); const auto& [k, coef] : dw.terms()) {
                int a = c.index_of(k.first), b = c.index_of(k.second);
                if (a < 0 || b < 0)
                    throw std::invalid_argument(
                        "not closed under delta: component " + h.alphabet.word_str(k.first) + "(x)" +
                        h.alphabet.word_str(k.second) + " of delta(" + h.alphabet.word_str(w) +
                        ") escapes the span");
                row.emplace_back(a, b, coef);
            }
            c.delta.push_back(std::move(row));
            c.eps.push_back(h.counit(NCPoly::monomial(h.field, w, Scalar::one(h.field))));
        }
        return c;
    }

    /// coordinates of a host element in the C basis; elements are matched as
    /// written, with a fall back to the table normal form for table hosts
    std::vector<Scalar> coords(const Host& h, const NCPoly& p) const {
        std::vector<Scalar> out(basis.size(), Scalar::zero(h.field));
        bool raw_ok = true;
        for (const auto& [w, c] : p.terms()) {
            int i = index_of(w);
            if (i < 0) {
                raw_ok = false;
                break;
            }
            out[static_cast<std::size_t>(i)] = c;
        }
        if (raw_ok) return out;
        if (h.kind != Host::Kind::table)
            throw std::invalid_argument("element escapes the subcoalgebra: " + h.poly_str(p));
        out.assign(basis.size(), Scalar::zero(h.field));
        NCPoly nf = h.normalize(p);
        for (const auto& [w, c] : nf.terms()) {
            int i = index_of(w);
            if (i < 0)
                throw std::invalid_argument("element escapes the subcoalgebra: " + h.poly_str(p));
            out[static_cast<std::size_t>(i)] = c;
        }
        return out;
    }
};

// ---- modules, comodules, Hopf modules --------------------------------------

/// Left action on M = k^n: one n x n matrix per generator (the unit acts as
/// the identity); act(w) for a word is the product of its letters' matrices.
struct ModuleAction {
    Field field = Field::rationals();
    int n = 0;
    std::vector<Matrix> letter_matrix;

    Matrix act_word(const Word& w) const {
        Matrix m = mat_identity(field, static_cast<std::size_t>(n));
        for (GenId g : w) m = mat_mul(m, letter_matrix.at(static_cast<std::size_t>(g)));
        return m;
    }

    Matrix act_poly(const NCPoly& p) const {
        Matrix m = mat_zero(field, static_cast<std::size_t>(n), static_cast<std::size_t>(n));
        for (const auto& [w, c] : p.terms()) m = mat_add(m, mat_scaled(act_word(w), c));
        return m;
    }
};

/// relations act as zero (presented) / products act consistently (table)
inline Verdict validate_module_action(const Host& h, const ModuleAction& act) {
    Verdict v = Verdict::pass();
    if (h.kind == Host::Kind::presented) {
        for (std::size_t ri = 0; ri < h.relations.size(); ++ri) {
            Matrix m = act.act_poly(h.relations[ri]);
            if (!mat_is_zero(m))
                v.merge(Verdict::fail({"action of relation " + h.poly_str(h.relations[ri]), "0", mat_str(m)}));
        }
        return v;
    }
    std::size_t L = h.num_letters();
    for (std::size_t a = 0; a < L; ++a)
        for (std::size_t b = 0; b < L; ++b) {
            Matrix lhs = mat_mul(act.letter_matrix[a], act.letter_matrix[b]);
            Matrix rhs = act.act_poly(h.table_mult[a][b]);
            if (!mat_is_zero(mat_add(lhs, mat_scaled(rhs, -Scalar::one(h.field)))))
                v.merge(Verdict::fail({"representation at (" + h.alphabet.name(static_cast<GenId>(a)) + "," +
                                           h.alphabet.name(static_cast<GenId>(b)) + ")",
                                       mat_str(rhs), mat_str(lhs)}));
        }
    return v;
}

/// Right comodule rho(m_l) = sum_v m_v ⊗ g[v][l].
struct Comodule {
    int n = 0;
    std::vector<std::vector<NCPoly>> g;  // [v][l]
};

inline Verdict validate_comodule(const Host& h, const Comodule& cm, int D = -1) {
    Verdict v = Verdict::pass();
    const Field& f = h.field;
    int n = cm.n;
    for (int l = 0; l < n; ++l) {
        // counit: sum_v eps(g_vl) m_v = m_l
        for (int w = 0; w < n; ++w) {
            Scalar e = h.counit(cm.g[static_cast<std::size_t>(w)][static_cast<std::size_t>(l)]);
            Scalar want = w == l ? Scalar::one(f) : Scalar::zero(f);
            if (e != want)
                v.merge(Verdict::fail({"comodule counit at (m" + std::to_string(w + 1) + ", m" +
                                           std::to_string(l + 1) + ")",
                                       want.str(), e.str()}));
        }
        // coassociativity per output row w
        for (int w = 0; w < n; ++w) {
            TensorSquare lhs(f);
            for (int mid = 0; mid < n; ++mid) {
                const NCPoly& a = cm.g[static_cast<std::size_t>(w)][static_cast<std::size_t>(mid)];
                const NCPoly& b = cm.g[static_cast<std::size_t>(mid)][static_cast<std::size_t>(l)];
                for (const auto& [wa, ca] : a.terms())
                    for (const auto& [wb, cb] : b.terms()) lhs.add_term(wa, wb, ca * cb);
            }
            TensorSquare rhs = h.delta(cm.g[static_cast<std::size_t>(w)][static_cast<std::size_t>(l)]);
            Cmp cmp = h.compare(lhs, rhs, D);
            if (cmp != Cmp::equal) {
                Verdict bad = cmp == Cmp::not_equal
                                  ? Verdict::fail({"comodule coassociativity at (m" + std::to_string(w + 1) +
                                                       ", m" + std::to_string(l + 1) + ")",
                                                   rhs.str(h.alphabet), lhs.str(h.alphabet)})
                                  : Verdict::inconclusive("comodule coassociativity undecided at bound");
                v.merge(bad);
            }
        }
    }
    return v;
}

/// Hopf-module axiom rho(h.m) = sum h_(1).m_(0) ⊗ h_(2) m_(1), checked for h
/// over all words of length <= depth in the generators (both sides are
/// multiplicative in h, so generators suffice; larger depth cross-checks).
inline Verdict check_hopf_module(const Host& h, const ModuleAction& act, const Comodule& cm,
                                 int depth = 1, int D = -1) {
    if (act.n != cm.n) throw std::invalid_argument("dimension mismatch");
    Verdict v = Verdict::pass();
    const Field& f = h.field;
    int n = cm.n;
    std::vector<Word> hs;
    std::function<void(Word&, int)> gen = [&](Word& w, int remaining) {
        if (!w.empty()) hs.push_back(w);
        if (remaining == 0) return;
        for (GenId g = 0; g < static_cast<GenId>(h.num_letters()); ++g) {
            w.push_back(g);
            gen(w, remaining - 1);
            w.pop_back();
        }
    };
    Word scratch;
    gen(scratch, depth);

    for (const Word& hw : hs) {
        Matrix A = act.act_word(hw);
        TensorSquare dh = h.delta_word(hw);
        for (int l = 0; l < n; ++l) {
            for (int w = 0; w < n; ++w) {
                // lhs: rho(h.m_l) row w
                NCPoly lhs(f);
                for (int vv = 0; vv < n; ++vv)
                    lhs += cm.g[static_cast<std::size_t>(w)][static_cast<std::size_t>(vv)].scaled(
                        A[static_cast<std::size_t>(vv)][static_cast<std::size_t>(l)]);
                // rhs: sum over delta(h), coaction of m_l
                NCPoly rhs(f);
                for (const auto& [k, c] : dh.terms()) {
                    Matrix A1 = act.act_word(k.first);
                    NCPoly h2 = NCPoly::monomial(f, k.second, Scalar::one(f));
                    for (int vv = 0; vv < n; ++vv) {
                        Scalar coeff = c * A1[static_cast<std::size_t>(w)][static_cast<std::size_t>(vv)];
                        if (coeff.is_zero()) continue;
                        rhs += (h2 * cm.g[static_cast<std::size_t>(vv)][static_cast<std::size_t>(l)])
                                   .scaled(coeff);
                    }
                }
                Cmp cmp = h.compare(lhs, rhs, D);
                if (cmp == Cmp::not_equal)
                    v.merge(Verdict::fail({"hopf-module axiom at (h=" + h.alphabet.word_str(hw) + ", m" +
                                               std::to_string(l + 1) + "), row m" + std::to_string(w + 1),
                                           h.poly_str(h.normalize(rhs, D)), h.poly_str(h.normalize(lhs, D))}));
                else if (cmp == Cmp::unknown)
                    v.merge(Verdict::inconclusive("hopf-module axiom undecided at bound for h=" +
                                                  h.alphabet.word_str(hw)));
            }
        }
    }
    return v;
}

/// R_(M,.,rho)(m ⊗ n) = sum n_(1).m ⊗ n_(0), as structure constants:
/// x_uv^{ji} = act(g[j][u])[i][v].
inline EndoTensor r_from_hopf_module(const ModuleAction& act, const Comodule& cm) {
    if (act.n != cm.n) throw std::invalid_argument("dimension mismatch");
    int n = cm.n;
    EndoTensor t(act.field, n);
    for (int j = 0; j < n; ++j)
        for (int u = 0; u < n; ++u) {
            Matrix A = act.act_poly(cm.g[static_cast<std::size_t>(j)][static_cast<std::size_t>(u)]);
            for (int i = 0; i < n; ++i)
                for (int v = 0; v < n; ++v)
                    t.at(j, i, u, v) = A[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)];
        }
    return t;
}

/// Does the generator assignment define a bialgebra map from the presented
/// source into the table target? Relations must map to zero, Delta and eps
/// must commute with the assignment on generators.
inline Verdict check_bialgebra_map(const Host& src, const Host& tgt,
                                   const std::map<std::string, NCPoly>& assignment) {
    if (src.kind != Host::Kind::presented)
        throw std::invalid_argument("source must be a presented bialgebra");
    if (tgt.kind != Host::Kind::table)
        throw std::invalid_argument("target must be a table bialgebra");
    std::size_t L = src.num_letters();
    std::vector<NCPoly> img;
    for (std::size_t g = 0; g < L; ++g)
        img.push_back(tgt.normalize(assignment.at(src.alphabet.name(static_cast<GenId>(g)))));

    auto f_word = [&](const Word& w) {
        NCPoly p = tgt.one();
        for (GenId g : w) p = tgt.normalize(p * img[static_cast<std::size_t>(g)]);
        return p;
    };
    auto f_poly = [&](const NCPoly& p) {
        NCPoly out(tgt.field);
        for (const auto& [w, c] : p.terms()) out += f_word(w).scaled(c);
        return out;
    };

    Verdict v = Verdict::pass();
    for (std::size_t ri = 0; ri < src.relations.size(); ++ri) {
        NCPoly image = f_poly(src.relations[ri]);
        if (!image.is_zero())
            v.merge(Verdict::fail({"image of relation " + src.poly_str(src.relations[ri]), "0",
                                   tgt.poly_str(image)}));
    }
    for (std::size_t g = 0; g < L; ++g) {
        TensorSquare lhs = tgt.normalize_slots(tgt.delta(img[g]));
        TensorSquare rhs(tgt.field);
        for (const auto& [k, c] : src.gen_delta[g].terms()) {
            NCPoly fa = f_word(k.first), fb = f_word(k.second);
            for (const auto& [wa, ca] : fa.terms())
                for (const auto& [wb, cb] : fb.terms()) rhs.add_term(wa, wb, c * ca * cb);
        }
        if (!(lhs == rhs))
            v.merge(Verdict::fail({"delta compatibility at " + src.alphabet.name(static_cast<GenId>(g)),
                                   rhs.str(tgt.alphabet), lhs.str(tgt.alphabet)}));
        Scalar el = tgt.counit(img[g]);
        const Scalar& er = src.gen_eps[g];
        if (el != er)
            v.merge(Verdict::fail({"eps compatibility at " + src.alphabet.name(static_cast<GenId>(g)),
                                   er.str(), el.str()}));
    }
    return v;
}

}  // namespace hopfeq
