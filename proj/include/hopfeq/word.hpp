#pragma once

// Noncommutative polynomials: formal linear combinations of words in named
// generators (the tensor algebra T(C)). The empty word is the unit.

#include "hopfeq/field.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace hopfeq {

using GenId = int;
using Word = std::vector<GenId>;

/// Degree-lexicographic order: shorter words first, ties broken by the
/// declared generator order. Normal forms and echelon bases depend on it.
struct DegLexLess {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

inline Word word_concat(const Word& a, const Word& b) {
    Word w = a;
    w.insert(w.end(), b.begin(), b.end());
    return w;
}

class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
        for (std::size_t i = 0; i < names_.size(); ++i) {
            if (names_[i].empty() || names_[i] == "1")
                throw std::invalid_argument("bad generator name: '" + names_[i] + "'");
            if (!index_.emplace(names_[i], static_cast<GenId>(i)).second)
                throw std::invalid_argument("duplicate generator: " + names_[i]);
        }
    }

    GenId id(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) throw std::invalid_argument("unknown generator: " + name);
        return it->second;
    }
    bool has(const std::string& name) const { return index_.count(name) != 0; }
    const std::string& name(GenId g) const { return names_.at(static_cast<std::size_t>(g)); }
    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }

    std::string word_str(const Word& w) const {
        if (w.empty()) return "1";
        std::string s;
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i) s += "*";
            s += name(w[i]);
        }
        return s;
    }

    bool operator==(const Alphabet& o) const { return names_ == o.names_; }

private:
    std::vector<std::string> names_;
    std::map<std::string, GenId> index_;
};

/// Canonical sparse polynomial: words mapped to nonzero coefficients.
class NCPoly {
public:
    using Terms = std::map<Word, Scalar, DegLexLess>;

    explicit NCPoly(const Field& f) : field_(f) {}

    static NCPoly zero(const Field& f) { return NCPoly(f); }
    static NCPoly monomial(const Field& f, Word w, const Scalar& c) {
        NCPoly p(f);
        p.add_term(std::move(w), c);
        return p;
    }
    static NCPoly unit(const Field& f) { return monomial(f, {}, Scalar::one(f)); }
    static NCPoly gen(const Field& f, GenId g) { return monomial(f, {g}, Scalar::one(f)); }

    const Field& field() const { return field_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    int degree() const {  // -1 for the zero polynomial
        return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.size());
    }

    const Word& leading_word() const {
        if (terms_.empty()) throw std::logic_error("leading word of zero");
        return terms_.rbegin()->first;
    }
    const Scalar& leading_coeff() const {
        if (terms_.empty()) throw std::logic_error("leading coeff of zero");
        return terms_.rbegin()->second;
    }

    Scalar coeff(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? Scalar::zero(field_) : it->second;
    }

    void add_term(Word w, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.emplace(std::move(w), c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    NCPoly operator+(const NCPoly& o) const {
        NCPoly r = *this;
        for (const auto& [w, c] : o.terms_) r.add_term(w, c);
        return r;
    }
    NCPoly operator-(const NCPoly& o) const {
        NCPoly r = *this;
        for (const auto& [w, c] : o.terms_) r.add_term(w, -c);
        return r;
    }
    NCPoly operator-() const { return NCPoly::zero(field_) - *this; }

    NCPoly scaled(const Scalar& c) const {
        NCPoly r(field_);
        if (c.is_zero()) return r;
        for (const auto& [w, cw] : terms_) r.add_term(w, cw * c);
        return r;
    }

    /// Multiplication is word concatenation extended bilinearly.
    NCPoly operator*(const NCPoly& o) const {
        NCPoly r(field_);
        for (const auto& [w1, c1] : terms_)
            for (const auto& [w2, c2] : o.terms_)
                r.add_term(word_concat(w1, w2), c1 * c2);
        return r;
    }

    NCPoly& operator+=(const NCPoly& o) { return *this = *this + o; }
    NCPoly& operator-=(const NCPoly& o) { return *this = *this - o; }

    bool operator==(const NCPoly& o) const { return field_ == o.field_ && terms_ == o.terms_; }
    bool operator!=(const NCPoly& o) const { return !(*this == o); }

    std::string str(const Alphabet& a) const {
        if (terms_.empty()) return "0";
        std::string s;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (!s.empty()) s += " + ";
            const auto& [w, c] = *it;
            if (c.is_one() && !w.empty())
                s += a.word_str(w);
            else if (w.empty())
                s += c.str();
            else
                s += c.str() + "*" + a.word_str(w);
        }
        return s;
    }

private:
    Field field_;
    Terms terms_;
};

enum class PolyOp { add, scale, multiply };

/// Spec-level dispatch over the three arithmetic operations.
inline NCPoly poly_arith(PolyOp op, const NCPoly& a, const NCPoly& b) {
    if (a.field() != b.field()) throw std::invalid_argument("field mismatch in poly_arith");
    switch (op) {
        case PolyOp::add: return a + b;
        case PolyOp::multiply: return a * b;
        default: throw std::invalid_argument("scale needs a scalar operand");
    }
}
inline NCPoly poly_arith(PolyOp op, const NCPoly& a, const Scalar& c) {
    if (op != PolyOp::scale) throw std::invalid_argument("scalar operand only for scale");
    return a.scaled(c);
}

}  // namespace hopfeq
