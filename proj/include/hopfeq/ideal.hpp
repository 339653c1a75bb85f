#pragma once

// Degree-truncated two-sided ideals: the echelonized span of all w1*r*w2 of
// degree <= D. Membership at bound D is definitive for "yes" and bounded
// evidence only for "no" (the relations may be inhomogeneous, so the
// quotient is filtered, not graded). No Groebner completion.

#include "hopfeq/word.hpp"

#include <optional>
#include <stdexcept>

namespace hopfeq {

struct DegreeOverflow : std::runtime_error {
    explicit DegreeOverflow(int deg, int bound)
        : std::runtime_error("degree " + std::to_string(deg) + " exceeds ideal bound " +
                             std::to_string(bound)) {}
};

/// One summand of a membership certificate: coeff * w1 * relations[index] * w2.
struct CertTerm {
    Word left;
    std::size_t rel_index;
    Word right;
    Scalar coeff;
};

class IdealBasis {
public:
    IdealBasis(const Field& f, std::size_t alphabet_size, std::vector<NCPoly> relations, int degree_bound)
        : field_(f), nletters_(alphabet_size), relations_(std::move(relations)), degree_(degree_bound) {
        int max_rel_deg = 0;
        for (const auto& r : relations_) max_rel_deg = std::max(max_rel_deg, r.degree());
        if (degree_ < max_rel_deg)
            throw std::invalid_argument("degree bound below max relation degree");
        build();
    }

    int degree_bound() const { return degree_; }
    const std::vector<NCPoly>& relations() const { return relations_; }

    /// Echelon rows, monic, distinct leading words, fully inter-reduced;
    /// returned in increasing leading-word order.
    std::vector<NCPoly> elements() const {
        std::vector<NCPoly> out;
        for (const auto& [w, row] : rows_) out.push_back(row.poly);
        return out;
    }

    /// Canonical remainder: no word of the result is a leading word of the
    /// basis. Idempotent and linear.
    NCPoly reduce(const NCPoly& p) const {
        return reduce_with_cert(p, nullptr);
    }

    struct Membership {
        bool yes;
        int bound;
        std::vector<CertTerm> certificate;  // empty unless yes
        NCPoly remainder;
    };

    Membership member(const NCPoly& p) const {
        std::vector<CertTerm> cert;
        NCPoly rem = reduce_with_cert(p, &cert);
        if (rem.is_zero()) return Membership{true, degree_, std::move(cert), rem};
        return Membership{false, degree_, {}, rem};
    }

private:
    struct Row {
        NCPoly poly;
        std::vector<CertTerm> provenance;  // poly == sum of these products
    };

    void build() {
        // deterministic insertion order: padding total degree, then left word,
        // then right word, then relation index
        for (int pad = 0; pad <= degree_; ++pad) {
            for (int l1 = 0; l1 <= pad; ++l1) {
                int l2 = pad - l1;
                for_each_word(l1, [&](const Word& w1) {
                    for_each_word(l2, [&](const Word& w2) {
                        for (std::size_t ri = 0; ri < relations_.size(); ++ri) {
                            const NCPoly& r = relations_[ri];
                            if (r.is_zero() || r.degree() + pad > degree_) continue;
                            NCPoly cand = NCPoly::monomial(field_, w1, Scalar::one(field_)) * r *
                                          NCPoly::monomial(field_, w2, Scalar::one(field_));
                            Row row{std::move(cand), {CertTerm{w1, ri, w2, Scalar::one(field_)}}};
                            insert(std::move(row));
                        }
                    });
                });
            }
        }
    }

    template <typename Fn>
    void for_each_word(int len, Fn&& fn) const {
        Word w(static_cast<std::size_t>(len), 0);
        if (len == 0) {
            fn(w);
            return;
        }
        while (true) {
            fn(w);
            int i = len - 1;
            while (i >= 0 && w[i] == static_cast<GenId>(nletters_) - 1) {
                w[i] = 0;
                --i;
            }
            if (i < 0) break;
            ++w[i];
        }
    }

    static void add_cert(std::vector<CertTerm>& into, const std::vector<CertTerm>& from, const Scalar& c) {
        for (const auto& t : from) into.push_back(CertTerm{t.left, t.rel_index, t.right, t.coeff * c});
    }

    // subtract coeff * row from (p, cert) for every reducible leading word
    void reduce_row(Row& r) const {
        while (!r.poly.is_zero()) {
            // find the deglex-greatest reducible word
            const Word* hit = nullptr;
            for (auto it = r.poly.terms().rbegin(); it != r.poly.terms().rend(); ++it) {
                if (rows_.count(it->first)) {
                    hit = &it->first;
                    break;
                }
            }
            if (!hit) return;
            const Row& b = rows_.at(*hit);
            Scalar c = r.poly.coeff(*hit);
            r.poly -= b.poly.scaled(c);
            add_cert(r.provenance, b.provenance, c);
        }
    }

    void insert(Row row) {
        reduce_row(row);
        if (row.poly.is_zero()) return;
        Scalar inv = row.poly.leading_coeff().inverse();
        row.poly = row.poly.scaled(inv);
        for (auto& t : row.provenance) t.coeff *= inv;
        Word lead = row.poly.leading_word();
        // back-reduce existing rows against the new leading word
        for (auto& [w, r] : rows_) {
            Scalar c = r.poly.coeff(lead);
            if (!c.is_zero()) {
                r.poly -= row.poly.scaled(c);
                add_cert(r.provenance, row.provenance, c);
            }
        }
        rows_.emplace(std::move(lead), std::move(row));
    }

    NCPoly reduce_with_cert(const NCPoly& p, std::vector<CertTerm>* cert) const {
        if (p.degree() > degree_) throw DegreeOverflow(p.degree(), degree_);
        NCPoly q = p;
        while (!q.is_zero()) {
            const Word* hit = nullptr;
            for (auto it = q.terms().rbegin(); it != q.terms().rend(); ++it) {
                if (rows_.count(it->first)) {
                    hit = &it->first;
                    break;
                }
            }
            if (!hit) break;
            const Row& b = rows_.at(*hit);
            Scalar c = q.coeff(*hit);
            q -= b.poly.scaled(c);
            if (cert) add_cert(*cert, b.provenance, c);
        }
        return q;
    }

    Field field_;
    std::size_t nletters_;
    std::vector<NCPoly> relations_;
    int degree_;
    std::map<Word, Row, DegLexLess> rows_;
};

struct MembershipResult {
    bool yes;
    int bound;
    std::vector<CertTerm> certificate;
};

/// yes iff p reduces to zero modulo the truncated span at bound D.
inline MembershipResult ideal_member(const NCPoly& p, const Field& f, std::size_t alphabet_size,
                                     const std::vector<NCPoly>& relations, int D) {
    if (p.degree() > D) throw DegreeOverflow(p.degree(), D);
    IdealBasis ib(f, alphabet_size, relations, D);
    auto m = ib.member(p);
    return MembershipResult{m.yes, D, std::move(m.certificate)};
}

}  // namespace hopfeq
