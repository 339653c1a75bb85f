#pragma once

// Hopf elements R = sum R1 ⊗ R2 in A ⊗ H for a subalgebra A of H:
//   (HE1)  sum Delta(R1) ⊗ R2 = R13 R23
//   (HE2)  sum eps(R1) R2 = 1
//   (HE3)  Delta^cop(a) R = R (1 ⊗ a)   for every a in A
// with the induced operator, the integral t = sum R1 eps(R2), and the
// quasitriangular axioms (QT1)-(QT5) as the contrast checker.

#include "hopfeq/host.hpp"

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace hopfeq {

struct TensorElement {
    HostPtr host;
    std::vector<std::string> subalgebra_gens;  // generating letters of A
    TensorSquare elt;

    TensorElement(HostPtr h, std::vector<std::string> gens, TensorSquare e)
        : host(std::move(h)), subalgebra_gens(std::move(gens)), elt(std::move(e)) {}
};

/// every first-slot word is built from A-generators only
inline Verdict check_first_slot_in_subalgebra(const TensorElement& te) {
    const Host& h = *te.host;
    std::vector<bool> allowed(h.num_letters(), false);
    for (const auto& name : te.subalgebra_gens) allowed[static_cast<std::size_t>(h.alphabet.id(name))] = true;
    Verdict v = Verdict::pass();
    for (const auto& [k, c] : te.elt.terms())
        for (GenId g : k.first)
            if (!allowed[static_cast<std::size_t>(g)]) {
                v.merge(Verdict::fail({"first tensor slot " + h.alphabet.word_str(k.first),
                                       "word over the A-generators", h.alphabet.name(g)}));
                break;
            }
    return v;
}

namespace detail {

inline Verdict cmp_verdict(const Host& h, Cmp cmp, const std::string& loc, const std::string& want,
                           const std::string& got) {
    if (cmp == Cmp::equal) return Verdict::pass();
    if (cmp == Cmp::not_equal) return Verdict::fail({loc, want, got});
    return Verdict::inconclusive(loc + " undecided at degree bound", {{loc, want, got}});
}

inline TensorTriple embed13(const Field& f, const TensorSquare& r) {
    TensorTriple t(f);
    for (const auto& [k, c] : r.terms()) t.add_term(k.first, {}, k.second, c);
    return t;
}
inline TensorTriple embed23(const Field& f, const TensorSquare& r) {
    TensorTriple t(f);
    for (const auto& [k, c] : r.terms()) t.add_term({}, k.first, k.second, c);
    return t;
}
inline TensorTriple embed12(const Field& f, const TensorSquare& r) {
    TensorTriple t(f);
    for (const auto& [k, c] : r.terms()) t.add_term(k.first, k.second, {}, c);
    return t;
}

inline TensorTriple delta_first_slot(const Host& h, const TensorSquare& r) {
    TensorTriple t(h.field);
    for (const auto& [k, c] : r.terms())
        for (TensorSquare dd = h.delta_word(k.first); const auto& [d, cc] : dd.terms())
            t.add_term(d.first, d.second, k.second, c * cc);
    return t;
}

inline TensorTriple delta_second_slot(const Host& h, const TensorSquare& r) {
    TensorTriple t(h.field);
    for (const auto& [k, c] : r.terms())
        for (TensorSquare dd = h.delta_word(k.second); const auto& [d, cc] : dd.terms())
            t.add_term(k.first, d.first, d.second, c * cc);
    return t;
}

}  // namespace detail

inline Verdict check_he1(const TensorElement& te, int D = -1) {
    const Host& h = *te.host;
    TensorTriple lhs = detail::delta_first_slot(h, te.elt);
    TensorTriple rhs = detail::embed13(h.field, te.elt) * detail::embed23(h.field, te.elt);
    return detail::cmp_verdict(h, h.compare(lhs, rhs, D), "(HE1) sum Delta(R1)(x)R2 = R13R23",
                               h.normalize_slots(rhs, D).str(h.alphabet),
                               h.normalize_slots(lhs, D).str(h.alphabet));
}

inline Verdict check_he2(const TensorElement& te, int D = -1) {
    const Host& h = *te.host;
    NCPoly lhs(h.field);
    for (const auto& [k, c] : te.elt.terms())
        lhs.add_term(k.second, c * h.counit(NCPoly::monomial(h.field, k.first, Scalar::one(h.field))));
    return detail::cmp_verdict(h, h.compare(lhs, h.one(), D), "(HE2) sum eps(R1)R2 = 1", "1",
                               h.poly_str(h.normalize(lhs, D)));
}

inline Verdict check_he3(const TensorElement& te, int D = -1) {
    const Host& h = *te.host;
    Verdict v = Verdict::pass();
    for (const auto& name : te.subalgebra_gens) {
        GenId a = h.alphabet.id(name);
        TensorSquare dcop(h.field);
        for (TensorSquare da = h.delta_word({a}); const auto& [k, c] : da.terms())
            dcop.add_term(k.second, k.first, c);
        TensorSquare lhs = dcop * te.elt;
        TensorSquare one_a(h.field);
        one_a.add_term({}, {a}, Scalar::one(h.field));
        TensorSquare rhs = te.elt * one_a;
        v.merge(detail::cmp_verdict(h, h.compare(lhs, rhs, D), "(HE3) at a=" + name,
                                    h.normalize_slots(rhs, D).str(h.alphabet),
                                    h.normalize_slots(lhs, D).str(h.alphabet)));
    }
    return v;
}

/// HE1-HE3 (HE3 on the A-generators; both sides are multiplicative in a).
inline Verdict check_hopf_element(const TensorElement& te, int D = -1) {
    Verdict v = check_first_slot_in_subalgebra(te);
    v.merge(check_he1(te, D));
    v.merge(check_he2(te, D));
    v.merge(check_he3(te, D));
    return v;
}

/// R23 R13 R12 = R12 R23 in A ⊗ H ⊗ H.
inline Verdict check_identity_101(const TensorElement& te, int D = -1) {
    const Host& h = *te.host;
    const Field& f = h.field;
    TensorTriple lhs = detail::embed23(f, te.elt) * detail::embed13(f, te.elt) * detail::embed12(f, te.elt);
    TensorTriple rhs = detail::embed12(f, te.elt) * detail::embed23(f, te.elt);
    return detail::cmp_verdict(h, h.compare(lhs, rhs, D), "R23R13R12 = R12R23",
                               h.normalize_slots(rhs, D).str(h.alphabet),
                               h.normalize_slots(lhs, D).str(h.alphabet));
}

/// The operator m ⊗ n -> sum R1.m ⊗ R2.n of a left module (M, .).
inline EndoTensor r_from_element(const TensorElement& te, const ModuleAction& act) {
    const Field& f = te.host->field;
    int n = act.n;
    EndoTensor t(f, n);
    for (const auto& [k, c] : te.elt.terms()) {
        Matrix A1 = act.act_word(k.first), A2 = act.act_word(k.second);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int u = 0; u < n; ++u)
                    for (int v = 0; v < n; ++v)
                        t.at(j, i, u, v) += c * A1[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)] *
                                            A2[static_cast<std::size_t>(j)][static_cast<std::size_t>(u)];
    }
    return t;
}

/// t = sum R1 eps(R2); checks a.t = eps(a) t on the A-generators and t^2 = t.
inline std::pair<NCPoly, Verdict> integral_t(const TensorElement& te, int D = -1) {
    const Host& h = *te.host;
    const Field& f = h.field;
    NCPoly t(f);
    for (const auto& [k, c] : te.elt.terms())
        t.add_term(k.first, c * h.counit(NCPoly::monomial(f, k.second, Scalar::one(f))));
    t = h.normalize(t, D);
    Verdict v = Verdict::pass();
    for (const auto& name : te.subalgebra_gens) {
        NCPoly a = h.gen_poly(name);
        NCPoly lhs = a * t;
        NCPoly rhs = t.scaled(h.counit(a));
        v.merge(detail::cmp_verdict(h, h.compare(lhs, rhs, D), "left-integral law a.t = eps(a)t at a=" + name,
                                    h.poly_str(h.normalize(rhs, D)), h.poly_str(h.normalize(lhs, D))));
    }
    v.merge(detail::cmp_verdict(h, h.compare(t * t, t, D), "idempotence t^2 = t", h.poly_str(t),
                                h.poly_str(h.normalize(t * t, D))));
    return {t, v};
}

/// Per-axiom verdicts for (QT1)-(QT5); QT5 is checked on the generators
/// (both sides are multiplicative in h).
inline std::array<std::pair<std::string, Verdict>, 5> check_quasitriangular(HostPtr host,
                                                                            const TensorSquare& r,
                                                                            int D = -1) {
    const Host& h = *host;
    const Field& f = h.field;
    std::array<std::pair<std::string, Verdict>, 5> out;

    TensorTriple qt1_lhs = detail::delta_first_slot(h, r);
    TensorTriple qt1_rhs = detail::embed13(f, r) * detail::embed23(f, r);
    out[0] = {"QT1", detail::cmp_verdict(h, h.compare(qt1_lhs, qt1_rhs, D),
                                         "(QT1) sum Delta(R1)(x)R2 = R13R23",
                                         h.normalize_slots(qt1_rhs, D).str(h.alphabet),
                                         h.normalize_slots(qt1_lhs, D).str(h.alphabet))};

    NCPoly qt2(f);
    for (const auto& [k, c] : r.terms())
        qt2.add_term(k.second, c * h.counit(NCPoly::monomial(f, k.first, Scalar::one(f))));
    out[1] = {"QT2", detail::cmp_verdict(h, h.compare(qt2, h.one(), D), "(QT2) sum eps(R1)R2 = 1", "1",
                                         h.poly_str(h.normalize(qt2, D)))};

    TensorTriple qt3_lhs = detail::delta_second_slot(h, r);
    TensorTriple qt3_rhs = detail::embed13(f, r) * detail::embed12(f, r);
    out[2] = {"QT3", detail::cmp_verdict(h, h.compare(qt3_lhs, qt3_rhs, D),
                                         "(QT3) sum R1(x)Delta(R2) = R13R12",
                                         h.normalize_slots(qt3_rhs, D).str(h.alphabet),
                                         h.normalize_slots(qt3_lhs, D).str(h.alphabet))};

    NCPoly qt4(f);
    for (const auto& [k, c] : r.terms())
        qt4.add_term(k.first, c * h.counit(NCPoly::monomial(f, k.second, Scalar::one(f))));
    out[3] = {"QT4", detail::cmp_verdict(h, h.compare(qt4, h.one(), D), "(QT4) sum R1 eps(R2) = 1", "1",
                                         h.poly_str(h.normalize(qt4, D)))};

    Verdict qt5 = Verdict::pass();
    for (GenId g = 0; g < static_cast<GenId>(h.num_letters()); ++g) {
        TensorSquare dh = h.delta_word({g}), dcop(f);
        for (const auto& [k, c] : dh.terms()) dcop.add_term(k.second, k.first, c);
        TensorSquare lhs = dcop * r, rhs = r * dh;
        qt5.merge(detail::cmp_verdict(h, h.compare(lhs, rhs, D),
                                      "(QT5) Delta^cop(h)R = R Delta(h) at h=" + h.alphabet.name(g),
                                      h.normalize_slots(rhs, D).str(h.alphabet),
                                      h.normalize_slots(lhs, D).str(h.alphabet)));
    }
    out[4] = {"QT5", qt5};
    return out;
}

}  // namespace hopfeq
