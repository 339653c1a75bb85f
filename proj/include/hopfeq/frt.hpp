#pragma once

// The FRT-type construction: comatrix coalgebra on symbols c_ij with
// Delta(c_jk) = sum_u c_ju ⊗ c_uk, the chi(i,j,k,l) relations extracted from
// a structure-constant tensor, the bialgebra B(R) they present, and the
// canonical comodule rho(m_l) = sum_v m_v ⊗ c_vl.

#include "hopfeq/endo.hpp"
#include "hopfeq/host.hpp"

#include <memory>
#include <string>
#include <vector>

namespace hopfeq {

inline std::vector<std::string> comatrix_names(int n) {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) names.push_back("c" + std::to_string(i) + std::to_string(j));
    return names;
}

inline GenId comatrix_gen(int n, int i, int j) { return i * n + j; }  // 0-based

inline PresentedBialgebraData comatrix_presentation(const Field& f, int n) {
    PresentedBialgebraData d;
    d.field = f;
    d.generators = comatrix_names(n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            std::vector<std::tuple<std::string, std::string, Scalar>> row;
            for (int u = 0; u < n; ++u)
                row.emplace_back(d.generators[static_cast<std::size_t>(comatrix_gen(n, j, u))],
                                 d.generators[static_cast<std::size_t>(comatrix_gen(n, u, k))],
                                 Scalar::one(f));
            d.delta_gen.push_back(std::move(row));
            d.eps_gen.push_back(j == k ? Scalar::one(f) : Scalar::zero(f));
        }
    return d;
}

/// The free bialgebra T(C) on the comatrix coalgebra (no relations).
inline Host comatrix_free_bialgebra(const Field& f, int n, int D = 4) {
    return make_presented_bialgebra(comatrix_presentation(f, n), D);
}

/// The comatrix coalgebra of order n, as a subcoalgebra view over T(C).
inline Subcoalgebra comatrix_coalgebra(const Host& host_over_comatrix_gens, int n) {
    return Subcoalgebra::make(host_over_comatrix_gens, comatrix_names(n));
}

/// chi(i,j,k,l) = sum_{u,v} x_uv^{ji} c_uk c_vl - sum_a x_kl^{ja} c_ia,
/// indexed by (i,j,k,l), all 0-based, flattened in that order.
inline std::vector<NCPoly> chi_relations(const EndoTensor& R) {
    const Field& f = R.field();
    int n = R.dim();
    std::vector<NCPoly> chis;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    NCPoly chi(f);
                    for (int u = 0; u < n; ++u)
                        for (int v = 0; v < n; ++v)
                            chi.add_term({comatrix_gen(n, u, k), comatrix_gen(n, v, l)}, R.at(j, i, u, v));
                    for (int a = 0; a < n; ++a)
                        chi.add_term({comatrix_gen(n, i, a)}, -R.at(j, a, k, l));
                    chis.push_back(std::move(chi));
                }
    return chis;
}

inline std::string chi_name(int n, std::size_t flat_index) {
    int l = static_cast<int>(flat_index) % n;
    int k = static_cast<int>(flat_index) / n % n;
    int j = static_cast<int>(flat_index) / (n * n) % n;
    int i = static_cast<int>(flat_index) / (n * n * n);
    return "chi(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," + std::to_string(k + 1) +
           "," + std::to_string(l + 1) + ")";
}

/// B(R): comatrix generators modulo the chi relations. Construction verifies
/// the coideal property of the relations at bound D.
inline Host build_br(const EndoTensor& R, int D = 4) {
    PresentedBialgebraData d = comatrix_presentation(R.field(), R.dim());
    d.relations = chi_relations(R);
    return make_presented_bialgebra(d, D);
}

/// rho(m_l) = sum_v m_v ⊗ c_vl over B(R) (or T(C)).
inline Comodule canonical_comodule(const Host& br, int n) {
    Comodule cm;
    cm.n = n;
    cm.g.assign(static_cast<std::size_t>(n), std::vector<NCPoly>(static_cast<std::size_t>(n), NCPoly::zero(br.field)));
    for (int v = 0; v < n; ++v)
        for (int l = 0; l < n; ++l)
            cm.g[static_cast<std::size_t>(v)][static_cast<std::size_t>(l)] =
                br.gen_poly(comatrix_gen(n, v, l));
    return cm;
}

}  // namespace hopfeq
