#pragma once

// Structure-constant endomorphisms of M⊗M and M⊗M⊗M, leg embeddings, and
// the operator-level / component-level equation checkers.
//
// Conventions (fixed by reproducing the printed 8x8 example product):
//   * R(m_v ⊗ m_u) = sum_{i,j} x[u][v][j][i] m_i ⊗ m_j, indices 1..n in the
//     mathematical notation x_uv^{ji}, 0-based here.
//   * bases of tensor powers are ordered lexicographically with the leftmost
//     factor most significant; matrix entry (row, col) is the coefficient of
//     output basis element `row` in the image of input basis element `col`.

#include "hopfeq/field.hpp"
#include "hopfeq/linalg.hpp"
#include "hopfeq/verdict.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

namespace hopfeq {

class EndoTensor {
public:
    EndoTensor(const Field& f, int n)
        : field_(f), n_(n), x_(static_cast<std::size_t>(n) * n * n * n, Scalar::zero(f)) {
        if (n < 1) throw std::invalid_argument("dimension must be positive");
    }

    static EndoTensor identity(const Field& f, int n) {
        EndoTensor t(f, n);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) t.at(u, v, u, v) = Scalar::one(f);  // x_uv^{ji} = d_iv d_ju
        return t;
    }

    /// switch map tau(v ⊗ w) = w ⊗ v
    static EndoTensor switch_map(const Field& f, int n) {
        EndoTensor t(f, n);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) t.at(v, u, u, v) = Scalar::one(f);  // x_uv^{ji} = d_iu d_jv
        return t;
    }

    const Field& field() const { return field_; }
    int dim() const { return n_; }

    // x_uv^{ji} with 0-based indices
    Scalar& at(int j, int i, int u, int v) { return x_[idx(j, i, u, v)]; }
    const Scalar& at(int j, int i, int u, int v) const { return x_[idx(j, i, u, v)]; }

    bool operator==(const EndoTensor& o) const {
        return field_ == o.field_ && n_ == o.n_ && x_ == o.x_;
    }
    bool operator!=(const EndoTensor& o) const { return !(*this == o); }

    /// matrix over the lexicographic basis of M⊗M; rows = outputs
    std::vector<std::vector<Scalar>> to_matrix() const {
        int N = n_ * n_;
        std::vector<std::vector<Scalar>> m(static_cast<std::size_t>(N),
                                           std::vector<Scalar>(static_cast<std::size_t>(N), Scalar::zero(field_)));
        for (int j = 0; j < n_; ++j)
            for (int i = 0; i < n_; ++i)
                for (int u = 0; u < n_; ++u)
                    for (int v = 0; v < n_; ++v)
                        m[static_cast<std::size_t>(i * n_ + j)][static_cast<std::size_t>(v * n_ + u)] =
                            at(j, i, u, v);
        return m;
    }

private:
    std::size_t idx(int j, int i, int u, int v) const {
        return static_cast<std::size_t>(((j * n_ + i) * n_ + u) * n_ + v);
    }

    Field field_;
    int n_;
    std::vector<Scalar> x_;
};

/// x_uv^{ji} = m[(i-1)n+j][(v-1)n+u] in 1-based notation.
inline EndoTensor endo_from_matrix(const Field& f, int n, const std::vector<std::vector<Scalar>>& m) {
    std::size_t N = static_cast<std::size_t>(n) * n;
    if (m.size() != N) throw std::invalid_argument("matrix size mismatch");
    for (const auto& row : m)
        if (row.size() != N) throw std::invalid_argument("matrix size mismatch");
    EndoTensor t(f, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v)
                    t.at(j, i, u, v) = m[static_cast<std::size_t>(i * n + j)][static_cast<std::size_t>(v * n + u)];
    return t;
}

/// dense endomorphism of M⊗M⊗M
class TripleEndo {
public:
    TripleEndo(const Field& f, int n)
        : field_(f), n_(n), dim_(n * n * n),
          m_(static_cast<std::size_t>(dim_) * dim_, Scalar::zero(f)) {}

    static TripleEndo identity(const Field& f, int n) {
        TripleEndo t(f, n);
        for (int i = 0; i < t.dim_; ++i) t.at(i, i) = Scalar::one(f);
        return t;
    }

    const Field& field() const { return field_; }
    int n() const { return n_; }
    int dim() const { return dim_; }

    Scalar& at(int row, int col) { return m_[static_cast<std::size_t>(row) * dim_ + col]; }
    const Scalar& at(int row, int col) const { return m_[static_cast<std::size_t>(row) * dim_ + col]; }

    TripleEndo operator*(const TripleEndo& o) const {
        TripleEndo r(field_, n_);
        for (int i = 0; i < dim_; ++i)
            for (int k = 0; k < dim_; ++k) {
                const Scalar& a = at(i, k);
                if (a.is_zero()) continue;
                for (int j = 0; j < dim_; ++j) {
                    const Scalar& b = o.at(k, j);
                    if (!b.is_zero()) r.at(i, j) += a * b;
                }
            }
        return r;
    }

    bool operator==(const TripleEndo& o) const {
        return field_ == o.field_ && n_ == o.n_ && m_ == o.m_;
    }

private:
    Field field_;
    int n_, dim_;
    std::vector<Scalar> m_;
};

/// R^{12} = R⊗I, R^{23} = I⊗R, R^{13} = (I⊗tau)(R⊗I)(I⊗tau).
inline TripleEndo leg_embed(const EndoTensor& R, int legs) {
    if (legs != 12 && legs != 13 && legs != 23)
        throw std::invalid_argument("legs must be 12, 13 or 23");
    int n = R.dim();
    TripleEndo t(R.field(), n);
    auto ix = [n](int a, int b, int c) { return (a * n + b) * n + c; };
    for (int s = 0; s < n; ++s)  // spectator factor
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int u = 0; u < n; ++u)
                    for (int v = 0; v < n; ++v) {
                        const Scalar& c = R.at(j, i, u, v);
                        if (c.is_zero()) continue;
                        switch (legs) {
                            case 12: t.at(ix(i, j, s), ix(v, u, s)) += c; break;
                            case 23: t.at(ix(s, i, j), ix(s, v, u)) += c; break;
                            default: t.at(ix(i, s, j), ix(v, s, u)) += c; break;
                        }
                    }
    return t;
}

enum class EquationKind { hopf, qybe, inverse_eq, commute13, mixed };

inline const char* equation_name(EquationKind k) {
    switch (k) {
        case EquationKind::hopf: return "hopf";
        case EquationKind::qybe: return "qybe";
        case EquationKind::inverse_eq: return "inverse-eq";
        case EquationKind::commute13: return "commute13";
        default: return "mixed";
    }
}

namespace detail {
inline std::string column_str(const TripleEndo& t, int col) {
    int n = t.n();
    std::string s;
    for (int row = 0; row < t.dim(); ++row) {
        const Scalar& c = t.at(row, col);
        if (c.is_zero()) continue;
        if (!s.empty()) s += " + ";
        int a = row / (n * n), b = (row / n) % n, d = row % n;
        std::string basis = "m" + std::to_string(a + 1) + "*m" + std::to_string(b + 1) + "*m" + std::to_string(d + 1);
        s += c.is_one() ? basis : c.str() + "*" + basis;
    }
    return s.empty() ? "0" : s;
}

inline Verdict compare_triple(const TripleEndo& lhs, const TripleEndo& rhs, const char* what) {
    int n = lhs.n();
    for (int col = 0; col < lhs.dim(); ++col) {
        for (int row = 0; row < lhs.dim(); ++row) {
            if (lhs.at(row, col) != rhs.at(row, col)) {
                int a = col / (n * n), b = (col / n) % n, c = col % n;
                Witness w;
                w.location = std::string(what) + " on basis triple (m" + std::to_string(a + 1) + ",m" +
                             std::to_string(b + 1) + ",m" + std::to_string(c + 1) + ")";
                w.expected = column_str(rhs, col);
                w.actual = column_str(lhs, col);
                return Verdict::fail(std::move(w));
            }
        }
    }
    return Verdict::pass();
}
}  // namespace detail

/// Operator-level checker. `hopf`: R12 R23 = R23 R13 R12; `qybe`:
/// R12 R13 R23 = R23 R13 R12; `inverse_eq`: S12 S13 S23 = S23 S12;
/// `commute13`: R12 R13 = R13 R12; `mixed` (R,S): R23 S13 S12 = S12 R23.
inline Verdict check_equation(EquationKind kind, const EndoTensor& R, const EndoTensor* S = nullptr) {
    if (kind == EquationKind::mixed) {
        if (!S) throw std::invalid_argument("mixed equation needs a second tensor");
        if (S->field() != R.field() || S->dim() != R.dim())
            throw std::invalid_argument("dimension/field mismatch");
    }
    TripleEndo r12 = leg_embed(R, 12), r13 = leg_embed(R, 13), r23 = leg_embed(R, 23);
    switch (kind) {
        case EquationKind::hopf:
            return detail::compare_triple(r12 * r23, r23 * r13 * r12, "R12R23 = R23R13R12");
        case EquationKind::qybe:
            return detail::compare_triple(r12 * r13 * r23, r23 * r13 * r12, "R12R13R23 = R23R13R12");
        case EquationKind::inverse_eq:
            return detail::compare_triple(r12 * r13 * r23, r23 * r12, "S12S13S23 = S23S12");
        case EquationKind::commute13:
            return detail::compare_triple(r12 * r13, r13 * r12, "R12R13 = R13R12");
        case EquationKind::mixed: {
            TripleEndo s12 = leg_embed(*S, 12), s13 = leg_embed(*S, 13);
            return detail::compare_triple(r23 * s13 * s12, s12 * r23, "R23S13S12 = S12R23");
        }
    }
    throw std::logic_error("unreachable");
}

namespace detail {
/// sum_{u,v,b} x_uv^{ji} y_kb^{up} y_lq^{vb}  vs  sum_a x_kl^{ja} y_aq^{ip}
inline Verdict component_mixed(const EndoTensor& X, const EndoTensor& Y, const char* tag) {
    int n = X.dim();
    const Field& f = X.field();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    for (int p = 0; p < n; ++p)
                        for (int q = 0; q < n; ++q) {
                            Scalar lhs = Scalar::zero(f), rhs = Scalar::zero(f);
                            for (int u = 0; u < n; ++u)
                                for (int v = 0; v < n; ++v)
                                    for (int b = 0; b < n; ++b)
                                        lhs += X.at(j, i, u, v) * Y.at(u, p, k, b) * Y.at(v, b, l, q);
                            for (int a = 0; a < n; ++a) rhs += X.at(j, a, k, l) * Y.at(i, p, a, q);
                            if (lhs != rhs) {
                                Witness w;
                                w.location = std::string(tag) + " at (i,j,k,l,p,q)=(" + std::to_string(i + 1) +
                                             "," + std::to_string(j + 1) + "," + std::to_string(k + 1) + "," +
                                             std::to_string(l + 1) + "," + std::to_string(p + 1) + "," +
                                             std::to_string(q + 1) + ")";
                                w.expected = rhs.str();
                                w.actual = lhs.str();
                                return Verdict::fail(std::move(w));
                            }
                        }
    return Verdict::pass();
}
}  // namespace detail

/// Componentwise Hopf check; agrees with check_equation(hopf, R) everywhere.
inline Verdict component_check_hopf(const EndoTensor& R) {
    return detail::component_mixed(R, R, "component hopf identity");
}

/// Componentwise form of the mixed equation R23 S13 S12 = S12 R23.
inline Verdict component_check_mixed(const EndoTensor& R, const EndoTensor& S) {
    if (S.field() != R.field() || S.dim() != R.dim())
        throw std::invalid_argument("dimension/field mismatch");
    return detail::component_mixed(R, S, "component mixed identity");
}

/// R^{-1}; this is the y_uv^{ji} family paired with R in the mixed identity.
/// Throws SingularMatrix naming the rank when R is not bijective.
inline EndoTensor invert_endo(const EndoTensor& R) {
    return endo_from_matrix(R.field(), R.dim(), mat_inverse(R.field(), R.to_matrix()));
}

// ---- exhaustive search over a prime field ---------------------------------

constexpr std::uint64_t kSearchGuard = std::uint64_t{1} << 24;

/// p^(n^4), or nullopt on overflow past the guard range.
inline std::optional<std::uint64_t> endo_candidate_count(const Field& f, int n) {
    std::uint64_t p = f.modulus(), total = 1;
    int entries = n * n * n * n;
    for (int i = 0; i < entries; ++i) {
        if (total > kSearchGuard * 4) return std::nullopt;
        total *= p;
    }
    return total;
}

/// Candidate `index` encoded base p, most significant digit first, over the
/// n^2 x n^2 matrix entries in row-major order.
inline EndoTensor endo_from_index(const Field& f, int n, std::uint64_t index) {
    int N = n * n;
    std::vector<std::vector<Scalar>> m(static_cast<std::size_t>(N),
                                       std::vector<Scalar>(static_cast<std::size_t>(N), Scalar::zero(f)));
    std::uint64_t p = f.modulus();
    for (int e = N * N - 1; e >= 0; --e) {
        std::uint64_t digit = index % p;
        index /= p;
        m[static_cast<std::size_t>(e / N)][static_cast<std::size_t>(e % N)] =
            Scalar::from_int(f, static_cast<long long>(digit));
    }
    return endo_from_matrix(f, n, m);
}

struct SearchRange {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;  // exclusive
};

/// Streams every candidate in the range through `fn(index, tensor)`.
/// Rejects ranges above the 2^24 guard.
inline void for_each_endo(const Field& f, int n, const SearchRange& range,
                          const std::function<void(std::uint64_t, const EndoTensor&)>& fn) {
    if (f.kind() != FieldKind::prime_field)
        throw std::invalid_argument("search requires a prime field");
    if (range.hi < range.lo || range.hi - range.lo > kSearchGuard)
        throw std::invalid_argument("search range too large (guard 2^24 candidates)");
    for (std::uint64_t idx = range.lo; idx < range.hi; ++idx) fn(idx, endo_from_index(f, n, idx));
}

/// All tensors in the range passing check_equation(kind), in index order.
inline std::vector<EndoTensor> search_endos(const Field& f, int n, EquationKind kind,
                                            std::optional<SearchRange> range = std::nullopt) {
    if (!range) {
        auto total = endo_candidate_count(f, n);
        if (!total || *total > kSearchGuard)
            throw std::invalid_argument("search space too large (guard 2^24 candidates); pass a range");
        range = SearchRange{0, *total};
    }
    std::vector<EndoTensor> hits;
    for_each_endo(f, n, *range, [&](std::uint64_t, const EndoTensor& t) {
        if (check_equation(kind, t).ok()) hits.push_back(t);
    });
    return hits;
}

}  // namespace hopfeq
