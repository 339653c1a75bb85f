#pragma once

// Exact field arithmetic: the rationals with arbitrary-precision integers,
// and prime fields GF(p) with canonical residues. No floating point anywhere.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hopfeq {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

enum class FieldKind { rationals, prime_field };

inline bool is_prime_u64(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

/// Arithmetic context: the rationals, or GF(p) for a prime p < 2^31.
class Field {
public:
    static Field rationals() { return Field(FieldKind::rationals, 0); }

    static Field gf(std::uint64_t p) {
        if (p >= (std::uint64_t{1} << 31))
            throw std::invalid_argument("modulus too large (need p < 2^31)");
        if (!is_prime_u64(p))
            throw std::invalid_argument("modulus not prime: " + std::to_string(p));
        return Field(FieldKind::prime_field, p);
    }

    FieldKind kind() const { return kind_; }
    std::uint64_t modulus() const { return p_; }
    std::uint64_t characteristic() const { return p_; }  // 0 for the rationals

    bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }
    bool operator!=(const Field& o) const { return !(*this == o); }

    std::string name() const {
        return kind_ == FieldKind::rationals ? "Q" : "GF(" + std::to_string(p_) + ")";
    }

private:
    Field(FieldKind k, std::uint64_t p) : kind_(k), p_(p) {}
    FieldKind kind_;
    std::uint64_t p_;
};

/// Exact field element. Rational values are kept reduced with positive
/// denominator (cpp_rational canonicalizes); prime-field values are
/// residues in [0, p).
class Scalar {
public:
    Scalar() : field_(Field::rationals()) {}
    explicit Scalar(const Field& f) : field_(f) {}

    static Scalar zero(const Field& f) { return Scalar(f); }

    static Scalar one(const Field& f) {
        Scalar s(f);
        if (f.kind() == FieldKind::prime_field)
            s.res_ = 1 % f.modulus();
        else
            s.rat_ = 1;
        return s;
    }

    static Scalar from_int(const Field& f, long long v) {
        Scalar s(f);
        if (f.kind() == FieldKind::prime_field) {
            long long p = static_cast<long long>(f.modulus());
            long long r = v % p;
            if (r < 0) r += p;
            s.res_ = static_cast<std::uint64_t>(r);
        } else {
            s.rat_ = v;
        }
        return s;
    }

    static Scalar from_rational(const Field& f, const BigRational& q) {
        if (f.kind() != FieldKind::rationals)
            throw std::invalid_argument("rational literal in a prime field");
        Scalar s(f);
        s.rat_ = q;
        return s;
    }

    const Field& field() const { return field_; }

    bool is_zero() const {
        return field_.kind() == FieldKind::prime_field ? res_ == 0 : rat_.is_zero();
    }
    bool is_one() const { return *this == one(field_); }

    Scalar operator+(const Scalar& o) const {
        check(o);
        Scalar s(field_);
        if (field_.kind() == FieldKind::prime_field)
            s.res_ = (res_ + o.res_) % field_.modulus();
        else
            s.rat_ = rat_ + o.rat_;
        return s;
    }

    Scalar operator-() const {
        Scalar s(field_);
        if (field_.kind() == FieldKind::prime_field)
            s.res_ = res_ == 0 ? 0 : field_.modulus() - res_;
        else
            s.rat_ = -rat_;
        return s;
    }

    Scalar operator-(const Scalar& o) const { return *this + (-o); }

    Scalar operator*(const Scalar& o) const {
        check(o);
        Scalar s(field_);
        if (field_.kind() == FieldKind::prime_field)
            s.res_ = (res_ * o.res_) % field_.modulus();  // p < 2^31: no overflow
        else
            s.rat_ = rat_ * o.rat_;
        return s;
    }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    Scalar inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero");
        Scalar s(field_);
        if (field_.kind() == FieldKind::prime_field) {
            // extended Euclid
            std::int64_t p = static_cast<std::int64_t>(field_.modulus());
            std::int64_t a = static_cast<std::int64_t>(res_), b = p;
            std::int64_t u = 1, v = 0;
            while (b != 0) {
                std::int64_t q = a / b;
                a -= q * b; std::swap(a, b);
                u -= q * v; std::swap(u, v);
            }
            if (u < 0) u += p;
            s.res_ = static_cast<std::uint64_t>(u);
        } else {
            s.rat_ = 1 / rat_;
        }
        return s;
    }

    Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }

    bool operator==(const Scalar& o) const {
        if (field_ != o.field_) return false;
        return field_.kind() == FieldKind::prime_field ? res_ == o.res_ : rat_ == o.rat_;
    }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // total order within one field; used only for canonical container keys
    bool operator<(const Scalar& o) const {
        check(o);
        return field_.kind() == FieldKind::prime_field ? res_ < o.res_ : rat_ < o.rat_;
    }

    std::uint64_t residue() const { return res_; }
    const BigRational& rational() const { return rat_; }

    std::string str() const {
        if (field_.kind() == FieldKind::prime_field) return std::to_string(res_);
        return rat_.str();
    }

private:
    void check(const Scalar& o) const {
        if (field_ != o.field_)
            throw std::invalid_argument("field mismatch: " + field_.name() + " vs " + o.field_.name());
    }

    Field field_;
    std::uint64_t res_ = 0;  // prime-field residue
    BigRational rat_;        // rational value
};

/// Strict parser: "a" or "a/b" (rationals); a bare residue already in [0, p)
/// for GF(p). Out-of-range or negative residues are rejected, not reduced.
inline Scalar parse_scalar(const Field& f, std::string_view text) {
    auto is_int = [](std::string_view t) {
        if (!t.empty() && (t[0] == '-' || t[0] == '+')) t.remove_prefix(1);
        if (t.empty()) return false;
        for (char c : t)
            if (c < '0' || c > '9') return false;
        return true;
    };
    std::string s(text);
    auto slash = s.find('/');
    if (f.kind() == FieldKind::prime_field) {
        if (slash != std::string::npos)
            throw std::invalid_argument("fractions are not prime-field residues: " + s);
        if (!is_int(s)) throw std::invalid_argument("not a number: " + s);
        if (s[0] == '-') throw std::invalid_argument("negative residue rejected: " + s);
        BigInt v(s);
        if (v >= BigInt(f.modulus()))
            throw std::invalid_argument("residue out of range [0," + std::to_string(f.modulus()) + "): " + s);
        Scalar r(f);
        return Scalar::from_int(f, static_cast<long long>(v.convert_to<std::uint64_t>()));
    }
    if (slash == std::string::npos) {
        if (!is_int(s)) throw std::invalid_argument("not a number: " + s);
        return Scalar::from_rational(f, BigRational(BigInt(s)));
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!is_int(num) || !is_int(den))
        throw std::invalid_argument("not a fraction: " + s);
    BigInt d(den);
    if (d.is_zero()) throw std::invalid_argument("zero denominator: " + s);
    return Scalar::from_rational(f, BigRational(BigInt(num), d));
}

inline std::string format_scalar(const Scalar& s) { return s.str(); }

}  // namespace hopfeq
