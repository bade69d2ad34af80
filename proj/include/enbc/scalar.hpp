#ifndef ENBC_KIT_SCALAR_HPP
#define ENBC_KIT_SCALAR_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "enbc/core.hpp"

namespace enbc {

/// Exact arbitrary-precision rational, backed by GMP.
using Rational = mpq_class;

/// Which coefficient field an arrangement is represented over.
struct ScalarField {
    enum class Kind { Rationals, Prime };

    Kind kind = Kind::Rationals;
    long long p = 0; // modulus when kind == Prime

    static ScalarField rationals() { return {Kind::Rationals, 0}; }
    static ScalarField prime(long long p);

    bool is_prime_field() const { return kind == Kind::Prime; }
    bool operator==(const ScalarField&) const = default;
};

bool is_prime(long long p);

inline ScalarField ScalarField::prime(long long p) {
    if (!is_prime(p)) fail(Errc::BadEntry, "field modulus " + std::to_string(p) + " is not prime");
    return {Kind::Prime, p};
}

inline bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

/// Prime-field scalar with a per-value modulus.  A default-constructed value
/// is the zero of an as-yet-unspecified field; it unifies with any modulus,
/// which lets generic code use `Fp{}` as an additive identity.
class Fp {
public:
    Fp() = default;

    Fp(long long v, long long p) : p_(p) {
        v %= p;
        if (v < 0) v += p;
        v_ = v;
    }

    long long value() const { return v_; }
    long long modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    Fp operator-() const { return v_ == 0 ? *this : Fp(p_ - v_, p_); }

    friend Fp operator+(const Fp& a, const Fp& b) {
        long long p = join(a, b);
        return p == 0 ? Fp{} : Fp(a.v_ + b.v_, p);
    }
    friend Fp operator-(const Fp& a, const Fp& b) { return a + (-b); }
    friend Fp operator*(const Fp& a, const Fp& b) {
        long long p = join(a, b);
        return p == 0 ? Fp{} : Fp(mulmod(a.v_, b.v_, p), p);
    }
    friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }

    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }
    Fp& operator/=(const Fp& o) { return *this = *this / o; }

    Fp inverse() const {
        if (v_ == 0) fail(Errc::BadEntry, "division by zero in GF(p)");
        // extended Euclid
        long long a = v_, m = p_, x0 = 0, x1 = 1;
        while (a > 1) {
            long long q = a / m;
            long long t = m;
            m = a % m;
            a = t;
            t = x0;
            x0 = x1 - q * x0;
            x1 = t;
        }
        return Fp(x1, p_);
    }

    friend bool operator==(const Fp& a, const Fp& b) {
        if (a.v_ == 0 && b.v_ == 0) return true;
        return a.p_ == b.p_ && a.v_ == b.v_;
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

private:
    static long long join(const Fp& a, const Fp& b) {
        if (a.p_ == 0) return b.p_;
        if (b.p_ == 0) return a.p_;
        if (a.p_ != b.p_) fail(Errc::AmbientMismatch, "mixed moduli in GF(p) arithmetic");
        return a.p_;
    }
    static long long mulmod(long long a, long long b, long long p) {
        return static_cast<long long>((__int128)a * b % p);
    }

    long long v_ = 0;
    long long p_ = 0;
};

// --- scalar trait functions shared by the field-generic code ---

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(const Fp& x) { return x.is_zero(); }

inline bool is_negative(const Rational& x) { return sgn(x) < 0; }
inline bool is_negative(const Fp&) { return false; }

inline bool is_one(const Rational& x) { return x == 1; }
inline bool is_one(const Fp& x) { return x.value() == 1; }

inline std::string scalar_to_string(const Rational& x) { return x.get_str(); }
inline std::string scalar_to_string(const Fp& x) { return std::to_string(x.value()); }

/// One in the given field, with the correct scalar type.
template <class K>
K field_one(const ScalarField& f);

template <>
inline Rational field_one<Rational>(const ScalarField&) {
    return Rational(1);
}
template <>
inline Fp field_one<Fp>(const ScalarField& f) {
    return Fp(1, f.p);
}

/// Parse "a" or "a/b" into the field, rejecting malformed strings exactly.
template <class K>
K parse_scalar(const std::string& s, const ScalarField& f);

Rational parse_rational(const std::string& s);

template <>
inline Rational parse_scalar<Rational>(const std::string& s, const ScalarField&) {
    return parse_rational(s);
}

template <>
inline Fp parse_scalar<Fp>(const std::string& s, const ScalarField& f) {
    Rational q = parse_rational(s);
    Fp num(static_cast<long long>(mpz_fdiv_ui(q.get_num_mpz_t(), static_cast<unsigned long>(f.p))), f.p);
    Fp den(static_cast<long long>(mpz_fdiv_ui(q.get_den_mpz_t(), static_cast<unsigned long>(f.p))), f.p);
    if (den.is_zero()) fail(Errc::BadEntry, "entry '" + s + "' has zero denominator mod p");
    return num / den;
}

} // namespace enbc

#endif // ENBC_KIT_SCALAR_HPP
