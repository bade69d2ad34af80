#ifndef ENBC_KIT_UNIPOLY_HPP
#define ENBC_KIT_UNIPOLY_HPP

#include <string>
#include <vector>

#include "enbc/core.hpp"
#include "enbc/scalar.hpp"

namespace enbc {

/// Dense univariate polynomial over the rationals.  Characteristic
/// polynomials, Whitney-number polynomials and the t-side of the
/// specialized Hilbert series all live here.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs); // coeffs[k] multiplies q^k
    static UniPoly constant(Rational c);
    static UniPoly monomial(Rational c, int degree);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    Rational coeff(int k) const;
    const std::vector<Rational>& coeffs() const { return c_; }

    UniPoly operator-() const;
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
    UniPoly& operator-=(const UniPoly& o) { return *this = *this - o; }
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

    /// Exact division; raises NotDivisible on a nonzero remainder.
    UniPoly divide_exact(const UniPoly& d) const;

    /// Quotient/remainder long division (d nonzero).
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;

    Rational eval(const Rational& x) const;

    bool operator==(const UniPoly&) const = default;

    /// Canonical text form, e.g. "q^3 - 6*q^2 + 11*q - 6".
    std::string to_string(char var = 'q') const;

private:
    void trim();
    std::vector<Rational> c_; // no trailing zeros; empty means 0
};

UniPoly gcd(UniPoly a, UniPoly b); // monic gcd, 0 for gcd(0,0)

} // namespace enbc

#endif // ENBC_KIT_UNIPOLY_HPP
