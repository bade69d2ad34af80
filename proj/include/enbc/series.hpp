#ifndef ENBC_KIT_SERIES_HPP
#define ENBC_KIT_SERIES_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "enbc/complexes.hpp"
#include "enbc/core.hpp"
#include "enbc/scalar.hpp"
#include "enbc/unipoly.hpp"

namespace enbc {

/// Sparse bivariate polynomial in (q, t) over the rationals.
class BivarPoly {
public:
    BivarPoly() = default;

    static BivarPoly constant(Rational c);
    static BivarPoly monomial(Rational c, int dq, int dt);
    static BivarPoly one_minus_q();
    static BivarPoly one_minus_t();
    static BivarPoly one_minus_qt();

    bool is_zero() const { return c_.empty(); }
    Rational coeff(int a, int b) const;
    const std::map<std::pair<int, int>, Rational>& terms() const { return c_; }
    void add(int a, int b, Rational c);

    BivarPoly operator-() const;
    friend BivarPoly operator+(const BivarPoly& a, const BivarPoly& b);
    friend BivarPoly operator-(const BivarPoly& a, const BivarPoly& b);
    friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
    BivarPoly& operator+=(const BivarPoly& o) { return *this = *this + o; }
    BivarPoly& operator*=(const BivarPoly& o) { return *this = *this * o; }
    BivarPoly scaled(const Rational& c) const;
    BivarPoly pow(int k) const;

    /// (min q-exponent, min t-exponent) over all terms.
    std::pair<int, int> monomial_content() const;
    BivarPoly shifted(int dq, int dt) const; // multiply by q^dq t^dt, exact

    std::optional<BivarPoly> divided_exact(const BivarPoly& d) const;

    UniPoly at_q0() const; // coefficient slice q^0, as a polynomial in t

    bool operator==(const BivarPoly&) const = default;
    std::string to_string() const;

private:
    std::map<std::pair<int, int>, Rational> c_;
};

/// Rational function in (q, t).  Kept in a lightly canonical form: common
/// monomial content removed, common factors of (1-q), (1-t), (1-qt)
/// cancelled, denominator scaled to trailing coefficient 1.  Equality is
/// decided by cross-multiplication, never by sampling.
class BivarRational {
public:
    BivarRational() : num_(), den_(BivarPoly::constant(1)) {}
    BivarRational(BivarPoly num, BivarPoly den);
    static BivarRational constant(Rational c);
    static BivarRational from_poly(BivarPoly p);

    const BivarPoly& num() const { return num_; }
    const BivarPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend BivarRational operator+(const BivarRational& a, const BivarRational& b);
    friend BivarRational operator-(const BivarRational& a, const BivarRational& b);
    friend BivarRational operator*(const BivarRational& a, const BivarRational& b);
    BivarRational& operator+=(const BivarRational& o) { return *this = *this + o; }
    BivarRational& operator*=(const BivarRational& o) { return *this = *this * o; }
    BivarRational pow(int k) const;

    bool equals(const BivarRational& o) const; // cross-multiplied
    std::string to_string() const;             // "(num) / (den)"

private:
    void normalize();
    BivarPoly num_, den_;
};

/// Univariate rational function in t, canonical via monic-gcd cancellation.
class UniRational {
public:
    UniRational() : num_(), den_(UniPoly::constant(1)) {}
    UniRational(UniPoly num, UniPoly den);

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }

    friend UniRational operator+(const UniRational& a, const UniRational& b);
    friend UniRational operator*(const UniRational& a, const UniRational& b);

    bool equals(const UniRational& o) const;
    std::string to_string() const;

private:
    void normalize();
    UniPoly num_, den_;
};

// --- Hilbert series ---

/// Stanley-Reisner Hilbert series from bigraded face counts:
/// sum f_{a,b} (q/(1-q))^a (t/(1-t))^b.
BivarRational sr_hilbert_series(const BigradedFaceVector& fv);

/// Closed form 1/(1-qt) * (t/(t-1))^(r+1) * chi((t-1)/((1-q)t)).
BivarRational closed_hilbert_series(const UniPoly& chi, int r);

/// Evaluate q := 0; PoleAtZero if the denominator vanishes there.
UniRational specialize_q0(const BivarRational& h);

/// Taylor coefficients at (0,0) for a+b <= bound; NonUnitDenominator if
/// the denominator has no constant term.
std::map<std::pair<int, int>, Rational> expand(const BivarRational& h, int bound);

/// sum_i w_i (t/(1-t))^i, the reciprocal-plane Hilbert series built
/// directly from Whitney numbers.
UniRational orlik_terao_series(const std::vector<long long>& w);

// --- classes ---

/// Multiset of [P^a x P^b] components, a+b constant.
struct CohomClass {
    std::map<std::pair<int, int>, long long> c;

    bool operator==(const CohomClass&) const = default;
    std::string to_string() const;
};

/// Class of the complex's Stanley-Reisner scheme: one [P^(x(F)-1) x P^(y(F)-1)]
/// per face F of maximal dimension.
CohomClass cohomology_class_from_complex(const SimplicialComplex& c);

/// sum_i wbar_i [P^(r-i) x P^i] with wbar_i read off the reduced
/// characteristic polynomial.
CohomClass huh_katz_class(const UniPoly& chi_bar, int r);

/// Integer combination of [P^m], m = 0..r.
struct KClass {
    std::vector<long long> coeff; // coeff[m] multiplies [P^m]

    bool operator==(const KClass&) const = default;
    std::string to_string() const;
};

/// K-class of the reciprocal plane: sum_i w_{i+1} [(k*)^i] expanded in
/// the [P^m] basis via [(k*)^a] = sum_j (-1)^j C(a+1,j) [P^(a-j)].
KClass k_class_reciprocal_plane(const UniPoly& chi, int r);

} // namespace enbc

#endif // ENBC_KIT_SERIES_HPP
