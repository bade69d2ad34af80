#ifndef ENBC_KIT_MONOMIAL_HPP
#define ENBC_KIT_MONOMIAL_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "enbc/core.hpp"
#include "enbc/order.hpp"

namespace enbc {

/// Monomial in the 2(n+1) variables x_0..x_n, y_0..y_n.  Exponents are
/// stored densely; variable codes are x_i = i and y_i = (n+1)+i, matching
/// the vertex codes of bigraded complexes.
class Monomial {
public:
    explicit Monomial(int n) : n_(n), e_(2 * (n + 1), 0) {}

    static Monomial one(int n) { return Monomial(n); }
    static Monomial x(int n, int i) { return one(n).times_var(i, 1); }
    static Monomial y(int n, int i) { return one(n).times_var(n + 1 + i, 1); }

    /// Squarefree monomial from a set of variable codes.
    static Monomial from_mask(int n, Mask vars);

    int ambient() const { return n_; }
    int var_count() const { return 2 * (n_ + 1); }
    int exp(int var) const { return e_[var]; }
    int x_exp(int i) const { return e_[i]; }
    int y_exp(int i) const { return e_[n_ + 1 + i]; }

    int total_degree() const;
    int x_degree() const;
    int y_degree() const { return total_degree() - x_degree(); }
    bool is_one() const { return total_degree() == 0; }
    bool is_squarefree() const;

    /// Vertex-code mask of the support (meaningful for squarefree use).
    Mask support_mask() const;

    Monomial times_var(int var, int k) const;
    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    std::optional<Monomial> divided_by(const Monomial& o) const;
    static Monomial lcm(const Monomial& a, const Monomial& b);
    bool coprime(const Monomial& o) const;

    /// Structural (container) ordering: ambient, then the exponent vector.
    friend std::strong_ordering operator<=>(const Monomial&, const Monomial&) = default;

    std::string to_string() const; // "x2*y1^2", "1" for the empty monomial

private:
    void check_ambient(const Monomial& o) const {
        if (n_ != o.n_) fail(Errc::AmbientMismatch, "monomials from different ambient rings");
    }

    int n_;
    std::vector<std::int32_t> e_;
};

/// The term order used for the initial-ideal computations: graded by
/// total degree with y_0 weightless, ties broken lexicographically with
/// x-variables ranked by the ground-set order and above all y-variables,
/// and y-variables ranked y_n > ... > y_1 > y_0.  This makes x_i > x_j
/// exactly when i precedes j, y_i > y_j exactly when i > j, and any
/// monomial divisible by y_0 smaller than any same-degree monomial that
/// is not.
class TermOrder {
public:
    TermOrder(OrderSpec ground_order, int n);

    int ambient() const { return n_; }
    const OrderSpec& ground_order() const { return order_; }

    /// -1, 0, +1 for a < b, a == b, a > b.
    int compare(const Monomial& a, const Monomial& b) const;

    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

private:
    int n_;
    OrderSpec order_;
    std::vector<int> priority_; // variable codes from most to least significant
};

} // namespace enbc

#endif // ENBC_KIT_MONOMIAL_HPP
