#include "enbc/unipoly.hpp"

#include <sstream>

namespace enbc {

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::constant(Rational c) { return UniPoly({std::move(c)}); }

UniPoly UniPoly::monomial(Rational c, int degree) {
    std::vector<Rational> v(degree + 1);
    v[degree] = std::move(c);
    return UniPoly(std::move(v));
}

void UniPoly::trim() {
    while (!c_.empty() && enbc::is_zero(c_.back())) c_.pop_back();
}

Rational UniPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
    return c_[k];
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return UniPoly(std::move(v));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(v));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
    if (d.is_zero()) fail(Errc::NotDivisible, "division by the zero polynomial");
    UniPoly rem = *this;
    if (rem.degree() < d.degree()) return {UniPoly{}, rem};
    std::vector<Rational> q(rem.degree() - d.degree() + 1);
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
        int k = rem.degree() - d.degree();
        Rational f = rem.c_.back() / d.c_.back();
        q[k] = f;
        for (int i = 0; i <= d.degree(); ++i) rem.c_[k + i] -= f * d.c_[i];
        rem.trim();
    }
    return {UniPoly(std::move(q)), rem};
}

UniPoly UniPoly::divide_exact(const UniPoly& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) fail(Errc::NotDivisible, "polynomial division left a nonzero remainder");
    return q;
}

Rational UniPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UniPoly gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero() && !is_one(a.coeffs().back())) {
        UniPoly lead = UniPoly::constant(a.coeffs().back());
        a = a.divide_exact(lead);
    }
    return a;
}

std::string UniPoly::to_string(char var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = c_[k];
        if (enbc::is_zero(c)) continue;
        Rational abs = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << '-';
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool unit = abs == 1;
        if (k == 0) {
            os << abs.get_str();
        } else {
            if (!unit) os << abs.get_str() << '*';
            os << var;
            if (k > 1) os << '^' << k;
        }
    }
    return os.str();
}

} // namespace enbc
