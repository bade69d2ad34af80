#ifndef ENBC_KIT_MULTIPOLY_HPP
#define ENBC_KIT_MULTIPOLY_HPP

#include <map>
#include <utility>
#include <vector>

#include "enbc/core.hpp"
#include "enbc/monomial.hpp"
#include "enbc/scalar.hpp"

namespace enbc {

/// Sparse multivariate polynomial over an exact field.  Terms are kept
/// in a map under the structural monomial order, so storage is canonical
/// independent of any term order; leading terms are found by scanning
/// with the term order at hand.
template <class K>
class MultiPoly {
public:
    explicit MultiPoly(int n) : n_(n) {}

    static MultiPoly zero(int n) { return MultiPoly(n); }

    static MultiPoly term(Monomial m, K c) {
        MultiPoly p(m.ambient());
        p.add_term(std::move(m), std::move(c));
        return p;
    }

    int ambient() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, K>& terms() const { return terms_; }

    void add_term(Monomial m, K c) {
        if (enbc::is_zero(c)) return;
        check_ambient(m);
        auto [it, fresh] = terms_.emplace(std::move(m), c);
        if (!fresh) {
            it->second += c;
            if (enbc::is_zero(it->second)) terms_.erase(it);
        }
    }

    MultiPoly operator-() const {
        MultiPoly r(n_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r(a.n_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }
    MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
    MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }

    /// this * c * m
    MultiPoly times(const Monomial& m, const K& c) const {
        MultiPoly r(n_);
        if (enbc::is_zero(c)) return r;
        for (const auto& [mm, cc] : terms_) r.terms_.emplace(mm * m, cc * c);
        return r;
    }

    std::pair<Monomial, K> leading_term(const TermOrder& ord) const {
        if (is_zero()) fail(Errc::NotDivisible, "the zero polynomial has no leading term");
        auto best = terms_.begin();
        for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
            if (ord.greater(it->first, best->first)) best = it;
        return {best->first, best->second};
    }

    MultiPoly monic(const TermOrder& ord) const {
        if (is_zero()) return *this;
        K lc = leading_term(ord).second;
        MultiPoly r(n_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, c / lc);
        return r;
    }

    /// Terms sorted descending under the given order.
    std::vector<std::pair<Monomial, K>> sorted_terms(const TermOrder& ord) const {
        std::vector<std::pair<Monomial, K>> v(terms_.begin(), terms_.end());
        std::sort(v.begin(), v.end(),
                  [&](const auto& a, const auto& b) { return ord.greater(a.first, b.first); });
        return v;
    }

    /// Bidegree when bihomogeneous; fails otherwise.
    std::pair<int, int> bidegree() const {
        if (is_zero()) fail(Errc::DegreeMismatch, "the zero polynomial has no bidegree");
        auto it = terms_.begin();
        std::pair<int, int> d{it->first.x_degree(), it->first.y_degree()};
        for (const auto& [m, c] : terms_)
            if (std::pair{m.x_degree(), m.y_degree()} != d)
                fail(Errc::DegreeMismatch, "polynomial is not bihomogeneous");
        return d;
    }

    bool operator==(const MultiPoly&) const = default;

private:
    void check_ambient(const Monomial& m) const {
        if (m.ambient() != n_) fail(Errc::AmbientMismatch, "term from a different ambient ring");
    }

    int n_;
    std::map<Monomial, K> terms_;
};

/// Normal form of f against the basis: no remainder term is divisible by
/// any basis leading term, and f minus the result lies in the ideal the
/// basis generates.
template <class K>
MultiPoly<K> reduce(const MultiPoly<K>& f, const std::vector<MultiPoly<K>>& basis,
                    const TermOrder& ord) {
    std::vector<std::pair<Monomial, K>> lts;
    lts.reserve(basis.size());
    for (const auto& b : basis) lts.push_back(b.leading_term(ord));

    MultiPoly<K> tail = f;
    MultiPoly<K> rem(f.ambient());
    while (!tail.is_zero()) {
        auto [m, c] = tail.leading_term(ord);
        bool reduced = false;
        for (size_t i = 0; i < basis.size(); ++i) {
            if (auto q = m.divided_by(lts[i].first)) {
                tail -= basis[i].times(*q, c / lts[i].second);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            rem.add_term(m, c);
            tail.add_term(m, -c);
        }
    }
    return rem;
}

template <class K>
MultiPoly<K> s_polynomial(const MultiPoly<K>& f, const MultiPoly<K>& g, const TermOrder& ord) {
    auto [mf, cf] = f.leading_term(ord);
    auto [mg, cg] = g.leading_term(ord);
    Monomial l = Monomial::lcm(mf, mg);
    return f.times(*l.divided_by(mf), cg) - g.times(*l.divided_by(mg), cf);
}

} // namespace enbc

#endif // ENBC_KIT_MULTIPOLY_HPP
