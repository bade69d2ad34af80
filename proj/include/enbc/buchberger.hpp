#ifndef ENBC_KIT_BUCHBERGER_HPP
#define ENBC_KIT_BUCHBERGER_HPP

#include <set>
#include <tuple>
#include <vector>

#include "enbc/ideals.hpp"
#include "enbc/multipoly.hpp"

namespace enbc {

inline constexpr long long kDefaultPairBudget = 1'000'000;

/// Buchberger's algorithm, plain: monic generators, the coprime-leading-
/// term criterion, pairs processed by (lcm degree, index), and a full
/// inter-reduction at the end.  The result is the reduced Groebner basis,
/// sorted descending by leading monomial.  Throws ResourceLimit once
/// more than `budget` S-pairs have been reduced.
template <class K>
std::vector<MultiPoly<K>> buchberger(const PolyIdeal<K>& ideal, const TermOrder& ord,
                                     long long budget = kDefaultPairBudget) {
    std::vector<MultiPoly<K>> basis;
    std::vector<Monomial> lts;
    // (lcm total degree, i, j)
    std::set<std::tuple<int, size_t, size_t>> pairs;

    auto push = [&](MultiPoly<K> p) {
        basis.push_back(p.monic(ord));
        lts.push_back(basis.back().leading_term(ord).first);
        size_t j = basis.size() - 1;
        for (size_t i = 0; i < j; ++i)
            pairs.emplace(Monomial::lcm(lts[i], lts[j]).total_degree(), i, j);
    };

    for (const auto& g : ideal.gens) {
        if (g.is_zero()) fail(Errc::BadEntry, "ideal generators must be nonzero");
        push(g);
    }

    long long reductions = 0;
    while (!pairs.empty()) {
        auto [deg, i, j] = *pairs.begin();
        pairs.erase(pairs.begin());
        if (lts[i].coprime(lts[j])) continue; // Buchberger's first criterion
        if (++reductions > budget)
            fail(Errc::ResourceLimit, "Buchberger pair budget exceeded");
        MultiPoly<K> r = reduce(s_polynomial(basis[i], basis[j], ord), basis, ord);
        if (!r.is_zero()) push(std::move(r));
    }

    // inter-reduce: drop generators with redundant leading terms, then
    // fully reduce each survivor against the others
    std::vector<MultiPoly<K>> minimal;
    for (size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            if (lts[j].divides(lts[i])) redundant = lts[j] != lts[i] || j < i;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    std::vector<MultiPoly<K>> out;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<MultiPoly<K>> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        MultiPoly<K> r = reduce(minimal[i], others, ord);
        if (!r.is_zero()) out.push_back(r.monic(ord));
    }
    std::sort(out.begin(), out.end(), [&](const MultiPoly<K>& a, const MultiPoly<K>& b) {
        return ord.greater(a.leading_term(ord).first, b.leading_term(ord).first);
    });
    return out;
}

/// Leading monomials of a Groebner basis, minimalized.
template <class K>
MonomialIdeal initial_ideal(const std::vector<MultiPoly<K>>& gb, const TermOrder& ord) {
    MonomialIdeal ideal{ord.ambient(), {}};
    for (const auto& g : gb) ideal.gens.push_back(g.leading_term(ord).first);
    return minimalize(ideal);
}

} // namespace enbc

#endif // ENBC_KIT_BUCHBERGER_HPP
