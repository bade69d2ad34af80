#include "enbc/hilbert.hpp"

namespace enbc {

namespace {

/// Spread `remaining` across variables first..last (exponent vectors of
/// one block), then hand off to `next`.
void compositions(Monomial m, int first, int last, int remaining,
                  const std::function<void(const Monomial&)>& next) {
    if (first == last) {
        next(m.times_var(first, remaining));
        return;
    }
    for (int e = 0; e <= remaining; ++e)
        compositions(m.times_var(first, e), first + 1, last, remaining - e, next);
}

} // namespace

void for_each_monomial_of_bidegree(int n, int a, int b,
                                   const std::function<void(const Monomial&)>& fn) {
    compositions(Monomial::one(n), 0, n, a, [&](const Monomial& xpart) {
        compositions(xpart, n + 1, 2 * n + 1, b, fn);
    });
}

long long dim_bidegree_piece(int n, int a, int b) {
    auto binom = [](long long top, long long k) {
        long long r = 1;
        for (long long i = 1; i <= k; ++i) r = r * (top - k + i) / i;
        return r;
    };
    return binom(n + a, n) * binom(n + b, n);
}

BidegreeTable bigraded_hilbert_function(const MonomialIdeal& ideal, int bound) {
    MonomialIdeal min = minimalize(ideal);
    BidegreeTable table;
    for (int a = 0; a <= bound; ++a)
        for (int b = 0; a + b <= bound; ++b) {
            long long count = 0;
            for_each_monomial_of_bidegree(min.n, a, b, [&](const Monomial& m) {
                for (const auto& g : min.gens)
                    if (g.divides(m)) return;
                ++count;
            });
            table[{a, b}] = count;
        }
    return table;
}

} // namespace enbc
