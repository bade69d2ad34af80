#ifndef ENBC_KIT_HILBERT_HPP
#define ENBC_KIT_HILBERT_HPP

#include <functional>
#include <map>
#include <unordered_map>
#include <vector>

#include "enbc/ideals.hpp"
#include "enbc/monomial.hpp"
#include "enbc/multipoly.hpp"

namespace enbc {

/// dim_(a,b) of a bigraded quotient, tabulated for a+b <= bound.
using BidegreeTable = std::map<std::pair<int, int>, long long>;

/// All monomials of x-degree a and y-degree b in 2(n+1) variables.
void for_each_monomial_of_bidegree(int n, int a, int b,
                                   const std::function<void(const Monomial&)>& fn);

long long dim_bidegree_piece(int n, int a, int b); // C(n+a,n) * C(n+b,n)

/// Standard-monomial counts of S/I for a monomial ideal.
BidegreeTable bigraded_hilbert_function(const MonomialIdeal& ideal, int bound);

namespace detail {

/// Incremental echelon structure for exact sparse rank computations.
template <class K>
class SparseRank {
public:
    using Row = std::vector<std::pair<int, K>>; // sorted by column

    explicit SparseRank(long long op_budget) : budget_(op_budget) {}

    void insert(Row row) {
        while (!row.empty()) {
            auto it = pivots_.find(row.front().first);
            if (it == pivots_.end()) {
                pivots_.emplace(row.front().first, std::move(row));
                ++rank_;
                return;
            }
            row = eliminate(std::move(row), it->second);
        }
    }

    int rank() const { return rank_; }

private:
    Row eliminate(Row row, const Row& pivot) {
        K f = row.front().second / pivot.front().second;
        Row out;
        out.reserve(row.size() + pivot.size());
        size_t i = 0, j = 0;
        spend(static_cast<long long>(row.size() + pivot.size()));
        while (i < row.size() || j < pivot.size()) {
            if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
                out.push_back(std::move(row[i++]));
            } else if (i == row.size() || pivot[j].first < row[i].first) {
                out.emplace_back(pivot[j].first, -f * pivot[j].second);
                ++j;
            } else {
                K v = row[i].second - f * pivot[j].second;
                if (!is_zero(v)) out.emplace_back(row[i].first, std::move(v));
                ++i;
                ++j;
            }
        }
        return out;
    }

    void spend(long long ops) {
        if ((spent_ += ops) > budget_)
            fail(Errc::ResourceLimit, "Hilbert-function rank computation exceeded its budget");
    }

    std::unordered_map<int, Row> pivots_;
    int rank_ = 0;
    long long spent_ = 0;
    long long budget_;
};

} // namespace detail

/// Hilbert function of S/I for a polynomial ideal, one exact rank
/// computation per bidegree: the span of all monomial multiples of the
/// generators landing in bidegree (a,b), inside the monomial basis of
/// that piece.  Independent of any Groebner computation.
template <class K>
BidegreeTable bigraded_hilbert_function(const PolyIdeal<K>& ideal, int bound,
                                        long long op_budget = 500'000'000) {
    int n = ideal.n;
    std::vector<std::pair<int, int>> bidegrees;
    for (const auto& g : ideal.gens) bidegrees.push_back(g.bidegree());

    BidegreeTable table;
    for (int a = 0; a <= bound; ++a) {
        for (int b = 0; a + b <= bound; ++b) {
            std::map<Monomial, int> col;
            for_each_monomial_of_bidegree(n, a, b, [&](const Monomial& m) {
                int id = static_cast<int>(col.size());
                col.emplace(m, id);
            });
            detail::SparseRank<K> elim(op_budget);
            for (size_t g = 0; g < ideal.gens.size(); ++g) {
                auto [da, db] = bidegrees[g];
                if (da > a || db > b) continue;
                for_each_monomial_of_bidegree(n, a - da, b - db, [&](const Monomial& mult) {
                    typename detail::SparseRank<K>::Row row;
                    for (const auto& [m, c] : ideal.gens[g].terms())
                        row.emplace_back(col.at(m * mult), c);
                    std::sort(row.begin(), row.end(),
                              [](const auto& p, const auto& q) { return p.first < q.first; });
                    elim.insert(std::move(row));
                });
            }
            table[{a, b}] = static_cast<long long>(col.size()) - elim.rank();
        }
    }
    return table;
}

} // namespace enbc

#endif // ENBC_KIT_HILBERT_HPP
