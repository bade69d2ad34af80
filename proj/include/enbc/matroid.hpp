#ifndef ENBC_KIT_MATROID_HPP
#define ENBC_KIT_MATROID_HPP

#include <algorithm>
#include <unordered_set>
#include <vector>

#include "enbc/core.hpp"
#include "enbc/linalg.hpp"
#include "enbc/order.hpp"
#include "enbc/scalar.hpp"
#include "enbc/unipoly.hpp"

namespace enbc {

/// Column matrix representing an arrangement: column j holds the linear
/// form of the j-th hyperplane in coordinates of the ambient space.
template <class K>
struct RepMatrix {
    ScalarField field;
    int rows = 0;
    std::vector<std::vector<K>> columns;

    int ground_size() const { return static_cast<int>(columns.size()); }
    K one() const { return field_one<K>(field); }
};

/// A circuit (minimal dependent set) together with the coefficients of
/// its linear relation, normalized so the least element has coefficient 1.
template <class K>
struct CircuitData {
    Mask support = 0;
    std::vector<K> coeffs; // aligned with the sorted support indices

    K coeff_of(int i) const {
        auto idx = mask_to_indices(support);
        for (size_t k = 0; k < idx.size(); ++k)
            if (idx[k] == i) return coeffs[k];
        fail(Errc::IndexOutOfRange, "element not in circuit support");
    }
};

/// Represented matroid with an exact rank oracle.  All data (rank table,
/// circuits, flats, bases) is computed eagerly at construction, so a
/// built matroid is immutable and freely shareable across threads.
template <class K>
class Matroid {
public:
    static Matroid from_matrix(RepMatrix<K> m);

    int ground_size() const { return static_cast<int>(rep_.columns.size()); }
    Mask ground_mask() const { return bit(ground_size()) - 1; }
    int rank() const { return rank_; } // r+1

    int rank(Mask s) const {
        if (s & ~ground_mask()) fail(Errc::IndexOutOfRange, "subset is not within the ground set");
        return rank_table_[s];
    }

    Mask closure(Mask s) const {
        int rs = rank(s);
        Mask c = s;
        for (int i = 0; i < ground_size(); ++i)
            if (!contains(s, i) && rank(s | bit(i)) == rs) c |= bit(i);
        return c;
    }

    bool independent(Mask s) const { return rank(s) == popcount(s); }

    /// All flats, sorted by (rank, mask value) — a linear extension of
    /// the lattice order.
    const std::vector<Mask>& flats() const { return flats_; }

    /// Characteristic polynomial via the Mobius function of the flat
    /// lattice.  The Whitney-number route lives in the complexes module
    /// and serves as the independent cross-check.
    UniPoly mobius_char_poly() const;

    UniPoly reduced_char_poly() const {
        UniPoly q_minus_1({Rational(-1), Rational(1)});
        return mobius_char_poly().divide_exact(q_minus_1);
    }

    const std::vector<CircuitData<K>>& circuits() const { return circuits_; }

    /// Broken circuits (circuit minus its least element, natural order),
    /// deduplicated, sorted by (size, mask value).
    std::vector<Mask> broken_circuits() const;

    const std::vector<Mask>& bases() const { return bases_; }

    const RepMatrix<K>& rep() const { return rep_; }
    const ScalarField& field() const { return rep_.field; }
    K one() const { return rep_.one(); }

private:
    Matroid() = default;
    void build_rank_table();
    void build_circuits();
    void build_flats();
    void build_bases();

    RepMatrix<K> rep_;
    int rank_ = 0;
    std::vector<int> rank_table_; // indexed by subset mask
    std::vector<CircuitData<K>> circuits_;
    std::vector<Mask> flats_;
    std::vector<Mask> bases_;
};

// --- implementation ---

template <class K>
Matroid<K> Matroid<K>::from_matrix(RepMatrix<K> m) {
    int n1 = m.ground_size();
    if (n1 == 0 || m.rows == 0) fail(Errc::EmptyMatrix, "representation matrix is empty");
    if (n1 > 20)
        fail(Errc::ResourceLimit,
             "ground sets larger than 20 exceed the subset-enumeration design bound");
    for (int j = 0; j < n1; ++j) {
        bool zero = true;
        for (const K& e : m.columns[j]) zero = zero && is_zero(e);
        if (zero) fail(Errc::LoopDetected, "column " + std::to_string(j) + " is zero (loop)");
    }
    for (int i = 0; i < n1; ++i)
        for (int j = i + 1; j < n1; ++j)
            if (column_rank(m.columns, {i, j}) < 2)
                fail(Errc::ParallelDetected, "columns " + std::to_string(i) + " and " +
                                                 std::to_string(j) + " are proportional");

    Matroid<K> M;
    M.rep_ = std::move(m);
    M.build_rank_table();
    M.rank_ = M.rank_table_.back();
    M.build_circuits();
    M.build_flats();
    M.build_bases();
    return M;
}

template <class K>
void Matroid<K>::build_rank_table() {
    int n1 = ground_size();
    rank_table_.assign(size_t{1} << n1, 0);
    for (Mask s = 1; s < (Mask{1} << n1); ++s)
        rank_table_[s] = column_rank(rep_.columns, mask_to_indices(s));
}

template <class K>
void Matroid<K>::build_circuits() {
    int n1 = ground_size();
    std::vector<Mask> by_size[64];
    // subsets by increasing cardinality up to r+2; a minimal dependent set
    // is dependent with every one-element deletion independent
    for (Mask s = 1; s < (Mask{1} << n1); ++s) {
        int k = popcount(s);
        if (k > rank_ + 1 || rank_table_[s] != k - 1) continue;
        bool minimal = true;
        for (Mask t = s; t && minimal; t &= t - 1) {
            Mask del = s & ~(t & (~t + 1));
            minimal = rank_table_[del] == k - 1;
        }
        if (minimal) by_size[k].push_back(s);
    }
    for (int k = 0; k < 64; ++k)
        for (Mask s : by_size[k]) {
            auto idx = mask_to_indices(s);
            std::vector<const std::vector<K>*> cols;
            std::vector<K> rhs(rep_.rows, K{});
            for (size_t t = 1; t < idx.size(); ++t) cols.push_back(&rep_.columns[idx[t]]);
            for (int r = 0; r < rep_.rows; ++r) rhs[r] = -rep_.columns[idx[0]][r];
            auto sol = solve_columns<K>(cols, rhs);
            // a circuit's one-element deletions are independent, so the
            // relation exists and is unique with leading coefficient 1
            if (!sol) fail(Errc::BadEntry, "internal: circuit relation has no solution");
            CircuitData<K> c;
            c.support = s;
            c.coeffs.push_back(one());
            for (auto& a : *sol) c.coeffs.push_back(std::move(a));
            circuits_.push_back(std::move(c));
        }
}

template <class K>
void Matroid<K>::build_flats() {
    std::unordered_set<Mask> seen;
    std::vector<Mask> frontier{closure(0)};
    seen.insert(frontier[0]);
    while (!frontier.empty()) {
        std::vector<Mask> next;
        for (Mask f : frontier)
            for (int i = 0; i < ground_size(); ++i) {
                if (contains(f, i)) continue;
                Mask g = closure(f | bit(i));
                if (seen.insert(g).second) next.push_back(g);
            }
        frontier = std::move(next);
    }
    flats_.assign(seen.begin(), seen.end());
    std::sort(flats_.begin(), flats_.end(), [this](Mask a, Mask b) {
        int ra = rank_table_[a], rb = rank_table_[b];
        return ra != rb ? ra < rb : a < b;
    });
}

template <class K>
void Matroid<K>::build_bases() {
    for (Mask s = 0; s < (Mask{1} << ground_size()); ++s)
        if (popcount(s) == rank_ && rank_table_[s] == rank_) bases_.push_back(s);
}

template <class K>
UniPoly Matroid<K>::mobius_char_poly() const {
    // mu(bottom) = 1; mu(F) = -sum over proper subflats
    std::vector<Rational> mu(flats_.size());
    std::vector<Rational> chi(rank_ + 1);
    for (size_t i = 0; i < flats_.size(); ++i) {
        Rational m(0);
        if (i == 0)
            m = 1;
        else
            for (size_t j = 0; j < i; ++j)
                if (subset_of(flats_[j], flats_[i]) && flats_[j] != flats_[i]) m -= mu[j];
        mu[i] = m;
        chi[rank_ - rank_table_[flats_[i]]] += m;
    }
    return UniPoly(std::move(chi));
}

template <class K>
std::vector<Mask> Matroid<K>::broken_circuits() const {
    std::unordered_set<Mask> seen;
    std::vector<Mask> out;
    for (const auto& c : circuits_) {
        Mask b = c.support & (c.support - 1); // drop least element
        if (seen.insert(b).second) out.push_back(b);
    }
    std::sort(out.begin(), out.end(),
              [](Mask a, Mask b) { return popcount(a) != popcount(b) ? popcount(a) < popcount(b) : a < b; });
    return out;
}

} // namespace enbc

#endif // ENBC_KIT_MATROID_HPP
