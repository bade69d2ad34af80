#ifndef ENBC_KIT_LINALG_HPP
#define ENBC_KIT_LINALG_HPP

#include <optional>
#include <vector>

#include "enbc/core.hpp"
#include "enbc/scalar.hpp"

namespace enbc {

/// Plain dense matrix for the exact elimination kernels.  Rows/cols are
/// tiny here (column counts of an arrangement), so no cleverness.
template <class K>
struct DenseMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<K> a; // row major

    DenseMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    K& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const K& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

/// In-place forward elimination; returns the rank.  Exact division, no
/// pivot-magnitude concerns over an exact field.
template <class K>
int row_reduce(DenseMatrix<K>& m) {
    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < m.rows; ++r) {
            if (!is_zero(m.at(r, col))) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int c = col; c < m.cols; ++c) std::swap(m.at(pivot, c), m.at(rank, c));
        for (int r = rank + 1; r < m.rows; ++r) {
            if (is_zero(m.at(r, col))) continue;
            K f = m.at(r, col) / m.at(rank, col);
            for (int c = col; c < m.cols; ++c) m.at(r, c) -= f * m.at(rank, c);
        }
        ++rank;
    }
    return rank;
}

/// Rank of the matrix whose columns are columns[i] for i in `which`.
template <class K>
int column_rank(const std::vector<std::vector<K>>& columns, const std::vector<int>& which) {
    if (which.empty()) return 0;
    int rows = static_cast<int>(columns[which[0]].size());
    DenseMatrix<K> m(rows, static_cast<int>(which.size()));
    for (int c = 0; c < m.cols; ++c)
        for (int r = 0; r < rows; ++r) m.at(r, c) = columns[which[c]][r];
    return row_reduce(m);
}

/// Solve A x = b where A has the given columns; returns nullopt if
/// inconsistent, and the solution with free variables pinned to zero
/// otherwise (unique when the columns are independent).
template <class K>
std::optional<std::vector<K>> solve_columns(const std::vector<const std::vector<K>*>& cols,
                                            const std::vector<K>& b) {
    int rows = static_cast<int>(b.size());
    int n = static_cast<int>(cols.size());
    DenseMatrix<K> m(rows, n + 1);
    for (int c = 0; c < n; ++c)
        for (int r = 0; r < rows; ++r) m.at(r, c) = (*cols[c])[r];
    for (int r = 0; r < rows; ++r) m.at(r, n) = b[r];

    // forward elimination tracking pivot columns
    std::vector<int> pivot_col;
    int rank = 0;
    for (int col = 0; col < n && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (!is_zero(m.at(r, col))) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int c = col; c <= n; ++c) std::swap(m.at(pivot, c), m.at(rank, c));
        for (int r = rank + 1; r < rows; ++r) {
            if (is_zero(m.at(r, col))) continue;
            K f = m.at(r, col) / m.at(rank, col);
            for (int c = col; c <= n; ++c) m.at(r, c) -= f * m.at(rank, c);
        }
        pivot_col.push_back(col);
        ++rank;
    }
    for (int r = rank; r < rows; ++r)
        if (!is_zero(m.at(r, n))) return std::nullopt;

    std::vector<K> x(n, K{});
    for (int i = rank - 1; i >= 0; --i) {
        K s = m.at(i, n);
        for (int c = pivot_col[i] + 1; c < n; ++c)
            if (!is_zero(x[c])) s -= m.at(i, c) * x[c];
        x[pivot_col[i]] = s / m.at(i, pivot_col[i]);
    }
    return x;
}

} // namespace enbc

#endif // ENBC_KIT_LINALG_HPP
