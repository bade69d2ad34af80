#ifndef ENBC_KIT_ORDER_HPP
#define ENBC_KIT_ORDER_HPP

#include <vector>

#include "enbc/core.hpp"

namespace enbc {

/// A total order on the ground set {0..n}, stored as the permutation
/// pi with pi[0] the smallest element and pi[n] the largest.
class OrderSpec {
public:
    OrderSpec() = default;

    /// The natural order 0 < 1 < ... < n.
    static OrderSpec natural(int ground_size);

    /// From an explicit permutation; validates bijectivity.
    static OrderSpec from_permutation(std::vector<int> pi);

    int ground_size() const { return static_cast<int>(pi_.size()); }

    /// Position of element i in the order (0 = smallest).
    int position(int i) const;

    /// True if i precedes j strictly.
    bool before(int i, int j) const { return position(i) < position(j); }

    /// The up-set {j : i is-less-or-equal j}, including i itself.
    Mask up_set(int i) const;

    const std::vector<int>& permutation() const { return pi_; }

private:
    std::vector<int> pi_;  // pi_[k] = k-th smallest element
    std::vector<int> pos_; // pos_[i] = position of i
};

} // namespace enbc

#endif // ENBC_KIT_ORDER_HPP
