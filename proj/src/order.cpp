#include "enbc/order.hpp"

#include <numeric>

namespace enbc {

OrderSpec OrderSpec::natural(int ground_size) {
    std::vector<int> pi(ground_size);
    std::iota(pi.begin(), pi.end(), 0);
    return from_permutation(std::move(pi));
}

OrderSpec OrderSpec::from_permutation(std::vector<int> pi) {
    int n1 = static_cast<int>(pi.size());
    std::vector<int> pos(n1, -1);
    for (int k = 0; k < n1; ++k) {
        int i = pi[k];
        if (i < 0 || i >= n1 || pos[i] != -1)
            fail(Errc::BadEntry, "order is not a permutation of 0.." + std::to_string(n1 - 1));
        pos[i] = k;
    }
    OrderSpec o;
    o.pi_ = std::move(pi);
    o.pos_ = std::move(pos);
    return o;
}

int OrderSpec::position(int i) const {
    if (i < 0 || i >= ground_size()) fail(Errc::IndexOutOfRange, "element out of range");
    return pos_[i];
}

Mask OrderSpec::up_set(int i) const {
    int p = position(i);
    Mask m = 0;
    for (int k = p; k < ground_size(); ++k) m |= bit(pi_[k]);
    return m;
}

} // namespace enbc
