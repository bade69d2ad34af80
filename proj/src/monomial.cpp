#include "enbc/monomial.hpp"

#include <numeric>
#include <sstream>

namespace enbc {

Monomial Monomial::from_mask(int n, Mask vars) {
    Monomial m(n);
    for (int v : mask_to_indices(vars)) m.e_[v] = 1;
    return m;
}

int Monomial::total_degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }

int Monomial::x_degree() const { return std::accumulate(e_.begin(), e_.begin() + n_ + 1, 0); }

bool Monomial::is_squarefree() const {
    for (auto e : e_)
        if (e > 1) return false;
    return true;
}

Mask Monomial::support_mask() const {
    Mask m = 0;
    for (int v = 0; v < var_count(); ++v)
        if (e_[v] > 0) m |= bit(v);
    return m;
}

Monomial Monomial::times_var(int var, int k) const {
    if (var < 0 || var >= var_count()) fail(Errc::IndexOutOfRange, "variable code out of range");
    Monomial m = *this;
    m.e_[var] += k;
    return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
    check_ambient(o);
    Monomial m = *this;
    for (int v = 0; v < var_count(); ++v) m.e_[v] += o.e_[v];
    return m;
}

bool Monomial::divides(const Monomial& o) const {
    check_ambient(o);
    for (int v = 0; v < var_count(); ++v)
        if (e_[v] > o.e_[v]) return false;
    return true;
}

std::optional<Monomial> Monomial::divided_by(const Monomial& o) const {
    check_ambient(o);
    Monomial m = *this;
    for (int v = 0; v < var_count(); ++v) {
        m.e_[v] -= o.e_[v];
        if (m.e_[v] < 0) return std::nullopt;
    }
    return m;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    a.check_ambient(b);
    Monomial m = a;
    for (int v = 0; v < m.var_count(); ++v) m.e_[v] = std::max(a.e_[v], b.e_[v]);
    return m;
}

bool Monomial::coprime(const Monomial& o) const {
    check_ambient(o);
    for (int v = 0; v < var_count(); ++v)
        if (e_[v] > 0 && o.e_[v] > 0) return false;
    return true;
}

std::string Monomial::to_string() const {
    if (is_one()) return "1";
    std::ostringstream os;
    bool first = true;
    for (int v = 0; v < var_count(); ++v) {
        if (e_[v] == 0) continue;
        if (!first) os << '*';
        first = false;
        if (v <= n_)
            os << 'x' << v;
        else
            os << 'y' << (v - n_ - 1);
        if (e_[v] > 1) os << '^' << e_[v];
    }
    return os.str();
}

TermOrder::TermOrder(OrderSpec ground_order, int n) : n_(n), order_(std::move(ground_order)) {
    if (order_.ground_size() != n + 1)
        fail(Errc::AmbientMismatch, "ground order size does not match ambient");
    // x-block by the ground order, then y_n .. y_0
    for (int k = 0; k < n + 1; ++k) priority_.push_back(order_.permutation()[k]);
    for (int i = n; i >= 0; --i) priority_.push_back(n + 1 + i);
}

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
    if (a.ambient() != n_ || b.ambient() != n_)
        fail(Errc::AmbientMismatch, "monomial ambient does not match term order");
    int wa = a.total_degree() - a.y_exp(0);
    int wb = b.total_degree() - b.y_exp(0);
    if (wa != wb) return wa < wb ? -1 : 1;
    for (int v : priority_) {
        int ea = a.exp(v), eb = b.exp(v);
        if (ea != eb) return ea < eb ? -1 : 1;
    }
    return 0;
}

} // namespace enbc
