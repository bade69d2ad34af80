#ifndef ENBC_KIT_IDEALS_HPP
#define ENBC_KIT_IDEALS_HPP

#include <algorithm>
#include <vector>

#include "enbc/complexes.hpp"
#include "enbc/core.hpp"
#include "enbc/matroid.hpp"
#include "enbc/monomial.hpp"
#include "enbc/multipoly.hpp"
#include "enbc/order.hpp"

namespace enbc {

struct MonomialIdeal {
    int n = 0;
    std::vector<Monomial> gens;

    bool operator==(const MonomialIdeal&) const = default; // after minimalize
};

/// Divisibility-minimal generating set, deduplicated and sorted
/// structurally; the unique minimal generating set of the ideal.
MonomialIdeal minimalize(const MonomialIdeal& ideal);

/// Stanley-Reisner ideal: one squarefree generator per minimal nonface.
/// A plain complex (vertices 0..n) lands in the y-variables; a bigraded
/// one uses its x/y vertex codes directly.
MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& c);

template <class K>
struct PolyIdeal {
    int n = 0;
    std::vector<MultiPoly<K>> gens;
};

/// Defining ideal of the reciprocal graph: for every circuit the linear
/// relation sum a_i x_i and its inverted form sum a_i prod_{j in C\{i}} y_j,
/// plus the binomials x_i y_i - x_0 y_0 for i >= 1.
template <class K>
PolyIdeal<K> gamma_ideal_generators(const Matroid<K>& m) {
    int n = m.ground_size() - 1;
    PolyIdeal<K> ideal{n, {}};
    for (const auto& c : m.circuits()) {
        auto idx = mask_to_indices(c.support);
        MultiPoly<K> xrel(n);
        for (size_t k = 0; k < idx.size(); ++k)
            xrel.add_term(Monomial::x(n, idx[k]), c.coeffs[k]);
        ideal.gens.push_back(std::move(xrel));
    }
    for (const auto& c : m.circuits()) {
        auto idx = mask_to_indices(c.support);
        MultiPoly<K> yrel(n);
        for (size_t k = 0; k < idx.size(); ++k) {
            Monomial mon = Monomial::one(n);
            for (size_t j = 0; j < idx.size(); ++j)
                if (j != k) mon = mon.times_var(n + 1 + idx[j], 1);
            yrel.add_term(std::move(mon), c.coeffs[k]);
        }
        ideal.gens.push_back(std::move(yrel));
    }
    for (int i = 1; i <= n; ++i) {
        MultiPoly<K> b(n);
        b.add_term(Monomial::x(n, i) * Monomial::y(n, i), m.one());
        b.add_term(Monomial::x(n, 0) * Monomial::y(n, 0), -m.one());
        ideal.gens.push_back(std::move(b));
    }
    return ideal;
}

/// The monomials claimed to generate the initial ideal: broken-circuit
/// monomials in the y's, the degenerate x_j y_j, and x_j * prod_{i in I} y_i
/// whenever j becomes dependent after adjoining I to the strict up-set of j.
/// Only I that are faces of the reduced complex need enumerating; any other
/// I contains a broken circuit, so its monomial is a multiple of a
/// broken-circuit generator.
template <class K>
MonomialIdeal claimed_initial_generators(const Matroid<K>& m, const OrderSpec& order) {
    int n = m.ground_size() - 1;
    MonomialIdeal ideal{n, {}};
    for (Mask b : m.broken_circuits()) {
        Monomial mon = Monomial::one(n);
        for (int i : mask_to_indices(b)) mon = mon.times_var(n + 1 + i, 1);
        ideal.gens.push_back(std::move(mon));
    }
    for (int j = 1; j <= n; ++j) ideal.gens.push_back(Monomial::x(n, j) * Monomial::y(n, j));
    for (Mask face : all_faces(rnbc_complex(m))) {
        for (int j = 0; j <= n; ++j) {
            if (contains(face, j)) continue;
            Mask up = order.up_set(j);
            if (m.rank(up | face) != m.rank((up & ~bit(j)) | face)) continue;
            Monomial mon = Monomial::x(n, j);
            for (int i : mask_to_indices(face)) mon = mon.times_var(n + 1 + i, 1);
            ideal.gens.push_back(std::move(mon));
        }
    }
    return minimalize(ideal);
}

/// For a claimed initial generator g, an explicit element of the
/// reciprocal-graph ideal with leading monomial g, assembled from the
/// generators themselves: the circuit y-relation for a broken circuit,
/// a y-multiple of x_j y_j - x_0 y_0 in the degenerate case, and
/// otherwise the circuit x-relation times prod y_i with every
/// x_k y_k (k not above j) rewritten through x_0 y_0.
template <class K>
MultiPoly<K> leading_witness(const Matroid<K>& m, const OrderSpec& order, const Monomial& g) {
    int n = m.ground_size() - 1;
    TermOrder ord(order, n);
    MonomialIdeal claimed = claimed_initial_generators(m, order);
    if (std::find(claimed.gens.begin(), claimed.gens.end(), g) == claimed.gens.end())
        fail(Errc::NotAGenerator, "monomial " + g.to_string() + " is not a claimed generator");

    if (g.x_degree() == 0) {
        // broken-circuit monomial: the y-relation of a circuit breaking to it
        Mask b = 0;
        for (int i = 0; i <= n; ++i)
            if (g.y_exp(i)) b |= bit(i);
        for (const auto& c : m.circuits()) {
            if ((c.support & (c.support - 1)) != b) continue;
            auto idx = mask_to_indices(c.support);
            MultiPoly<K> yrel(n);
            for (size_t k = 0; k < idx.size(); ++k) {
                Monomial mon = Monomial::one(n);
                for (size_t j = 0; j < idx.size(); ++j)
                    if (j != k) mon = mon.times_var(n + 1 + idx[j], 1);
                yrel.add_term(std::move(mon), c.coeffs[k]);
            }
            return yrel;
        }
        fail(Errc::NotAGenerator, "no circuit breaks to " + g.to_string());
    }

    int j = -1;
    Mask iset = 0;
    for (int i = 0; i <= n; ++i) {
        if (g.x_exp(i)) j = i;
        if (g.y_exp(i)) iset |= bit(i);
    }

    if (contains(iset, j)) {
        // degenerate: (prod_{i in I\{j}} y_i) (x_j y_j - x_0 y_0)
        MultiPoly<K> b(n);
        b.add_term(Monomial::x(n, j) * Monomial::y(n, j), m.one());
        b.add_term(Monomial::x(n, 0) * Monomial::y(n, 0), -m.one());
        Monomial rest = Monomial::one(n);
        for (int i : mask_to_indices(iset & ~bit(j))) rest = rest.times_var(n + 1 + i, 1);
        return b.times(rest, m.one());
    }

    Mask up = order.up_set(j);
    const CircuitData<K>* circuit = nullptr;
    for (const auto& c : m.circuits())
        if (contains(c.support, j) && subset_of(c.support, up | iset)) {
            circuit = &c;
            break;
        }
    if (!circuit) fail(Errc::NotAGenerator, "no circuit certifies " + g.to_string());

    auto idx = mask_to_indices(circuit->support);
    K aj = circuit->coeff_of(j);
    Monomial ymon = Monomial::one(n);
    for (int i : mask_to_indices(iset)) ymon = ymon.times_var(n + 1 + i, 1);

    MultiPoly<K> witness(n);
    for (size_t k = 0; k < idx.size(); ++k)
        witness.add_term(Monomial::x(n, idx[k]) * ymon, circuit->coeffs[k] / aj);
    for (size_t k = 0; k < idx.size(); ++k) {
        int e = idx[k];
        if (contains(up, e)) continue; // only elements not above j get rewritten
        K a = circuit->coeffs[k] / aj;
        Monomial rest = Monomial::one(n);
        for (int i : mask_to_indices(iset & ~bit(e))) rest = rest.times_var(n + 1 + i, 1);
        MultiPoly<K> corr(n);
        corr.add_term(Monomial::x(n, 0) * Monomial::y(n, 0) * rest, a);
        corr.add_term(Monomial::x(n, e) * Monomial::y(n, e) * rest, -a);
        witness += corr;
    }
    return witness;
}

} // namespace enbc

#endif // ENBC_KIT_IDEALS_HPP
