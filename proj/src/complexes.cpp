#include "enbc/complexes.hpp"

#include <algorithm>
#include <unordered_set>

namespace enbc {

int SimplicialComplex::max_facet_size() const {
    int m = 0;
    for (Mask f : facets) m = std::max(m, popcount(f));
    return m;
}

bool SimplicialComplex::is_face(Mask f) const {
    for (Mask g : facets)
        if (subset_of(f, g)) return true;
    return false;
}

std::vector<Mask> all_faces(const SimplicialComplex& c) {
    std::unordered_set<Mask> seen;
    for (Mask f : c.facets) for_each_submask(f, [&](Mask s) { seen.insert(s); });
    if (c.facets.empty()) seen.insert(0); // the empty complex still has the empty face
    std::vector<Mask> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), [](Mask a, Mask b) {
        return popcount(a) != popcount(b) ? popcount(a) < popcount(b) : a < b;
    });
    return out;
}

std::vector<long long> face_counts(const SimplicialComplex& c) {
    std::vector<long long> f(c.max_facet_size() + 1, 0);
    for (Mask s : all_faces(c)) ++f[popcount(s)];
    return f;
}

long long BigradedFaceVector::total() const {
    long long t = 0;
    for (const auto& [bi, count] : f) t += count;
    return t;
}

BigradedFaceVector bigraded_f_vector(const SimplicialComplex& c) {
    Mask xmask = bit(c.n + 1) - 1;
    BigradedFaceVector fv;
    for (Mask s : all_faces(c)) ++fv.f[{popcount(s & xmask), popcount(s & ~xmask)}];
    return fv;
}

UniPoly whitney_poly(const SimplicialComplex& c, int top_degree) {
    auto f = face_counts(c);
    if (static_cast<int>(f.size()) - 1 > top_degree)
        fail(Errc::DegreeTooSmall, "complex has faces with more than top_degree vertices");
    std::vector<Rational> coeffs(top_degree + 1);
    for (size_t i = 0; i < f.size(); ++i)
        coeffs[top_degree - i] = (i % 2 == 0) ? Rational(static_cast<long>(f[i])) : Rational(static_cast<long>(-f[i]));
    return UniPoly(std::move(coeffs));
}

namespace {

/// Keep only the inclusion-maximal masks.
std::vector<Mask> maximal_antichain(std::vector<Mask> sets) {
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<Mask> out;
    for (Mask a : sets) {
        bool covered = false;
        for (Mask b : sets)
            if (a != b && subset_of(a, b)) {
                covered = true;
                break;
            }
        if (!covered) out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

SimplicialComplex nbc_complex_core(int n, const std::vector<Mask>& broken_circuits) {
    auto no_broken = [&](Mask s) {
        for (Mask b : broken_circuits)
            if (subset_of(b, s)) return false;
        return true;
    };
    Mask full = bit(n + 1) - 1;
    std::vector<Mask> facets;
    for (Mask s = 0; s <= full; ++s) {
        if (!no_broken(s)) continue;
        bool maximal = true;
        for (int i = 0; i <= n && maximal; ++i)
            if (!contains(s, i)) maximal = !no_broken(s | bit(i));
        if (maximal) facets.push_back(s);
    }
    SimplicialComplex c;
    c.n = n;
    c.bigraded = false;
    c.universe = full;
    c.facets = std::move(facets); // already ascending
    return c;
}

SimplicialComplex rnbc_from_nbc(const SimplicialComplex& nbc) {
    std::vector<Mask> stripped;
    stripped.reserve(nbc.facets.size());
    for (Mask f : nbc.facets) stripped.push_back(f & ~bit(0));
    SimplicialComplex c;
    c.n = nbc.n;
    c.bigraded = false;
    c.universe = nbc.universe & ~bit(0);
    c.facets = maximal_antichain(std::move(stripped));
    return c;
}

Mask lex_max_basis_core(const RankFn& rank, int ground_size, const OrderSpec& order, Mask face) {
    Mask basis = 0;
    for (int i = 0; i < ground_size; ++i) {
        if (contains(face, i)) {
            basis |= bit(i);
            continue;
        }
        Mask up = order.up_set(i);
        if (rank(up | face) > rank((up & ~bit(i)) | face)) basis |= bit(i);
    }
    return basis;
}

SimplicialComplex enbc_core(const RankFn& rank, int matroid_rank, int n, const OrderSpec& order,
                            const std::vector<Mask>& rnbc_faces) {
    SimplicialComplex c;
    c.n = n;
    c.bigraded = true;
    c.universe = bit(2 * (n + 1)) - 1;
    for (Mask f : rnbc_faces) {
        Mask basis = lex_max_basis_core(rank, n + 1, order, f);
        Mask facet = bit(c.ycode(0));
        for (int i : mask_to_indices(f)) facet |= bit(c.ycode(i));
        for (int j : mask_to_indices(basis & ~f)) facet |= bit(c.xcode(j));
        if (popcount(facet) != matroid_rank + 1)
            fail(Errc::DependentInput, "internal: extended facet has the wrong vertex count");
        c.facets.push_back(facet);
    }
    std::sort(c.facets.begin(), c.facets.end());
    return c;
}

std::vector<JfInterval> jf_partition_core(int n, const std::vector<Mask>& enbc_facets) {
    Mask y_above_zero = 0;
    for (int i = 1; i <= n; ++i) y_above_zero |= bit(n + 1 + i);
    std::vector<JfInterval> out;
    out.reserve(enbc_facets.size());
    for (Mask t : enbc_facets) out.push_back({t & y_above_zero, t});
    std::sort(out.begin(), out.end(), [](const JfInterval& a, const JfInterval& b) {
        return popcount(a.low) != popcount(b.low) ? popcount(a.low) < popcount(b.low)
                                                  : a.low < b.low;
    });
    return out;
}

} // namespace enbc
