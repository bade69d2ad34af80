#include "enbc/ideals.hpp"

#include <algorithm>

namespace enbc {

MonomialIdeal minimalize(const MonomialIdeal& ideal) {
    std::vector<Monomial> gens = ideal.gens;
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> out;
    for (const auto& g : gens) {
        bool redundant = false;
        for (const auto& h : gens)
            if (h != g && h.divides(g)) {
                redundant = true;
                break;
            }
        if (!redundant) out.push_back(g);
    }
    return {ideal.n, std::move(out)};
}

namespace {

void subsets_of_size(const std::vector<int>& pool, int size, std::vector<int>& pick, size_t from,
                     const std::function<void(Mask)>& emit) {
    if (static_cast<int>(pick.size()) == size) {
        Mask m = 0;
        for (int v : pick) m |= bit(v);
        emit(m);
        return;
    }
    for (size_t i = from; i < pool.size(); ++i) {
        pick.push_back(pool[i]);
        subsets_of_size(pool, size, pick, i + 1, emit);
        pick.pop_back();
    }
}

} // namespace

MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& c) {
    std::vector<int> vertices = mask_to_indices(c.universe);
    MonomialIdeal ideal{c.n, {}};
    auto to_monomial = [&](Mask codes) {
        Monomial m = Monomial::one(c.n);
        for (int v : mask_to_indices(codes))
            m = m.times_var(c.bigraded ? v : c.n + 1 + v, 1);
        return m;
    };
    int max_size = c.max_facet_size() + 1;
    for (int s = 1; s <= max_size; ++s) {
        std::vector<int> pick;
        subsets_of_size(vertices, s, pick, 0, [&](Mask a) {
            if (c.is_face(a)) return;
            // minimal iff every one-element deletion is a face
            for (Mask t = a; t; t &= t - 1)
                if (!c.is_face(a & ~(t & (~t + 1)))) return;
            ideal.gens.push_back(to_monomial(a));
        });
    }
    return minimalize(ideal);
}

} // namespace enbc
