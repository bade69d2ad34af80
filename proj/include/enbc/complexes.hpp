#ifndef ENBC_KIT_COMPLEXES_HPP
#define ENBC_KIT_COMPLEXES_HPP

#include <functional>
#include <map>
#include <vector>

#include "enbc/core.hpp"
#include "enbc/matroid.hpp"
#include "enbc/order.hpp"
#include "enbc/unipoly.hpp"

namespace enbc {

struct Vertex {
    enum class Tag { X, Y };
    Tag tag = Tag::Y;
    int index = 0;

    bool operator==(const Vertex&) const = default;
};

/// Simplicial complex stored by facets.  Vertices are encoded as small
/// integers: a plain complex uses ground indices 0..n directly; a
/// bigraded complex on {x_0..x_n, y_0..y_n} encodes x_i as i and y_i as
/// n+1+i.  `universe` is the complex's declared vertex set, which for
/// the extended complex is all 2(n+1) codes even though some x-vertices
/// may appear in no face.
struct SimplicialComplex {
    int n = 0;
    bool bigraded = false;
    Mask universe = 0;
    std::vector<Mask> facets; // antichain, sorted ascending by mask

    int xcode(int i) const { return i; }
    int ycode(int i) const { return bigraded ? n + 1 + i : i; }

    Vertex label(int code) const {
        if (bigraded && code > n) return {Vertex::Tag::Y, code - (n + 1)};
        return {bigraded ? Vertex::Tag::X : Vertex::Tag::Y, code};
    }

    int max_facet_size() const;
    bool is_face(Mask f) const;
};

/// All faces (including the empty face), deduplicated, sorted by
/// (cardinality, mask value).
std::vector<Mask> all_faces(const SimplicialComplex& c);

/// f_i = number of faces with i vertices; f_0 = 1.
std::vector<long long> face_counts(const SimplicialComplex& c);

/// Face counts of a bigraded complex keyed by (x-vertex count, y-vertex count).
struct BigradedFaceVector {
    std::map<std::pair<int, int>, long long> f;

    long long total() const;
    bool operator==(const BigradedFaceVector&) const = default;
};

BigradedFaceVector bigraded_f_vector(const SimplicialComplex& c);

/// sum_i (-1)^i f_i q^(topDegree-i); DegreeTooSmall if some face has
/// more than topDegree vertices.
UniPoly whitney_poly(const SimplicialComplex& c, int top_degree);

/// One interval of the face partition of the extended complex: all G
/// with low <= G <= top, where low = {y_i : i in F} and top is the facet
/// built from F.
struct JfInterval {
    Mask low = 0;
    Mask top = 0;

    bool operator==(const JfInterval&) const = default;
};

// --- core constructions on plain combinatorial data ---

using RankFn = std::function<int(Mask)>;

SimplicialComplex nbc_complex_core(int n, const std::vector<Mask>& broken_circuits);
SimplicialComplex rnbc_from_nbc(const SimplicialComplex& nbc);
Mask lex_max_basis_core(const RankFn& rank, int ground_size, const OrderSpec& order, Mask face);
SimplicialComplex enbc_core(const RankFn& rank, int matroid_rank, int n, const OrderSpec& order,
                            const std::vector<Mask>& rnbc_faces);

/// Recovers the interval partition from the extended complex's facets:
/// the y-vertices other than y_0 of a facet identify its source face.
std::vector<JfInterval> jf_partition_core(int n, const std::vector<Mask>& enbc_facets);

// --- matroid-facing wrappers ---

template <class K>
SimplicialComplex nbc_complex(const Matroid<K>& m) {
    return nbc_complex_core(m.ground_size() - 1, m.broken_circuits());
}

template <class K>
SimplicialComplex rnbc_complex(const Matroid<K>& m) {
    return rnbc_from_nbc(nbc_complex(m));
}

template <class K>
RankFn rank_fn(const Matroid<K>& m) {
    return [&m](Mask s) { return m.rank(s); };
}

/// The basis containing independent F that is lexicographically maximal
/// in the order, computed by the rank criterion (no basis enumeration).
template <class K>
Mask lex_max_basis(const Matroid<K>& m, const OrderSpec& order, Mask face) {
    if (!m.independent(face)) fail(Errc::DependentInput, "face is dependent");
    return lex_max_basis_core(rank_fn(m), m.ground_size(), order, face);
}

template <class K>
SimplicialComplex enbc_complex(const Matroid<K>& m, const OrderSpec& order) {
    return enbc_core(rank_fn(m), m.rank(), m.ground_size() - 1, order, all_faces(rnbc_complex(m)));
}

template <class K>
std::vector<JfInterval> jf_partition(const Matroid<K>& m, const OrderSpec& order) {
    auto enbc = enbc_complex(m, order);
    return jf_partition_core(enbc.n, enbc.facets);
}

} // namespace enbc

#endif // ENBC_KIT_COMPLEXES_HPP
