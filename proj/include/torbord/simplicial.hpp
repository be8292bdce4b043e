#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "torbord/numeric.hpp"

namespace torbord {

/// A face is a subset of the vertex set [m], packed into a bit mask:
/// bit i-1 represents vertex i.  All public I/O is 1-based, masks are the
/// internal 0-based form.
using Mask = std::uint64_t;

inline int popcount(Mask s) { return __builtin_popcountll(s); }

std::vector<int> mask_to_vertices(Mask s);
Mask vertices_to_mask(const std::vector<int>& vs, int m);

/// Order on faces matching lexicographic order of their sorted vertex
/// sequences (the canonical serialization order).
bool face_less(Mask a, Mask b);

/// Default cap on the ambient vertex count.  Face enumeration is a 2^m
/// subset scan, fine at desk scale up to here.  TORBORD_MAX_M raises the
/// cap (absolute ceiling 32, so a Bier double cover still fits in 64 bits).
int max_m_cap();

/// An abstract simplicial complex on [m], stored by its facet antichain.
///
/// Invariants: m >= 2, the facet set is an antichain, [m] itself is never
/// a facet, and the empty face is always a member.  The void complex is
/// represented by the facet set { empty }.  Ghost vertices (elements of
/// [m] that are not faces) are permitted everywhere.
class SimplicialComplex {
public:
    /// Canonical constructor: absorbs the given generating sets into an
    /// antichain, validates the invariants.
    static SimplicialComplex from_facet_masks(int m, std::vector<Mask> facets);

    /// 1-based vertex lists, e.g. (4, {{1,2,3},{4}}).  An empty list (or a
    /// single empty facet) denotes the void complex.
    static SimplicialComplex parse(int m, const std::vector<std::vector<int>>& raw_facets);

    int m() const { return m_; }

    /// Facet masks, sorted in canonical face order.  {0} for the void complex.
    const std::vector<Mask>& facet_masks() const { return facets_; }

    std::vector<std::vector<int>> facet_vertices() const;

    bool contains_face(Mask s) const;

    /// Every face as a mask (including the empty face), sorted.
    std::vector<Mask> all_faces() const;

    /// (f_{-1}, f_0, ..., f_{m-2}); f_{-1} = 1 always.
    std::vector<Int> f_vector() const;

    /// Non-reduced Euler characteristic (empty face excluded).
    Int euler_characteristic() const;

    /// link_K S on the same ambient [m]; link_K empty = K.
    SimplicialComplex link(Mask s) const;

    /// Restriction to faces avoiding vertex v (1-based): K minus v.
    SimplicialComplex deletion(int v) const;

    std::vector<Mask> minimal_nonfaces() const;

    /// Alexander dual on the same labels: facets are complements of the
    /// minimal non-faces.  An involution.
    SimplicialComplex alexander_dual() const;

    bool is_ghost_vertex(int v) const;

    /// True when some vertex is ghost in both K and its dual; then the
    /// associated manifold is the (m-1)-fold product of projective lines.
    bool has_doubly_ghost_vertex() const;

    bool is_void() const { return facets_.size() == 1 && facets_[0] == 0; }

    bool operator==(const SimplicialComplex& o) const {
        return m_ == o.m_ && facets_ == o.facets_;
    }

    /// Compact text form "m: v v v, v v".
    std::string to_text() const;

private:
    SimplicialComplex(int m, std::vector<Mask> facets) : m_(m), facets_(std::move(facets)) {}

    int m_ = 0;
    std::vector<Mask> facets_;
};

/// Join with disjoint relabeling: K2's vertices are shifted by K1's m.
SimplicialComplex join(const SimplicialComplex& k1, const SimplicialComplex& k2);

/// Cone: a fresh apex vertex 1, the base complex shifted to 2..m+1.
SimplicialComplex cone(const SimplicialComplex& k);

SimplicialComplex void_complex(int m);
SimplicialComplex boundary_simplex(int m);

/// The complex Delta_[j] * boundary Delta_[m-j] on [m] (0 <= j <= m-1):
/// the j-fold cone over the boundary of a simplex.  Its associated
/// manifold is the j-fold product of projective lines times a projective
/// space, and its alpha-vectors are the columns of matrix A.
SimplicialComplex cone_over_boundary(int m, int j);

} // namespace torbord
