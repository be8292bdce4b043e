#include "torbord/simplicial.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace torbord {

std::vector<int> mask_to_vertices(Mask s) {
    std::vector<int> vs;
    for (int v = 0; s; ++v, s >>= 1)
        if (s & 1) vs.push_back(v + 1);
    return vs;
}

Mask vertices_to_mask(const std::vector<int>& vs, int m) {
    Mask s = 0;
    for (int v : vs) {
        if (v < 1 || v > m) fail(errc::vertex_range, "vertex " + std::to_string(v) + " outside 1.." + std::to_string(m));
        s |= Mask{1} << (v - 1);
    }
    return s;
}

bool face_less(Mask a, Mask b) {
    // Lexicographic on sorted vertex sequences; a proper prefix sorts first.
    while (a && b) {
        int va = __builtin_ctzll(a), vb = __builtin_ctzll(b);
        if (va != vb) return va < vb;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

int max_m_cap() {
    static int cap = [] {
        int c = 24;
        if (const char* env = std::getenv("TORBORD_MAX_M")) {
            int v = std::atoi(env);
            if (v >= 2) c = std::min(v, 32);
        }
        return c;
    }();
    return cap;
}

namespace {

// Drop every set contained in another; sort canonically.
std::vector<Mask> antichain_reduce(std::vector<Mask> sets) {
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<Mask> keep;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        bool contained = false;
        for (std::size_t j = 0; j < sets.size() && !contained; ++j)
            if (i != j && (sets[i] & sets[j]) == sets[i] && sets[i] != sets[j]) contained = true;
        if (!contained) keep.push_back(sets[i]);
    }
    std::sort(keep.begin(), keep.end(), face_less);
    return keep;
}

} // namespace

SimplicialComplex SimplicialComplex::from_facet_masks(int m, std::vector<Mask> facets) {
    if (m < 2) fail(errc::m_too_small, "ambient vertex count must be at least 2, got " + std::to_string(m));
    if (m > 64) fail(errc::range, "m exceeds the mask width");
    const Mask full = (m == 64) ? ~Mask{0} : ((Mask{1} << m) - 1);
    for (Mask f : facets) {
        if (f & ~full) fail(errc::vertex_range, "facet uses a vertex outside 1..m");
        if (f == full) fail(errc::full_simplex, "the full simplex on [m] is not permitted");
    }
    facets = antichain_reduce(std::move(facets));
    if (facets.empty()) facets.push_back(0); // void complex: the empty face only
    // A nonempty facet makes the lone empty facet redundant.
    if (facets.size() > 1) {
        facets.erase(std::remove(facets.begin(), facets.end(), Mask{0}), facets.end());
    }
    return SimplicialComplex(m, std::move(facets));
}

SimplicialComplex SimplicialComplex::parse(int m, const std::vector<std::vector<int>>& raw_facets) {
    if (m > max_m_cap() && m >= 2)
        fail(errc::range, "m exceeds the cap " + std::to_string(max_m_cap()) +
                              " (set TORBORD_MAX_M to raise it, ceiling 32)");
    std::vector<Mask> masks;
    masks.reserve(raw_facets.size());
    for (const auto& f : raw_facets) masks.push_back(vertices_to_mask(f, m));
    return from_facet_masks(m, std::move(masks));
}

std::vector<std::vector<int>> SimplicialComplex::facet_vertices() const {
    std::vector<std::vector<int>> out;
    out.reserve(facets_.size());
    for (Mask f : facets_) out.push_back(mask_to_vertices(f));
    return out;
}

bool SimplicialComplex::contains_face(Mask s) const {
    for (Mask f : facets_)
        if ((s & f) == s) return true;
    return false;
}

std::vector<Mask> SimplicialComplex::all_faces() const {
    // Downward closure of the facets via a 2^m bit table.
    if (m_ > 26) fail(errc::range, "face enumeration needs m <= 26");
    std::vector<bool> seen(Mask{1} << m_, false);
    std::vector<Mask> faces;
    std::vector<Mask> stack(facets_);
    for (Mask f : stack) seen[f] = true;
    while (!stack.empty()) {
        Mask f = stack.back();
        stack.pop_back();
        faces.push_back(f);
        for (Mask bits = f; bits; bits &= bits - 1) {
            Mask sub = f & ~(bits & (~bits + 1));
            if (!seen[sub]) {
                seen[sub] = true;
                stack.push_back(sub);
            }
        }
    }
    std::sort(faces.begin(), faces.end());
    return faces;
}

std::vector<Int> SimplicialComplex::f_vector() const {
    std::vector<Int> f(m_, 0);
    for (Mask s : all_faces()) ++f[popcount(s)];
    return f; // f[k] counts k-element faces, i.e. f_{k-1}
}

Int SimplicialComplex::euler_characteristic() const {
    Int chi = 0;
    for (Mask s : all_faces()) {
        int k = popcount(s);
        if (k > 0) chi += (k % 2 == 1) ? 1 : -1;
    }
    return chi;
}

SimplicialComplex SimplicialComplex::link(Mask s) const {
    if (s == 0) return *this;
    if (!contains_face(s)) fail(errc::not_a_face, "link requested at a non-face");
    std::vector<Mask> lf;
    for (Mask f : facets_)
        if ((s & f) == s) lf.push_back(f & ~s);
    return from_facet_masks(m_, std::move(lf));
}

SimplicialComplex SimplicialComplex::deletion(int v) const {
    Mask bit = Mask{1} << (v - 1);
    std::vector<Mask> df;
    for (Mask f : facets_) df.push_back(f & ~bit);
    return from_facet_masks(m_, std::move(df));
}

std::vector<Mask> SimplicialComplex::minimal_nonfaces() const {
    // Inclusion-minimal subsets outside the complex: a non-face all of
    // whose maximal proper subsets are faces.  Full 2^m scan, m capped.
    const Mask full = (Mask{1} << m_) - 1;
    std::vector<bool> face(Mask{1} << m_, false);
    for (Mask s : all_faces()) face[s] = true;
    std::vector<Mask> mins;
    for (Mask s = 1; s <= full; ++s) {
        if (face[s]) continue;
        bool minimal = true;
        for (Mask bits = s; bits && minimal; bits &= bits - 1)
            if (!face[s & ~(bits & (~bits + 1))]) minimal = false;
        if (minimal) mins.push_back(s);
    }
    std::sort(mins.begin(), mins.end(), face_less);
    return mins;
}

SimplicialComplex SimplicialComplex::alexander_dual() const {
    const Mask full = (Mask{1} << m_) - 1;
    std::vector<Mask> duals;
    for (Mask n : minimal_nonfaces()) duals.push_back(full & ~n);
    return from_facet_masks(m_, std::move(duals));
}

bool SimplicialComplex::is_ghost_vertex(int v) const {
    return !contains_face(Mask{1} << (v - 1));
}

bool SimplicialComplex::has_doubly_ghost_vertex() const {
    SimplicialComplex dual = alexander_dual();
    for (int v = 1; v <= m_; ++v)
        if (is_ghost_vertex(v) && dual.is_ghost_vertex(v)) return true;
    return false;
}

std::string SimplicialComplex::to_text() const {
    std::ostringstream os;
    os << m_ << ":";
    bool first_facet = true;
    for (Mask f : facets_) {
        if (f == 0) continue;
        os << (first_facet ? " " : ", ");
        first_facet = false;
        bool first_v = true;
        for (int v : mask_to_vertices(f)) {
            if (!first_v) os << ' ';
            os << v;
            first_v = false;
        }
    }
    return os.str();
}

SimplicialComplex join(const SimplicialComplex& k1, const SimplicialComplex& k2) {
    int m = k1.m() + k2.m();
    std::vector<Mask> facets;
    for (Mask f1 : k1.facet_masks())
        for (Mask f2 : k2.facet_masks()) facets.push_back(f1 | (f2 << k1.m()));
    return SimplicialComplex::from_facet_masks(m, std::move(facets));
}

SimplicialComplex cone(const SimplicialComplex& k) {
    std::vector<Mask> facets;
    for (Mask f : k.facet_masks()) facets.push_back((f << 1) | 1);
    return SimplicialComplex::from_facet_masks(k.m() + 1, std::move(facets));
}

SimplicialComplex void_complex(int m) {
    return SimplicialComplex::from_facet_masks(m, {});
}

SimplicialComplex boundary_simplex(int m) {
    const Mask full = (Mask{1} << m) - 1;
    std::vector<Mask> facets;
    for (int v = 0; v < m; ++v) facets.push_back(full & ~(Mask{1} << v));
    return SimplicialComplex::from_facet_masks(m, std::move(facets));
}

SimplicialComplex cone_over_boundary(int m, int j) {
    if (j < 0 || j > m - 1) fail(errc::range, "need 0 <= j <= m-1");
    const Mask apex = (Mask{1} << j) - 1;
    std::vector<Mask> facets;
    if (j == m - 1) {
        facets.push_back(apex); // Delta on 1..m-1 with vertex m ghost
    } else {
        for (int v = j; v < m; ++v) {
            Mask rest = ((Mask{1} << m) - 1) & ~apex & ~(Mask{1} << v);
            facets.push_back(apex | rest);
        }
    }
    return SimplicialComplex::from_facet_masks(m, std::move(facets));
}

} // namespace torbord
