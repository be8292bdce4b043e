#pragma once

#include "torbord/simplicial.hpp"

namespace torbord {

/// The Bier sphere of K: the deleted join of K with its Alexander dual,
/// an (m-2)-dimensional sphere on 2m vertices.  Vertices 1..m carry the
/// K-part, m+1..2m the primed dual part.
struct BierSphere {
    SimplicialComplex complex; // on 2m vertices
    int origin_m;              // m of the originating complex
};

BierSphere bier_sphere(const SimplicialComplex& k);

/// Facets of the Bier sphere as (face of K, face of dual) mask pairs;
/// every facet has |I| + |J| = m-1.
std::vector<std::pair<Mask, Mask>> bier_facets(const SimplicialComplex& k);

/// (f_{-1}, ..., f_{m-2}) of the Bier sphere by direct enumeration of
/// disjoint admissible pairs.
std::vector<Int> bier_f_vector(const SimplicialComplex& k);

/// h-vector (h_0..h_n) from an f-vector (f_{-1}..f_{n-1}) by exact
/// expansion of sum_k f_{n-1-k} (t-1)^k.
std::vector<Int> h_vector(const std::vector<Int>& f, int n);

/// h-vector of the Bier sphere by the closed formula
///   h_p = 1 + (f_0 + ... + f_{p-1}) - (f_{m-p-1} + ... + f_{m-2}),
/// which is palindromic as written; cross-checked against the binomial
/// transform of the enumerated face vector.
std::vector<Int> h_vector_bier(const SimplicialComplex& k);

/// Ray generators of the canonical complete fan in R^{m-1}: columns
/// -e_1..-e_m for the K-part and e_1..e_m for the primed part, with
/// e_m = -(e_1 + ... + e_{m-1}).  Entry [i][c]: coordinate i of column c;
/// columns 0..m-1 are the -e_i, columns m..2m-1 the e_i.
std::vector<std::vector<long long>> fan_rays(int m);

/// Checks that every facet cone of the canonical fan is unimodular:
/// the m-1 generators have integer determinant +-1 (exact Bareiss).
/// Always true; a failure throws and indicates an implementation bug.
bool facet_cones_unimodular(const SimplicialComplex& k);

} // namespace torbord
