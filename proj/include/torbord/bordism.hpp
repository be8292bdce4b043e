#pragma once

#include <map>

#include "torbord/simplicial.hpp"
#include "torbord/symfun.hpp"

namespace torbord {

/// Unitary bordism equality of X_{K1} and X_{K2}: the f-vector difference
/// criterion and the Bier h-vector criterion, both evaluated; they must
/// agree (internal check) and the common verdict is returned.
bool bordant_unitary(const SimplicialComplex& k1, const SimplicialComplex& k2);

/// The class [X_K] in the unitary bordism group.  Raw coordinates over
/// ([X_0], ..., [X_{m-1}]) are alpha(K); reduced coordinates are over the
/// basis {[X_{m-1-2k}]}, obtained by eliminating the non-basis classes in
/// descending order through their relations, with exact halving.
struct BordismClass {
    int m = 0;
    std::vector<Int> raw;        // alpha(K)
    std::map<int, Int> reduced;  // basis index (m-1, m-3, ...) -> coefficient
};

BordismClass decompose(const SimplicialComplex& k);

/// Basis indices m-1, m-3, ... down to 0 or 1; the rank is floor((m+1)/2).
std::vector<int> bordism_basis_indices(int m);

/// Expansion of each non-basis class [X_j] over the basis classes.
std::map<int, std::map<int, Int>> nonbasis_class_expansions(int m);

/// Generator detection for the unitary bordism ring: m an odd prime with
/// alpha_0 = +-1, or m = 2^k with 2^(k-1) alpha_0 + alpha_1 = +-1.  The
/// certificate carries the Milnor number and the bound it must meet; the
/// two criteria are asserted consistent.
struct GeneratorCertificate {
    bool generator = false;
    Int milnor;     // s_{m-1}[X_K]
    Int bound;      // m_{m-1}
    std::string condition;
};

GeneratorCertificate is_polynomial_generator(const SimplicialComplex& k);

/// X_K^R bounds a smooth manifold iff m is even, or m odd with odd chi(K).
bool null_bordant_real(const SimplicialComplex& k);

/// X_K^R is orientable iff m is even (w_1 = m u).
bool orientable_real(const SimplicialComplex& k);

/// X_K is orientedly null-bordant iff m is even, or m odd with chi(K) = 1.
bool null_bordant_oriented(const SimplicialComplex& k);

/// For odd m, [X_K] = (1 - chi(K)) [CP^{m-1}] in the oriented bordism
/// ring; the coefficient (0 for even m).
Int oriented_class_coefficient(const SimplicialComplex& k);

} // namespace torbord
