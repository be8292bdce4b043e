#pragma once

#include <unordered_map>

#include "torbord/simplicial.hpp"

namespace torbord {

/// 1 - chi(link_K S) for every face S of K, keyed by face mask.  This is
/// the pairing value of the square-free monomial x_S u^{m-1-|S|} against
/// the fundamental class, and the primitive everything else reduces to.
std::unordered_map<Mask, Int> link_euler_values(const SimplicialComplex& k);

/// alpha_k = sum over k-element faces S of (1 - chi(link_K S)).
std::vector<Int> alpha_from_links(const SimplicialComplex& k);

/// alpha from the f-vector through the involution B (binomial transform
/// of the alternating face vector).
std::vector<Int> alpha_from_f(const SimplicialComplex& k);

/// Default alpha: both routes computed and compared; disagreement is an
/// internal bug trap.  fast=true skips the link route.
std::vector<Int> alpha_vector(const SimplicialComplex& k, bool fast = false);

/// mu = A alpha, cross-checked against alpha of the Alexander dual.
std::vector<Int> mu_vector(const SimplicialComplex& k, bool fast = false);

/// Exact polynomial identity equivalent to the exponential generating
/// function relation between the alpha- and mu-numbers:
///   sum_j alpha_j z^{m-j}(1+z)^j + sum_j mu_j (1+z)^j = (1+z)^m.
bool egf_identity_holds(const SimplicialComplex& k);

/// sum_j j^n alpha_j = sum_j j! f_{j-1} S(n,j) for 0 <= n <= n_max
/// (0^0 = 1 at n = 0).
bool stirling_identity_holds(const SimplicialComplex& k, int n_max);

} // namespace torbord
