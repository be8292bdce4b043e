#pragma once

#include <map>

#include "torbord/gamma.hpp"
#include "torbord/simplicial.hpp"

namespace torbord {

/// Chern number c_I[X_K] = <alpha(K), gamma_I>, I a partition of m-1.
Int chern_number(const SimplicialComplex& k, const Partition& I);

/// All Chern numbers of X_K, keyed by partition of m-1.
std::map<Partition, Int> all_chern_numbers(const SimplicialComplex& k);

/// Milnor number s_{m-1}[X_K] = m alpha_0 + ((-1)^m + 1) alpha_1.
Int milnor_number(const SimplicialComplex& k);

/// m_i: p when i+1 is a power of the prime p, otherwise 1.  The bound on
/// |s_i| that detects polynomial generators of the unitary bordism ring.
Int milnor_generator_bound(int i);

/// The chi_y-genus of X_K.  coefficient(p) multiplies (-y)^p and equals
/// h_p of the Bier sphere; always palindromic.
struct ChiYPolynomial {
    std::vector<Int> coeffs; // length m, in the variable (-y)

    Int at_minus_one() const;  // Euler characteristic of X_K
    Int at_zero() const;       // Todd genus, always 1
    Int at_plus_one() const;   // signature
};

/// Computed through the alpha-route polynomial and the h-vector route;
/// the two must agree.
ChiYPolynomial chi_y(const SimplicialComplex& k);

Int euler_char_X(const SimplicialComplex& k);
Int signature(const SimplicialComplex& k);
Int todd_genus(const SimplicialComplex& k);

/// Exact check of sum_I tau_I c_I[X_K] = 1 (the Todd genus in Chern
/// numbers); m <= 9 since it needs the degree-(m-1) Todd coefficients.
bool todd_check(const SimplicialComplex& k);

/// Pontryagin number p_I[X_K] = (1 - chi(K)) prod C(m, i_t) for odd
/// m = 2n+1 and I a partition of n.  Even m has no Pontryagin numbers.
Int pontryagin_number(const SimplicialComplex& k, const Partition& I);
std::map<Partition, Int> all_pontryagin_numbers(const SimplicialComplex& k);

/// Stiefel-Whitney number of the real toric manifold X_K^R (dimension
/// m-1): w_I = (1 + chi(K)) prod C(m, i_t) mod 2, I a partition of m-1.
int sw_number_real(const SimplicialComplex& k, const Partition& I);

/// Stiefel-Whitney number of X_K built from the even classes w_{2i} = c_i
/// mod 2: w_I = (1 - chi(K)) prod C(m, i_t) mod 2, I a partition of m-1.
int sw_number_complex(const SimplicialComplex& k, const Partition& I);

/// Immersion dimension bounds.  With p defined by 2^(p-1) < m <= 2^p:
/// the top nonvanishing dual Stiefel-Whitney class sits in degree
/// k_max = (2^p - 1) - (m - 1), forcing N >= 2^p - 1 for X_K^R and
/// N >= 2(2^p - 1) for X_K.
struct ImmersionBounds {
    int k_max;
    int n_real_min;
    int n_complex_min;
};
ImmersionBounds immersion_bounds(const SimplicialComplex& k);
ImmersionBounds immersion_bounds_for_m(int m);

/// A product of canonical real toric manifolds of total dimension n whose
/// smallest immersion dimension meets the 2n - alpha(n) bound (alpha =
/// binary digit sum).  Factors default to boundaries of simplices on
/// 2^(i_j) + 1 vertices, one per binary digit of n.
struct SharpImmersionFamily {
    int n;
    std::vector<SimplicialComplex> factors;
    int bound; // 2n - alpha(n)
};
SharpImmersionFamily sharp_immersion_family(int n);

} // namespace torbord
