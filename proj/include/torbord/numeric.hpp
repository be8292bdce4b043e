#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <vector>

#include "torbord/error.hpp"

namespace torbord {

// All arithmetic in the library is exact: arbitrary-precision integers and
// rationals, no floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using Matrix = std::vector<std::vector<Int>>;

/// C(n, k) with the usual conventions: 0 for k < 0 or k > n (n >= 0).
Int binomial(long long n, long long k);

Int factorial(int n);

/// n! / (k_1! k_2! ...); the k_i must sum to at most n, the remainder
/// is treated as a final block.  Used for partition multiplicities.
Int multinomial(int n, const std::vector<int>& ks);

Matrix identity_matrix(int n);
Matrix mat_mul(const Matrix& a, const Matrix& b);
bool is_identity(const Matrix& a);

/// Exact integer determinant by fraction-free Bareiss elimination.
Int det_bareiss(Matrix a);

/// Deterministic 64-bit generator (splitmix64); used wherever sampled
/// complexes must be reproducible across platforms from a seed.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform value in [0, bound); bound > 0.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

private:
    std::uint64_t state_;
};

} // namespace torbord
