#pragma once

#include <map>
#include <string>
#include <vector>

#include "torbord/numeric.hpp"

namespace torbord {

/// A partition: weakly decreasing positive integers.  Zero parts are
/// dropped on construction; the empty partition is the partition of 0.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    int weight() const { return weight_; }
    int length() const { return static_cast<int>(parts_.size()); }
    const std::vector<int>& parts() const { return parts_; }

    /// d_i = multiplicity of the part i, for i = 1..largest part.
    std::vector<int> multiplicities() const;

    /// "2,1,1"; the empty partition prints as "0".
    std::string to_string() const;
    static Partition parse(const std::string& text);

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return !(*this == o); }
    bool operator<(const Partition& o) const;

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

/// All partitions of n in reverse-lexicographic order, (n) first,
/// (1,...,1) last.  n <= 30.
std::vector<Partition> partitions(int n);

/// Number of 0-1 matrices with row sums lambda and column sums mu
/// (0 when the weights differ).  This is the transition coefficient
/// between the elementary and monomial symmetric function bases.
/// Memoized; backtracks over columns with a Gale-Ryser feasibility prune.
Int transition_M(const Partition& lambda, const Partition& mu);

/// Stirling numbers of the second kind, 0 <= k <= n <= 30.
Int stirling2(int n, int k);

/// The lower triangular involution with entries
///   a_{k,j} = (-1)^(m-k-1) C(m-j, k-j),  0 <= j <= k <= m-1.
/// It exchanges the alpha- and mu-vectors of a complex: mu = A alpha.
Matrix matrix_A(int m);

/// The involution relating the alpha- and f-vectors.  B has entries
/// b_{k,j} = (-1)^k C(j,k) and acts on the alternating face vector
/// fhat_j = (-1)^j f_{j-1}:  alpha = B fhat, and B fhat(alpha) = ...,
/// B^2 = E exactly.  (The unsigned map f -> alpha is not involutive;
/// the sign convention is what carries the involution.)
Matrix matrix_B(int m);

/// alpha_k = (-1)^k sum_j (-1)^j f_{j-1} C(j,k): matrix_B applied to the
/// alternating f-vector.
std::vector<Int> alpha_from_f_vector(const std::vector<Int>& f);

/// Inverse of the above: f_{j-1} = sum_k C(k,j) alpha_k.
std::vector<Int> f_from_alpha_vector(const std::vector<Int>& alpha);

/// Coefficients tau_I of the degree-n Todd polynomial expanded in the
/// elementary symmetric (Chern class) basis: Td_n = sum_{I |- n} tau_I c_I.
/// Exact rationals; n <= 8.
std::map<Partition, Rat> todd_coefficients(int n);

} // namespace torbord
