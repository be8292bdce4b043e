#pragma once

#include <map>

#include "torbord/simplicial.hpp"
#include "torbord/symfun.hpp"

namespace torbord {

/// An exact-integer linear combination of monomials x_S u^d with S a
/// square-free subset of [m].  Products are reduced on the fly by the
/// relation x_i^2 = -u x_i, so the representation stays square-free.
/// The grading deg x_i = deg u = 1 is tracked for homogeneous expressions.
class SquareFreeExpr {
public:
    struct Key {
        Mask subset;
        int upow;
        bool operator<(const Key& o) const {
            return subset != o.subset ? subset < o.subset : upow < o.upow;
        }
        bool operator==(const Key& o) const { return subset == o.subset && upow == o.upow; }
    };

    explicit SquareFreeExpr(int m) : m_(m) {}

    int m() const { return m_; }
    const std::map<Key, Int>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    void add_term(Mask subset, int upow, const Int& coeff);

    SquareFreeExpr& operator+=(const SquareFreeExpr& o);
    SquareFreeExpr operator*(const SquareFreeExpr& o) const;
    SquareFreeExpr& operator*=(const SquareFreeExpr& o);

    /// Terms of total degree |S| + d equal to k.
    SquareFreeExpr graded_piece(int k) const;

    /// True when every term has total degree deg.
    bool is_homogeneous(int deg) const;

    /// The constant 1.
    static SquareFreeExpr one(int m);

    /// sigma_k: the sum of x_S over all k-subsets of [m].
    static SquareFreeExpr sigma(int m, int k);

    /// The total Chern expression prod_i (1 + 2 x_i + u), built by
    /// repeated multiplication.
    static SquareFreeExpr total_chern(int m);

    /// The total Pontryagin expression prod_i (1 + x_i^2 + (x_i+u)^2),
    /// built from the squared variables and reduced term by term.
    static SquareFreeExpr total_pontryagin(int m);

private:
    int m_;
    std::map<Key, Int> terms_;
};

/// gamma_{I,k} read off the ring expansion of c_{i_1}...c_{i_p}: expand in
/// the square-free ring, check the coefficient at each u-power depends on
/// |S| only, and collapse.  c_I = sum_k gamma_{I,k} sigma_k u^{m-1-k}.
/// m <= 10; results are cached per (m, I).
std::vector<Int> gamma_vector(int m, const Partition& I);

/// The same coefficients by the combinatorial double sum over partitions
/// mu with l(mu) = k and splittings r_t + s_t = i_t, using the 0-1 matrix
/// transition counts.  Cross-checked against the ring route; m <= 8.
std::vector<Int> gamma_via_partition_formula(int m, const Partition& I);

/// Chern number c_I of the standard product (CP^1)^j x CP^{m-j-1} by the
/// closed multinomial formula.  Agrees with gamma_{I,j} mod 2 but not
/// over the integers (the canonical manifolds carry a different almost
/// complex structure).
Int product_chern(int m, int j, const Partition& I);

} // namespace torbord
