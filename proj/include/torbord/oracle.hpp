#pragma once

#include <string>
#include <unordered_map>

#include "torbord/gamma.hpp"
#include "torbord/simplicial.hpp"

namespace torbord {

/// Brute-force pairing of a degree-(m-1) square-free expression against
/// the fundamental class of X_K.  A monomial x_S u^{m-1-|S|} pairs to
/// 1 - chi(link_K S) when S is a face and to 0 otherwise; nothing else
/// is assumed, so the evaluator is independent of every closed formula
/// it is used to verify.
class PairingEvaluator {
public:
    explicit PairingEvaluator(const SimplicialComplex& k);

    const SimplicialComplex& complex() const { return k_; }

    /// Pairing value of a single monomial (0 off the complex).
    Int value(Mask subset) const;

    /// Evaluates a homogeneous expression of total degree m-1.
    Int evaluate(const SquareFreeExpr& expr) const;

private:
    SimplicialComplex k_;
    std::unordered_map<Mask, Int> link_values_;
};

/// Characteristic numbers computed entirely inside the cohomology ring:
/// the relevant total class is built by repeated multiplication, graded
/// pieces are multiplied out per partition, and the result is paired by
/// the evaluator.  m <= 7 keeps the 2^m-term products at desk scale.
Int oracle_chern(const SimplicialComplex& k, const Partition& I);
Int oracle_milnor(const SimplicialComplex& k);
Int oracle_pontryagin(const SimplicialComplex& k, const Partition& I);
int oracle_sw_real(const SimplicialComplex& k, const Partition& I);

/// Comparison of every closed-form characteristic number against the
/// oracle.  Mismatches are reported as data, not errors; an empty report
/// is a pass.
struct VerifyReport {
    std::vector<std::string> mismatches;
    bool ok() const { return mismatches.empty(); }
};

VerifyReport verify(const SimplicialComplex& k);

} // namespace torbord
