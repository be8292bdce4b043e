#include "torbord/oracle.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "torbord/charnum.hpp"
#include "torbord/vectors.hpp"

namespace torbord {

PairingEvaluator::PairingEvaluator(const SimplicialComplex& k)
    : k_(k), link_values_(link_euler_values(k)) {}

Int PairingEvaluator::value(Mask subset) const {
    auto it = link_values_.find(subset);
    return it == link_values_.end() ? Int(0) : it->second;
}

Int PairingEvaluator::evaluate(const SquareFreeExpr& expr) const {
    const int deg = k_.m() - 1;
    if (!expr.is_homogeneous(deg))
        fail(errc::degree, "pairing needs a homogeneous expression of degree m-1");
    Int total = 0;
    for (const auto& [key, c] : expr.terms()) total += c * value(key.subset);
    return total;
}

namespace {

void check_oracle_m(int m) {
    if (m > 7) fail(errc::range, "oracle sweeps support m <= 7");
}

// The total classes do not depend on the complex; build them once per m.
const SquareFreeExpr& cached_total_chern(int m) {
    static std::map<int, SquareFreeExpr> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(m);
    if (it == cache.end()) it = cache.emplace(m, SquareFreeExpr::total_chern(m)).first;
    return it->second;
}

const SquareFreeExpr& cached_total_pontryagin(int m) {
    static std::map<int, SquareFreeExpr> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(m);
    if (it == cache.end()) it = cache.emplace(m, SquareFreeExpr::total_pontryagin(m)).first;
    return it->second;
}

SquareFreeExpr milnor_class_expr(int m) {
    // Power sum of all 2m line classes: sum x_i^{m-1} + sum (x_i+u)^{m-1},
    // reduced term by term via x_i^k = (-u)^{k-1} x_i.
    SquareFreeExpr s(m);
    for (int i = 0; i < m; ++i) {
        const Mask xi = Mask{1} << i;
        // x_i^{m-1} = (-1)^{m-2} u^{m-2} x_i
        s.add_term(xi, m - 2, (m % 2 == 0) ? 1 : -1);
        // (x_i + u)^{m-1} = sum_j C(m-1,j) x_i^j u^{m-1-j}
        for (int j = 0; j <= m - 1; ++j) {
            Int c = binomial(m - 1, j);
            if (j == 0) {
                s.add_term(0, m - 1, c);
            } else {
                if ((j - 1) % 2 == 1) c = -c;
                s.add_term(xi, m - 2, c);
            }
        }
    }
    return s;
}

} // namespace

Int oracle_chern(const SimplicialComplex& k, const Partition& I) {
    check_oracle_m(k.m());
    if (I.weight() != k.m() - 1) fail(errc::range, "oracle_chern: partition must have weight m-1");
    const PairingEvaluator eval(k);
    const auto& c = cached_total_chern(k.m());
    SquareFreeExpr prod = SquareFreeExpr::one(k.m());
    for (int part : I.parts()) prod *= c.graded_piece(part);
    return eval.evaluate(prod);
}

Int oracle_milnor(const SimplicialComplex& k) {
    check_oracle_m(k.m());
    const PairingEvaluator eval(k);
    return eval.evaluate(milnor_class_expr(k.m()));
}

Int oracle_pontryagin(const SimplicialComplex& k, const Partition& I) {
    check_oracle_m(k.m());
    const int m = k.m();
    if (m % 2 == 0) fail(errc::dimension, "oracle_pontryagin: odd m only");
    if (I.weight() != (m - 1) / 2) fail(errc::range, "oracle_pontryagin: weight (m-1)/2 expected");
    const PairingEvaluator eval(k);
    const auto& p = cached_total_pontryagin(m);
    SquareFreeExpr prod = SquareFreeExpr::one(m);
    for (int part : I.parts()) prod *= p.graded_piece(2 * part);
    return eval.evaluate(prod);
}

int oracle_sw_real(const SimplicialComplex& k, const Partition& I) {
    check_oracle_m(k.m());
    if (I.weight() != k.m() - 1) fail(errc::range, "oracle_sw_real: partition must have weight m-1");
    // Same total class as the Chern expression; coefficients are reduced
    // mod 2 only at the very end.
    Int v = oracle_chern(k, I);
    Int r = ((v % 2) + 2) % 2;
    return r.convert_to<int>();
}

VerifyReport verify(const SimplicialComplex& k) {
    check_oracle_m(k.m());
    const int m = k.m();
    VerifyReport report;
    auto mismatch = [&](const std::string& what, const Int& closed, const Int& oracle) {
        std::ostringstream os;
        os << what << ": closed form " << closed << " != oracle " << oracle;
        report.mismatches.push_back(os.str());
    };

    for (const auto& I : partitions(m - 1)) {
        Int closed = chern_number(k, I);
        Int orac = oracle_chern(k, I);
        if (closed != orac) mismatch("c_{" + I.to_string() + "}", closed, orac);

        int sw_closed = sw_number_real(k, I);
        int sw_orac = oracle_sw_real(k, I);
        if (sw_closed != sw_orac)
            mismatch("w_{" + I.to_string() + "}[X^R]", sw_closed, sw_orac);
    }

    {
        Int closed = milnor_number(k);
        Int orac = oracle_milnor(k);
        if (closed != orac) mismatch("s_{m-1}", closed, orac);
    }

    if (m % 2 == 1) {
        for (const auto& I : partitions((m - 1) / 2)) {
            Int closed = pontryagin_number(k, I);
            Int orac = oracle_pontryagin(k, I);
            if (closed != orac) mismatch("p_{" + I.to_string() + "}", closed, orac);
        }
    }
    return report;
}

} // namespace torbord
