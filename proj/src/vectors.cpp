#include "torbord/vectors.hpp"

#include "torbord/symfun.hpp"

namespace torbord {

std::unordered_map<Mask, Int> link_euler_values(const SimplicialComplex& k) {
    // chi(link_K S) = sum over faces tau strictly containing S of
    // (-1)^(|tau \ S| - 1); accumulate over subset pairs.
    std::unordered_map<Mask, Int> val;
    const auto faces = k.all_faces();
    val.reserve(faces.size() * 2);
    for (Mask s : faces) val[s] = 1;
    for (Mask tau : faces) {
        if (tau == 0) continue;
        for (Mask s = (tau - 1) & tau;; s = (s - 1) & tau) {
            val[s] += (popcount(tau ^ s) % 2 == 0) ? 1 : -1;
            if (s == 0) break;
        }
    }
    return val;
}

std::vector<Int> alpha_from_links(const SimplicialComplex& k) {
    std::vector<Int> alpha(k.m(), 0);
    for (const auto& [s, v] : link_euler_values(k)) alpha[popcount(s)] += v;
    return alpha;
}

std::vector<Int> alpha_from_f(const SimplicialComplex& k) {
    return alpha_from_f_vector(k.f_vector());
}

std::vector<Int> alpha_vector(const SimplicialComplex& k, bool fast) {
    auto a = alpha_from_f(k);
    if (!fast && a != alpha_from_links(k))
        fail(errc::internal_mismatch, "alpha-vector: link route and f route disagree");
    return a;
}

std::vector<Int> mu_vector(const SimplicialComplex& k, bool fast) {
    const int m = k.m();
    const auto alpha = alpha_vector(k, fast);
    const auto a = matrix_A(m);
    std::vector<Int> mu(m, 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= i; ++j) mu[i] += a[i][j] * alpha[j];
    if (!fast && mu != alpha_vector(k.alexander_dual(), true))
        fail(errc::internal_mismatch, "mu-vector: A*alpha differs from alpha of the dual");
    return mu;
}

namespace {

// coefficient list, poly[i] = coefficient of z^i
using Poly = std::vector<Int>;

void add_scaled_binomial_power(Poly& acc, const Int& c, int shift, int pow) {
    // acc += c * z^shift * (1+z)^pow
    for (int t = 0; t <= pow; ++t) acc[shift + t] += c * binomial(pow, t);
}

} // namespace

bool egf_identity_holds(const SimplicialComplex& k) {
    const int m = k.m();
    const auto alpha = alpha_vector(k, true);
    const auto mu = mu_vector(k, true);
    Poly lhs(2 * m + 1, 0), rhs(2 * m + 1, 0);
    for (int j = 0; j < m; ++j) {
        add_scaled_binomial_power(lhs, alpha[j], m - j, j);
        add_scaled_binomial_power(lhs, mu[j], 0, j);
    }
    add_scaled_binomial_power(rhs, 1, 0, m);
    return lhs == rhs;
}

bool stirling_identity_holds(const SimplicialComplex& k, int n_max) {
    if (n_max < 0 || n_max > 10) fail(errc::range, "stirling identity: need 0 <= n_max <= 10");
    const int m = k.m();
    const auto alpha = alpha_vector(k, true);
    const auto f = k.f_vector();
    for (int n = 0; n <= n_max; ++n) {
        Int lhs = 0, rhs = 0;
        for (int j = 0; j < m; ++j) {
            Int jn = 1; // 0^0 = 1
            for (int t = 0; t < n; ++t) jn *= j;
            lhs += jn * alpha[j];
            if (j <= n) rhs += factorial(j) * f[j] * stirling2(n, j);
        }
        if (lhs != rhs) return false;
    }
    return true;
}

} // namespace torbord
