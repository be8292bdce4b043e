#include "torbord/charnum.hpp"

#include "torbord/bier.hpp"
#include "torbord/vectors.hpp"

namespace torbord {

Int chern_number(const SimplicialComplex& k, const Partition& I) {
    const auto alpha = alpha_vector(k, true);
    const auto gamma = gamma_vector(k.m(), I);
    Int s = 0;
    for (int i = 0; i < k.m(); ++i) s += alpha[i] * gamma[i];
    return s;
}

std::map<Partition, Int> all_chern_numbers(const SimplicialComplex& k) {
    std::map<Partition, Int> out;
    for (const auto& I : partitions(k.m() - 1)) out[I] = chern_number(k, I);
    return out;
}

Int milnor_number(const SimplicialComplex& k) {
    const auto alpha = alpha_vector(k, true);
    const int m = k.m();
    Int s = m * alpha[0];
    if (m % 2 == 0) s += 2 * alpha[1];
    return s;
}

Int milnor_generator_bound(int i) {
    int n = i + 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        return n == 1 ? Int(p) : Int(1);
    }
    return Int(n); // n prime (or 1)
}

Int ChiYPolynomial::at_minus_one() const {
    Int s = 0;
    for (const Int& c : coeffs) s += c;
    return s;
}

Int ChiYPolynomial::at_zero() const { return coeffs.empty() ? Int(0) : coeffs[0]; }

Int ChiYPolynomial::at_plus_one() const {
    Int s = 0;
    for (std::size_t p = 0; p < coeffs.size(); ++p) s += (p % 2 == 0) ? coeffs[p] : -coeffs[p];
    return s;
}

ChiYPolynomial chi_y(const SimplicialComplex& k) {
    const int m = k.m();
    const auto alpha = alpha_vector(k, true);

    // alpha-route: sum_k alpha_k (1-y)^k (1 + (-y) + ... + (-y)^{m-k-1}),
    // assembled as a polynomial in y.
    std::vector<Int> in_y(m, 0);
    for (int j = 0; j < m; ++j) {
        if (alpha[j] == 0) continue;
        // (1-y)^j has coefficient (-1)^a C(j,a) at y^a
        for (int a = 0; a <= j; ++a) {
            Int base = binomial(j, a) * alpha[j];
            if (a % 2 == 1) base = -base;
            for (int t = 0; t <= m - j - 1; ++t) {
                // times (-y)^t
                Int c = (t % 2 == 0) ? base : -base;
                in_y[a + t] += c;
            }
        }
    }
    ChiYPolynomial poly;
    poly.coeffs.resize(m);
    for (int p = 0; p < m; ++p) poly.coeffs[p] = (p % 2 == 0) ? in_y[p] : -in_y[p];

    if (poly.coeffs != h_vector_bier(k))
        fail(errc::internal_mismatch, "chi_y: alpha route and h-vector route disagree");
    return poly;
}

Int euler_char_X(const SimplicialComplex& k) { return chi_y(k).at_minus_one(); }

Int signature(const SimplicialComplex& k) { return chi_y(k).at_plus_one(); }

Int todd_genus(const SimplicialComplex& k) { return chi_y(k).at_zero(); }

bool todd_check(const SimplicialComplex& k) {
    const int m = k.m();
    if (m - 1 > 8) fail(errc::range, "todd_check: needs m <= 9");
    const auto tau = todd_coefficients(m - 1);
    Rat total = 0;
    for (const auto& [I, t] : tau) {
        if (t == 0) continue;
        total += t * Rat(chern_number(k, I));
    }
    return total == 1;
}

Int pontryagin_number(const SimplicialComplex& k, const Partition& I) {
    const int m = k.m();
    if (m % 2 == 0)
        fail(errc::dimension, "Pontryagin numbers need odd m (real dimension divisible by 4)");
    const int n = (m - 1) / 2;
    if (I.weight() != n) fail(errc::range, "pontryagin_number: partition must have weight (m-1)/2");
    Int v = 1 - k.euler_characteristic();
    for (int part : I.parts()) v *= binomial(m, part);
    return v;
}

std::map<Partition, Int> all_pontryagin_numbers(const SimplicialComplex& k) {
    std::map<Partition, Int> out;
    for (const auto& I : partitions((k.m() - 1) / 2)) out[I] = pontryagin_number(k, I);
    return out;
}

namespace {

int sw_product(const SimplicialComplex& k, const Partition& I, const Int& scalar) {
    Int v = scalar;
    for (int part : I.parts()) v *= binomial(k.m(), part);
    Int r = ((v % 2) + 2) % 2;
    return r.convert_to<int>();
}

} // namespace

int sw_number_real(const SimplicialComplex& k, const Partition& I) {
    if (I.weight() != k.m() - 1) fail(errc::range, "sw_number_real: partition must have weight m-1");
    return sw_product(k, I, 1 + k.euler_characteristic());
}

int sw_number_complex(const SimplicialComplex& k, const Partition& I) {
    if (I.weight() != k.m() - 1) fail(errc::range, "sw_number_complex: partition must have weight m-1");
    return sw_product(k, I, 1 - k.euler_characteristic());
}

ImmersionBounds immersion_bounds_for_m(int m) {
    int p = 0;
    while ((1 << p) < m) ++p; // 2^(p-1) < m <= 2^p
    ImmersionBounds b;
    b.k_max = ((1 << p) - 1) - (m - 1);
    b.n_real_min = (1 << p) - 1;
    b.n_complex_min = 2 * ((1 << p) - 1);
    return b;
}

ImmersionBounds immersion_bounds(const SimplicialComplex& k) {
    return immersion_bounds_for_m(k.m());
}

SharpImmersionFamily sharp_immersion_family(int n) {
    if (n <= 1) fail(errc::range, "sharp_immersion_family: need n > 1");
    SharpImmersionFamily fam;
    fam.n = n;
    int ones = 0;
    for (int bit = 30; bit >= 0; --bit) {
        if (!(n & (1 << bit))) continue;
        ++ones;
        fam.factors.push_back(boundary_simplex((1 << bit) + 1));
    }
    fam.bound = 2 * n - ones;
    return fam;
}

} // namespace torbord
