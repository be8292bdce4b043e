#include "torbord/bordism.hpp"

#include "torbord/bier.hpp"
#include "torbord/charnum.hpp"
#include "torbord/vectors.hpp"

namespace torbord {

bool bordant_unitary(const SimplicialComplex& k1, const SimplicialComplex& k2) {
    if (k1.m() != k2.m()) fail(errc::range, "bordant_unitary: same m required");
    const int m = k1.m();
    const auto f1 = k1.f_vector(), f2 = k2.f_vector();

    bool by_f = true;
    for (int i = 1; i <= (m - 1) / 2; ++i) {
        // f[i] holds f_{i-1}; the condition compares the differences at
        // i-1 and m-i-1.
        if (f1[i] - f2[i] != f1[m - i] - f2[m - i]) {
            by_f = false;
            break;
        }
    }

    const auto h1 = h_vector_bier(k1), h2 = h_vector_bier(k2);
    bool by_h = true;
    for (int i = 1; i <= (m - 1) / 2; ++i)
        if (h1[i] != h2[i]) {
            by_h = false;
            break;
        }

    if (by_f != by_h)
        fail(errc::internal_mismatch, "bordism criteria disagree (f-differences vs Bier h-vector)");
    return by_f;
}

std::vector<int> bordism_basis_indices(int m) {
    std::vector<int> basis;
    for (int j = m - 1; j >= 0; j -= 2) basis.push_back(j);
    return basis;
}

std::map<int, std::map<int, Int>> nonbasis_class_expansions(int m) {
    // Each class satisfies [X_j] = sum_{k>=j} (-1)^{m-k-1} C(m-j, k-j) [X_k].
    // For j with m-1-j odd the k = j term is -[X_j]; moving it across and
    // halving expresses [X_j] over higher indices, which are already in
    // basis form when eliminated in descending order.
    std::map<int, std::map<int, Int>> expansions;
    for (int j = m - 2; j >= 0; --j) {
        if ((m - 1 - j) % 2 == 0) continue; // basis class
        std::map<int, Int> expr;
        for (int k = j + 1; k <= m - 1; ++k) {
            Int c = binomial(m - j, k - j);
            if ((m - k - 1) % 2 == 1) c = -c;
            if ((m - 1 - k) % 2 == 0) {
                expr[k] += c;
            } else {
                for (const auto& [b, v] : expansions.at(k)) expr[b] += c * v;
            }
        }
        for (auto& [b, v] : expr) {
            if (v % 2 != 0)
                fail(errc::nonintegral, "halving failed while reducing [X_" + std::to_string(j) + "]");
            v /= 2;
        }
        expansions[j] = std::move(expr);
    }
    return expansions;
}

BordismClass decompose(const SimplicialComplex& k) {
    const int m = k.m();
    BordismClass cls;
    cls.m = m;
    cls.raw = alpha_vector(k, true);
    for (int b : bordism_basis_indices(m)) cls.reduced[b] = 0;
    const auto expansions = nonbasis_class_expansions(m);
    for (int j = 0; j < m; ++j) {
        if ((m - 1 - j) % 2 == 0) {
            cls.reduced[j] += cls.raw[j];
        } else {
            for (const auto& [b, v] : expansions.at(j)) cls.reduced[b] += cls.raw[j] * v;
        }
    }
    return cls;
}

GeneratorCertificate is_polynomial_generator(const SimplicialComplex& k) {
    const int m = k.m();
    const auto alpha = alpha_vector(k, true);
    GeneratorCertificate cert;
    cert.milnor = milnor_number(k);
    cert.bound = milnor_generator_bound(m - 1);

    auto is_prime = [](int n) {
        if (n < 2) return false;
        for (int d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    };
    auto power_of_two = [](int n) { return n >= 2 && (n & (n - 1)) == 0; };

    if (m % 2 == 1 && is_prime(m) && (alpha[0] == 1 || alpha[0] == -1)) {
        cert.generator = true;
        cert.condition = "m odd prime, alpha_0 = " + alpha[0].str();
    } else if (power_of_two(m)) {
        Int v = Int(m / 2) * alpha[0] + alpha[1];
        if (v == 1 || v == -1) {
            cert.generator = true;
            cert.condition = "m = 2^k, 2^(k-1) alpha_0 + alpha_1 = " + v.str();
        }
    }

    const bool by_milnor =
        (cert.milnor == cert.bound) || (cert.milnor == -cert.bound);
    if (cert.generator != by_milnor)
        fail(errc::internal_mismatch, "generator criterion disagrees with |s_{m-1}| = m_{m-1}");
    if (!cert.generator) cert.condition = "none";
    return cert;
}

bool null_bordant_real(const SimplicialComplex& k) {
    if (k.m() % 2 == 0) return true;
    return k.euler_characteristic() % 2 != 0;
}

bool orientable_real(const SimplicialComplex& k) { return k.m() % 2 == 0; }

bool null_bordant_oriented(const SimplicialComplex& k) {
    if (k.m() % 2 == 0) return true;
    return k.euler_characteristic() == 1;
}

Int oriented_class_coefficient(const SimplicialComplex& k) {
    if (k.m() % 2 == 0) return 0;
    return 1 - k.euler_characteristic();
}

} // namespace torbord
