// Acceptance suite: one line per criterion, exact checks only.
// Usage: torbord_acceptance [--cli path/to/torbord]

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "torbord/bier.hpp"
#include "torbord/bordism.hpp"
#include "torbord/charnum.hpp"
#include "torbord/enumerate.hpp"
#include "torbord/io.hpp"
#include "torbord/oracle.hpp"
#include "torbord/vectors.hpp"

using namespace torbord;

namespace {

std::string g_cli_path;

struct Criterion {
    int number;
    std::string label;
    std::function<void(std::vector<std::string>&)> run;
};

std::vector<Int> iv(std::initializer_list<long long> xs) { return {xs.begin(), xs.end()}; }

void expect(std::vector<std::string>& fails, bool ok, const std::string& what) {
    if (!ok) fails.push_back(what);
}

SimplicialComplex e1() { return SimplicialComplex::parse(4, {{1, 2, 3}, {4}}); }
SimplicialComplex e3() { return SimplicialComplex::parse(3, {{1, 2}, {1, 3}, {2, 3}}); }
SimplicialComplex e4() { return SimplicialComplex::parse(4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}}); }
SimplicialComplex e5a() { return SimplicialComplex::parse(5, {{1}, {2, 3}, {3, 4}, {3, 5}, {4, 5}}); }
SimplicialComplex e5b() { return SimplicialComplex::parse(5, {{1}, {2, 3, 4}, {3, 5}, {4, 5}}); }

// --- 1: gamma tables ---------------------------------------------------
void crit_gamma_tables(std::vector<std::string>& fails) {
    expect(fails, gamma_vector(3, Partition({1, 1})) == iv({9, 8, 8}), "gamma_{1,1} at m=3");
    expect(fails, gamma_vector(3, Partition({2})) == iv({3, 4, 4}), "gamma_{2} at m=3");
    expect(fails, gamma_vector(4, Partition({1, 1, 1})) == iv({64, 56, 48, 48}), "gamma_{1,1,1} at m=4");
    expect(fails, gamma_vector(4, Partition({2, 1})) == iv({24, 24, 24, 24}), "gamma_{2,1} at m=4");
}

// --- 2: product structure discrepancy ----------------------------------
void crit_product_discrepancy(std::vector<std::string>& fails) {
    const Int pc = product_chern(4, 1, Partition({1, 1, 1}));
    const Int g = gamma_vector(4, Partition({1, 1, 1}))[1];
    expect(fails, pc == 54, "product Chern number is 54");
    expect(fails, g == 56, "canonical Chern number is 56");
    expect(fails, (g - pc) % 2 == 0, "mod-2 agreement");
}

// --- 3: matrix fixtures -------------------------------------------------
void crit_matrices(std::vector<std::string>& fails) {
    const auto a4 = matrix_A(4);
    const Matrix at = {{-1, 4, -6, 4}, {0, 1, -3, 3}, {0, 0, -1, 2}, {0, 0, 0, 1}};
    bool match = true;
    for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k)
            if (a4[k][j] != at[j][k]) match = false;
    expect(fails, match, "A^t at m=4 equals the displayed matrix");
    for (int m = 2; m <= 12; ++m) {
        expect(fails, is_identity(mat_mul(matrix_A(m), matrix_A(m))),
               "A^2 = E at m=" + std::to_string(m));
        expect(fails, is_identity(mat_mul(matrix_B(m), matrix_B(m))),
               "B^2 = E at m=" + std::to_string(m));
    }
}

// --- 4: the worked m=4 example ------------------------------------------
void crit_worked_example(std::vector<std::string>& fails) {
    const auto k = e1();
    expect(fails, alpha_vector(k) == iv({-1, 1, 0, 1}), "alpha of the example complex");
    expect(fails, mu_vector(k) == iv({1, -3, 3, 0}), "mu of the example complex");

    // both displayed class expressions pair equally with every gamma vector
    const auto alpha = alpha_vector(k);
    const auto mu = mu_vector(k);
    for (const auto& I : partitions(3)) {
        const auto g = gamma_vector(4, I);
        Int pa = 0, pm = 0;
        for (int j = 0; j < 4; ++j) {
            pa += alpha[j] * g[j];
            pm += mu[j] * g[j];
        }
        expect(fails, pa == pm, "alpha- and mu-expressions pair equally at I=" + I.to_string());
    }

    // the m=4 relations: [X_2] = [X_3] and [X_0] = 2[X_1] - [X_2]
    const auto expansions = nonbasis_class_expansions(4);
    expect(fails, expansions.at(2) == std::map<int, Int>{{3, 1}}, "[X_2] = [X_3]");
    expect(fails, expansions.at(0) == std::map<int, Int>{{1, 2}, {3, -1}},
           "[X_0] = 2[X_1] - [X_2] over the basis");

    const auto cls = decompose(k);
    expect(fails, cls.reduced == std::map<int, Int>{{1, -1}, {3, 2}},
           "reduced coordinates of the example class");
}

// --- 5: bordant pairs ----------------------------------------------------
void crit_bordant_pairs(std::vector<std::string>& fails) {
    const auto p1a = SimplicialComplex::parse(4, {{1}, {2}, {3}});
    const auto p1b = e1();
    expect(fails, bordant_unitary(p1a, p1b), "three points ~ example complex at m=4");
    expect(fails, bordant_unitary(e5a(), e5b()), "the m=5 pair");
    for (const auto& I : partitions(3))
        expect(fails, oracle_chern(p1a, I) == oracle_chern(p1b, I),
               "oracle Chern equality at m=4, I=" + I.to_string());
    for (const auto& I : partitions(4))
        expect(fails, oracle_chern(e5a(), I) == oracle_chern(e5b(), I),
               "oracle Chern equality at m=5, I=" + I.to_string());
}

// --- 6: Todd identities ---------------------------------------------------
void crit_todd(std::vector<std::string>& fails) {
    const auto t2 = todd_coefficients(2);
    expect(fails, t2.at(Partition({1, 1})) == Rat(1) / 12 && t2.at(Partition({2})) == Rat(1) / 12,
           "Td_2 = (c_1^2 + c_2)/12");
    const auto t3 = todd_coefficients(3);
    expect(fails,
           t3.at(Partition({2, 1})) == Rat(1) / 24 && t3.at(Partition({3})) == 0 &&
               t3.at(Partition({1, 1, 1})) == 0,
           "Td_3 = c_1 c_2 / 24");

    for (int m = 3; m <= 7; ++m) {
        const auto tau = todd_coefficients(m - 1);
        for (int kk = 0; kk < m; ++kk) {
            Rat xi = 0;
            for (const auto& [I, t] : tau) xi += t * Rat(gamma_vector(m, I)[kk]);
            expect(fails, xi == 1, "xi_" + std::to_string(kk) + " = 1 at m=" + std::to_string(m));
        }
    }

    for (int m = 2; m <= 4; ++m)
        for (const auto& k : canonical_complexes(m))
            expect(fails, todd_check(k), "Todd genus 1 for " + k.to_text());
    for (int m = 5; m <= 7; ++m) {
        SplitMix64 rng(60 + m);
        for (int t = 0; t < 40; ++t) {
            const auto k = random_complex(m, rng);
            expect(fails, todd_check(k), "Todd genus 1 for " + k.to_text());
        }
    }
}

// --- 7: oracle equivalence sweep ------------------------------------------
void crit_oracle_sweep(std::vector<std::string>& fails) {
    for (int m = 2; m <= 4; ++m)
        for (const auto& k : canonical_complexes(m)) {
            const auto report = verify(k);
            for (const auto& line : report.mismatches) fails.push_back(k.to_text() + ": " + line);
        }
    for (int m = 5; m <= 7; ++m) {
        SplitMix64 rng(70 + m);
        for (int t = 0; t < 200; ++t) {
            const auto k = random_complex(m, rng);
            const auto report = verify(k);
            for (const auto& line : report.mismatches) fails.push_back(k.to_text() + ": " + line);
        }
    }
}

// --- 8: invariant suites ----------------------------------------------------
void crit_invariants(std::vector<std::string>& fails) {
    auto check_complex = [&](const SimplicialComplex& k) {
        const int m = k.m();
        const auto alpha = alpha_vector(k); // internally checks both routes
        Int sum = 0;
        for (const auto& v : alpha) sum += v;
        expect(fails, sum == 1, "sum alpha = 1 for " + k.to_text());
        expect(fails, alpha[0] == 1 - k.euler_characteristic(), "alpha_0 = 1 - chi for " + k.to_text());
        expect(fails, mu_vector(k) == alpha_vector(k.alexander_dual()),
               "mu = alpha of dual for " + k.to_text());
        expect(fails, k.alexander_dual().alexander_dual() == k, "dual involution for " + k.to_text());

        const auto h = h_vector(bier_f_vector(k), m - 1);
        bool palindromic = true;
        for (int p = 0; p < m; ++p)
            if (h[p] != h[m - 1 - p]) palindromic = false;
        expect(fails, palindromic, "Dehn-Sommerville for " + k.to_text());

        const auto cy = chi_y(k); // asserts h-route equality internally
        bool cy_pal = true;
        for (int p = 0; p < m; ++p)
            if (cy.coeffs[p] != cy.coeffs[m - 1 - p]) cy_pal = false;
        expect(fails, cy_pal, "chi_y palindromic for " + k.to_text());

        Int weighted = 0;
        for (int p = 0; p < m; ++p) {
            Int pw = 1;
            for (int t = 0; t < p; ++t) pw *= 2;
            weighted += alpha[p] * pw * (m - p);
        }
        expect(fails, cy.at_minus_one() == bier_f_vector(k).back(), "chi(X) = Bier facet count for " + k.to_text());
        expect(fails, cy.at_minus_one() == weighted, "chi(X) = weighted alpha sum for " + k.to_text());

        const Int sig = cy.at_plus_one();
        if (m % 2 == 0)
            expect(fails, sig == 0, "even-m signature vanishes for " + k.to_text());
        else
            expect(fails, sig == 1 - k.euler_characteristic(), "odd-m signature is 1 - chi for " + k.to_text());

        expect(fails, egf_identity_holds(k), "generating function identity for " + k.to_text());
        expect(fails, stirling_identity_holds(k, 6), "Stirling identity for " + k.to_text());
    };

    for (int m = 2; m <= 5; ++m)
        for (const auto& k : canonical_complexes(m)) check_complex(k);
    for (int m = 6; m <= 7; ++m) {
        SplitMix64 rng(80 + m);
        for (int t = 0; t < 50; ++t) check_complex(random_complex(m, rng));
    }

    // gamma eigenvector property
    for (int m = 2; m <= 8; ++m) {
        const auto a = matrix_A(m);
        for (const auto& I : partitions(m - 1)) {
            const auto g = gamma_vector(m, I);
            bool fixed = true;
            for (int j = 0; j < m; ++j) {
                Int s = 0;
                for (int kk = 0; kk < m; ++kk) s += a[kk][j] * g[kk];
                if (s != g[j]) fixed = false;
            }
            expect(fails, fixed, "A^t gamma = gamma at m=" + std::to_string(m) + ", I=" + I.to_string());
        }
    }

    // fan unimodularity over every facet
    for (int m = 2; m <= 5; ++m)
        for (const auto& k : canonical_complexes(m))
            expect(fails, facet_cones_unimodular(k), "unimodular cones for " + k.to_text());
    {
        SplitMix64 rng(86);
        for (int t = 0; t < 30; ++t) {
            const auto k = random_complex(6, rng);
            expect(fails, facet_cones_unimodular(k), "unimodular cones for " + k.to_text());
        }
    }
}

// --- 9: generator fixtures ---------------------------------------------------
void crit_generators(std::vector<std::string>& fails) {
    const auto g3 = is_polynomial_generator(e3());
    expect(fails, g3.generator && g3.milnor == 3 && g3.bound == 3, "triangle boundary generates");
    const auto g4 = is_polynomial_generator(e4());
    expect(fails, g4.generator && g4.milnor == 2 && g4.bound == 2, "cone over triangle generates");
    const auto g5 = is_polynomial_generator(void_complex(5));
    expect(fails, g5.generator && g5.milnor == 5, "void complex at m=5 generates");
    const auto g1 = is_polynomial_generator(e1());
    expect(fails, g1.generator && g1.milnor == -2, "example complex at m=4 generates");
    const auto bad = is_polynomial_generator(void_complex(4));
    expect(fails, !bad.generator, "void complex at m=4 rejected");
}

// --- 10: immersion ---------------------------------------------------
void crit_immersion(std::vector<std::string>& fails) {
    const auto b5 = immersion_bounds_for_m(5);
    expect(fails, b5.k_max == 3 && b5.n_real_min == 7 && b5.n_complex_min == 14, "bounds at m=5");
    for (int n = 2; n <= 4; ++n) {
        const auto fam = sharp_immersion_family(n);
        int ones = 0;
        for (int v = n; v; v &= v - 1) ++ones;
        expect(fails, fam.bound == 2 * n - ones, "sharp bound at n=" + std::to_string(n));
        int total = 0;
        for (const auto& k : fam.factors) total += k.m() - 1;
        expect(fails, total == n, "factor dimensions sum to n=" + std::to_string(n));
    }
}

// --- 11: enumerate determinism ---------------------------------------------------
void crit_enumerate_determinism(std::vector<std::string>& fails) {
    if (g_cli_path.empty()) {
        // library-level determinism when no CLI path was given
        std::ostringstream a, b;
        run_enumerate(4, EnumerateFind::bordant_pairs, a, 1, 200);
        run_enumerate(4, EnumerateFind::bordant_pairs, b, 1, 200);
        expect(fails, a.str() == b.str() && !a.str().empty(), "two runs are byte-identical");
        return;
    }
    const std::string out1 = "acceptance_enum_run1.jsonl", out2 = "acceptance_enum_run2.jsonl";
    for (const auto& out : {out1, out2}) {
        const std::string cmd = g_cli_path + " enumerate --m 4 --find bordant-pairs --seed 1 --out " + out;
        if (std::system(cmd.c_str()) != 0) {
            fails.push_back("CLI run failed: " + cmd);
            return;
        }
    }
    std::ifstream f1(out1, std::ios::binary), f2(out2, std::ios::binary);
    std::stringstream s1, s2;
    s1 << f1.rdbuf();
    s2 << f2.rdbuf();
    expect(fails, !s1.str().empty(), "enumerate produced output");
    expect(fails, s1.str() == s2.str(), "two CLI runs are byte-identical");
    std::remove(out1.c_str());
    std::remove(out2.c_str());
}

} // namespace

int main(int argc, char** argv) {
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--cli") g_cli_path = argv[i + 1];

    const std::vector<Criterion> criteria = {
        {1, "gamma tables reproduce the worked values", crit_gamma_tables},
        {2, "product-structure discrepancy 54 vs 56 with mod-2 agreement", crit_product_discrepancy},
        {3, "matrix fixtures and involutions", crit_matrices},
        {4, "worked m=4 example: alpha, mu, relations, decomposition", crit_worked_example},
        {5, "bordant pairs by both criteria, confirmed by the oracle", crit_bordant_pairs},
        {6, "Todd identities", crit_todd},
        {7, "oracle equivalence sweep", crit_oracle_sweep},
        {8, "invariant suites", crit_invariants},
        {9, "generator fixtures", crit_generators},
        {10, "immersion bounds and sharp family", crit_immersion},
        {11, "enumerate determinism", crit_enumerate_determinism},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        std::vector<std::string> fails;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.run(fails);
        } catch (const std::exception& e) {
            fails.push_back(std::string("exception: ") + e.what());
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        char line[256];
        std::snprintf(line, sizeof(line), "[%s] criterion %2d: %s (%.2f s)",
                      fails.empty() ? "PASS" : "FAIL", c.number, c.label.c_str(), secs);
        std::cout << line << '\n';
        for (const auto& f : fails) std::cout << "         " << f << '\n';
        if (!fails.empty()) ++failed;
    }
    if (failed) {
        std::cout << failed << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
