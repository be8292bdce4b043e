#include <doctest.h>

#include "torbord/gamma.hpp"

using namespace torbord;

namespace {
std::vector<Int> iv(std::initializer_list<long long> xs) { return {xs.begin(), xs.end()}; }
}

TEST_CASE("square-free reduction") {
    SquareFreeExpr x1(3);
    x1.add_term(0b001, 0, 1);
    auto sq = x1 * x1;
    REQUIRE(sq.terms().size() == 1);
    CHECK(sq.terms().begin()->first.subset == 0b001);
    CHECK(sq.terms().begin()->first.upow == 1);
    CHECK(sq.terms().begin()->second == -1);

    // (x1 + x2)^2 = 2 x1x2 - u x1 - u x2
    SquareFreeExpr s(3);
    s.add_term(0b001, 0, 1);
    s.add_term(0b010, 0, 1);
    auto s2 = s * s;
    CHECK(s2.terms().size() == 3);
    CHECK(s2.terms().at({0b011, 0}) == 2);
    CHECK(s2.terms().at({0b001, 1}) == -1);
    CHECK(s2.terms().at({0b010, 1}) == -1);
}

TEST_CASE("sigma_1 squared collapses as 2 sigma_2 - u sigma_1 at m=3") {
    const auto s1 = SquareFreeExpr::sigma(3, 1);
    const auto sq = s1 * s1;
    const auto s2 = SquareFreeExpr::sigma(3, 2);
    CHECK(sq.terms().size() == s1.terms().size() + s2.terms().size());
    for (const auto& [key, c] : s2.terms()) CHECK(sq.terms().at(key) == 2 * c);
    for (const auto& [key, c] : s1.terms()) CHECK(sq.terms().at({key.subset, 1}) == -1);
}

TEST_CASE("gamma fixtures from the ring expansion") {
    CHECK(gamma_vector(3, Partition({1, 1})) == iv({9, 8, 8}));
    CHECK(gamma_vector(3, Partition({2})) == iv({3, 4, 4}));
    CHECK(gamma_vector(4, Partition({1, 1, 1})) == iv({64, 56, 48, 48}));
    CHECK(gamma_vector(4, Partition({2, 1})) == iv({24, 24, 24, 24}));
    CHECK(gamma_vector(4, Partition({3})) == iv({4, 6, 8, 8}));
}

TEST_CASE("partition-formula route agrees with the ring route") {
    CHECK(gamma_via_partition_formula(3, Partition({2})) == iv({3, 4, 4}));
    CHECK(gamma_via_partition_formula(4, Partition({1, 1, 1})) == iv({64, 56, 48, 48}));
    // the function itself throws on any disagreement; sweep small m
    for (int m = 2; m <= 6; ++m)
        for (const auto& I : partitions(m - 1)) {
            CHECK(gamma_via_partition_formula(m, I) == gamma_vector(m, I));
        }
    CHECK(gamma_via_partition_formula(5, Partition({2, 2})) == gamma_vector(5, Partition({2, 2})));
}

TEST_CASE("gamma vectors are fixed by the transpose of A") {
    for (int m = 2; m <= 8; ++m) {
        const auto a = matrix_A(m);
        for (const auto& I : partitions(m - 1)) {
            const auto g = gamma_vector(m, I);
            for (int j = 0; j < m; ++j) {
                Int s = 0;
                for (int kk = 0; kk < m; ++kk) s += a[kk][j] * g[kk]; // (A^t g)_j
                CHECK(s == g[j]);
            }
        }
    }
}

TEST_CASE("gamma at k=0 is the projective space Chern number") {
    for (int m = 3; m <= 7; ++m)
        for (const auto& I : partitions(m - 1)) {
            Int cp = 1;
            for (int part : I.parts()) cp *= binomial(m, part);
            CHECK(gamma_vector(m, I)[0] == cp);
            CHECK(product_chern(m, 0, I) == cp);
        }
}

TEST_CASE("product Chern fixtures") {
    CHECK(product_chern(4, 1, Partition({1, 1, 1})) == 54);
    CHECK(product_chern(4, 0, Partition({1, 1, 1})) == 64);
    CHECK(product_chern(3, 2, Partition({1, 1})) == 8);
}

TEST_CASE("the canonical and product structures differ but agree mod 2") {
    // 56 vs 54 at m=4, I=(1,1,1), slot j=1
    const auto g = gamma_vector(4, Partition({1, 1, 1}));
    CHECK(g[1] == 56);
    CHECK(product_chern(4, 1, Partition({1, 1, 1})) == 54);
    for (int m = 3; m <= 7; ++m)
        for (const auto& I : partitions(m - 1)) {
            const auto gv = gamma_vector(m, I);
            for (int j = 0; j < m; ++j) CHECK((gv[j] - product_chern(m, j, I)) % 2 == 0);
        }
}
