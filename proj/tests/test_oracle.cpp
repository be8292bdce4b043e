#include <doctest.h>

#include "fixtures.hpp"
#include "torbord/charnum.hpp"
#include "torbord/enumerate.hpp"
#include "torbord/oracle.hpp"
#include "torbord/vectors.hpp"

using namespace torbord;
using namespace fixtures;

TEST_CASE("pairing of individual monomials") {
    PairingEvaluator eval(e1());
    // u^3 pairs to 1 - chi(K)
    SquareFreeExpr u3(4);
    u3.add_term(0, 3, 1);
    CHECK(eval.evaluate(u3) == -1);
    // a facet pairs to 1
    SquareFreeExpr top(4);
    top.add_term(0b0111, 0, 1);
    CHECK(eval.evaluate(top) == 1);
    // link of {1} in e1 is the edge {2,3}, contractible: 1 - chi = 0
    SquareFreeExpr x1u2(4);
    x1u2.add_term(0b0001, 2, 1);
    CHECK(eval.evaluate(x1u2) == 0);
    // off-complex monomials vanish
    SquareFreeExpr off(4);
    off.add_term(0b1001, 1, 1);
    CHECK(eval.evaluate(off) == 0);
}

TEST_CASE("pairing rejects inhomogeneous input") {
    PairingEvaluator eval(e1());
    SquareFreeExpr bad(4);
    bad.add_term(0, 1, 1);
    CHECK_THROWS_AS(eval.evaluate(bad), error);
}

TEST_CASE("pairing is linear") {
    PairingEvaluator eval(e1());
    SquareFreeExpr a(4), b(4), sum(4);
    a.add_term(0, 3, 2);
    b.add_term(0b0111, 0, 5);
    sum.add_term(0, 3, 2);
    sum.add_term(0b0111, 0, 5);
    CHECK(eval.evaluate(sum) == eval.evaluate(a) + eval.evaluate(b));
}

TEST_CASE("oracle fixtures") {
    CHECK(oracle_chern(e4(), Partition({1, 1, 1})) == 56);
    CHECK(oracle_milnor(e1()) == -2);
    CHECK(oracle_pontryagin(void_complex(5), Partition({1, 1})) == 25);
    CHECK(oracle_sw_real(void_complex(5), Partition({4})) == 1);
}

TEST_CASE("verify is clean on the fixtures") {
    CHECK(verify(e1()).ok());
    CHECK(verify(e2()).ok());
    CHECK(verify(e4()).ok());
    CHECK(verify(e5a()).ok());
    CHECK(verify(e6()).ok());
}

TEST_CASE("verify is clean on every complex at m <= 4") {
    for (int m = 2; m <= 4; ++m)
        for (const auto& k : canonical_complexes(m)) {
            const auto report = verify(k);
            if (!report.ok()) {
                for (const auto& line : report.mismatches) MESSAGE(line);
            }
            CHECK(report.ok());
        }
}

TEST_CASE("verify is clean on sampled complexes at m = 5, 6") {
    for (int m = 5; m <= 6; ++m) {
        SplitMix64 rng(m);
        for (int trial = 0; trial < 25; ++trial) {
            const auto k = random_complex(m, rng);
            CHECK(verify(k).ok());
        }
    }
}
