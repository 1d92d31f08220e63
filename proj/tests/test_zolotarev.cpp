#include "doctest.h"

#include "seqsym/zolotarev.hpp"

#include "seqsym/seqmatrix.hpp"

#include <numeric>

using namespace seqsym;

TEST_CASE("zolotarev identity, frozen instances") {
    // x -> 2x mod 9: cycles (0)(1 2 4 8 7 5)(3 6), signature +1; (2/9) = +1.
    CHECK(check_zolotarev(2, 9));
    CHECK(jacobi(2, 9) == 1);
    CHECK(signature(mult_perm(2, 9)) == 1);

    // 3 generates (Z/17Z)*: one 16-cycle, signature -1; (3/17) = -1.
    CHECK(check_zolotarev(3, 17));
    CHECK(jacobi(3, 17) == -1);
    CHECK(signature(mult_perm(3, 17)) == -1);

    CHECK(check_zolotarev(1, 9));
    CHECK(check_zolotarev(1, 17));
}

TEST_CASE("zolotarev domain") {
    CHECK_THROWS_AS(check_zolotarev(3, 9), std::invalid_argument);   // gcd > 1
    CHECK_THROWS_AS(check_zolotarev(2, 8), std::invalid_argument);   // even m
    CHECK_THROWS_AS(check_zolotarev(2, 1), std::invalid_argument);
}

TEST_CASE("zolotarev identity over a small exhaustive grid") {
    for (std::int64_t m = 3; m <= 101; m += 2) {
        for (std::int64_t a = 1; a < m; ++a) {
            if (std::gcd(a, m) != 1) continue;
            CHECK(check_zolotarev(a, m));
        }
    }
}

TEST_CASE("cycle structure of multiplication by n") {
    CHECK(check_cycle_structure(2));
    CHECK(check_cycle_structure(4));
    CHECK(check_cycle_structure(10));
    CHECK_THROWS_AS(check_cycle_structure(3), std::invalid_argument);
    CHECK_THROWS_AS(check_cycle_structure(0), std::invalid_argument);

    // n = 2, m = 5: single 4-cycle 1 -> 2 -> 4 -> 3 -> 1.
    const CycleDecomposition d = cycles(mult_perm(2, 5));
    REQUIRE(d.cycles.size() == 2);
    CHECK(d.cycles[0] == std::vector<std::int64_t>{0});
    CHECK(d.cycles[1] == std::vector<std::int64_t>{1, 2, 4, 3});
}

TEST_CASE("lemma sign values") {
    CHECK(check_lemma(2));  // (2/5) = -1 = (-1)^1
    CHECK(jacobi(2, 5) == -1);
    CHECK(check_lemma(4));  // (4/17) = +1 = (-1)^4
    CHECK(jacobi(4, 17) == 1);
    CHECK(check_lemma(6));  // (6/37) = -1 = (-1)^9
    CHECK(jacobi(6, 37) == -1);
    CHECK(check_lemma(8));  // (8/65) = +1 = (-1)^16
    CHECK(jacobi(8, 65) == 1);
    CHECK_THROWS_AS(check_lemma(3), std::invalid_argument);
}

TEST_CASE("rotation permutation bridge") {
    for (int n : {2, 4, 6, 8, 10}) {
        const std::int64_t m = static_cast<std::int64_t>(n) * n + 1;
        CHECK(induced_permutation(DihedralElement::rho, n) == mult_perm(n, m));
    }
}
