#include "doctest.h"

#include "seqsym/modring.hpp"

#include "test_support.hpp"

#include <random>

using namespace seqsym;

TEST_CASE("modulus validity") {
    CHECK(Modulus(2).value() == 2);
    CHECK(Modulus(17).odd());
    CHECK_FALSE(Modulus(10).odd());
    CHECK_THROWS_AS(Modulus(1), std::invalid_argument);
    CHECK_THROWS_AS(Modulus(0), std::invalid_argument);
    CHECK_THROWS_AS(Modulus(-5), std::invalid_argument);
}

TEST_CASE("reduce gives the canonical representative") {
    const Modulus m(17);
    CHECK(reduce(17, m).value() == 0);
    CHECK(reduce(-1, m).value() == 16);
    CHECK(reduce(37, m).value() == 3);  // 37 = 2*17 + 3
    CHECK(reduce(0, m).value() == 0);
    CHECK(reduce(-35, m).value() == 16);

    // Agreement with explicit long division on a sampled grid.
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<std::int64_t> xs(-1000000, 1000000);
    for (int trial = 0; trial < 500; ++trial) {
        const std::int64_t x = xs(rng);
        CHECK(reduce(x, m).value() == oracle::long_division_remainder(x, 17));
    }
}

TEST_CASE("reduce is periodic in the modulus") {
    const Modulus m(101);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> xs(-5000, 5000);
    std::uniform_int_distribution<std::int64_t> ks(-20, 20);
    for (int trial = 0; trial < 300; ++trial) {
        const std::int64_t x = xs(rng);
        const std::int64_t k = ks(rng);
        CHECK(reduce(x + k * 101, m) == reduce(x, m));
    }
}

TEST_CASE("mul") {
    const Modulus m(17);
    CHECK(mul(Residue(4, m), Residue(13, m)).value() == 1);  // 52 = 3*17 + 1
    CHECK(mul(Residue(0, m), Residue(9, m)).value() == 0);
    CHECK(mul(Residue(16, m), Residue(16, m)).value() == 1);  // (-1)^2
    CHECK_THROWS_AS(mul(Residue(1, Modulus(5)), Residue(1, Modulus(7))), std::invalid_argument);
}

TEST_CASE("mul survives moduli past 2^31") {
    const std::int64_t big = (std::int64_t{1} << 31) + 11;
    const Modulus m(big);
    // (m-1)^2 = 1 mod m; the intermediate product needs 64+ bits.
    CHECK(mul(Residue(big - 1, m), Residue(big - 1, m)).value() == 1);
    CHECK(mul(Residue(big - 1, m), Residue(2, m)).value() == big - 2);
}

TEST_CASE("ring laws on sampled residues") {
    const Modulus m(211);
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<std::int64_t> vals(0, 210);
    const Residue one(1, m);
    for (int trial = 0; trial < 300; ++trial) {
        const Residue a(vals(rng), m);
        const Residue b(vals(rng), m);
        const Residue c(vals(rng), m);
        CHECK(mul(a, mul(b, c)) == mul(mul(a, b), c));
        CHECK(mul(a, b) == mul(b, a));
        CHECK(mul(a, one) == a);
    }
}

TEST_CASE("gcd") {
    CHECK(gcd(5, 65) == 5);
    CHECK(gcd(1, 1000003) == 1);
    CHECK(gcd(36, 65) == 1);  // Euclid: 65 -> 36 -> 29 -> 7 -> 1
    CHECK(gcd(12, 0) == 12);
    CHECK(gcd(0, 12) == 12);
    CHECK_THROWS_AS(gcd(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(gcd(-4, 6), std::invalid_argument);
}

TEST_CASE("pow") {
    const Modulus m(17);
    // Repeated squaring trace: 3^2 = 9, 9^2 = 81 = 13, 13^2 = 169 = 16.
    CHECK(pow(Residue(3, m), 2).value() == 9);
    CHECK(pow(Residue(3, m), 4).value() == 13);
    CHECK(pow(Residue(3, m), 8).value() == 16);
    CHECK(pow(Residue(5, m), 1).value() == 5);
    CHECK(pow(Residue(0, m), 0).value() == 1);  // empty product
    CHECK(pow(Residue(0, m), 5).value() == 0);
}

TEST_CASE("pow adds exponents") {
    const Modulus m(97);
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<std::int64_t> vals(0, 96);
    std::uniform_int_distribution<std::uint64_t> exps(0, 40);
    for (int trial = 0; trial < 300; ++trial) {
        const Residue a(vals(rng), m);
        const std::uint64_t e1 = exps(rng);
        const std::uint64_t e2 = exps(rng);
        CHECK(pow(a, e1 + e2) == mul(pow(a, e1), pow(a, e2)));
    }
}
