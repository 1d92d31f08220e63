#include "doctest.h"

#include "seqsym/seqmatrix.hpp"

#include "test_support.hpp"

#include <random>

using namespace seqsym;

namespace {

ResidueMatrix matrix_of(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
    const int n = static_cast<int>(rows.size());
    ResidueMatrix out(n);
    int i = 1;
    for (const auto& row : rows) {
        int j = 1;
        for (const auto v : row) {
            out.set(i, j, v);
            ++j;
        }
        ++i;
    }
    return out;
}

}  // namespace

TEST_CASE("sequential matrices") {
    const ResidueMatrix q2 = sequential(2);
    CHECK(q2.modulus().value() == 5);
    CHECK(q2 == matrix_of({{1, 2}, {3, 4}}));

    const ResidueMatrix q3 = sequential(3);
    CHECK(q3.modulus().value() == 10);
    CHECK(q3 == matrix_of({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}));

    const ResidueMatrix q1 = sequential(1);
    CHECK(q1.modulus().value() == 2);
    CHECK(q1.at(1, 1) == 1);

    CHECK_THROWS_AS(sequential(0), std::invalid_argument);

    // Entries are j + (i-1)n, never 0, covering {1, ..., n^2}.
    const ResidueMatrix q7 = sequential(7);
    CHECK(q7.at(1, 1) == 1);
    CHECK(q7.at(7, 7) == 49);
    std::vector<bool> seen(50, false);
    for (int i = 1; i <= 7; ++i) {
        for (int j = 1; j <= 7; ++j) {
            CHECK(q7.at(i, j) == j + static_cast<std::int64_t>(i - 1) * 7);
            CHECK(q7.at(i, j) != 0);
            seen[static_cast<std::size_t>(q7.at(i, j))] = true;
        }
    }
    for (int v = 1; v <= 49; ++v) CHECK(seen[static_cast<std::size_t>(v)]);
}

TEST_CASE("index accessor is 1-indexed") {
    const ResidueMatrix q3 = sequential(3);
    CHECK(q3.at(2, 1) == 4);
    CHECK_THROWS_AS(q3.at(0, 1), std::out_of_range);
    CHECK_THROWS_AS(q3.at(1, 4), std::out_of_range);
}

TEST_CASE("tau and rho index formulas") {
    CHECK(apply(DihedralElement::tau, matrix_of({{1, 2}, {3, 4}})) == matrix_of({{1, 3}, {2, 4}}));
    // rho(A)(i, j) = A(j, n-i+1): top-right corner moves to (1, 1).
    const ResidueMatrix q4 = sequential(4);
    const ResidueMatrix r = apply(DihedralElement::rho, q4);
    CHECK(r.at(1, 1) == 4);
    CHECK(r.at(1, 2) == 8);
    CHECK(r.at(1, 3) == 12);
    CHECK(r.at(1, 4) == 16);
    CHECK(r.at(4, 1) == 1);
}

TEST_CASE("abstract group laws") {
    const auto id = DihedralElement::identity;
    const auto rho = DihedralElement::rho;
    const auto tau = DihedralElement::tau;

    CHECK(compose(rho, compose(rho, compose(rho, rho))) == id);
    CHECK(compose(tau, tau) == id);
    CHECK(compose(tau, compose(rho, tau)) == DihedralElement::rho3);
    CHECK(compose(tau, rho) == DihedralElement::tau_rho);
    CHECK(compose(tau, DihedralElement::rho2) == DihedralElement::tau_rho2);

    for (const auto s : kDihedralElements) {
        CHECK(compose(s, inverse(s)) == id);
        CHECK(compose(inverse(s), s) == id);
        CHECK(compose(s, id) == s);
        CHECK(compose(id, s) == s);
    }

    // Associativity over the whole table.
    for (const auto a : kDihedralElements) {
        for (const auto b : kDihedralElements) {
            for (const auto c : kDihedralElements) {
                CHECK(compose(a, compose(b, c)) == compose(compose(a, b), c));
            }
        }
    }
}

TEST_CASE("names round-trip") {
    for (const auto s : kDihedralElements) {
        CHECK(dihedral_from_string(to_string(s)) == s);
    }
    CHECK(dihedral_from_string("1") == DihedralElement::identity);
    CHECK_FALSE(dihedral_from_string("sigma").has_value());
}

TEST_CASE("apply is a left action on random matrices") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const ResidueMatrix a = oracle::random_residue_matrix(5, rng);
        for (const auto s : kDihedralElements) {
            for (const auto t : kDihedralElements) {
                CHECK(apply(compose(s, t), a) == apply(s, apply(t, a)));
            }
            CHECK(apply(inverse(s), apply(s, a)) == a);
        }
        CHECK(apply(DihedralElement::rho2, a) ==
              apply(DihedralElement::rho, apply(DihedralElement::rho, a)));
    }
}

TEST_CASE("product realization matches the index formulas") {
    std::mt19937_64 rng(6);
    const ResidueMatrix q4 = sequential(4);
    CHECK(realize_by_products(DihedralElement::identity, q4) == q4);
    CHECK(realize_by_products(DihedralElement::rho, q4) == apply(DihedralElement::rho, q4));
    for (int n : {1, 2, 3, 5, 8}) {
        const ResidueMatrix a = oracle::random_residue_matrix(n, rng);
        for (const auto s : kDihedralElements) {
            CHECK(realize_by_products(s, a) == apply(s, a));
        }
    }
}

TEST_CASE("exchange shortcuts equal true products with J") {
    std::mt19937_64 rng(7);
    for (int n : {1, 2, 4, 6}) {
        const ResidueMatrix a = oracle::random_residue_matrix(n, rng);
        const ResidueMatrix j = oracle::exchange_matrix(n);
        CHECK(ResidueMatrix::from_values(exchange_mul_left(a.grid())) == oracle::matmul(j, a));
        CHECK(ResidueMatrix::from_values(exchange_mul_right(a.grid())) == oracle::matmul(a, j));
        // rho2 as an honest triple product J*A*J.
        CHECK(realize_by_products(DihedralElement::rho2, a) == oracle::matmul(j, oracle::matmul(a, j)));
    }
}

TEST_CASE("scalar_mul") {
    const ResidueMatrix q4 = sequential(4);
    const Modulus m = q4.modulus();
    const ResidueMatrix scaled = scalar_mul(Residue(4, m), q4);
    CHECK(scaled.at(1, 1) == 4);
    CHECK(scaled.at(1, 2) == 8);
    CHECK(scaled.at(1, 3) == 12);
    CHECK(scaled.at(1, 4) == 16);

    CHECK(scalar_mul(Residue(1, m), q4) == q4);
    const Residue minus_one(-1, m);
    CHECK(scalar_mul(minus_one, scalar_mul(minus_one, q4)) == q4);
    CHECK_THROWS_AS(scalar_mul(Residue(1, Modulus(7)), q4), std::invalid_argument);
}

TEST_CASE("scalar_mul commutes with every symmetry") {
    std::mt19937_64 rng(8);
    const ResidueMatrix a = oracle::random_residue_matrix(6, rng);
    const Residue c(29, a.modulus());
    for (const auto s : kDihedralElements) {
        CHECK(apply(s, scalar_mul(c, a)) == scalar_mul(c, apply(s, a)));
    }
}

TEST_CASE("rho(Q_n) = n Q_n") {
    CHECK(check_theorem1(1));
    CHECK(check_theorem1(2));
    CHECK(check_theorem1(4));
    CHECK(check_theorem1(5));
    CHECK(check_theorem1(100));
}

TEST_CASE("rho2 negates the sequential matrix") {
    for (int n : {1, 2, 3, 6, 11}) {
        const ResidueMatrix q = sequential(n);
        CHECK(apply(DihedralElement::rho2, q) == scalar_mul(Residue(-1, q.modulus()), q));
    }
}

TEST_CASE("value table rows") {
    CHECK(check_value_table(1));
    CHECK(check_value_table(4));
    CHECK(check_value_table(5));
    CHECK(check_value_table(6));
    CHECK(check_realizations(4));
    CHECK(check_realizations(5));

    // Row rho2 for n = 6: sigma(Q_n) = -Q_n.
    const ResidueMatrix q6 = sequential(6);
    CHECK(apply(DihedralElement::rho2, q6) == scalar_mul(Residue(-1, q6.modulus()), q6));
    // Row tau_rho3 for n = 5: sigma(Q_n) = -n Q_n^T.
    const ResidueMatrix q5 = sequential(5);
    CHECK(apply(DihedralElement::tau_rho3, q5) ==
          scalar_mul(Residue(-5, q5.modulus()), transpose(q5)));
}

TEST_CASE("induced permutations") {
    CHECK(induced_permutation(DihedralElement::identity, 4) == Permutation::identity(17));
    CHECK(induced_permutation(DihedralElement::rho, 4)(1) == 4);
    for (int n : {2, 4, 6}) {
        const std::int64_t m = static_cast<std::int64_t>(n) * n + 1;
        CHECK(induced_permutation(DihedralElement::rho, n) == mult_perm(n, m));
    }
}

TEST_CASE("induced permutation is a homomorphism") {
    for (int n : {3, 4, 5}) {
        for (const auto s : kDihedralElements) {
            for (const auto t : kDihedralElements) {
                CHECK(induced_permutation(compose(s, t), n) ==
                      induced_permutation(s, n).then(induced_permutation(t, n)));
            }
        }
    }
}

TEST_CASE("from_values validates canonical entries") {
    SquareGrid<std::int64_t> grid(2);
    grid.at(1, 1) = 5;  // == m for n = 2
    CHECK_THROWS_AS(ResidueMatrix::from_values(grid), std::invalid_argument);
    grid.at(1, 1) = -1;
    CHECK_THROWS_AS(ResidueMatrix::from_values(grid), std::invalid_argument);
    grid.at(1, 1) = 4;
    CHECK(ResidueMatrix::from_values(grid).at(1, 1) == 4);
}
