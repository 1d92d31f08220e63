#pragma once

// Independent oracles used by the tests. Everything here recomputes results
// from first principles, along routes the library never takes, so the two
// sides can disagree when either is wrong.

#include "seqsym/modring.hpp"
#include "seqsym/multfunc.hpp"
#include "seqsym/permutation.hpp"
#include "seqsym/seqmatrix.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

/// Remainder via explicit long division: finds the unique q with
/// x = q*m + r and 0 <= r < m.
inline std::int64_t long_division_remainder(std::int64_t x, std::int64_t m) {
    std::int64_t q = x / m;
    std::int64_t r = x - q * m;
    if (r < 0) {
        q -= 1;
        r = x - q * m;
    }
    return r;
}

/// Trial-division factorization, multiplicities included.
inline std::vector<std::int64_t> factorize(std::int64_t n) {
    std::vector<std::int64_t> factors;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        while (n % d == 0) {
            factors.push_back(d);
            n /= d;
        }
    }
    if (n > 1) factors.push_back(n);
    return factors;
}

/// Legendre symbol by enumerating the nonzero squares mod p.
inline int legendre_by_enumeration(std::int64_t a, std::int64_t p) {
    a = long_division_remainder(a, p);
    if (a == 0) return 0;
    for (std::int64_t x = 1; x < p; ++x) {
        if (x * x % p == a) return 1;
    }
    return -1;
}

/// Jacobi symbol straight from the definition: the product of Legendre
/// symbols over the prime factorization of m. Only viable for small m.
inline int jacobi_by_factoring(std::int64_t a, std::int64_t m) {
    int out = 1;
    for (const std::int64_t p : factorize(m)) {
        out *= legendre_by_enumeration(a, p);
        if (out == 0) return 0;
    }
    return out;
}

/// Signature by counting inversions, the second classic algorithm.
inline int signature_by_inversions(const seqsym::Permutation& p) {
    const std::int64_t m = p.size();
    std::int64_t inversions = 0;
    for (std::int64_t i = 0; i < m; ++i) {
        for (std::int64_t j = i + 1; j < m; ++j) {
            if (p(i) > p(j)) ++inversions;
        }
    }
    return inversions % 2 == 0 ? 1 : -1;
}

/// Uniformly random permutation (Fisher-Yates).
inline seqsym::Permutation random_permutation(std::int64_t m, std::mt19937_64& rng) {
    std::vector<std::int64_t> image(static_cast<std::size_t>(m));
    for (std::int64_t i = 0; i < m; ++i) image[static_cast<std::size_t>(i)] = i;
    for (std::int64_t i = m - 1; i > 0; --i) {
        std::uniform_int_distribution<std::int64_t> pick(0, i);
        std::swap(image[static_cast<std::size_t>(i)], image[static_cast<std::size_t>(pick(rng))]);
    }
    return seqsym::Permutation(std::move(image));
}

/// Residue matrix with uniformly random entries mod n^2+1.
inline seqsym::ResidueMatrix random_residue_matrix(int n, std::mt19937_64& rng) {
    seqsym::ResidueMatrix a(n);
    std::uniform_int_distribution<std::int64_t> pick(0, a.modulus().value() - 1);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            a.set(i, j, pick(rng));
        }
    }
    return a;
}

inline seqsym::SignMatrix random_sign_matrix(int n, std::mt19937_64& rng) {
    seqsym::SignMatrix a(n);
    std::uniform_int_distribution<int> pick(-1, 1);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            a.at(i, j) = pick(rng);
        }
    }
    return a;
}

/// Plain modular matrix product, used to validate the exchange-matrix
/// shortcuts against honest multiplication.
inline seqsym::ResidueMatrix matmul(const seqsym::ResidueMatrix& a, const seqsym::ResidueMatrix& b) {
    const int n = a.side();
    const std::int64_t m = a.modulus().value();
    seqsym::ResidueMatrix out(n);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            std::int64_t acc = 0;
            for (int k = 1; k <= n; ++k) {
                acc = (acc + static_cast<std::int64_t>(
                                 static_cast<__int128>(a.at(i, k)) * b.at(k, j) % m)) %
                      m;
            }
            out.set(i, j, acc);
        }
    }
    return out;
}

/// The exchange matrix J: 1's on the anti-diagonal.
inline seqsym::ResidueMatrix exchange_matrix(int n) {
    seqsym::ResidueMatrix j(n);
    for (int i = 1; i <= n; ++i) {
        j.set(i, n - i + 1, 1);
    }
    return j;
}

}  // namespace oracle
