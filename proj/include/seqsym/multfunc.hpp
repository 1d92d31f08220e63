#pragma once

#include "seqsym/modring.hpp"
#include "seqsym/seqmatrix.hpp"

#include <cstdint>
#include <functional>
#include <string>

namespace seqsym {

/// Sign values are plain ints restricted to {-1, 0, +1}.
using Sign = int;

/// n x n grid over {-1, 0, +1}, the image of a ResidueMatrix under a
/// multiplicative sign map.
using SignMatrix = SquareGrid<Sign>;

/// Jacobi symbol (a/m) for odd m >= 3 and arbitrary a.
///
/// Computed by the binary reciprocity algorithm, never by factoring m:
/// factors of 2 are stripped with the second supplement ((2/m) = +1 iff
/// m = +-1 mod 8), arguments are swapped by quadratic reciprocity (the
/// sign flips iff both are 3 mod 4), and the loop terminates at the gcd.
/// Returns 0 exactly when gcd(a, m) > 1.
Sign jacobi(std::int64_t a, std::int64_t m);

/// Legendre symbol (a/p) by the Euler criterion a^((p-1)/2) mod p.
/// p must be an odd prime; primality is checked by trial division, which
/// is fine at desk scale.
Sign legendre_euler(std::int64_t a, std::int64_t p);

/// True iff x^2 = a (mod m) has a solution, by exhaustive search.
bool qr_bruteforce(const Residue& a);
bool qr_bruteforce(std::int64_t a, std::int64_t m);

bool is_prime_trial(std::int64_t n);

/// A completely multiplicative map Z/mZ -> {-1, 0, +1}: phi(ab) =
/// phi(a)phi(b) for all a, b. The contract is carried by the evaluation
/// rule so that the Jacobi symbol, the unit indicator, and user-supplied
/// maps all run through the same corollary checks.
class MultiplicativeMap {
public:
    MultiplicativeMap(std::string name, Modulus modulus, std::function<Sign(const Residue&)> eval);

    const std::string& name() const noexcept { return name_; }
    Modulus modulus() const noexcept { return modulus_; }

    Sign operator()(const Residue& a) const;
    Sign operator()(std::int64_t a) const;

    /// (./m) for odd m >= 3.
    static MultiplicativeMap jacobi_symbol(Modulus m);

    /// 1 on units of Z/mZ, 0 elsewhere; defined for every modulus.
    static MultiplicativeMap unit_indicator(Modulus m);

private:
    std::string name_;
    Modulus modulus_;
    std::function<Sign(const Residue&)> eval_;
};

/// Entrywise image phi(A) = (phi(a_{i,j})).
SignMatrix apply_map(const MultiplicativeMap& phi, const ResidueMatrix& a);

/// apply_map with the Jacobi symbol of the matrix's own modulus.
SignMatrix jacobi_matrix(const ResidueMatrix& a);

/// Entrywise product s * A over {-1, 0, +1}.
SignMatrix sign_scale(Sign s, const SignMatrix& a);

/// phi(rho(Q_n)) = phi(n) * phi(Q_n), plus the commuting identity
/// sigma(phi(Q_n)) = phi(sigma(Q_n)) for all eight sigma.
bool check_corollary(const MultiplicativeMap& phi, int n);

struct RotationSign {
    bool holds;
    Sign sign;  // +1 when n = 0 mod 4, -1 when n = 2 mod 4
};

/// (rho(Q_n)/m) = s * (Q_n/m) with s determined by n mod 4. Even n only:
/// odd n makes m = n^2+1 even, where the Jacobi symbol is undefined.
RotationSign check_jacobi_theorem(int n);

/// (a/m) = (-a/m) for every a in [1, m-1], and (-1/m) = +1. Even n only.
bool check_basic_symmetry(int n);

}  // namespace seqsym
