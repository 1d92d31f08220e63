#pragma once

#include "seqsym/multfunc.hpp"
#include "seqsym/permutation.hpp"

#include <cstdint>

namespace seqsym {

/// Zolotarev's identity for one pair: (a/m) equals the signature of
/// x -> a*x on Z/mZ. Needs odd m >= 3 and gcd(a, m) = 1.
bool check_zolotarev(std::int64_t a, std::int64_t m);

/// For even n and m = n^2+1, multiplication by n decomposes into exactly
/// one fixed point {0} and n^2/4 cycles of length four; additionally every
/// nonzero a satisfies f^4(a) = a and f^k(a) != a for 0 < k < 4.
bool check_cycle_structure(int n);

/// jacobi(n, n^2+1) = (-1)^(n^2/4) for even n, together with the parity
/// cross-check that n^2/4 is odd exactly when n = 2 mod 4.
bool check_lemma(int n);

}  // namespace seqsym
