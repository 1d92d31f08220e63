#include "seqsym/zolotarev.hpp"

#include <stdexcept>
#include <string>

namespace seqsym {

bool check_zolotarev(std::int64_t a, std::int64_t m) {
    if (m < 3 || m % 2 == 0) {
        throw std::invalid_argument("check_zolotarev: m must be odd and >= 3, got " +
                                    std::to_string(m));
    }
    // mult_perm rejects gcd(a, m) > 1.
    return jacobi(a, m) == signature(mult_perm(a, m));
}

bool check_cycle_structure(int n) {
    if (n < 2 || n % 2 != 0) {
        throw std::invalid_argument("check_cycle_structure: n must be even and >= 2, got " +
                                    std::to_string(n));
    }
    const std::int64_t m = static_cast<std::int64_t>(n) * n + 1;
    const Permutation f = mult_perm(n, m);

    if (f(0) != 0) {
        return false;
    }
    // Every nonzero point has exact order four under f.
    for (std::int64_t x = 1; x < m; ++x) {
        std::int64_t y = x;
        for (int k = 1; k <= 3; ++k) {
            y = f(y);
            if (y == x) return false;
        }
        if (f(y) != x) return false;
    }

    const CycleDecomposition decomposition = cycles(f);
    std::int64_t fixed_points = 0;
    std::int64_t four_cycles = 0;
    for (const auto& cycle : decomposition.cycles) {
        if (cycle.size() == 1) {
            if (cycle.front() != 0) return false;
            ++fixed_points;
        } else if (cycle.size() == 4) {
            ++four_cycles;
        } else {
            return false;
        }
    }
    return fixed_points == 1 && four_cycles == static_cast<std::int64_t>(n) * n / 4;
}

bool check_lemma(int n) {
    if (n < 2 || n % 2 != 0) {
        throw std::invalid_argument("check_lemma: n must be even and >= 2, got " +
                                    std::to_string(n));
    }
    const std::int64_t m = static_cast<std::int64_t>(n) * n + 1;
    const std::int64_t quarter = static_cast<std::int64_t>(n) * n / 4;
    const bool quarter_odd = (quarter % 2 == 1);
    // n = 4k+2 gives n^2/4 = 4k^2 + 4k + 1, odd; n = 4k gives an even value.
    if (quarter_odd != (n % 4 == 2)) {
        return false;
    }
    return jacobi(n, m) == (quarter_odd ? -1 : 1);
}

}  // namespace seqsym
