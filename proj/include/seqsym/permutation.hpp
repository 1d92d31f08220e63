#pragma once

#include <cstdint>
#include <vector>

namespace seqsym {

/// Bijection on {0, ..., m-1}, stored as a dense image table.
class Permutation {
public:
    /// Takes ownership of the image table; throws if it is not a bijection.
    explicit Permutation(std::vector<std::int64_t> image);

    static Permutation identity(std::int64_t m);

    /// Number of points m.
    std::int64_t size() const noexcept { return static_cast<std::int64_t>(image_.size()); }

    std::int64_t operator()(std::int64_t x) const;

    /// Left-to-right composition: (p.then(q))(x) = q(p(x)).
    Permutation then(const Permutation& q) const;

    Permutation inverse() const;

    const std::vector<std::int64_t>& image() const noexcept { return image_; }

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<std::int64_t> image_;
};

/// The permutation x -> a*x mod m. Requires gcd(a, m) = 1, otherwise the
/// map is not a bijection and construction is rejected.
Permutation mult_perm(std::int64_t a, std::int64_t m);

/// Disjoint cycles covering {0, ..., m-1}. Each cycle is rotated so its
/// minimum element comes first, cycles are sorted by minimum element, and
/// fixed points appear as 1-cycles.
struct CycleDecomposition {
    std::vector<std::vector<std::int64_t>> cycles;

    /// Cycle lengths in decomposition order.
    std::vector<std::int64_t> lengths() const;
};

CycleDecomposition cycles(const Permutation& p);

/// +1 for even permutations, -1 for odd ones; computed as
/// (-1)^(points - cycles).
int signature(const Permutation& p);

}  // namespace seqsym
