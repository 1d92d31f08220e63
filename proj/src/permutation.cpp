#include "seqsym/permutation.hpp"

#include "seqsym/modring.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace seqsym {

Permutation::Permutation(std::vector<std::int64_t> image) : image_(std::move(image)) {
    const auto m = static_cast<std::int64_t>(image_.size());
    if (m < 1) {
        throw std::invalid_argument("Permutation: empty image table");
    }
    std::vector<bool> seen(image_.size(), false);
    for (const auto v : image_) {
        if (v < 0 || v >= m || seen[static_cast<std::size_t>(v)]) {
            throw std::invalid_argument("Permutation: image is not a bijection on {0..m-1}");
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(std::int64_t m) {
    if (m < 1) {
        throw std::invalid_argument("Permutation: m must be >= 1");
    }
    std::vector<std::int64_t> image(static_cast<std::size_t>(m));
    std::iota(image.begin(), image.end(), 0);
    return Permutation(std::move(image));
}

std::int64_t Permutation::operator()(std::int64_t x) const {
    if (x < 0 || x >= size()) {
        throw std::out_of_range("Permutation: point " + std::to_string(x) + " outside {0.." +
                                std::to_string(size() - 1) + "}");
    }
    return image_[static_cast<std::size_t>(x)];
}

Permutation Permutation::then(const Permutation& q) const {
    if (size() != q.size()) {
        throw std::invalid_argument("Permutation: cannot compose maps on different point sets");
    }
    std::vector<std::int64_t> image(image_.size());
    for (std::size_t x = 0; x < image_.size(); ++x) {
        image[x] = q.image_[static_cast<std::size_t>(image_[x])];
    }
    return Permutation(std::move(image));
}

Permutation Permutation::inverse() const {
    std::vector<std::int64_t> image(image_.size());
    for (std::size_t x = 0; x < image_.size(); ++x) {
        image[static_cast<std::size_t>(image_[x])] = static_cast<std::int64_t>(x);
    }
    return Permutation(std::move(image));
}

Permutation mult_perm(std::int64_t a, std::int64_t m) {
    if (m < 2) {
        throw std::invalid_argument("mult_perm: m must be >= 2, got " + std::to_string(m));
    }
    const std::int64_t r = reduce(a, Modulus(m)).value();
    if (std::gcd(r, m) != 1) {
        throw std::invalid_argument("mult_perm: gcd(" + std::to_string(a) + ", " + std::to_string(m) +
                                    ") > 1, so x -> a*x is not a bijection");
    }
    std::vector<std::int64_t> image(static_cast<std::size_t>(m));
    for (std::int64_t x = 0; x < m; ++x) {
        image[static_cast<std::size_t>(x)] =
            static_cast<std::int64_t>(static_cast<__int128>(r) * x % m);
    }
    return Permutation(std::move(image));
}

std::vector<std::int64_t> CycleDecomposition::lengths() const {
    std::vector<std::int64_t> out;
    out.reserve(cycles.size());
    for (const auto& c : cycles) {
        out.push_back(static_cast<std::int64_t>(c.size()));
    }
    return out;
}

CycleDecomposition cycles(const Permutation& p) {
    const std::int64_t m = p.size();
    std::vector<bool> visited(static_cast<std::size_t>(m), false);
    CycleDecomposition out;
    // Scanning points in ascending order makes every cycle start at its
    // minimum and sorts cycles by minimum, the canonical form.
    for (std::int64_t start = 0; start < m; ++start) {
        if (visited[static_cast<std::size_t>(start)]) continue;
        std::vector<std::int64_t> cycle;
        std::int64_t x = start;
        do {
            visited[static_cast<std::size_t>(x)] = true;
            cycle.push_back(x);
            x = p(x);
        } while (x != start);
        out.cycles.push_back(std::move(cycle));
    }
    return out;
}

int signature(const Permutation& p) {
    const std::int64_t m = p.size();
    std::vector<bool> visited(static_cast<std::size_t>(m), false);
    std::int64_t cycle_count = 0;
    for (std::int64_t start = 0; start < m; ++start) {
        if (visited[static_cast<std::size_t>(start)]) continue;
        ++cycle_count;
        std::int64_t x = start;
        do {
            visited[static_cast<std::size_t>(x)] = true;
            x = p(x);
        } while (x != start);
    }
    return ((m - cycle_count) % 2 == 0) ? 1 : -1;
}

}  // namespace seqsym
