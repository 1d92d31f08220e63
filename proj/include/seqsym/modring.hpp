#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace seqsym {

/// Modulus of a residue ring Z/mZ. Any m >= 2 is allowed here; operations
/// that additionally need an odd modulus (the Jacobi symbol) enforce that
/// themselves.
class Modulus {
public:
    explicit Modulus(std::int64_t m) : m_(m) {
        if (m < 2) {
            throw std::invalid_argument("Modulus: m must be >= 2, got " + std::to_string(m));
        }
    }

    std::int64_t value() const noexcept { return m_; }
    bool odd() const noexcept { return (m_ & 1) != 0; }

    friend bool operator==(const Modulus&, const Modulus&) = default;

private:
    std::int64_t m_;
};

/// Element of Z/mZ held as its canonical representative in [0, m).
/// Construction reduces, so a Residue is canonical at all times and
/// equality is plain value comparison.
class Residue {
public:
    Residue(std::int64_t value, Modulus modulus)
        : value_(canonical(value, modulus)), modulus_(modulus) {}

    std::int64_t value() const noexcept { return value_; }
    Modulus modulus() const noexcept { return modulus_; }

    friend bool operator==(const Residue&, const Residue&) = default;

private:
    static std::int64_t canonical(std::int64_t x, Modulus m) {
        std::int64_t r = x % m.value();
        return r < 0 ? r + m.value() : r;
    }

    std::int64_t value_;
    Modulus modulus_;
};

/// Canonical residue of an arbitrary integer; negative inputs are fine.
inline Residue reduce(std::int64_t x, Modulus m) { return Residue(x, m); }

inline void require_same_modulus(const Residue& a, const Residue& b) {
    if (!(a.modulus() == b.modulus())) {
        throw std::invalid_argument("mixed moduli: " + std::to_string(a.modulus().value()) +
                                    " vs " + std::to_string(b.modulus().value()));
    }
}

/// Product in Z/mZ. The intermediate product is 128-bit, so any modulus
/// that fits in int64 is safe.
inline Residue mul(const Residue& a, const Residue& b) {
    require_same_modulus(a, b);
    const auto p = static_cast<__int128>(a.value()) * b.value();
    return Residue(static_cast<std::int64_t>(p % a.modulus().value()), a.modulus());
}

inline Residue add(const Residue& a, const Residue& b) {
    require_same_modulus(a, b);
    return Residue(a.value() + b.value(), a.modulus());
}

inline Residue neg(const Residue& a) { return Residue(-a.value(), a.modulus()); }

/// gcd on nonnegative integers with gcd(x, 0) = x; gcd(0, 0) is rejected.
inline std::int64_t gcd(std::int64_t x, std::int64_t y) {
    if (x < 0 || y < 0) {
        throw std::invalid_argument("gcd: arguments must be nonnegative");
    }
    if (x == 0 && y == 0) {
        throw std::invalid_argument("gcd(0, 0) is undefined");
    }
    return std::gcd(x, y);
}

/// a^e by square-and-multiply. pow(a, 0) = 1 for every a, including
/// pow(0, 0) = 1 (empty-product convention).
inline Residue pow(Residue base, std::uint64_t e) {
    Residue acc(1, base.modulus());
    while (e != 0) {
        if (e & 1u) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

}  // namespace seqsym
