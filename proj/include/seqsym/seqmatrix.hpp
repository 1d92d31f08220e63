#pragma once

#include "seqsym/modring.hpp"
#include "seqsym/permutation.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace seqsym {

/// The eight symmetries of the square. Words denote function composition
/// read right to left: tau_rho means "rho first, then tau", and in general
/// compose(s, t) applies t first.
///
/// rho and tau act on an n x n matrix A = (a_{i,j}) by the index formulas
///
///     tau(A) = (a_{j,i})        rho(A) = (a_{j, n-i+1})
///
/// so rho(A)(1,1) = a_{1,n}: rho carries the top-right corner to the top
/// left. The remaining six elements are compositions of these two.
enum class DihedralElement : int {
    identity = 0,
    rho = 1,
    rho2 = 2,
    rho3 = 3,
    tau = 4,
    tau_rho = 5,
    tau_rho2 = 6,
    tau_rho3 = 7,
};

inline constexpr std::array<DihedralElement, 8> kDihedralElements = {
    DihedralElement::identity, DihedralElement::rho,      DihedralElement::rho2,
    DihedralElement::rho3,     DihedralElement::tau,      DihedralElement::tau_rho,
    DihedralElement::tau_rho2, DihedralElement::tau_rho3,
};

/// compose(s, t) is "t first, then s": apply(compose(s, t), A) = apply(s, apply(t, A)).
DihedralElement compose(DihedralElement s, DihedralElement t);
DihedralElement inverse(DihedralElement s);
std::string_view to_string(DihedralElement s);
std::optional<DihedralElement> dihedral_from_string(std::string_view name);

/// Dense row-major n x n grid. Entry access is 1-indexed: at(1, 1) is the
/// top-left corner and at(n, n) the bottom-right one.
template <typename T>
class SquareGrid {
public:
    explicit SquareGrid(int n, T fill = T{})
        : n_(checked_side(n)),
          cells_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), fill) {}

    int side() const noexcept { return n_; }

    const T& at(int i, int j) const { return cells_[index(i, j)]; }
    T& at(int i, int j) { return cells_[index(i, j)]; }

    const std::vector<T>& cells() const noexcept { return cells_; }

    friend bool operator==(const SquareGrid&, const SquareGrid&) = default;

private:
    static int checked_side(int n) {
        if (n < 1) {
            throw std::invalid_argument("SquareGrid: side must be >= 1, got " + std::to_string(n));
        }
        return n;
    }

    std::size_t index(int i, int j) const {
        if (i < 1 || i > n_ || j < 1 || j > n_) {
            throw std::out_of_range("SquareGrid: position (" + std::to_string(i) + ", " +
                                    std::to_string(j) + ") outside 1.." + std::to_string(n_));
        }
        return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(j - 1);
    }

    int n_;
    std::vector<T> cells_;
};

namespace detail {

/// Source position (r, c) whose entry lands at (i, j) under sigma.
inline std::pair<int, int> source_position(DihedralElement sigma, int n, int i, int j) {
    switch (sigma) {
        case DihedralElement::identity: return {i, j};
        case DihedralElement::rho: return {j, n - i + 1};
        case DihedralElement::rho2: return {n - i + 1, n - j + 1};
        case DihedralElement::rho3: return {n - j + 1, i};
        case DihedralElement::tau: return {j, i};
        case DihedralElement::tau_rho: return {i, n - j + 1};
        case DihedralElement::tau_rho2: return {n - j + 1, n - i + 1};
        case DihedralElement::tau_rho3: return {n - i + 1, j};
    }
    throw std::invalid_argument("unknown dihedral element");
}

}  // namespace detail

/// Image of a grid under sigma, via the index formulas.
template <typename T>
SquareGrid<T> apply(DihedralElement sigma, const SquareGrid<T>& a) {
    const int n = a.side();
    SquareGrid<T> out(n);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            const auto [r, c] = detail::source_position(sigma, n, i, j);
            out.at(i, j) = a.at(r, c);
        }
    }
    return out;
}

template <typename T>
SquareGrid<T> transpose(const SquareGrid<T>& a) {
    return apply(DihedralElement::tau, a);
}

/// J*A where J is the exchange matrix (1's on the anti-diagonal): the rows
/// of A in reverse order.
template <typename T>
SquareGrid<T> exchange_mul_left(const SquareGrid<T>& a) {
    const int n = a.side();
    SquareGrid<T> out(n);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            out.at(i, j) = a.at(n - i + 1, j);
        }
    }
    return out;
}

/// A*J: the columns of A in reverse order.
template <typename T>
SquareGrid<T> exchange_mul_right(const SquareGrid<T>& a) {
    const int n = a.side();
    SquareGrid<T> out(n);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            out.at(i, j) = a.at(i, n - j + 1);
        }
    }
    return out;
}

/// sigma(A) computed purely from transposition and multiplication by the
/// exchange matrix J, as an independent route to the index formulas.
///
/// With rho(A) = (a_{j, n-i+1}) the correspondence is
///
///     1 -> A          rho -> J*A^T        rho2 -> J*A*J    rho3 -> A^T*J
///     tau -> A^T      tau_rho -> A*J      tau_rho2 -> J*A^T*J
///     tau_rho3 -> J*A
///
/// (the A^T*J / J*A^T and A*J / J*A assignments trade places relative to
/// the convention where rho is the opposite rotation).
template <typename T>
SquareGrid<T> realize_by_products(DihedralElement sigma, const SquareGrid<T>& a) {
    switch (sigma) {
        case DihedralElement::identity: return a;
        case DihedralElement::rho: return exchange_mul_left(transpose(a));
        case DihedralElement::rho2: return exchange_mul_left(exchange_mul_right(a));
        case DihedralElement::rho3: return exchange_mul_right(transpose(a));
        case DihedralElement::tau: return transpose(a);
        case DihedralElement::tau_rho: return exchange_mul_right(a);
        case DihedralElement::tau_rho2: return exchange_mul_left(exchange_mul_right(transpose(a)));
        case DihedralElement::tau_rho3: return exchange_mul_left(a);
    }
    throw std::invalid_argument("unknown dihedral element");
}

/// n x n matrix over Z/(n^2+1)Z, stored as canonical residue values.
class ResidueMatrix {
public:
    /// Zero-filled n x n matrix over Z/(n^2+1)Z.
    explicit ResidueMatrix(int n);

    /// Wraps a grid of canonical values; every entry must already lie in
    /// [0, n^2+1).
    static ResidueMatrix from_values(SquareGrid<std::int64_t> values);

    int side() const noexcept { return grid_.side(); }
    Modulus modulus() const noexcept { return modulus_; }

    /// 1-indexed entry value.
    std::int64_t at(int i, int j) const { return grid_.at(i, j); }
    Residue residue_at(int i, int j) const { return Residue(grid_.at(i, j), modulus_); }

    /// Stores value mod m.
    void set(int i, int j, std::int64_t value) { grid_.at(i, j) = reduce(value, modulus_).value(); }

    const SquareGrid<std::int64_t>& grid() const noexcept { return grid_; }

    friend bool operator==(const ResidueMatrix&, const ResidueMatrix&) = default;

private:
    ResidueMatrix(Modulus m, SquareGrid<std::int64_t> grid) : modulus_(m), grid_(std::move(grid)) {}

    Modulus modulus_;
    SquareGrid<std::int64_t> grid_;
};

/// The n x n sequential matrix Q_n: entry (i, j) is j + (i-1)n, so the
/// rows count 1, 2, 3, ... left to right, top to bottom. Entries fill
/// {1, ..., n^2} and 0 never appears.
ResidueMatrix sequential(int n);

ResidueMatrix apply(DihedralElement sigma, const ResidueMatrix& a);
ResidueMatrix realize_by_products(DihedralElement sigma, const ResidueMatrix& a);
ResidueMatrix transpose(const ResidueMatrix& a);

/// Entrywise product c * a_{i,j}; c must live in the matrix's modulus.
ResidueMatrix scalar_mul(const Residue& c, const ResidueMatrix& a);

/// The permutation of {0, ..., n^2} sending the entry at each position of
/// Q_n to the entry at the same position of sigma(Q_n), with 0 fixed.
/// induced_permutation(compose(s, t), n) equals
/// induced_permutation(s, n).then(induced_permutation(t, n)).
Permutation induced_permutation(DihedralElement sigma, int n);

/// rho(Q_n) = n * Q_n, checked entrywise.
bool check_theorem1(int n);

/// All eight value rows: sigma(Q_n) is Q_n, n*Q_n, -Q_n, -n*Q_n and the
/// transposed four, in the order 1, rho, rho2, rho3, tau, tau_rho,
/// tau_rho2, tau_rho3.
bool check_value_table(int n);

/// realize_by_products(sigma, Q_n) == apply(sigma, Q_n) for all eight sigma.
bool check_realizations(int n);

}  // namespace seqsym
