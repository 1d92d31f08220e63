#include "seqsym/seqmatrix.hpp"

#include <algorithm>

namespace seqsym {

namespace {

// Element s as tau^flip o rho^k.
struct Word {
    bool flip;
    int k;
};

Word word_of(DihedralElement s) {
    const int idx = static_cast<int>(s);
    return {idx >= 4, idx & 3};
}

DihedralElement element_of(Word w) {
    return static_cast<DihedralElement>((w.flip ? 4 : 0) + (w.k & 3));
}

}  // namespace

DihedralElement compose(DihedralElement s, DihedralElement t) {
    const Word a = word_of(s);
    const Word b = word_of(t);
    // rho^k * tau = tau * rho^(3k), from tau rho tau = rho^3.
    if (!b.flip) {
        return element_of({a.flip, (a.k + b.k) & 3});
    }
    return element_of({!a.flip, (3 * a.k + b.k) & 3});
}

DihedralElement inverse(DihedralElement s) {
    const Word a = word_of(s);
    if (a.flip) {
        return s;  // reflections are involutions
    }
    return element_of({false, (4 - a.k) & 3});
}

std::string_view to_string(DihedralElement s) {
    switch (s) {
        case DihedralElement::identity: return "identity";
        case DihedralElement::rho: return "rho";
        case DihedralElement::rho2: return "rho2";
        case DihedralElement::rho3: return "rho3";
        case DihedralElement::tau: return "tau";
        case DihedralElement::tau_rho: return "tau_rho";
        case DihedralElement::tau_rho2: return "tau_rho2";
        case DihedralElement::tau_rho3: return "tau_rho3";
    }
    return "?";
}

std::optional<DihedralElement> dihedral_from_string(std::string_view name) {
    for (const auto s : kDihedralElements) {
        if (name == to_string(s)) {
            return s;
        }
    }
    if (name == "1" || name == "id") {
        return DihedralElement::identity;
    }
    return std::nullopt;
}

namespace {

std::int64_t sequential_modulus(int n) {
    if (n < 1) {
        throw std::invalid_argument("ResidueMatrix: n must be >= 1, got " + std::to_string(n));
    }
    return static_cast<std::int64_t>(n) * n + 1;
}

}  // namespace

ResidueMatrix::ResidueMatrix(int n) : modulus_(sequential_modulus(n)), grid_(n) {}

ResidueMatrix ResidueMatrix::from_values(SquareGrid<std::int64_t> values) {
    const int n = values.side();
    const std::int64_t m = static_cast<std::int64_t>(n) * n + 1;
    for (const auto v : values.cells()) {
        if (v < 0 || v >= m) {
            throw std::invalid_argument("ResidueMatrix: entry " + std::to_string(v) +
                                        " is not a canonical residue mod " + std::to_string(m));
        }
    }
    return ResidueMatrix(Modulus(m), std::move(values));
}

ResidueMatrix sequential(int n) {
    if (n < 1) {
        throw std::invalid_argument("sequential: n must be >= 1, got " + std::to_string(n));
    }
    ResidueMatrix q(n);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            // j + (i-1)n <= n^2 < m, so no reduction ever happens here.
            q.set(i, j, j + static_cast<std::int64_t>(i - 1) * n);
        }
    }
    return q;
}

ResidueMatrix apply(DihedralElement sigma, const ResidueMatrix& a) {
    return ResidueMatrix::from_values(apply(sigma, a.grid()));
}

ResidueMatrix realize_by_products(DihedralElement sigma, const ResidueMatrix& a) {
    return ResidueMatrix::from_values(realize_by_products(sigma, a.grid()));
}

ResidueMatrix transpose(const ResidueMatrix& a) {
    return ResidueMatrix::from_values(transpose(a.grid()));
}

ResidueMatrix scalar_mul(const Residue& c, const ResidueMatrix& a) {
    if (!(c.modulus() == a.modulus())) {
        throw std::invalid_argument("scalar_mul: scalar modulus " +
                                    std::to_string(c.modulus().value()) +
                                    " does not match matrix modulus " +
                                    std::to_string(a.modulus().value()));
    }
    const int n = a.side();
    ResidueMatrix out(n);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            out.set(i, j, mul(c, a.residue_at(i, j)).value());
        }
    }
    return out;
}

Permutation induced_permutation(DihedralElement sigma, int n) {
    const ResidueMatrix q = sequential(n);
    const ResidueMatrix s = apply(sigma, q);
    const std::int64_t m = q.modulus().value();
    std::vector<std::int64_t> image(static_cast<std::size_t>(m), 0);
    // Q_n's entries are exactly {1, ..., n^2}, each once; 0 stays fixed.
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            image[static_cast<std::size_t>(q.at(i, j))] = s.at(i, j);
        }
    }
    return Permutation(std::move(image));
}

bool check_theorem1(int n) {
    const ResidueMatrix q = sequential(n);
    const Residue factor(n, q.modulus());
    return apply(DihedralElement::rho, q) == scalar_mul(factor, q);
}

bool check_value_table(int n) {
    const ResidueMatrix q = sequential(n);
    const Modulus m = q.modulus();
    const ResidueMatrix qt = transpose(q);
    const Residue unit(1, m);
    const Residue scale_n(n, m);
    const Residue minus_one(-1, m);
    const Residue minus_n = mul(minus_one, scale_n);

    const std::array<std::pair<DihedralElement, ResidueMatrix>, 8> expected = {{
        {DihedralElement::identity, q},
        {DihedralElement::rho, scalar_mul(scale_n, q)},
        {DihedralElement::rho2, scalar_mul(minus_one, q)},
        {DihedralElement::rho3, scalar_mul(minus_n, q)},
        {DihedralElement::tau, qt},
        {DihedralElement::tau_rho, scalar_mul(scale_n, qt)},
        {DihedralElement::tau_rho2, scalar_mul(minus_one, qt)},
        {DihedralElement::tau_rho3, scalar_mul(minus_n, qt)},
    }};

    for (const auto& [sigma, want] : expected) {
        if (!(apply(sigma, q) == want)) {
            return false;
        }
    }
    return true;
}

bool check_realizations(int n) {
    const ResidueMatrix q = sequential(n);
    return std::all_of(kDihedralElements.begin(), kDihedralElements.end(),
                       [&](DihedralElement sigma) {
                           return realize_by_products(sigma, q) == apply(sigma, q);
                       });
}

}  // namespace seqsym
