#include "seqsym/multfunc.hpp"

#include <stdexcept>
#include <utility>

namespace seqsym {

namespace {

void require_odd_modulus(std::int64_t m, const char* who) {
    if (m < 3 || m % 2 == 0) {
        throw std::invalid_argument(std::string(who) + ": modulus must be odd and >= 3, got " +
                                    std::to_string(m));
    }
}

void require_even_side(int n, const char* who) {
    if (n < 2 || n % 2 != 0) {
        throw std::invalid_argument(std::string(who) + ": n must be even and >= 2 (odd n gives an even modulus m = n^2+1, where the Jacobi symbol is undefined); got " +
                                    std::to_string(n));
    }
}

}  // namespace

Sign jacobi(std::int64_t a, std::int64_t m) {
    require_odd_modulus(m, "jacobi");
    a %= m;
    if (a < 0) a += m;
    std::int64_t n = m;
    Sign t = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            const std::int64_t r = n % 8;
            if (r == 3 || r == 5) t = -t;  // (2/n) = -1 iff n = +-3 mod 8
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) t = -t;  // quadratic reciprocity
        a %= n;
    }
    return n == 1 ? t : 0;
}

bool is_prime_trial(std::int64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (std::int64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

Sign legendre_euler(std::int64_t a, std::int64_t p) {
    if (p < 3 || p % 2 == 0) {
        throw std::invalid_argument("legendre_euler: p must be an odd prime, got " +
                                    std::to_string(p));
    }
    if (!is_prime_trial(p)) {
        throw std::invalid_argument("legendre_euler: " + std::to_string(p) + " is not prime");
    }
    const Modulus mod(p);
    const Residue r = reduce(a, mod);
    if (r.value() == 0) return 0;
    const Residue e = pow(r, static_cast<std::uint64_t>((p - 1) / 2));
    if (e.value() == 1) return 1;
    if (e.value() == p - 1) return -1;
    throw std::logic_error("legendre_euler: Euler criterion gave a non-unit for prime modulus");
}

bool qr_bruteforce(const Residue& a) {
    const std::int64_t m = a.modulus().value();
    for (std::int64_t x = 0; x < m; ++x) {
        if (static_cast<std::int64_t>(static_cast<__int128>(x) * x % m) == a.value()) {
            return true;
        }
    }
    return false;
}

bool qr_bruteforce(std::int64_t a, std::int64_t m) {
    return qr_bruteforce(reduce(a, Modulus(m)));
}

MultiplicativeMap::MultiplicativeMap(std::string name, Modulus modulus,
                                     std::function<Sign(const Residue&)> eval)
    : name_(std::move(name)), modulus_(modulus), eval_(std::move(eval)) {
    if (!eval_) {
        throw std::invalid_argument("MultiplicativeMap: missing evaluation rule");
    }
}

Sign MultiplicativeMap::operator()(const Residue& a) const {
    if (!(a.modulus() == modulus_)) {
        throw std::invalid_argument("MultiplicativeMap '" + name_ + "': residue mod " +
                                    std::to_string(a.modulus().value()) +
                                    " does not match map modulus " +
                                    std::to_string(modulus_.value()));
    }
    return eval_(a);
}

Sign MultiplicativeMap::operator()(std::int64_t a) const { return eval_(reduce(a, modulus_)); }

MultiplicativeMap MultiplicativeMap::jacobi_symbol(Modulus m) {
    require_odd_modulus(m.value(), "MultiplicativeMap::jacobi_symbol");
    const std::int64_t mv = m.value();
    return MultiplicativeMap("jacobi", m,
                             [mv](const Residue& a) { return jacobi(a.value(), mv); });
}

MultiplicativeMap MultiplicativeMap::unit_indicator(Modulus m) {
    const std::int64_t mv = m.value();
    return MultiplicativeMap("unit-indicator", m, [mv](const Residue& a) -> Sign {
        return gcd(a.value(), mv) == 1 ? 1 : 0;
    });
}

SignMatrix apply_map(const MultiplicativeMap& phi, const ResidueMatrix& a) {
    if (!(phi.modulus() == a.modulus())) {
        throw std::invalid_argument("apply_map: map modulus " +
                                    std::to_string(phi.modulus().value()) +
                                    " does not match matrix modulus " +
                                    std::to_string(a.modulus().value()));
    }
    const int n = a.side();
    SignMatrix out(n);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            out.at(i, j) = phi(a.residue_at(i, j));
        }
    }
    return out;
}

SignMatrix jacobi_matrix(const ResidueMatrix& a) {
    return apply_map(MultiplicativeMap::jacobi_symbol(a.modulus()), a);
}

SignMatrix sign_scale(Sign s, const SignMatrix& a) {
    if (s < -1 || s > 1) {
        throw std::invalid_argument("sign_scale: scalar must be one of -1, 0, +1");
    }
    const int n = a.side();
    SignMatrix out(n);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            out.at(i, j) = s * a.at(i, j);
        }
    }
    return out;
}

bool check_corollary(const MultiplicativeMap& phi, int n) {
    const ResidueMatrix q = sequential(n);
    if (!(phi.modulus() == q.modulus())) {
        throw std::invalid_argument("check_corollary: map must be defined on Z/(n^2+1)Z, i.e. mod " +
                                    std::to_string(q.modulus().value()));
    }
    const SignMatrix phi_q = apply_map(phi, q);
    const SignMatrix lhs = apply_map(phi, apply(DihedralElement::rho, q));
    if (!(lhs == sign_scale(phi(static_cast<std::int64_t>(n)), phi_q))) {
        return false;
    }
    // sigma(phi(A)) = phi(sigma(A)) for every symmetry.
    for (const auto sigma : kDihedralElements) {
        if (!(apply(sigma, phi_q) == apply_map(phi, apply(sigma, q)))) {
            return false;
        }
    }
    return true;
}

RotationSign check_jacobi_theorem(int n) {
    require_even_side(n, "check_jacobi_theorem");
    const ResidueMatrix q = sequential(n);
    const SignMatrix signs = jacobi_matrix(q);
    const Sign expected = (n % 4 == 0) ? 1 : -1;
    const SignMatrix rotated = jacobi_matrix(apply(DihedralElement::rho, q));
    return {rotated == sign_scale(expected, signs), expected};
}

bool check_basic_symmetry(int n) {
    require_even_side(n, "check_basic_symmetry");
    const std::int64_t m = static_cast<std::int64_t>(n) * n + 1;
    if (jacobi(-1, m) != 1) {
        return false;
    }
    for (std::int64_t a = 1; a < m; ++a) {
        if (jacobi(a, m) != jacobi(m - a, m)) {
            return false;
        }
    }
    return true;
}

}  // namespace seqsym
