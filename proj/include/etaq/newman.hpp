#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "etaq/eta.hpp"
#include "etaq/series.hpp"
#include "etaq/theta.hpp"

namespace etaq {

/// Legendre symbol (a/p) for odd prime p, via Euler's criterion on the
/// residue of a mod p.
inline int legendre(const bigint& a, std::int64_t p) {
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw std::invalid_argument("legendre: p must be an odd prime");
    std::int64_t r = (a % p).convert_to<std::int64_t>();
    if (r < 0) r += p;
    if (r == 0) return 0;
    std::int64_t result = 1, base = r, e = (p - 1) / 2;
    while (e > 0) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return result == 1 ? 1 : -1;
}

inline int legendre(std::int64_t a, std::int64_t p) { return legendre(bigint(a), p); }

/// Parameters of the three-term coefficient recurrence for
/// phi = f1^r fq^s = sum c(n) q^n:
///
///   c(n p^2 + delta) - gamma_n c(n) + p^{r+s-2} c((n - delta)/p^2) = 0,
///   gamma_n = K - (theta/p) p^{(r+s-3)/2} ((n - delta)/p),
///
/// with theta = (-1)^{(1-r-s)/2} 2 q^s and delta = (r + s q)(p^2 - 1)/24.
/// K absorbs p^{r+s-2} times the recurrence constant and is solved from
/// the n = 0 instance; it is always an integer.
struct newman_params {
    std::int64_t r, s, q, p;
    std::int64_t delta;
    std::int64_t power_2eps_m2;   // exponent r+s-2 of the tail term
    std::int64_t power_eps_m32;   // exponent (r+s-3)/2 of the twist term
    int theta_sign;               // sign of theta

    /// Legendre symbol (theta/p), split over theta's factors; the symbol
    /// of q enters only through the parity of s.
    int theta_symbol() const {
        int v = legendre(theta_sign * 2, p);
        if (s % 2 != 0) v *= legendre(q, p);
        return v;
    }

    bigrat t() const { return bigrat(r + s * q, 24); }
};

inline newman_params make_newman_params(std::int64_t r, std::int64_t s, std::int64_t q,
                                        std::int64_t p) {
    if (r == 0 || s == 0)
        throw std::invalid_argument("newman_params: r and s must be nonzero");
    if ((r + s) % 2 == 0)
        throw std::invalid_argument("newman_params: r + s must be odd");
    if (r + s < 3)
        throw std::invalid_argument("newman_params: requires r + s >= 3");
    if (!is_prime(q) || !is_prime(p) || q == p || p % 2 == 0)
        throw std::invalid_argument("newman_params: q, p must be distinct primes, p odd");
    if (r + s * q <= 0)
        throw std::invalid_argument("newman_params: requires r + s*q > 0");
    const bigrat delta_rat = bigrat(r + s * q, 24) * (p * p - 1);
    if (boost::multiprecision::denominator(delta_rat) != 1)
        throw std::domain_error("newman_params: delta = t(p^2-1) is not an integer");
    newman_params np;
    np.r = r;
    np.s = s;
    np.q = q;
    np.p = p;
    np.delta = boost::multiprecision::numerator(delta_rat).convert_to<std::int64_t>();
    np.power_2eps_m2 = r + s - 2;
    np.power_eps_m32 = (r + s - 3) / 2;
    np.theta_sign = ((1 - r - s) / 2) % 2 == 0 ? +1 : -1;
    return np;
}

/// f1^r fq^s expanded exactly to `order` (the c(n) of the recurrence).
inline zseries newman_coefficient_series(std::int64_t r, std::int64_t s, std::int64_t q,
                                         std::int64_t order) {
    return compile(eta_quotient{}.mul(1, static_cast<int>(r)).mul(q, static_cast<int>(s)), order);
}

inline bigint pow_int(std::int64_t base, std::int64_t exp) {
    bigint v = 1;
    for (std::int64_t i = 0; i < exp; ++i) v *= base;
    return v;
}

/// Solve the n = 0 instance for the recurrence constant:
/// K = c(delta) + (theta/p) p^{(r+s-3)/2} (-delta/p). Uses c(0) = 1 and
/// c(-delta/p^2) = 0 (argument negative or non-integral).
inline bigint solve_constant(const zseries& coeffs, const newman_params& np) {
    if (coeffs.order() < np.delta)
        throw std::invalid_argument("solve_constant: series truncated below delta");
    if (coeffs.c[0] != 1)
        throw std::invalid_argument("solve_constant: constant coefficient must be 1");
    return coeffs.at(np.delta) +
           np.theta_symbol() * pow_int(np.p, np.power_eps_m32) * legendre(-np.delta, np.p);
}

struct recurrence_check {
    std::int64_t n_max = 0;
    std::int64_t checks_run = 0;
    bigint constant;                 // the solved K
    std::int64_t first_bad_n = -1;   // -1 when all residuals vanish
    bigint first_residual = 0;

    bool ok() const { return first_bad_n < 0; }
};

/// Assert c(np^2 + delta) = gamma_n c(n) - p^{r+s-2} c((n-delta)/p^2)
/// exactly for 0 <= n <= n_max, with the single K solved at n = 0 (so K is
/// over-determined: one constant must satisfy every n).
inline recurrence_check verify_recurrence(const zseries& coeffs, const newman_params& np,
                                          std::int64_t n_max) {
    if (coeffs.order() < n_max * np.p * np.p + np.delta)
        throw std::invalid_argument("verify_recurrence: series truncated below n_max*p^2+delta");
    recurrence_check result;
    result.n_max = n_max;
    result.constant = solve_constant(coeffs, np);
    const bigint twist_scale = np.theta_symbol() * pow_int(np.p, np.power_eps_m32);
    const bigint tail_scale = pow_int(np.p, np.power_2eps_m2);
    // c(x) with the convention c(x) = 0 for x negative or non-integral
    const auto c_at = [&](std::int64_t num, std::int64_t den) -> bigint {
        if (num < 0 || num % den != 0) return 0;
        return coeffs.at(num / den);
    };
    for (std::int64_t n = 0; n <= n_max; ++n) {
        const bigint gamma = result.constant - twist_scale * legendre(n - np.delta, np.p);
        const bigint residual = coeffs.at(n * np.p * np.p + np.delta) - gamma * coeffs.at(n) +
                                tail_scale * c_at(n - np.delta, np.p * np.p);
        ++result.checks_run;
        if (residual != 0) {
            result.first_bad_n = n;
            result.first_residual = residual;
            break;
        }
    }
    return result;
}

/// The two coefficient families whose recurrence constants gate the
/// branch congruence families: b(n) from f1^2 f3 and a(n) from f1^6 f3.
struct omega_spec {
    std::int64_t r, s, q;
    const char* label;
};

inline constexpr omega_spec omega_b{2, 1, 3, "b"};
inline constexpr omega_spec omega_a{6, 1, 3, "a"};

/// The exact integer K = c(delta) + twist for the given prime.
inline bigint omega_value(const omega_spec& spec, std::int64_t p) {
    const newman_params np = make_newman_params(spec.r, spec.s, spec.q, p);
    const zseries coeffs = newman_coefficient_series(spec.r, spec.s, spec.q, np.delta);
    return solve_constant(coeffs, np);
}

/// K reduced into [0, M).
inline std::uint64_t omega(const omega_spec& spec, std::int64_t p, std::uint64_t modulus) {
    return mod_ring(modulus).reduce(omega_value(spec, p));
}

} // namespace etaq
