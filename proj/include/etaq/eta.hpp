#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>

#include "etaq/series.hpp"

namespace etaq {

/// Signed support of f_i = prod_{m>=1}(1 - q^{im}): exponent i*k(3k-1)/2,
/// sign (-1)^k, over k in Z (generalized pentagonal numbers).
struct pentagonal_term {
    std::int64_t exp;
    int sign; // +1 or -1
};

inline std::vector<pentagonal_term> eta_support(std::int64_t scale, std::int64_t order) {
    if (scale < 1) throw std::invalid_argument("eta_support: scale must be >= 1");
    std::vector<pentagonal_term> terms;
    terms.push_back({0, +1});
    for (std::int64_t k = 1;; ++k) {
        const std::int64_t g1 = scale * (k * (3 * k - 1)) / 2;
        const std::int64_t g2 = scale * (k * (3 * k + 1)) / 2;
        const int sign = (k % 2 == 0) ? +1 : -1;
        if (g1 > order) break;
        terms.push_back({g1, sign});
        if (g2 <= order) terms.push_back({g2, sign});
    }
    return terms;
}

/// f_i truncated at `order`, built sparsely from the pentagonal support.
template <class Ring>
series<Ring> eta_series(Ring ring, std::int64_t scale, std::int64_t order) {
    series<Ring> s(ring, order);
    for (const auto& t : eta_support(scale, order))
        s.c[t.exp] = ring.reduce(t.sign);
    return s;
}

inline zseries eta_series(std::int64_t scale, std::int64_t order) {
    return eta_series(exact_ring{}, scale, order);
}

/// (q^a; q^m)_infinity = prod_{j>=0}(1 - q^{a+jm}) truncated at `order`.
/// Built by repeated in-place multiplication by the binomials.
template <class Ring>
series<Ring> pochhammer_series(Ring ring, std::int64_t a, std::int64_t m, std::int64_t order) {
    if (a < 1 || m < 1)
        throw std::invalid_argument("pochhammer_series: offsets must be >= 1");
    series<Ring> s = one(ring, order);
    for (std::int64_t t = a; t <= order; t += m) {
        // multiply by (1 - q^t): descending so smaller indices are still old
        for (std::int64_t n = order; n >= t; --n)
            s.c[n] = ring.sub(s.c[n], s.c[n - t]);
    }
    return s;
}

inline zseries pochhammer_series(std::int64_t a, std::int64_t m, std::int64_t order) {
    return pochhammer_series(exact_ring{}, a, m, order);
}

/// Symbolic product prod f_i^{e_i}: scale -> nonzero exponent.
struct eta_quotient {
    std::map<std::int64_t, int> terms;

    eta_quotient() = default;
    eta_quotient(std::initializer_list<std::pair<const std::int64_t, int>> init) : terms(init) {
        for (const auto& [scale, e] : terms) {
            if (scale < 1) throw std::invalid_argument("eta_quotient: scales must be >= 1");
            if (e == 0) throw std::invalid_argument("eta_quotient: exponents must be nonzero");
        }
    }

    eta_quotient& mul(std::int64_t scale, int e) {
        if (scale < 1) throw std::invalid_argument("eta_quotient: scales must be >= 1");
        auto it = terms.find(scale);
        if (it == terms.end()) {
            if (e != 0) terms.emplace(scale, e);
        } else {
            it->second += e;
            if (it->second == 0) terms.erase(it);
        }
        return *this;
    }

    std::int64_t max_scale() const {
        return terms.empty() ? 1 : terms.rbegin()->first;
    }

    /// Canonical "f3.f8/f1.f24"-style rendering, usable as a cache key.
    std::string str() const {
        std::ostringstream num, den;
        for (const auto& [scale, e] : terms) {
            auto& out = e > 0 ? num : den;
            const int a = e > 0 ? e : -e;
            if (out.tellp() > 0) out << ".";
            out << "f" << scale;
            if (a != 1) out << "^" << a;
        }
        std::string n = num.str(), d = den.str();
        if (n.empty()) n = "1";
        return d.empty() ? n : n + "/" + d;
    }

    bool operator==(const eta_quotient& o) const = default;
    auto operator<=>(const eta_quotient& o) const = default;
};

/// Expand an eta quotient to a truncated series. Positive powers are
/// applied as sparse multiplications, negative powers as sparse divisions;
/// eta factors have unit constant term, so division is always defined.
template <class Ring>
series<Ring> compile(Ring ring, const eta_quotient& eq, std::int64_t order) {
    series<Ring> acc = one(ring, order);
    for (const auto& [scale, e] : eq.terms) {
        if (e <= 0) continue;
        const series<Ring> f = eta_series(ring, scale, order);
        for (int i = 0; i < e; ++i) acc = mul(acc, f);
    }
    for (const auto& [scale, e] : eq.terms) {
        if (e >= 0) continue;
        const series<Ring> f = eta_series(ring, scale, order);
        for (int i = 0; i < -e; ++i) acc = divide(acc, f);
    }
    return acc;
}

inline zseries compile(const eta_quotient& eq, std::int64_t order) {
    return compile(exact_ring{}, eq, order);
}

inline mseries compile_mod(const eta_quotient& eq, std::int64_t order, std::uint64_t modulus) {
    return compile(mod_ring(modulus), eq, order);
}

} // namespace etaq
