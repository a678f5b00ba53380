#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace etaq {

using bigint = boost::multiprecision::cpp_int;
using bigrat = boost::multiprecision::cpp_rational;

/// Ring of exact arbitrary-precision integers. Stateless; any two
/// instances are compatible.
struct exact_ring {
    using value_type = bigint;
    static constexpr bool is_modular = false;

    bigint reduce(bigint v) const { return v; }
    bigint add(const bigint& a, const bigint& b) const { return a + b; }
    bigint sub(const bigint& a, const bigint& b) const { return a - b; }
    bigint mul(const bigint& a, const bigint& b) const { return a * b; }
    bigint neg(const bigint& a) const { return -a; }
    bigint zero() const { return 0; }
    bigint one() const { return 1; }
    bool is_zero(const bigint& a) const { return a == 0; }
    bool is_unit(const bigint& a) const { return a == 1 || a == -1; }

    // Units of Z are +-1, each its own inverse.
    bigint inv(const bigint& a) const {
        if (!is_unit(a))
            throw std::domain_error("exact_ring: constant term is not a unit");
        return a;
    }

    bool same(const exact_ring&) const { return true; }
    std::string name() const { return "Z"; }
};

/// Ring of residues mod m, stored reduced into [0, m). The modulus is a
/// runtime value carried by the ring object; it must fit in 32 bits so
/// products never overflow a 64-bit word.
struct mod_ring {
    using value_type = std::uint64_t;
    static constexpr bool is_modular = true;

    std::uint64_t m;

    explicit mod_ring(std::uint64_t modulus) : m(modulus) {
        if (m < 2)
            throw std::invalid_argument("mod_ring: modulus must be >= 2");
        if (m > 0xffffffffULL)
            throw std::invalid_argument("mod_ring: modulus must fit in 32 bits");
    }

    std::uint64_t reduce(std::int64_t v) const {
        std::int64_t r = v % static_cast<std::int64_t>(m);
        if (r < 0) r += static_cast<std::int64_t>(m);
        return static_cast<std::uint64_t>(r);
    }
    std::uint64_t reduce(const bigint& v) const {
        bigint r = v % m;
        if (r < 0) r += m;
        return r.convert_to<std::uint64_t>();
    }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;
        return s >= m ? s - m : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
        return a >= b ? a - b : a + m - b;
    }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return (a * b) % m; }
    std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : m - a; }
    std::uint64_t zero() const { return 0; }
    std::uint64_t one() const { return 1 % m; }
    bool is_zero(std::uint64_t a) const { return a == 0; }
    bool is_unit(std::uint64_t a) const { return std::gcd(a, m) == 1; }

    // Inverse of a unit via the extended Euclidean algorithm.
    std::uint64_t inv(std::uint64_t a) const {
        std::int64_t t = 0, nt = 1;
        std::int64_t r = static_cast<std::int64_t>(m), nr = static_cast<std::int64_t>(a % m);
        while (nr != 0) {
            std::int64_t qq = r / nr;
            t = std::exchange(nt, t - qq * nt);
            r = std::exchange(nr, r - qq * nr);
        }
        if (r != 1)
            throw std::domain_error("mod_ring: not a unit mod " + std::to_string(m));
        return reduce(t);
    }

    bool same(const mod_ring& o) const { return m == o.m; }
    std::string name() const { return "Z/" + std::to_string(m); }
};

/// Truncated formal power series in q over a coefficient ring. Holds
/// exactly order+1 coefficients, index n being the coefficient of q^n.
/// Immutable by convention once built: every operation returns a fresh
/// value, so series can be shared read-only across threads.
template <class Ring>
struct series {
    using ring_type = Ring;
    using value_type = typename Ring::value_type;

    Ring ring;
    std::vector<value_type> c;

    series(Ring r, std::int64_t order) : ring(std::move(r)) {
        if (order < 0)
            throw std::invalid_argument("series: order must be >= 0");
        c.assign(static_cast<std::size_t>(order) + 1, ring.zero());
    }

    series(std::int64_t order)
        requires std::default_initializable<Ring>
        : series(Ring{}, order) {}

    std::int64_t order() const { return static_cast<std::int64_t>(c.size()) - 1; }

    const value_type& at(std::int64_t n) const {
        if (n < 0 || n > order())
            throw std::out_of_range("series: coefficient index " + std::to_string(n) +
                                    " outside truncation order " + std::to_string(order()));
        return c[static_cast<std::size_t>(n)];
    }
    value_type& at(std::int64_t n) {
        if (n < 0 || n > order())
            throw std::out_of_range("series: coefficient index out of range");
        return c[static_cast<std::size_t>(n)];
    }

    std::int64_t nonzero_count() const {
        std::int64_t k = 0;
        for (const auto& v : c)
            if (!ring.is_zero(v)) ++k;
        return k;
    }

    bool operator==(const series& o) const { return ring.same(o.ring) && c == o.c; }
};

using zseries = series<exact_ring>;
using mseries = series<mod_ring>;

namespace detail {

template <class Ring>
void require_compatible(const series<Ring>& x, const series<Ring>& y) {
    if (!x.ring.same(y.ring))
        throw std::invalid_argument("series: mixed coefficient rings (" + x.ring.name() +
                                    " vs " + y.ring.name() + ")");
}

} // namespace detail

/// 1 + 0*q + ... truncated at `order`.
template <class Ring>
series<Ring> one(Ring ring, std::int64_t order) {
    series<Ring> s(ring, order);
    s.c[0] = ring.one();
    return s;
}

inline zseries one(std::int64_t order) { return one(exact_ring{}, order); }

/// Series from explicit coefficients; order = size-1.
template <class Ring, class T>
series<Ring> from_coeffs(Ring ring, const std::vector<T>& coeffs) {
    if (coeffs.empty())
        throw std::invalid_argument("series: coefficient list must be nonempty");
    series<Ring> s(ring, static_cast<std::int64_t>(coeffs.size()) - 1);
    for (std::size_t i = 0; i < coeffs.size(); ++i) s.c[i] = ring.reduce(coeffs[i]);
    return s;
}

inline zseries from_coeffs(const std::vector<std::int64_t>& coeffs) {
    std::vector<bigint> v(coeffs.begin(), coeffs.end());
    return from_coeffs(exact_ring{}, v);
}

template <class Ring>
series<Ring> add(const series<Ring>& x, const series<Ring>& y) {
    detail::require_compatible(x, y);
    series<Ring> r(x.ring, std::min(x.order(), y.order()));
    for (std::int64_t n = 0; n <= r.order(); ++n)
        r.c[n] = x.ring.add(x.c[n], y.c[n]);
    return r;
}

template <class Ring>
series<Ring> sub(const series<Ring>& x, const series<Ring>& y) {
    detail::require_compatible(x, y);
    series<Ring> r(x.ring, std::min(x.order(), y.order()));
    for (std::int64_t n = 0; n <= r.order(); ++n)
        r.c[n] = x.ring.sub(x.c[n], y.c[n]);
    return r;
}

template <class Ring>
series<Ring> negate(const series<Ring>& x) {
    series<Ring> r(x.ring, x.order());
    for (std::int64_t n = 0; n <= r.order(); ++n) r.c[n] = x.ring.neg(x.c[n]);
    return r;
}

/// Cauchy product truncated to the smaller operand order. Schoolbook
/// O(N^2), except the outer loop runs over the operand with fewer nonzero
/// coefficients and skips zeros, which makes multiplication by eta factors
/// (pentagonal support, O(sqrt N) terms) cost O(N sqrt N).
template <class Ring>
series<Ring> mul(const series<Ring>& x, const series<Ring>& y) {
    detail::require_compatible(x, y);
    const std::int64_t N = std::min(x.order(), y.order());
    const series<Ring>* outer = &x;
    const series<Ring>* inner = &y;
    if (y.nonzero_count() < x.nonzero_count()) std::swap(outer, inner);
    series<Ring> r(x.ring, N);
    for (std::int64_t i = 0; i <= N; ++i) {
        const auto& oi = outer->c[i];
        if (x.ring.is_zero(oi)) continue;
        for (std::int64_t j = 0; i + j <= N; ++j) {
            if (x.ring.is_zero(inner->c[j])) continue;
            r.c[i + j] = x.ring.add(r.c[i + j], x.ring.mul(oi, inner->c[j]));
        }
    }
    return r;
}

template <class Ring>
series<Ring> mul_scalar(const series<Ring>& x, typename Ring::value_type k) {
    series<Ring> r(x.ring, x.order());
    for (std::int64_t n = 0; n <= r.order(); ++n) r.c[n] = x.ring.mul(x.c[n], k);
    return r;
}

inline zseries mul_scalar(const zseries& x, std::int64_t k) { return mul_scalar(x, bigint(k)); }

/// Multiply by q^e at fixed truncation order; coefficients pushed past the
/// order are dropped.
template <class Ring>
series<Ring> shift(const series<Ring>& x, std::int64_t e) {
    if (e < 0) throw std::invalid_argument("shift: exponent must be >= 0");
    series<Ring> r(x.ring, x.order());
    for (std::int64_t n = 0; n + e <= r.order(); ++n) r.c[n + e] = x.c[n];
    return r;
}

/// Multiplicative inverse: y with x*y = 1 + O(q^{N+1}). Triangular
/// recurrence c0*y_n = -sum_{k>=1} x_k y_{n-k}; the sum iterates only the
/// nonzero x_k. Requires a unit constant term.
template <class Ring>
series<Ring> invert(const series<Ring>& x) {
    const auto& c0 = x.c[0];
    if (!x.ring.is_unit(c0))
        throw std::domain_error("invert: constant term is not a unit in " + x.ring.name());
    const auto inv0 = x.ring.inv(c0);
    std::vector<std::int64_t> support;
    for (std::int64_t k = 1; k <= x.order(); ++k)
        if (!x.ring.is_zero(x.c[k])) support.push_back(k);
    series<Ring> y(x.ring, x.order());
    y.c[0] = inv0;
    for (std::int64_t n = 1; n <= x.order(); ++n) {
        auto acc = x.ring.zero();
        for (std::int64_t k : support) {
            if (k > n) break;
            acc = x.ring.add(acc, x.ring.mul(x.c[k], y.c[n - k]));
        }
        y.c[n] = x.ring.neg(x.ring.mul(inv0, acc));
    }
    return y;
}

/// x/d without forming invert(d) densely: d0*y_n = x_n - sum_{k>=1} d_k y_{n-k}.
/// Cost O(N * nnz(d)); d must have a unit constant term.
template <class Ring>
series<Ring> divide(const series<Ring>& x, const series<Ring>& d) {
    detail::require_compatible(x, d);
    if (!d.ring.is_unit(d.c[0]))
        throw std::domain_error("divide: divisor constant term is not a unit");
    const auto inv0 = d.ring.inv(d.c[0]);
    const std::int64_t N = std::min(x.order(), d.order());
    std::vector<std::int64_t> support;
    for (std::int64_t k = 1; k <= N; ++k)
        if (!d.ring.is_zero(d.c[k])) support.push_back(k);
    series<Ring> y(x.ring, N);
    for (std::int64_t n = 0; n <= N; ++n) {
        auto acc = x.c[n];
        for (std::int64_t k : support) {
            if (k > n) break;
            acc = x.ring.sub(acc, x.ring.mul(d.c[k], y.c[n - k]));
        }
        y.c[n] = x.ring.mul(inv0, acc);
    }
    return y;
}

/// Coefficients along the arithmetic progression m*n + r:
/// extract(x, m, r)[n] = x[m*n + r].
template <class Ring>
series<Ring> extract(const series<Ring>& x, std::int64_t m, std::int64_t r) {
    if (m < 1) throw std::invalid_argument("extract: step must be >= 1");
    if (r < 0 || r >= m) throw std::invalid_argument("extract: residue must satisfy 0 <= r < m");
    if (r > x.order())
        throw std::invalid_argument("extract: residue exceeds truncation order");
    series<Ring> y(x.ring, (x.order() - r) / m);
    for (std::int64_t n = 0; n <= y.order(); ++n) y.c[n] = x.c[m * n + r];
    return y;
}

/// Substitute q -> q^m: result[m*n] = x[n], other coefficients zero.
/// Result order is m*order(x).
template <class Ring>
series<Ring> scale_q(const series<Ring>& x, std::int64_t m) {
    if (m < 1) throw std::invalid_argument("scale_q: scale must be >= 1");
    series<Ring> y(x.ring, m * x.order());
    for (std::int64_t n = 0; n <= x.order(); ++n) y.c[m * n] = x.c[n];
    return y;
}

/// Truncate (or zero-extend is forbidden: new order must be <= current).
template <class Ring>
series<Ring> truncate(const series<Ring>& x, std::int64_t order) {
    if (order > x.order())
        throw std::invalid_argument("truncate: cannot extend truncation order");
    series<Ring> y(x.ring, order);
    for (std::int64_t n = 0; n <= order; ++n) y.c[n] = x.c[n];
    return y;
}

/// Exact series to residues mod M.
inline mseries reduce_mod(const zseries& x, std::uint64_t modulus) {
    mod_ring ring(modulus);
    mseries y(ring, x.order());
    for (std::int64_t n = 0; n <= x.order(); ++n) y.c[n] = ring.reduce(x.c[n]);
    return y;
}

/// Equality of the overlapping prefix up to `order` (-1 = the shorter order).
template <class Ring>
bool equal_to_order(const series<Ring>& x, const series<Ring>& y, std::int64_t order = -1) {
    detail::require_compatible(x, y);
    if (order < 0) order = std::min(x.order(), y.order());
    if (order > x.order() || order > y.order())
        throw std::invalid_argument("equal_to_order: order exceeds a truncation order");
    for (std::int64_t n = 0; n <= order; ++n)
        if (x.c[n] != y.c[n]) return false;
    return true;
}

} // namespace etaq
