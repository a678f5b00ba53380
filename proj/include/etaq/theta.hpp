#pragma once

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "etaq/eta.hpp"
#include "etaq/series.hpp"

namespace etaq {

inline bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// f(-q^alpha, -q^beta): both theta arguments are negative monomials, the
/// only shape the series engine needs.
struct theta_spec {
    std::int64_t alpha;
    std::int64_t beta;
};

/// Sum over n in Z of (-1)^n q^{alpha*n(n+1)/2 + beta*n(n-1)/2}, truncated.
template <class Ring>
series<Ring> theta_f(Ring ring, theta_spec spec, std::int64_t order) {
    if (spec.alpha < 1 || spec.beta < 1)
        throw std::invalid_argument("theta_f: exponents must be >= 1");
    series<Ring> s(ring, order);
    const auto tri = [](std::int64_t m) { return m * (m + 1) / 2; };
    for (std::int64_t n = 0;; ++n) {
        const std::int64_t e = spec.alpha * tri(n) + spec.beta * tri(n - 1);
        if (e > order) break;
        s.c[e] = ring.add(s.c[e], ring.reduce(n % 2 == 0 ? 1 : -1));
    }
    for (std::int64_t n = -1;; --n) {
        const std::int64_t e = spec.alpha * tri(n) + spec.beta * tri(n - 1);
        if (e > order) break;
        s.c[e] = ring.add(s.c[e], ring.reduce(n % 2 == 0 ? 1 : -1));
    }
    return s;
}

inline zseries theta_f(theta_spec spec, std::int64_t order) {
    return theta_f(exact_ring{}, spec, order);
}

/// phi(q) = 1 + 2 sum q^{n^2}.
inline zseries phi_series(std::int64_t order) {
    zseries s(order);
    s.c[0] = 1;
    for (std::int64_t n = 1; n * n <= order; ++n) s.c[n * n] = 2;
    return s;
}

/// psi(q) = sum_{n>=0} q^{n(n+1)/2}.
inline zseries psi_series(std::int64_t order) {
    zseries s(order);
    for (std::int64_t n = 0; n * (n + 1) / 2 <= order; ++n) s.c[n * (n + 1) / 2] = 1;
    return s;
}

/// One branch of a p-dissection: a series supported on the residue class
/// lead_exp mod p, tagged with its summation index.
struct dissection_term {
    std::int64_t k;
    std::int64_t lead_exp;
    zseries part;
};

template <class TermRange>
zseries dissection_sum(const TermRange& terms, const zseries& special, std::int64_t order) {
    zseries acc(order);
    for (const auto& t : terms) acc = add(acc, t.part);
    return add(acc, special);
}

/// p-dissection of f_1 for prime p >= 5: generic theta terms for each
/// admissible k plus the distinguished q^{(p^2-1)/24} f_{p^2} term. Terms
/// are kept separate so the per-term residue-class claims can be checked.
struct f1_dissection {
    std::int64_t p;
    std::int64_t order;
    std::vector<dissection_term> terms;
    std::int64_t special_k;
    std::int64_t special_exp; // (p^2-1)/24
    zseries special;

    zseries sum() const { return dissection_sum(terms, special, order); }
};

inline f1_dissection p_dissect_f1(std::int64_t p, std::int64_t order) {
    if (p < 5 || !is_prime(p))
        throw std::invalid_argument("p_dissect_f1: p must be a prime >= 5");
    const std::int64_t special_k = (p % 6 == 1) ? (p - 1) / 6 : -(p + 1) / 6;
    f1_dissection d{p, order, {}, special_k, (p * p - 1) / 24, zseries(order)};
    for (std::int64_t k = -(p - 1) / 2; k <= (p - 1) / 2; ++k) {
        if (k == special_k) continue;
        const std::int64_t lead = (3 * k * k + k) / 2;
        const std::int64_t a = (3 * p * p + (6 * k + 1) * p) / 2;
        const std::int64_t b = (3 * p * p - (6 * k + 1) * p) / 2;
        zseries part = shift(theta_f({a, b}, order), lead);
        if (k % 2 != 0) part = negate(part);
        d.terms.push_back({k, lead, std::move(part)});
    }
    zseries special = shift(eta_series(p * p, order), d.special_exp);
    if (special_k % 2 != 0) special = negate(special);
    d.special = std::move(special);
    return d;
}

/// p-dissection of f_1^3 for odd prime p: for k != (p-1)/2 the term
/// (-1)^k q^{k(k+1)/2} sum_n (-1)^n (2pn+2k+1) q^{pn(pn+2k+1)/2}, plus the
/// distinguished p*(-1)^{(p-1)/2} q^{(p^2-1)/8} f_{p^2}^3 term.
struct f1_cubed_dissection {
    std::int64_t p;
    std::int64_t order;
    std::vector<dissection_term> terms;
    std::int64_t special_exp; // (p^2-1)/8
    zseries special;

    zseries sum() const { return dissection_sum(terms, special, order); }
};

inline f1_cubed_dissection p_dissect_f1_cubed(std::int64_t p, std::int64_t order) {
    if (p < 3 || !is_prime(p))
        throw std::invalid_argument("p_dissect_f1_cubed: p must be an odd prime");
    f1_cubed_dissection d{p, order, {}, (p * p - 1) / 8, zseries(order)};
    for (std::int64_t k = 0; k <= p - 1; ++k) {
        if (k == (p - 1) / 2) continue;
        const std::int64_t lead = k * (k + 1) / 2;
        zseries inner(order);
        for (std::int64_t n = 0;; ++n) {
            const std::int64_t e = p * n * (p * n + 2 * k + 1) / 2;
            if (e > order) break;
            const bigint coeff = bigint(2 * p * n + 2 * k + 1) * (n % 2 == 0 ? 1 : -1);
            inner.c[e] += coeff;
        }
        zseries part = shift(inner, lead);
        if (k % 2 != 0) part = negate(part);
        d.terms.push_back({k, lead, std::move(part)});
    }
    const zseries fp2 = eta_series(p * p, order);
    zseries special = shift(mul(mul(fp2, fp2), fp2), d.special_exp);
    special = mul_scalar(special, ((p - 1) / 2) % 2 != 0 ? -p : p);
    d.special = std::move(special);
    return d;
}

/// A catalog identity: both sides compile to exact series at any order at
/// or above min_order (orders below cannot see the coarsest eta scale in
/// the identity, so they are rejected instead of passing vacuously).
struct identity_record {
    std::string id;
    std::string description;
    std::int64_t min_order;
    std::function<zseries(std::int64_t)> lhs;
    std::function<zseries(std::int64_t)> rhs;
};

namespace detail {

inline std::function<zseries(std::int64_t)> eq_fn(eta_quotient q) {
    return [q = std::move(q)](std::int64_t n) { return compile(q, n); };
}

// extract the odd part of an eta quotient: coefficients of q^{2n+1}
inline std::function<zseries(std::int64_t)> odd_part_fn(eta_quotient q) {
    return [q = std::move(q)](std::int64_t n) {
        return extract(compile(q, 2 * n + 1), 2, 1);
    };
}

} // namespace detail

inline const std::vector<identity_record>& identity_catalog() {
    static const std::vector<identity_record> catalog = [] {
        using detail::eq_fn;
        using detail::odd_part_fn;
        std::vector<identity_record> v;

        v.push_back({"inv_f1_sq_2dissect",
                     "1/f1^2 = f8^5/(f2^5 f16^2) + 2q f4^2 f16^2/(f2^5 f8)", 64,
                     eq_fn({{1, -2}}), [](std::int64_t n) {
                         zseries even = compile({{8, 5}, {2, -5}, {16, -2}}, n);
                         zseries odd = compile({{4, 2}, {16, 2}, {2, -5}, {8, -1}}, n);
                         return add(even, shift(mul_scalar(odd, 2), 1));
                     }});

        v.push_back({"inv_f1_4th_2dissect",
                     "1/f1^4 = f4^14/(f2^14 f8^4) + 4q f4^2 f8^4/f2^10", 32,
                     eq_fn({{1, -4}}), [](std::int64_t n) {
                         zseries even = compile({{4, 14}, {2, -14}, {8, -4}}, n);
                         zseries odd = compile({{4, 2}, {8, 4}, {2, -10}}, n);
                         return add(even, shift(mul_scalar(odd, 4), 1));
                     }});

        v.push_back({"f3_over_f1_2dissect",
                     "f3/f1 = f4 f6 f16 f24^2/(f2^2 f8 f12 f48) + q f6 f8^2 f48/(f2^2 f16 f24)",
                     192, eq_fn({{3, 1}, {1, -1}}), [](std::int64_t n) {
                         zseries even = compile(
                             {{4, 1}, {6, 1}, {16, 1}, {24, 2}, {2, -2}, {8, -1}, {12, -1}, {48, -1}}, n);
                         zseries odd =
                             compile({{6, 1}, {8, 2}, {48, 1}, {2, -2}, {16, -1}, {24, -1}}, n);
                         return add(even, shift(odd, 1));
                     }});

        v.push_back({"f5_over_f1_2dissect",
                     "f5/f1 = f8 f20^2/(f2^2 f40) + q f4^3 f10 f40/(f2^3 f8 f20)", 160,
                     eq_fn({{5, 1}, {1, -1}}), [](std::int64_t n) {
                         zseries even = compile({{8, 1}, {20, 2}, {2, -2}, {40, -1}}, n);
                         zseries odd =
                             compile({{4, 3}, {10, 1}, {40, 1}, {2, -3}, {8, -1}, {20, -1}}, n);
                         return add(even, shift(odd, 1));
                     }});

        v.push_back({"f9_over_f1_2dissect",
                     "f9/f1 = f12^3 f18/(f2^2 f6 f36) + q f4^2 f6 f36/(f2^3 f12)", 144,
                     eq_fn({{9, 1}, {1, -1}}), [](std::int64_t n) {
                         zseries even = compile({{12, 3}, {18, 1}, {2, -2}, {6, -1}, {36, -1}}, n);
                         zseries odd = compile({{4, 2}, {6, 1}, {36, 1}, {2, -3}, {12, -1}}, n);
                         return add(even, shift(odd, 1));
                     }});

        v.push_back({"f3_over_f1_cubed_2dissect",
                     "f3/f1^3 = f4^6 f6^3/(f2^9 f12^2) + 3q f4^2 f6 f12^2/f2^7", 48,
                     eq_fn({{3, 1}, {1, -3}}), [](std::int64_t n) {
                         zseries even = compile({{4, 6}, {6, 3}, {2, -9}, {12, -2}}, n);
                         zseries odd = compile({{4, 2}, {6, 1}, {12, 2}, {2, -7}}, n);
                         return add(even, shift(mul_scalar(odd, 3), 1));
                     }});

        // largest internal scale is 112; the catalog caps the minimum at
        // 400 so the default exact order can still run this entry
        v.push_back({"inv_f1f7_2dissect",
                     "1/(f1 f7) = f16^2 f56^5/(f2^2 f8 f14^2 f28^2 f112^2) + q f4^2 f28^2/(f2^3 f14^3)"
                     " + q^6 f8^5 f112^2/(f2^2 f4^2 f14^2 f16^2 f56)",
                     400, eq_fn({{1, -1}, {7, -1}}), [](std::int64_t n) {
                         zseries t0 = compile({{16, 2}, {56, 5}, {2, -2}, {8, -1}, {14, -2}, {28, -2}, {112, -2}}, n);
                         zseries t1 = compile({{4, 2}, {28, 2}, {2, -3}, {14, -3}}, n);
                         zseries t6 = compile({{8, 5}, {112, 2}, {2, -2}, {4, -2}, {14, -2}, {16, -2}, {56, -1}}, n);
                         return add(add(t0, shift(t1, 1)), shift(t6, 6));
                     }});

        v.push_back({"p_3_5_odd",
                     "odd part of 1/(f3 f5) = q f2^2 f30^2/(f3^2 f5^2 f1 f15)", 120,
                     odd_part_fn({{3, -1}, {5, -1}}), [](std::int64_t n) {
                         zseries t = compile({{2, 2}, {30, 2}, {3, -2}, {5, -2}, {1, -1}, {15, -1}}, n);
                         return shift(t, 1);
                     }});

        // the f6^2 f10^2 quotient generates the even progression of
        // 1/(f1 f15), not the odd one (the odd part starts at 1, the
        // quotient at p(0)=1, p(2)=2, ...)
        v.push_back({"p_1_15_even",
                     "even part of 1/(f1 f15) = f6^2 f10^2/(f1^2 f3 f5 f15^2)", 120,
                     [](std::int64_t n) {
                         return extract(compile({{1, -1}, {15, -1}}, 2 * n), 2, 0);
                     },
                     eq_fn({{6, 2}, {10, 2}, {1, -2}, {3, -1}, {5, -1}, {15, -2}})});

        v.push_back({"p_1_3_5_15_odd",
                     "odd part of 1/(f1 f3 f5 f15) = f2 f6 f10 f30/(f1 f3 f5 f15)^2"
                     " + 2q (f2 f6 f10 f30)^2/(f1 f3 f5 f15)^3",
                     120, odd_part_fn({{1, -1}, {3, -1}, {5, -1}, {15, -1}}), [](std::int64_t n) {
                         zseries even = compile(
                             {{2, 1}, {6, 1}, {10, 1}, {30, 1}, {1, -2}, {3, -2}, {5, -2}, {15, -2}}, n);
                         zseries odd = compile(
                             {{2, 2}, {6, 2}, {10, 2}, {30, 2}, {1, -3}, {3, -3}, {5, -3}, {15, -3}}, n);
                         return add(even, shift(mul_scalar(odd, 2), 1));
                     }});

        v.push_back({"euler_5dissect",
                     "f1 = f25 (1/R - q - q^2 R), R = (q^5;q^25)(q^20;q^25)/((q^10;q^25)(q^15;q^25))",
                     120, [](std::int64_t n) { return eta_series(1, n); },
                     [](std::int64_t n) {
                         const zseries r = divide(
                             mul(pochhammer_series(5, 25, n), pochhammer_series(20, 25, n)),
                             mul(pochhammer_series(10, 25, n), pochhammer_series(15, 25, n)));
                         zseries paren = sub(invert(r), shift(one(n), 1));
                         paren = sub(paren, shift(r, 2));
                         return mul(eta_series(25, n), paren);
                     }});

        return v;
    }();
    return catalog;
}

inline const identity_record* find_identity(std::string_view id) {
    for (const auto& rec : identity_catalog())
        if (rec.id == id) return &rec;
    return nullptr;
}

struct identity_outcome {
    bool equal;
    std::int64_t order;
    std::int64_t first_mismatch; // -1 when equal
};

/// Compile both sides at `order` and compare exactly. Orders below the
/// entry's minimum are rejected.
inline identity_outcome verify_identity(const identity_record& rec, std::int64_t order) {
    if (order < rec.min_order)
        throw std::invalid_argument("verify_identity: order " + std::to_string(order) +
                                    " below minimum " + std::to_string(rec.min_order) +
                                    " for " + rec.id);
    const zseries lhs = rec.lhs(order);
    const zseries rhs = rec.rhs(order);
    const std::int64_t n = std::min(lhs.order(), rhs.order());
    for (std::int64_t i = 0; i <= n; ++i)
        if (lhs.c[i] != rhs.c[i]) return {false, order, i};
    return {true, order, -1};
}

inline identity_outcome verify_identity(std::string_view id, std::int64_t order) {
    const identity_record* rec = find_identity(id);
    if (!rec) throw std::invalid_argument("verify_identity: unknown identity id: " + std::string(id));
    return verify_identity(*rec, order);
}

} // namespace etaq
