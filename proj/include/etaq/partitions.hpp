#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "etaq/eta.hpp"
#include "etaq/series.hpp"

namespace etaq {

/// Partitions whose parts are divisible by no element of `forbidden`.
/// Empty set means unrestricted partitions.
struct regularity_spec {
    std::vector<std::int64_t> forbidden;

    regularity_spec() = default;
    regularity_spec(std::initializer_list<std::int64_t> init) : forbidden(init) { normalize(); }
    explicit regularity_spec(std::vector<std::int64_t> f) : forbidden(std::move(f)) { normalize(); }

    void normalize() {
        std::sort(forbidden.begin(), forbidden.end());
        forbidden.erase(std::unique(forbidden.begin(), forbidden.end()), forbidden.end());
        for (std::int64_t v : forbidden)
            if (v < 2) throw std::invalid_argument("regularity_spec: moduli must be >= 2");
    }

    bool pairwise_coprime() const {
        for (std::size_t i = 0; i < forbidden.size(); ++i)
            for (std::size_t j = i + 1; j < forbidden.size(); ++j)
                if (std::gcd(forbidden[i], forbidden[j]) != 1) return false;
        return true;
    }

    bool allows_part(std::int64_t part) const {
        for (std::int64_t v : forbidden)
            if (part % v == 0) return false;
        return true;
    }
};

/// Bounded-largest-part DP table of regular partition counts for all
/// n <= n_max. Deliberately independent of the series engine.
inline std::vector<bigint> count_regular_upto(std::int64_t n_max, const regularity_spec& spec) {
    if (n_max < 0) throw std::invalid_argument("count_regular_upto: n must be >= 0");
    std::vector<bigint> ways(static_cast<std::size_t>(n_max) + 1, 0);
    ways[0] = 1;
    for (std::int64_t part = 1; part <= n_max; ++part) {
        if (!spec.allows_part(part)) continue;
        for (std::int64_t v = part; v <= n_max; ++v)
            ways[v] += ways[v - part];
    }
    return ways;
}

inline bigint count_regular(std::int64_t n, const regularity_spec& spec) {
    return count_regular_upto(n, spec).back();
}

/// Generalized partitions: parts of scale c come in `multiplicity`
/// distinguishable colors; generating function 1/prod f_c^{s_c}.
struct colored_spec {
    std::map<std::int64_t, int> parts; // scale -> multiplicity >= 1

    colored_spec() = default;
    colored_spec(std::initializer_list<std::pair<const std::int64_t, int>> init) : parts(init) {
        for (const auto& [scale, s] : parts) {
            if (scale < 1) throw std::invalid_argument("colored_spec: scales must be >= 1");
            if (s < 1) throw std::invalid_argument("colored_spec: multiplicities must be >= 1");
        }
    }
};

/// DP oracle for colored counts: each color copy of scale c contributes an
/// unbounded supply of parts c, 2c, 3c, ...
inline std::vector<bigint> count_colored_upto(std::int64_t n_max, const colored_spec& spec) {
    if (n_max < 0) throw std::invalid_argument("count_colored_upto: n must be >= 0");
    std::vector<bigint> ways(static_cast<std::size_t>(n_max) + 1, 0);
    ways[0] = 1;
    for (const auto& [scale, multiplicity] : spec.parts)
        for (int copy = 0; copy < multiplicity; ++copy)
            for (std::int64_t part = scale; part <= n_max; part += scale)
                for (std::int64_t v = part; v <= n_max; ++v)
                    ways[v] += ways[v - part];
    return ways;
}

inline bigint count_colored(std::int64_t n, const colored_spec& spec) {
    return count_colored_upto(n, spec).back();
}

/// Eta quotient generating the regular-partition counts, by inclusion-
/// exclusion over subsets of the forbidden moduli: each subset T
/// contributes f_{prod T} to the numerator when |T| is odd and to the
/// denominator when |T| is even (the empty subset giving 1/f_1).
/// For {l,k} this is f_l f_k / (f_1 f_{lk}).
inline eta_quotient regular_quotient(const regularity_spec& spec) {
    eta_quotient q;
    const std::size_t n = spec.forbidden.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        std::int64_t prod = 1;
        int bits = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::size_t{1} << i)) {
                prod *= spec.forbidden[i];
                ++bits;
            }
        q.mul(prod, bits % 2 == 0 ? -1 : +1);
    }
    return q;
}

template <class Ring>
series<Ring> gf_regular(Ring ring, const regularity_spec& spec, std::int64_t order) {
    return compile(ring, regular_quotient(spec), order);
}

inline zseries gf_regular(const regularity_spec& spec, std::int64_t order) {
    return gf_regular(exact_ring{}, spec, order);
}

/// 1/prod f_c^{s_c} as an eta quotient.
inline eta_quotient colored_quotient(const colored_spec& spec) {
    eta_quotient q;
    for (const auto& [scale, s] : spec.parts) q.mul(scale, -s);
    return q;
}

} // namespace etaq
