#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "etaq/eta.hpp"
#include "etaq/newman.hpp"
#include "etaq/partitions.hpp"
#include "etaq/report.hpp"
#include "etaq/series.hpp"

namespace etaq {

enum class family_kind { vanishing, equivalence, series_congruence };

inline const char* to_string(family_kind k) {
    switch (k) {
        case family_kind::vanishing: return "vanishing";
        case family_kind::equivalence: return "equivalence";
        default: return "series_congruence";
    }
}

/// Branch gates: some families apply only at primes whose recurrence
/// constant K falls in a stated residue class.
enum class omega_gate { none, b_even_mod2, b_odd_mod2, a_zero_mod8, a_odd_mod8 };

/// Exact rational index map (n, p, j) -> coefficient index. Evaluated in
/// rational arithmetic so that non-integral indices surface as findings
/// instead of silent truncation.
using index_fn = std::function<bigrat(std::int64_t n, std::int64_t p, std::int64_t j)>;

/// One theorem clause: target generating function, modulus, index
/// polynomial(s), hypothesis predicates, and default sweep grid.
struct congruence_family {
    std::string id;
    family_kind kind;
    std::string target;           // counting-function label, e.g. "b_4_9"
    eta_quotient target_quotient; // the series the sweep actually reads
    std::uint64_t modulus;

    index_fn index1;
    index_fn index2;              // equivalence families
    std::uint64_t multiplier = 1; // c[index1] = multiplier * c[index2] (mod M)

    // series-congruence families compare a progression of the target with
    // scalar * (rhs quotient)
    std::int64_t prog_step = 0;
    std::int64_t prog_offset = 0;
    std::uint64_t rhs_scalar = 1;
    eta_quotient rhs_quotient;
    std::int64_t default_terms = 0;

    std::vector<std::int64_t> primes;                        // empty = primeless family
    std::function<std::vector<std::int64_t>(std::int64_t)> j_for_prime;
    std::vector<std::int64_t> j_values{0};
    std::int64_t default_n_max = 0;
    std::string var_name = "j";

    bool p_not_div_n = false;
    bool p_not_div_24n_plus_5 = false;
    bool p_not_div_8n_plus_3 = false;
    bool p_1_mod_8 = false;
    omega_gate gate = omega_gate::none;

    std::vector<std::int64_t> js(std::int64_t p) const {
        return j_for_prime ? j_for_prime(p) : j_values;
    }
};

/// Sweep overrides; a negative/-empty field keeps the family default.
struct sweep_options {
    std::int64_t n_max = -1;
    std::vector<std::int64_t> primes;
    std::int64_t j_max = -1;
    std::int64_t order = -1;
    std::int64_t terms = -1;
};

inline constexpr std::int64_t default_mod_order = 200000;

/// Hook for the per-process series cache: (quotient, order, modulus) ->
/// compiled series. Implementations must return a reference that stays
/// valid for the sweep's duration.
using mod_series_provider =
    std::function<const mseries&(const eta_quotient&, std::int64_t, std::uint64_t)>;

namespace detail {

inline std::string rat_str(const bigrat& v) {
    const bigint num = boost::multiprecision::numerator(v);
    const bigint den = boost::multiprecision::denominator(v);
    if (den == 1) return num.str();
    // halves and quarters render as exact decimals (331.5), the rest as
    // reduced fractions
    if (den == 2 || den == 4) {
        bigint cents = num * (100 / den);
        const bool negative = cents < 0;
        if (negative) cents = -cents;
        std::string f = bigint(cents % 100).str();
        if (f.size() < 2) f.insert(f.begin(), '0');
        while (f.back() == '0') f.pop_back();
        return (negative ? "-" : "") + bigint(cents / 100).str() + "." + f;
    }
    return num.str() + "/" + den.str();
}

inline bigrat pow_rat(std::int64_t base, std::int64_t exp) {
    bigint v = 1;
    for (std::int64_t i = 0; i < exp; ++i) v *= base;
    return bigrat(v);
}

inline std::string point_str(const congruence_family& fam, std::int64_t p, std::int64_t j,
                             std::int64_t n, bool with_n = true) {
    std::ostringstream os;
    bool first = true;
    if (!fam.primes.empty()) {
        os << "p=" << p;
        first = false;
    }
    if (fam.j_for_prime || fam.j_values.size() > 1 || fam.var_name != "j") {
        if (!first) os << " ";
        os << fam.var_name << "=" << j;
        first = false;
    }
    if (with_n) {
        if (!first) os << " ";
        os << "n=" << n;
    }
    return os.str();
}

} // namespace detail

/// Evaluate every index expression of the family over (primes x j x a few
/// n probes) in exact rational arithmetic; report each non-integral value.
/// Linear-in-n index maps make two probes per (p, j) sufficient, and every
/// sweep re-asserts integrality pointwise anyway.
inline verification_report integrality_audit(const congruence_family& fam,
                                             const std::vector<std::int64_t>& primes,
                                             std::int64_t j_max = -1) {
    verification_report rep;
    rep.id = fam.id;
    rep.kind = "integrality_audit";
    if (fam.kind == family_kind::series_congruence) {
        rep.notes = "progression indices are integral by construction";
        rep.status = verify_status::vacuous;
        return rep;
    }
    const std::vector<std::int64_t> grid_p = fam.primes.empty() ? std::vector<std::int64_t>{0}
                                             : primes.empty()  ? fam.primes
                                                               : primes;
    for (std::int64_t p : grid_p) {
        for (std::int64_t j : fam.js(p)) {
            if (j_max >= 0 && j > j_max) continue;
            for (std::int64_t n : {0, 1}) {
                for (const index_fn* fn : {&fam.index1, &fam.index2}) {
                    if (!*fn) continue;
                    const bigrat v = (*fn)(n, p, j);
                    ++rep.checks_run;
                    if (boost::multiprecision::denominator(v) != 1)
                        rep.failures.push_back({detail::point_str(fam, p, j, n),
                                                detail::rat_str(v), "non-integer index"});
                }
            }
        }
    }
    rep.finalize();
    return rep;
}

namespace detail {

struct omega_table {
    std::map<std::int64_t, bigint> values; // prime -> exact K

    const bigint& get(const omega_spec& spec, std::int64_t p) {
        auto it = values.find(p);
        if (it == values.end()) it = values.emplace(p, omega_value(spec, p)).first;
        return it->second;
    }
};

/// Whether prime p is admitted by the family's branch hypotheses (omega
/// residue class, p = 1 mod 8). The decision and the evaluated omega value
/// are appended to the notes either way, so vacuous branches still report
/// the omega table.
inline bool prime_admitted(const congruence_family& fam, std::int64_t p, omega_table& table,
                           std::string& notes) {
    if (fam.gate == omega_gate::none && !fam.p_1_mod_8) return true;
    bool admit = true;
    std::ostringstream os;
    if (!notes.empty()) os << "; ";
    if (fam.gate != omega_gate::none) {
        const bool b_side =
            fam.gate == omega_gate::b_even_mod2 || fam.gate == omega_gate::b_odd_mod2;
        const omega_spec& spec = b_side ? omega_b : omega_a;
        const bigint& k = table.get(spec, p);
        const std::uint64_t m = b_side ? 2 : 8;
        const std::uint64_t residue = mod_ring(m).reduce(k);
        switch (fam.gate) {
            case omega_gate::b_even_mod2: admit = residue == 0; break;
            case omega_gate::b_odd_mod2: admit = residue != 0; break;
            case omega_gate::a_zero_mod8: admit = residue == 0; break;
            case omega_gate::a_odd_mod8: admit = residue % 2 == 1; break;
            default: break;
        }
        os << "omega_" << spec.label << "(" << p << ")=" << k << " [" << residue << " mod " << m
           << "]";
    } else {
        os << "p=" << p;
    }
    if (fam.p_1_mod_8 && p % 8 != 1) {
        admit = false;
        os << ", p != 1 (mod 8)";
    }
    os << " -> " << (admit ? "run" : "skip");
    notes += os.str();
    return admit;
}

} // namespace detail

/// Run one family sweep. The integrality audit runs first over the whole
/// grid; a family whose printed index map produces non-integers is
/// reported as failing that audit and its coefficients are never read.
inline verification_report run_family(const congruence_family& fam, const sweep_options& opt,
                                      const mod_series_provider& provider) {
    verification_report rep;
    rep.id = fam.id;
    rep.kind = to_string(fam.kind);
    const std::int64_t order = opt.order >= 0 ? opt.order : default_mod_order;
    const mod_ring ring(fam.modulus);

    if (fam.kind == family_kind::series_congruence) {
        const std::int64_t terms = opt.terms >= 0 ? opt.terms : fam.default_terms;
        const std::int64_t need = fam.prog_step * (terms - 1) + fam.prog_offset;
        if (need > order)
            throw std::invalid_argument(fam.id + ": series order " + std::to_string(order) +
                                        " is below the progression reach " + std::to_string(need));
        const mseries& lhs = provider(fam.target_quotient, order, fam.modulus);
        const mseries& rhs = provider(fam.rhs_quotient, terms - 1, fam.modulus);
        for (std::int64_t t = 0; t < terms; ++t) {
            const std::uint64_t got = lhs.c[fam.prog_step * t + fam.prog_offset];
            const std::uint64_t want = ring.mul(ring.reduce(static_cast<std::int64_t>(fam.rhs_scalar)), rhs.c[t]);
            ++rep.checks_run;
            if (got != want)
                rep.failures.push_back({"n=" + std::to_string(t),
                                        std::to_string(fam.prog_step * t + fam.prog_offset),
                                        std::to_string(got) + " != " + std::to_string(want)});
        }
        rep.finalize();
        return rep;
    }

    const std::vector<std::int64_t> grid_p =
        fam.primes.empty() ? std::vector<std::int64_t>{0}
                           : (opt.primes.empty() ? fam.primes : opt.primes);
    if (!fam.primes.empty())
        for (std::int64_t p : grid_p)
            if (!is_prime(p))
                throw std::invalid_argument(fam.id + ": grid value " + std::to_string(p) +
                                            " is not prime");
    const std::int64_t n_max = opt.n_max >= 0 ? opt.n_max : fam.default_n_max;

    // phase 1: exact-rational integrality audit over the grid; a family
    // whose printed index map is non-integral somewhere fails here and its
    // coefficients are never read (checks_run counts only congruence
    // checks, so an audit-failed family reports fail with zero checks)
    {
        verification_report audit =
            integrality_audit(fam, fam.primes.empty() ? std::vector<std::int64_t>{} : grid_p,
                              opt.j_max);
        if (!audit.failures.empty()) {
            rep.failures = std::move(audit.failures);
            rep.notes = "index map fails the integrality audit; coefficients not checked";
            rep.finalize();
            return rep;
        }
    }

    // phase 2: coefficient sweep
    detail::omega_table omegas;
    std::int64_t beyond_order = 0;
    const mseries& target = provider(fam.target_quotient, order, fam.modulus);
    for (std::int64_t p : grid_p) {
        if (!fam.primes.empty() && !detail::prime_admitted(fam, p, omegas, rep.notes)) {
            ++rep.skipped;
            continue;
        }
        for (std::int64_t j : fam.js(p)) {
            if (opt.j_max >= 0 && j > opt.j_max) continue;
            for (std::int64_t n = 0; n <= n_max; ++n) {
                if (fam.p_not_div_n && n % p == 0) {
                    ++rep.skipped;
                    continue;
                }
                if (fam.p_not_div_24n_plus_5 && (24 * n + 5) % p == 0) {
                    ++rep.skipped;
                    continue;
                }
                if (fam.p_not_div_8n_plus_3 && (8 * n + 3) % p == 0) {
                    ++rep.skipped;
                    continue;
                }
                const bigrat iv1 = fam.index1(n, p, j);
                // integrality was audited, but assert pointwise regardless
                if (boost::multiprecision::denominator(iv1) != 1) {
                    rep.failures.push_back({detail::point_str(fam, p, j, n),
                                            detail::rat_str(iv1), "non-integer index"});
                    continue;
                }
                const bigint i1 = boost::multiprecision::numerator(iv1);
                if (i1 < 0) {
                    rep.failures.push_back({detail::point_str(fam, p, j, n),
                                            detail::rat_str(iv1), "negative index"});
                    continue;
                }
                if (i1 > order) {
                    ++rep.skipped; // the grid is bounded by the series order
                    ++beyond_order;
                    continue;
                }
                const std::int64_t idx1 = i1.convert_to<std::int64_t>();
                if (fam.kind == family_kind::vanishing) {
                    ++rep.checks_run;
                    const std::uint64_t got = target.c[idx1];
                    if (got != 0)
                        rep.failures.push_back({detail::point_str(fam, p, j, n),
                                                std::to_string(idx1), std::to_string(got)});
                } else {
                    const bigrat iv2 = fam.index2(n, p, j);
                    if (boost::multiprecision::denominator(iv2) != 1) {
                        rep.failures.push_back({detail::point_str(fam, p, j, n),
                                                detail::rat_str(iv2), "non-integer index"});
                        continue;
                    }
                    const bigint i2 = boost::multiprecision::numerator(iv2);
                    if (i2 < 0 || i2 > order) {
                        ++rep.skipped;
                        ++beyond_order;
                        continue;
                    }
                    ++rep.checks_run;
                    const std::uint64_t lhs = target.c[idx1];
                    const std::uint64_t rhs =
                        ring.mul(ring.reduce(static_cast<std::int64_t>(fam.multiplier)),
                                 target.c[i2.convert_to<std::int64_t>()]);
                    if (lhs != rhs)
                        rep.failures.push_back(
                            {detail::point_str(fam, p, j, n),
                             std::to_string(idx1) + " vs " + i2.str(),
                             std::to_string(lhs) + " != " + std::to_string(rhs)});
                }
            }
        }
    }
    if (beyond_order > 0) {
        if (!rep.notes.empty()) rep.notes += "; ";
        rep.notes += std::to_string(beyond_order) + " grid points beyond series order " +
                     std::to_string(order);
    }
    rep.finalize();
    return rep;
}

namespace detail {

inline const congruence_family& require_kind(const congruence_family& fam, family_kind kind) {
    if (fam.kind != kind)
        throw std::invalid_argument(fam.id + " is a " + to_string(fam.kind) + " family, not " +
                                    to_string(kind));
    return fam;
}

} // namespace detail

/// Kind-checked entry points over the shared sweep driver.
inline verification_report sweep_vanishing(const congruence_family& fam, const sweep_options& opt,
                                           const mod_series_provider& provider) {
    return run_family(detail::require_kind(fam, family_kind::vanishing), opt, provider);
}

inline verification_report sweep_equivalence(const congruence_family& fam,
                                             const sweep_options& opt,
                                             const mod_series_provider& provider) {
    return run_family(detail::require_kind(fam, family_kind::equivalence), opt, provider);
}

inline verification_report sweep_series_congruence(const congruence_family& fam,
                                                   const sweep_options& opt,
                                                   const mod_series_provider& provider) {
    return run_family(detail::require_kind(fam, family_kind::series_congruence), opt, provider);
}

/// Plain uncached provider; fine for one-shot sweeps and tests.
inline mod_series_provider direct_provider() {
    return [](const eta_quotient& q, std::int64_t order, std::uint64_t modulus) -> const mseries& {
        static thread_local std::map<std::string, mseries> local;
        const std::string key = q.str() + "@" + std::to_string(order) + "%" + std::to_string(modulus);
        auto it = local.find(key);
        if (it == local.end()) it = local.emplace(key, compile_mod(q, order, modulus)).first;
        return it->second;
    };
}

inline verification_report run_family(const congruence_family& fam, const sweep_options& opt) {
    return run_family(fam, opt, direct_provider());
}

/// The registry: one entry per theorem clause, with stable ids.
inline const std::vector<congruence_family>& family_registry() {
    static const std::vector<congruence_family> registry = [] {
        const eta_quotient q_b38{{3, 1}, {8, 1}, {1, -1}, {24, -1}};
        const eta_quotient q_b47{{4, 1}, {7, 1}, {1, -1}, {28, -1}};
        const eta_quotient q_b49{{4, 1}, {9, 1}, {1, -1}, {36, -1}};
        // The b_3_5_8 clauses are stated and proved for this quotient; it
        // deviates from the inclusion-exclusion generating function of the
        // counting definition at q^120 and beyond (see the partitions
        // tests), and the clauses are false for the counting function, so
        // the registry pins the quotient the statements are about.
        const eta_quotient q_b358{{3, 1}, {5, 1}, {8, 1},
                                  {1, -1}, {15, -1}, {24, -1}, {40, -1}, {120, -1}};
        const eta_quotient q_b{{1, 2}, {3, 1}};
        const eta_quotient q_a{{1, 6}, {3, 1}};

        std::vector<congruence_family> v;
        auto add = [&v](congruence_family f) { v.push_back(std::move(f)); };

        // ---- b_3_8 mod 2 branch families ----
        {
            congruence_family f;
            f.id = "T1.1.i";
            f.kind = family_kind::vanishing;
            f.target = "b_3_8";
            f.target_quotient = q_b38;
            f.modulus = 2;
            f.index1 = [](std::int64_t n, std::int64_t p, std::int64_t j) {
                return bigrat(2) * detail::pow_rat(p, 4 * j + 3) * n +
                       (bigrat(5) * detail::pow_rat(p, 4 * j + 4) + 7) / 12;
            };
            f.primes = {5, 7, 11, 13};
            f.j_values = {0, 1};
            f.default_n_max = 4000; // wide enough that the series order is the binding cap
            f.p_not_div_n = true;
            f.gate = omega_gate::b_even_mod2;
            add(f);

            f.id = "T1.1.ii.a";
            f.index1 = [](std::int64_t n, std::int64_t p, std::int64_t j) {
                return bigrat(2) * detail::pow_rat(p, 6 * j + 2) * n +
                       (bigrat(5) * detail::pow_rat(p, 6 * j + 2) + 7) / 12;
            };
            f.p_not_div_n = false;
            f.p_not_div_24n_plus_5 = true;
            f.gate = omega_gate::b_odd_mod2;
            add(f);

            f.id = "T1.1.ii.b";
            f.index1 = [](std::int64_t n, std::int64_t p, std::int64_t j) {
                return bigrat(2) * detail::pow_rat(p, 6 * j + 5) * n +
                       (bigrat(5) * detail::pow_rat(p, 6 * j + 6) + 7) / 12;
            };
            f.p_not_div_24n_plus_5 = false;
            f.p_not_div_n = true;
            add(f);
        }

        // ---- b_4_7 mod 2 ----
        {
            congruence_family f;
            f.id = "T1.2.i";
            f.kind = family_kind::vanishing;
            f.target = "b_4_7";
            f.target_quotient = q_b47;
            f.modulus = 2;
            f.index1 = [](std::int64_t n, std::int64_t, std::int64_t j) {
                return bigrat(14 * (7 * n + j) + 13);
            };
            f.j_values = {1, 2, 3, 4, 5, 6};
            f.default_n_max = 500;
            add(f);

            congruence_family g;
            g.id = "T1.2.ii";
            g.kind = family_kind::equivalence;
            g.target = "b_4_7";
            g.target_quotient = q_b47;
            g.modulus = 2;
            g.index1 = [](std::int64_t n, std::int64_t p, std::int64_t) {
                return bigrat(98) * p * p * n + (bigrat(98) * p * p + 6) / 8;
            };
            g.index2 = [](std::int64_t n, std::int64_t, std::int64_t) {
                return bigrat(98 * n + 13);
            };
            g.primes = {3, 5, 7, 11, 13};
            g.default_n_max = 100;
            add(g);

            congruence_family h;
            h.id = "T1.2.iii-printed";
            h.kind = family_kind::vanishing;
            h.target = "b_4_7";
            h.target_quotient = q_b47;
            h.modulus = 2;
            h.index1 = [](std::int64_t n, std::int64_t p, std::int64_t j) {
                return bigrat(98) * p * p * n + (bigrat(49) * p * (p + 6 * j) + 3) / 4;
            };
            h.primes = {3, 5, 7, 11, 13};
            h.j_for_prime = [](std::int64_t p) {
                std::vector<std::int64_t> js;
                for (std::int64_t j = 1; j <= p - 1; ++j) js.push_back(j);
                return js;
            };
            h.default_n_max = 20;
            add(h);

            h.id = "T1.2.iii-corrected";
            h.index1 = [](std::int64_t n, std::int64_t p, std::int64_t j) {
                return bigrat(98) * p * p * n + (bigrat(49) * p * (p + 8 * j) + 3) / 4;
            };
            h.primes = {3, 5, 7};
            add(h);
        }

        // ---- b_4_9 fixed-progression clauses ----
        {
            congruence_family f;
            f.id = "T1.3.i";
            f.kind = family_kind::vanishing;
            f.target = "b_4_9";
            f.target_quotient = q_b49;
            f.modulus = 12;
            f.index1 = [](std::int64_t n, std::int64_t, std::int64_t) { return bigrat(8 * n + 7); };
            f.default_n_max = 100;
            add(f);

            f.id = "T1.3.ii";
            f.modulus = 8;
            f.index1 = [](std::int64_t n, std::int64_t, std::int64_t) { return bigrat(16 * n + 15); };
            add(f);

            congruence_family s;
            s.id = "T1.3.iii";
            s.kind = family_kind::series_congruence;
            s.target = "b_4_9";
            s.target_quotient = q_b49;
            s.modulus = 8;
            s.prog_step = 16;
            s.prog_offset = 7;
            s.rhs_scalar = 4;
            s.rhs_quotient = q_a;
            s.default_terms = 150;
            add(s);

            congruence_family e;
            e.id = "T1.3.iv";
            e.kind = family_kind::equivalence;
            e.target = "b_4_9";
            e.target_quotient = q_b49;
            e.modulus = 9;
            e.multiplier = 5;
            e.index1 = [](std::int64_t n, std::int64_t, std::int64_t) { return bigrat(32 * n + 29); };
            e.index2 = [](std::int64_t n, std::int64_t, std::int64_t) { return bigrat(16 * n + 15); };
            e.default_n_max = 100;
            add(e);
        }

        // ---- b_4_9 mod 8 branch families ----
        {
            congruence_family f;
            f.id = "T1.4.i";
            f.kind = family_kind::vanishing;
            f.target = "b_4_9";
            f.target_quotient = q_b49;
            f.modulus = 8;
            f.index1 = [](std::int64_t n, std::int64_t p, std::int64_t j) {
                return bigrat(16) * detail::pow_rat(p, 4 * j + 3) * n +
                       bigrat(6) * detail::pow_rat(p, 4 * j + 4) + 1;
            };
            f.primes = {5, 7, 11, 13};
            f.j_values = {0, 1};
            f.var_name = "k";
            f.default_n_max = 4000; // wide enough that the series order is the binding cap
            f.p_not_div_n = true;
            f.gate = omega_gate::a_zero_mod8;
            add(f);

            f.id = "T1.4.ii.a";
            f.index1 = [](std::int64_t n, std::int64_t p, std::int64_t j) {
                return bigrat(16) * detail::pow_rat(p, 6 * j + 2) * n +
                       bigrat(6) * detail::pow_rat(p, 6 * j + 2) + 1;
            };
            f.p_not_div_n = false;
            f.p_not_div_8n_plus_3 = true;
            f.p_1_mod_8 = true;
            f.gate = omega_gate::a_odd_mod8;
            add(f);

            f.id = "T1.4.ii.b";
            f.index1 = [](std::int64_t n, std::int64_t p, std::int64_t j) {
                return bigrat(16) * detail::pow_rat(p, 6 * j + 5) * n +
                       bigrat(6) * detail::pow_rat(p, 6 * j + 6) + 1;
            };
            f.p_not_div_8n_plus_3 = false;
            f.p_not_div_n = true;
            add(f);
        }

        // ---- b_3_5_8 mod 2 ----
        {
            congruence_family f;
            f.id = "T1.5.i";
            f.kind = family_kind::vanishing;
            f.target = "b_3_5_8";
            f.target_quotient = q_b358;
            f.modulus = 2;
            f.index1 = [](std::int64_t n, std::int64_t, std::int64_t j) {
                return bigrat(16 * (5 * n + j) + 3);
            };
            f.j_values = {2, 4};
            f.default_n_max = 100;
            add(f);

            f.id = "T1.5.ii";
            f.index1 = [](std::int64_t n, std::int64_t, std::int64_t j) {
                return bigrat(80 * (5 * n + j) + 51);
            };
            add(f);

            f.id = "T1.5.iii";
            f.index1 = [](std::int64_t n, std::int64_t, std::int64_t j) {
                return bigrat(400 * (5 * n + j) + 291);
            };
            f.j_values = {1, 3};
            f.default_n_max = 20;
            add(f);

            congruence_family e;
            e.id = "T1.5.iv";
            e.kind = family_kind::equivalence;
            e.target = "b_3_5_8";
            e.target_quotient = q_b358;
            e.modulus = 2;
            e.index1 = [](std::int64_t n, std::int64_t, std::int64_t) {
                return bigrat(2000 * n + 1091);
            };
            e.index2 = [](std::int64_t n, std::int64_t, std::int64_t) { return bigrat(80 * n + 51); };
            e.default_n_max = 40;
            add(e);

            e.id = "T1.6";
            e.index1 = [](std::int64_t n, std::int64_t, std::int64_t j) {
                const bigrat scale = detail::pow_rat(5, 2 * j + 1);
                return bigrat(16) * scale * n + (bigrat(26) * scale + 23) / 3;
            };
            e.j_values = {0, 1};
            e.var_name = "k";
            e.default_n_max = 20;
            add(e);
        }

        // ---- remark family and series congruences ----
        {
            congruence_family f;
            f.id = "R1";
            f.kind = family_kind::vanishing;
            f.target = "b_3_8";
            f.target_quotient = q_b38;
            f.modulus = 2;
            f.index1 = [](std::int64_t n, std::int64_t, std::int64_t j) {
                return bigrat(686 * n + 98 * j + 21);
            };
            f.j_values = {0, 1, 2, 4, 5, 6};
            f.var_name = "r";
            f.default_n_max = 200;
            add(f);

            congruence_family s;
            s.id = "S1";
            s.kind = family_kind::series_congruence;
            s.target = "b_3_8";
            s.target_quotient = q_b38;
            s.modulus = 2;
            s.prog_step = 2;
            s.prog_offset = 1;
            s.rhs_scalar = 1;
            s.rhs_quotient = q_b;
            s.default_terms = 150;
            add(s);

            s.id = "S2";
            s.target = "b_4_9";
            s.target_quotient = q_b49;
            s.modulus = 8;
            s.prog_step = 16;
            s.prog_offset = 7;
            s.rhs_scalar = 4;
            s.rhs_quotient = q_a;
            add(s);
        }

        return v;
    }();
    return registry;
}

inline const congruence_family* find_family(std::string_view id) {
    for (const auto& fam : family_registry())
        if (fam.id == id) return &fam;
    return nullptr;
}

} // namespace etaq
