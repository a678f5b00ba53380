#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "etaq/congruences.hpp"
#include "etaq/eta.hpp"
#include "etaq/newman.hpp"
#include "etaq/partitions.hpp"
#include "etaq/report.hpp"
#include "etaq/theta.hpp"

namespace etaq {

/// Append-only per-process cache of compiled modular series, keyed by
/// (quotient, order, modulus). Entries are published once complete and
/// never mutated, so handing out references is safe.
class series_cache {
public:
    const mseries& get(const eta_quotient& q, std::int64_t order, std::uint64_t modulus) {
        const std::string key =
            q.str() + "@" + std::to_string(order) + "%" + std::to_string(modulus);
        {
            std::lock_guard<std::mutex> lock(mutex_);
            auto it = cache_.find(key);
            if (it != cache_.end()) return *it->second;
        }
        auto built = std::make_unique<mseries>(compile_mod(q, order, modulus));
        std::lock_guard<std::mutex> lock(mutex_);
        auto [it, inserted] = cache_.emplace(key, std::move(built));
        return *it->second;
    }

    mod_series_provider provider() {
        return [this](const eta_quotient& q, std::int64_t order,
                      std::uint64_t modulus) -> const mseries& { return get(q, order, modulus); };
    }

private:
    std::mutex mutex_;
    std::map<std::string, std::unique_ptr<mseries>> cache_;
};

struct suite_options {
    std::int64_t identity_order = 400;
    std::int64_t dissect_f1_order = 200;
    std::int64_t dissect_f1_cubed_order = 300;
    std::int64_t oracle_regular_n = 200;
    std::int64_t oracle_colored_n = 150;
    std::int64_t newman_order = 3000;
    sweep_options sweep; // applied to every family
};

namespace detail {

class stopwatch {
public:
    stopwatch() : start_(std::chrono::steady_clock::now()) {}
    std::int64_t ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

} // namespace detail

// ---------------------------------------------------------------------
// entry runners; each produces one verification_report
// ---------------------------------------------------------------------

inline verification_report run_identity_entry(const identity_record& rec, std::int64_t order) {
    detail::stopwatch timer;
    verification_report rep;
    rep.id = rec.id;
    rep.kind = "identity";
    const identity_outcome out = verify_identity(rec, order);
    rep.checks_run = out.order + 1;
    if (!out.equal)
        rep.failures.push_back({"order=" + std::to_string(out.order),
                                std::to_string(out.first_mismatch), "lhs != rhs"});
    rep.notes = rec.description;
    rep.finalize();
    rep.wall_ms = timer.ms();
    return rep;
}

/// f1 dissection: terms must sum to f1 exactly, each term must be
/// supported on its residue class mod p, and no generic class may collide
/// with the distinguished class (p^2-1)/24 mod p.
inline verification_report run_f1_dissection_entry(std::int64_t p, std::int64_t order) {
    detail::stopwatch timer;
    verification_report rep;
    rep.id = "dissect:f1:" + std::to_string(p);
    rep.kind = "dissection";
    const f1_dissection d = p_dissect_f1(p, order);
    const zseries expect = eta_series(1, order);
    const zseries sum = d.sum();
    for (std::int64_t n = 0; n <= order; ++n) {
        ++rep.checks_run;
        if (sum.c[n] != expect.c[n]) {
            rep.failures.push_back({"p=" + std::to_string(p), std::to_string(n),
                                    sum.c[n].str() + " != " + expect.c[n].str()});
            break;
        }
    }
    const std::int64_t special_class = d.special_exp % p;
    for (const auto& term : d.terms) {
        ++rep.checks_run;
        if (term.lead_exp % p == special_class)
            rep.failures.push_back({"p=" + std::to_string(p) + " k=" + std::to_string(term.k),
                                    std::to_string(term.lead_exp),
                                    "residue class collides with distinguished term"});
        for (std::int64_t n = 0; n <= order; ++n)
            if (term.part.c[n] != 0 && n % p != term.lead_exp % p)
                rep.failures.push_back({"p=" + std::to_string(p) + " k=" + std::to_string(term.k),
                                        std::to_string(n), "support off residue class"});
    }
    rep.finalize();
    rep.wall_ms = timer.ms();
    return rep;
}

inline verification_report run_f1_cubed_dissection_entry(std::int64_t p, std::int64_t order) {
    detail::stopwatch timer;
    verification_report rep;
    rep.id = "dissect:f1cubed:" + std::to_string(p);
    rep.kind = "dissection";
    const f1_cubed_dissection d = p_dissect_f1_cubed(p, order);
    const zseries f1 = eta_series(1, order);
    const zseries expect = mul(mul(f1, f1), f1);
    const zseries sum = d.sum();
    for (std::int64_t n = 0; n <= order; ++n) {
        ++rep.checks_run;
        if (sum.c[n] != expect.c[n]) {
            rep.failures.push_back({"p=" + std::to_string(p), std::to_string(n),
                                    sum.c[n].str() + " != " + expect.c[n].str()});
            break;
        }
    }
    const std::int64_t special_class = d.special_exp % p;
    for (const auto& term : d.terms) {
        ++rep.checks_run;
        if (term.lead_exp % p == special_class)
            rep.failures.push_back({"p=" + std::to_string(p) + " k=" + std::to_string(term.k),
                                    std::to_string(term.lead_exp),
                                    "residue class collides with distinguished term"});
        for (std::int64_t n = 0; n <= order; ++n)
            if (term.part.c[n] != 0 && n % p != term.lead_exp % p)
                rep.failures.push_back({"p=" + std::to_string(p) + " k=" + std::to_string(term.k),
                                        std::to_string(n), "support off residue class"});
    }
    rep.finalize();
    rep.wall_ms = timer.ms();
    return rep;
}

/// Regular-partition oracle: eta-quotient coefficients against the
/// series-free DP count, exact integers, zero tolerance.
inline verification_report run_regular_oracle_entry(const std::string& label,
                                                    const regularity_spec& spec,
                                                    std::int64_t n_max) {
    detail::stopwatch timer;
    verification_report rep;
    rep.id = "oracle:" + label;
    rep.kind = "oracle";
    const std::vector<bigint> counted = count_regular_upto(n_max, spec);
    const zseries gf = gf_regular(spec, n_max);
    for (std::int64_t n = 0; n <= n_max; ++n) {
        ++rep.checks_run;
        if (gf.c[n] != counted[n])
            rep.failures.push_back({"n=" + std::to_string(n), std::to_string(n),
                                    gf.c[n].str() + " != " + counted[n].str()});
    }
    rep.finalize();
    rep.wall_ms = timer.ms();
    return rep;
}

inline verification_report run_colored_oracle_entry(const std::string& label,
                                                    const colored_spec& spec,
                                                    std::int64_t n_max) {
    detail::stopwatch timer;
    verification_report rep;
    rep.id = "oracle:" + label;
    rep.kind = "oracle";
    const std::vector<bigint> counted = count_colored_upto(n_max, spec);
    const zseries gf = compile(colored_quotient(spec), n_max);
    for (std::int64_t n = 0; n <= n_max; ++n) {
        ++rep.checks_run;
        if (gf.c[n] != counted[n])
            rep.failures.push_back({"n=" + std::to_string(n), std::to_string(n),
                                    gf.c[n].str() + " != " + counted[n].str()});
    }
    rep.finalize();
    rep.wall_ms = timer.ms();
    return rep;
}

inline verification_report run_newman_entry(std::int64_t r, std::int64_t s, std::int64_t q,
                                            std::int64_t p, std::int64_t order) {
    detail::stopwatch timer;
    verification_report rep;
    rep.id = "newman:" + std::to_string(r) + "," + std::to_string(s) + "," + std::to_string(q) +
             "," + std::to_string(p);
    rep.kind = "newman";
    const newman_params np = make_newman_params(r, s, q, p);
    const zseries coeffs = newman_coefficient_series(r, s, q, order);
    const std::int64_t n_max = (order - np.delta) / (p * p);
    const recurrence_check chk = verify_recurrence(coeffs, np, n_max);
    rep.checks_run = chk.checks_run;
    if (!chk.ok())
        rep.failures.push_back({"n=" + std::to_string(chk.first_bad_n),
                                std::to_string(chk.first_bad_n * p * p + np.delta),
                                "residual " + chk.first_residual.str()});
    rep.notes = "delta=" + std::to_string(np.delta) + " K=" + chk.constant.str();
    rep.finalize();
    rep.wall_ms = timer.ms();
    return rep;
}

inline verification_report run_family_entry(const congruence_family& fam,
                                            const sweep_options& opt,
                                            const mod_series_provider& provider) {
    detail::stopwatch timer;
    verification_report rep = run_family(fam, opt, provider);
    rep.wall_ms = timer.ms();
    return rep;
}

// ---------------------------------------------------------------------
// suite enumeration
// ---------------------------------------------------------------------

inline const std::vector<std::int64_t>& f1_dissection_primes() {
    static const std::vector<std::int64_t> v{5, 7, 11, 13};
    return v;
}
inline const std::vector<std::int64_t>& f1_cubed_dissection_primes() {
    static const std::vector<std::int64_t> v{3, 5, 7, 11};
    return v;
}

struct oracle_entry {
    std::string label;
    bool colored;
    regularity_spec regular;
    colored_spec colors;
};

inline const std::vector<oracle_entry>& oracle_entries() {
    static const std::vector<oracle_entry> v = [] {
        std::vector<oracle_entry> e;
        e.push_back({"b_3_8", false, regularity_spec{3, 8}, {}});
        e.push_back({"b_4_7", false, regularity_spec{4, 7}, {}});
        e.push_back({"b_4_9", false, regularity_spec{4, 9}, {}});
        e.push_back({"b_3_5_8", false, regularity_spec{3, 5, 8}, {}});
        e.push_back({"p_3_5", true, {}, colored_spec{{3, 1}, {5, 1}}});
        e.push_back({"p_1_15", true, {}, colored_spec{{1, 1}, {15, 1}}});
        e.push_back({"p_1_3_5_15", true, {}, colored_spec{{1, 1}, {3, 1}, {5, 1}, {15, 1}}});
        return e;
    }();
    return v;
}

struct newman_grid_entry {
    std::int64_t r, s, q, p;
};

inline const std::vector<newman_grid_entry>& newman_grid() {
    static const std::vector<newman_grid_entry> v = [] {
        std::vector<newman_grid_entry> e;
        for (std::int64_t p : {5, 7, 11, 13}) e.push_back({2, 1, 3, p});
        for (std::int64_t p : {5, 7, 11, 13}) e.push_back({6, 1, 3, p});
        return e;
    }();
    return v;
}

inline const std::vector<std::string>& suite_classes() {
    static const std::vector<std::string> v{"identities", "dissections", "oracles", "newman",
                                            "families"};
    return v;
}

/// Every runnable id, grouped by class.
inline std::vector<std::pair<std::string, std::string>> suite_ids() {
    std::vector<std::pair<std::string, std::string>> ids;
    for (const auto& rec : identity_catalog()) ids.emplace_back("identities", rec.id);
    for (std::int64_t p : f1_dissection_primes())
        ids.emplace_back("dissections", "dissect:f1:" + std::to_string(p));
    for (std::int64_t p : f1_cubed_dissection_primes())
        ids.emplace_back("dissections", "dissect:f1cubed:" + std::to_string(p));
    for (const auto& e : oracle_entries()) ids.emplace_back("oracles", "oracle:" + e.label);
    for (const auto& e : newman_grid())
        ids.emplace_back("newman", "newman:" + std::to_string(e.r) + "," + std::to_string(e.s) +
                                       "," + std::to_string(e.q) + "," + std::to_string(e.p));
    for (const auto& fam : family_registry()) ids.emplace_back("families", fam.id);
    return ids;
}

/// Run a single id (any class). Throws std::invalid_argument for ids
/// outside the registry/catalog.
inline verification_report run_entry(std::string_view id, const suite_options& opt,
                                     const mod_series_provider& provider) {
    if (const identity_record* rec = find_identity(id))
        return run_identity_entry(*rec, opt.identity_order);
    if (id.rfind("dissect:f1:", 0) == 0)
        return run_f1_dissection_entry(std::stoll(std::string(id.substr(11))),
                                       opt.dissect_f1_order);
    if (id.rfind("dissect:f1cubed:", 0) == 0)
        return run_f1_cubed_dissection_entry(std::stoll(std::string(id.substr(16))),
                                             opt.dissect_f1_cubed_order);
    if (id.rfind("oracle:", 0) == 0) {
        const std::string label(id.substr(7));
        for (const auto& e : oracle_entries())
            if (e.label == label)
                return e.colored
                           ? run_colored_oracle_entry(e.label, e.colors, opt.oracle_colored_n)
                           : run_regular_oracle_entry(e.label, e.regular, opt.oracle_regular_n);
        throw std::invalid_argument("unknown oracle id: " + std::string(id));
    }
    if (id.rfind("newman:", 0) == 0) {
        std::istringstream in{std::string(id.substr(7))};
        std::int64_t r, s, q, p;
        char c1, c2, c3;
        if (!(in >> r >> c1 >> s >> c2 >> q >> c3 >> p) || c1 != ',' || c2 != ',' || c3 != ',')
            throw std::invalid_argument("newman id must be newman:<r>,<s>,<q>,<p>");
        return run_newman_entry(r, s, q, p, opt.newman_order);
    }
    if (const congruence_family* fam = find_family(id))
        return run_family_entry(*fam, opt.sweep, provider);
    throw std::invalid_argument("unknown id: " + std::string(id));
}

/// Run every entry of the requested classes (all five when `only` is
/// empty), deterministically sorted by id within class order.
inline std::vector<verification_report> run_suite(const std::vector<std::string>& only,
                                                  const suite_options& opt,
                                                  series_cache& cache) {
    std::vector<verification_report> out;
    const auto provider = cache.provider();
    auto wanted = [&](const std::string& cls) {
        return only.empty() || std::find(only.begin(), only.end(), cls) != only.end();
    };
    for (const std::string& cls : suite_classes()) {
        if (!wanted(cls)) continue;
        std::vector<std::string> ids;
        for (const auto& [c, id] : suite_ids())
            if (c == cls) ids.push_back(id);
        std::sort(ids.begin(), ids.end());
        for (const std::string& id : ids) {
            // one broken entry must not abort the rest of the run
            try {
                out.push_back(run_entry(id, opt, provider));
            } catch (const std::exception& e) {
                verification_report rep;
                rep.id = id;
                rep.kind = cls;
                rep.failures.push_back({"", "", std::string("error: ") + e.what()});
                rep.finalize();
                out.push_back(std::move(rep));
            }
        }
    }
    return out;
}

} // namespace etaq
