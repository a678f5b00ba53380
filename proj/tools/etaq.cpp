// etaq -- exact truncated q-series arithmetic and a verification harness
// for eta-quotient partition congruences.
//
// Subcommands:
//   coeff   print coefficients of a counting function / eta quotient
//   verify  run one verification entry by id
//   report  run the whole suite (or one class) and emit a report
//   list    enumerate runnable ids
//
// Exit codes: 0 all-pass, 1 any-fail, 2 usage error, 3 vacuous-only.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "etaq/partitions.hpp"
#include "etaq/report_json.hpp"
#include "etaq/suite.hpp"

namespace {

constexpr int exit_pass = 0;
constexpr int exit_fail = 1;
constexpr int exit_usage = 2;
constexpr int exit_vacuous = 3;

struct coeff_config {
    std::string family;
    std::int64_t n = -1;
    std::int64_t n_max = -1;
    std::uint64_t modulus = 0; // 0 = exact
    std::string format = "text";
    std::string output;
};

struct verify_config {
    std::string id;
    std::int64_t order = -1;
    std::int64_t n_max = -1;
    std::int64_t j_max = -1;
    std::int64_t terms = -1;
    std::string primes;
    std::string format = "text";
    std::string output;
};

struct report_config {
    std::string only;
    std::int64_t order = -1;
    std::int64_t n_max = -1;
    std::string format = "text";
    std::string output;
};

std::vector<std::int64_t> parse_csv(const std::string& csv) {
    std::vector<std::int64_t> out;
    std::istringstream in(csv);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoll(item));
    }
    return out;
}

const std::map<std::string, etaq::eta_quotient>& coeff_families() {
    using etaq::regular_quotient;
    using etaq::regularity_spec;
    static const std::map<std::string, etaq::eta_quotient> families = {
        {"p", etaq::eta_quotient{{1, -1}}},
        {"b", etaq::eta_quotient{{1, 2}, {3, 1}}},
        {"a", etaq::eta_quotient{{1, 6}, {3, 1}}},
        {"b_3_8", regular_quotient(regularity_spec{3, 8})},
        {"b_4_7", regular_quotient(regularity_spec{4, 7})},
        {"b_4_9", regular_quotient(regularity_spec{4, 9})},
        {"b_3_5_8", regular_quotient(regularity_spec{3, 5, 8})},
    };
    return families;
}

void write_out(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << text;
}

int run_coeff(const coeff_config& cfg) {
    const auto it = coeff_families().find(cfg.family);
    if (it == coeff_families().end()) {
        std::cerr << "error: unknown family '" << cfg.family << "'; known:";
        for (const auto& [name, q] : coeff_families()) std::cerr << " " << name;
        std::cerr << "\n";
        return exit_usage;
    }
    if (cfg.n < 0 && cfg.n_max < 0) {
        std::cerr << "error: coeff requires --n or --nmax\n";
        return exit_usage;
    }
    const std::int64_t lo = cfg.n >= 0 ? cfg.n : 0;
    const std::int64_t hi = cfg.n_max >= 0 ? cfg.n_max : cfg.n;
    std::vector<std::string> values;
    if (cfg.modulus == 0) {
        const etaq::zseries s = etaq::compile(it->second, hi);
        for (std::int64_t n = lo; n <= hi; ++n) values.push_back(s.at(n).str());
    } else {
        const etaq::mseries s = etaq::compile_mod(it->second, hi, cfg.modulus);
        for (std::int64_t n = lo; n <= hi; ++n) values.push_back(std::to_string(s.at(n)));
    }
    std::ostringstream text;
    if (cfg.format == "structured") {
        etaq::json doc;
        doc["tool_version"] = etaq::tool_version;
        etaq::json params;
        params["command"] = "coeff";
        params["family"] = cfg.family;
        params["mod"] = cfg.modulus == 0 ? "exact" : std::to_string(cfg.modulus);
        doc["run_params"] = std::move(params);
        etaq::json list = etaq::json::array();
        for (std::int64_t n = lo; n <= hi; ++n) {
            etaq::json row;
            row["n"] = std::to_string(n);
            row["coefficient"] = values[static_cast<std::size_t>(n - lo)];
            list.push_back(std::move(row));
        }
        doc["values"] = std::move(list);
        text << etaq::render_document(doc);
    } else {
        for (std::int64_t n = lo; n <= hi; ++n)
            text << n << "\t" << values[static_cast<std::size_t>(n - lo)] << "\n";
    }
    write_out(cfg.output, text.str());
    return exit_pass;
}

std::string render_text(const std::vector<etaq::verification_report>& entries) {
    std::ostringstream os;
    std::int64_t pass = 0, fail = 0, vacuous = 0;
    for (const auto& rep : entries) {
        os << to_string(rep.status) << "\t" << rep.id << "\tkind=" << rep.kind
           << " checks=" << rep.checks_run << " skipped=" << rep.skipped
           << " wall_ms=" << rep.wall_ms << "\n";
        for (const auto& f : rep.failures)
            os << "\tFAIL " << f.params << " index=" << f.index << " residue=" << f.residue
               << "\n";
        if (!rep.notes.empty()) os << "\tnote: " << rep.notes << "\n";
        switch (rep.status) {
            case etaq::verify_status::pass: ++pass; break;
            case etaq::verify_status::fail: ++fail; break;
            case etaq::verify_status::vacuous: ++vacuous; break;
        }
    }
    os << "summary: " << pass << " pass, " << fail << " fail, " << vacuous << " vacuous\n";
    return os.str();
}

int aggregate_exit(const std::vector<etaq::verification_report>& entries) {
    bool any_fail = false, any_pass = false, any_vacuous = false;
    for (const auto& rep : entries) {
        switch (rep.status) {
            case etaq::verify_status::fail: any_fail = true; break;
            case etaq::verify_status::pass: any_pass = true; break;
            case etaq::verify_status::vacuous: any_vacuous = true; break;
        }
    }
    if (any_fail) return exit_fail;
    if (any_vacuous && !any_pass) return exit_vacuous;
    return exit_pass;
}

int run_verify(const verify_config& cfg) {
    etaq::suite_options opt;
    if (cfg.order >= 0) {
        opt.identity_order = cfg.order;
        opt.newman_order = cfg.order;
        opt.dissect_f1_order = cfg.order;
        opt.dissect_f1_cubed_order = cfg.order;
        opt.sweep.order = cfg.order;
    }
    if (cfg.n_max >= 0) {
        opt.sweep.n_max = cfg.n_max;
        opt.oracle_regular_n = cfg.n_max;
        opt.oracle_colored_n = cfg.n_max;
    }
    opt.sweep.j_max = cfg.j_max;
    opt.sweep.terms = cfg.terms;
    if (!cfg.primes.empty()) opt.sweep.primes = parse_csv(cfg.primes);

    etaq::series_cache cache;
    etaq::verification_report rep;
    try {
        rep = etaq::run_entry(cfg.id, opt, cache.provider());
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    const std::vector<etaq::verification_report> entries{rep};
    std::string text;
    if (cfg.format == "structured") {
        std::vector<std::pair<std::string, std::string>> params{{"command", "verify"},
                                                                {"id", cfg.id}};
        if (cfg.order >= 0) params.emplace_back("order", std::to_string(cfg.order));
        if (cfg.n_max >= 0) params.emplace_back("nmax", std::to_string(cfg.n_max));
        if (cfg.j_max >= 0) params.emplace_back("jmax", std::to_string(cfg.j_max));
        if (!cfg.primes.empty()) params.emplace_back("primes", cfg.primes);
        text = etaq::render_document(etaq::report_document(params, entries));
    } else {
        text = render_text(entries);
    }
    write_out(cfg.output, text);
    return aggregate_exit(entries);
}

int run_report(const report_config& cfg) {
    etaq::suite_options opt;
    if (cfg.order >= 0) opt.sweep.order = cfg.order;
    if (cfg.n_max >= 0) opt.sweep.n_max = cfg.n_max;
    std::vector<std::string> only;
    if (!cfg.only.empty()) {
        const auto& classes = etaq::suite_classes();
        if (std::find(classes.begin(), classes.end(), cfg.only) == classes.end()) {
            std::cerr << "error: unknown class '" << cfg.only << "'; known:";
            for (const auto& c : classes) std::cerr << " " << c;
            std::cerr << "\n";
            return exit_usage;
        }
        only.push_back(cfg.only);
    }
    etaq::series_cache cache;
    const std::vector<etaq::verification_report> entries = etaq::run_suite(only, opt, cache);
    std::string text;
    if (cfg.format == "structured") {
        std::vector<std::pair<std::string, std::string>> params{{"command", "report"}};
        if (!cfg.only.empty()) params.emplace_back("only", cfg.only);
        if (cfg.order >= 0) params.emplace_back("order", std::to_string(cfg.order));
        if (cfg.n_max >= 0) params.emplace_back("nmax", std::to_string(cfg.n_max));
        text = etaq::render_document(etaq::report_document(params, entries));
    } else {
        text = render_text(entries);
    }
    write_out(cfg.output, text);
    return aggregate_exit(entries);
}

int run_list(const std::string& only) {
    for (const auto& [cls, id] : etaq::suite_ids()) {
        if (!only.empty() && cls != only) continue;
        std::cout << cls << "\t" << id << "\n";
    }
    return exit_pass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact q-series arithmetic and congruence verification"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    coeff_config ccfg;
    auto* coeff = app.add_subcommand("coeff", "print coefficients of a counting function");
    coeff->add_option("--family", ccfg.family, "p, b, a, b_3_8, b_4_7, b_4_9, b_3_5_8")
        ->required();
    coeff->add_option("--n", ccfg.n, "single index");
    coeff->add_option("--nmax", ccfg.n_max, "print 0..nmax");
    coeff->add_option("--mod", ccfg.modulus, "reduce mod M (default exact)");
    coeff->add_option("--format", ccfg.format, "text|structured")
        ->check(CLI::IsMember({"text", "structured"}));
    coeff->add_option("--output", ccfg.output, "output path (default stdout)");

    verify_config vcfg;
    auto* verify = app.add_subcommand("verify", "run one verification entry");
    verify->add_option("--id", vcfg.id, "entry id (see `list`)")->required();
    verify->add_option("--order", vcfg.order, "truncation order override");
    verify->add_option("--nmax", vcfg.n_max, "sweep n bound override");
    verify->add_option("--jmax", vcfg.j_max, "sweep j bound override");
    verify->add_option("--terms", vcfg.terms, "series-congruence term count");
    verify->add_option("--primes", vcfg.primes, "comma-separated prime grid");
    verify->add_option("--format", vcfg.format, "text|structured")
        ->check(CLI::IsMember({"text", "structured"}));
    verify->add_option("--output", vcfg.output, "output path (default stdout)");

    report_config rcfg;
    auto* report = app.add_subcommand("report", "run the full suite");
    report->add_option("--only", rcfg.only, "identities|dissections|oracles|newman|families");
    report->add_option("--order", rcfg.order, "modular sweep order override");
    report->add_option("--nmax", rcfg.n_max, "sweep n bound override");
    report->add_option("--format", rcfg.format, "text|structured")
        ->check(CLI::IsMember({"text", "structured"}));
    report->add_option("--output", rcfg.output, "output path (default stdout)");

    std::string list_only;
    auto* list = app.add_subcommand("list", "enumerate runnable ids");
    list->add_option("--only", list_only, "restrict to one class");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e); // prints help or the parse error
        return code == 0 ? exit_pass : exit_usage;
    }

    try {
        if (coeff->parsed()) return run_coeff(ccfg);
        if (verify->parsed()) return run_verify(vcfg);
        if (report->parsed()) return run_report(rcfg);
        if (list->parsed()) return run_list(list_only);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
