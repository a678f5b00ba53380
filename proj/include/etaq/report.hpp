#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace etaq {

enum class verify_status { pass, fail, vacuous };

inline const char* to_string(verify_status s) {
    switch (s) {
        case verify_status::pass: return "pass";
        case verify_status::fail: return "fail";
        default: return "vacuous";
    }
}

/// One failed assertion: the grid point, the coefficient index it touched
/// (exact; "331.5"-style when a rational index fails the integrality
/// audit), and the offending residue or a short reason.
struct failure_record {
    std::string params;
    std::string index;
    std::string residue;
};

/// Machine-readable outcome of one verification entry. `pass` requires at
/// least one executed check; a grid emptied by its hypotheses is reported
/// `vacuous`, never `pass`.
struct verification_report {
    std::string id;
    std::string kind;
    verify_status status = verify_status::vacuous;
    std::int64_t checks_run = 0;
    std::int64_t skipped = 0; // hypothesis-excluded or beyond series order
    std::vector<failure_record> failures;
    std::string notes;
    std::int64_t wall_ms = 0;

    bool passed() const { return status == verify_status::pass; }

    void finalize() {
        if (!failures.empty()) status = verify_status::fail;
        else if (checks_run > 0) status = verify_status::pass;
        else status = verify_status::vacuous;
    }
};

} // namespace etaq
