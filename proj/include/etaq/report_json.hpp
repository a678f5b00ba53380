#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "etaq/report.hpp"

namespace etaq {

inline constexpr const char* tool_version = "0.1.0";

/// Structured-output document. Field order is fixed at construction and
/// every integer is a decimal string, so parse + re-serialize is
/// byte-identical and no consumer needs 64-bit (or wider) integers.
using json = nlohmann::ordered_json;

inline json to_json(const verification_report& rep) {
    json j;
    j["id"] = rep.id;
    j["kind"] = rep.kind;
    j["status"] = to_string(rep.status);
    j["checks_run"] = std::to_string(rep.checks_run);
    j["skipped"] = std::to_string(rep.skipped);
    json failures = json::array();
    for (const auto& f : rep.failures) {
        json jf;
        jf["params"] = f.params;
        jf["index"] = f.index;
        jf["residue"] = f.residue;
        failures.push_back(std::move(jf));
    }
    j["failures"] = std::move(failures);
    if (!rep.notes.empty()) j["notes"] = rep.notes;
    j["wall_ms"] = std::to_string(rep.wall_ms);
    return j;
}

inline json report_document(const std::vector<std::pair<std::string, std::string>>& run_params,
                            const std::vector<verification_report>& entries) {
    json doc;
    doc["tool_version"] = tool_version;
    json params;
    for (const auto& [k, v] : run_params) params[k] = v;
    doc["run_params"] = std::move(params);
    json list = json::array();
    for (const auto& rep : entries) list.push_back(to_json(rep));
    doc["entries"] = std::move(list);
    return doc;
}

inline std::string render_document(const json& doc) { return doc.dump(2) + "\n"; }

} // namespace etaq
