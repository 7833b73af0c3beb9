#ifndef CARTAN_REPORT_HPP
#define CARTAN_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace cartan {

enum class CheckStatus { Pass, Fail, Skipped };

/// Outcome of one verification check. For two-route checks `expected`
/// carries the independently derived value and `computed` the direct one;
/// status is pass exactly when they agree (dimensions — integer equality).
struct CheckResult {
    std::string check_id;
    nlohmann::json params;   // flat key -> value record
    nlohmann::json expected; // integer, or structured value
    nlohmann::json computed;
    CheckStatus status = CheckStatus::Fail;
    std::string skip_reason;
    int64_t wall_time_ms = 0;

    static CheckResult skipped(std::string id, nlohmann::json params, std::string reason);

    nlohmann::json to_json() const;
    std::string csv_row() const;
};

std::string status_string(const CheckResult& r);

/// Sorts by (check_id, params dump) so repeated runs emit identical reports.
void normalize_order(std::vector<CheckResult>& results);

bool all_passed(const std::vector<CheckResult>& results);

/// Serialized report with header {tool_version, config_digest}.
/// format: "json" or "csv". Throws precondition_error on empty results and
/// std::runtime_error on unwritable paths.
void emit_report(const std::vector<CheckResult>& results, const std::string& format,
                 const std::string& path, const std::string& config_digest);

std::string report_to_json_string(const std::vector<CheckResult>& results,
                                  const std::string& config_digest);
std::string report_to_csv_string(const std::vector<CheckResult>& results);

/// FNV-1a of the canonical config dump; stable across runs and platforms.
std::string config_digest(const nlohmann::json& config);

} // namespace cartan

#endif
