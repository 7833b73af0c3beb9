#include "cartan/report.hpp"

#include <algorithm>
#include <fstream>

#include "cartan/errors.hpp"
#include "cartan/version.hpp"

namespace cartan {

CheckResult CheckResult::skipped(std::string id, nlohmann::json params, std::string reason) {
    CheckResult r;
    r.check_id = std::move(id);
    r.params = std::move(params);
    r.status = CheckStatus::Skipped;
    r.skip_reason = std::move(reason);
    return r;
}

std::string status_string(const CheckResult& r) {
    switch (r.status) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Skipped: return "skipped(" + r.skip_reason + ")";
    }
    return "?";
}

nlohmann::json CheckResult::to_json() const {
    nlohmann::json j{{"check_id", check_id},
                     {"params", params},
                     {"expected", expected},
                     {"computed", computed},
                     {"status", status == CheckStatus::Pass   ? "pass"
                                : status == CheckStatus::Fail ? "fail"
                                                              : "skipped"},
                     {"wall_time_ms", wall_time_ms}};
    if (status == CheckStatus::Skipped) j["reason"] = skip_reason;
    return j;
}

namespace {

std::string flatten_params(const nlohmann::json& params) {
    std::string out;
    for (auto it = params.begin(); it != params.end(); ++it) {
        if (!out.empty()) out += ";";
        std::string v = it.value().is_string() ? it.value().get<std::string>()
                                               : it.value().dump();
        // keep the params cell a single CSV column
        for (char& c : v)
            if (c == ',') c = '|';
        out += it.key() + "=" + v;
    }
    return out;
}

std::string scalar(const nlohmann::json& v) {
    if (v.is_null()) return "";
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

} // namespace

std::string CheckResult::csv_row() const {
    return check_id + "," + flatten_params(params) + "," + scalar(expected) + "," +
           scalar(computed) + "," + status_string(*this) + "," + std::to_string(wall_time_ms);
}

void normalize_order(std::vector<CheckResult>& results) {
    std::stable_sort(results.begin(), results.end(),
                     [](const CheckResult& a, const CheckResult& b) {
                         if (a.check_id != b.check_id) return a.check_id < b.check_id;
                         return a.params.dump() < b.params.dump();
                     });
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (r.status == CheckStatus::Fail) return false;
    return true;
}

std::string report_to_json_string(const std::vector<CheckResult>& results,
                                  const std::string& digest) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : results) arr.push_back(r.to_json());
    nlohmann::json doc{{"header", {{"tool_version", kToolVersion}, {"config_digest", digest}}},
                       {"results", std::move(arr)}};
    return doc.dump(2) + "\n";
}

std::string report_to_csv_string(const std::vector<CheckResult>& results) {
    std::string out = "check_id,params,expected,computed,status,wall_time_ms\n";
    for (const auto& r : results) out += r.csv_row() + "\n";
    return out;
}

void emit_report(const std::vector<CheckResult>& results, const std::string& format,
                 const std::string& path, const std::string& digest) {
    if (results.empty()) throw precondition_error("emit_report: no results to emit");
    if (format != "json" && format != "csv")
        throw precondition_error("emit_report: unknown format '" + format + "'");
    std::ofstream out(path);
    if (!out) throw std::runtime_error("emit_report: cannot write '" + path + "'");
    out << (format == "json" ? report_to_json_string(results, digest)
                             : report_to_csv_string(results));
    if (!out) throw std::runtime_error("emit_report: write failed for '" + path + "'");
}

std::string config_digest(const nlohmann::json& config) {
    const std::string s = config.dump();
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace cartan
