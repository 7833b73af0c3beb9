#ifndef CARTAN_SUITES_HPP
#define CARTAN_SUITES_HPP

#include <string>
#include <vector>

#include "cartan/report.hpp"

namespace cartan {

/// Runtime configuration for the verification suites.
struct Config {
    std::vector<uint32_t> primes{5, 7};
    uint32_t size_cap = 30; // hc1 total-complex cap (dim A)
    bool stretch = false;   // enables the long-running contact positive case
    nlohmann::json suites = nlohmann::json::object(); // reserved per-suite knobs

    static Config from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
};

const std::vector<std::string>& suite_names();

/// Runs one named suite (or "all") over the configured primes. Collects
/// every result; a failing check never aborts the run. Throws
/// precondition_error for unknown suite names. jobs > 1 dispatches
/// independent checks to a thread pool; results are order-normalized.
std::vector<CheckResult> run_suite(const std::string& name, const Config& config,
                                   uint32_t jobs = 1);

/// Human-readable matrix mapping the verified facts to check ids.
std::string describe_checks();

} // namespace cartan

#endif
