#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace resetsde::validation {

/// One measured quantity compared against a fixed threshold.
struct CheckResult {
    std::string name;
    double measured = 0.0;
    double threshold = 0.0;
    /// "<": measured must be below threshold; ">": above; "<=" likewise.
    std::string relation = "<";
    bool passed = false;
    std::string detail;
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckResult> checks;
    double seconds = 0.0;

    bool passed() const;
};

struct Options {
    /// Multiplies every Monte Carlo sample count (1 = full size).
    double sample_scale = 1.0;
    std::uint64_t seed = 20210907;
    unsigned threads = 1;
};

/// Every suite, in acceptance order: pdf-ks, mean, stationary, moments,
/// fpe-agreement, dynkin, msd-exponents, npp-density, scheme-convergence,
/// properties.
std::vector<std::string> suite_names();

/// The five suites run by `reset_sde validate` without --suite.
std::vector<std::string> default_suites();

/// Throws std::invalid_argument for an unknown suite name.
SuiteResult run_suite(const std::string& name, const Options& options = {});

nlohmann::json to_json(const SuiteResult& result);

}  // namespace resetsde::validation
