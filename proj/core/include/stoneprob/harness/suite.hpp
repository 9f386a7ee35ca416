#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "stoneprob/harness/properties.hpp"

namespace stoneprob::harness {

struct SuiteConfig {
    std::uint64_t seed = 42;
    GeneratorConfig generator;
    std::uint64_t trials = 1000;
    Tolerance tolerance;
    // Which of core, spectral, probability, stopping to run; empty means all.
    std::vector<std::string> suites;
    std::size_t jobs = 1;

    void validate() const;
    nlohmann::json to_json() const;
};

struct PropertyReport {
    std::string name;
    std::string anchor;
    std::string suite;
    std::uint64_t trials = 0;
    std::uint64_t failures = 0;
    double max_observed_slack = 0.0;
    std::uint64_t infinite_outputs = 0;
    std::optional<std::uint64_t> first_failure_trial;
    // A replayable {"property", "fixture"} document, null when all passed.
    nlohmann::json first_failure_fixture;
    std::optional<std::string> first_failure_error;

    nlohmann::json to_json() const;
};

struct Report {
    SuiteConfig config;
    std::vector<PropertyReport> properties;
    bool pass = true;

    nlohmann::json to_json() const;
};

// Runs every registered property of the selected suites, `trials` times each
// with per-trial seeds derived from the master seed. Trials of one property
// may run on several threads; the merge is order-independent, so the report
// does not depend on the schedule.
Report run_suites(const SuiteConfig& config);

struct ReplayResult {
    std::string property;
    TrialOutcome outcome;
};

// Re-runs one stored trial from a {"property", "fixture"} document, with an
// optional "tolerance" override. Same build, same fixture, same verdict.
ReplayResult replay_fixture(const nlohmann::json& doc);

} // namespace stoneprob::harness
