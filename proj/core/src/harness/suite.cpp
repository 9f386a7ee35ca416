#include "stoneprob/harness/suite.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <set>
#include <thread>

#include "stoneprob/errors.hpp"
#include "stoneprob/serialization.hpp"

namespace stoneprob::harness {

namespace {

const std::set<std::string> kKnownSuites{"core", "spectral", "probability", "stopping"};

bool suite_selected(const SuiteConfig& config, std::string_view suite) {
    if (config.suites.empty()) return true;
    for (const auto& s : config.suites) {
        if (s == suite) return true;
    }
    return false;
}

struct Partial {
    std::uint64_t failures = 0;
    std::uint64_t first_failure = UINT64_MAX;
    std::string first_error;
    double max_deviation = 0.0;
    std::uint64_t infinite_outputs = 0;

    void merge(const Partial& other) {
        failures += other.failures;
        if (other.first_failure < first_failure) {
            first_failure = other.first_failure;
            first_error = other.first_error;
        }
        max_deviation = std::max(max_deviation, other.max_deviation);
        infinite_outputs += other.infinite_outputs;
    }
};

Partial run_trials(const PropertyDef& def, const SuiteConfig& config, std::uint64_t begin,
                   std::uint64_t end) {
    Partial p;
    for (std::uint64_t trial = begin; trial < end; ++trial) {
        bool passed = false;
        std::string error;
        try {
            SplitMix rng(stream_seed(config.seed, def.name, trial));
            const Fixture fixture = def.generate(rng, config.generator);
            const TrialOutcome outcome = def.check(fixture, config.tolerance);
            passed = outcome.passed;
            p.max_deviation = std::max(p.max_deviation, outcome.deviation);
            p.infinite_outputs += outcome.infinite_outputs;
        } catch (const std::exception& e) {
            error = e.what();
        }
        if (!passed) {
            ++p.failures;
            if (trial < p.first_failure) {
                p.first_failure = trial;
                p.first_error = error;
            }
        }
    }
    return p;
}

PropertyReport run_property(const PropertyDef& def, const SuiteConfig& config) {
    PropertyReport report;
    report.name = std::string(def.name);
    report.anchor = std::string(def.anchor);
    report.suite = std::string(def.suite);
    report.trials = config.trials;
    report.first_failure_fixture = nullptr;

    Partial merged;
    const std::size_t jobs = std::max<std::size_t>(config.jobs, 1);
    if (jobs == 1 || config.trials < 2 * jobs) {
        merged = run_trials(def, config, 0, config.trials);
    } else {
        std::vector<Partial> parts(jobs);
        std::vector<std::thread> threads;
        const std::uint64_t chunk = (config.trials + jobs - 1) / jobs;
        for (std::size_t j = 0; j < jobs; ++j) {
            const std::uint64_t begin = j * chunk;
            const std::uint64_t end = std::min(config.trials, begin + chunk);
            if (begin >= end) break;
            threads.emplace_back([&, j, begin, end] {
                parts[j] = run_trials(def, config, begin, end);
            });
        }
        for (auto& t : threads) t.join();
        for (const auto& part : parts) merged.merge(part);
    }

    report.failures = merged.failures;
    report.max_observed_slack = merged.max_deviation;
    report.infinite_outputs = merged.infinite_outputs;
    if (merged.failures > 0) {
        report.first_failure_trial = merged.first_failure;
        if (!merged.first_error.empty()) {
            report.first_failure_error = merged.first_error;
        }
        // The generator is deterministic in (seed, property, trial), so the
        // failing fixture can be rebuilt for the report after the fact.
        try {
            SplitMix rng(stream_seed(config.seed, def.name, merged.first_failure));
            const Fixture fixture = def.generate(rng, config.generator);
            report.first_failure_fixture = {
                {"property", report.name},
                {"fixture", fixture.to_json()},
            };
        } catch (const std::exception& e) {
            report.first_failure_fixture = {
                {"property", report.name},
                {"generator_error", std::string(e.what())},
            };
        }
    }
    return report;
}

} // namespace

void SuiteConfig::validate() const {
    if (trials == 0) throw InvalidConfig("trials must be at least 1");
    if (generator.atoms_min == 0 || generator.atoms_min > generator.atoms_max) {
        throw InvalidConfig("atom range must satisfy 1 <= min <= max");
    }
    if (generator.horizon_min == 0 || generator.horizon_min > generator.horizon_max) {
        throw InvalidConfig("horizon range must satisfy 1 <= min <= max");
    }
    if (!(tolerance.relative >= 0.0) || !(tolerance.absolute >= 0.0)) {
        throw InvalidConfig("tolerances must be nonnegative");
    }
    for (const auto& s : suites) {
        if (!kKnownSuites.count(s)) {
            throw InvalidConfig("unknown suite: " + s);
        }
    }
    if (jobs == 0) throw InvalidConfig("jobs must be at least 1");
}

nlohmann::json SuiteConfig::to_json() const {
    return nlohmann::json{
        {"seed", seed},
        {"atoms", {generator.atoms_min, generator.atoms_max}},
        {"horizon", {generator.horizon_min, generator.horizon_max}},
        {"trials", trials},
        {"tolerance", {{"relative", tolerance.relative}, {"absolute", tolerance.absolute}}},
        {"suites", suites.empty() ? std::vector<std::string>(kKnownSuites.begin(),
                                                             kKnownSuites.end())
                                  : suites},
        {"jobs", jobs},
    };
}

nlohmann::json PropertyReport::to_json() const {
    nlohmann::json j{
        {"name", name},
        {"anchor", anchor},
        {"suite", suite},
        {"trials", trials},
        {"failures", failures},
        {"max_observed_slack", scalar_to_json(max_observed_slack)},
        {"infinite_outputs", infinite_outputs},
        {"first_failure_trial", nullptr},
        {"first_failure_fixture", first_failure_fixture},
    };
    if (first_failure_trial) j["first_failure_trial"] = *first_failure_trial;
    if (first_failure_error) j["first_failure_error"] = *first_failure_error;
    return j;
}

nlohmann::json Report::to_json() const {
    nlohmann::json props = nlohmann::json::array();
    for (const auto& p : properties) props.push_back(p.to_json());
    return nlohmann::json{
        {"config", config.to_json()},
        {"properties", std::move(props)},
        {"pass", pass},
    };
}

Report run_suites(const SuiteConfig& config) {
    config.validate();

    // Registry sanity: one entry per property, every suite label known.
    std::set<std::string_view> names;
    for (const auto& def : property_registry()) {
        if (!names.insert(def.name).second) {
            throw InvalidConfig(std::string("duplicate property: ") + std::string(def.name));
        }
        if (!kKnownSuites.count(std::string(def.suite))) {
            throw InvalidConfig(std::string("property in unknown suite: ") +
                                std::string(def.name));
        }
    }

    Report report;
    report.config = config;
    for (const auto& def : property_registry()) {
        if (!suite_selected(config, def.suite)) continue;
        PropertyReport pr = run_property(def, config);
        report.pass = report.pass && pr.failures == 0;
        report.properties.push_back(std::move(pr));
    }
    return report;
}

ReplayResult replay_fixture(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("property") || !doc.at("property").is_string() ||
        !doc.contains("fixture")) {
        throw InvalidArgument("fixture document needs a property name and a fixture object");
    }
    const std::string name = doc.at("property").get<std::string>();
    const PropertyDef* def = find_property(name);
    if (def == nullptr) {
        throw InvalidArgument("unknown property: " + name);
    }
    Tolerance tol;
    if (doc.contains("tolerance")) {
        tol.relative = doc.at("tolerance").at("relative").get<double>();
        tol.absolute = doc.at("tolerance").at("absolute").get<double>();
    }
    const Fixture fixture = Fixture::from_json(doc.at("fixture"));
    return ReplayResult{name, def->check(fixture, tol)};
}

} // namespace stoneprob::harness
