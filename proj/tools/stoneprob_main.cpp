#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "stoneprob/errors.hpp"
#include "stoneprob/harness/suite.hpp"

namespace {

bool parse_range(const std::string& text, std::size_t& lo, std::size_t& hi) {
    try {
        const auto pos = text.find("..");
        if (pos == std::string::npos) {
            lo = hi = static_cast<std::size_t>(std::stoul(text));
        } else {
            lo = static_cast<std::size_t>(std::stoul(text.substr(0, pos)));
            hi = static_cast<std::size_t>(std::stoul(text.substr(pos + 2)));
        }
    } catch (...) {
        return false;
    }
    return lo >= 1 && lo <= hi;
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

int run_verify(std::uint64_t seed, const std::string& atoms, const std::string& horizon,
               std::uint64_t trials, const std::string& suites, const std::string& out_path,
               std::size_t jobs) {
    stoneprob::harness::SuiteConfig config;
    config.seed = seed;
    config.trials = trials;
    config.jobs = jobs;
    if (!parse_range(atoms, config.generator.atoms_min, config.generator.atoms_max)) {
        std::cerr << "error: --atoms expects A..B with 1 <= A <= B\n";
        return 2;
    }
    if (!parse_range(horizon, config.generator.horizon_min, config.generator.horizon_max)) {
        std::cerr << "error: --horizon expects H..K with 1 <= H <= K\n";
        return 2;
    }
    if (!suites.empty()) config.suites = split_list(suites);

    const stoneprob::harness::Report report = stoneprob::harness::run_suites(config);
    for (const auto& p : report.properties) {
        std::printf("[%s] %-28s %-11s %6llu trials", p.failures == 0 ? "PASS" : "FAIL",
                    p.name.c_str(), p.suite.c_str(),
                    static_cast<unsigned long long>(p.trials));
        std::printf("   max slack %.3g", p.max_observed_slack);
        if (p.failures > 0) {
            std::printf("   failures %llu, first at trial %llu",
                        static_cast<unsigned long long>(p.failures),
                        static_cast<unsigned long long>(*p.first_failure_trial));
        }
        std::printf("\n");
    }
    std::printf("%s\n", report.pass ? "pass" : "fail");

    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return 2;
        }
        out << report.to_json().dump(2) << "\n";
    }
    return report.pass ? 0 : 1;
}

int run_replay(const std::string& fixture_path) {
    std::ifstream in(fixture_path);
    if (!in) {
        std::cerr << "error: cannot read " << fixture_path << "\n";
        return 2;
    }
    nlohmann::json doc;
    in >> doc;
    const stoneprob::harness::ReplayResult result = stoneprob::harness::replay_fixture(doc);
    std::printf("[%s] %s   deviation %.17g\n", result.outcome.passed ? "PASS" : "FAIL",
                result.property.c_str(), result.outcome.deviation);
    return result.outcome.passed ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact checks for lattice-valued probability on finite Stone spaces"};
    app.require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "Run the randomized property suites");
    std::uint64_t seed = 42;
    std::string atoms = "1..16";
    std::string horizon = "1..8";
    std::uint64_t trials = 1000;
    std::string suites;
    std::string out_path;
    std::size_t jobs = 1;
    verify->add_option("--seed", seed, "Master seed for the trial streams");
    verify->add_option("--atoms", atoms, "Atom count range A..B");
    verify->add_option("--horizon", horizon, "Filtration stage range H..K");
    verify->add_option("--trials", trials, "Trials per property");
    verify->add_option("--suite", suites,
                       "Comma list from core,spectral,probability,stopping (default all)");
    verify->add_option("--out", out_path, "Write the JSON report here");
    verify->add_option("--jobs", jobs, "Worker threads per property");

    auto* replay = app.add_subcommand("replay", "Re-run one stored fixture");
    std::string fixture_path;
    replay->add_option("--fixture", fixture_path, "Fixture JSON file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) {
            return run_verify(seed, atoms, horizon, trials, suites, out_path, jobs);
        }
        return run_replay(fixture_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
