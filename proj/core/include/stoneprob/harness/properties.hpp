#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "stoneprob/adapted_process.hpp"
#include "stoneprob/conditional_expectation.hpp"
#include "stoneprob/harness/function_spec.hpp"
#include "stoneprob/harness/generator.hpp"
#include "stoneprob/interval_set.hpp"
#include "stoneprob/lattice_element.hpp"
#include "stoneprob/spectral_system.hpp"
#include "stoneprob/step_function.hpp"
#include "stoneprob/stopping_time.hpp"

namespace stoneprob::harness {

// Everything a single trial needs, in replayable form. Fields a property does
// not use stay empty and are omitted from the JSON.
struct Fixture {
    std::size_t atoms = 0;
    std::vector<LatticeElement> elements;
    std::vector<StepFunction> steps;
    std::vector<IntervalSet> intervals;
    std::vector<std::vector<StepFunction>> sequences;
    std::shared_ptr<const Filtration> filtration;
    std::vector<std::vector<LatticeElement>> paths;
    std::vector<std::vector<StopValue>> stop_values;
    std::vector<FunctionSpec> functions;
    std::vector<double> scalars;
    std::vector<std::uint64_t> naturals;

    StoneSpace space() const;

    nlohmann::json to_json() const;
    static Fixture from_json(const nlohmann::json& j);
};

struct Tolerance {
    double relative = 1e-9;
    double absolute = 1e-12;
};

struct TrialOutcome {
    bool passed = true;
    // Largest slack or deviation the trial observed, property-specific.
    double deviation = 0.0;
    // How many outputs landed at +infinity by construction.
    std::uint64_t infinite_outputs = 0;
};

using GenerateFn = Fixture (*)(SplitMix&, const GeneratorConfig&);
using CheckFn = TrialOutcome (*)(const Fixture&, const Tolerance&);

struct PropertyDef {
    std::string_view name;
    // Stable label tying the check to the statement it verifies.
    std::string_view anchor;
    std::string_view suite; // core, spectral, probability, stopping
    GenerateFn generate;
    CheckFn check;
};

std::span<const PropertyDef> property_registry();
const PropertyDef* find_property(std::string_view name);

// The three checks below are parameterized over the operation under test so
// the same harness code can score both the real implementation and mutated
// variants. The real operation must score zero disagreements.

using MuFn = std::function<LatticeElement(const SpectralSystem&, const IntervalSet&)>;
std::size_t mu_membership_disagreements(const SpectralSystem& system,
                                        std::span<const IntervalSet> sets, const MuFn& mu);

using ApplyFn = std::function<LatticeElement(const ConditionalExpectation&, const LatticeElement&)>;
std::size_t average_disagreements(const ConditionalExpectation& ce,
                                  std::span<const LatticeElement> inputs, const ApplyFn& apply);

using FirstEntryFn = std::function<StoppingTime(const AdaptedProcess&)>;
std::size_t first_entry_disagreements(
    std::span<const std::pair<AdaptedProcess, StoppingTime>> cases,
    const FirstEntryFn& first_entry);

} // namespace stoneprob::harness
