#pragma once

#include <memory>

#include <nlohmann/json.hpp>

#include "stoneprob/adapted_process.hpp"
#include "stoneprob/filtration.hpp"
#include "stoneprob/interval_set.hpp"
#include "stoneprob/lattice_element.hpp"
#include "stoneprob/step_function.hpp"
#include "stoneprob/stopping_time.hpp"

namespace stoneprob {

// JSON forms of the domain values, used by fixtures and the report. Finite
// reals serialize as numbers, the infinities as the strings "inf" and
// "-inf". Parsers reject anything else.

nlohmann::json scalar_to_json(double v);
double scalar_from_json(const nlohmann::json& j);

nlohmann::json element_to_json(const LatticeElement& x);
LatticeElement element_from_json(const nlohmann::json& j);

nlohmann::json step_to_json(const StepFunction& f);
StepFunction step_from_json(const nlohmann::json& j);

nlohmann::json intervals_to_json(const IntervalSet& s);
IntervalSet intervals_from_json(const nlohmann::json& j);

nlohmann::json filtration_to_json(const Filtration& f);
std::shared_ptr<const Filtration> filtration_from_json(const nlohmann::json& j);

nlohmann::json process_path_to_json(const AdaptedProcess& p);
AdaptedProcess process_from_json(const nlohmann::json& j,
                                 std::shared_ptr<const Filtration> filtration);

nlohmann::json stopping_to_json(const StoppingTime& t, const std::string& filtration_id);
StoppingTime stopping_from_json(const nlohmann::json& j,
                                std::shared_ptr<const Filtration> filtration);

} // namespace stoneprob
