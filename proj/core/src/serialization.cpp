#include "stoneprob/serialization.hpp"

#include <cmath>
#include <string>

namespace stoneprob {

using nlohmann::json;

json scalar_to_json(double v) {
    if (v == extreal::infinity) return "inf";
    if (v == -extreal::infinity) return "-inf";
    if (std::isnan(v)) throw InvalidArgument("scalar_to_json: NaN has no serial form");
    return v;
}

double scalar_from_json(const json& j) {
    if (j.is_string()) {
        const std::string& s = j.get_ref<const std::string&>();
        if (s == "inf") return extreal::infinity;
        if (s == "-inf") return -extreal::infinity;
        throw InvalidArgument("scalar_from_json: unknown string value '" + s + "'");
    }
    if (!j.is_number()) throw InvalidArgument("scalar_from_json: expected number or inf string");
    return j.get<double>();
}

json element_to_json(const LatticeElement& x) {
    json values = json::array();
    for (std::size_t i = 0; i < x.size(); ++i) values.push_back(scalar_to_json(x[i]));
    return json{{"atoms", x.size()}, {"values", std::move(values)}};
}

LatticeElement element_from_json(const json& j) {
    if (!j.is_object() || !j.contains("atoms") || !j.contains("values"))
        throw InvalidArgument("element_from_json: need atoms and values");
    if (!j.at("atoms").is_number_unsigned() || !j.at("values").is_array())
        throw InvalidArgument("element_from_json: atoms must be a count and values a list");
    std::size_t atoms = j.at("atoms").get<std::size_t>();
    std::vector<double> values;
    values.reserve(j.at("values").size());
    for (const json& v : j.at("values")) values.push_back(scalar_from_json(v));
    if (values.size() != atoms) throw InvalidArgument("element_from_json: atom count mismatch");
    return LatticeElement(StoneSpace(atoms), std::move(values));
}

json step_to_json(const StepFunction& f) {
    json bps = json::array();
    for (double b : f.breakpoints()) bps.push_back(b);
    json vals = json::array();
    for (double v : f.piece_values()) vals.push_back(scalar_to_json(v));
    return json{{"breakpoints", std::move(bps)},
                {"values", std::move(vals)},
                {"value_at_infinity", scalar_to_json(f.value_at_infinity())}};
}

StepFunction step_from_json(const json& j) {
    if (!j.is_object() || !j.contains("breakpoints") || !j.contains("values") ||
        !j.contains("value_at_infinity"))
        throw InvalidArgument("step_from_json: need breakpoints, values, value_at_infinity");
    std::vector<double> bps;
    for (const json& b : j.at("breakpoints")) bps.push_back(scalar_from_json(b));
    std::vector<double> vals;
    for (const json& v : j.at("values")) vals.push_back(scalar_from_json(v));
    return StepFunction(std::move(bps), std::move(vals), scalar_from_json(j.at("value_at_infinity")));
}

json intervals_to_json(const IntervalSet& s) {
    json out = json::array();
    for (const Interval& p : s.pieces()) {
        if (p.lo == -extreal::infinity && p.hi == extreal::infinity) {
            // The whole line has no single-piece kind; split below any point.
            out.push_back(json{{"kind", "ray_down"}, {"b", 0.0}});
            out.push_back(json{{"kind", "ray_up"}, {"a", 0.0}});
        } else if (p.lo == -extreal::infinity) {
            out.push_back(json{{"kind", "ray_down"}, {"b", p.hi}});
        } else if (p.hi == extreal::infinity) {
            out.push_back(json{{"kind", "ray_up"}, {"a", p.lo}});
        } else {
            out.push_back(json{{"kind", "left_open_right_closed"}, {"a", p.lo}, {"b", p.hi}});
        }
    }
    return out;
}

IntervalSet intervals_from_json(const json& j) {
    if (!j.is_array()) throw InvalidArgument("intervals_from_json: expected a list");
    std::vector<Interval> pieces;
    for (const json& item : j) {
        const std::string kind = item.at("kind").get<std::string>();
        if (kind == "left_open_right_closed") {
            pieces.push_back({item.at("a").get<double>(), item.at("b").get<double>()});
        } else if (kind == "ray_up") {
            pieces.push_back({item.at("a").get<double>(), extreal::infinity});
        } else if (kind == "ray_down") {
            pieces.push_back({-extreal::infinity, item.at("b").get<double>()});
        } else {
            throw InvalidArgument("intervals_from_json: unknown kind '" + kind + "'");
        }
    }
    return IntervalSet(std::move(pieces));
}

json filtration_to_json(const Filtration& f) {
    json weights = json::array();
    for (double w : f.weights()) weights.push_back(w);
    json stages = json::array();
    for (std::size_t t = 1; t <= f.stage_count(); ++t) {
        json blocks = json::array();
        for (const auto& block : f.stage(t).blocks()) {
            json atoms = json::array();
            for (std::size_t a : block) atoms.push_back(a);
            blocks.push_back(std::move(atoms));
        }
        stages.push_back(std::move(blocks));
    }
    return json{{"weights", std::move(weights)}, {"stages", std::move(stages)}};
}

std::shared_ptr<const Filtration> filtration_from_json(const json& j) {
    if (!j.is_object() || !j.contains("weights") || !j.contains("stages"))
        throw InvalidArgument("filtration_from_json: need weights and stages");
    std::vector<double> weights = j.at("weights").get<std::vector<double>>();
    std::vector<std::vector<std::vector<std::size_t>>> stages;
    for (const json& stage : j.at("stages")) {
        std::vector<std::vector<std::size_t>> blocks;
        for (const json& block : stage) blocks.push_back(block.get<std::vector<std::size_t>>());
        stages.push_back(std::move(blocks));
    }
    StoneSpace space(weights.size());
    return std::make_shared<const Filtration>(space, std::move(weights), std::move(stages));
}

json process_path_to_json(const AdaptedProcess& p) {
    json path = json::array();
    for (const LatticeElement& x : p.path()) {
        json values = json::array();
        for (std::size_t i = 0; i < x.size(); ++i) values.push_back(scalar_to_json(x[i]));
        path.push_back(std::move(values));
    }
    return path;
}

AdaptedProcess process_from_json(const json& j, std::shared_ptr<const Filtration> filtration) {
    if (!j.is_array()) throw InvalidArgument("process_from_json: expected a list of value arrays");
    if (!filtration) throw InvalidArgument("process_from_json: null filtration");
    std::vector<LatticeElement> path;
    for (const json& entry : j) {
        std::vector<double> values;
        values.reserve(entry.size());
        for (const json& v : entry) values.push_back(scalar_from_json(v));
        path.emplace_back(filtration->space(), std::move(values));
    }
    return AdaptedProcess(std::move(filtration), std::move(path));
}

json stopping_to_json(const StoppingTime& t, const std::string& filtration_id) {
    json values = json::array();
    for (StopValue v : t.values()) {
        if (v == kNever)
            values.push_back("inf");
        else
            values.push_back(v);
    }
    return json{{"values", std::move(values)}, {"filtration", filtration_id}};
}

StoppingTime stopping_from_json(const json& j, std::shared_ptr<const Filtration> filtration) {
    if (!j.is_object() || !j.contains("values"))
        throw InvalidArgument("stopping_from_json: need values");
    std::vector<StopValue> values;
    for (const json& v : j.at("values")) {
        if (v.is_string()) {
            if (v.get_ref<const std::string&>() != "inf")
                throw InvalidArgument("stopping_from_json: unknown string value");
            values.push_back(kNever);
        } else {
            if (!v.is_number_unsigned())
                throw InvalidArgument("stopping_from_json: values must be naturals or \"inf\"");
            values.push_back(v.get<StopValue>());
        }
    }
    return StoppingTime(std::move(filtration), std::move(values));
}

} // namespace stoneprob
