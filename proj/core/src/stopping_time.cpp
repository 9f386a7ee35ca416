#include "stoneprob/stopping_time.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

namespace stoneprob {

namespace {

void validate_measurable(const Filtration& filtration, const std::vector<StopValue>& values) {
    std::set<StopValue> levels(values.begin(), values.end());
    levels.erase(kNever);
    for (StopValue n : levels) {
        const ConditionalExpectation& stage = filtration.stage(n);
        // {tau = n} must be a union of stage-n blocks: no block may straddle.
        for (const auto& block : stage.blocks()) {
            bool first_in = values[block.front()] == n;
            for (std::size_t atom : block) {
                if ((values[atom] == n) != first_in)
                    throw NotMeasurable("StoppingTime: level set {tau = " + std::to_string(n) +
                                        "} splits a stage-" + std::to_string(n) + " block");
            }
        }
    }
}

} // namespace

StoppingTime::StoppingTime(std::shared_ptr<const Filtration> filtration,
                           std::vector<StopValue> values)
    : filtration_(std::move(filtration)), values_(std::move(values)) {
    if (!filtration_) throw InvalidArgument("StoppingTime: null filtration");
    if (values_.size() != filtration_->space().atom_count())
        throw InvalidArgument("StoppingTime: one value per atom required");
    for (StopValue v : values_)
        if (v == 0) throw InvalidArgument("StoppingTime: values start at 1");
    validate_measurable(*filtration_, values_);
}

StoppingTime StoppingTime::from_element(std::shared_ptr<const Filtration> filtration,
                                        const LatticeElement& element) {
    if (!filtration) throw InvalidArgument("StoppingTime::from_element: null filtration");
    require_same_space(filtration->space(), element.space(), "StoppingTime::from_element");
    std::vector<StopValue> values(element.size());
    for (std::size_t i = 0; i < element.size(); ++i) {
        double v = element[i];
        if (v == extreal::infinity) {
            values[i] = kNever;
            continue;
        }
        if (!(v >= 1.0) || v != std::floor(v) || v >= static_cast<double>(kNever))
            throw InvalidArgument("StoppingTime::from_element: values must be naturals or +inf");
        values[i] = static_cast<StopValue>(v);
    }
    return StoppingTime(std::move(filtration), std::move(values));
}

StoppingTime StoppingTime::constant(std::shared_ptr<const Filtration> filtration, StopValue n) {
    if (!filtration) throw InvalidArgument("StoppingTime::constant: null filtration");
    std::size_t atoms = filtration->space().atom_count();
    return StoppingTime(std::move(filtration), std::vector<StopValue>(atoms, n));
}

bool StoppingTime::never_stops_somewhere() const {
    return std::find(values_.begin(), values_.end(), kNever) != values_.end();
}

StopValue StoppingTime::max_finite_value() const {
    StopValue best = 0;
    for (StopValue v : values_)
        if (v != kNever) best = std::max(best, v);
    return best;
}

bool StoppingTime::is_bounded_by(std::size_t horizon) const {
    for (StopValue v : values_)
        if (v == kNever || v > horizon) return false;
    return true;
}

ClopenSet StoppingTime::level_set(StopValue n) const {
    std::vector<bool> bits(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) bits[i] = values_[i] == n;
    return ClopenSet(space(), std::move(bits));
}

ClopenSet StoppingTime::stopped_by(StopValue n) const {
    std::vector<bool> bits(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i)
        bits[i] = values_[i] != kNever && values_[i] <= n;
    return ClopenSet(space(), std::move(bits));
}

LatticeElement StoppingTime::as_element() const {
    std::vector<double> vals(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i)
        vals[i] = values_[i] == kNever ? extreal::infinity : static_cast<double>(values_[i]);
    return LatticeElement(space(), std::move(vals));
}

void require_same_filtration(const StoppingTime& a, const StoppingTime& b, const char* where) {
    require_same_space(a.space(), b.space(), where);
    if (!(a.filtration() == b.filtration()))
        throw FiltrationMismatch(std::string(where) + ": operands use different filtrations");
}

} // namespace stoneprob
