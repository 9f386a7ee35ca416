#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "stoneprob/clopen_set.hpp"
#include "stoneprob/filtration.hpp"
#include "stoneprob/lattice_element.hpp"

namespace stoneprob {

// Time values for stopping: 1, 2, ... and never.
using StopValue = std::uint32_t;
inline constexpr StopValue kNever = UINT32_MAX;

// A stopping time over a filtration: per atom a value in {1, 2, ...} or
// never. Construction validates measurability: each level set {tau = n} must
// be a union of blocks of stage n. Equivalently, as an element of the sup
// completion tau has range in N u {inf} with stage-n-measurable level
// indicators.
class StoppingTime {
public:
    StoppingTime(std::shared_ptr<const Filtration> filtration, std::vector<StopValue> values);

    // Reads an extended-real element with values in {1, 2, ...} u {+inf}.
    static StoppingTime from_element(std::shared_ptr<const Filtration> filtration,
                                     const LatticeElement& element);

    static StoppingTime constant(std::shared_ptr<const Filtration> filtration, StopValue n);

    const Filtration& filtration() const { return *filtration_; }
    const std::shared_ptr<const Filtration>& filtration_ptr() const { return filtration_; }
    const StoneSpace& space() const { return filtration_->space(); }

    StopValue operator[](std::size_t atom) const { return values_[atom]; }
    const std::vector<StopValue>& values() const { return values_; }

    bool never_stops_somewhere() const;
    // Largest finite value, 0 when every atom maps to never.
    StopValue max_finite_value() const;
    bool is_bounded_by(std::size_t horizon) const;

    ClopenSet level_set(StopValue n) const;  // {tau = n}
    ClopenSet stopped_by(StopValue n) const; // {tau <= n}

    // The sup-completion view: values as doubles, never as +inf.
    LatticeElement as_element() const;

    friend bool operator==(const StoppingTime& a, const StoppingTime& b) {
        return *a.filtration_ == *b.filtration_ && a.values_ == b.values_;
    }

private:
    std::shared_ptr<const Filtration> filtration_;
    std::vector<StopValue> values_;
};

void require_same_filtration(const StoppingTime& a, const StoppingTime& b, const char* where);

} // namespace stoneprob
