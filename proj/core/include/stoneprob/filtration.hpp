#pragma once

#include <cstddef>
#include <vector>

#include "stoneprob/conditional_expectation.hpp"

namespace stoneprob {

// A discrete filtration: conditional expectations F_1, ..., F_T over one
// space and one weight vector, with stage t+1 refining stage t. Then
// F_s F_t = F_t F_s = F_s for s <= t, the commuting-projection form of the
// tower property. Stages are addressed 1-based; beyond T the filtration is
// extended constantly, stage(t) = stage(T) for t > T.
class Filtration {
public:
    Filtration(StoneSpace space, std::vector<double> weights,
               std::vector<std::vector<std::vector<std::size_t>>> stage_blocks);

    const StoneSpace& space() const { return stages_.front().space(); }
    const std::vector<double>& weights() const { return stages_.front().weights(); }
    std::size_t stage_count() const { return stages_.size(); }

    const ConditionalExpectation& stage(std::size_t t) const;

    friend bool operator==(const Filtration& a, const Filtration& b) {
        return a.stages_ == b.stages_;
    }

private:
    std::vector<ConditionalExpectation> stages_;
};

} // namespace stoneprob
