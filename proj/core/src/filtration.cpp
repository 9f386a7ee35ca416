#include "stoneprob/filtration.hpp"

namespace stoneprob {

Filtration::Filtration(StoneSpace space, std::vector<double> weights,
                       std::vector<std::vector<std::vector<std::size_t>>> stage_blocks) {
    if (stage_blocks.empty()) throw InvalidArgument("Filtration: need at least one stage");
    stages_.reserve(stage_blocks.size());
    for (auto& blocks : stage_blocks)
        stages_.emplace_back(space, std::move(blocks), weights);
    for (std::size_t t = 0; t + 1 < stages_.size(); ++t)
        if (!stages_[t + 1].refines(stages_[t]))
            throw NotRefining("Filtration: stage " + std::to_string(t + 2) +
                              " does not refine stage " + std::to_string(t + 1));
}

const ConditionalExpectation& Filtration::stage(std::size_t t) const {
    if (t == 0) throw InvalidArgument("Filtration::stage: stages are addressed from 1");
    return stages_[std::min(t, stages_.size()) - 1];
}

} // namespace stoneprob
