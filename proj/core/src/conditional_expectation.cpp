#include "stoneprob/conditional_expectation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace stoneprob {

namespace {

// Sorted blocks, sorted within: one canonical form per partition.
std::vector<std::vector<std::size_t>> canonical_blocks(const StoneSpace& space,
                                                       std::vector<std::vector<std::size_t>> blocks) {
    std::vector<bool> seen(space.atom_count(), false);
    for (auto& block : blocks) {
        if (block.empty()) throw InvalidArgument("ConditionalExpectation: empty block");
        std::sort(block.begin(), block.end());
        for (std::size_t a : block) {
            if (a >= space.atom_count())
                throw InvalidArgument("ConditionalExpectation: atom index out of range");
            if (seen[a]) throw InvalidArgument("ConditionalExpectation: atom in two blocks");
            seen[a] = true;
        }
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end())
        throw InvalidArgument("ConditionalExpectation: blocks must cover every atom");
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return blocks;
}

std::vector<double> checked_weights(const StoneSpace& space, std::vector<double> weights) {
    if (weights.size() != space.atom_count())
        throw InvalidArgument("ConditionalExpectation: one weight per atom required");
    for (double w : weights)
        if (!std::isfinite(w) || !(w > 0.0))
            throw InvalidArgument("ConditionalExpectation: weights must be strictly positive");
    return weights;
}

} // namespace

ConditionalExpectation::ConditionalExpectation(StoneSpace space,
                                               std::vector<std::vector<std::size_t>> blocks,
                                               std::vector<double> weights)
    : space_(space),
      blocks_(canonical_blocks(space, std::move(blocks))),
      weights_(checked_weights(space, std::move(weights))),
      block_of_(space.atom_count()) {
    for (std::size_t b = 0; b < blocks_.size(); ++b)
        for (std::size_t a : blocks_[b]) block_of_[a] = b;
}

ConditionalExpectation ConditionalExpectation::coarsest(const StoneSpace& space,
                                                        std::vector<double> weights) {
    std::vector<std::size_t> all(space.atom_count());
    std::iota(all.begin(), all.end(), 0);
    return ConditionalExpectation(space, {all}, std::move(weights));
}

ConditionalExpectation ConditionalExpectation::finest(const StoneSpace& space,
                                                      std::vector<double> weights) {
    std::vector<std::vector<std::size_t>> singletons;
    singletons.reserve(space.atom_count());
    for (std::size_t a = 0; a < space.atom_count(); ++a) singletons.push_back({a});
    return ConditionalExpectation(space, std::move(singletons), std::move(weights));
}

LatticeElement ConditionalExpectation::apply(const LatticeElement& x) const {
    require_same_space(space_, x.space(), "ConditionalExpectation::apply");
    if (!x.is_finite()) throw NotFinite("ConditionalExpectation::apply: x must be finite");
    std::vector<double> out(x.size());
    for (const auto& block : blocks_) {
        double first = x[block.front()];
        bool constant = std::all_of(block.begin(), block.end(),
                                    [&](std::size_t a) { return x[a] == first; });
        double value;
        if (constant) {
            value = first;
        } else {
            double mass = 0.0;
            double acc = 0.0;
            for (std::size_t a : block) {
                mass += weights_[a];
                acc += weights_[a] * x[a];
            }
            value = acc / mass;
        }
        for (std::size_t a : block) out[a] = value;
    }
    return LatticeElement(space_, std::move(out));
}

bool ConditionalExpectation::fixes(const LatticeElement& x) const {
    require_same_space(space_, x.space(), "ConditionalExpectation::fixes");
    for (const auto& block : blocks_) {
        double first = x[block.front()];
        for (std::size_t a : block)
            if (x[a] != first) return false;
    }
    return true;
}

bool ConditionalExpectation::refines(const ConditionalExpectation& coarser) const {
    require_same_space(space_, coarser.space_, "ConditionalExpectation::refines");
    for (const auto& block : blocks_) {
        std::size_t target = coarser.block_of_[block.front()];
        for (std::size_t a : block)
            if (coarser.block_of_[a] != target) return false;
    }
    return true;
}

} // namespace stoneprob
