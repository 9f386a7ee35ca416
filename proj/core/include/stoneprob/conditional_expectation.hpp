#pragma once

#include <cstddef>
#include <vector>

#include "stoneprob/lattice_element.hpp"
#include "stoneprob/stone_space.hpp"

namespace stoneprob {

// A conditional expectation on C(K) for a finite K: averaging over the blocks
// of a partition of the atoms against strictly positive weights. This is a
// positive projection fixing constants, and every such projection with a
// strictly positive fixed weight function has this form.
class ConditionalExpectation {
public:
    ConditionalExpectation(StoneSpace space, std::vector<std::vector<std::size_t>> blocks,
                           std::vector<double> weights);

    // One block: averaging against the whole weight vector.
    static ConditionalExpectation coarsest(const StoneSpace& space, std::vector<double> weights);
    // Singleton blocks: the identity operator.
    static ConditionalExpectation finest(const StoneSpace& space, std::vector<double> weights);

    const StoneSpace& space() const { return space_; }
    const std::vector<std::vector<std::size_t>>& blocks() const { return blocks_; }
    const std::vector<double>& weights() const { return weights_; }
    std::size_t block_of(std::size_t atom) const { return block_of_[atom]; }

    // Weighted block averages. Blocks where x is constant short-circuit to
    // that constant, so fixed points reproduce bit for bit.
    LatticeElement apply(const LatticeElement& x) const;

    // Whether x is constant on every block, i.e. a fixed point of apply.
    bool fixes(const LatticeElement& x) const;

    // Every block of this partition sits inside a block of the other.
    bool refines(const ConditionalExpectation& coarser) const;

    friend bool operator==(const ConditionalExpectation& a, const ConditionalExpectation& b) {
        return a.space_ == b.space_ && a.blocks_ == b.blocks_ && a.weights_ == b.weights_;
    }

private:
    StoneSpace space_;
    std::vector<std::vector<std::size_t>> blocks_;
    std::vector<double> weights_;
    std::vector<std::size_t> block_of_;
};

} // namespace stoneprob
