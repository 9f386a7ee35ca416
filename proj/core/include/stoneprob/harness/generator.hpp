#pragma once

#include <cstdint>
#include <memory>
#include <string_view>
#include <vector>

#include "stoneprob/adapted_process.hpp"
#include "stoneprob/filtration.hpp"
#include "stoneprob/harness/function_spec.hpp"
#include "stoneprob/interval_set.hpp"
#include "stoneprob/lattice_element.hpp"
#include "stoneprob/step_function.hpp"
#include "stoneprob/stone_space.hpp"
#include "stoneprob/stopping_time.hpp"

namespace stoneprob::harness {

// splitmix64. Self-contained so streams are reproducible across standard
// library implementations.
class SplitMix {
public:
    explicit SplitMix(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();

    // Uniform draw from [0, n), n >= 1.
    std::uint64_t below(std::uint64_t n);

    // Uniform draw from [lo, hi], inclusive.
    std::int64_t range(std::int64_t lo, std::int64_t hi);

    // True with probability percent / 100.
    bool chance(std::uint32_t percent);

    // A dyadic scalar k * 2^-8 with k in [-2048, 2048]. Sums and products of
    // a few of these are exact in double arithmetic, which is what lets the
    // algebraic suites demand bitwise equality.
    double grid_value();

    // Nonnegative dyadic scalar k * 2^-8 with k in [0, 2048].
    double positive_grid_value();

private:
    std::uint64_t state_;
};

// Deterministic per-trial seed derived from the master seed and the property
// name, so properties can run in any order or in parallel.
std::uint64_t stream_seed(std::uint64_t master, std::string_view property, std::uint64_t trial);

struct GeneratorConfig {
    std::size_t atoms_min = 1;
    std::size_t atoms_max = 16;
    std::size_t horizon_min = 1;
    std::size_t horizon_max = 8;
};

StoneSpace gen_space(SplitMix& rng, const GeneratorConfig& cfg);
std::size_t gen_horizon(SplitMix& rng, const GeneratorConfig& cfg);

LatticeElement gen_element(SplitMix& rng, const StoneSpace& space);

// Nonnegative element in the sup-completion; each atom is +infinity with the
// given percent chance.
LatticeElement gen_positive_sup_element(SplitMix& rng, const StoneSpace& space,
                                        std::uint32_t infinity_percent);

// Strictly positive integer weights drawn from {1, 2, 4, 8}, padded so the
// total is a power of two. Every refinement step of gen_filtration then keeps
// block weight sums at powers of two, making weighted block averages exact.
std::vector<double> gen_weights(SplitMix& rng, std::size_t atoms);

std::shared_ptr<const Filtration> gen_filtration(SplitMix& rng, const StoneSpace& space,
                                                 std::size_t stages);

// Stopping value per atom; level sets are unions of blocks of the matching
// stage. Atoms left unassigned after the last stage become never (infinity)
// with the given percent chance, otherwise they stop at the last stage.
StoppingTime gen_stopping_time(SplitMix& rng, std::shared_ptr<const Filtration> filtration,
                               std::uint32_t never_percent);

// Same construction but every atom stops by the bound.
StoppingTime gen_bounded_stopping_time(SplitMix& rng,
                                       std::shared_ptr<const Filtration> filtration,
                                       std::size_t bound);

AdaptedProcess gen_adapted_process(SplitMix& rng, std::shared_ptr<const Filtration> filtration,
                                   std::size_t horizon);
AdaptedProcess gen_increasing_process(SplitMix& rng,
                                      std::shared_ptr<const Filtration> filtration,
                                      std::size_t horizon);
AdaptedProcess gen_martingale(SplitMix& rng, std::shared_ptr<const Filtration> filtration,
                              std::size_t horizon);

StepFunction gen_step_function(SplitMix& rng);

// Step function with nonnegative values and zero tail.
StepFunction gen_positive_step_function(SplitMix& rng);

IntervalSet gen_interval_set(SplitMix& rng);

FunctionSpec gen_univariate_spec(SplitMix& rng);
FunctionSpec gen_convex_spec(SplitMix& rng, std::size_t arity);

} // namespace stoneprob::harness
