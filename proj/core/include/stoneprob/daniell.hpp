#pragma once

#include <cstddef>

#include "stoneprob/interval_set.hpp"
#include "stoneprob/spectral_system.hpp"
#include "stoneprob/step_function.hpp"

namespace stoneprob {

// The element-valued measure of the threshold family: for a single piece
// (a, b] this is A_b - A_a as indicators, extended additively over a
// disjoint union of pieces. Values are indicators of clopen sets.
LatticeElement mu_measure(const SpectralSystem& sys, const IntervalSet& s);

// The elementary integral of a step function against the threshold family of
// x: sum of piece values times piece measures, the bounded tail piece
// weighted by the measure of (g_n, inf). Equals the pointwise composite
// f(x) coordinate by coordinate, exactly.
LatticeElement daniell_step(const StepFunction& f, const SpectralSystem& sys);
LatticeElement daniell_step(const StepFunction& f, const LatticeElement& x);

// The monotone extension: the supremum of the elementary integrals of the
// first `horizon` terms, taken in the sup completion. Coordinates may come
// out +inf when the terms grow without bound there.
LatticeElement daniell_monotone(const MonotoneStepSequence& seq, const LatticeElement& x,
                                std::size_t horizon);

} // namespace stoneprob
