#pragma once

#include <span>

#include "stoneprob/continuous_function.hpp"
#include "stoneprob/lattice_element.hpp"
#include "stoneprob/step_function.hpp"

namespace stoneprob {

// The functional calculus: f(x) computed atom by atom. On a finite Stone
// space this IS the integral of f against the threshold family of x; the
// step-function route exists separately so the two can be compared.
LatticeElement compose_continuous(const ContinuousFunction& f, const LatticeElement& x);

// f(x_1, ..., x_d) for a d-variate f and d elements over one space.
LatticeElement compose_multivariate(const ContinuousFunction& f,
                                    std::span<const LatticeElement> xs);

// An increasing sequence of step minorants of f on [a, b]: term k stays
// below f there and closes the gap to at most max(eps, 1/k), the last term
// to at most eps. Built from grid infima on dyadic refinements; needs
// continuity data.
MonotoneStepSequence step_approximation(const ContinuousFunction& f, double a, double b,
                                        double eps);

// Same construction localized at finitely many marked points: cheap when only
// the values of f at those points matter (for composing with an element whose
// range they are). Minorant and gap guarantees hold at the marked points.
MonotoneStepSequence step_approximation_at(const ContinuousFunction& f,
                                           std::span<const double> points, double eps);

} // namespace stoneprob
