#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "stoneprob/errors.hpp"

namespace stoneprob {

// A continuous real function of d real variables, given by an evaluator
// callback plus optional uniform-continuity data: a grid spacing delta for
// each bounding box and eps such that the oscillation of f over any box cell
// of side delta stays below eps. The spacing is what the step-approximation
// machinery consumes; functions without it can still be composed pointwise.
class ContinuousFunction {
public:
    using Evaluator = std::function<double(std::span<const double>)>;
    // spacing(lo, hi, eps) -> delta valid on [lo, hi]^d.
    using GridSpacing = std::function<double(double, double, double)>;

    ContinuousFunction(std::size_t arity, Evaluator evaluator);
    ContinuousFunction(std::size_t arity, Evaluator evaluator, GridSpacing spacing);

    static ContinuousFunction univariate(std::function<double(double)> fn);
    // Convenience for Lipschitz functions: spacing eps / L.
    static ContinuousFunction lipschitz(std::function<double(double)> fn, double constant);

    std::size_t arity() const { return arity_; }
    bool has_continuity_data() const { return spacing_.has_value(); }
    double grid_spacing(double lo, double hi, double eps) const;

    // Evaluation wraps the callback: exceptions and non-finite outputs
    // surface as CallbackFailure, never as silent values.
    double operator()(double t) const;
    double operator()(std::span<const double> args) const;

    ContinuousFunction sup(const ContinuousFunction& other) const;
    ContinuousFunction inf(const ContinuousFunction& other) const;
    ContinuousFunction abs() const;
    ContinuousFunction negate() const;
    ContinuousFunction positive_part() const;

private:
    std::size_t arity_;
    Evaluator evaluator_;
    std::optional<GridSpacing> spacing_;
};

} // namespace stoneprob
