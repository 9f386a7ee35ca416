#pragma once

#include <vector>

#include "stoneprob/interval_set.hpp"

namespace stoneprob {

// A real step function subordinate to a finite partition of the line:
// breakpoints g_1 < ... < g_n split R into (-inf, g_1], (g_1, g_2], ...,
// (g_{n-1}, g_n], (g_n, inf). values[i] is the value on the piece ending at
// g_i (so values[0] covers (-inf, g_1]) and value_at_infinity covers the
// last, unbounded piece. With no breakpoints this is the constant
// value_at_infinity. Instances are kept canonical: adjacent equal values are
// merged away, so equality of canonical data is equality of functions.
class StepFunction {
public:
    StepFunction(std::vector<double> breakpoints, std::vector<double> values,
                 double value_at_infinity);

    static StepFunction constant(double c);
    static StepFunction indicator(const IntervalSet& s);

    double operator()(double t) const;

    const std::vector<double>& breakpoints() const { return breakpoints_; }
    const std::vector<double>& piece_values() const { return values_; }
    double value_at_infinity() const { return value_at_infinity_; }
    bool is_constant() const { return breakpoints_.empty(); }

    StepFunction add(const StepFunction& other) const;
    StepFunction subtract(const StepFunction& other) const;
    StepFunction scale(double c) const;
    StepFunction negate() const { return scale(-1.0); }
    StepFunction sup(const StepFunction& other) const;
    StepFunction inf(const StepFunction& other) const;
    StepFunction abs() const;
    StepFunction positive_part() const;
    StepFunction negative_part() const;

    // Exact pointwise order; decided on the common refinement, so it really
    // is "f(t) <= g(t) for every real t".
    bool leq(const StepFunction& other) const;

    friend bool operator==(const StepFunction&, const StepFunction&) = default;

    friend StepFunction operator+(const StepFunction& a, const StepFunction& b) { return a.add(b); }
    friend StepFunction operator-(const StepFunction& a, const StepFunction& b) { return a.subtract(b); }
    friend StepFunction operator*(double c, const StepFunction& f) { return f.scale(c); }

private:
    std::vector<double> breakpoints_;
    std::vector<double> values_;
    double value_at_infinity_;
};

// A sequence of step functions increasing pointwise everywhere, the shape fed
// to the monotone layer of the integral. Validated on construction.
class MonotoneStepSequence {
public:
    explicit MonotoneStepSequence(std::vector<StepFunction> terms);

    std::size_t size() const { return terms_.size(); }
    const StepFunction& term(std::size_t k) const { return terms_[k]; }
    const std::vector<StepFunction>& terms() const { return terms_; }

private:
    std::vector<StepFunction> terms_;
};

} // namespace stoneprob
