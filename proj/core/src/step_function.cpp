#include "stoneprob/step_function.hpp"

#include <algorithm>
#include <cmath>

namespace stoneprob {

namespace {

struct Canonical {
    std::vector<double> breakpoints;
    std::vector<double> values;
    double value_at_infinity;
};

Canonical canonicalize(std::vector<double> breakpoints, std::vector<double> values,
                       double value_at_infinity) {
    if (breakpoints.size() != values.size())
        throw InvalidArgument("StepFunction: need one value per breakpoint");
    for (double b : breakpoints) {
        if (!extreal::is_finite(b)) throw InvalidArgument("StepFunction: breakpoints must be finite");
    }
    for (double v : values) extreal::reject_nan(v, "StepFunction");
    extreal::reject_nan(value_at_infinity, "StepFunction");
    if (!std::is_sorted(breakpoints.begin(), breakpoints.end()) ||
        std::adjacent_find(breakpoints.begin(), breakpoints.end()) != breakpoints.end())
        throw InvalidArgument("StepFunction: breakpoints must be strictly increasing");
    Canonical c;
    c.value_at_infinity = value_at_infinity;
    // Merge right to left: a piece equal to its right neighbor loses its
    // breakpoint, the neighbor absorbs it.
    for (std::size_t i = breakpoints.size(); i-- > 0;) {
        double next = i + 1 < values.size() ? values[i + 1] : value_at_infinity;
        if (values[i] == next) {
            breakpoints.erase(breakpoints.begin() + static_cast<std::ptrdiff_t>(i));
            values.erase(values.begin() + static_cast<std::ptrdiff_t>(i));
        }
    }
    c.breakpoints = std::move(breakpoints);
    c.values = std::move(values);
    return c;
}

} // namespace

StepFunction::StepFunction(std::vector<double> breakpoints, std::vector<double> values,
                           double value_at_infinity)
    : value_at_infinity_(0.0) {
    Canonical c = canonicalize(std::move(breakpoints), std::move(values), value_at_infinity);
    breakpoints_ = std::move(c.breakpoints);
    values_ = std::move(c.values);
    value_at_infinity_ = c.value_at_infinity;
}

StepFunction StepFunction::constant(double c) { return StepFunction({}, {}, c); }

StepFunction StepFunction::indicator(const IntervalSet& s) {
    std::vector<double> bps;
    std::vector<double> vals;
    for (const Interval& p : s.pieces()) {
        if (p.lo != -extreal::infinity) {
            bps.push_back(p.lo);
            vals.push_back(0.0);
        }
        if (p.hi != extreal::infinity) {
            bps.push_back(p.hi);
            vals.push_back(1.0);
        }
    }
    bool open_ended = !s.pieces().empty() && s.pieces().back().hi == extreal::infinity;
    return StepFunction(std::move(bps), std::move(vals), open_ended ? 1.0 : 0.0);
}

double StepFunction::operator()(double t) const {
    // Piece index: first breakpoint >= t covers t, since pieces are (.., g_i].
    auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), t);
    if (it == breakpoints_.end()) return value_at_infinity_;
    return values_[static_cast<std::size_t>(it - breakpoints_.begin())];
}

namespace {

// Values of f and g on every piece of their common refinement, leftmost piece
// first, ending with the pair of tail values.
template <typename Fn>
StepFunction combine(const StepFunction& f, const StepFunction& g, Fn&& op) {
    std::vector<double> bps;
    bps.reserve(f.breakpoints().size() + g.breakpoints().size());
    std::merge(f.breakpoints().begin(), f.breakpoints().end(), g.breakpoints().begin(),
               g.breakpoints().end(), std::back_inserter(bps));
    bps.erase(std::unique(bps.begin(), bps.end()), bps.end());
    std::vector<double> vals;
    vals.reserve(bps.size());
    for (double b : bps) vals.push_back(op(f(b), g(b)));
    return StepFunction(std::move(bps), std::move(vals),
                        op(f.value_at_infinity(), g.value_at_infinity()));
}

} // namespace

StepFunction StepFunction::add(const StepFunction& other) const {
    return combine(*this, other, [](double a, double b) { return a + b; });
}

StepFunction StepFunction::subtract(const StepFunction& other) const {
    return combine(*this, other, [](double a, double b) { return a - b; });
}

StepFunction StepFunction::scale(double c) const {
    extreal::reject_nan(c, "StepFunction::scale");
    std::vector<double> vals(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) vals[i] = c * values_[i];
    return StepFunction(breakpoints_, std::move(vals), c * value_at_infinity_);
}

StepFunction StepFunction::sup(const StepFunction& other) const {
    return combine(*this, other, [](double a, double b) { return std::max(a, b); });
}

StepFunction StepFunction::inf(const StepFunction& other) const {
    return combine(*this, other, [](double a, double b) { return std::min(a, b); });
}

StepFunction StepFunction::abs() const {
    std::vector<double> vals(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) vals[i] = std::fabs(values_[i]);
    return StepFunction(breakpoints_, std::move(vals), std::fabs(value_at_infinity_));
}

StepFunction StepFunction::positive_part() const { return sup(constant(0.0)); }

StepFunction StepFunction::negative_part() const { return negate().sup(constant(0.0)); }

bool StepFunction::leq(const StepFunction& other) const {
    bool ok = true;
    combine(*this, other, [&ok](double a, double b) {
        if (!(a <= b)) ok = false;
        return 0.0;
    });
    return ok;
}

MonotoneStepSequence::MonotoneStepSequence(std::vector<StepFunction> terms) : terms_(std::move(terms)) {
    if (terms_.empty()) throw EmptyFamily("MonotoneStepSequence: need at least one term");
    for (std::size_t k = 0; k + 1 < terms_.size(); ++k)
        if (!terms_[k].leq(terms_[k + 1]))
            throw NotMonotone("MonotoneStepSequence: terms must increase pointwise");
}

} // namespace stoneprob
