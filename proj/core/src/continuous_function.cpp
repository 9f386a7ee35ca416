#include "stoneprob/continuous_function.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

namespace stoneprob {

ContinuousFunction::ContinuousFunction(std::size_t arity, Evaluator evaluator)
    : arity_(arity), evaluator_(std::move(evaluator)) {
    if (arity_ == 0) throw InvalidArgument("ContinuousFunction: arity must be positive");
    if (!evaluator_) throw InvalidArgument("ContinuousFunction: evaluator required");
}

ContinuousFunction::ContinuousFunction(std::size_t arity, Evaluator evaluator, GridSpacing spacing)
    : ContinuousFunction(arity, std::move(evaluator)) {
    if (!spacing) throw InvalidArgument("ContinuousFunction: null spacing callback");
    spacing_ = std::move(spacing);
}

ContinuousFunction ContinuousFunction::univariate(std::function<double(double)> fn) {
    return ContinuousFunction(1, [fn = std::move(fn)](std::span<const double> args) {
        return fn(args[0]);
    });
}

ContinuousFunction ContinuousFunction::lipschitz(std::function<double(double)> fn, double constant) {
    if (!(constant >= 0.0) || !std::isfinite(constant))
        throw InvalidArgument("ContinuousFunction::lipschitz: bad constant");
    return ContinuousFunction(
        1, [fn = std::move(fn)](std::span<const double> args) { return fn(args[0]); },
        [constant](double, double, double eps) {
            return constant > 0.0 ? eps / constant : std::numeric_limits<double>::max();
        });
}

double ContinuousFunction::grid_spacing(double lo, double hi, double eps) const {
    if (!spacing_) throw MissingModulus("grid_spacing: no continuity data attached");
    double delta = (*spacing_)(lo, hi, eps);
    if (!(delta > 0.0)) throw CallbackFailure("grid_spacing: spacing callback returned <= 0");
    return delta;
}

double ContinuousFunction::operator()(double t) const {
    return (*this)(std::span<const double>(&t, 1));
}

double ContinuousFunction::operator()(std::span<const double> args) const {
    if (args.size() != arity_) throw ArityMismatch("ContinuousFunction: wrong argument count");
    double value;
    try {
        value = evaluator_(args);
    } catch (const Error&) {
        throw;
    } catch (...) {
        throw CallbackFailure("ContinuousFunction: evaluator threw");
    }
    if (!std::isfinite(value))
        throw CallbackFailure("ContinuousFunction: evaluator produced a non-finite value");
    return value;
}

ContinuousFunction ContinuousFunction::sup(const ContinuousFunction& other) const {
    if (arity_ != other.arity_) throw ArityMismatch("sup: mixed arities");
    ContinuousFunction self = *this;
    ContinuousFunction rhs = other;
    Evaluator eval = [self, rhs](std::span<const double> args) {
        return std::max(self(args), rhs(args));
    };
    // max cannot oscillate more than the worse of its arguments.
    if (spacing_ && other.spacing_) {
        GridSpacing sa = *spacing_, sb = *other.spacing_;
        return ContinuousFunction(arity_, std::move(eval),
                                  [sa, sb](double lo, double hi, double eps) {
                                      return std::min(sa(lo, hi, eps), sb(lo, hi, eps));
                                  });
    }
    return ContinuousFunction(arity_, std::move(eval));
}

ContinuousFunction ContinuousFunction::inf(const ContinuousFunction& other) const {
    if (arity_ != other.arity_) throw ArityMismatch("inf: mixed arities");
    ContinuousFunction self = *this;
    ContinuousFunction rhs = other;
    Evaluator eval = [self, rhs](std::span<const double> args) {
        return std::min(self(args), rhs(args));
    };
    if (spacing_ && other.spacing_) {
        GridSpacing sa = *spacing_, sb = *other.spacing_;
        return ContinuousFunction(arity_, std::move(eval),
                                  [sa, sb](double lo, double hi, double eps) {
                                      return std::min(sa(lo, hi, eps), sb(lo, hi, eps));
                                  });
    }
    return ContinuousFunction(arity_, std::move(eval));
}

ContinuousFunction ContinuousFunction::abs() const {
    ContinuousFunction self = *this;
    Evaluator eval = [self](std::span<const double> args) { return std::fabs(self(args)); };
    if (spacing_) {
        GridSpacing s = *spacing_;
        return ContinuousFunction(arity_, std::move(eval), s);
    }
    return ContinuousFunction(arity_, std::move(eval));
}

ContinuousFunction ContinuousFunction::negate() const {
    ContinuousFunction self = *this;
    Evaluator eval = [self](std::span<const double> args) { return -self(args); };
    if (spacing_) {
        GridSpacing s = *spacing_;
        return ContinuousFunction(arity_, std::move(eval), s);
    }
    return ContinuousFunction(arity_, std::move(eval));
}

ContinuousFunction ContinuousFunction::positive_part() const {
    ContinuousFunction self = *this;
    Evaluator eval = [self](std::span<const double> args) { return std::max(self(args), 0.0); };
    if (spacing_) {
        GridSpacing s = *spacing_;
        return ContinuousFunction(arity_, std::move(eval), s);
    }
    return ContinuousFunction(arity_, std::move(eval));
}

} // namespace stoneprob
