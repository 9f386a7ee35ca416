#pragma once

#include <cmath>
#include <limits>

#include "stoneprob/errors.hpp"

namespace stoneprob::extreal {

// Scalar arithmetic on [-inf, +inf] with the conventions used throughout:
// 0 * inf = 0, and inf - inf is an error rather than NaN.

inline constexpr double infinity = std::numeric_limits<double>::infinity();

inline bool is_finite(double v) { return std::isfinite(v); }

inline void reject_nan(double v, const char* where) {
    if (std::isnan(v)) throw InvalidArgument(std::string(where) + ": NaN is not a lattice value");
}

inline double add(double a, double b) {
    if ((a == infinity && b == -infinity) || (a == -infinity && b == infinity))
        throw UndefinedArithmetic("inf - inf has no value");
    return a + b;
}

inline double subtract(double a, double b) {
    if ((a == infinity && b == infinity) || (a == -infinity && b == -infinity))
        throw UndefinedArithmetic("inf - inf has no value");
    return a - b;
}

inline double multiply(double a, double b) {
    if (a == 0.0 || b == 0.0) return 0.0;
    return a * b;
}

} // namespace stoneprob::extreal
