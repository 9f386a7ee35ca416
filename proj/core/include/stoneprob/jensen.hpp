#pragma once

#include <span>
#include <vector>

#include "stoneprob/adapted_process.hpp"
#include "stoneprob/composition.hpp"
#include "stoneprob/conditional_expectation.hpp"

namespace stoneprob {

// An affine map R^d -> R, t |-> <coeffs, t> + offset. These are the
// supporting functions through which the convexity inequality is proved, and
// the proof is replayed literally: conditional expectations commute with
// affine maps, and a supremum of minorants stays below the function.
struct AffineMap {
    std::vector<double> coeffs;
    double offset = 0.0;

    double operator()(std::span<const double> args) const;
    ContinuousFunction as_continuous() const;
};

// What happened at one minorant while replaying the inequality chain.
struct MinorantTrace {
    // max |F(L(X)) - L(F(X))| over atoms: the commutation step.
    double commutation_gap = 0.0;
    // min over atoms of F(f(X)) - L(F(X)): the domination step, >= 0 up to
    // rounding when L really minorizes f.
    double domination_slack = 0.0;
};

struct JensenRecord {
    LatticeElement lhs; // F(f(X_1, ..., X_d))
    LatticeElement rhs; // f(F(X_1), ..., F(X_d))
    // min over atoms of lhs - rhs; the inequality holds when this is >= 0.
    double min_slack = 0.0;
    std::vector<MinorantTrace> chain;
    // Whether the minorant family attains f at every averaged point, making
    // the recorded chain a complete derivation of the inequality.
    bool chain_complete = false;
};

// Verifies F(f(X)) >= f(F(X)) for convex f described by the given affine
// minorants. The minorants must support f at the needed points: every atom
// tuple of the arguments and of their conditional expectations, and must
// attain f at the averaged tuples; both are validated within tolerance.
JensenRecord jensen(const ContinuousFunction& f, std::span<const LatticeElement> xs,
                    const ConditionalExpectation& ce, std::span<const AffineMap> minorants);

struct SubmartingaleRecord {
    std::vector<LatticeElement> image_path; // g(X_t) per stage
    ProcessClass classification = ProcessClass::None;
    bool is_submartingale = false;
    // Smallest Jensen slack seen across the stage pairs, for the record.
    double min_slack = 0.0;
};

// The convex-image rule: components martingales, g convex (witnessed by
// minorants attaining g at the needed points), then g(X^1_t, ..., X^d_t) is
// a submartingale.
SubmartingaleRecord convex_image_submartingale(std::span<const AdaptedProcess> components,
                                               const ContinuousFunction& g,
                                               std::span<const AffineMap> minorants);

// Built-in minorant families for the convex functions exercised most: they
// attain the function at each requested point.
std::vector<AffineMap> max_minorants(std::size_t arity);
std::vector<AffineMap> l1_minorants(std::span<const std::vector<double>> at_points);
// Tangent planes of sum_i (quad[i] t_i^2 + lin[i] t_i) + constant.
std::vector<AffineMap> quadratic_minorants(std::span<const double> quad,
                                           std::span<const double> lin, double constant,
                                           std::span<const std::vector<double>> at_points);

} // namespace stoneprob
