#include "stoneprob/composition.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

namespace stoneprob {

LatticeElement compose_continuous(const ContinuousFunction& f, const LatticeElement& x) {
    if (f.arity() != 1) throw ArityMismatch("compose_continuous: needs a univariate function");
    if (!x.is_finite()) throw NotFinite("compose_continuous: x must be finite");
    std::vector<double> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = f(x[i]);
    return LatticeElement(x.space(), std::move(out));
}

LatticeElement compose_multivariate(const ContinuousFunction& f,
                                    std::span<const LatticeElement> xs) {
    if (xs.empty()) throw EmptyFamily("compose_multivariate: no arguments");
    if (f.arity() != xs.size()) throw ArityMismatch("compose_multivariate: wrong argument count");
    const StoneSpace& space = xs.front().space();
    for (const LatticeElement& x : xs) {
        require_same_space(space, x.space(), "compose_multivariate");
        if (!x.is_finite()) throw NotFinite("compose_multivariate: arguments must be finite");
    }
    std::vector<double> out(space.atom_count());
    std::vector<double> args(xs.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        for (std::size_t j = 0; j < xs.size(); ++j) args[j] = xs[j][i];
        out[i] = f(args);
    }
    return LatticeElement(space, std::move(out));
}

namespace {

// Slack for refinement level k >= 1. Shrinks dyadically until eps/2 takes
// over, so term k undershoots by at most max(eps, 2^(1-k)) <= max(eps, 1/k).
double level_slack(std::size_t level, double eps) {
    return std::max(eps / 2.0, std::ldexp(1.0, -static_cast<int>(level)));
}

bool last_level(std::size_t level, double eps) {
    return std::ldexp(1.0, -static_cast<int>(level)) <= eps / 2.0 || level >= 60;
}

// A staircase under f on [a, b]: `cells` equal cells, each valued at the
// smaller endpoint sample minus slack. (-inf, a] carries the first cell
// value, (b, inf) carries zero.
StepFunction minorant_term(const ContinuousFunction& f, double a, double b, double slack,
                           std::size_t cells) {
    std::vector<double> edges(cells + 1);
    std::vector<double> samples(cells + 1);
    for (std::size_t j = 0; j <= cells; ++j) {
        edges[j] = j == 0      ? a
                   : j == cells ? b
                                : a + (b - a) * static_cast<double>(j) / static_cast<double>(cells);
        samples[j] = f(edges[j]);
    }
    std::vector<double> bps;
    std::vector<double> vals;
    bps.reserve(cells + 1);
    vals.reserve(cells + 1);
    bps.push_back(a);
    vals.push_back(std::min(samples[0], samples[1]) - slack);
    for (std::size_t j = 1; j <= cells; ++j) {
        bps.push_back(edges[j]);
        vals.push_back(std::min(samples[j - 1], samples[j]) - slack);
    }
    return StepFunction(std::move(bps), std::move(vals), 0.0);
}

} // namespace

MonotoneStepSequence step_approximation(const ContinuousFunction& f, double a, double b,
                                        double eps) {
    if (f.arity() != 1) throw ArityMismatch("step_approximation: needs a univariate function");
    if (!(a < b) || !std::isfinite(a) || !std::isfinite(b))
        throw InvalidSupport("step_approximation: need finite a < b");
    if (!(eps > 0.0)) throw InvalidArgument("step_approximation: eps must be positive");

    std::vector<StepFunction> terms;
    std::optional<StepFunction> running;
    for (std::size_t level = 1;; ++level) {
        double slack = level_slack(level, eps);
        double delta = f.grid_spacing(a, b, slack);
        double raw_cells = std::ceil((b - a) / delta);
        if (raw_cells > 1e7) throw InvalidArgument("step_approximation: grid too fine to build");
        std::size_t cells = raw_cells >= 1.0 ? static_cast<std::size_t>(raw_cells) : 1;
        StepFunction term = minorant_term(f, a, b, slack, cells);
        // Running supremum keeps the sequence monotone even though finer
        // grids do not nest.
        running = running ? running->sup(term) : term;
        terms.push_back(*running);
        if (last_level(level, eps)) break;
    }
    return MonotoneStepSequence(std::move(terms));
}

MonotoneStepSequence step_approximation_at(const ContinuousFunction& f,
                                           std::span<const double> points, double eps) {
    if (f.arity() != 1) throw ArityMismatch("step_approximation_at: needs a univariate function");
    if (points.empty()) throw InvalidSupport("step_approximation_at: no marked points");
    if (!(eps > 0.0)) throw InvalidArgument("step_approximation_at: eps must be positive");
    std::vector<double> marks(points.begin(), points.end());
    for (double p : marks)
        if (!std::isfinite(p)) throw InvalidSupport("step_approximation_at: non-finite point");
    std::sort(marks.begin(), marks.end());
    marks.erase(std::unique(marks.begin(), marks.end()), marks.end());

    double lo = marks.front() - 1.0;
    double hi = marks.back();

    // A base level sitting under f at every mark, fixed across levels.
    double floor_value = 0.0;
    for (double p : marks) floor_value = std::min(floor_value, f(p));
    floor_value -= 2.0;

    std::vector<StepFunction> terms;
    std::optional<StepFunction> running;
    for (std::size_t level = 1;; ++level) {
        double slack = level_slack(level, eps);
        double width = std::min(f.grid_spacing(lo, hi, slack), 1.0);
        // One narrow cell (p - width, p] per mark, valued by the smaller
        // endpoint sample minus slack; base value everywhere else.
        std::vector<double> edges;
        edges.reserve(2 * marks.size());
        for (double p : marks) {
            edges.push_back(p - width);
            edges.push_back(p);
        }
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        std::vector<double> vals(edges.size());
        for (std::size_t r = 0; r < edges.size(); ++r) {
            double t = edges[r];
            double best = floor_value;
            for (double p : marks)
                if (p - width < t && t <= p)
                    best = std::max(best, std::min(f(p - width), f(p)) - slack);
            vals[r] = best;
        }
        StepFunction term(std::move(edges), std::move(vals), floor_value);
        running = running ? running->sup(term) : term;
        terms.push_back(*running);
        if (last_level(level, eps)) break;
    }
    return MonotoneStepSequence(std::move(terms));
}

} // namespace stoneprob
