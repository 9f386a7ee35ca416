#include "stoneprob/jensen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace stoneprob {

double AffineMap::operator()(std::span<const double> args) const {
    if (args.size() != coeffs.size()) throw ArityMismatch("AffineMap: wrong argument count");
    double acc = offset;
    for (std::size_t i = 0; i < coeffs.size(); ++i) acc += coeffs[i] * args[i];
    return acc;
}

ContinuousFunction AffineMap::as_continuous() const {
    AffineMap self = *this;
    double slope = 0.0;
    for (double c : coeffs) slope += std::fabs(c);
    return ContinuousFunction(
        coeffs.size(), [self](std::span<const double> args) { return self(args); },
        [slope](double, double, double eps) {
            return slope > 0.0 ? eps / slope : std::numeric_limits<double>::max();
        });
}

namespace {

constexpr double kMinorantRel = 1e-9;
constexpr double kMinorantAbs = 1e-12;

double tolerance_at(double scale) {
    return std::max(kMinorantAbs, kMinorantRel * std::fabs(scale));
}

std::vector<double> atom_tuple(std::span<const LatticeElement> xs, std::size_t atom) {
    std::vector<double> t(xs.size());
    for (std::size_t j = 0; j < xs.size(); ++j) t[j] = xs[j][atom];
    return t;
}

} // namespace

JensenRecord jensen(const ContinuousFunction& f, std::span<const LatticeElement> xs,
                    const ConditionalExpectation& ce, std::span<const AffineMap> minorants) {
    if (xs.empty()) throw EmptyFamily("jensen: no arguments");
    if (f.arity() != xs.size()) throw ArityMismatch("jensen: function arity vs argument count");
    if (minorants.empty()) throw EmptyFamily("jensen: need at least one minorant");
    for (const AffineMap& m : minorants)
        if (m.coeffs.size() != xs.size()) throw ArityMismatch("jensen: minorant arity");

    std::vector<LatticeElement> averaged;
    averaged.reserve(xs.size());
    for (const LatticeElement& x : xs) averaged.push_back(ce.apply(x));

    const std::size_t atoms = ce.space().atom_count();

    // The finite set of points the proof needs f and the minorants at.
    std::vector<std::vector<double>> x_points, avg_points;
    x_points.reserve(atoms);
    avg_points.reserve(atoms);
    for (std::size_t a = 0; a < atoms; ++a) {
        x_points.push_back(atom_tuple(xs, a));
        avg_points.push_back(atom_tuple(std::span<const LatticeElement>(averaged), a));
    }

    // Every minorant must sit below f at all needed points.
    auto check_minorant = [&](std::size_t m, const std::vector<std::vector<double>>& pts) {
        for (const std::vector<double>& p : pts) {
            double fv = f(p);
            double lv = minorants[m](p);
            if (lv > fv + tolerance_at(std::max(std::fabs(fv), std::fabs(lv))))
                throw MinorantViolation("jensen: minorant " + std::to_string(m) +
                                        " exceeds the function at a needed point");
        }
    };
    for (std::size_t m = 0; m < minorants.size(); ++m) {
        check_minorant(m, x_points);
        check_minorant(m, avg_points);
    }
    // When the family also attains f at the averaged points, the recorded
    // chain really derives the inequality rather than just bounding it.
    bool chain_complete = true;
    for (const std::vector<double>& p : avg_points) {
        double fv = f(p);
        double best = -std::numeric_limits<double>::infinity();
        for (const AffineMap& m : minorants) best = std::max(best, m(p));
        if (best < fv - tolerance_at(std::fabs(fv))) chain_complete = false;
    }

    LatticeElement lhs = ce.apply(compose_multivariate(f, xs));
    LatticeElement rhs = compose_multivariate(f, std::span<const LatticeElement>(averaged));

    JensenRecord record{lhs, rhs, 0.0, {}, chain_complete};
    record.chain.reserve(minorants.size());
    for (const AffineMap& m : minorants) {
        // L(X) and L(F(X)) atom by atom.
        std::vector<double> lx(atoms), lavg(atoms);
        for (std::size_t a = 0; a < atoms; ++a) {
            lx[a] = m(x_points[a]);
            lavg[a] = m(avg_points[a]);
        }
        LatticeElement l_of_x(ce.space(), std::move(lx));
        LatticeElement l_of_avg(ce.space(), std::move(lavg));
        LatticeElement commuted = ce.apply(l_of_x);
        MinorantTrace trace;
        for (std::size_t a = 0; a < atoms; ++a) {
            trace.commutation_gap =
                std::max(trace.commutation_gap, std::fabs(commuted[a] - l_of_avg[a]));
            double slack = lhs[a] - l_of_avg[a];
            if (a == 0 || slack < trace.domination_slack) trace.domination_slack = slack;
        }
        record.chain.push_back(trace);
    }

    record.min_slack = std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < atoms; ++a)
        record.min_slack = std::min(record.min_slack, lhs[a] - rhs[a]);
    return record;
}

SubmartingaleRecord convex_image_submartingale(std::span<const AdaptedProcess> components,
                                               const ContinuousFunction& g,
                                               std::span<const AffineMap> minorants) {
    if (components.empty()) throw EmptyFamily("convex_image_submartingale: no components");
    const AdaptedProcess& lead = components.front();
    std::size_t horizon = lead.horizon();
    for (const AdaptedProcess& c : components) {
        if (!(c.filtration() == lead.filtration()))
            throw FiltrationMismatch("convex_image_submartingale: components on one filtration");
        if (c.horizon() != horizon)
            throw InvalidArgument("convex_image_submartingale: components share a horizon");
        if (classify_process(c) != ProcessClass::Martingale)
            throw InvalidArgument("convex_image_submartingale: components must be martingales");
    }
    if (g.arity() != components.size())
        throw ArityMismatch("convex_image_submartingale: arity vs component count");

    SubmartingaleRecord record;
    record.min_slack = std::numeric_limits<double>::infinity();
    std::vector<LatticeElement> stage_args;
    for (std::size_t t = 1; t <= horizon; ++t) {
        stage_args.clear();
        for (const AdaptedProcess& c : components) stage_args.push_back(c.at(t));
        record.image_path.push_back(
            compose_multivariate(g, std::span<const LatticeElement>(stage_args)));
    }

    // Replay the inequality at every stage pair through the Jensen machinery.
    for (std::size_t t = 1; t <= horizon; ++t) {
        for (std::size_t s = t + 1; s <= horizon; ++s) {
            stage_args.clear();
            for (const AdaptedProcess& c : components) stage_args.push_back(c.at(s));
            JensenRecord jr = jensen(g, std::span<const LatticeElement>(stage_args),
                                     lead.filtration().stage(t), minorants);
            record.min_slack = std::min(record.min_slack, jr.min_slack);
        }
    }
    if (horizon == 1) record.min_slack = 0.0;

    AdaptedProcess image(lead.filtration_ptr(), record.image_path);
    record.classification = classify_process(image);
    record.is_submartingale = record.classification == ProcessClass::Martingale ||
                              record.classification == ProcessClass::Submartingale;
    return record;
}

std::vector<AffineMap> max_minorants(std::size_t arity) {
    if (arity == 0) throw InvalidArgument("max_minorants: arity must be positive");
    std::vector<AffineMap> out(arity);
    for (std::size_t i = 0; i < arity; ++i) {
        out[i].coeffs.assign(arity, 0.0);
        out[i].coeffs[i] = 1.0;
        out[i].offset = 0.0;
    }
    return out;
}

std::vector<AffineMap> l1_minorants(std::span<const std::vector<double>> at_points) {
    if (at_points.empty()) throw EmptyFamily("l1_minorants: no points");
    std::vector<AffineMap> out;
    out.reserve(at_points.size());
    for (const std::vector<double>& p : at_points) {
        AffineMap m;
        m.coeffs.reserve(p.size());
        for (double v : p) m.coeffs.push_back(v > 0.0 ? 1.0 : v < 0.0 ? -1.0 : 0.0);
        m.offset = 0.0;
        out.push_back(std::move(m));
    }
    return out;
}

std::vector<AffineMap> quadratic_minorants(std::span<const double> quad,
                                           std::span<const double> lin, double constant,
                                           std::span<const std::vector<double>> at_points) {
    if (at_points.empty()) throw EmptyFamily("quadratic_minorants: no points");
    for (double q : quad)
        if (q < 0.0) throw InvalidArgument("quadratic_minorants: need convex coefficients");
    std::vector<AffineMap> out;
    out.reserve(at_points.size());
    for (const std::vector<double>& p : at_points) {
        if (p.size() != quad.size()) throw ArityMismatch("quadratic_minorants: point arity");
        // Tangent plane at p: slope 2 q_i p_i + lin_i per coordinate,
        // offset from matching the value at p.
        AffineMap m;
        m.coeffs.resize(p.size());
        m.offset = constant;
        for (std::size_t i = 0; i < p.size(); ++i) {
            m.coeffs[i] = 2.0 * quad[i] * p[i] + lin[i];
            m.offset -= quad[i] * p[i] * p[i];
        }
        out.push_back(std::move(m));
    }
    return out;
}

} // namespace stoneprob
