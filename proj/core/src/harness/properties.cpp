#include "stoneprob/harness/properties.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "stoneprob/band_projection.hpp"
#include "stoneprob/clopen_set.hpp"
#include "stoneprob/composition.hpp"
#include "stoneprob/daniell.hpp"
#include "stoneprob/errors.hpp"
#include "stoneprob/jensen.hpp"
#include "stoneprob/serialization.hpp"
#include "stoneprob/stopped_process.hpp"
#include "stoneprob/stopping_algebra.hpp"

namespace stoneprob::harness {

namespace {

double diff_metric(double a, double b) {
    if (a == b) return 0.0;
    if (!std::isfinite(a) || !std::isfinite(b)) return extreal::infinity;
    return std::fabs(a - b);
}

double max_abs_diff(const LatticeElement& a, const LatticeElement& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        m = std::max(m, diff_metric(a[i], b[i]));
    }
    return m;
}

struct Checker {
    TrialOutcome out;

    void require(bool ok) {
        if (!ok) out.passed = false;
    }
    void equal(const LatticeElement& a, const LatticeElement& b) {
        const double d = max_abs_diff(a, b);
        if (d > 0.0) {
            out.passed = false;
            out.deviation = std::max(out.deviation, d);
        }
    }
    // Records the deviation and fails the trial when it exceeds the bound.
    void bounded(double dev, double bound) {
        out.deviation = std::max(out.deviation, dev);
        if (!(dev <= bound)) out.passed = false;
    }
};

std::uint64_t count_infinite(const LatticeElement& x) {
    std::uint64_t n = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == extreal::infinity) ++n;
    }
    return n;
}

std::vector<double> sorted_distinct_values(const LatticeElement& x) {
    std::set<double> seen(x.values().begin(), x.values().end());
    return std::vector<double>(seen.begin(), seen.end());
}

// Independent measurability scan: each finite level set must take whole
// blocks of its stage. Deliberately separate from the constructor's check.
std::size_t measurability_faults(const StoppingTime& t) {
    std::size_t faults = 0;
    std::set<StopValue> levels;
    for (StopValue v : t.values()) {
        if (v != kNever) levels.insert(v);
    }
    for (StopValue n : levels) {
        for (const auto& block : t.filtration().stage(n).blocks()) {
            std::size_t hit = 0;
            for (std::size_t a : block) {
                if (t[a] == n) ++hit;
            }
            if (hit != 0 && hit != block.size()) ++faults;
        }
    }
    return faults;
}

// ---- core: lattice-laws ----

Fixture gen_lattice_laws(SplitMix& rng, const GeneratorConfig& cfg) {
    Fixture f;
    const StoneSpace space = gen_space(rng, cfg);
    f.atoms = space.atom_count();
    f.elements = {gen_element(rng, space), gen_element(rng, space), gen_element(rng, space)};
    return f;
}

TrialOutcome check_lattice_laws(const Fixture& f, const Tolerance&) {
    const auto& x = f.elements.at(0);
    const auto& y = f.elements.at(1);
    const auto& z = f.elements.at(2);
    const LatticeElement zero = LatticeElement::zero(x.space());
    Checker c;
    c.equal(x.sup(y), y.sup(x));
    c.equal(x.inf(y), y.inf(x));
    c.equal(x.sup(y).sup(z), x.sup(y.sup(z)));
    c.equal(x.inf(y).inf(z), x.inf(y.inf(z)));
    c.equal(x.sup(x.inf(y)), x);
    c.equal(x.inf(x.sup(y)), x);
    c.equal(x.add(y.sup(z)), x.add(y).sup(x.add(z)));
    c.equal(x.sup(y).add(x.inf(y)), x.add(y));
    c.equal(x.positive_part().subtract(x.negative_part()), x);
    c.equal(x.abs(), x.sup(x.negate()));
    c.equal(x.positive_part().inf(x.negative_part()), zero);
    return c.out;
}

// ---- core: f-algebra ----

Fixture gen_f_algebra(SplitMix& rng, const GeneratorConfig& cfg) {
    Fixture f;
    const StoneSpace space = gen_space(rng, cfg);
    f.atoms = space.atom_count();
    f.elements = {gen_element(rng, space), gen_element(rng, space), gen_element(rng, space)};
    std::vector<double> ind(space.atom_count());
    for (double& v : ind) v = rng.chance(50) ? 1.0 : 0.0;
    f.elements.emplace_back(space, std::move(ind));
    return f;
}

TrialOutcome check_f_algebra(const Fixture& f, const Tolerance&) {
    const auto& x = f.elements.at(0);
    const auto& y = f.elements.at(1);
    const auto& z = f.elements.at(2);
    const auto& u = f.elements.at(3);
    const StoneSpace& space = x.space();
    const LatticeElement unit = LatticeElement::unit(space);
    const LatticeElement zero = LatticeElement::zero(space);
    Checker c;
    c.equal(x.multiply(y), y.multiply(x));
    c.equal(x.multiply(y).multiply(z), x.multiply(y.multiply(z)));
    c.equal(x.add(y).multiply(z), x.multiply(z).add(y.multiply(z)));
    c.equal(x.multiply(unit), x);
    c.require(zero.leq(x.multiply(x)));

    std::vector<bool> member(space.atom_count());
    for (std::size_t i = 0; i < space.atom_count(); ++i) member[i] = u[i] == 1.0;
    const BandProjection p{ClopenSet(space, member)};
    c.equal(p.apply(x), u.multiply(x));
    c.equal(p.apply(p.apply(x)), p.apply(x));
    c.equal(p.apply(x).add(p.complement().apply(x)), x);
    c.equal(p.apply(x.multiply(y)), p.apply(x).multiply(y));
    return c.out;
}

// ---- core: sup-completion-decomposition ----

Fixture gen_sup_completion_decomposition(SplitMix& rng, const GeneratorConfig& cfg) {
    Fixture f;
    const StoneSpace space = gen_space(rng, cfg);
    f.atoms = space.atom_count();
    f.elements = {gen_positive_sup_element(rng, space, 30)};
    return f;
}

TrialOutcome check_sup_completion_decomposition(const Fixture& f, const Tolerance&) {
    const auto& u = f.elements.at(0);
    const LatticeElement zero = LatticeElement::zero(u.space());
    Checker c;
    const auto [fin, infpart] = finite_infinite_decomposition(u);
    c.require(fin.is_finite());
    for (std::size_t i = 0; i < infpart.size(); ++i) {
        c.require(infpart[i] == 0.0 || infpart[i] == extreal::infinity);
    }
    c.equal(fin.add(infpart), u);
    c.equal(fin.multiply(infpart), zero);
    c.equal(band_projection_of(infpart).apply(u), infpart);
    if (u.is_finite()) {
        c.equal(u.subtract(u), zero);
    } else {
        // inf - inf must refuse rather than produce a value.
        bool threw = false;
        try {
            (void)u.subtract(u);
        } catch (const UndefinedArithmetic&) {
            threw = true;
        }
        c.require(threw);
    }
    c.out.infinite_outputs = count_infinite(u);
    return c.out;
}

// ---- core: sup-family-divergence ----

Fixture gen_sup_family_divergence(SplitMix& rng, const GeneratorConfig& cfg) {
    Fixture f;
    const StoneSpace space = gen_space(rng, cfg);
    f.atoms = space.atom_count();
    const std::size_t k = 2 + rng.below(4);
    for (std::size_t j = 0; j < k; ++j) {
        f.elements.push_back(gen_positive_sup_element(rng, space, 20));
    }
    return f;
}

TrialOutcome check_sup_family_divergence(const Fixture& f, const Tolerance&) {
    Checker c;
    const std::span<const LatticeElement> family(f.elements);
    const LatticeElement s = sup_family(family);
    for (std::size_t i = 0; i < s.size(); ++i) {
        double expected = family[0][i];
        bool any_inf = false;
        for (const auto& m : family) {
            expected = std::max(expected, m[i]);
            any_inf = any_inf || m[i] == extreal::infinity;
        }
        c.require(s[i] == expected);
        c.require((s[i] == extreal::infinity) == any_inf);
    }
    LatticeElement running = family[0];
    for (std::size_t j = 1; j < family.size(); ++j) {
        const LatticeElement next = sup_family(family.first(j + 1));
        c.require(running.leq(next));
        running = next;
    }
    c.require(running == s);
    c.out.infinite_outputs = count_infinite(s);
    return c.out;
}

// ---- spectral: lattice-homomorphism ----

Fixture gen_lattice_homomorphism(SplitMix& rng, const GeneratorConfig& cfg) {
    Fixture f;
    const StoneSpace space = gen_space(rng, cfg);
    f.atoms = space.atom_count();
    f.elements = {gen_element(rng, space)};
    f.functions = {gen_univariate_spec(rng), gen_univariate_spec(rng)};
    return f;
}

TrialOutcome check_lattice_homomorphism(const Fixture& f, const Tolerance&) {
    const auto& x = f.elements.at(0);
    const ContinuousFunction F = f.functions.at(0).materialize();
    const ContinuousFunction G = f.functions.at(1).materialize();
    const LatticeElement fx = compose_continuous(F, x);
    const LatticeElement gx = compose_continuous(G, x);
    Checker c;
    c.equal(compose_continuous(F.sup(G), x), fx.sup(gx));
    c.equal(compose_continuous(F.inf(G), x), fx.inf(gx));
    c.equal(compose_continuous(F.abs(), x), fx.abs());
    c.equal(compose_continuous(F.negate(), x), fx.negate());
    c.equal(compose_continuous(F.positive_part(), x), fx.positive_part());
    return c.out;
}

// ---- spectral: daniell-linearity ----

Fixture gen_daniell_linearity(SplitMix& rng, const GeneratorConfig& cfg) {
    Fixture f;
    const StoneSpace space = gen_space(rng, cfg);
    f.atoms = space.atom_count();
    f.elements = {gen_element(rng, space)};
    f.steps = {gen_step_function(rng), gen_step_function(rng)};
    // The third set starts exactly at an atom value of x, probing the open
    // left endpoint where an off-by-one would hide.
    f.intervals = {gen_interval_set(rng), gen_interval_set(rng),
                   IntervalSet::left_open_right_closed(f.elements[0][0],
                                                       f.elements[0][0] + 1.0)};
    f.scalars = {rng.grid_value()};
    return f;
}

TrialOutcome check_daniell_linearity(const Fixture& f, const Tolerance&) {
    const auto& x = f.elements.at(0);
    const auto& fs = f.steps.at(0);
    const auto& gs = f.steps.at(1);
    const double scalar = f.scalars.at(0);
    const SpectralSystem sys(x);
    Checker c;

    c.require(mu_membership_disagreements(sys, f.intervals,
                                          [](const SpectralSystem& s, const IntervalSet& iv) {
                                              return mu_measure(s, iv);
                                          }) == 0);

    const IntervalSet s1 = f.intervals.at(0);
    const IntervalSet d2 = f.intervals.at(1).intersect(s1.complement());
    c.equal(mu_measure(sys, s1.unite(d2)), mu_measure(sys, s1).add(mu_measure(sys, d2)));

    c.equal(daniell_step(fs.add(gs), sys), daniell_step(fs, sys).add(daniell_step(gs, sys)));
    c.equal(daniell_step(fs.scale(scalar), sys), daniell_step(fs, sys).scale(scalar));
    c.require(LatticeElement::zero(x.space()).leq(daniell_step(fs.positive_part(), sys)));

    const LatticeElement ifs = daniell_step(fs, sys);
    for (std::size_t i = 0; i < x.size(); ++i) {
        c.require(ifs[i] == fs(x[i]));
    }
    return c.out;
}

// ---- spectral: daniell-axiom ----

Fixture gen_daniell_axiom(SplitMix& rng, const GeneratorConfig& cfg) {
    Fixture f;
    const StoneSpace space = gen_space(rng, cfg);
    f.atoms = space.atom_count();
    f.elements = {gen_element(rng, space)};
    const StepFunction base = gen_positive_step_function(rng);
    const std::size_t m = std::size_t{1} << (1 + rng.below(3));
    std::vector<StepFunction> seq;
    switch (rng.below(3)) {
    case 0: {
        // Shave a fixed dyadic amount per step and clamp at zero.
        const double delta = 8.0 / static_cast<double>(m);
        for (std::size_t j = 0; j <= m; ++j) {
            seq.push_back(
                base.add(StepFunction::constant(-static_cast<double>(j) * delta)).positive_part());
        }
        break;
    }
    case 1: {
        // Scale down along a dyadic ramp.
        for (std::size_t j = 0; j <= m; ++j) {
            seq.push_back(base.scale(static_cast<double>(m - j) / static_cast<double>(m)));
        }
        break;
    }
    default: {
        // Shrink the support from the left until it vanishes.
        const double width = 18.0 / static_cast<double>(m);
        for (std::size_t j = 0; j < m; ++j) {
            const double a = -9.0 + static_cast<double>(j) * width;
            const StepFunction cap =
                StepFunction::indicator(IntervalSet::left_open_right_closed(a, 9.0)).scale(9.0);
            seq.push_back(base.inf(cap));
        }
        seq.push_back(StepFunction::constant(0.0));
        break;
    }
    }
    f.sequences = {std::move(seq)};
    return f;
}

TrialOutcome check_daniell_axiom(const Fixture& f, const Tolerance&) {
    const auto& x = f.elements.at(0);
    const auto& seq = f.sequences.at(0);
    const SpectralSystem sys(x);
    const LatticeElement zero = LatticeElement::zero(x.space());
    Checker c;
    c.require(!seq.empty());
    for (std::size_t j = 0; j + 1 < seq.size(); ++j) {
        c.require(seq[j + 1].leq(seq[j]));
    }
    c.require(seq.back() == StepFunction::constant(0.0));

    LatticeElement prev = daniell_step(seq.front(), sys);
    for (std::size_t i = 0; i < x.size(); ++i) c.require(prev[i] == seq.front()(x[i]));
    for (std::size_t j = 1; j < seq.size(); ++j) {
        const LatticeElement cur = daniell_step(seq[j], sys);
        c.require(cur.leq(prev));
        for (std::size_t i = 0; i < x.size(); ++i) c.require(cur[i] == seq[j](x[i]));
        prev = cur;
    }
    c.equal(prev, zero);
    return c.out;
}

// ---- spectral: uo-convergence ----

Fixture gen_uo_convergence(SplitMix& rng, const GeneratorConfig& cfg) {
    Fixture f;
    const StoneSpace space = gen_space(rng, cfg);
    f.atoms = space.atom_count();
    f.elements = {gen_element(rng, space)};
    f.functions = {gen_univariate_spec(rng)};
    f.scalars = {static_cast<double>(rng.range(-256, 256)) * 0x1p-8};
    f.naturals = {6 + rng.below(10)};
    return f;
}

TrialOutcome check_uo_convergence(const Fixture& f, const Tolerance& tol) {
    const auto& x = f.elements.at(0);
    const auto& spec = f.functions.at(0);
    const double r = f.scalars.at(0);
    const std::size_t m = static_cast<std::size_t>(f.naturals.at(0));
    const ContinuousFunction F = spec.materialize();
    const LatticeElement y = compose_continuous(F, x);

    double lo = x[0], hi = x[0];
    for (std::size_t i = 0; i < x.size(); ++i) {
        lo = std::min(lo, x[i]);
        hi = std::max(hi, x[i]);
    }
    const double slope = spec.lipschitz_bound(lo - 1.0, hi + 1.0);

    Checker c;
    for (std::size_t k = 1; k <= m; ++k) {
        const double h = r * std::ldexp(1.0, -static_cast<int>(k));
        const LatticeElement xk = x.add(LatticeElement::constant(x.space(), h));
        const LatticeElement yk = compose_continuous(F, xk);
        for (std::size_t i = 0; i < x.size(); ++i) {
            c.bounded(std::fabs(yk[i] - y[i]) - slope * std::fabs(h), tol.absolute);
        }
    }
    return c.out;
}

// ---- spectral: calculus-agreement ----

Fixture gen_calculus_agreement(SplitMix& rng, const GeneratorConfig& cfg) {
    Fixture f;
    const StoneSpace space = gen_space(rng, cfg);
    f.atoms = space.atom_count();
    f.elements = {gen_element(rng, space)};
    f.functions = {gen_univariate_spec(rng)};
    f.steps = {gen_step_function(rng)};
    return f;
}

TrialOutcome check_calculus_agreement(const Fixture& f, const Tolerance&) {
    constexpr double kEps = 0x1p-20;
    constexpr double kBound = 0x1p-18;
    const auto& x = f.elements.at(0);
    const ContinuousFunction F = f.functions.at(0).materialize();
    const std::vector<double> marks = sorted_distinct_values(x);

    const MonotoneStepSequence up = step_approximation_at(F.positive_part(), marks, kEps);
    const MonotoneStepSequence down =
        step_approximation_at(F.negate().positive_part(), marks, kEps);
    const LatticeElement ip = daniell_monotone(up, x, up.size());
    const LatticeElement in = daniell_monotone(down, x, down.size());
    const LatticeElement integral = ip.subtract(in);
    const LatticeElement direct = compose_continuous(F, x);

    Checker c;
    for (std::size_t i = 0; i < x.size(); ++i) {
        c.bounded(std::fabs(integral[i] - direct[i]), kBound);
    }

    const auto& g = f.steps.at(0);
    const LatticeElement ig = daniell_step(g, x);
    for (std::size_t i = 0; i < x.size(); ++i) {
        c.require(ig[i] == g(x[i]));
    }
    return c.out;
}

// ---- probability: strict-positivity ----

Fixture gen_strict_positivity(SplitMix& rng, const GeneratorConfig& cfg) {
    Fixture f;
    const StoneSpace space = gen_space(rng, cfg);
    f.atoms = space.atom_count();
    f.filtration = gen_filtration(rng, space, gen_horizon(rng, cfg));
    f.naturals = {1 + rng.below(f.filtration->stage_count())};
    std::vector<double> pos(space.atom_count());
    for (double& v : pos) v = rng.positive_grid_value();
    if (std::all_of(pos.begin(), pos.end(), [](double v) { return v == 0.0; })) {
        pos[0] = 0x1p-8;
    }
    f.elements = {LatticeElement(space, std::move(pos)), gen_element(rng, space)};
    return f;
}

TrialOutcome check_strict_positivity(const Fixture& f, const Tolerance&) {
    const auto& x = f.elements.at(0);
    const auto& y = f.elements.at(1);
    const ConditionalExpectation& ce =
        f.filtration->stage(static_cast<std::size_t>(f.naturals.at(0)));
    const LatticeElement unit = LatticeElement::unit(x.space());
    const LatticeElement zero = LatticeElement::zero(x.space());
    Checker c;
    const LatticeElement p = ce.apply(x);
    c.require(zero.leq(p));
    for (const auto& block : ce.blocks()) {
        bool positive_somewhere = false;
        for (std::size_t a : block) positive_somewhere = positive_somewhere || x[a] > 0.0;
        if (positive_somewhere) {
            for (std::size_t a : block) c.require(p[a] > 0.0);
        }
    }
    c.equal(ce.apply(unit), unit);
    c.equal(ce.apply(p), p);
    c.equal(ce.apply(x.add(y)), p.add(ce.apply(y)));
    c.require(p.leq(ce.apply(x.add(y.abs()))));
    return c.out;
}

// ---- probability: tower-property ----

Fixture gen_tower_property(SplitMix& rng, const GeneratorConfig& cfg) {
    Fixture f;
    const StoneSpace space = gen_space(rng, cfg);
    f.atoms = space.atom_count();
    const std::size_t horizon = gen_horizon(rng, cfg);
    f.filtration = gen_filtration(rng, space, horizon);
    const std::size_t s = 1 + rng.below(horizon);
    const std::size_t t = s + rng.below(horizon - s + 1);
    f.naturals = {s, t, horizon};
    f.elements = {gen_element(rng, space), gen_element(rng, space), gen_element(rng, space)};
    return f;
}

TrialOutcome check_tower_property(const Fixture& f, const Tolerance&) {
    const std::size_t s = static_cast<std::size_t>(f.naturals.at(0));
    const std::size_t t = static_cast<std::size_t>(f.naturals.at(1));
    const std::size_t horizon = static_cast<std::size_t>(f.naturals.at(2));
    const auto& fs = f.filtration->stage(s);
    const auto& ft = f.filtration->stage(t);
    const auto& x = f.elements.at(0);
    const StoneSpace& space = x.space();
    Checker c;
    c.equal(fs.apply(ft.apply(x)), fs.apply(x));
    c.equal(ft.apply(fs.apply(x)), fs.apply(x));

    const ApplyFn real_apply = [](const ConditionalExpectation& ce, const LatticeElement& v) {
        return ce.apply(v);
    };
    c.require(average_disagreements(ft, f.elements, real_apply) == 0);
    c.require(average_disagreements(fs, f.elements, real_apply) == 0);

    for (std::size_t a = 0; a < space.atom_count(); ++a) {
        std::vector<double> e(space.atom_count(), 0.0);
        e[a] = 1.0;
        const LatticeElement basis(space, std::move(e));
        c.equal(fs.apply(ft.apply(basis)), fs.apply(basis));
    }

    const AdaptedProcess doob = doob_martingale(f.filtration, x, horizon);
    c.require(classify_process(doob) == ProcessClass::Martingale);
    return c.out;
}

// ---- probability: range-regularity ----

Fixture gen_range_regularity(SplitMix& rng, const GeneratorConfig& cfg) {
    Fixture f;
    const StoneSpace space = gen_space(rng, cfg);
    f.atoms = space.atom_count();
    f.filtration = gen_filtration(rng, space, gen_horizon(rng, cfg));
    const std::size_t t = 1 + rng.below(f.filtration->stage_count());
    f.naturals = {t};
    const auto& ce = f.filtration->stage(t);
    f.elements = {ce.apply(gen_element(rng, space)), ce.apply(gen_element(rng, space)),
                  gen_element(rng, space)};
    return f;
}

TrialOutcome check_range_regularity(const Fixture& f, const Tolerance&) {
    const auto& ce = f.filtration->stage(static_cast<std::size_t>(f.naturals.at(0)));
    const auto& a = f.elements.at(0);
    const auto& b = f.elements.at(1);
    const auto& h = f.elements.at(2);
    Checker c;
    c.require(ce.fixes(a) && ce.fixes(b));
    const LatticeElement s = a.sup(b);
    const LatticeElement i = a.inf(b);
    c.require(ce.fixes(s) && ce.fixes(i));
    c.equal(ce.apply(s), s);
    c.equal(ce.apply(i), i);
    c.require(ce.fixes(a.add(b)));
    c.require(ce.fixes(a.multiply(b)));
    const LatticeElement r = ce.apply(h);
    c.require(ce.fixes(r));
    c.equal(ce.apply(r), r);
    return c.out;
}

// ---- probability: jensen-slack ----

std::vector<std::vector<double>> atom_tuples(std::span<const LatticeElement> xs) {
    std::vector<std::vector<double>> tuples;
    if (xs.empty()) return tuples;
    for (std::size_t i = 0; i < xs[0].size(); ++i) {
        std::vector<double> t(xs.size());
        for (std::size_t j = 0; j < xs.size(); ++j) t[j] = xs[j][i];
        tuples.push_back(std::move(t));
    }
    return tuples;
}

Fixture gen_jensen_slack(SplitMix& rng, const GeneratorConfig& cfg) {
    Fixture f;
    const StoneSpace space = gen_space(rng, cfg);
    f.atoms = space.atom_count();
    const std::size_t horizon = gen_horizon(rng, cfg);
    f.filtration = gen_filtration(rng, space, horizon);
    const std::size_t d = 1 + rng.below(3);
    const std::size_t t = 1 + rng.below(horizon);
    f.naturals = {t, d, horizon};
    f.functions = {gen_convex_spec(rng, d)};
    for (std::size_t j = 0; j < d; ++j) f.elements.push_back(gen_element(rng, space));
    for (std::size_t j = 0; j < d; ++j) {
        f.paths.push_back(gen_martingale(rng, f.filtration, horizon).path());
    }
    return f;
}

TrialOutcome check_jensen_slack(const Fixture& f, const Tolerance& tol) {
    const std::size_t t = static_cast<std::size_t>(f.naturals.at(0));
    const std::size_t d = static_cast<std::size_t>(f.naturals.at(1));
    const auto& spec = f.functions.at(0);
    const auto& ce = f.filtration->stage(t);
    const ContinuousFunction F = spec.materialize();
    const std::span<const LatticeElement> xs(f.elements.data(), d);

    std::vector<LatticeElement> averaged;
    for (const auto& x : xs) averaged.push_back(ce.apply(x));
    std::vector<std::vector<double>> needed = atom_tuples(xs);
    for (auto& tup : atom_tuples(averaged)) needed.push_back(std::move(tup));

    Checker c;
    const std::vector<AffineMap> minorants = spec.minorants(needed);
    const JensenRecord rec = jensen(F, xs, ce, minorants);
    c.bounded(-rec.min_slack, tol.absolute);
    c.require(rec.chain_complete);
    for (const auto& trace : rec.chain) {
        c.bounded(trace.commutation_gap, tol.relative);
        c.bounded(-trace.domination_slack, tol.absolute);
    }
    if (spec.kind == FunctionKind::Affine) {
        c.bounded(std::fabs(rec.min_slack), tol.absolute);
    }

    std::vector<AdaptedProcess> components;
    for (const auto& path : f.paths) {
        components.emplace_back(f.filtration, path);
    }
    std::vector<std::vector<double>> needed2;
    for (std::size_t stage = 1; stage <= components.front().horizon(); ++stage) {
        std::vector<LatticeElement> at_stage;
        for (const auto& comp : components) at_stage.push_back(comp.at(stage));
        for (auto& tup : atom_tuples(at_stage)) needed2.push_back(std::move(tup));
    }
    const SubmartingaleRecord image =
        convex_image_submartingale(components, F, spec.minorants(needed2));
    c.require(image.is_submartingale);
    c.bounded(-image.min_slack, tol.absolute);
    return c.out;
}

// ---- stopping: representation-roundtrip ----

Fixture gen_representation_roundtrip(SplitMix& rng, const GeneratorConfig& cfg) {
    Fixture f;
    const StoneSpace space = gen_space(rng, cfg);
    f.atoms = space.atom_count();
    f.filtration = gen_filtration(rng, space, gen_horizon(rng, cfg));
    f.stop_values = {gen_stopping_time(rng, f.filtration, 25).values()};
    f.naturals = {rng.below(3)};
    return f;
}

TrialOutcome check_representation_roundtrip(const Fixture& f, const Tolerance&) {
    const StoppingTime tau(f.filtration, f.stop_values.at(0));
    const std::size_t extra = static_cast<std::size_t>(f.naturals.at(0));
    Checker c;

    const std::vector<BandProjection> bands = to_projections(tau);
    c.require(bands.size() == tau.max_finite_value());
    c.require(from_projections(bands, f.filtration) == tau);

    const std::size_t len = bands.size() + extra;
    const std::vector<BandProjection> wide = to_projections(tau, len);
    for (std::size_t n = 1; n <= len; ++n) {
        c.require(wide[n - 1].band_support() == tau.stopped_by(static_cast<StopValue>(n)));
    }
    const StoppingTime tau2 = from_projections(wide, f.filtration);
    c.require(tau2 == tau);
    const std::vector<BandProjection> again = to_projections(tau2, len);
    c.require(again.size() == wide.size());
    for (std::size_t n = 0; n < wide.size(); ++n) {
        c.require(again[n] == wide[n]);
    }
    return c.out;
}

// ---- stopping: level-set-recovery ----

Fixture gen_level_set_recovery(SplitMix& rng, const GeneratorConfig& cfg) {
    Fixture f;
    const StoneSpace space = gen_space(rng, cfg);
    f.atoms = space.atom_count();
    const std::size_t m = 1 + rng.below(4);
    f.naturals = {m};
    std::vector<double> values(space.atom_count());
    for (double& v : values) {
        const std::uint64_t roll = rng.below(m + 2);
        if (roll < m) {
            v = static_cast<double>(roll + 1);
        } else if (roll == m) {
            v = 0.0;
        } else {
            v = extreal::infinity;
        }
    }
    f.elements = {LatticeElement(space, std::move(values))};
    return f;
}

TrialOutcome check_level_set_recovery(const Fixture& f, const Tolerance&) {
    const auto& u = f.elements.at(0);
    const std::size_t m = static_cast<std::size_t>(f.naturals.at(0));
    Checker c;
    const auto [fin, infpart] = finite_infinite_decomposition(u);
    const SpectralSystem sys(fin);

    const ClopenSet inf_support = band_projection_of(infpart).band_support();
    for (std::size_t i = 0; i < u.size(); ++i) {
        c.require(inf_support.contains(i) == (u[i] == extreal::infinity));
    }

    LatticeElement rebuilt = infpart;
    for (std::size_t n = 1; n <= m; ++n) {
        const LatticeElement chi = mu_measure(
            sys, IntervalSet::left_open_right_closed(static_cast<double>(n) - 1.0,
                                                     static_cast<double>(n)));
        for (std::size_t i = 0; i < u.size(); ++i) {
            c.require(chi[i] == (u[i] == static_cast<double>(n) ? 1.0 : 0.0));
        }
        rebuilt = rebuilt.add(chi.scale(static_cast<double>(n)));
    }
    c.equal(rebuilt, u);
    c.out.infinite_outputs = count_infinite(u);
    return c.out;
}

// ---- stopping: closure-algebra ----

Fixture gen_closure_algebra(SplitMix& rng, const GeneratorConfig& cfg) {
    Fixture f;
    const StoneSpace space = gen_space(rng, cfg);
    f.atoms = space.atom_count();
    f.filtration = gen_filtration(rng, space, gen_horizon(rng, cfg));
    const StoppingTime a = gen_stopping_time(rng, f.filtration, 25);
    const StoppingTime b = gen_stopping_time(rng, f.filtration, 20);
    f.stop_values = {a.values(), b.values()};
    const std::size_t k = 2 + rng.below(3);
    for (std::size_t j = 0; j < k; ++j) {
        f.stop_values.push_back(gen_stopping_time(rng, f.filtration, 20).values());
    }
    const std::size_t nk_len = std::max<std::size_t>(a.max_finite_value(), 1);
    std::vector<std::uint64_t> naturals{k};
    std::uint64_t current = 1 + rng.below(2);
    for (std::size_t j = 0; j < nk_len; ++j) {
        naturals.push_back(current);
        current += 1 + rng.below(2);
    }
    f.naturals = std::move(naturals);
    return f;
}

TrialOutcome check_closure_algebra(const Fixture& f, const Tolerance&) {
    const StoppingTime a(f.filtration, f.stop_values.at(0));
    const StoppingTime b(f.filtration, f.stop_values.at(1));
    const std::size_t k = static_cast<std::size_t>(f.naturals.at(0));
    std::vector<StoppingTime> family;
    for (std::size_t j = 0; j < k; ++j) {
        family.emplace_back(f.filtration, f.stop_values.at(2 + j));
    }
    std::vector<StopValue> nk;
    for (std::size_t j = 1; j < f.naturals.size(); ++j) {
        nk.push_back(static_cast<StopValue>(f.naturals[j]));
    }

    Checker c;
    const StoppingTime join = st_join(a, b);
    const StoppingTime meet = st_meet(a, b);
    const StoppingTime plus = st_plus(a, b);
    for (std::size_t i = 0; i < a.values().size(); ++i) {
        c.require(join[i] == std::max(a[i], b[i]));
        c.require(meet[i] == std::min(a[i], b[i]));
        const StopValue expected_plus =
            (a[i] == kNever || b[i] == kNever) ? kNever : a[i] + b[i];
        c.require(plus[i] == expected_plus);
    }
    c.require(measurability_faults(join) == 0);
    c.require(measurability_faults(meet) == 0);
    c.require(measurability_faults(plus) == 0);

    const StoppingTime fam_sup = st_extremum(family, StopExtremum::Sup);
    const StoppingTime fam_inf = st_extremum(family, StopExtremum::Inf);
    for (std::size_t i = 0; i < a.values().size(); ++i) {
        StopValue hi = family[0][i], lo = family[0][i];
        for (const auto& ft : family) {
            hi = std::max(hi, ft[i]);
            lo = std::min(lo, ft[i]);
        }
        c.require(fam_sup[i] == hi);
        c.require(fam_inf[i] == lo);
    }
    c.require(measurability_faults(fam_sup) == 0);
    c.require(measurability_faults(fam_inf) == 0);

    const StoppingTime tc = time_change(a, nk);
    for (std::size_t i = 0; i < a.values().size(); ++i) {
        const StopValue expected = a[i] == kNever ? kNever : nk[a[i] - 1];
        c.require(tc[i] == expected);
        c.require(tc[i] >= a[i] || tc[i] == kNever);
    }
    c.require(measurability_faults(tc) == 0);

    const StopValue top = std::max(a.max_finite_value(), b.max_finite_value());
    for (StopValue n = 1; n <= top + 1; ++n) {
        c.require(join.stopped_by(n) == a.stopped_by(n).intersect(b.stopped_by(n)));
        c.require(meet.stopped_by(n) == a.stopped_by(n).unite(b.stopped_by(n)));
    }
    return c.out;
}

// ---- stopping: stopped-element-consistency ----

Fixture gen_stopped_element_consistency(SplitMix& rng, const GeneratorConfig& cfg) {
    Fixture f;
    const StoneSpace space = gen_space(rng, cfg);
    f.atoms = space.atom_count();
    const std::size_t horizon = gen_horizon(rng, cfg);
    f.filtration = gen_filtration(rng, space, horizon);
    f.naturals = {horizon};
    f.paths = {gen_adapted_process(rng, f.filtration, horizon).path(),
               gen_increasing_process(rng, f.filtration, horizon).path()};
    f.stop_values = {gen_bounded_stopping_time(rng, f.filtration, horizon).values(),
                     gen_bounded_stopping_time(rng, f.filtration, horizon).values(),
                     gen_bounded_stopping_time(rng, f.filtration, horizon).values()};
    return f;
}

TrialOutcome check_stopped_element_consistency(const Fixture& f, const Tolerance&) {
    const std::size_t horizon = static_cast<std::size_t>(f.naturals.at(0));
    const AdaptedProcess proc(f.filtration, f.paths.at(0));
    const AdaptedProcess inc(f.filtration, f.paths.at(1));
    const StoppingTime tau(f.filtration, f.stop_values.at(0));
    const StoppingTime s2(f.filtration, f.stop_values.at(1));
    const StoppingTime s3(f.filtration, f.stop_values.at(2));

    Checker c;
    const LatticeElement pw = stopped_element_pointwise(proc, tau);
    const LatticeElement bd = stopped_element_via_bands(proc, tau);
    c.equal(pw, bd);
    for (std::size_t i = 0; i < pw.size(); ++i) {
        c.require(pw[i] == proc.at(tau[i])[i]);
    }

    const AdaptedProcess frozen = stopped_process(proc, tau);
    for (std::size_t n = 1; n <= horizon; ++n) {
        for (std::size_t i = 0; i < pw.size(); ++i) {
            const std::size_t cut = std::min<std::size_t>(tau[i], n);
            c.require(frozen.at(n)[i] == proc.at(cut)[i]);
        }
    }
    c.equal(frozen.at(horizon), pw);

    const std::vector<StoppingTime> family{tau, s2, s3};
    const IncreasingIdentityRecord rec = increasing_process_identities(inc, tau, s2, family);
    c.require(rec.all_hold());
    c.bounded(rec.max_deviation, 0.0);
    return c.out;
}

// ---- stopping: debut-roundtrip ----

Fixture gen_debut_roundtrip(SplitMix& rng, const GeneratorConfig& cfg) {
    Fixture f;
    const StoneSpace space = gen_space(rng, cfg);
    f.atoms = space.atom_count();
    f.filtration = gen_filtration(rng, space, gen_horizon(rng, cfg));
    f.stop_values = {gen_stopping_time(rng, f.filtration, 30).values()};
    return f;
}

TrialOutcome check_debut_roundtrip(const Fixture& f, const Tolerance&) {
    const StoppingTime tau(f.filtration, f.stop_values.at(0));
    Checker c;
    const auto [proc, recovered] = debut_roundtrip(tau);
    c.require(recovered == tau);
    c.require(proc.indicator_valued());
    c.require(proc.is_increasing());
    for (std::size_t n = 1; n <= proc.horizon(); ++n) {
        for (std::size_t i = 0; i < tau.values().size(); ++i) {
            const double expected = tau[i] <= n ? 1.0 : 0.0;
            c.require(proc.at(n)[i] == expected);
        }
    }

    const std::vector<std::pair<AdaptedProcess, StoppingTime>> cases{{proc, tau}};
    c.require(first_entry_disagreements(
                  cases, [](const AdaptedProcess& p) { return hitting_time(p); }) == 0);

    std::uint64_t never = 0;
    for (StopValue v : tau.values()) {
        if (v == kNever) ++never;
    }
    c.out.infinite_outputs = never;
    return c.out;
}

constexpr PropertyDef kRegistry[] = {
    {"lattice-laws", "vector-lattice-identities", "core", gen_lattice_laws, check_lattice_laws},
    {"f-algebra", "multiplication-and-bands", "core", gen_f_algebra, check_f_algebra},
    {"sup-completion-decomposition", "finite-infinite-split", "core",
     gen_sup_completion_decomposition, check_sup_completion_decomposition},
    {"sup-family-divergence", "directed-sup-blowup", "core", gen_sup_family_divergence,
     check_sup_family_divergence},
    {"lattice-homomorphism", "composition-preserves-lattice-ops", "spectral",
     gen_lattice_homomorphism, check_lattice_homomorphism},
    {"daniell-linearity", "elementary-integral-linearity", "spectral", gen_daniell_linearity,
     check_daniell_linearity},
    {"daniell-axiom", "monotone-continuity-at-zero", "spectral", gen_daniell_axiom,
     check_daniell_axiom},
    {"uo-convergence", "order-convergence-under-composition", "spectral", gen_uo_convergence,
     check_uo_convergence},
    {"calculus-agreement", "integral-equals-composition", "spectral", gen_calculus_agreement,
     check_calculus_agreement},
    {"strict-positivity", "positive-projection", "probability", gen_strict_positivity,
     check_strict_positivity},
    {"tower-property", "nested-averaging", "probability", gen_tower_property,
     check_tower_property},
    {"range-regularity", "fixed-space-is-sublattice", "probability", gen_range_regularity,
     check_range_regularity},
    {"jensen-slack", "convexity-gap", "probability", gen_jensen_slack, check_jensen_slack},
    {"representation-roundtrip", "projection-family-encoding", "stopping",
     gen_representation_roundtrip, check_representation_roundtrip},
    {"level-set-recovery", "band-decomposition-of-times", "stopping", gen_level_set_recovery,
     check_level_set_recovery},
    {"closure-algebra", "stopping-closure-operations", "stopping", gen_closure_algebra,
     check_closure_algebra},
    {"stopped-element-consistency", "evaluation-at-a-time", "stopping",
     gen_stopped_element_consistency, check_stopped_element_consistency},
    {"debut-roundtrip", "first-entry-inverse", "stopping", gen_debut_roundtrip,
     check_debut_roundtrip},
};

} // namespace

std::span<const PropertyDef> property_registry() { return kRegistry; }

const PropertyDef* find_property(std::string_view name) {
    for (const auto& def : kRegistry) {
        if (def.name == name) return &def;
    }
    return nullptr;
}

std::size_t mu_membership_disagreements(const SpectralSystem& system,
                                        std::span<const IntervalSet> sets, const MuFn& mu) {
    const LatticeElement& x = system.source();
    std::size_t bad = 0;
    for (const auto& s : sets) {
        const LatticeElement m = mu(system, s);
        bool mismatch = false;
        for (std::size_t i = 0; i < x.size(); ++i) {
            const double expected = s.contains(x[i]) ? 1.0 : 0.0;
            mismatch = mismatch || m[i] != expected;
        }
        if (mismatch) ++bad;
    }
    return bad;
}

std::size_t average_disagreements(const ConditionalExpectation& ce,
                                  std::span<const LatticeElement> inputs, const ApplyFn& apply) {
    std::size_t bad = 0;
    for (const auto& x : inputs) {
        const LatticeElement y = apply(ce, x);
        bool mismatch = false;
        for (const auto& block : ce.blocks()) {
            // Weighted average recomputed right to left, independent of the
            // operator's own evaluation order.
            double mass = 0.0;
            double acc = 0.0;
            for (auto it = block.rbegin(); it != block.rend(); ++it) {
                mass += ce.weights()[*it];
                acc += ce.weights()[*it] * x[*it];
            }
            const double expected = acc / mass;
            for (std::size_t a : block) {
                mismatch = mismatch || y[a] != expected;
            }
        }
        if (mismatch) ++bad;
    }
    return bad;
}

std::size_t first_entry_disagreements(
    std::span<const std::pair<AdaptedProcess, StoppingTime>> cases,
    const FirstEntryFn& first_entry) {
    std::size_t bad = 0;
    for (const auto& [process, expected] : cases) {
        const StoppingTime got = first_entry(process);
        if (!(got == expected)) ++bad;
    }
    return bad;
}

StoneSpace Fixture::space() const {
    if (filtration) return filtration->space();
    if (atoms > 0) return StoneSpace(atoms);
    if (!elements.empty()) return elements.front().space();
    throw InvalidArgument("fixture carries no space");
}

namespace {

nlohmann::json stops_to_json(const std::vector<StopValue>& values) {
    nlohmann::json arr = nlohmann::json::array();
    for (StopValue v : values) {
        if (v == kNever) {
            arr.push_back("inf");
        } else {
            arr.push_back(v);
        }
    }
    return arr;
}

std::vector<StopValue> stops_from_json(const nlohmann::json& j) {
    std::vector<StopValue> out;
    for (const auto& item : j) {
        if (item.is_string()) {
            if (item.get<std::string>() != "inf") {
                throw InvalidArgument("stopping value string must be \"inf\"");
            }
            out.push_back(kNever);
        } else {
            out.push_back(item.get<StopValue>());
        }
    }
    return out;
}

} // namespace

nlohmann::json Fixture::to_json() const {
    nlohmann::json j = nlohmann::json::object();
    if (atoms > 0) j["atoms"] = atoms;
    if (!elements.empty()) {
        auto& arr = j["elements"] = nlohmann::json::array();
        for (const auto& x : elements) arr.push_back(element_to_json(x));
    }
    if (!steps.empty()) {
        auto& arr = j["steps"] = nlohmann::json::array();
        for (const auto& s : steps) arr.push_back(step_to_json(s));
    }
    if (!intervals.empty()) {
        auto& arr = j["intervals"] = nlohmann::json::array();
        for (const auto& s : intervals) arr.push_back(intervals_to_json(s));
    }
    if (!sequences.empty()) {
        auto& arr = j["sequences"] = nlohmann::json::array();
        for (const auto& seq : sequences) {
            nlohmann::json inner = nlohmann::json::array();
            for (const auto& s : seq) inner.push_back(step_to_json(s));
            arr.push_back(std::move(inner));
        }
    }
    if (filtration) j["filtration"] = filtration_to_json(*filtration);
    if (!paths.empty()) {
        auto& arr = j["paths"] = nlohmann::json::array();
        for (const auto& path : paths) {
            nlohmann::json inner = nlohmann::json::array();
            for (const auto& x : path) inner.push_back(element_to_json(x));
            arr.push_back(std::move(inner));
        }
    }
    if (!stop_values.empty()) {
        auto& arr = j["stop_values"] = nlohmann::json::array();
        for (const auto& v : stop_values) arr.push_back(stops_to_json(v));
    }
    if (!functions.empty()) {
        auto& arr = j["functions"] = nlohmann::json::array();
        for (const auto& fn : functions) arr.push_back(fn.to_json());
    }
    if (!scalars.empty()) {
        auto& arr = j["scalars"] = nlohmann::json::array();
        for (double v : scalars) arr.push_back(scalar_to_json(v));
    }
    if (!naturals.empty()) j["naturals"] = naturals;
    return j;
}

Fixture Fixture::from_json(const nlohmann::json& j) {
    Fixture f;
    if (j.contains("atoms")) f.atoms = j.at("atoms").get<std::size_t>();
    if (j.contains("elements")) {
        for (const auto& item : j.at("elements")) f.elements.push_back(element_from_json(item));
    }
    if (j.contains("steps")) {
        for (const auto& item : j.at("steps")) f.steps.push_back(step_from_json(item));
    }
    if (j.contains("intervals")) {
        for (const auto& item : j.at("intervals")) f.intervals.push_back(intervals_from_json(item));
    }
    if (j.contains("sequences")) {
        for (const auto& outer : j.at("sequences")) {
            std::vector<StepFunction> seq;
            for (const auto& item : outer) seq.push_back(step_from_json(item));
            f.sequences.push_back(std::move(seq));
        }
    }
    if (j.contains("filtration")) f.filtration = filtration_from_json(j.at("filtration"));
    if (j.contains("paths")) {
        for (const auto& outer : j.at("paths")) {
            std::vector<LatticeElement> path;
            for (const auto& item : outer) path.push_back(element_from_json(item));
            f.paths.push_back(std::move(path));
        }
    }
    if (j.contains("stop_values")) {
        for (const auto& item : j.at("stop_values")) f.stop_values.push_back(stops_from_json(item));
    }
    if (j.contains("functions")) {
        for (const auto& item : j.at("functions")) {
            f.functions.push_back(FunctionSpec::from_json(item));
        }
    }
    if (j.contains("scalars")) {
        for (const auto& item : j.at("scalars")) f.scalars.push_back(scalar_from_json(item));
    }
    if (j.contains("naturals")) f.naturals = j.at("naturals").get<std::vector<std::uint64_t>>();
    return f;
}

} // namespace stoneprob::harness
