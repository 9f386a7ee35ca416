#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "stoneprob/composition.hpp"
#include "stoneprob/daniell.hpp"
#include "stoneprob/extended_real.hpp"
#include "stoneprob/harness/generator.hpp"
#include "stoneprob/interval_set.hpp"
#include "stoneprob/spectral_system.hpp"
#include "stoneprob/step_function.hpp"

using namespace stoneprob;

TEST_CASE("interval validation and canonical form") {
    CHECK_THROWS_AS(IntervalSet({{1.0, 1.0}}), InvalidInterval);
    CHECK_THROWS_AS(IntervalSet({{2.0, 1.0}}), InvalidInterval);
    CHECK_THROWS_AS(IntervalSet({{std::nan(""), 1.0}}), InvalidInterval);
    CHECK_THROWS_AS(IntervalSet({{extreal::infinity, extreal::infinity}}), InvalidInterval);

    // (0,2] u (1,3] u (3,4] merges to the single piece (0,4].
    IntervalSet s({{0.0, 2.0}, {1.0, 3.0}, {3.0, 4.0}});
    REQUIRE(s.pieces().size() == 1);
    CHECK(s.pieces()[0].lo == 0.0);
    CHECK(s.pieces()[0].hi == 4.0);

    CHECK(s.contains(4.0));
    CHECK_FALSE(s.contains(0.0));
    CHECK(IntervalSet::empty().is_empty());
    CHECK(IntervalSet::whole_line().contains(-1e300));
}

TEST_CASE("interval boolean operations agree with membership") {
    harness::SplitMix rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        IntervalSet a = harness::gen_interval_set(rng);
        IntervalSet b = harness::gen_interval_set(rng);
        IntervalSet u = a.unite(b);
        IntervalSet i = a.intersect(b);
        IntervalSet c = a.complement();
        CHECK(c.complement() == a);
        for (int probe = 0; probe < 24; ++probe) {
            double t = rng.grid_value();
            CHECK(u.contains(t) == (a.contains(t) || b.contains(t)));
            CHECK(i.contains(t) == (a.contains(t) && b.contains(t)));
            CHECK(c.contains(t) == !a.contains(t));
        }
    }
}

TEST_CASE("step function evaluation and canonical form") {
    CHECK_THROWS_AS(StepFunction({2.0, 1.0}, {0.0, 1.0}, 2.0), InvalidArgument);
    CHECK_THROWS_AS(StepFunction({1.0}, {0.0}, std::nan("")), InvalidArgument);

    // Value 3 on (-inf,0], then 10 on (0,1], then 3 beyond.
    StepFunction f({0.0, 1.0}, {3.0, 10.0}, 3.0);
    CHECK(f(-5.0) == 3.0);
    CHECK(f(0.0) == 3.0);
    CHECK(f(0.5) == 10.0);
    CHECK(f(1.0) == 10.0);
    CHECK(f(2.0) == 3.0);

    // Equal neighbouring values collapse.
    StepFunction g({0.0, 1.0}, {5.0, 5.0}, 1.0);
    CHECK(g.breakpoints().size() == 1);
    CHECK(StepFunction::constant(4.0).is_constant());

    IntervalSet s = IntervalSet::left_open_right_closed(0.0, 1.0);
    StepFunction ind = StepFunction::indicator(s);
    for (double t : {-1.0, 0.0, 0.5, 1.0, 7.0}) CHECK(ind(t) == (s.contains(t) ? 1.0 : 0.0));
}

TEST_CASE("step function algebra agrees pointwise") {
    harness::SplitMix rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        StepFunction f = harness::gen_step_function(rng);
        StepFunction g = harness::gen_step_function(rng);
        double c = rng.grid_value();
        StepFunction sum = f.add(g);
        StepFunction prodc = f.scale(c);
        StepFunction top = f.sup(g);
        StepFunction bot = f.inf(g);
        for (int probe = 0; probe < 24; ++probe) {
            double t = rng.grid_value();
            CHECK(sum(t) == f(t) + g(t));
            CHECK(prodc(t) == c * f(t));
            CHECK(top(t) == std::max(f(t), g(t)));
            CHECK(bot(t) == std::min(f(t), g(t)));
        }
        CHECK(bot.leq(f));
        CHECK(f.leq(top));
        CHECK(f.positive_part().subtract(f.negative_part()) == f);
    }
}

TEST_CASE("monotone sequence validation") {
    StepFunction lo = StepFunction::constant(0.0);
    StepFunction hi = StepFunction::constant(1.0);
    CHECK_NOTHROW(MonotoneStepSequence({lo, hi}));
    CHECK_THROWS_AS(MonotoneStepSequence({hi, lo}), NotMonotone);
    CHECK_THROWS_AS(MonotoneStepSequence({}), EmptyFamily);
}

TEST_CASE("spectral sets of a fixed element") {
    StoneSpace k(3);
    LatticeElement x(k, {0.5, 1.5, 2.5});
    SpectralSystem sys(x);

    CHECK(sys.at(0.0) == ClopenSet::empty(k));
    CHECK(sys.at(0.5) == ClopenSet::of(k, {0}));
    CHECK(sys.at(1.0) == ClopenSet::of(k, {0}));
    CHECK(sys.at(1.5) == ClopenSet::of(k, {0, 1}));
    CHECK(sys.at(100.0) == ClopenSet::full(k));
    CHECK(sys.indicator_at(1.0) == LatticeElement(k, {1.0, 0.0, 0.0}));
    CHECK(sys.jump_points() == std::vector<double>{0.5, 1.5, 2.5});

    CHECK_THROWS_AS(SpectralSystem(LatticeElement(k, {0.0, extreal::infinity, 0.0})), NotFinite);
}

TEST_CASE("spectral sets match direct comparison on random data") {
    harness::SplitMix rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        StoneSpace k(1 + rng.below(8));
        std::vector<double> xv(k.atom_count());
        for (auto& v : xv) v = rng.grid_value();
        LatticeElement x(k, xv);
        SpectralSystem sys(x);
        for (int probe = 0; probe < 16; ++probe) {
            // Thresholds both on and off the value grid, including exact hits.
            double t = rng.chance(50) ? rng.grid_value() : xv[rng.below(xv.size())];
            ClopenSet a = sys.at(t);
            for (std::size_t i = 0; i < xv.size(); ++i) CHECK(a.contains(i) == (xv[i] <= t));
        }
    }
}

TEST_CASE("spectral measure of intervals") {
    StoneSpace k(3);
    LatticeElement x(k, {0.5, 1.5, 2.5});
    SpectralSystem sys(x);

    CHECK(mu_measure(sys, IntervalSet::left_open_right_closed(1.0, 2.0)) ==
          LatticeElement(k, {0.0, 1.0, 0.0}));
    // The left endpoint is excluded: (1.5, 2.5] catches only the last atom.
    CHECK(mu_measure(sys, IntervalSet::left_open_right_closed(1.5, 2.5)) ==
          LatticeElement(k, {0.0, 0.0, 1.0}));
    CHECK(mu_measure(sys, IntervalSet::whole_line()) == LatticeElement::unit(k));
    CHECK(mu_measure(sys, IntervalSet::empty()) == LatticeElement::zero(k));

    // Additivity over a disjoint split.
    IntervalSet left = IntervalSet::ray_down(1.5);
    IntervalSet right = IntervalSet::ray_up(1.5);
    CHECK(mu_measure(sys, left).add(mu_measure(sys, right)) == LatticeElement::unit(k));
}

TEST_CASE("elementary integral of step functions") {
    StoneSpace k(2);
    LatticeElement x(k, {-1.0, 1.0});
    StepFunction f({0.0}, {3.0}, 10.0);

    CHECK(daniell_step(f, x) == LatticeElement(k, {3.0, 10.0}));

    // Pure composition: I(f . x) matches f(x[i]) atom by atom.
    harness::SplitMix rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        StoneSpace kk(1 + rng.below(8));
        std::vector<double> xv(kk.atom_count());
        for (auto& v : xv) v = rng.grid_value();
        LatticeElement y(kk, xv);
        StepFunction g = harness::gen_step_function(rng);
        LatticeElement ig = daniell_step(g, y);
        for (std::size_t i = 0; i < xv.size(); ++i) CHECK(ig[i] == g(xv[i]));
    }
}

TEST_CASE("elementary integral admits infinite plateaus") {
    StoneSpace k(2);
    LatticeElement x(k, {-1.0, 1.0});
    // f is +inf on (0, inf), zero elsewhere; the integral lands in the
    // sup-completion with 0 * inf = 0 keeping the left atom finite.
    StepFunction f({0.0}, {0.0}, extreal::infinity);
    LatticeElement out = daniell_step(f, x);
    CHECK(out == LatticeElement(k, {0.0, extreal::infinity}));
    CHECK(out.in_sup_completion());
}

TEST_CASE("monotone integral takes prefix suprema") {
    StoneSpace k(2);
    LatticeElement x(k, {-1.0, 1.0});
    std::vector<StepFunction> terms;
    for (int n = 1; n <= 4; ++n) terms.push_back(StepFunction({0.0}, {0.0}, double(n)));
    MonotoneStepSequence seq(terms);

    CHECK(daniell_monotone(seq, x, 1) == LatticeElement(k, {0.0, 1.0}));
    CHECK(daniell_monotone(seq, x, 4) == LatticeElement(k, {0.0, 4.0}));
    CHECK_THROWS_AS(daniell_monotone(seq, x, 0), InvalidArgument);
    CHECK_THROWS_AS(daniell_monotone(seq, x, 5), InvalidArgument);
}

TEST_CASE("staircase approximation stays below and converges") {
    ContinuousFunction f = ContinuousFunction::lipschitz([](double t) { return t * t; }, 4.0);
    const double eps = 0x1p-6;
    MonotoneStepSequence seq = step_approximation(f, 0.0, 2.0, eps);
    const StepFunction& last = seq.term(seq.size() - 1);

    harness::SplitMix rng(19);
    for (int probe = 0; probe < 200; ++probe) {
        double t = 2.0 * double(rng.below(1 << 20)) / double(1 << 20);
        for (std::size_t j = 0; j < seq.size(); ++j) CHECK(seq.term(j)(t) <= f(t));
        CHECK(f(t) - last(t) <= eps);
    }
}

TEST_CASE("staircase approximation tightens at marked points") {
    harness::SplitMix rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        harness::FunctionSpec spec = harness::gen_univariate_spec(rng);
        ContinuousFunction f = spec.materialize();
        std::vector<double> marks;
        for (int i = 0; i < 5; ++i) marks.push_back(rng.grid_value());
        const double eps = 0x1p-12;
        MonotoneStepSequence seq = step_approximation_at(f, marks, eps);
        const StepFunction& last = seq.term(seq.size() - 1);
        for (double t : marks) {
            CHECK(last(t) <= f(t));
            // The gap can attain eps exactly at a kink, and the sampling
            // arithmetic may add rounding on top of that.
            CHECK(f(t) - last(t) <= eps + 1e-12);
        }
    }
}

TEST_CASE("composition requirements") {
    StoneSpace k(2);
    LatticeElement x(k, {0.0, 1.0});
    CHECK_THROWS_AS(compose_continuous(ContinuousFunction::univariate([](double) {
                                           return std::nan("");
                                       }),
                                       x),
                    CallbackFailure);
    CHECK_THROWS_AS(compose_continuous(ContinuousFunction::univariate([](double t) { return t; }),
                                       LatticeElement(k, {0.0, extreal::infinity})),
                    NotFinite);
    // Without a modulus of continuity no staircase can be scheduled.
    CHECK_THROWS_AS(step_approximation(ContinuousFunction::univariate([](double t) { return t; }),
                                       0.0, 1.0, 0.5),
                    MissingModulus);
}
