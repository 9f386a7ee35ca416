// Acceptance gate for the whole library: ten checks, one line each, exit 0
// only when every line passes. Tolerances are pinned here and in the checks
// themselves; everything not listed with a bound is required to hold exactly.

#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <vector>

#include "stoneprob/conditional_expectation.hpp"
#include "stoneprob/daniell.hpp"
#include "stoneprob/harness/generator.hpp"
#include "stoneprob/harness/properties.hpp"
#include "stoneprob/stopped_process.hpp"
#include "stoneprob/stopping_time.hpp"

using namespace stoneprob;
using namespace stoneprob::harness;

namespace {

constexpr std::uint64_t kSeed = 20260822;

// Staircase agreement bound: approximations run at eps = 2^-20 per part and
// the composed value must match within 2^-18 absolute.
constexpr double kAgreementBound = 0x1p-18;

struct CriterionRun {
    std::uint64_t trials = 0;
    std::uint64_t failures = 0;
    double max_deviation = 0.0;
    std::uint64_t infinite_outputs = 0;
};

CriterionRun run_registry(const char* name, std::uint64_t trials) {
    const PropertyDef* def = find_property(name);
    CriterionRun out;
    out.trials = trials;
    if (def == nullptr) {
        out.failures = trials;
        return out;
    }
    GeneratorConfig cfg;
    Tolerance tol;
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        SplitMix rng(stream_seed(kSeed, def->name, trial));
        try {
            Fixture fx = def->generate(rng, cfg);
            TrialOutcome o = def->check(fx, tol);
            if (!o.passed) ++out.failures;
            if (o.deviation > out.max_deviation) out.max_deviation = o.deviation;
            out.infinite_outputs += o.infinite_outputs;
        } catch (...) {
            ++out.failures;
        }
    }
    return out;
}

int g_passed = 0;
int g_total = 0;

void report(bool ok, const char* what, const CriterionRun& run, const char* extra = "") {
    ++g_total;
    if (ok) ++g_passed;
    std::printf("[%s] %02d %-46s %" PRIu64 " trials, %" PRIu64 " failures, max deviation %.3g%s\n",
                ok ? "PASS" : "FAIL", g_total, what, run.trials, run.failures, run.max_deviation,
                extra);
}

void criterion_staircase_agreement() {
    CriterionRun run = run_registry("calculus-agreement", 1000);
    report(run.failures == 0 && run.max_deviation <= kAgreementBound,
           "staircase integral matches composition", run, " (bound 2^-18)");
}

void criterion_lattice_homomorphism() {
    CriterionRun run = run_registry("lattice-homomorphism", 1000);
    report(run.failures == 0 && run.max_deviation == 0.0,
           "composition preserves sup, inf, modulus", run, " (exact)");
}

void criterion_monotone_continuity() {
    CriterionRun run = run_registry("daniell-axiom", 200);
    report(run.failures == 0 && run.max_deviation == 0.0,
           "integrals of sequences dropping to zero vanish", run, " (exact)");
}

void criterion_convexity_gap() {
    CriterionRun run = run_registry("jensen-slack", 1000);
    report(run.failures == 0, "averaging sits below convex images", run,
           " (slack >= -1e-12, affine within 1e-12)");
}

void criterion_projection_roundtrip() {
    CriterionRun run = run_registry("representation-roundtrip", 1000);
    report(run.failures == 0 && run.max_deviation == 0.0,
           "projection encoding of times round trips", run, " (exact)");
}

void criterion_closure_algebra() {
    CriterionRun run = run_registry("closure-algebra", 1000);
    report(run.failures == 0 && run.max_deviation == 0.0,
           "time algebra outputs stay measurable", run, " (exact)");
}

void criterion_stopped_evaluation() {
    CriterionRun run = run_registry("stopped-element-consistency", 1000);
    report(run.failures == 0 && run.max_deviation == 0.0,
           "band and pointwise stopping coincide", run, " (exact)");
}

void criterion_increasing_identities() {
    CriterionRun run;
    run.trials = 1000;
    GeneratorConfig cfg;
    for (std::uint64_t trial = 0; trial < run.trials; ++trial) {
        SplitMix rng(stream_seed(kSeed, "acceptance-increasing", trial));
        try {
            StoneSpace k = gen_space(rng, cfg);
            std::size_t horizon = gen_horizon(rng, cfg);
            auto filt = gen_filtration(rng, k, horizon);
            AdaptedProcess inc = gen_increasing_process(rng, filt, horizon);
            StoppingTime s = gen_bounded_stopping_time(rng, filt, horizon);
            StoppingTime t = gen_bounded_stopping_time(rng, filt, horizon);
            std::vector<StoppingTime> family{s, t, gen_bounded_stopping_time(rng, filt, horizon)};
            IncreasingIdentityRecord rec = increasing_process_identities(inc, s, t, family);
            if (!rec.all_hold() || rec.max_deviation != 0.0) ++run.failures;
            if (rec.max_deviation > run.max_deviation) run.max_deviation = rec.max_deviation;
        } catch (...) {
            ++run.failures;
        }
    }
    report(run.failures == 0 && run.max_deviation == 0.0,
           "increasing processes split at joins and meets", run, " (exact)");
}

void criterion_first_entry_inverse() {
    CriterionRun run = run_registry("debut-roundtrip", 1000);
    report(run.failures == 0 && run.max_deviation == 0.0 && run.infinite_outputs > 0,
           "first entry recovers times, never included", run, " (exact)");
}

// Three behavioural copies of core operations, each off by one changed
// comparison, must be caught by the same scoring paths the suites use while
// the real operations score zero on identical data.

LatticeElement mu_closed_left(const SpectralSystem& sys, const IntervalSet& s) {
    const LatticeElement& x = sys.source();
    std::vector<double> v(x.size(), 0.0);
    for (const Interval& p : s.pieces())
        for (std::size_t a = 0; a < x.size(); ++a)
            // Mutated membership: p.lo <= x[a] where the real test is p.lo < x[a].
            if (p.lo <= x[a] && x[a] <= p.hi) v[a] = 1.0;
    return LatticeElement(x.space(), v);
}

LatticeElement apply_unweighted(const ConditionalExpectation& ce, const LatticeElement& y) {
    std::vector<double> out(y.size(), 0.0);
    for (const auto& block : ce.blocks()) {
        double sum = 0.0;
        // Mutated averaging: the atom weights are dropped from both sums.
        for (std::size_t a : block) sum += y[a];
        const double mean = sum / double(block.size());
        for (std::size_t a : block) out[a] = mean;
    }
    return LatticeElement(y.space(), out);
}

StoppingTime first_entry_late(const AdaptedProcess& p) {
    std::vector<StopValue> v(p.filtration().space().atom_count(), kNever);
    for (std::size_t atom = 0; atom < v.size(); ++atom) {
        for (std::size_t n = 1; n <= p.horizon(); ++n) {
            if (p.at(n)[atom] == 1.0) {
                // Mutated record: n + 1 where the real first entry records n.
                v[atom] = static_cast<StopValue>(n + 1);
                break;
            }
        }
    }
    return StoppingTime(p.filtration_ptr(), std::move(v));
}

void criterion_mutation_sensitivity() {
    GeneratorConfig cfg;
    CriterionRun run;
    run.trials = 200;
    bool real_clean = true;
    bool mu_caught = true, avg_caught = true, entry_caught = true;

    for (std::uint64_t trial = 0; trial < run.trials; ++trial) {
        SplitMix rng(stream_seed(kSeed, "acceptance-mutants", trial));

        // Interval measure: one set starts exactly at an atom value, so the
        // closed left endpoint is exposed on every single trial.
        StoneSpace k = gen_space(rng, cfg);
        LatticeElement x = gen_element(rng, k);
        SpectralSystem sys(x);
        std::vector<IntervalSet> sets{
            gen_interval_set(rng), IntervalSet::left_open_right_closed(x[0], x[0] + 1.0)};
        real_clean &= mu_membership_disagreements(sys, sets, [](const SpectralSystem& s,
                                                                const IntervalSet& iv) {
                          return mu_measure(s, iv);
                      }) == 0;
        mu_caught &= mu_membership_disagreements(sys, sets, mu_closed_left) >= 1;

        // Averaging: atom weights 1 and 3 over one block make the weighted
        // and unweighted means differ while both stay exactly representable.
        StoneSpace two(2);
        ConditionalExpectation skew(two, {{0, 1}}, {1.0, 3.0});
        std::vector<LatticeElement> inputs{LatticeElement(two, {0.0, 4.0}),
                                           gen_element(rng, two)};
        real_clean &= average_disagreements(skew, inputs,
                                            [](const ConditionalExpectation& ce,
                                               const LatticeElement& y) {
                                                return ce.apply(y);
                                            }) == 0;
        avg_caught &= average_disagreements(skew, inputs, apply_unweighted) >= 1;

        // First entry: every generated time has a finite atom, so the late
        // record disagrees somewhere on every trial.
        std::size_t horizon = gen_horizon(rng, cfg);
        auto filt = gen_filtration(rng, k, horizon);
        StoppingTime tau = gen_bounded_stopping_time(rng, filt, horizon);
        auto [flag, recovered] = debut_roundtrip(tau);
        std::vector<std::pair<AdaptedProcess, StoppingTime>> cases{{flag, recovered}};
        real_clean &= first_entry_disagreements(cases, [](const AdaptedProcess& p) {
                          return hitting_time(p);
                      }) == 0;
        entry_caught &= first_entry_disagreements(cases, first_entry_late) >= 1;
    }

    const bool ok = real_clean && mu_caught && avg_caught && entry_caught;
    if (!ok) run.failures = 1;
    report(ok, "seeded faults are detected, real code is clean", run,
           " (closed endpoint, dropped weight, late entry)");
}

} // namespace

int main() {
    criterion_staircase_agreement();
    criterion_lattice_homomorphism();
    criterion_monotone_continuity();
    criterion_convexity_gap();
    criterion_projection_roundtrip();
    criterion_closure_algebra();
    criterion_stopped_evaluation();
    criterion_increasing_identities();
    criterion_first_entry_inverse();
    criterion_mutation_sensitivity();

    std::printf("acceptance: %d/%d criteria hold\n", g_passed, g_total);
    return g_passed == g_total ? 0 : 1;
}
