#include <benchmark/benchmark.h>

#include <vector>

#include "stoneprob/composition.hpp"
#include "stoneprob/daniell.hpp"
#include "stoneprob/harness/generator.hpp"
#include "stoneprob/harness/properties.hpp"
#include "stoneprob/stopped_process.hpp"

using namespace stoneprob;
using namespace stoneprob::harness;

namespace {

void bench_elementary_integral(benchmark::State& state) {
    SplitMix rng(1);
    StoneSpace k(16);
    LatticeElement x = gen_element(rng, k);
    SpectralSystem sys(x);
    StepFunction f = gen_step_function(rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(daniell_step(f, sys));
    }
}
BENCHMARK(bench_elementary_integral);

void bench_staircase_at_marks(benchmark::State& state) {
    SplitMix rng(2);
    FunctionSpec spec = gen_univariate_spec(rng);
    ContinuousFunction f = spec.materialize();
    std::vector<double> marks;
    for (int i = 0; i < 16; ++i) marks.push_back(rng.grid_value());
    const double eps = 0x1p-20;
    for (auto _ : state) {
        benchmark::DoNotOptimize(step_approximation_at(f, marks, eps));
    }
}
BENCHMARK(bench_staircase_at_marks);

void bench_block_averaging(benchmark::State& state) {
    SplitMix rng(3);
    StoneSpace k(16);
    auto filt = gen_filtration(rng, k, 8);
    LatticeElement x = gen_element(rng, k);
    for (auto _ : state) {
        benchmark::DoNotOptimize(filt->stage(1).apply(x));
    }
}
BENCHMARK(bench_block_averaging);

void bench_stopped_element(benchmark::State& state) {
    SplitMix rng(4);
    StoneSpace k(16);
    auto filt = gen_filtration(rng, k, 8);
    AdaptedProcess p = gen_adapted_process(rng, filt, 8);
    StoppingTime t = gen_bounded_stopping_time(rng, filt, 8);
    for (auto _ : state) {
        benchmark::DoNotOptimize(stopped_element_via_bands(p, t));
    }
}
BENCHMARK(bench_stopped_element);

void bench_property_trial(benchmark::State& state) {
    const PropertyDef* def = find_property("calculus-agreement");
    GeneratorConfig cfg;
    Tolerance tol;
    std::uint64_t trial = 0;
    for (auto _ : state) {
        SplitMix rng(stream_seed(5, def->name, trial++));
        Fixture fx = def->generate(rng, cfg);
        benchmark::DoNotOptimize(def->check(fx, tol));
    }
}
BENCHMARK(bench_property_trial);

} // namespace

BENCHMARK_MAIN();
