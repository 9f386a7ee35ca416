#include "stoneprob/harness/generator.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <set>

#include "stoneprob/errors.hpp"

namespace stoneprob::harness {

namespace {

constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

} // namespace

std::uint64_t SplitMix::next() {
    state_ += kGamma;
    return mix64(state_);
}

std::uint64_t SplitMix::below(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * static_cast<unsigned __int128>(n)) >> 64);
}

std::int64_t SplitMix::range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

bool SplitMix::chance(std::uint32_t percent) {
    return below(100) < percent;
}

double SplitMix::grid_value() {
    return static_cast<double>(range(-2048, 2048)) * 0x1p-8;
}

double SplitMix::positive_grid_value() {
    return static_cast<double>(range(0, 2048)) * 0x1p-8;
}

std::uint64_t stream_seed(std::uint64_t master, std::string_view property, std::uint64_t trial) {
    return mix64(mix64(master ^ fnv1a(property)) + kGamma * (trial + 1));
}

StoneSpace gen_space(SplitMix& rng, const GeneratorConfig& cfg) {
    const auto n = rng.range(static_cast<std::int64_t>(cfg.atoms_min),
                             static_cast<std::int64_t>(cfg.atoms_max));
    return StoneSpace(static_cast<std::size_t>(n));
}

std::size_t gen_horizon(SplitMix& rng, const GeneratorConfig& cfg) {
    const auto n = rng.range(static_cast<std::int64_t>(cfg.horizon_min),
                             static_cast<std::int64_t>(cfg.horizon_max));
    return static_cast<std::size_t>(n);
}

LatticeElement gen_element(SplitMix& rng, const StoneSpace& space) {
    std::vector<double> values(space.atom_count());
    for (double& v : values) v = rng.grid_value();
    return LatticeElement(space, std::move(values));
}

LatticeElement gen_positive_sup_element(SplitMix& rng, const StoneSpace& space,
                                        std::uint32_t infinity_percent) {
    std::vector<double> values(space.atom_count());
    for (double& v : values) {
        v = rng.chance(infinity_percent) ? extreal::infinity : rng.positive_grid_value();
    }
    return LatticeElement(space, std::move(values));
}

std::vector<double> gen_weights(SplitMix& rng, std::size_t atoms) {
    std::vector<long> w(atoms);
    long total = 0;
    for (long& v : w) {
        v = 1L << rng.below(4);
        total += v;
    }
    long pow2 = 1;
    while (pow2 < total) pow2 *= 2;
    w.back() += pow2 - total;
    std::vector<double> out(atoms);
    for (std::size_t i = 0; i < atoms; ++i) out[i] = static_cast<double>(w[i]);
    return out;
}

namespace {

// A subset of the block whose weights sum to exactly half the block's total,
// if one exists. Atom order is shuffled so repeated splits differ.
std::optional<std::vector<std::size_t>> half_weight_subset(const std::vector<std::size_t>& block,
                                                           const std::vector<long>& weights,
                                                           SplitMix& rng) {
    long total = 0;
    for (std::size_t a : block) total += weights[a];
    if (total % 2 != 0) return std::nullopt;
    const long target = total / 2;

    std::vector<std::size_t> order = block;
    for (std::size_t i = order.size(); i > 1; --i) {
        std::swap(order[i - 1], order[rng.below(i)]);
    }

    const std::size_t n = order.size();
    std::vector<std::vector<bool>> reach(n + 1, std::vector<bool>(static_cast<std::size_t>(target) + 1, false));
    reach[0][0] = true;
    for (std::size_t i = 1; i <= n; ++i) {
        const long wi = weights[order[i - 1]];
        for (long s = 0; s <= target; ++s) {
            reach[i][static_cast<std::size_t>(s)] =
                reach[i - 1][static_cast<std::size_t>(s)]
                || (s >= wi && reach[i - 1][static_cast<std::size_t>(s - wi)]);
        }
    }
    if (!reach[n][static_cast<std::size_t>(target)]) return std::nullopt;

    std::vector<std::size_t> pick;
    long s = target;
    for (std::size_t i = n; i > 0; --i) {
        if (!reach[i - 1][static_cast<std::size_t>(s)]) {
            pick.push_back(order[i - 1]);
            s -= weights[order[i - 1]];
        }
    }
    return pick;
}

} // namespace

std::shared_ptr<const Filtration> gen_filtration(SplitMix& rng, const StoneSpace& space,
                                                 std::size_t stages) {
    if (stages == 0) {
        throw InvalidArgument("filtration needs at least one stage");
    }
    const std::size_t atoms = space.atom_count();
    std::vector<double> weights = gen_weights(rng, atoms);
    std::vector<long> w(atoms);
    for (std::size_t i = 0; i < atoms; ++i) w[i] = std::lround(weights[i]);

    std::vector<std::size_t> all(atoms);
    for (std::size_t i = 0; i < atoms; ++i) all[i] = i;
    std::vector<std::vector<std::size_t>> partition{all};

    std::vector<std::vector<std::vector<std::size_t>>> stage_blocks;
    for (std::size_t t = 0; t < stages; ++t) {
        std::vector<std::vector<std::size_t>> next;
        for (const auto& block : partition) {
            std::optional<std::vector<std::size_t>> split;
            if (block.size() >= 2 && rng.chance(55)) {
                split = half_weight_subset(block, w, rng);
            }
            if (split) {
                std::set<std::size_t> in(split->begin(), split->end());
                std::vector<std::size_t> rest;
                for (std::size_t a : block) {
                    if (!in.count(a)) rest.push_back(a);
                }
                next.push_back(std::move(*split));
                next.push_back(std::move(rest));
            } else {
                next.push_back(block);
            }
        }
        partition = next;
        stage_blocks.push_back(std::move(next));
    }
    return std::make_shared<const Filtration>(space, std::move(weights), std::move(stage_blocks));
}

namespace {

StoppingTime gen_stopping_impl(SplitMix& rng, std::shared_ptr<const Filtration> filtration,
                               std::size_t last_stage, std::uint32_t never_percent) {
    const std::size_t atoms = filtration->space().atom_count();
    std::vector<StopValue> values(atoms, 0);
    std::vector<bool> assigned(atoms, false);
    // Each stage-n block is fully assigned or fully untouched, because earlier
    // assignments consumed whole blocks of coarser stages.
    for (std::size_t n = 1; n < last_stage; ++n) {
        for (const auto& block : filtration->stage(n).blocks()) {
            if (!assigned[block.front()] && rng.chance(35)) {
                for (std::size_t a : block) {
                    values[a] = static_cast<StopValue>(n);
                    assigned[a] = true;
                }
            }
        }
    }
    for (const auto& block : filtration->stage(last_stage).blocks()) {
        if (assigned[block.front()]) continue;
        const StopValue v =
            rng.chance(never_percent) ? kNever : static_cast<StopValue>(last_stage);
        for (std::size_t a : block) {
            values[a] = v;
            assigned[a] = true;
        }
    }
    return StoppingTime(std::move(filtration), std::move(values));
}

} // namespace

StoppingTime gen_stopping_time(SplitMix& rng, std::shared_ptr<const Filtration> filtration,
                               std::uint32_t never_percent) {
    const std::size_t last = filtration->stage_count();
    return gen_stopping_impl(rng, std::move(filtration), last, never_percent);
}

StoppingTime gen_bounded_stopping_time(SplitMix& rng,
                                       std::shared_ptr<const Filtration> filtration,
                                       std::size_t bound) {
    if (bound == 0) {
        throw InvalidArgument("stopping bound must be at least 1");
    }
    return gen_stopping_impl(rng, std::move(filtration), bound, 0);
}

namespace {

LatticeElement block_constant(SplitMix& rng, const ConditionalExpectation& stage,
                              bool nonnegative) {
    std::vector<double> values(stage.space().atom_count());
    for (const auto& block : stage.blocks()) {
        const double v = nonnegative ? rng.positive_grid_value() : rng.grid_value();
        for (std::size_t a : block) values[a] = v;
    }
    return LatticeElement(stage.space(), std::move(values));
}

} // namespace

AdaptedProcess gen_adapted_process(SplitMix& rng, std::shared_ptr<const Filtration> filtration,
                                   std::size_t horizon) {
    std::vector<LatticeElement> path;
    for (std::size_t t = 1; t <= horizon; ++t) {
        path.push_back(block_constant(rng, filtration->stage(t), false));
    }
    return AdaptedProcess(std::move(filtration), std::move(path));
}

AdaptedProcess gen_increasing_process(SplitMix& rng,
                                      std::shared_ptr<const Filtration> filtration,
                                      std::size_t horizon) {
    std::vector<LatticeElement> path;
    LatticeElement current = block_constant(rng, filtration->stage(1), false);
    path.push_back(current);
    for (std::size_t t = 2; t <= horizon; ++t) {
        current = current.add(block_constant(rng, filtration->stage(t), true));
        path.push_back(current);
    }
    return AdaptedProcess(std::move(filtration), std::move(path));
}

AdaptedProcess gen_martingale(SplitMix& rng, std::shared_ptr<const Filtration> filtration,
                              std::size_t horizon) {
    const LatticeElement terminal = gen_element(rng, filtration->space());
    return doob_martingale(std::move(filtration), terminal, horizon);
}

namespace {

std::vector<double> distinct_grid_values(SplitMix& rng, std::size_t count) {
    std::set<double> seen;
    while (seen.size() < count) {
        seen.insert(rng.grid_value());
    }
    return std::vector<double>(seen.begin(), seen.end());
}

} // namespace

StepFunction gen_step_function(SplitMix& rng) {
    const std::size_t m = 1 + rng.below(5);
    std::vector<double> breakpoints = distinct_grid_values(rng, m);
    std::vector<double> values(m);
    for (double& v : values) v = rng.grid_value();
    return StepFunction(std::move(breakpoints), std::move(values), rng.grid_value());
}

StepFunction gen_positive_step_function(SplitMix& rng) {
    const std::size_t m = 1 + rng.below(5);
    std::vector<double> breakpoints = distinct_grid_values(rng, m);
    std::vector<double> values(m);
    for (double& v : values) v = rng.positive_grid_value();
    return StepFunction(std::move(breakpoints), std::move(values), 0.0);
}

IntervalSet gen_interval_set(SplitMix& rng) {
    IntervalSet out = IntervalSet::empty();
    const std::size_t pieces = 1 + rng.below(3);
    for (std::size_t i = 0; i < pieces; ++i) {
        switch (rng.below(4)) {
        case 0: {
            const auto ends = distinct_grid_values(rng, 2);
            out = out.unite(IntervalSet::left_open_right_closed(ends[0], ends[1]));
            break;
        }
        case 1:
            out = out.unite(IntervalSet::ray_up(rng.grid_value()));
            break;
        case 2:
            out = out.unite(IntervalSet::ray_down(rng.grid_value()));
            break;
        default: {
            const auto ends = distinct_grid_values(rng, 2);
            out = out.unite(IntervalSet::left_open_right_closed(ends[0], ends[1]));
            break;
        }
        }
    }
    return out;
}

FunctionSpec gen_univariate_spec(SplitMix& rng) {
    FunctionSpec spec;
    spec.arity = 1;
    if (rng.chance(50)) {
        spec.kind = FunctionKind::Polynomial;
        const double cubic = rng.chance(40) ? static_cast<double>(rng.range(-8, 8)) * 0x1p-4 : 0.0;
        spec.params = {rng.grid_value(), rng.grid_value(),
                       static_cast<double>(rng.range(-32, 32)) * 0x1p-6, cubic};
    } else {
        spec.kind = FunctionKind::AbsKink;
        spec.params = {rng.grid_value(), rng.grid_value(), rng.grid_value(), rng.grid_value()};
    }
    return spec;
}

FunctionSpec gen_convex_spec(SplitMix& rng, std::size_t arity) {
    FunctionSpec spec;
    spec.arity = arity;
    switch (rng.below(4)) {
    case 0:
        spec.kind = FunctionKind::MaxCoord;
        break;
    case 1:
        spec.kind = FunctionKind::L1Norm;
        break;
    case 2: {
        spec.kind = FunctionKind::Quadratic;
        spec.params.clear();
        for (std::size_t i = 0; i < arity; ++i) {
            spec.params.push_back(static_cast<double>(rng.range(0, 16)) * 0x1p-4);
        }
        for (std::size_t i = 0; i < arity; ++i) {
            spec.params.push_back(rng.grid_value());
        }
        spec.params.push_back(rng.grid_value());
        break;
    }
    default:
        spec.kind = FunctionKind::Affine;
        spec.params.clear();
        for (std::size_t i = 0; i <= arity; ++i) {
            spec.params.push_back(rng.grid_value());
        }
        break;
    }
    return spec;
}

} // namespace stoneprob::harness
