#include "stoneprob/stopping_algebra.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>

namespace stoneprob {

namespace {

// The closure identities from the lattice proof, re-checked on the result.
void verify_level_identity(const StoppingTime& result, const StoppingTime& a,
                           const StoppingTime& b, StopBinaryOp op) {
    if (op == StopBinaryOp::Plus) return;
    StopValue top = std::max(a.max_finite_value(), b.max_finite_value());
    for (StopValue n = 1; n <= top; ++n) {
        ClopenSet lhs = result.stopped_by(n);
        ClopenSet rhs = op == StopBinaryOp::Join ? a.stopped_by(n).intersect(b.stopped_by(n))
                                                 : a.stopped_by(n).unite(b.stopped_by(n));
        if (!(lhs == rhs))
            throw std::logic_error("st_algebra: level identity violated at n=" + std::to_string(n));
    }
}

} // namespace

StoppingTime st_algebra(const StoppingTime& a, const StoppingTime& b, StopBinaryOp op) {
    require_same_filtration(a, b, "st_algebra");
    std::vector<StopValue> values(a.values().size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        StopValue va = a[i], vb = b[i];
        switch (op) {
        case StopBinaryOp::Join: values[i] = std::max(va, vb); break;
        case StopBinaryOp::Meet: values[i] = std::min(va, vb); break;
        case StopBinaryOp::Plus:
            if (va == kNever || vb == kNever) {
                values[i] = kNever;
            } else {
                std::uint64_t sum = std::uint64_t(va) + std::uint64_t(vb);
                if (sum >= kNever) throw InvalidArgument("st_algebra: plus overflows");
                values[i] = static_cast<StopValue>(sum);
            }
            break;
        }
    }
    StoppingTime result(a.filtration_ptr(), std::move(values));
    verify_level_identity(result, a, b, op);
    return result;
}

StoppingTime st_extremum(std::span<const StoppingTime> family, StopExtremum which) {
    if (family.empty()) throw EmptyFamily("st_extremum: empty family");
    const StoppingTime& first = family.front();
    for (const StoppingTime& t : family) require_same_filtration(first, t, "st_extremum");
    std::vector<StopValue> values(first.values().size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        StopValue acc = first[i];
        for (const StoppingTime& t : family)
            acc = which == StopExtremum::Sup ? std::max(acc, t[i]) : std::min(acc, t[i]);
        values[i] = acc;
    }
    StoppingTime result(first.filtration_ptr(), std::move(values));
    // {sup <= k} is the meet of the level sets, {inf <= k} the join.
    StopValue top = result.max_finite_value();
    for (StopValue k = 1; k <= top; ++k) {
        ClopenSet expected = which == StopExtremum::Sup ? ClopenSet::full(result.space())
                                                        : ClopenSet::empty(result.space());
        for (const StoppingTime& t : family) {
            expected = which == StopExtremum::Sup ? expected.intersect(t.stopped_by(k))
                                                  : expected.unite(t.stopped_by(k));
        }
        if (!(result.stopped_by(k) == expected))
            throw std::logic_error("st_extremum: level identity violated at k=" + std::to_string(k));
    }
    return result;
}

StoppingTime time_change(const StoppingTime& t, std::span<const StopValue> nk) {
    if (nk.empty()) throw InvalidArgument("time_change: empty sequence");
    for (std::size_t k = 0; k < nk.size(); ++k) {
        if (nk[k] == kNever || nk[k] == 0)
            throw InvalidArgument("time_change: entries must be finite naturals");
        if (k > 0 && nk[k] <= nk[k - 1])
            throw NotIncreasing("time_change: sequence must be strictly increasing");
        if (nk[k] < k + 1) throw DomainViolation("time_change: need nk[k] >= k");
    }
    std::vector<StopValue> values(t.values().size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        StopValue v = t[i];
        if (v == kNever) {
            values[i] = kNever;
        } else {
            if (v > nk.size())
                throw DomainViolation("time_change: sequence too short for the time's range");
            values[i] = nk[v - 1];
        }
    }
    return StoppingTime(t.filtration_ptr(), std::move(values));
}

std::vector<BandProjection> to_projections(const StoppingTime& t, std::size_t length) {
    StopValue top = t.max_finite_value();
    if (length == 0) length = top;
    if (length < top)
        throw InvalidArgument("to_projections: length may extend the default, not truncate it");
    std::vector<BandProjection> bands;
    bands.reserve(length);
    for (std::size_t n = 1; n <= length; ++n)
        bands.emplace_back(t.stopped_by(static_cast<StopValue>(n)));
    return bands;
}

StoppingTime from_projections(std::span<const BandProjection> bands,
                              std::shared_ptr<const Filtration> filtration) {
    if (!filtration) throw InvalidArgument("from_projections: null filtration");
    const StoneSpace& space = filtration->space();
    for (const BandProjection& p : bands)
        require_same_space(space, p.space(), "from_projections");
    for (std::size_t i = 0; i + 1 < bands.size(); ++i)
        if (!bands[i].leq(bands[i + 1]))
            throw NotIncreasing("from_projections: projections must increase");

    // F_j P_i = P_i F_j for i <= j, checked as operators on the atom basis.
    for (std::size_t i = 0; i < bands.size(); ++i) {
        for (std::size_t j = i + 1; j <= bands.size(); ++j) {
            const ConditionalExpectation& stage = filtration->stage(j);
            for (std::size_t atom = 0; atom < space.atom_count(); ++atom) {
                LatticeElement basis = ClopenSet::of(space, {atom}).indicator();
                LatticeElement left = stage.apply(bands[i].apply(basis));
                LatticeElement right = bands[i].apply(stage.apply(basis));
                if (!(left == right))
                    throw CommutationFailure("from_projections: P_" + std::to_string(i + 1) +
                                             " does not commute with stage " + std::to_string(j));
            }
        }
    }

    std::vector<StopValue> values(space.atom_count(), kNever);
    for (std::size_t atom = 0; atom < space.atom_count(); ++atom) {
        for (std::size_t n = 0; n < bands.size(); ++n) {
            if (bands[n].band_support().contains(atom)) {
                values[atom] = static_cast<StopValue>(n + 1);
                break;
            }
        }
    }
    return StoppingTime(std::move(filtration), std::move(values));
}

} // namespace stoneprob
