#include "stoneprob/stopped_process.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "stoneprob/stopping_algebra.hpp"

namespace stoneprob {

namespace {

void require_compatible(const AdaptedProcess& p, const StoppingTime& t, const char* where) {
    require_same_space(p.filtration().space(), t.space(), where);
    if (!(p.filtration() == t.filtration()))
        throw FiltrationMismatch(std::string(where) + ": process and time use different filtrations");
}

} // namespace

LatticeElement stopped_element_pointwise(const AdaptedProcess& p, const StoppingTime& t) {
    require_compatible(p, t, "stopped_element");
    if (!t.is_bounded_by(p.horizon()))
        throw Unbounded("stopped_element: time exceeds the process horizon");
    std::vector<double> out(t.values().size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = p.at(t[i])[i];
    return LatticeElement(p.filtration().space(), std::move(out));
}

LatticeElement stopped_element_via_bands(const AdaptedProcess& p, const StoppingTime& t) {
    require_compatible(p, t, "stopped_element");
    if (!t.is_bounded_by(p.horizon()))
        throw Unbounded("stopped_element: time exceeds the process horizon");
    // Sum of (P_n - P_{n-1}) X_n: each level set contributes its slice.
    LatticeElement acc = LatticeElement::zero(p.filtration().space());
    for (StopValue n = 1; n <= t.max_finite_value(); ++n)
        acc = acc + p.at(n).multiply(t.level_set(n).indicator());
    return acc;
}

LatticeElement stopped_element(const AdaptedProcess& p, const StoppingTime& t) {
    LatticeElement pointwise = stopped_element_pointwise(p, t);
    LatticeElement banded = stopped_element_via_bands(p, t);
    if (!(pointwise == banded))
        throw std::logic_error("stopped_element: pointwise and band-sum routes disagree");
    return pointwise;
}

AdaptedProcess stopped_process(const AdaptedProcess& p, const StoppingTime& t) {
    require_compatible(p, t, "stopped_process");
    std::vector<LatticeElement> path;
    path.reserve(p.horizon());
    for (std::size_t n = 1; n <= p.horizon(); ++n) {
        StoppingTime truncated =
            st_meet(t, StoppingTime::constant(t.filtration_ptr(), static_cast<StopValue>(n)));
        path.push_back(stopped_element(p, truncated));
    }
    return AdaptedProcess(p.filtration_ptr(), std::move(path));
}

IncreasingIdentityRecord increasing_process_identities(const AdaptedProcess& p,
                                                       const StoppingTime& s,
                                                       const StoppingTime& t,
                                                       std::span<const StoppingTime> family) {
    if (!p.is_increasing())
        throw NotIncreasing("increasing_process_identities: process must be increasing");
    require_compatible(p, s, "increasing_process_identities");
    require_compatible(p, t, "increasing_process_identities");
    if (family.empty()) throw EmptyFamily("increasing_process_identities: empty family");
    for (const StoppingTime& u : family)
        require_compatible(p, u, "increasing_process_identities");

    IncreasingIdentityRecord record;
    auto track = [&record](const LatticeElement& a, const LatticeElement& b) {
        bool equal = a == b;
        for (std::size_t i = 0; i < a.size(); ++i)
            record.max_deviation = std::max(record.max_deviation, std::fabs(a[i] - b[i]));
        return equal;
    };

    record.join_holds = track(stopped_element(p, st_join(s, t)),
                              stopped_element(p, s).sup(stopped_element(p, t)));
    record.meet_holds = track(stopped_element(p, st_meet(s, t)),
                              stopped_element(p, s).inf(stopped_element(p, t)));

    StoppingTime family_sup = st_extremum(family, StopExtremum::Sup);
    if (!family_sup.is_bounded_by(p.horizon()))
        throw Unbounded("increasing_process_identities: family sup exceeds the horizon");
    StoppingTime family_inf = st_extremum(family, StopExtremum::Inf);

    LatticeElement sup_of_stops = stopped_element(p, family.front());
    LatticeElement inf_of_stops = sup_of_stops;
    for (const StoppingTime& u : family) {
        LatticeElement stopped = stopped_element(p, u);
        sup_of_stops = sup_of_stops.sup(stopped);
        inf_of_stops = inf_of_stops.inf(stopped);
    }
    record.sup_holds = track(stopped_element(p, family_sup), sup_of_stops);
    record.inf_holds = track(stopped_element(p, family_inf), inf_of_stops);
    return record;
}

std::pair<AdaptedProcess, StoppingTime> debut_roundtrip(const StoppingTime& t,
                                                        std::size_t horizon_if_never) {
    std::size_t horizon = t.max_finite_value();
    if (horizon == 0)
        horizon = horizon_if_never > 0 ? horizon_if_never : t.filtration().stage_count();
    std::vector<LatticeElement> path;
    path.reserve(horizon);
    for (std::size_t n = 1; n <= horizon; ++n)
        path.push_back(t.stopped_by(static_cast<StopValue>(n)).indicator());
    AdaptedProcess process(t.filtration_ptr(), std::move(path));
    StoppingTime recovered = hitting_time(process);
    return {std::move(process), std::move(recovered)};
}

StoppingTime hitting_time(const AdaptedProcess& p) {
    if (!p.indicator_valued() || !p.is_increasing())
        throw NotIndicatorProcess("hitting_time: needs an increasing {0,1}-valued process");
    std::vector<StopValue> values(p.filtration().space().atom_count(), kNever);
    for (std::size_t atom = 0; atom < values.size(); ++atom) {
        for (std::size_t n = 1; n <= p.horizon(); ++n) {
            if (p.at(n)[atom] == 1.0) {
                values[atom] = static_cast<StopValue>(n);
                break;
            }
        }
    }
    return StoppingTime(p.filtration_ptr(), std::move(values));
}

} // namespace stoneprob
