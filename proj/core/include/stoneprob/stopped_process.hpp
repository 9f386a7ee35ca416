#pragma once

#include <span>
#include <utility>

#include "stoneprob/adapted_process.hpp"
#include "stoneprob/stopping_time.hpp"

namespace stoneprob {

// The element seen at the stopping time: coordinate omega of X_{tau(omega)}.
// Computed pointwise and again as the band sum over level sets; the two
// routes must agree exactly, and both are exposed so tests can call them
// independently.
LatticeElement stopped_element(const AdaptedProcess& p, const StoppingTime& t);
LatticeElement stopped_element_pointwise(const AdaptedProcess& p, const StoppingTime& t);
LatticeElement stopped_element_via_bands(const AdaptedProcess& p, const StoppingTime& t);

// The process frozen at tau: entry n is the element stopped at tau meet n.
// Adapted to the same filtration; the constructor re-verifies that.
AdaptedProcess stopped_process(const AdaptedProcess& p, const StoppingTime& t);

struct IncreasingIdentityRecord {
    bool join_holds = false;
    bool meet_holds = false;
    bool sup_holds = false;
    bool inf_holds = false;
    // Largest absolute coordinate difference seen across the four checks.
    double max_deviation = 0.0;

    bool all_hold() const { return join_holds && meet_holds && sup_holds && inf_holds; }
};

// For an increasing process: freezing commutes with the lattice operations
// on stopping times. X at join(s, t) equals the sup of the frozen elements,
// dually for meet, and the same along a finite family for sup and inf.
// The family's sup must stay bounded by the horizon.
IncreasingIdentityRecord increasing_process_identities(const AdaptedProcess& p,
                                                       const StoppingTime& s,
                                                       const StoppingTime& t,
                                                       std::span<const StoppingTime> family);

// The indicator process of reaching tau, and its first-hit recovery. The
// process X_n = indicator of {tau <= n} is increasing, adapted, {0,1}-valued;
// reading back the first n with X_n = 1 (never if none) returns tau exactly.
// horizon_if_never sizes the process when tau is never everywhere (the
// filtration's stage count when 0).
std::pair<AdaptedProcess, StoppingTime> debut_roundtrip(const StoppingTime& t,
                                                        std::size_t horizon_if_never = 0);

// First time an increasing {0,1}-valued adapted process reaches 1.
StoppingTime hitting_time(const AdaptedProcess& p);

} // namespace stoneprob
