#pragma once

#include <span>
#include <vector>

#include "stoneprob/band_projection.hpp"
#include "stoneprob/stopping_time.hpp"

namespace stoneprob {

enum class StopBinaryOp { Join, Meet, Plus };
enum class StopExtremum { Sup, Inf };

// Pointwise max, min, or sum of two stopping times over one filtration.
// Never is absorbing for plus and join, neutral-at-top for meet. The level
// identities behind closure, like {max <= n} = {a <= n} and {b <= n}, are
// re-verified on the result.
StoppingTime st_algebra(const StoppingTime& a, const StoppingTime& b, StopBinaryOp op);

inline StoppingTime st_join(const StoppingTime& a, const StoppingTime& b) {
    return st_algebra(a, b, StopBinaryOp::Join);
}
inline StoppingTime st_meet(const StoppingTime& a, const StoppingTime& b) {
    return st_algebra(a, b, StopBinaryOp::Meet);
}
inline StoppingTime st_plus(const StoppingTime& a, const StoppingTime& b) {
    return st_algebra(a, b, StopBinaryOp::Plus);
}

// Pointwise extremum of a non-empty family; sup may take the value never.
StoppingTime st_extremum(std::span<const StoppingTime> family, StopExtremum which);

// Relabels values through a strictly increasing sequence nk with nk[k] >= k
// (1-based), never staying never. How the sequence continues between its
// entries is irrelevant, only the entries are consumed.
StoppingTime time_change(const StoppingTime& t, std::span<const StopValue> nk);

// The projection picture: P_n is multiplication by the indicator of
// {tau <= n}. to_projections emits P_1..P_N with N = max finite value by
// default (so an all-never time gives an empty sequence); from_projections
// reads a time off an increasing sequence, validating that each P_i
// commutes with every later stage in the operator sense.
std::vector<BandProjection> to_projections(const StoppingTime& t, std::size_t length = 0);
StoppingTime from_projections(std::span<const BandProjection> bands,
                              std::shared_ptr<const Filtration> filtration);

} // namespace stoneprob
