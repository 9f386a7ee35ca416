#pragma once

#include <span>
#include <utility>
#include <vector>

#include "stoneprob/clopen_set.hpp"
#include "stoneprob/lattice_element.hpp"

namespace stoneprob {

// A band projection on C^inf(K). Bands of a finite Stone space are exactly
// the sets of functions vanishing off a clopen set, so a band projection
// is multiplication by a clopen indicator.
class BandProjection {
public:
    explicit BandProjection(ClopenSet support) : support_(std::move(support)) {}

    static BandProjection zero(const StoneSpace& space) { return BandProjection(ClopenSet::empty(space)); }
    static BandProjection identity(const StoneSpace& space) { return BandProjection(ClopenSet::full(space)); }

    const ClopenSet& band_support() const { return support_; }
    const StoneSpace& space() const { return support_.space(); }

    // Multiply by the indicator; coordinates off the support become 0 even
    // when they were infinite (0 * inf = 0).
    LatticeElement apply(const LatticeElement& x) const;

    BandProjection compose(const BandProjection& other) const;
    BandProjection complement() const { return BandProjection(support_.complement()); }

    bool leq(const BandProjection& other) const { return support_.subset_of(other.band_support()); }
    friend bool operator==(const BandProjection&, const BandProjection&) = default;

private:
    ClopenSet support_;
};

// The projection onto the band generated by y: support is {y != 0}.
BandProjection band_projection_of(const LatticeElement& y);

// Splits u from the sup completion into its finite part (u where finite,
// 0 elsewhere) and infinite part (+inf where u is +inf, 0 elsewhere).
// Adding the parts recovers u.
std::pair<LatticeElement, LatticeElement> finite_infinite_decomposition(const LatticeElement& u);

// Pointwise supremum of a non-empty family in the positive sup completion.
// Always defined there; coordinates may come out +inf.
LatticeElement sup_family(std::span<const LatticeElement> family);

} // namespace stoneprob
