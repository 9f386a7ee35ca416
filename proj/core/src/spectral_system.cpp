#include "stoneprob/spectral_system.hpp"

#include <algorithm>

namespace stoneprob {

SpectralSystem::SpectralSystem(LatticeElement source) : source_(std::move(source)) {
    if (!source_.is_finite())
        throw NotFinite("SpectralSystem: threshold sets need an everywhere finite source");
    jump_points_ = source_.values();
    std::sort(jump_points_.begin(), jump_points_.end());
    jump_points_.erase(std::unique(jump_points_.begin(), jump_points_.end()), jump_points_.end());
}

ClopenSet SpectralSystem::at(double t) const {
    if (t == -extreal::infinity) return ClopenSet::empty(space());
    if (t == extreal::infinity) return ClopenSet::full(space());
    extreal::reject_nan(t, "SpectralSystem::at");
    // E minus the projection of E onto the band of (X - tE)^+ leaves exactly
    // the atoms where X <= t. The positive-part support never flips a strict
    // sign under rounding, so this matches the direct comparison.
    LatticeElement shifted = source_ - LatticeElement::constant(space(), t);
    BandProjection onto_excess = band_projection_of(shifted.positive_part());
    return onto_excess.band_support().complement();
}

} // namespace stoneprob
