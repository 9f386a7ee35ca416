#pragma once

#include <vector>

#include "stoneprob/band_projection.hpp"
#include "stoneprob/clopen_set.hpp"
#include "stoneprob/lattice_element.hpp"

namespace stoneprob {

// The right-continuous family of threshold sets A_t = {X <= t} of a finite
// element X, realized through band projections: A_t is the complement of the
// support of (X - tE)^+. On a finite space the family is determined by its
// jumps at the finitely many values of X.
class SpectralSystem {
public:
    explicit SpectralSystem(LatticeElement source);

    const LatticeElement& source() const { return source_; }
    const StoneSpace& space() const { return source_.space(); }

    // Distinct values of the source, ascending: where A_t jumps.
    const std::vector<double>& jump_points() const { return jump_points_; }

    // A_t for any extended real t; A_{-inf} is empty, A_{+inf} the whole space.
    ClopenSet at(double t) const;
    LatticeElement indicator_at(double t) const { return at(t).indicator(); }

private:
    LatticeElement source_;
    std::vector<double> jump_points_;
};

} // namespace stoneprob
