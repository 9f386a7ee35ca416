#pragma once

#include <cstddef>

#include "stoneprob/errors.hpp"

namespace stoneprob {

// A finite Stone space: extremally disconnected, so here simply a finite
// discrete set of atoms indexed 0..atom_count-1. Every subset is clopen and
// every real-valued function on the atoms is continuous.
class StoneSpace {
public:
    explicit StoneSpace(std::size_t atom_count) : atom_count_(atom_count) {
        if (atom_count == 0) throw InvalidArgument("StoneSpace: need at least one atom");
    }

    std::size_t atom_count() const { return atom_count_; }

    friend bool operator==(const StoneSpace&, const StoneSpace&) = default;

private:
    std::size_t atom_count_;
};

inline void require_same_space(const StoneSpace& a, const StoneSpace& b, const char* where) {
    if (!(a == b)) throw SpaceMismatch(std::string(where) + ": operands live on different spaces");
}

} // namespace stoneprob
