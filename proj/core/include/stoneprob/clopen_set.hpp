#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "stoneprob/lattice_element.hpp"
#include "stoneprob/stone_space.hpp"

namespace stoneprob {

// A clopen subset of a finite Stone space. Since every subset of a finite
// discrete space is clopen, this is a membership vector with set algebra.
class ClopenSet {
public:
    ClopenSet(StoneSpace space, std::vector<bool> membership);

    static ClopenSet empty(const StoneSpace& space);
    static ClopenSet full(const StoneSpace& space);
    static ClopenSet of(const StoneSpace& space, std::initializer_list<std::size_t> atoms);

    const StoneSpace& space() const { return space_; }
    bool contains(std::size_t atom) const { return membership_[atom]; }
    const std::vector<bool>& membership() const { return membership_; }

    std::size_t count() const;
    bool is_empty() const { return count() == 0; }
    bool is_full() const { return count() == space_.atom_count(); }

    ClopenSet unite(const ClopenSet& other) const;
    ClopenSet intersect(const ClopenSet& other) const;
    ClopenSet complement() const;
    ClopenSet difference(const ClopenSet& other) const;

    bool subset_of(const ClopenSet& other) const;
    bool disjoint_with(const ClopenSet& other) const;

    // The indicator function as a lattice element.
    LatticeElement indicator() const;

    friend bool operator==(const ClopenSet&, const ClopenSet&) = default;

private:
    StoneSpace space_;
    std::vector<bool> membership_;
};

} // namespace stoneprob
