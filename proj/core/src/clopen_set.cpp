#include "stoneprob/clopen_set.hpp"

#include <algorithm>

namespace stoneprob {

ClopenSet::ClopenSet(StoneSpace space, std::vector<bool> membership)
    : space_(space), membership_(std::move(membership)) {
    if (membership_.size() != space_.atom_count())
        throw InvalidArgument("ClopenSet: one membership bit per atom required");
}

ClopenSet ClopenSet::empty(const StoneSpace& space) {
    return ClopenSet(space, std::vector<bool>(space.atom_count(), false));
}

ClopenSet ClopenSet::full(const StoneSpace& space) {
    return ClopenSet(space, std::vector<bool>(space.atom_count(), true));
}

ClopenSet ClopenSet::of(const StoneSpace& space, std::initializer_list<std::size_t> atoms) {
    std::vector<bool> bits(space.atom_count(), false);
    for (std::size_t a : atoms) {
        if (a >= space.atom_count()) throw InvalidArgument("ClopenSet::of: atom index out of range");
        bits[a] = true;
    }
    return ClopenSet(space, std::move(bits));
}

std::size_t ClopenSet::count() const {
    return static_cast<std::size_t>(std::count(membership_.begin(), membership_.end(), true));
}

ClopenSet ClopenSet::unite(const ClopenSet& other) const {
    require_same_space(space_, other.space_, "unite");
    std::vector<bool> bits(membership_.size());
    for (std::size_t i = 0; i < bits.size(); ++i) bits[i] = membership_[i] || other.membership_[i];
    return ClopenSet(space_, std::move(bits));
}

ClopenSet ClopenSet::intersect(const ClopenSet& other) const {
    require_same_space(space_, other.space_, "intersect");
    std::vector<bool> bits(membership_.size());
    for (std::size_t i = 0; i < bits.size(); ++i) bits[i] = membership_[i] && other.membership_[i];
    return ClopenSet(space_, std::move(bits));
}

ClopenSet ClopenSet::complement() const {
    std::vector<bool> bits(membership_.size());
    for (std::size_t i = 0; i < bits.size(); ++i) bits[i] = !membership_[i];
    return ClopenSet(space_, std::move(bits));
}

ClopenSet ClopenSet::difference(const ClopenSet& other) const {
    return intersect(other.complement());
}

bool ClopenSet::subset_of(const ClopenSet& other) const {
    require_same_space(space_, other.space_, "subset_of");
    for (std::size_t i = 0; i < membership_.size(); ++i)
        if (membership_[i] && !other.membership_[i]) return false;
    return true;
}

bool ClopenSet::disjoint_with(const ClopenSet& other) const {
    require_same_space(space_, other.space_, "disjoint_with");
    for (std::size_t i = 0; i < membership_.size(); ++i)
        if (membership_[i] && other.membership_[i]) return false;
    return true;
}

LatticeElement ClopenSet::indicator() const {
    std::vector<double> vals(membership_.size());
    for (std::size_t i = 0; i < vals.size(); ++i) vals[i] = membership_[i] ? 1.0 : 0.0;
    return LatticeElement(space_, std::move(vals));
}

} // namespace stoneprob
