#include "stoneprob/band_projection.hpp"

#include <algorithm>

namespace stoneprob {

LatticeElement BandProjection::apply(const LatticeElement& x) const {
    require_same_space(space(), x.space(), "BandProjection::apply");
    std::vector<double> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = support_.contains(i) ? x[i] : 0.0;
    return LatticeElement(x.space(), std::move(out));
}

BandProjection BandProjection::compose(const BandProjection& other) const {
    return BandProjection(support_.intersect(other.band_support()));
}

BandProjection band_projection_of(const LatticeElement& y) {
    std::vector<bool> bits(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) bits[i] = y[i] != 0.0;
    return BandProjection(ClopenSet(y.space(), std::move(bits)));
}

std::pair<LatticeElement, LatticeElement> finite_infinite_decomposition(const LatticeElement& u) {
    if (!u.in_sup_completion())
        throw NotSupCompletion("finite_infinite_decomposition: -inf coordinate present");
    std::vector<double> fin(u.size()), infin(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] == extreal::infinity) {
            fin[i] = 0.0;
            infin[i] = extreal::infinity;
        } else {
            fin[i] = u[i];
            infin[i] = 0.0;
        }
    }
    return {LatticeElement(u.space(), std::move(fin)), LatticeElement(u.space(), std::move(infin))};
}

LatticeElement sup_family(std::span<const LatticeElement> family) {
    if (family.empty()) throw EmptyFamily("sup_family: empty family has no supremum here");
    const StoneSpace& space = family.front().space();
    for (const LatticeElement& u : family) {
        require_same_space(space, u.space(), "sup_family");
        if (!u.in_sup_completion()) throw NotSupCompletion("sup_family: -inf coordinate present");
        if (!LatticeElement::zero(space).leq(u))
            throw InvalidArgument("sup_family: family must be positive");
    }
    std::vector<double> out(space.atom_count(), 0.0);
    for (const LatticeElement& u : family)
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::max(out[i], u[i]);
    return LatticeElement(space, std::move(out));
}

} // namespace stoneprob
