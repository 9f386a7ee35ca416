#include "stoneprob/daniell.hpp"

#include <vector>

namespace stoneprob {

LatticeElement mu_measure(const SpectralSystem& sys, const IntervalSet& s) {
    LatticeElement out = LatticeElement::zero(sys.space());
    for (const Interval& p : s.pieces()) {
        LatticeElement piece = sys.indicator_at(p.hi) - sys.indicator_at(p.lo);
        out = out + piece;
    }
    return out;
}

LatticeElement daniell_step(const StepFunction& f, const SpectralSystem& sys) {
    const std::vector<double>& bps = f.breakpoints();
    const std::vector<double>& vals = f.piece_values();
    LatticeElement out = LatticeElement::zero(sys.space());
    double lo = -extreal::infinity;
    for (std::size_t i = 0; i < bps.size(); ++i) {
        LatticeElement piece = sys.indicator_at(bps[i]) - sys.indicator_at(lo);
        out = out + piece.scale(vals[i]);
        lo = bps[i];
    }
    // Tail piece (g_n, inf), measured by E - A_{g_n}.
    LatticeElement tail = sys.indicator_at(extreal::infinity) - sys.indicator_at(lo);
    out = out + tail.scale(f.value_at_infinity());
    return out;
}

LatticeElement daniell_step(const StepFunction& f, const LatticeElement& x) {
    return daniell_step(f, SpectralSystem(x));
}

LatticeElement daniell_monotone(const MonotoneStepSequence& seq, const LatticeElement& x,
                                std::size_t horizon) {
    if (horizon == 0 || horizon > seq.size())
        throw InvalidArgument("daniell_monotone: horizon must address a prefix of the sequence");
    SpectralSystem sys(x);
    std::vector<LatticeElement> integrals;
    integrals.reserve(horizon);
    for (std::size_t k = 0; k < horizon; ++k) integrals.push_back(daniell_step(seq.term(k), sys));
    // Monotone terms give monotone integrals; their sup is the limit.
    std::vector<double> out(x.size(), -extreal::infinity);
    for (const LatticeElement& v : integrals)
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::max(out[i], v[i]);
    return LatticeElement(x.space(), std::move(out));
}

} // namespace stoneprob
