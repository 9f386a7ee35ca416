#include "stoneprob/lattice_element.hpp"

#include <algorithm>
#include <cmath>

namespace stoneprob {

namespace {

std::vector<double> checked_values(const StoneSpace& space, std::vector<double> values) {
    if (values.size() != space.atom_count())
        throw InvalidArgument("LatticeElement: one value per atom required");
    for (double v : values) extreal::reject_nan(v, "LatticeElement");
    return values;
}

} // namespace

LatticeElement::LatticeElement(StoneSpace space, std::vector<double> values)
    : space_(space), values_(checked_values(space, std::move(values))) {}

LatticeElement LatticeElement::constant(const StoneSpace& space, double value) {
    extreal::reject_nan(value, "LatticeElement::constant");
    return LatticeElement(space, std::vector<double>(space.atom_count(), value));
}

bool LatticeElement::is_finite() const {
    return std::all_of(values_.begin(), values_.end(), [](double v) { return extreal::is_finite(v); });
}

bool LatticeElement::in_sup_completion() const {
    return std::none_of(values_.begin(), values_.end(),
                        [](double v) { return v == -extreal::infinity; });
}

LatticeElement LatticeElement::add(const LatticeElement& other) const {
    require_same_space(space_, other.space_, "add");
    std::vector<double> out(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) out[i] = extreal::add(values_[i], other.values_[i]);
    return LatticeElement(space_, std::move(out));
}

LatticeElement LatticeElement::subtract(const LatticeElement& other) const {
    require_same_space(space_, other.space_, "subtract");
    std::vector<double> out(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i)
        out[i] = extreal::subtract(values_[i], other.values_[i]);
    return LatticeElement(space_, std::move(out));
}

LatticeElement LatticeElement::scale(double c) const {
    extreal::reject_nan(c, "scale");
    std::vector<double> out(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) out[i] = extreal::multiply(c, values_[i]);
    return LatticeElement(space_, std::move(out));
}

LatticeElement LatticeElement::negate() const { return scale(-1.0); }

LatticeElement LatticeElement::multiply(const LatticeElement& other) const {
    require_same_space(space_, other.space_, "multiply");
    std::vector<double> out(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i)
        out[i] = extreal::multiply(values_[i], other.values_[i]);
    return LatticeElement(space_, std::move(out));
}

LatticeElement LatticeElement::sup(const LatticeElement& other) const {
    require_same_space(space_, other.space_, "sup");
    std::vector<double> out(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) out[i] = std::max(values_[i], other.values_[i]);
    return LatticeElement(space_, std::move(out));
}

LatticeElement LatticeElement::inf(const LatticeElement& other) const {
    require_same_space(space_, other.space_, "inf");
    std::vector<double> out(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) out[i] = std::min(values_[i], other.values_[i]);
    return LatticeElement(space_, std::move(out));
}

LatticeElement LatticeElement::abs() const {
    std::vector<double> out(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) out[i] = std::fabs(values_[i]);
    return LatticeElement(space_, std::move(out));
}

LatticeElement LatticeElement::positive_part() const {
    std::vector<double> out(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) out[i] = std::max(values_[i], 0.0);
    return LatticeElement(space_, std::move(out));
}

LatticeElement LatticeElement::negative_part() const {
    std::vector<double> out(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) out[i] = std::max(-values_[i], 0.0);
    return LatticeElement(space_, std::move(out));
}

bool LatticeElement::leq(const LatticeElement& other) const {
    require_same_space(space_, other.space_, "leq");
    for (std::size_t i = 0; i < values_.size(); ++i)
        if (!(values_[i] <= other.values_[i])) return false;
    return true;
}

bool approx_equal(const LatticeElement& a, const LatticeElement& b, double rel_tol, double abs_tol) {
    require_same_space(a.space(), b.space(), "approx_equal");
    for (std::size_t i = 0; i < a.size(); ++i) {
        double x = a[i], y = b[i];
        if (x == y) continue;
        if (!extreal::is_finite(x) || !extreal::is_finite(y)) return false;
        double bound = std::max(abs_tol, rel_tol * std::max(std::fabs(x), std::fabs(y)));
        if (std::fabs(x - y) > bound) return false;
    }
    return true;
}

} // namespace stoneprob
