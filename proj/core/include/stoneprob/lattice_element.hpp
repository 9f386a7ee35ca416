#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "stoneprob/extended_real.hpp"
#include "stoneprob/stone_space.hpp"

namespace stoneprob {

// An element of C^inf(K) over a finite Stone space K: one extended-real value
// per atom. Coordinates may be +inf or -inf; an element is "finite" when all
// coordinates are, and lies in the sup completion when none is -inf.
// All operations are pointwise and validate that both operands share a space.
class LatticeElement {
public:
    LatticeElement(StoneSpace space, std::vector<double> values);

    static LatticeElement constant(const StoneSpace& space, double value);
    static LatticeElement zero(const StoneSpace& space) { return constant(space, 0.0); }
    // The weak order unit E, constantly one.
    static LatticeElement unit(const StoneSpace& space) { return constant(space, 1.0); }

    const StoneSpace& space() const { return space_; }
    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t atom) const { return values_[atom]; }
    const std::vector<double>& values() const { return values_; }

    bool is_finite() const;
    bool in_sup_completion() const;

    LatticeElement add(const LatticeElement& other) const;
    LatticeElement subtract(const LatticeElement& other) const;
    LatticeElement scale(double c) const;
    LatticeElement negate() const;
    // Pointwise product; 0 * inf = 0, matching multiplication by indicators.
    LatticeElement multiply(const LatticeElement& other) const;

    LatticeElement sup(const LatticeElement& other) const;
    LatticeElement inf(const LatticeElement& other) const;
    LatticeElement abs() const;
    LatticeElement positive_part() const;
    LatticeElement negative_part() const;

    // Exact pointwise comparisons.
    bool leq(const LatticeElement& other) const;
    friend bool operator==(const LatticeElement& a, const LatticeElement& b) {
        return a.space_ == b.space_ && a.values_ == b.values_;
    }

    friend LatticeElement operator+(const LatticeElement& a, const LatticeElement& b) { return a.add(b); }
    friend LatticeElement operator-(const LatticeElement& a, const LatticeElement& b) { return a.subtract(b); }
    friend LatticeElement operator-(const LatticeElement& a) { return a.negate(); }
    friend LatticeElement operator*(double c, const LatticeElement& a) { return a.scale(c); }
    friend LatticeElement operator*(const LatticeElement& a, double c) { return a.scale(c); }

private:
    StoneSpace space_;
    std::vector<double> values_;
};

// Tolerance comparison used by the continuous calculus layer. Infinite
// coordinates must match exactly; finite ones within
// max(abs_tol, rel_tol * max(|a|, |b|)).
bool approx_equal(const LatticeElement& a, const LatticeElement& b,
                  double rel_tol = 1e-9, double abs_tol = 1e-12);

} // namespace stoneprob
