#pragma once

#include <vector>

#include "stoneprob/errors.hpp"
#include "stoneprob/extended_real.hpp"

namespace stoneprob {

// One half-open piece (lo, hi]. lo == -inf gives a lower ray (-inf, hi],
// hi == +inf an upper ray (lo, inf). lo < hi always; lo = -inf, hi = +inf
// is the whole line.
struct Interval {
    double lo;
    double hi;

    bool contains(double t) const { return lo < t && t <= hi; }
    friend bool operator==(const Interval&, const Interval&) = default;
};

// A finite disjoint union of half-open pieces, kept in canonical form:
// sorted, with overlapping or adjacent pieces merged. The constructor takes
// any finite collection and canonicalizes its union, so these behave as the
// sets they denote.
class IntervalSet {
public:
    IntervalSet() = default;
    explicit IntervalSet(std::vector<Interval> pieces);

    static IntervalSet empty() { return IntervalSet(); }
    static IntervalSet whole_line();
    static IntervalSet left_open_right_closed(double a, double b);
    static IntervalSet ray_up(double a);
    static IntervalSet ray_down(double b);

    const std::vector<Interval>& pieces() const { return pieces_; }
    bool is_empty() const { return pieces_.empty(); }
    bool contains(double t) const;

    IntervalSet unite(const IntervalSet& other) const;
    IntervalSet intersect(const IntervalSet& other) const;
    IntervalSet complement() const;

    friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

private:
    std::vector<Interval> pieces_;
};

} // namespace stoneprob
