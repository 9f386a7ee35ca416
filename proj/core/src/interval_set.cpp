#include "stoneprob/interval_set.hpp"

#include <algorithm>
#include <cmath>

namespace stoneprob {

namespace {

void check_piece(const Interval& p) {
    if (std::isnan(p.lo) || std::isnan(p.hi)) throw InvalidInterval("interval endpoint is NaN");
    if (p.lo == extreal::infinity || p.hi == -extreal::infinity || !(p.lo < p.hi))
        throw InvalidInterval("interval needs lo < hi with lo < +inf and hi > -inf");
}

std::vector<Interval> canonicalize(std::vector<Interval> pieces) {
    for (const Interval& p : pieces) check_piece(p);
    std::sort(pieces.begin(), pieces.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    std::vector<Interval> merged;
    for (const Interval& p : pieces) {
        // Half-open pieces (a, b], (b, c] are adjacent exactly when bounds touch.
        if (!merged.empty() && p.lo <= merged.back().hi) {
            merged.back().hi = std::max(merged.back().hi, p.hi);
        } else {
            merged.push_back(p);
        }
    }
    return merged;
}

} // namespace

IntervalSet::IntervalSet(std::vector<Interval> pieces) : pieces_(canonicalize(std::move(pieces))) {}

IntervalSet IntervalSet::whole_line() {
    return IntervalSet({{-extreal::infinity, extreal::infinity}});
}

IntervalSet IntervalSet::left_open_right_closed(double a, double b) {
    return IntervalSet({{a, b}});
}

IntervalSet IntervalSet::ray_up(double a) { return IntervalSet({{a, extreal::infinity}}); }

IntervalSet IntervalSet::ray_down(double b) { return IntervalSet({{-extreal::infinity, b}}); }

bool IntervalSet::contains(double t) const {
    for (const Interval& p : pieces_)
        if (p.contains(t)) return true;
    return false;
}

IntervalSet IntervalSet::unite(const IntervalSet& other) const {
    std::vector<Interval> all = pieces_;
    all.insert(all.end(), other.pieces_.begin(), other.pieces_.end());
    return IntervalSet(std::move(all));
}

IntervalSet IntervalSet::intersect(const IntervalSet& other) const {
    std::vector<Interval> out;
    for (const Interval& p : pieces_) {
        for (const Interval& q : other.pieces_) {
            double lo = std::max(p.lo, q.lo);
            double hi = std::min(p.hi, q.hi);
            if (lo < hi) out.push_back({lo, hi});
        }
    }
    IntervalSet result;
    result.pieces_ = canonicalize(std::move(out));
    return result;
}

IntervalSet IntervalSet::complement() const {
    std::vector<Interval> out;
    double cursor = -extreal::infinity;
    for (const Interval& p : pieces_) {
        if (cursor < p.lo) out.push_back({cursor, p.lo});
        cursor = p.hi;
    }
    if (cursor < extreal::infinity) out.push_back({cursor, extreal::infinity});
    IntervalSet result;
    result.pieces_ = canonicalize(std::move(out));
    return result;
}

} // namespace stoneprob
