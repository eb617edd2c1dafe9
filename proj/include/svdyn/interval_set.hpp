#pragma once

#include <optional>
#include <string>
#include <vector>

#include "svdyn/rational.hpp"

namespace svdyn {

// Closed interval [lo, hi], degenerate (lo == hi) allowed.
struct Interval {
    Rational lo;
    Rational hi;

    Interval() = default;
    Interval(Rational l, Rational h);

    bool degenerate() const { return lo == hi; }
    Rational length() const { return hi - lo; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    bool contains(const Interval& other) const { return lo <= other.lo && other.hi <= hi; }
    bool intersects(const Interval& other) const { return lo <= other.hi && other.lo <= hi; }

    friend bool operator==(const Interval&, const Interval&) = default;
};

std::optional<Interval> intersect(const Interval& a, const Interval& b);
Interval hull(const Interval& a, const Interval& b);

// Finite union of disjoint closed intervals, sorted; touching intervals merged.
// A degenerate part represents an isolated point.
class IntervalSet {
public:
    IntervalSet() = default;
    explicit IntervalSet(Interval iv) { add(iv); }
    static IntervalSet unit() { return IntervalSet(Interval(Rational(0), Rational(1))); }
    static IntervalSet point(const Rational& x) { return IntervalSet(Interval(x, x)); }

    void add(const Interval& iv);
    void add(const IntervalSet& other);

    bool empty() const { return parts_.empty(); }
    std::size_t component_count() const { return parts_.size(); }
    const std::vector<Interval>& parts() const { return parts_; }

    bool contains(const Rational& x) const;
    bool contains(const Interval& iv) const;
    bool covers(const IntervalSet& other) const;
    bool intersects(const Interval& iv) const;

    // Component containing x, if any.
    std::optional<Interval> component_of(const Rational& x) const;

    IntervalSet intersected(const Interval& iv) const;
    IntervalSet intersected(const IntervalSet& other) const;

    // Any nondegenerate part.
    bool has_interior() const;

    Interval hull() const;
    Rational total_length() const;

    // Leftmost point of `ambient` not covered by this set, when one exists.
    // Interior witnesses are midpoints of uncovered gaps.
    std::optional<Rational> uncovered_point_within(const Interval& ambient) const;

    std::string to_string() const;

    friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

private:
    std::vector<Interval> parts_;
};

IntervalSet unite(const IntervalSet& a, const IntervalSet& b);

} // namespace svdyn
