#include "svdyn/interval_set.hpp"

#include <algorithm>
#include <sstream>

namespace svdyn {

Interval::Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
    if (lo > hi) throw DomainError("interval with lo > hi");
}

std::optional<Interval> intersect(const Interval& a, const Interval& b) {
    Rational lo = rat_max(a.lo, b.lo);
    Rational hi = rat_min(a.hi, b.hi);
    if (lo > hi) return std::nullopt;
    return Interval(lo, hi);
}

Interval hull(const Interval& a, const Interval& b) {
    return Interval(rat_min(a.lo, b.lo), rat_max(a.hi, b.hi));
}

void IntervalSet::add(const Interval& iv) {
    // Insert keeping parts sorted, then merge touching/overlapping neighbours.
    auto pos = std::lower_bound(parts_.begin(), parts_.end(), iv,
                                [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    pos = parts_.insert(pos, iv);
    std::size_t i = pos - parts_.begin();
    if (i > 0 && parts_[i - 1].hi >= parts_[i].lo) --i;
    while (i + 1 < parts_.size() && parts_[i].hi >= parts_[i + 1].lo) {
        parts_[i].hi = rat_max(parts_[i].hi, parts_[i + 1].hi);
        parts_.erase(parts_.begin() + i + 1);
    }
}

void IntervalSet::add(const IntervalSet& other) {
    for (const auto& iv : other.parts_) add(iv);
}

bool IntervalSet::contains(const Rational& x) const {
    for (const auto& p : parts_) {
        if (p.lo > x) return false;
        if (x <= p.hi) return true;
    }
    return false;
}

bool IntervalSet::contains(const Interval& iv) const {
    for (const auto& p : parts_) {
        if (p.contains(iv)) return true;
        if (p.lo > iv.lo) return false;
    }
    return false;
}

bool IntervalSet::covers(const IntervalSet& other) const {
    for (const auto& p : other.parts_)
        if (!contains(p)) return false;
    return true;
}

bool IntervalSet::intersects(const Interval& iv) const {
    for (const auto& p : parts_)
        if (p.intersects(iv)) return true;
    return false;
}

std::optional<Interval> IntervalSet::component_of(const Rational& x) const {
    for (const auto& p : parts_)
        if (p.contains(x)) return p;
    return std::nullopt;
}

IntervalSet IntervalSet::intersected(const Interval& iv) const {
    IntervalSet out;
    for (const auto& p : parts_) {
        if (auto q = intersect(p, iv)) out.add(*q);
    }
    return out;
}

IntervalSet IntervalSet::intersected(const IntervalSet& other) const {
    IntervalSet out;
    for (const auto& p : other.parts_) out.add(intersected(p));
    return out;
}

bool IntervalSet::has_interior() const {
    for (const auto& p : parts_)
        if (!p.degenerate()) return true;
    return false;
}

Interval IntervalSet::hull() const {
    if (parts_.empty()) throw DomainError("hull of empty interval set");
    return Interval(parts_.front().lo, parts_.back().hi);
}

Rational IntervalSet::total_length() const {
    Rational sum(0);
    for (const auto& p : parts_) sum += p.length();
    return sum;
}

std::optional<Rational> IntervalSet::uncovered_point_within(const Interval& ambient) const {
    Rational cursor = ambient.lo;
    bool cursor_covered = false;
    for (const auto& p : parts_) {
        if (p.hi < cursor) continue;
        if (p.lo > ambient.hi) break;
        if (p.lo <= cursor) {
            // Covered through p.hi; parts are merged, so the next gap is open on the left.
            if (p.hi >= ambient.hi) return std::nullopt;
            cursor = p.hi;
            cursor_covered = true;
        } else {
            if (!cursor_covered) return cursor;
            return midpoint(cursor, rat_min(p.lo, ambient.hi));
        }
    }
    if (cursor < ambient.hi) return cursor_covered ? midpoint(cursor, ambient.hi) : cursor;
    if (!cursor_covered && !contains(cursor)) return cursor;
    return std::nullopt;
}

std::string IntervalSet::to_string() const {
    if (parts_.empty()) return "{}";
    std::ostringstream os;
    bool first = true;
    for (const auto& p : parts_) {
        if (!first) os << " u ";
        first = false;
        if (p.degenerate())
            os << "{" << svdyn::to_string(p.lo) << "}";
        else
            os << "[" << svdyn::to_string(p.lo) << "," << svdyn::to_string(p.hi) << "]";
    }
    return os.str();
}

IntervalSet unite(const IntervalSet& a, const IntervalSet& b) {
    IntervalSet out = a;
    out.add(b);
    return out;
}

} // namespace svdyn
