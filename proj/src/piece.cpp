#include "svdyn/piece.hpp"

#include <sstream>
#include <utility>

namespace svdyn {

namespace {

void check_unit(const Rational& v, const char* what) {
    if (v < 0 || v > 1) {
        throw DomainError(std::string(what) + " coordinate " + to_string(v) + " outside [0,1]");
    }
}

bool lex_less(const Rational& ax, const Rational& ay, const Rational& bx, const Rational& by) {
    if (ax != bx) return ax < bx;
    return ay < by;
}

} // namespace

Piece::Piece(PieceKind k, Rational x1, Rational y1, Rational x2, Rational y2)
    : kind_(k), x1_(std::move(x1)), y1_(std::move(y1)), x2_(std::move(x2)), y2_(std::move(y2)) {}

Piece Piece::point(Rational x, Rational y) {
    check_unit(x, "point x");
    check_unit(y, "point y");
    return Piece(PieceKind::Point, x, y, x, y);
}

Piece Piece::segment(Rational x1, Rational y1, Rational x2, Rational y2) {
    check_unit(x1, "segment x");
    check_unit(y1, "segment y");
    check_unit(x2, "segment x");
    check_unit(y2, "segment y");
    if (x1 == x2 && y1 == y2) return point(std::move(x1), std::move(y1));
    if (lex_less(x2, y2, x1, y1)) {
        std::swap(x1, x2);
        std::swap(y1, y2);
    }
    return Piece(PieceKind::Segment, std::move(x1), std::move(y1), std::move(x2), std::move(y2));
}

Piece Piece::rect(Rational x1, Rational y1, Rational x2, Rational y2) {
    check_unit(x1, "rect x");
    check_unit(y1, "rect y");
    check_unit(x2, "rect x");
    check_unit(y2, "rect y");
    if (x1 > x2) std::swap(x1, x2);
    if (y1 > y2) std::swap(y1, y2);
    if (x1 == x2 || y1 == y2) return segment(std::move(x1), std::move(y1), std::move(x2), std::move(y2));
    return Piece(PieceKind::Rect, std::move(x1), std::move(y1), std::move(x2), std::move(y2));
}

Interval Piece::x_extent() const {
    return Interval(rat_min(x1_, x2_), rat_max(x1_, x2_));
}

Interval Piece::y_extent() const {
    return Interval(rat_min(y1_, y2_), rat_max(y1_, y2_));
}

bool Piece::contains(const Rational& x, const Rational& y) const {
    switch (kind_) {
    case PieceKind::Point:
        return x == x1_ && y == y1_;
    case PieceKind::Rect:
        return x_extent().contains(x) && y_extent().contains(y);
    case PieceKind::Segment: {
        if (!x_extent().contains(x) || !y_extent().contains(y)) return false;
        // Collinearity: (x - x1, y - y1) x (x2 - x1, y2 - y1) == 0.
        return (x - x1_) * (y2_ - y1_) == (y - y1_) * (x2_ - x1_);
    }
    }
    return false;
}

std::optional<Interval> Piece::slice_at(const Rational& x) const {
    switch (kind_) {
    case PieceKind::Point:
        if (x == x1_) return Interval(y1_, y1_);
        return std::nullopt;
    case PieceKind::Rect:
        if (x_extent().contains(x)) return Interval(y1_, y2_);
        return std::nullopt;
    case PieceKind::Segment:
        if (!x_extent().contains(x)) return std::nullopt;
        if (x1_ == x2_) return y_extent();
        {
            Rational y = segment_y_at(x);
            return Interval(y, y);
        }
    }
    return std::nullopt;
}

std::optional<Interval> Piece::image_of(const Interval& xs) const {
    switch (kind_) {
    case PieceKind::Point:
        if (xs.contains(x1_)) return Interval(y1_, y1_);
        return std::nullopt;
    case PieceKind::Rect:
        if (x_extent().intersects(xs)) return Interval(y1_, y2_);
        return std::nullopt;
    case PieceKind::Segment: {
        if (x1_ == x2_) {
            if (xs.contains(x1_)) return y_extent();
            return std::nullopt;
        }
        auto xr = intersect(x_extent(), xs);
        if (!xr) return std::nullopt;
        Rational ya = segment_y_at(xr->lo);
        Rational yb = segment_y_at(xr->hi);
        return Interval(rat_min(ya, yb), rat_max(ya, yb));
    }
    }
    return std::nullopt;
}

std::optional<Interval> Piece::preimage_of(const Interval& ys) const {
    switch (kind_) {
    case PieceKind::Point:
        if (ys.contains(y1_)) return Interval(x1_, x1_);
        return std::nullopt;
    case PieceKind::Rect:
        if (y_extent().intersects(ys)) return Interval(x1_, x2_);
        return std::nullopt;
    case PieceKind::Segment: {
        if (x1_ == x2_) {
            if (y_extent().intersects(ys)) return Interval(x1_, x1_);
            return std::nullopt;
        }
        if (y1_ == y2_) {
            if (ys.contains(y1_)) return x_extent();
            return std::nullopt;
        }
        auto yr = intersect(y_extent(), ys);
        if (!yr) return std::nullopt;
        Rational xa = segment_x_at(yr->lo);
        Rational xb = segment_x_at(yr->hi);
        return Interval(rat_min(xa, xb), rat_max(xa, xb));
    }
    }
    return std::nullopt;
}

Rational Piece::segment_y_at(const Rational& x) const {
    return y1_ + (y2_ - y1_) * (x - x1_) / (x2_ - x1_);
}

Rational Piece::segment_x_at(const Rational& y) const {
    return x1_ + (x2_ - x1_) * (y - y1_) / (y2_ - y1_);
}

Piece Piece::transposed() const {
    switch (kind_) {
    case PieceKind::Point:
        return point(y1_, x1_);
    case PieceKind::Segment:
        return segment(y1_, x1_, y2_, x2_);
    case PieceKind::Rect:
        return rect(y1_, x1_, y2_, x2_);
    }
    throw InternalError("unreachable piece kind");
}

std::optional<Piece> Piece::clipped_to_box(const Interval& xs, const Interval& ys) const {
    switch (kind_) {
    case PieceKind::Point:
        if (xs.contains(x1_) && ys.contains(y1_)) return *this;
        return std::nullopt;
    case PieceKind::Rect: {
        auto xr = intersect(x_extent(), xs);
        auto yr = intersect(y_extent(), ys);
        if (!xr || !yr) return std::nullopt;
        return rect(xr->lo, yr->lo, xr->hi, yr->hi);
    }
    case PieceKind::Segment: {
        // Exact parametric clip: p(t) = (x1,y1) + t*(dx,dy), t in [0,1].
        Rational dx = x2_ - x1_;
        Rational dy = y2_ - y1_;
        Rational t_lo(0), t_hi(1);
        auto clip_axis = [&](const Rational& start, const Rational& d, const Interval& bounds) -> bool {
            if (d == 0) return bounds.contains(start);
            Rational ta = (bounds.lo - start) / d;
            Rational tb = (bounds.hi - start) / d;
            if (ta > tb) std::swap(ta, tb);
            if (ta > t_lo) t_lo = ta;
            if (tb < t_hi) t_hi = tb;
            return true;
        };
        if (!clip_axis(x1_, dx, xs)) return std::nullopt;
        if (!clip_axis(y1_, dy, ys)) return std::nullopt;
        if (t_lo > t_hi) return std::nullopt;
        Rational ax = x1_ + t_lo * dx, ay = y1_ + t_lo * dy;
        Rational bx = x1_ + t_hi * dx, by = y1_ + t_hi * dy;
        return segment(ax, ay, bx, by);
    }
    }
    return std::nullopt;
}

std::string Piece::to_string() const {
    std::ostringstream os;
    switch (kind_) {
    case PieceKind::Point:
        os << "pt " << svdyn::to_string(x1_) << " " << svdyn::to_string(y1_);
        break;
    case PieceKind::Segment:
        os << "seg " << svdyn::to_string(x1_) << " " << svdyn::to_string(y1_) << " "
           << svdyn::to_string(x2_) << " " << svdyn::to_string(y2_);
        break;
    case PieceKind::Rect:
        os << "rect " << svdyn::to_string(x1_) << " " << svdyn::to_string(y1_) << " "
           << svdyn::to_string(x2_) << " " << svdyn::to_string(y2_);
        break;
    }
    return os.str();
}

namespace {

// Intersection of two non-degenerate closed segments.
std::optional<Piece> segment_segment(const Piece& a, const Piece& b) {
    Rational d1x = a.x2() - a.x1(), d1y = a.y2() - a.y1();
    Rational d2x = b.x2() - b.x1(), d2y = b.y2() - b.y1();
    Rational denom = d1x * d2y - d1y * d2x;
    Rational wx = b.x1() - a.x1(), wy = b.y1() - a.y1();
    if (denom != 0) {
        Rational t = (wx * d2y - wy * d2x) / denom;
        Rational u = (wx * d1y - wy * d1x) / denom;
        if (t < 0 || t > 1 || u < 0 || u > 1) return std::nullopt;
        return Piece::point(a.x1() + t * d1x, a.y1() + t * d1y);
    }
    // Parallel; collinear iff w x d1 == 0.
    if (wx * d1y - wy * d1x != 0) return std::nullopt;
    // Parameterize b's endpoints along a: s = ((p - a1) . d1) / (d1 . d1).
    Rational dd = d1x * d1x + d1y * d1y;
    Rational s1 = (wx * d1x + wy * d1y) / dd;
    Rational s2 = ((b.x2() - a.x1()) * d1x + (b.y2() - a.y1()) * d1y) / dd;
    if (s1 > s2) std::swap(s1, s2);
    Rational lo = rat_max(s1, Rational(0));
    Rational hi = rat_min(s2, Rational(1));
    if (lo > hi) return std::nullopt;
    return Piece::segment(a.x1() + lo * d1x, a.y1() + lo * d1y,
                          a.x1() + hi * d1x, a.y1() + hi * d1y);
}

} // namespace

std::optional<Piece> piece_intersection(const Piece& a, const Piece& b) {
    if (!a.x_extent().intersects(b.x_extent()) || !a.y_extent().intersects(b.y_extent()))
        return std::nullopt;
    if (a.is_point()) {
        if (b.contains(a.x1(), a.y1())) return a;
        return std::nullopt;
    }
    if (b.is_point()) return piece_intersection(b, a);
    if (a.is_rect() && b.is_rect()) {
        auto xr = intersect(a.x_extent(), b.x_extent());
        auto yr = intersect(a.y_extent(), b.y_extent());
        if (!xr || !yr) return std::nullopt;
        return Piece::rect(xr->lo, yr->lo, xr->hi, yr->hi);
    }
    if (a.is_segment() && b.is_rect()) return a.clipped_to_box(b.x_extent(), b.y_extent());
    if (a.is_rect() && b.is_segment()) return b.clipped_to_box(a.x_extent(), a.y_extent());
    return segment_segment(a, b);
}

} // namespace svdyn
