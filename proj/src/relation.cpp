#include "svdyn/relation.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace svdyn {

namespace {

// Canonical integer line key A*x + B*y = C with gcd(A,B,C)=1 and the first
// nonzero of (A,B) positive. Works for any segment through rational points.
struct LineKey {
    BigInt a, b, c;
    bool operator<(const LineKey& o) const {
        if (a != o.a) return a < o.a;
        if (b != o.b) return b < o.b;
        return c < o.c;
    }
};

LineKey line_key(const Piece& seg) {
    Rational ar = seg.y2() - seg.y1();
    Rational br = seg.x1() - seg.x2();
    Rational cr = ar * seg.x1() + br * seg.y1();
    BigInt l = lcm(lcm(denominator(ar), denominator(br)), denominator(cr));
    BigInt a = numerator(ar) * (l / denominator(ar));
    BigInt b = numerator(br) * (l / denominator(br));
    BigInt c = numerator(cr) * (l / denominator(cr));
    BigInt g = gcd(gcd(abs(a), abs(b)), abs(c));
    if (g != 0) {
        a /= g;
        b /= g;
        c /= g;
    }
    bool flip = a < 0 || (a == 0 && b < 0);
    if (flip) {
        a = -a;
        b = -b;
        c = -c;
    }
    return LineKey{a, b, c};
}

// Parameter of a point along a line: x for non-vertical lines, y otherwise.
bool line_is_vertical(const LineKey& k) { return k.b == 0; }

} // namespace

std::vector<Piece> canonical_rect_union(const std::vector<Piece>& rects) {
    if (rects.empty()) return {};
    std::vector<Rational> xs;
    for (const auto& r : rects) {
        xs.push_back(r.x1());
        xs.push_back(r.x2());
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    struct Slab {
        Rational lo, hi;
        IntervalSet ys;
    };
    std::vector<Slab> slabs;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        IntervalSet ys;
        for (const auto& r : rects) {
            if (r.x1() <= xs[i] && r.x2() >= xs[i + 1]) ys.add(r.y_extent());
        }
        if (!ys.empty()) slabs.push_back({xs[i], xs[i + 1], std::move(ys)});
    }
    // Merge adjacent slabs with identical cross-sections.
    std::vector<Slab> merged;
    for (auto& s : slabs) {
        if (!merged.empty() && merged.back().hi == s.lo && merged.back().ys == s.ys) {
            merged.back().hi = s.hi;
        } else {
            merged.push_back(std::move(s));
        }
    }
    std::vector<Piece> out;
    for (const auto& s : merged) {
        for (const auto& yiv : s.ys.parts()) {
            out.push_back(Piece::rect(s.lo, yiv.lo, s.hi, yiv.hi));
        }
    }
    return out;
}

namespace {

// Closed parameter intervals of `seg` covered by the rect union.
IntervalSet covered_params(const Piece& seg, const std::vector<Piece>& rects) {
    IntervalSet covered;
    Rational dx = seg.x2() - seg.x1();
    Rational dy = seg.y2() - seg.y1();
    for (const auto& r : rects) {
        auto clip = piece_intersection(seg, r);
        if (!clip) continue;
        Rational t1, t2;
        if (dx != 0) {
            t1 = (clip->x1() - seg.x1()) / dx;
            t2 = (clip->x2() - seg.x1()) / dx;
        } else {
            t1 = (clip->y1() - seg.y1()) / dy;
            t2 = (clip->y2() - seg.y1()) / dy;
        }
        if (t1 > t2) std::swap(t1, t2);
        covered.add(Interval(t1, t2));
    }
    return covered;
}

Piece sub_segment(const Piece& seg, const Rational& t1, const Rational& t2) {
    Rational dx = seg.x2() - seg.x1();
    Rational dy = seg.y2() - seg.y1();
    return Piece::segment(seg.x1() + t1 * dx, seg.y1() + t1 * dy,
                          seg.x1() + t2 * dx, seg.y1() + t2 * dy);
}

} // namespace

PLRelation normalize(std::vector<Piece> pieces) { return PLRelation::from_pieces(std::move(pieces)); }

PLRelation PLRelation::from_pieces(std::vector<Piece> pieces) {
    std::vector<Piece> rects, segs, pts;
    for (auto& p : pieces) {
        switch (p.kind()) {
        case PieceKind::Rect: rects.push_back(std::move(p)); break;
        case PieceKind::Segment: segs.push_back(std::move(p)); break;
        case PieceKind::Point: pts.push_back(std::move(p)); break;
        }
    }

    std::vector<Piece> canon_rects = canonical_rect_union(rects);

    // Clip segments against the rect union; keep the closed leftover arcs.
    std::vector<Piece> leftovers;
    for (const auto& s : segs) {
        IntervalSet covered = covered_params(s, canon_rects);
        if (covered.empty()) {
            leftovers.push_back(s);
            continue;
        }
        Rational cursor(0);
        for (const auto& c : covered.parts()) {
            Rational lo = rat_max(c.lo, Rational(0));
            Rational hi = rat_min(c.hi, Rational(1));
            if (lo > cursor) leftovers.push_back(sub_segment(s, cursor, lo));
            if (hi > cursor) cursor = hi;
        }
        if (cursor < 1) leftovers.push_back(sub_segment(s, cursor, Rational(1)));
    }

    // Merge collinear overlapping segments line by line.
    std::map<LineKey, std::vector<Piece>> by_line;
    for (auto& s : leftovers) by_line[line_key(s)].push_back(std::move(s));
    std::vector<Piece> canon_segs;
    for (auto& [key, group] : by_line) {
        bool vertical = line_is_vertical(key);
        IntervalSet params;
        for (const auto& s : group) {
            if (vertical)
                params.add(s.y_extent());
            else
                params.add(s.x_extent());
        }
        const Piece& rep = group.front();
        for (const auto& part : params.parts()) {
            if (part.degenerate()) continue; // cannot arise from nondegenerate closed arcs
            if (vertical) {
                canon_segs.push_back(Piece::segment(rep.x1(), part.lo, rep.x1(), part.hi));
            } else {
                Rational ya = rep.segment_y_at(part.lo);
                Rational yb = rep.segment_y_at(part.hi);
                canon_segs.push_back(Piece::segment(part.lo, ya, part.hi, yb));
            }
        }
    }

    // Points: drop when absorbed by a rect or segment, then dedupe.
    std::vector<Piece> canon_pts;
    for (const auto& p : pts) {
        bool covered = false;
        for (const auto& r : canon_rects)
            if (r.contains(p.x1(), p.y1())) { covered = true; break; }
        if (!covered)
            for (const auto& s : canon_segs)
                if (s.contains(p.x1(), p.y1())) { covered = true; break; }
        if (!covered) canon_pts.push_back(p);
    }

    PLRelation out;
    out.pieces_.reserve(canon_pts.size() + canon_segs.size() + canon_rects.size());
    for (auto& p : canon_pts) out.pieces_.push_back(std::move(p));
    for (auto& p : canon_segs) out.pieces_.push_back(std::move(p));
    for (auto& p : canon_rects) out.pieces_.push_back(std::move(p));
    std::sort(out.pieces_.begin(), out.pieces_.end());
    out.pieces_.erase(std::unique(out.pieces_.begin(), out.pieces_.end()), out.pieces_.end());
    return out;
}

IntervalSet PLRelation::domain() const {
    IntervalSet xs;
    for (const auto& p : pieces_) xs.add(p.x_extent());
    return xs;
}

bool PLRelation::domain_is_full() const {
    return domain() == IntervalSet::unit();
}

IntervalSet PLRelation::slice(const Rational& x) const {
    IntervalSet ys;
    for (const auto& p : pieces_) {
        if (auto iv = p.slice_at(x)) ys.add(*iv);
    }
    return ys;
}

bool PLRelation::contains_point(const Rational& x, const Rational& y) const {
    for (const auto& p : pieces_)
        if (p.contains(x, y)) return true;
    return false;
}

bool PLRelation::contains_piece(const Piece& q) const {
    switch (q.kind()) {
    case PieceKind::Point:
        return contains_point(q.x1(), q.y1());
    case PieceKind::Segment: {
        IntervalSet covered;
        Rational dx = q.x2() - q.x1();
        Rational dy = q.y2() - q.y1();
        for (const auto& p : pieces_) {
            auto common = piece_intersection(q, p);
            if (!common) continue;
            Rational t1, t2;
            if (dx != 0) {
                t1 = (common->x1() - q.x1()) / dx;
                t2 = (common->x2() - q.x1()) / dx;
            } else {
                t1 = (common->y1() - q.y1()) / dy;
                t2 = (common->y2() - q.y1()) / dy;
            }
            if (t1 > t2) std::swap(t1, t2);
            covered.add(Interval(t1, t2));
        }
        return covered.contains(Interval(Rational(0), Rational(1)));
    }
    case PieceKind::Rect: {
        // A nondegenerate rect can only be covered by the rect part.
        std::vector<Piece> rects;
        for (const auto& p : pieces_)
            if (p.is_rect()) rects.push_back(p);
        std::vector<Rational> cuts{q.x1(), q.x2()};
        for (const auto& r : rects) {
            if (r.x1() > q.x1() && r.x1() < q.x2()) cuts.push_back(r.x1());
            if (r.x2() > q.x1() && r.x2() < q.x2()) cuts.push_back(r.x2());
        }
        std::sort(cuts.begin(), cuts.end());
        cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
        Interval ywant = q.y_extent();
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
            IntervalSet ys;
            for (const auto& r : rects)
                if (r.x1() <= cuts[i] && r.x2() >= cuts[i + 1]) ys.add(r.y_extent());
            if (!ys.contains(ywant)) return false;
        }
        return true;
    }
    }
    return false;
}

bool PLRelation::contains(const PLRelation& other) const {
    for (const auto& p : other.pieces())
        if (!contains_piece(p)) return false;
    return true;
}

bool PLRelation::has_rect_piece() const {
    for (const auto& p : pieces_)
        if (p.is_rect()) return true;
    return false;
}

bool PLRelation::has_horizontal_segment() const {
    for (const auto& p : pieces_)
        if (p.is_horizontal_segment()) return true;
    return false;
}

PLRelation transpose(const PLRelation& r) {
    std::vector<Piece> swapped;
    swapped.reserve(r.pieces().size());
    for (const auto& p : r.pieces()) swapped.push_back(p.transposed());
    return normalize(std::move(swapped));
}

IntervalSet image(const PLRelation& r, const Interval& xs) {
    IntervalSet ys;
    for (const auto& p : r.pieces()) {
        if (auto iv = p.image_of(xs)) ys.add(*iv);
    }
    return ys;
}

IntervalSet image(const PLRelation& r, const IntervalSet& xs) {
    IntervalSet ys;
    for (const auto& part : xs.parts()) ys.add(image(r, part));
    return ys;
}

namespace {

// Compose one pair of pieces: {(x,z) : exists y, (x,y) in f, (y,z) in g}.
std::optional<Piece> compose_pieces(const Piece& f, const Piece& g) {
    // The y values usable as a bridge.
    auto ys = intersect(f.y_extent(), g.x_extent());
    if (!ys) return std::nullopt;

    // z-range of g over a y-interval.
    auto g_image = g.image_of(*ys);
    if (!g_image) return std::nullopt;

    // x-range of f whose value meets *ys.
    auto f_pre = f.preimage_of(*ys);
    if (!f_pre) return std::nullopt;

    switch (f.kind()) {
    case PieceKind::Point:
        // x fixed; z ranges over g's slice at f's value.
        return Piece::rect(f.x1(), g_image->lo, f.x1(), g_image->hi);
    case PieceKind::Rect:
        // Every x in the extent sees the full bridged y-interval.
        return Piece::rect(f.x1(), g_image->lo, f.x2(), g_image->hi);
    case PieceKind::Segment: {
        if (f.is_vertical_segment()) {
            return Piece::rect(f.x1(), g_image->lo, f.x1(), g_image->hi);
        }
        if (f.is_horizontal_segment()) {
            // Single bridge value y0 = f's height; z-set is g's slice there.
            return Piece::rect(f_pre->lo, g_image->lo, f_pre->hi, g_image->hi);
        }
        // f strictly monotone in x over the bridge interval.
        switch (g.kind()) {
        case PieceKind::Point:
            return Piece::point(f.segment_x_at(g.x1()), g.y1());
        case PieceKind::Rect:
            return Piece::rect(f_pre->lo, g.y1(), f_pre->hi, g.y2());
        case PieceKind::Segment: {
            if (g.is_vertical_segment()) {
                Rational x0 = f.segment_x_at(g.x1());
                return Piece::segment(x0, g.y1(), x0, g.y2());
            }
            Rational ya = ys->lo, yb = ys->hi;
            Rational xa = f.segment_x_at(ya), xb = f.segment_x_at(yb);
            Rational za = g.segment_y_at(ya), zb = g.segment_y_at(yb);
            return Piece::segment(xa, za, xb, zb);
        }
        }
        break;
    }
    }
    return std::nullopt;
}

} // namespace

PLRelation compose(const PLRelation& f, const PLRelation& g) {
    std::vector<Piece> out;
    for (const auto& pf : f.pieces()) {
        for (const auto& pg : g.pieces()) {
            if (auto c = compose_pieces(pf, pg)) out.push_back(std::move(*c));
        }
    }
    return normalize(std::move(out));
}

PLRelation restrict_relation(const PLRelation& r, const Interval& I, const Interval& J,
                             bool rescale) {
    std::vector<Piece> clipped;
    for (const auto& p : r.pieces()) {
        if (auto c = p.clipped_to_box(I, J)) clipped.push_back(std::move(*c));
    }
    PLRelation out = normalize(std::move(clipped));
    if (auto missing = out.domain().uncovered_point_within(I)) {
        throw RestrictionError("restriction leaves empty slice at x = " + to_string(*missing),
                               *missing);
    }
    if (!rescale) return out;
    if (I.degenerate() || J.degenerate())
        throw UsageError("cannot rescale a degenerate restriction window");
    std::vector<Piece> scaled;
    for (const auto& p : out.pieces()) {
        auto sx = [&](const Rational& x) { return (x - I.lo) / I.length(); };
        auto sy = [&](const Rational& y) { return (y - J.lo) / J.length(); };
        switch (p.kind()) {
        case PieceKind::Point:
            scaled.push_back(Piece::point(sx(p.x1()), sy(p.y1())));
            break;
        case PieceKind::Segment:
            scaled.push_back(Piece::segment(sx(p.x1()), sy(p.y1()), sx(p.x2()), sy(p.y2())));
            break;
        case PieceKind::Rect:
            scaled.push_back(Piece::rect(sx(p.x1()), sy(p.y1()), sx(p.x2()), sy(p.y2())));
            break;
        }
    }
    return normalize(std::move(scaled));
}

} // namespace svdyn
