#pragma once

#include <optional>
#include <string>
#include <vector>

#include "svdyn/interval_set.hpp"

namespace svdyn {

enum class PieceKind { Point, Segment, Rect };

// Convex building block of a relation graph: a point, a closed segment of any
// orientation, or a closed axis-aligned rectangle, all inside the unit square.
//
// Canonical storage: point has x1==x2, y1==y2; segment endpoints are ordered
// lexicographically; rect has x1<x2 and y1<y2. The factories normalize
// degenerate inputs downward (rect with zero height -> segment, etc.) and
// reject coordinates outside [0,1].
class Piece {
public:
    static Piece point(Rational x, Rational y);
    static Piece segment(Rational x1, Rational y1, Rational x2, Rational y2);
    static Piece rect(Rational x1, Rational y1, Rational x2, Rational y2);

    PieceKind kind() const { return kind_; }
    const Rational& x1() const { return x1_; }
    const Rational& y1() const { return y1_; }
    const Rational& x2() const { return x2_; }
    const Rational& y2() const { return y2_; }

    bool is_point() const { return kind_ == PieceKind::Point; }
    bool is_segment() const { return kind_ == PieceKind::Segment; }
    bool is_rect() const { return kind_ == PieceKind::Rect; }
    bool is_vertical_segment() const { return is_segment() && x1_ == x2_; }
    bool is_horizontal_segment() const { return is_segment() && y1_ == y2_; }

    Interval x_extent() const;
    Interval y_extent() const;

    bool contains(const Rational& x, const Rational& y) const;

    // y-values of the piece at abscissa x (empty when x outside the extent).
    std::optional<Interval> slice_at(const Rational& x) const;

    // Exact image/preimage of a closed interval through this piece alone;
    // convexity of the piece makes both results intervals.
    std::optional<Interval> image_of(const Interval& xs) const;
    std::optional<Interval> preimage_of(const Interval& ys) const;

    // For a non-vertical segment, the ordinate at x in the extent.
    Rational segment_y_at(const Rational& x) const;
    // For a non-horizontal, non-vertical segment, the abscissa attaining y.
    Rational segment_x_at(const Rational& y) const;

    Piece transposed() const;

    std::optional<Piece> clipped_to_box(const Interval& xs, const Interval& ys) const;

    std::string to_string() const;

    friend bool operator==(const Piece&, const Piece&) = default;
    friend bool operator<(const Piece& a, const Piece& b) {
        if (a.kind_ != b.kind_) return a.kind_ < b.kind_;
        if (a.x1_ != b.x1_) return a.x1_ < b.x1_;
        if (a.y1_ != b.y1_) return a.y1_ < b.y1_;
        if (a.x2_ != b.x2_) return a.x2_ < b.x2_;
        return a.y2_ < b.y2_;
    }

private:
    Piece(PieceKind k, Rational x1, Rational y1, Rational x2, Rational y2);

    PieceKind kind_;
    Rational x1_, y1_, x2_, y2_;
};

// Exact intersection of two pieces; the class {point, segment, rect} is
// closed under pairwise intersection.
std::optional<Piece> piece_intersection(const Piece& a, const Piece& b);

inline bool pieces_intersect(const Piece& a, const Piece& b) {
    return piece_intersection(a, b).has_value();
}

} // namespace svdyn
