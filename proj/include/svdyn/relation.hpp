#pragma once

#include <optional>
#include <vector>

#include "svdyn/piece.hpp"

namespace svdyn {

// A closed piecewise-linear relation on the unit square, stored in canonical
// normalized form: the rectangle part is the slab decomposition of the union
// of input rects, segments are clipped against it and merged along common
// lines, covered points are dropped, and pieces are sorted. Two relations with
// equal point sets compare equal.
class PLRelation {
public:
    PLRelation() = default;
    static PLRelation from_pieces(std::vector<Piece> pieces);

    const std::vector<Piece>& pieces() const { return pieces_; }
    bool empty() const { return pieces_.empty(); }

    IntervalSet domain() const;
    bool domain_is_full() const;

    IntervalSet slice(const Rational& x) const;
    bool contains_point(const Rational& x, const Rational& y) const;

    // Exact coverage of a piece / a whole relation by this relation's union.
    bool contains_piece(const Piece& p) const;
    bool contains(const PLRelation& other) const;

    bool has_rect_piece() const;
    bool has_horizontal_segment() const;

    friend bool operator==(const PLRelation&, const PLRelation&) = default;

private:
    std::vector<Piece> pieces_;
};

PLRelation normalize(std::vector<Piece> pieces);
PLRelation transpose(const PLRelation& r);

IntervalSet image(const PLRelation& r, const Interval& xs);
IntervalSet image(const PLRelation& r, const IntervalSet& xs);

// Apply f, then g: {(x,z) : exists y with (x,y) in f and (y,z) in g}.
PLRelation compose(const PLRelation& f, const PLRelation& g);

class RestrictionError : public UsageError {
public:
    RestrictionError(const std::string& msg, Rational witness)
        : UsageError(msg), witness_(std::move(witness)) {}
    const Rational& witness() const { return witness_; }

private:
    Rational witness_;
};

// R clipped to I x J. Every x in I must keep a nonempty slice; violations
// raise RestrictionError carrying a witness x. With rescale set, I x J is
// affinely mapped onto the unit square.
PLRelation restrict_relation(const PLRelation& r, const Interval& I, const Interval& J,
                             bool rescale = false);

// Canonical slab decomposition of a union of axis-aligned rectangles: slab
// boundaries where the vertical cross-section changes, adjacent equal slabs
// merged. Exposed for reuse by coverage tests.
std::vector<Piece> canonical_rect_union(const std::vector<Piece>& rects);

} // namespace svdyn
