#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "svdyn/relation.hpp"

namespace svdyn {

// Finite evaluation grid: all piece-endpoint abscissas plus pairwise
// piece-intersection abscissas ("events"), one midpoint sample per gap.
// Slice structure and one-sided limits of a piecewise-linear relation are
// affine-stable between events, so predicates decided on this grid are
// decided everywhere.
struct EventGrid {
    std::vector<Rational> events;  // sorted, unique, includes 0 and 1
    std::vector<Rational> nodes;   // events merged with gap midpoints
};

EventGrid build_event_grid(const PLRelation& r);

// Slice of the closure of R restricted to {x' < x} (resp. {x' > x}) at x:
// a piece contributes its value at x iff its x-extent has x as right (resp.
// left) endpoint or interior point.
IntervalSet left_limit_slice(const PLRelation& r, const Rational& x);
IntervalSet right_limit_slice(const PLRelation& r, const Rational& x);

struct WeakIvpWitness {
    Rational x1, y1, x2;
};

// Maximal x-regions where the slice has more than one point. Degenerate
// regions are isolated fissile points; flags record whether interval ends
// are themselves fissile.
struct FissileRegion {
    Interval span;
    bool lo_closed = true;
    bool hi_closed = true;
};

struct FissileSet {
    std::vector<FissileRegion> regions;
    bool empty() const { return regions.empty(); }
    bool contains(const Rational& x) const;
    std::string to_string() const;
};

// Elementary fissility table over the event grid; the open gap (events[k],
// events[k+1]) carries gap_fissile[k].
struct FissilityTable {
    std::vector<Rational> events;
    std::vector<bool> event_fissile;
    std::vector<bool> gap_fissile;
};

FissilityTable compute_fissility(const PLRelation& r);
FissileSet fissile_regions(const FissilityTable& table);

struct PropertyReport {
    bool domain_full = false;
    bool graph_connected = false;
    bool interior_empty = false;
    bool slices_connected = false;
    bool weakly_continuous = false;
    bool ivp = false;
    bool weak_ivp = false;
    bool light = false;
    bool almost_nonfissile = false;
    FissileSet fissile_xset;
    std::optional<WeakIvpWitness> weak_ivp_witness;
    // Rendered per-false-property counterexample data, deterministic order.
    std::vector<std::pair<std::string, std::string>> witnesses;
};

// Decides every report property exactly. The intermediate value property is
// computed twice, by independent procedures (weak continuity + connected
// slices, and the strip connectivity/closure test over all event strips);
// disagreement raises InternalError with a diagnostic dump.
PropertyReport classify(const PLRelation& r);

// Building blocks reused by other modules.
bool slices_connected_everywhere(const PLRelation& r);
bool graph_connected(const PLRelation& r);

// Closure of the restriction of R to its nonfissile x-set, as a relation.
PLRelation nonfissile_closure(const PLRelation& r);

} // namespace svdyn
