#include "svdyn/classify.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace svdyn {

namespace {

struct DisjointSets {
    std::vector<std::size_t> parent;
    explicit DisjointSets(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), std::size_t{0});
    }
    std::size_t find(std::size_t a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
    bool connected() {
        if (parent.empty()) return true;
        std::size_t root = find(0);
        for (std::size_t i = 1; i < parent.size(); ++i)
            if (find(i) != root) return false;
        return true;
    }
};

bool union_connected(const std::vector<Piece>& pieces) {
    DisjointSets ds(pieces.size());
    for (std::size_t i = 0; i < pieces.size(); ++i)
        for (std::size_t j = i + 1; j < pieces.size(); ++j)
            if (pieces_intersect(pieces[i], pieces[j])) ds.unite(i, j);
    return ds.connected();
}

bool slice_is_multivalued(const IntervalSet& s) {
    return s.component_count() > 1 || s.has_interior();
}

} // namespace

EventGrid build_event_grid(const PLRelation& r) {
    std::vector<Rational> xs{Rational(0), Rational(1)};
    const auto& ps = r.pieces();
    for (const auto& p : ps) {
        xs.push_back(p.x_extent().lo);
        xs.push_back(p.x_extent().hi);
    }
    for (std::size_t i = 0; i < ps.size(); ++i) {
        for (std::size_t j = i + 1; j < ps.size(); ++j) {
            if (auto q = piece_intersection(ps[i], ps[j])) {
                xs.push_back(q->x_extent().lo);
                xs.push_back(q->x_extent().hi);
            }
        }
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    EventGrid grid;
    grid.events = xs;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        grid.nodes.push_back(xs[i]);
        if (i + 1 < xs.size()) grid.nodes.push_back(midpoint(xs[i], xs[i + 1]));
    }
    return grid;
}

IntervalSet left_limit_slice(const PLRelation& r, const Rational& x) {
    IntervalSet out;
    for (const auto& p : r.pieces()) {
        Interval ext = p.x_extent();
        if (ext.lo < x && x <= ext.hi) {
            if (auto iv = p.slice_at(x)) out.add(*iv);
        }
    }
    return out;
}

IntervalSet right_limit_slice(const PLRelation& r, const Rational& x) {
    IntervalSet out;
    for (const auto& p : r.pieces()) {
        Interval ext = p.x_extent();
        if (ext.lo <= x && x < ext.hi) {
            if (auto iv = p.slice_at(x)) out.add(*iv);
        }
    }
    return out;
}

bool slices_connected_everywhere(const PLRelation& r) {
    EventGrid grid = build_event_grid(r);
    for (const auto& x : grid.nodes)
        if (r.slice(x).component_count() > 1) return false;
    return true;
}

bool graph_connected(const PLRelation& r) { return union_connected(r.pieces()); }

FissilityTable compute_fissility(const PLRelation& r) {
    EventGrid grid = build_event_grid(r);
    FissilityTable t;
    t.events = grid.events;
    t.event_fissile.resize(t.events.size());
    for (std::size_t i = 0; i < t.events.size(); ++i)
        t.event_fissile[i] = slice_is_multivalued(r.slice(t.events[i]));
    for (std::size_t i = 0; i + 1 < t.events.size(); ++i)
        t.gap_fissile.push_back(
            slice_is_multivalued(r.slice(midpoint(t.events[i], t.events[i + 1]))));
    return t;
}

FissileSet fissile_regions(const FissilityTable& t) {
    FissileSet out;
    // Walk elementary regions (event, gap, event, ...) merging consecutive
    // fissile ones into maximal regions with endpoint-closure flags.
    std::optional<FissileRegion> current;
    auto flush = [&] {
        if (current) out.regions.push_back(*current);
        current.reset();
    };
    std::size_t n = t.events.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (t.event_fissile[i]) {
            if (!current) current = FissileRegion{Interval(t.events[i], t.events[i]), true, true};
            else {
                current->span.hi = t.events[i];
                current->hi_closed = true;
            }
        } else if (current) {
            flush();
        }
        if (i + 1 < n && t.gap_fissile[i]) {
            if (!current) current = FissileRegion{Interval(t.events[i], t.events[i + 1]), false, false};
            else {
                current->span.hi = t.events[i + 1];
                current->hi_closed = false;
            }
        } else if (i + 1 < n && current) {
            flush();
        }
    }
    flush();
    return out;
}

bool FissileSet::contains(const Rational& x) const {
    for (const auto& reg : regions) {
        if (x < reg.span.lo || x > reg.span.hi) continue;
        if (x == reg.span.lo) {
            if (reg.lo_closed) return true;
            if (reg.span.degenerate()) return false;
            continue;
        }
        if (x == reg.span.hi) return reg.hi_closed;
        return true;
    }
    return false;
}

std::string FissileSet::to_string() const {
    if (regions.empty()) return "{}";
    std::ostringstream os;
    bool first = true;
    for (const auto& reg : regions) {
        if (!first) os << " u ";
        first = false;
        if (reg.span.degenerate()) {
            os << "{" << svdyn::to_string(reg.span.lo) << "}";
        } else {
            os << (reg.lo_closed ? "[" : "(") << svdyn::to_string(reg.span.lo) << ","
               << svdyn::to_string(reg.span.hi) << (reg.hi_closed ? "]" : ")");
        }
    }
    return os.str();
}

PLRelation nonfissile_closure(const PLRelation& r) {
    FissilityTable t = compute_fissility(r);
    std::vector<Piece> kept;
    for (std::size_t i = 0; i < t.events.size(); ++i) {
        if (t.event_fissile[i]) continue;
        IntervalSet s = r.slice(t.events[i]);
        if (s.empty()) continue;
        kept.push_back(Piece::point(t.events[i], s.parts().front().lo));
    }
    for (std::size_t i = 0; i + 1 < t.events.size(); ++i) {
        if (t.gap_fissile[i]) continue;
        Interval gap(t.events[i], t.events[i + 1]);
        Rational mid = midpoint(gap.lo, gap.hi);
        // Exactly one piece spans a nonfissile gap: between consecutive events
        // no piece starts or ends, and a single-point slice rules out rects,
        // verticals, and parallel branches.
        const Piece* covering = nullptr;
        for (const auto& p : r.pieces()) {
            if (p.x_extent().lo <= gap.lo && p.x_extent().hi >= gap.hi) {
                if (p.slice_at(mid)) {
                    covering = &p;
                    break;
                }
            }
        }
        if (!covering) continue; // gap outside the domain
        auto clipped = covering->clipped_to_box(gap, Interval(Rational(0), Rational(1)));
        if (clipped) kept.push_back(*clipped);
    }
    return normalize(std::move(kept));
}

namespace {

struct StripCheck {
    bool ok = true;
    Rational a, b;
    std::string reason;
};

// Theorem-style strip test at [a,b]: the clipped graph must be connected and
// must equal the closure of the open-strip clip.
StripCheck check_strip(const PLRelation& r, const Rational& a, const Rational& b) {
    Interval strip(a, b);
    Interval full(Rational(0), Rational(1));
    std::vector<Piece> closed_clip;
    std::vector<Piece> open_closure;
    for (const auto& p : r.pieces()) {
        Interval ext = p.x_extent();
        if (auto c = p.clipped_to_box(strip, full)) closed_clip.push_back(*c);
        // Closure of p intersected with the open strip: nonempty iff the
        // extent meets (a,b); then it equals the closed clip of p.
        if (ext.lo < b && ext.hi > a) {
            if (auto c = p.clipped_to_box(strip, full)) open_closure.push_back(*c);
        }
    }
    StripCheck res;
    res.a = a;
    res.b = b;
    if (!union_connected(closed_clip)) {
        res.ok = false;
        res.reason = "clipped graph disconnected";
        return res;
    }
    if (normalize(std::move(closed_clip)) != normalize(std::move(open_closure))) {
        res.ok = false;
        res.reason = "clipped graph not the closure of its open-strip part";
        return res;
    }
    return res;
}

std::string render_point(const Rational& x, const Rational& y) {
    return "(" + to_string(x) + ", " + to_string(y) + ")";
}

} // namespace

PropertyReport classify(const PLRelation& r) {
    PropertyReport rep;
    auto witness = [&](const std::string& key, const std::string& value) {
        rep.witnesses.emplace_back(key, value);
    };

    rep.interior_empty = !r.has_rect_piece();
    if (!rep.interior_empty) {
        for (const auto& p : r.pieces())
            if (p.is_rect()) {
                witness("interior_empty", p.to_string());
                break;
            }
    }
    rep.light = rep.interior_empty && !r.has_horizontal_segment();
    if (!rep.light) {
        for (const auto& p : r.pieces())
            if (p.is_rect() || p.is_horizontal_segment()) {
                witness("light", "value set with fat preimage: " + p.to_string());
                break;
            }
    }
    rep.graph_connected = graph_connected(r);
    if (!rep.graph_connected) witness("graph_connected", "piece-intersection graph splits");

    rep.domain_full = r.domain_is_full();
    if (!rep.domain_full) {
        auto x = r.domain().uncovered_point_within(Interval(Rational(0), Rational(1)));
        witness("domain_full", "empty slice at x = " + (x ? to_string(*x) : std::string("?")));
        return rep;
    }

    EventGrid grid = build_event_grid(r);

    std::vector<IntervalSet> slices;
    slices.reserve(grid.nodes.size());
    for (const auto& x : grid.nodes) slices.push_back(r.slice(x));

    // Connected slices.
    rep.slices_connected = true;
    for (std::size_t i = 0; i < grid.nodes.size(); ++i) {
        if (slices[i].component_count() > 1) {
            rep.slices_connected = false;
            witness("slices_connected",
                    "x = " + to_string(grid.nodes[i]) + ", slice " + slices[i].to_string());
            break;
        }
    }

    // Weak continuity; at the interval ends only the inward side applies.
    rep.weakly_continuous = true;
    for (std::size_t i = 0; i < grid.nodes.size() && rep.weakly_continuous; ++i) {
        const Rational& x = grid.nodes[i];
        auto check_side = [&](const IntervalSet& limit, const char* side) {
            if (!rep.weakly_continuous) return;
            for (const auto& part : slices[i].parts()) {
                if (auto y = limit.uncovered_point_within(part)) {
                    rep.weakly_continuous = false;
                    witness("weakly_continuous", render_point(x, *y) +
                                                     " not approached from the " + side);
                    return;
                }
            }
        };
        if (x > 0) check_side(left_limit_slice(r, x), "left");
        if (x < 1) check_side(right_limit_slice(r, x), "right");
    }

    bool ivp_criterion = rep.weakly_continuous && rep.slices_connected;

    // Independent strip route over all event/sample strips.
    bool ivp_strips = true;
    std::optional<StripCheck> strip_failure;
    for (std::size_t i = 0; i < grid.nodes.size() && ivp_strips; ++i) {
        for (std::size_t j = i + 1; j < grid.nodes.size(); ++j) {
            StripCheck sc = check_strip(r, grid.nodes[i], grid.nodes[j]);
            if (!sc.ok) {
                ivp_strips = false;
                strip_failure = sc;
                break;
            }
        }
    }

    if (ivp_criterion != ivp_strips) {
        std::ostringstream dump;
        dump << "intermediate-value procedures disagree\n";
        dump << "criterion route (weak continuity + connected slices): "
             << (ivp_criterion ? "true" : "false") << "\n";
        dump << "strip route: " << (ivp_strips ? "true" : "false") << "\n";
        if (strip_failure)
            dump << "failing strip [" << to_string(strip_failure->a) << ", "
                 << to_string(strip_failure->b) << "]: " << strip_failure->reason << "\n";
        dump << "relation pieces:\n";
        for (const auto& p : r.pieces()) dump << "  " << p.to_string() << "\n";
        throw InternalError(dump.str());
    }
    rep.ivp = ivp_criterion;
    if (!rep.ivp && strip_failure)
        witness("ivp", "strip [" + to_string(strip_failure->a) + ", " +
                           to_string(strip_failure->b) + "]: " + strip_failure->reason);

    // Weak intermediate value property over ordered node pairs. For x1, x2
    // and y1 in f(x1) the requirement reduces to: the component of
    // image(R, [x1 ^ x2, x1 v x2]) containing y1 must meet f(x2).
    rep.weak_ivp = true;
    {
        std::size_t n = grid.nodes.size();
        // Elementary images between consecutive nodes.
        std::vector<IntervalSet> elem(n > 0 ? n - 1 : 0);
        for (std::size_t i = 0; i + 1 < n; ++i)
            elem[i] = image(r, Interval(grid.nodes[i], grid.nodes[i + 1]));
        for (std::size_t i = 0; i < n && rep.weak_ivp; ++i) {
            IntervalSet span = slices[i];
            for (std::size_t j = i + 1; j < n && rep.weak_ivp; ++j) {
                span.add(elem[j - 1]);
                auto fails = [&](std::size_t from, std::size_t to) -> std::optional<Rational> {
                    for (const auto& part : slices[from].parts()) {
                        auto comp = span.component_of(part.lo);
                        if (!comp)
                            throw InternalError("slice escapes its own image span");
                        if (!slices[to].intersects(*comp)) return part.lo;
                    }
                    return std::nullopt;
                };
                if (auto y1 = fails(i, j)) {
                    rep.weak_ivp = false;
                    rep.weak_ivp_witness = WeakIvpWitness{grid.nodes[i], *y1, grid.nodes[j]};
                } else if (auto y1r = fails(j, i)) {
                    rep.weak_ivp = false;
                    rep.weak_ivp_witness = WeakIvpWitness{grid.nodes[j], *y1r, grid.nodes[i]};
                }
            }
        }
        if (rep.weak_ivp_witness) {
            witness("weak_ivp", "x1 = " + to_string(rep.weak_ivp_witness->x1) +
                                    ", y1 = " + to_string(rep.weak_ivp_witness->y1) +
                                    ", x2 = " + to_string(rep.weak_ivp_witness->x2));
        }
    }

    if (rep.ivp && !rep.weak_ivp)
        throw InternalError("ivp holds but weak ivp fails; property hierarchy violated");

    // Fissile structure and almost nonfissile.
    FissilityTable table = compute_fissility(r);
    rep.fissile_xset = fissile_regions(table);
    PLRelation nf = nonfissile_closure(r);
    rep.almost_nonfissile = (nf == r);
    if (!rep.almost_nonfissile) {
        witness("almost_nonfissile",
                "closure of nonfissile part is a proper subgraph; fissile x-set " +
                    rep.fissile_xset.to_string());
    }

    return rep;
}

} // namespace svdyn
