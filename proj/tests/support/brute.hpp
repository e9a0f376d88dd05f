#pragma once

// Reference implementations used only by the tests.  Everything here works
// straight from the definitions with plain scans over the cross-edge list, so
// the suites compare the library against an independent second computation
// rather than against itself.

#include <optional>
#include <vector>

#include "ladderplan/core.hpp"
#include "ladderplan/embedding.hpp"

namespace brute {

inline ladder::GeneralizedLadder lad(ladder::Index m, ladder::Index n,
                                     std::vector<ladder::CrossEdge> cross) {
    return ladder::make_ladder(m, n, std::move(cross));
}

// Quadrant occupancy by definition: one full scan, strict comparisons.
inline ladder::QuadrantFlags flags(const std::vector<ladder::CrossEdge>& cross,
                                   ladder::CrossEdge e) {
    ladder::QuadrantFlags f;
    for (const auto& o : cross) {
        if (o.l > e.l && o.r < e.r) f.up_down = true;
        if (o.l > e.l && o.r > e.r) f.up_up = true;
        if (o.l < e.l && o.r > e.r) f.down_up = true;
        if (o.l < e.l && o.r < e.r) f.down_down = true;
    }
    return f;
}

// Lexicographically smallest cross edge with all four quadrants occupied,
// if any; the instance is planar exactly when there is none.
inline std::optional<ladder::CrossEdge> planarity_witness(const ladder::GeneralizedLadder& g) {
    for (const auto& e : g.cross()) {  // cross() is sorted
        const auto f = flags(g.cross(), e);
        if (f.up_down && f.up_up && f.down_up && f.down_down) return e;
    }
    return std::nullopt;
}

inline bool is_planar(const ladder::GeneralizedLadder& g) {
    return !planarity_witness(g).has_value();
}

// Smallest edge breaking the anti-monotone family (up_up or down_down set).
inline std::optional<ladder::CrossEdge> anti_monotone_violator(
    const ladder::GeneralizedLadder& g) {
    for (const auto& e : g.cross()) {
        const auto f = flags(g.cross(), e);
        if (f.up_up || f.down_down) return e;
    }
    return std::nullopt;
}

// Smallest edge breaking the monotone family (up_down or down_up set).
inline std::optional<ladder::CrossEdge> monotone_violator(const ladder::GeneralizedLadder& g) {
    for (const auto& e : g.cross()) {
        const auto f = flags(g.cross(), e);
        if (f.up_down || f.down_up) return e;
    }
    return std::nullopt;
}

inline bool is_outerplanar(const ladder::GeneralizedLadder& g) {
    return !anti_monotone_violator(g) || !monotone_violator(g);
}

// Routing class by the fixed priority order, straight from the flag
// definitions; empty when every quadrant is occupied (non-planar edge).
inline std::optional<ladder::EdgeClass> edge_class(const ladder::GeneralizedLadder& g,
                                                   ladder::CrossEdge e) {
    const auto f = flags(g.cross(), e);
    if (!f.up_down) return ladder::EdgeClass::x;
    if (!f.up_up) return ladder::EdgeClass::y;
    if (!f.down_up) return ladder::EdgeClass::z;
    if (!f.down_down) return ladder::EdgeClass::w;
    return std::nullopt;
}

}  // namespace brute
