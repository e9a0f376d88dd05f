#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ladderplan/core.hpp"

namespace ladder {

// The two mutually-exclusive-or-overlapping shapes an outerplanar cross
// family can have.  anti_monotone: no edge sees another edge in its up_up or
// down_down quadrant, so along increasing l the r values never increase.
// monotone: no edge sees another in up_down or down_up, so r values never
// decrease.  When both hold (e.g. at most one distinct l), anti_monotone is
// reported.
enum class OuterplanarCondition { anti_monotone, monotone };

// Everything a decision can say about an instance.  Optional fields are
// populated only when they are meaningful for the verdict:
//   planarity, verdict false  -> witness_edge: the lexicographically
//       smallest cross edge with all four quadrants occupied.
//   outerplanarity, verdict true  -> condition: which family shape holds.
//   outerplanarity, verdict false -> both violators: the lexicographically
//       smallest edge with up_up or down_down set (anti_monotone_violator)
//       and the smallest with up_down or down_up set (monotone_violator).
// per_edge_flags lists (edge, flags) in canonical edge order when requested.
struct DecisionReport {
    bool verdict = false;
    std::optional<CrossEdge> witness_edge;
    std::optional<OuterplanarCondition> condition;
    std::optional<CrossEdge> anti_monotone_violator;
    std::optional<CrossEdge> monotone_violator;
    std::vector<std::pair<CrossEdge, QuadrantFlags>> per_edge_flags;
};

// Planarity: true iff every cross edge has at least one empty quadrant.
// One indexed pass, O(k log k) total.
bool is_planar(const GeneralizedLadder& g);
DecisionReport planarity_report(const GeneralizedLadder& g, bool with_flags = false);

// Outerplanarity: true iff the cross family is anti-monotone (no up_up /
// down_down anywhere) or monotone (no up_down / down_up anywhere).
bool is_outerplanar(const GeneralizedLadder& g);
DecisionReport outerplanarity_report(const GeneralizedLadder& g, bool with_flags = false);

// Same verdict as is_planar via quadrant_flags_naive on every edge: O(k^2).
// Exists so benchmarks and equivalence tests have an index-free baseline.
bool is_planar_naive(const GeneralizedLadder& g);

}  // namespace ladder
