#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "ladderplan/errors.hpp"

namespace ladder {

using Index = std::int64_t;

// One cross edge u_l -- v_r of a generalized ladder, with 1-based endpoints.
// Ordering is lexicographic by (l, r); that order is the canonical edge order
// used everywhere (storage, scans, "lexicographically smallest" tie-breaks).
struct CrossEdge {
    Index l = 0;
    Index r = 0;

    friend auto operator<=>(const CrossEdge&, const CrossEdge&) = default;
};

// A vertex of a generalized ladder: u_index on the first path (g1) or
// v_index on the second path (g2).
enum class Side { g1, g2 };

struct VertexRef {
    Side side = Side::g1;
    Index index = 0;

    friend auto operator<=>(const VertexRef&, const VertexRef&) = default;
};

// A generalized ladder: a path u_1..u_m, a path v_1..v_n, and a set of cross
// edges between them.  Instances are immutable values; the cross-edge list is
// always sorted and duplicate-free, so equality of instances is equality of
// (m, n, cross).  Construct through make_ladder or from_functigraph.
class GeneralizedLadder {
  public:
    Index m() const { return m_; }
    Index n() const { return n_; }
    const std::vector<CrossEdge>& cross() const { return cross_; }

    // Membership test by binary search over the sorted cross list.
    bool contains(CrossEdge e) const;

    friend bool operator==(const GeneralizedLadder&, const GeneralizedLadder&) = default;

  private:
    GeneralizedLadder(Index m, Index n, std::vector<CrossEdge> cross);

    friend GeneralizedLadder make_ladder(Index m, Index n, std::vector<CrossEdge> cross);

    Index m_ = 0;
    Index n_ = 0;
    std::vector<CrossEdge> cross_;
};

// Builds the canonical instance: validates 1 <= l <= m and 1 <= r <= n for
// every edge, sorts the edges, and rejects duplicates.
// Throws IndexOutOfRangeError (also for m < 1 or n < 1) or DuplicateEdgeError.
GeneralizedLadder make_ladder(Index m, Index n, std::vector<CrossEdge> cross);

// The functigraph of f: the (n, n)-ladder whose cross edges are (i, f(i)) for
// every i, where n = f.size() and f[i - 1] is the image of i.
// Throws IndexOutOfRangeError if f is empty or some value is outside [1, n].
GeneralizedLadder from_functigraph(const std::vector<Index>& f);

// The three symmetries of the ladder frame.  Each is an involution on
// instances (swap_sides exchanges the two paths, so it swaps m and n).
enum class Symmetry {
    reverse_g1,  // u_i -> u_{m-i+1}: edge (l, r) -> (m-l+1, r)
    reverse_g2,  // v_j -> v_{n-j+1}: edge (l, r) -> (l, n-r+1)
    swap_sides,  // u_i -> v_i, v_j -> u_j: edge (l, r) -> (r, l)
};

// The transformed instance; cross edges are re-sorted canonically.
GeneralizedLadder apply_symmetry(const GeneralizedLadder& g, Symmetry s);

// The induced relabeling on a single edge / vertex.  (m, n) are the
// dimensions of the instance the input lives in; applying the same symmetry
// twice (with the dimensions of the respective source instance) is the
// identity.
CrossEdge map_edge(Symmetry s, Index m, Index n, CrossEdge e);
VertexRef map_vertex(Symmetry s, Index m, Index n, VertexRef v);

// Which of the four quadrants around a cross edge e are occupied by another
// cross edge.  "up"/"down" refers to the first coordinate, the second name to
// the second coordinate; all comparisons are strict:
//   up_down:   some e' with l(e') > l(e) and r(e') < r(e)
//   up_up:     some e' with l(e') > l(e) and r(e') > r(e)
//   down_up:   some e' with l(e') < l(e) and r(e') > r(e)
//   down_down: some e' with l(e') < l(e) and r(e') < r(e)
struct QuadrantFlags {
    bool up_down = false;
    bool up_up = false;
    bool down_up = false;
    bool down_down = false;

    friend bool operator==(const QuadrantFlags&, const QuadrantFlags&) = default;
};

// Precomputed aggregates that answer any single-edge quadrant query in
// O(log k).  Edges are grouped by distinct l value (groups in increasing l);
// for each group we keep the min/max r over all groups strictly before and
// strictly after it.  Empty aggregates hold +/- infinity sentinels
// (INT64_MAX for a min over nothing, INT64_MIN for a max over nothing).
class QuadrantIndex {
  public:
    // Occupancy flags for a cross edge of the indexed instance.  The caller
    // guarantees that e belongs to it; use quadrant_flags for the checked
    // front door.
    QuadrantFlags flags(CrossEdge e) const;

    const std::vector<Index>& distinct_l() const { return distinct_l_; }
    const std::vector<Index>& prefix_min_r() const { return prefix_min_r_; }
    const std::vector<Index>& prefix_max_r() const { return prefix_max_r_; }
    const std::vector<Index>& suffix_min_r() const { return suffix_min_r_; }
    const std::vector<Index>& suffix_max_r() const { return suffix_max_r_; }

  private:
    friend QuadrantIndex build_quadrant_index(const GeneralizedLadder& g);

    std::vector<Index> distinct_l_;     // increasing
    std::vector<Index> prefix_min_r_;   // over groups with smaller l
    std::vector<Index> prefix_max_r_;
    std::vector<Index> suffix_min_r_;   // over groups with larger l
    std::vector<Index> suffix_max_r_;
};

// Builds the index in one pass over the sorted edge list (O(k) after the
// instance's own sort).
QuadrantIndex build_quadrant_index(const GeneralizedLadder& g);

// Checked query: throws EdgeNotInInstanceError if g does not contain e.
// idx must have been built from g.
QuadrantFlags quadrant_flags(const GeneralizedLadder& g, const QuadrantIndex& idx, CrossEdge e);

// Reference implementation straight from the definition: one O(k) scan over
// all cross edges.  Kept as the correctness baseline for the indexed query
// and as the "naive" side of benchmarks.
QuadrantFlags quadrant_flags_naive(const GeneralizedLadder& g, CrossEdge e);

}  // namespace ladder
