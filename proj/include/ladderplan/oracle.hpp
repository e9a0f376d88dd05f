#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ladderplan/core.hpp"

namespace ladder {

// A plain undirected graph for the brute-force oracles.  Vertices are
// 0..vertex_count-1; edges are stored with first < second, sorted, unique.
struct SimpleGraph {
    Index vertex_count = 0;
    std::vector<std::pair<Index, Index>> edges;

    friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;
};

// The underlying graph of a ladder instance: vertices 0..m-1 are u_1..u_m,
// m..m+n-1 are v_1..v_n, with both path edge chains plus the cross edges.
SimpleGraph to_simple_graph(const GeneralizedLadder& g);

// g plus one new vertex adjacent to everything.  A graph is outerplanar
// exactly when this augmentation is planar; tests use it to cross-check the
// outerplanarity oracle.
SimpleGraph with_apex(const SimpleGraph& g);

// Number of rotation systems the oracles would enumerate: the product over
// all vertices of (deg - 1)! (one neighbor pinned per vertex to quotient out
// cyclic rotations).  Saturates at UINT64_MAX.
std::uint64_t rotation_search_space(const SimpleGraph& g);

inline constexpr std::uint64_t kDefaultOracleBudget = 10'000'000;

// Ground-truth planarity by exhaustive rotation systems: g is planar iff
// some component-wise rotation system closes into E - V + 2 faces on every
// component (Euler's relation at genus zero).  Independent of everything the
// fast path uses - no quadrant logic anywhere.
// Throws BudgetExceededError if rotation_search_space(g) exceeds budget.
bool oracle_is_planar(const SimpleGraph& g, std::uint64_t budget = kDefaultOracleBudget);

// Ground-truth outerplanarity: like oracle_is_planar, but a component's
// rotation system is accepted only if it is planar and one of its faces
// walks through every vertex of the component, i.e. the embedding keeps the
// whole component on one face.  Equivalent to planarity of with_apex(g).
bool oracle_is_outerplanar(const SimpleGraph& g, std::uint64_t budget = kDefaultOracleBudget);

}  // namespace ladder
