#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ladderplan/core.hpp"

namespace ladder {

// Routing class of a cross edge in the planar drawing.  Determined by the
// first empty quadrant in the fixed priority order:
//   x: up_down empty        (routed right, around the bottom of the v path)
//   y: up_up empty          (routed around the top of both paths)
//   z: down_up empty        (routed left, around the top of the u path)
//   w: down_down empty      (drawn as one straight segment between the paths)
// Every cross edge of a planar instance lands in exactly one class.
enum class EdgeClass { x, y, z, w };

struct Point {
    Index x = 0;
    Index y = 0;

    friend auto operator<=>(const Point&, const Point&) = default;
};

// One drawn edge: the endpoints as graph vertices plus the full polyline
// through integer coordinates (points.front() / points.back() are the drawn
// positions of from / to).  cls is set for cross edges of class-based
// drawings and empty for path edges.
struct PolylineEdge {
    VertexRef from;
    VertexRef to;
    std::optional<EdgeClass> cls;
    std::vector<Point> points;
};

struct VertexPlacement {
    VertexRef v;
    Point p;
};

// A straight-line-per-segment drawing of an instance: one placement per
// vertex, one polyline per edge (path edges included).  All coordinates are
// integers, so every geometric test on it can be exact.
struct Embedding {
    std::vector<VertexPlacement> vertices;
    std::vector<PolylineEdge> edges;
};

// Class of every cross edge, in canonical edge order.
// Throws NotPlanarError if some edge has all four quadrants occupied.
std::vector<std::pair<CrossEdge, EdgeClass>> classify_edges(const GeneralizedLadder& g);

// A crossing-free drawing of a planar instance on the integer grid:
// u_i at (0, n*i), v_j at (m*n, m*n - m*j), path edges straight, cross
// edges routed as polylines through per-class anchor points.
// Throws NotPlanarError if g is not planar.
Embedding planar_embedding(const GeneralizedLadder& g);

// A drawing of an outerplanar instance with every vertex on the outer face:
// u_i at (0, i) and v_j at (1, j) (monotone family) or (1, n - j + 1)
// (anti-monotone family), every edge one straight segment.
// Throws NotOuterplanarError if g is not outerplanar.
Embedding outerplanar_embedding(const GeneralizedLadder& g);

// Exact check that emb is a valid drawing of g: every vertex placed at a
// distinct point, every edge of g drawn as a simple polyline between its
// endpoints' points, and no two segments sharing more than an allowed
// common-vertex endpoint.  All predicates are evaluated in extended integer
// arithmetic; there is no floating point and no tolerance.  Coordinates of
// magnitude 2^62 or more lie outside the guaranteed-exact range and make the
// whole embedding invalid.
// Throws IncompleteEmbeddingError when emb misses a vertex or edge of g;
// returns false (never throws) on malformed or geometrically invalid input.
bool verify_embedding(const GeneralizedLadder& g, const Embedding& emb);

}  // namespace ladder
