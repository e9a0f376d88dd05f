#pragma once

#include "ladderplan/embedding.hpp"

namespace ladder {

// Exact primitives over integer points, evaluated in 128-bit arithmetic.
// Results are exact for all coordinates of magnitude below
// kExactCoordinateLimit (2^62); the embedding verifier rejects anything
// outside that range before asking geometric questions.

inline constexpr Index kExactCoordinateLimit = Index{1} << 62;

// Sign of the cross product (b - a) x (c - a): +1 for a left turn, -1 for a
// right turn, 0 for collinear.
int orientation(Point a, Point b, Point c);

// Whether p lies on the closed segment [a, b] (endpoints included).
bool point_on_segment(Point p, Point a, Point b);

// How two positive-length segments meet.
//   none:            disjoint
//   shared_endpoint: exactly one common point, an endpoint of both segments
//   other:           anything else (proper crossing, an endpoint in the
//                    other segment's interior, collinear overlap)
enum class SegmentContact { none, shared_endpoint, other };

// Classifies the intersection of [a, b] and [c, d].  When the result is
// shared_endpoint, *touch receives the common point (touch may be null).
SegmentContact classify_segments(Point a, Point b, Point c, Point d, Point* touch);

}  // namespace ladder
