#pragma once

#include <vector>

#include "ladderplan/core.hpp"

namespace ladder {

// Which forbidden pattern a certificate exhibits as a subdivision.
enum class SubdivisionPattern { k33, k32, k4 };

// One branch path of a subdivision: the full vertex walk from one branch
// vertex to the other.  `from`/`to` duplicate the walk's endpoints so a
// certificate remains meaningful even when paths are re-serialized.
struct CertPath {
    VertexRef from;
    VertexRef to;
    std::vector<VertexRef> vertices;  // front() == from, back() == to
};

// A subdivision of K33, K32, or K4 inside a generalized ladder, given by its
// branch vertices and one vertex-disjoint path per pattern edge.  For the
// bipartite patterns part_x / part_y are the two sides (3+3 or 3+2 vertices,
// 9 or 6 paths); for k4 all four branch vertices sit in part_x and part_y is
// empty (6 paths).
struct SubdivisionCertificate {
    SubdivisionPattern pattern = SubdivisionPattern::k33;
    std::vector<VertexRef> part_x;
    std::vector<VertexRef> part_y;
    std::vector<CertPath> paths;
};

// For a non-planar instance, a K33 subdivision built around the
// lexicographically smallest cross edge with all four quadrants occupied.
// Throws NotApplicableError if g is planar.
SubdivisionCertificate extract_k33_witness(const GeneralizedLadder& g);

// For a non-outerplanar instance, a K32 subdivision when some cross edge has
// an occupied quadrant pair of the right shape under one of the eight frame
// symmetries, otherwise a K4 subdivision.  Throws NotApplicableError if g is
// outerplanar.
SubdivisionCertificate extract_outerplanar_witness(const GeneralizedLadder& g);

// Structural check that cert really is a subdivision of its pattern inside
// g: branch vertices distinct and present, every path a simple path of g
// between the right endpoints, path interiors pairwise disjoint and disjoint
// from the branch vertices, and exactly one path per pattern edge.
// Returns false on any malformed input; never throws.
bool verify_certificate(const GeneralizedLadder& g, const SubdivisionCertificate& cert);

}  // namespace ladder
