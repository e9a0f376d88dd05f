#include "ladderplan/embedding.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ladderplan/decision.hpp"
#include "ladderplan/geometry.hpp"

namespace ladder {

namespace {

VertexRef u_ref(Index i) { return {Side::g1, i}; }
VertexRef v_ref(Index j) { return {Side::g2, j}; }

PolylineEdge straight(VertexRef a, Point pa, VertexRef b, Point pb) {
    return {a, b, std::nullopt, {pa, pb}};
}

}  // namespace

std::vector<std::pair<CrossEdge, EdgeClass>> classify_edges(const GeneralizedLadder& g) {
    const QuadrantIndex idx = build_quadrant_index(g);
    std::vector<std::pair<CrossEdge, EdgeClass>> out;
    out.reserve(g.cross().size());
    for (CrossEdge e : g.cross()) {
        const QuadrantFlags f = idx.flags(e);
        EdgeClass cls;
        if (!f.up_down) {
            cls = EdgeClass::x;
        } else if (!f.up_up) {
            cls = EdgeClass::y;
        } else if (!f.down_up) {
            cls = EdgeClass::z;
        } else if (!f.down_down) {
            cls = EdgeClass::w;
        } else {
            throw NotPlanarError("no routing class: edge (" + std::to_string(e.l) + ", " +
                                 std::to_string(e.r) + ") has all four quadrants occupied");
        }
        out.emplace_back(e, cls);
    }
    return out;
}

Embedding planar_embedding(const GeneralizedLadder& g) {
    const auto classes = classify_edges(g);  // throws NotPlanarError if unroutable
    const Index m = g.m(), n = g.n(), mn = m * n;

    Embedding emb;
    auto u_at = [&](Index i) { return Point{0, n * i}; };
    auto v_at = [&](Index j) { return Point{mn, mn - m * j}; };
    for (Index i = 1; i <= m; ++i) emb.vertices.push_back({u_ref(i), u_at(i)});
    for (Index j = 1; j <= n; ++j) emb.vertices.push_back({v_ref(j), v_at(j)});

    for (Index i = 1; i < m; ++i) {
        emb.edges.push_back(straight(u_ref(i), u_at(i), u_ref(i + 1), u_at(i + 1)));
    }
    for (Index j = 1; j < n; ++j) {
        emb.edges.push_back(straight(v_ref(j), v_at(j), v_ref(j + 1), v_at(j + 1)));
    }

    for (auto [e, cls] : classes) {
        // Each class owns a disjoint region of the grid; within a class the
        // anchor ordinate n*l + r orders the edges consistently at both
        // anchors, which is what keeps same-class routes parallel.
        const Index a = n * e.l + e.r;
        PolylineEdge pe;
        pe.from = u_ref(e.l);
        pe.to = v_ref(e.r);
        pe.cls = cls;
        switch (cls) {
            case EdgeClass::x:
                // right of the second path, below the diagonal band
                pe.points = {u_at(e.l), {mn, mn - n + a}, {mn - n + a, mn - n + a}, v_at(e.r)};
                break;
            case EdgeClass::y:
                // around the top of the whole frame
                pe.points = {u_at(e.l),
                             {-2 * mn + n * e.l - e.r, 3 * mn - n * e.l + e.r},
                             {3 * mn - n * e.l + e.r, 3 * mn - n * e.l + e.r},
                             v_at(e.r)};
                break;
            case EdgeClass::z:
                // around the bottom-left corner, below the first path
                pe.points = {u_at(e.l), {n - a, n - a}, {0, n - a}, v_at(e.r)};
                break;
            case EdgeClass::w:
                // straight through the middle band
                pe.points = {u_at(e.l), v_at(e.r)};
                break;
        }
        emb.edges.push_back(std::move(pe));
    }
    return emb;
}

Embedding outerplanar_embedding(const GeneralizedLadder& g) {
    const DecisionReport report = outerplanarity_report(g);
    if (!report.verdict) {
        throw NotOuterplanarError("instance is not outerplanar");
    }
    const Index m = g.m(), n = g.n();
    // Two columns, every vertex on the shared outer face.  In a monotone
    // family r never decreases as l grows, so drawing v_j at height j keeps
    // the straight cross segments nested; an anti-monotone family becomes
    // monotone when the second path is reversed, hence height n - j + 1.
    const bool reversed = report.condition == OuterplanarCondition::anti_monotone;
    auto u_at = [](Index i) { return Point{0, i}; };
    auto v_at = [&](Index j) { return Point{1, reversed ? n - j + 1 : j}; };

    Embedding emb;
    for (Index i = 1; i <= m; ++i) emb.vertices.push_back({u_ref(i), u_at(i)});
    for (Index j = 1; j <= n; ++j) emb.vertices.push_back({v_ref(j), v_at(j)});
    for (Index i = 1; i < m; ++i) {
        emb.edges.push_back(straight(u_ref(i), u_at(i), u_ref(i + 1), u_at(i + 1)));
    }
    for (Index j = 1; j < n; ++j) {
        emb.edges.push_back(straight(v_ref(j), v_at(j), v_ref(j + 1), v_at(j + 1)));
    }
    for (CrossEdge e : g.cross()) {
        PolylineEdge pe = straight(u_ref(e.l), u_at(e.l), v_ref(e.r), v_at(e.r));
        emb.edges.push_back(std::move(pe));
    }
    return emb;
}

namespace {

// A validated edge record: its identity in g plus its cleaned polyline.
struct DrawnEdge {
    VertexRef a, b;             // the edge's two vertices
    std::vector<Point> points;  // zero-length pieces dropped
};

bool valid_ref(const GeneralizedLadder& g, VertexRef v) {
    const Index limit = v.side == Side::g1 ? g.m() : g.n();
    return v.index >= 1 && v.index <= limit;
}

// Keep every coordinate inside the range where the geometric predicates are
// guaranteed exact.
bool in_exact_range(Point p) {
    return -kExactCoordinateLimit < p.x && p.x < kExactCoordinateLimit &&
           -kExactCoordinateLimit < p.y && p.y < kExactCoordinateLimit;
}

}  // namespace

bool verify_embedding(const GeneralizedLadder& g, const Embedding& emb) {
    // Phase 1: shape.  Anything structurally broken means "not a valid
    // drawing" (false); only genuinely missing pieces raise
    // IncompleteEmbeddingError below.
    std::map<VertexRef, Point> coords;
    for (const VertexPlacement& vp : emb.vertices) {
        if (!valid_ref(g, vp.v)) return false;
        if (!in_exact_range(vp.p)) return false;
        if (!coords.emplace(vp.v, vp.p).second) return false;  // duplicate placement
    }

    std::map<std::pair<VertexRef, VertexRef>, DrawnEdge> drawn;  // key: sorted endpoints
    for (const PolylineEdge& pe : emb.edges) {
        if (!valid_ref(g, pe.from) || !valid_ref(g, pe.to)) return false;
        // Identify the edge in g.
        if (pe.from.side != pe.to.side) {
            const CrossEdge ce = pe.from.side == Side::g1 ? CrossEdge{pe.from.index, pe.to.index}
                                                          : CrossEdge{pe.to.index, pe.from.index};
            if (!g.contains(ce)) return false;
        } else {
            if (std::abs(pe.from.index - pe.to.index) != 1) return false;
        }

        DrawnEdge de;
        de.a = std::min(pe.from, pe.to);
        de.b = std::max(pe.from, pe.to);
        for (Point p : pe.points) {  // drop zero-length pieces
            if (!in_exact_range(p)) return false;
            if (de.points.empty() || de.points.back() != p) de.points.push_back(p);
        }
        if (de.points.size() < 2) return false;

        // The polyline must start and end at its endpoints' placements
        // (checked later for existence; here just record).
        auto key = std::make_pair(de.a, de.b);
        if (!drawn.emplace(key, std::move(de)).second) return false;  // drawn twice
    }

    // Phase 2: completeness of a structurally sound drawing.
    for (Index i = 1; i <= g.m(); ++i) {
        if (!coords.count(u_ref(i))) {
            throw IncompleteEmbeddingError("vertex u" + std::to_string(i) + " has no coordinates");
        }
    }
    for (Index j = 1; j <= g.n(); ++j) {
        if (!coords.count(v_ref(j))) {
            throw IncompleteEmbeddingError("vertex v" + std::to_string(j) + " has no coordinates");
        }
    }
    auto require_edge = [&](VertexRef a, VertexRef b, const std::string& name) {
        if (!drawn.count(std::make_pair(std::min(a, b), std::max(a, b)))) {
            throw IncompleteEmbeddingError("edge " + name + " has no polyline");
        }
    };
    for (Index i = 1; i < g.m(); ++i) {
        require_edge(u_ref(i), u_ref(i + 1), "u" + std::to_string(i) + "-u" + std::to_string(i + 1));
    }
    for (Index j = 1; j < g.n(); ++j) {
        require_edge(v_ref(j), v_ref(j + 1), "v" + std::to_string(j) + "-v" + std::to_string(j + 1));
    }
    for (CrossEdge e : g.cross()) {
        require_edge(u_ref(e.l), v_ref(e.r),
                     "u" + std::to_string(e.l) + "-v" + std::to_string(e.r));
    }

    // Phase 3: geometry, all exact.
    {
        std::set<Point> seen;
        for (const auto& [v, p] : coords) {
            if (!seen.insert(p).second) return false;  // two vertices drawn at one point
        }
    }

    std::vector<const DrawnEdge*> edges;
    edges.reserve(drawn.size());
    for (auto& [key, de] : drawn) {
        // Polyline terminals must sit exactly on the endpoints' placements.
        // The record may traverse the edge in either direction.
        const Point pa = coords.at(de.a), pb = coords.at(de.b);
        const Point front = de.points.front(), back = de.points.back();
        if (!((front == pa && back == pb) || (front == pb && back == pa))) return false;

        // Simplicity within the polyline: consecutive segments meet exactly
        // at their junction, non-consecutive segments not at all.
        for (std::size_t i = 0; i + 1 < de.points.size(); ++i) {
            for (std::size_t j = i + 1; j + 1 < de.points.size(); ++j) {
                Point touch;
                const SegmentContact c = classify_segments(
                    de.points[i], de.points[i + 1], de.points[j], de.points[j + 1], &touch);
                if (j == i + 1) {
                    if (c != SegmentContact::shared_endpoint || touch != de.points[j]) return false;
                } else if (c != SegmentContact::none) {
                    return false;
                }
            }
        }
        edges.push_back(&de);
    }

    // Segments of distinct edges may only meet at one point that is a
    // terminal of both polylines and the drawn position of a vertex both
    // edges are incident to.
    for (std::size_t a = 0; a < edges.size(); ++a) {
        for (std::size_t b = a + 1; b < edges.size(); ++b) {
            const DrawnEdge& ea = *edges[a];
            const DrawnEdge& eb = *edges[b];
            for (std::size_t i = 0; i + 1 < ea.points.size(); ++i) {
                for (std::size_t j = 0; j + 1 < eb.points.size(); ++j) {
                    Point touch;
                    const SegmentContact c = classify_segments(
                        ea.points[i], ea.points[i + 1], eb.points[j], eb.points[j + 1], &touch);
                    if (c == SegmentContact::none) continue;
                    if (c != SegmentContact::shared_endpoint) return false;
                    if (touch != ea.points.front() && touch != ea.points.back()) return false;
                    if (touch != eb.points.front() && touch != eb.points.back()) return false;
                    const bool at_shared_vertex =
                        ((ea.a == eb.a || ea.a == eb.b) && coords.at(ea.a) == touch) ||
                        ((ea.b == eb.a || ea.b == eb.b) && coords.at(ea.b) == touch);
                    if (!at_shared_vertex) return false;
                }
            }
        }
    }
    return true;
}

}  // namespace ladder
