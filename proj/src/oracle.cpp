#include "ladderplan/oracle.hpp"

#include <algorithm>

namespace ladder {

namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
    return a * b;
}

std::uint64_t factorial_saturating(std::uint64_t x) {
    std::uint64_t out = 1;
    for (std::uint64_t i = 2; i <= x; ++i) out = saturating_mul(out, i);
    return out;
}

using Adjacency = std::vector<std::vector<Index>>;

Adjacency adjacency_of(const SimpleGraph& g) {
    Adjacency adj(static_cast<std::size_t>(g.vertex_count));
    for (auto [a, b] : g.edges) {
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
    }
    for (auto& nb : adj) std::sort(nb.begin(), nb.end());
    return adj;
}

std::vector<std::vector<Index>> components_of(const SimpleGraph& g, const Adjacency& adj) {
    std::vector<int> comp(static_cast<std::size_t>(g.vertex_count), -1);
    std::vector<std::vector<Index>> comps;
    for (Index s = 0; s < g.vertex_count; ++s) {
        if (comp[static_cast<std::size_t>(s)] != -1) continue;
        const int id = static_cast<int>(comps.size());
        comps.emplace_back();
        std::vector<Index> stack{s};
        comp[static_cast<std::size_t>(s)] = id;
        while (!stack.empty()) {
            Index v = stack.back();
            stack.pop_back();
            comps.back().push_back(v);
            for (Index w : adj[static_cast<std::size_t>(v)]) {
                if (comp[static_cast<std::size_t>(w)] == -1) {
                    comp[static_cast<std::size_t>(w)] = id;
                    stack.push_back(w);
                }
            }
        }
    }
    return comps;
}

// State for enumerating the rotation systems of one component.  rot[v] is
// the current cyclic neighbor order at v; the first neighbor stays pinned so
// each cyclic order is generated exactly once.
struct RotationOdometer {
    std::vector<Index> verts;     // vertices of the component, with degree >= 2
    Adjacency* rot;

    // Advances to the next rotation system; false when all have been seen.
    bool step() {
        for (Index v : verts) {
            auto& nb = (*rot)[static_cast<std::size_t>(v)];
            if (std::next_permutation(nb.begin() + 1, nb.end())) return true;
            // wrapped at v (tail is sorted again): carry into the next vertex
        }
        return false;
    }
};

// Traces every face of the current rotation system restricted to one
// component.  Returns the face count; if all_on_one_face is non-null it is
// set to whether some face's walk visits every component vertex.
//
// Faces are the orbits of the dart successor: the dart (u -> v) continues as
// (v -> w) where w follows u in the cyclic order at v.
// Scratch space reused across the many rotation systems of one component.
struct FaceTracer {
    std::vector<std::size_t> dart_base;  // dart id of (v, 0), indexed by vertex
    std::vector<Index> dart_vertex;      // origin vertex of each dart
    std::vector<char> used;
    std::vector<char> on_face;

    void init(const Adjacency& rot, const std::vector<Index>& comp_vertices) {
        dart_base.assign(rot.size(), 0);
        dart_vertex.clear();
        for (Index v : comp_vertices) {
            dart_base[static_cast<std::size_t>(v)] = dart_vertex.size();
            dart_vertex.insert(dart_vertex.end(), rot[static_cast<std::size_t>(v)].size(), v);
        }
        used.assign(dart_vertex.size(), 0);
        on_face.assign(rot.size(), 0);
    }

    int trace(const Adjacency& rot, const std::vector<Index>& comp_vertices,
              bool* all_on_one_face) {
        if (all_on_one_face) *all_on_one_face = false;
        std::fill(used.begin(), used.end(), 0);

        int faces = 0;
        for (std::size_t d0 = 0; d0 < dart_vertex.size(); ++d0) {
            if (used[d0]) continue;
            ++faces;
            std::size_t seen_vertices = 0;
            std::size_t d = d0;
            do {
                used[d] = 1;
                const Index v = dart_vertex[d];
                const std::size_t i = d - dart_base[static_cast<std::size_t>(v)];
                if (all_on_one_face && !on_face[static_cast<std::size_t>(v)]) {
                    on_face[static_cast<std::size_t>(v)] = 1;
                    ++seen_vertices;
                }
                // Follow dart (v -> w), then turn: the next dart leaves w
                // towards the neighbor after v in w's rotation.
                const Index w = rot[static_cast<std::size_t>(v)][i];
                const auto& wn = rot[static_cast<std::size_t>(w)];
                const std::size_t pos = static_cast<std::size_t>(
                    std::find(wn.begin(), wn.end(), v) - wn.begin());
                d = dart_base[static_cast<std::size_t>(w)] + (pos + 1) % wn.size();
            } while (d != d0);
            if (all_on_one_face) {
                if (seen_vertices == comp_vertices.size()) *all_on_one_face = true;
                // keep tracing: the face count still decides planarity
                for (Index u : comp_vertices) on_face[static_cast<std::size_t>(u)] = 0;
            }
        }
        return faces;
    }
};

// Core search shared by both oracles: for each component, look for a
// rotation system with E - V + 2 faces (genus zero); when require_outer is
// set, additionally require a face through all of the component's vertices.
bool search(const SimpleGraph& g, std::uint64_t budget, bool require_outer) {
    const std::uint64_t space = rotation_search_space(g);
    if (space > budget) throw BudgetExceededError(space);

    Adjacency rot = adjacency_of(g);
    for (const std::vector<Index>& comp : components_of(g, rot)) {
        std::size_t edge_count = 0;
        for (Index v : comp) edge_count += rot[static_cast<std::size_t>(v)].size();
        edge_count /= 2;
        if (edge_count == 0) continue;  // isolated vertex: trivially fine
        const int target_faces = static_cast<int>(edge_count) - static_cast<int>(comp.size()) + 2;

        RotationOdometer odo;
        odo.rot = &rot;
        for (Index v : comp) {
            if (rot[static_cast<std::size_t>(v)].size() >= 3) odo.verts.push_back(v);
        }
        FaceTracer tracer;
        tracer.init(rot, comp);

        bool found = false;
        do {
            bool outer = false;
            const int faces = tracer.trace(rot, comp, require_outer ? &outer : nullptr);
            if (faces == target_faces && (!require_outer || outer)) {
                found = true;
                break;
            }
        } while (odo.step());

        // Leave the rotations sorted for the next component (step() resets
        // them on wrap, and on early exit the next component's vertices were
        // never touched).
        if (!found) return false;
    }
    return true;
}

}  // namespace

SimpleGraph to_simple_graph(const GeneralizedLadder& g) {
    SimpleGraph out;
    out.vertex_count = g.m() + g.n();
    for (Index i = 1; i < g.m(); ++i) out.edges.emplace_back(i - 1, i);
    for (Index j = 1; j < g.n(); ++j) out.edges.emplace_back(g.m() + j - 1, g.m() + j);
    for (CrossEdge e : g.cross()) out.edges.emplace_back(e.l - 1, g.m() + e.r - 1);
    for (auto& [a, b] : out.edges) {
        if (a > b) std::swap(a, b);
    }
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

SimpleGraph with_apex(const SimpleGraph& g) {
    SimpleGraph out = g;
    const Index apex = g.vertex_count;
    out.vertex_count = g.vertex_count + 1;
    for (Index v = 0; v < g.vertex_count; ++v) out.edges.emplace_back(v, apex);
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

std::uint64_t rotation_search_space(const SimpleGraph& g) {
    std::vector<std::uint64_t> deg(static_cast<std::size_t>(g.vertex_count), 0);
    for (auto [a, b] : g.edges) {
        ++deg[static_cast<std::size_t>(a)];
        ++deg[static_cast<std::size_t>(b)];
    }
    std::uint64_t space = 1;
    for (std::uint64_t d : deg) {
        if (d >= 2) space = saturating_mul(space, factorial_saturating(d - 1));
    }
    return space;
}

bool oracle_is_planar(const SimpleGraph& g, std::uint64_t budget) {
    return search(g, budget, false);
}

bool oracle_is_outerplanar(const SimpleGraph& g, std::uint64_t budget) {
    return search(g, budget, true);
}

}  // namespace ladder
