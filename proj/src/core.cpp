#include "ladderplan/core.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace ladder {

namespace {

std::string edge_str(CrossEdge e) {
    return "(" + std::to_string(e.l) + ", " + std::to_string(e.r) + ")";
}

// Aggregate identities over an empty set: min of nothing is +inf, max -inf.
constexpr Index kEmptyMin = std::numeric_limits<Index>::max();
constexpr Index kEmptyMax = std::numeric_limits<Index>::min();

}  // namespace

GeneralizedLadder::GeneralizedLadder(Index m, Index n, std::vector<CrossEdge> cross)
    : m_(m), n_(n), cross_(std::move(cross)) {}

bool GeneralizedLadder::contains(CrossEdge e) const {
    return std::binary_search(cross_.begin(), cross_.end(), e);
}

GeneralizedLadder make_ladder(Index m, Index n, std::vector<CrossEdge> cross) {
    if (m < 1 || n < 1) {
        throw IndexOutOfRangeError("path lengths must be at least 1, got m=" +
                                   std::to_string(m) + " n=" + std::to_string(n));
    }
    for (CrossEdge e : cross) {
        if (e.l < 1 || e.l > m || e.r < 1 || e.r > n) {
            throw IndexOutOfRangeError("cross edge " + edge_str(e) + " outside [1, " +
                                       std::to_string(m) + "] x [1, " + std::to_string(n) + "]");
        }
    }
    std::sort(cross.begin(), cross.end());
    auto dup = std::adjacent_find(cross.begin(), cross.end());
    if (dup != cross.end()) {
        throw DuplicateEdgeError("duplicate cross edge " + edge_str(*dup));
    }
    return GeneralizedLadder(m, n, std::move(cross));
}

GeneralizedLadder from_functigraph(const std::vector<Index>& f) {
    const Index n = static_cast<Index>(f.size());
    if (n < 1) {
        throw IndexOutOfRangeError("functigraph needs at least one value");
    }
    std::vector<CrossEdge> cross;
    cross.reserve(f.size());
    for (Index i = 1; i <= n; ++i) {
        cross.push_back({i, f[static_cast<std::size_t>(i - 1)]});
    }
    // All l values are distinct, so only the range check can fire.
    return make_ladder(n, n, std::move(cross));
}

CrossEdge map_edge(Symmetry s, Index m, Index n, CrossEdge e) {
    switch (s) {
        case Symmetry::reverse_g1: return {m - e.l + 1, e.r};
        case Symmetry::reverse_g2: return {e.l, n - e.r + 1};
        case Symmetry::swap_sides: return {e.r, e.l};
    }
    return e;  // unreachable
}

VertexRef map_vertex(Symmetry s, Index m, Index n, VertexRef v) {
    switch (s) {
        case Symmetry::reverse_g1:
            return v.side == Side::g1 ? VertexRef{Side::g1, m - v.index + 1} : v;
        case Symmetry::reverse_g2:
            return v.side == Side::g2 ? VertexRef{Side::g2, n - v.index + 1} : v;
        case Symmetry::swap_sides:
            return {v.side == Side::g1 ? Side::g2 : Side::g1, v.index};
    }
    return v;  // unreachable
}

GeneralizedLadder apply_symmetry(const GeneralizedLadder& g, Symmetry s) {
    std::vector<CrossEdge> mapped;
    mapped.reserve(g.cross().size());
    for (CrossEdge e : g.cross()) {
        mapped.push_back(map_edge(s, g.m(), g.n(), e));
    }
    const bool swap = s == Symmetry::swap_sides;
    return make_ladder(swap ? g.n() : g.m(), swap ? g.m() : g.n(), std::move(mapped));
}

QuadrantIndex build_quadrant_index(const GeneralizedLadder& g) {
    QuadrantIndex idx;
    const auto& cross = g.cross();

    // One pass for the per-group extremes (edges are sorted, so groups of
    // equal l are contiguous).
    std::vector<Index> group_min, group_max;
    for (std::size_t i = 0; i < cross.size();) {
        std::size_t j = i;
        Index lo = kEmptyMin, hi = kEmptyMax;
        while (j < cross.size() && cross[j].l == cross[i].l) {
            lo = std::min(lo, cross[j].r);
            hi = std::max(hi, cross[j].r);
            ++j;
        }
        idx.distinct_l_.push_back(cross[i].l);
        group_min.push_back(lo);
        group_max.push_back(hi);
        i = j;
    }

    // Exclusive running extremes from both ends.
    const std::size_t groups = idx.distinct_l_.size();
    idx.prefix_min_r_.assign(groups, kEmptyMin);
    idx.prefix_max_r_.assign(groups, kEmptyMax);
    idx.suffix_min_r_.assign(groups, kEmptyMin);
    idx.suffix_max_r_.assign(groups, kEmptyMax);
    for (std::size_t i = 1; i < groups; ++i) {
        idx.prefix_min_r_[i] = std::min(idx.prefix_min_r_[i - 1], group_min[i - 1]);
        idx.prefix_max_r_[i] = std::max(idx.prefix_max_r_[i - 1], group_max[i - 1]);
    }
    for (std::size_t i = groups; i-- > 1;) {
        idx.suffix_min_r_[i - 1] = std::min(idx.suffix_min_r_[i], group_min[i]);
        idx.suffix_max_r_[i - 1] = std::max(idx.suffix_max_r_[i], group_max[i]);
    }
    return idx;
}

QuadrantFlags QuadrantIndex::flags(CrossEdge e) const {
    auto it = std::lower_bound(distinct_l_.begin(), distinct_l_.end(), e.l);
    const std::size_t gi = static_cast<std::size_t>(it - distinct_l_.begin());
    // Strict comparisons against the exclusive extremes decide each quadrant;
    // the sentinels make empty sides fail automatically.
    return {
        /*up_down=*/suffix_min_r_[gi] < e.r,
        /*up_up=*/suffix_max_r_[gi] > e.r,
        /*down_up=*/prefix_max_r_[gi] > e.r,
        /*down_down=*/prefix_min_r_[gi] < e.r,
    };
}

QuadrantFlags quadrant_flags(const GeneralizedLadder& g, const QuadrantIndex& idx, CrossEdge e) {
    if (!g.contains(e)) {
        throw EdgeNotInInstanceError("edge " + edge_str(e) + " is not in the instance");
    }
    return idx.flags(e);
}

QuadrantFlags quadrant_flags_naive(const GeneralizedLadder& g, CrossEdge e) {
    if (!g.contains(e)) {
        throw EdgeNotInInstanceError("edge " + edge_str(e) + " is not in the instance");
    }
    QuadrantFlags f;
    for (CrossEdge o : g.cross()) {
        if (o.l > e.l && o.r < e.r) f.up_down = true;
        if (o.l > e.l && o.r > e.r) f.up_up = true;
        if (o.l < e.l && o.r > e.r) f.down_up = true;
        if (o.l < e.l && o.r < e.r) f.down_down = true;
    }
    return f;
}

}  // namespace ladder
