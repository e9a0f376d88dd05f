#include "ladderplan/decision.hpp"

namespace ladder {

namespace {

bool all_four(QuadrantFlags f) {
    return f.up_down && f.up_up && f.down_up && f.down_down;
}

// Shared scan: one indexed pass over the edges in canonical order, keeping
// the first edge that breaks each of the three conditions of interest.
struct ScanResult {
    std::optional<CrossEdge> all_four_edge;       // planarity witness
    std::optional<CrossEdge> anti_monotone_bad;   // has up_up or down_down
    std::optional<CrossEdge> monotone_bad;        // has up_down or down_up
    std::vector<std::pair<CrossEdge, QuadrantFlags>> flags;
};

ScanResult scan(const GeneralizedLadder& g, bool keep_flags) {
    ScanResult res;
    const QuadrantIndex idx = build_quadrant_index(g);
    if (keep_flags) res.flags.reserve(g.cross().size());
    for (CrossEdge e : g.cross()) {
        const QuadrantFlags f = idx.flags(e);
        if (!res.all_four_edge && all_four(f)) res.all_four_edge = e;
        if (!res.anti_monotone_bad && (f.up_up || f.down_down)) res.anti_monotone_bad = e;
        if (!res.monotone_bad && (f.up_down || f.down_up)) res.monotone_bad = e;
        if (keep_flags) res.flags.emplace_back(e, f);
    }
    return res;
}

}  // namespace

bool is_planar(const GeneralizedLadder& g) {
    return !scan(g, false).all_four_edge.has_value();
}

DecisionReport planarity_report(const GeneralizedLadder& g, bool with_flags) {
    ScanResult res = scan(g, with_flags);
    DecisionReport report;
    report.verdict = !res.all_four_edge.has_value();
    report.witness_edge = res.all_four_edge;
    report.per_edge_flags = std::move(res.flags);
    return report;
}

bool is_outerplanar(const GeneralizedLadder& g) {
    ScanResult res = scan(g, false);
    return !res.anti_monotone_bad || !res.monotone_bad;
}

DecisionReport outerplanarity_report(const GeneralizedLadder& g, bool with_flags) {
    ScanResult res = scan(g, with_flags);
    DecisionReport report;
    report.per_edge_flags = std::move(res.flags);
    if (!res.anti_monotone_bad) {
        report.verdict = true;
        report.condition = OuterplanarCondition::anti_monotone;
    } else if (!res.monotone_bad) {
        report.verdict = true;
        report.condition = OuterplanarCondition::monotone;
    } else {
        report.verdict = false;
        report.anti_monotone_violator = res.anti_monotone_bad;
        report.monotone_violator = res.monotone_bad;
    }
    return report;
}

bool is_planar_naive(const GeneralizedLadder& g) {
    for (CrossEdge e : g.cross()) {
        if (all_four(quadrant_flags_naive(g, e))) return false;
    }
    return true;
}

}  // namespace ladder
