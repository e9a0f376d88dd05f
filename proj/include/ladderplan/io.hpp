#pragma once

#include <string>
#include <string_view>

#include "ladderplan/core.hpp"
#include "ladderplan/embedding.hpp"
#include "ladderplan/witness.hpp"

namespace ladder {

// --- instance text format ---------------------------------------------------
//
// Two header forms, "#" comments and blank lines ignored everywhere:
//
//   ladder <m> <n>          explicit instance; each following non-blank line
//   <l> <r>                 is one cross edge
//
//   functigraph <n>         functigraph instance; the following lines hold
//   <f(1)> ... <f(n)>       exactly n whitespace-separated values
//
// parse_instance accepts both; serialize_instance always writes the ladder
// form with edges in canonical order, so parse(serialize(g)) == g.

// Throws ParseError (with a 1-based line number) on malformed input, plus
// the instance-construction errors for semantically invalid edge lists.
GeneralizedLadder parse_instance(std::string_view text);

std::string serialize_instance(const GeneralizedLadder& g);

// --- embedding JSON ---------------------------------------------------------
//
// {"format_version": 1,
//  "vertices": [{"side": "g1"|"g2", "index": i, "x": x, "y": y}, ...],
//  "edges": [{"kind": "path"|"cross",
//             "endpoints": [{"side": ..., "index": ...}, ...two...],
//             "class": "X"|"Y"|"Z"|"W",        only on classified cross edges
//             "waypoints": [[x, y], ...]}, ...]}

std::string embedding_to_json(const Embedding& emb);

// Throws ParseError on anything that is not a version-1 embedding document.
Embedding embedding_from_json(std::string_view text);

// --- certificate JSON / text ------------------------------------------------
//
// {"format_version": 1,
//  "pattern": "K33"|"K32"|"K4",
//  "branch_classes": {"X": [vertex, ...], "Y": [vertex, ...]},
//  "paths": [{"endpoints": [vertex, vertex], "vertices": [vertex, ...]}, ...]}
// with vertex = {"side": "g1"|"g2", "index": i}.
//
// The text form is a small human-readable block with vertices written u<i> /
// v<j>, one path per line.

std::string certificate_to_json(const SubdivisionCertificate& cert);

// Throws ParseError on anything that is not a version-1 certificate document.
SubdivisionCertificate certificate_from_json(std::string_view text);

std::string certificate_to_text(const SubdivisionCertificate& cert);

// --- embedding SVG ----------------------------------------------------------

// A standalone SVG rendering of the drawing.  Coordinates are divided by
// max(1, m*n/1000) so large instances stay within a sane canvas; this is
// presentation only, the JSON remains the exact form.
std::string embedding_to_svg(const GeneralizedLadder& g, const Embedding& emb);

}  // namespace ladder
