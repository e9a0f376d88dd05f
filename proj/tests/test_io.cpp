#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <string>

#include "ladderplan/embedding.hpp"
#include "ladderplan/io.hpp"
#include "ladderplan/rng.hpp"
#include "ladderplan/witness.hpp"
#include "support/brute.hpp"

using namespace ladder;
using brute::lad;

namespace {

const GeneralizedLadder kK33 = lad(3, 3, {{1, 1}, {1, 3}, {2, 2}, {3, 1}, {3, 3}});
const GeneralizedLadder kBig = lad(15, 13, {{1, 5},  {2, 6},  {3, 3},  {3, 4},  {4, 2},
                                            {5, 9},  {5, 7},  {6, 10}, {6, 11}, {7, 1},
                                            {8, 3},  {8, 5},  {9, 11}, {9, 13}, {10, 12},
                                            {11, 12}, {12, 6}, {13, 7}, {14, 10}, {15, 8}});

bool same_edge(const PolylineEdge& a, const PolylineEdge& b) {
    return a.from == b.from && a.to == b.to && a.cls == b.cls && a.points == b.points;
}

bool same_embedding(const Embedding& a, const Embedding& b) {
    if (a.vertices.size() != b.vertices.size() || a.edges.size() != b.edges.size()) return false;
    for (std::size_t i = 0; i < a.vertices.size(); ++i) {
        if (a.vertices[i].v != b.vertices[i].v || a.vertices[i].p != b.vertices[i].p) return false;
    }
    for (std::size_t i = 0; i < a.edges.size(); ++i) {
        if (!same_edge(a.edges[i], b.edges[i])) return false;
    }
    return true;
}

bool same_certificate(const SubdivisionCertificate& a, const SubdivisionCertificate& b) {
    if (a.pattern != b.pattern || a.part_x != b.part_x || a.part_y != b.part_y) return false;
    if (a.paths.size() != b.paths.size()) return false;
    for (std::size_t i = 0; i < a.paths.size(); ++i) {
        if (a.paths[i].from != b.paths[i].from || a.paths[i].to != b.paths[i].to ||
            a.paths[i].vertices != b.paths[i].vertices) {
            return false;
        }
    }
    return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// instance text format

TEST_CASE("parse_instance reads the ladder form") {
    const GeneralizedLadder g = parse_instance("ladder 3 3\n1 1\n2 2\n3 3\n");
    CHECK(g == lad(3, 3, {{1, 1}, {2, 2}, {3, 3}}));

    // comments, blank lines, missing trailing newline, edges out of order
    const GeneralizedLadder h = parse_instance(
        "# a 2 by 2 frame\n\nladder 2 2   # dimensions\n2 1\n\n# the other edge\n1 2");
    CHECK(h == lad(2, 2, {{1, 2}, {2, 1}}));

    CHECK(parse_instance("ladder 4 7\n") == lad(4, 7, {}));
}

TEST_CASE("parse_instance reads the functigraph form") {
    const GeneralizedLadder g = parse_instance("functigraph 3\n2 1 3\n");
    CHECK(g == from_functigraph({2, 1, 3}));
    CHECK(g.cross() == std::vector<CrossEdge>{{1, 2}, {2, 1}, {3, 3}});

    // values may be split across lines
    CHECK(parse_instance("functigraph 4\n2 1\n4\n3\n") == from_functigraph({2, 1, 4, 3}));
}

TEST_CASE("parse_instance reports the offending line") {
    const auto line_of = [](const char* text) {
        try {
            parse_instance(text);
        } catch (const ParseError& e) {
            return e.line;
        }
        return std::size_t(9999);
    };
    CHECK(line_of("") == 0);
    CHECK(line_of("# only comments\n\n") == 0);
    CHECK(line_of("grid 2 2\n") == 1);
    CHECK(line_of("ladder 2\n") == 1);
    CHECK(line_of("ladder 2 2 9\n") == 1);
    CHECK(line_of("ladder +2 2\n") == 1);
    CHECK(line_of("ladder 2 2.5\n") == 1);
    CHECK(line_of("ladder 2 2\n1 1\nx 1\n") == 3);
    CHECK(line_of("ladder 2 2\n1 1 1\n") == 2);
    CHECK(line_of("# intro\nladder 2 2\n\n1\n") == 4);
    CHECK(line_of("functigraph two\n") == 1);
    CHECK(line_of("functigraph 3\n1 nope 2\n") == 2);
    CHECK(line_of("functigraph 3\n1 2\n") == 2);  // wrong count, last data line
}

TEST_CASE("semantic errors pass through parse_instance untouched") {
    CHECK_THROWS_AS(parse_instance("ladder 2 2\n3 1\n"), IndexOutOfRangeError);
    CHECK_THROWS_AS(parse_instance("ladder 2 2\n-1 1\n"), IndexOutOfRangeError);
    CHECK_THROWS_AS(parse_instance("ladder 0 2\n"), IndexOutOfRangeError);
    CHECK_THROWS_AS(parse_instance("ladder 2 2\n1 1\n1 1\n"), DuplicateEdgeError);
    CHECK_THROWS_AS(parse_instance("functigraph 2\n1 3\n"), IndexOutOfRangeError);
}

TEST_CASE("serialize_instance writes the canonical ladder form") {
    CHECK(serialize_instance(lad(3, 3, {{3, 3}, {1, 1}, {2, 2}})) ==
          "ladder 3 3\n1 1\n2 2\n3 3\n");
    CHECK(serialize_instance(lad(2, 5, {})) == "ladder 2 5\n");
}

TEST_CASE("instance text round-trips") {
    for (int t = 0; t < 100; ++t) {
        const auto seed = static_cast<std::uint64_t>(140000 + t);
        const Index m = 1 + static_cast<Index>(SplitMix64{seed}.below(15));
        const Index n = 1 + static_cast<Index>(SplitMix64{seed + 1}.below(15));
        const Index k = static_cast<Index>(
            SplitMix64{seed + 2}.below(static_cast<std::uint64_t>(m * n) + 1));
        const GeneralizedLadder g = random_instance(seed, m, n, k);
        CHECK(parse_instance(serialize_instance(g)) == g);
    }
}

// ---------------------------------------------------------------------------
// embedding JSON

TEST_CASE("embedding JSON documents carry the advertised shape") {
    const Embedding emb = planar_embedding(kBig);
    const std::string text = embedding_to_json(emb);
    const auto j = nlohmann::json::parse(text);
    CHECK(j.at("format_version") == 1);
    REQUIRE(j.at("vertices").is_array());
    CHECK(j.at("vertices").size() == 28);
    const auto& v0 = j.at("vertices").at(0);
    CHECK(v0.at("side") == "g1");
    CHECK(v0.at("index") == 1);
    CHECK(v0.at("x") == 0);
    CHECK(v0.at("y") == 13);
    REQUIRE(j.at("edges").is_array());
    CHECK(j.at("edges").size() == 46);
    int cross = 0, classified = 0;
    for (const auto& e : j.at("edges")) {
        CHECK(e.at("endpoints").size() == 2);
        CHECK(e.at("waypoints").size() >= 2);
        if (e.at("kind") == "cross") {
            ++cross;
            if (e.contains("class")) ++classified;
        } else {
            CHECK(e.at("kind") == "path");
            CHECK_FALSE(e.contains("class"));
        }
    }
    CHECK(cross == 20);
    CHECK(classified == 20);
}

TEST_CASE("embedding JSON round-trips") {
    const Embedding emb = planar_embedding(kBig);
    CHECK(same_embedding(embedding_from_json(embedding_to_json(emb)), emb));

    const Embedding outer = outerplanar_embedding(lad(3, 3, {{1, 1}, {2, 2}, {3, 3}}));
    CHECK(same_embedding(embedding_from_json(embedding_to_json(outer)), outer));
}

TEST_CASE("a handwritten embedding document parses and verifies") {
    const char* text = R"({
      "format_version": 1,
      "vertices": [
        {"side": "g1", "index": 1, "x": 0, "y": 1},
        {"side": "g2", "index": 1, "x": 1, "y": 0}
      ],
      "edges": [
        {"kind": "cross",
         "endpoints": [{"side": "g1", "index": 1}, {"side": "g2", "index": 1}],
         "class": "W",
         "waypoints": [[0, 1], [1, 0]]}
      ]
    })";
    const Embedding emb = embedding_from_json(text);
    REQUIRE(emb.vertices.size() == 2);
    REQUIRE(emb.edges.size() == 1);
    CHECK(emb.edges[0].cls == EdgeClass::w);
    CHECK(emb.edges[0].points == std::vector<Point>{{0, 1}, {1, 0}});
    CHECK(verify_embedding(lad(1, 1, {{1, 1}}), emb));
}

TEST_CASE("embedding JSON rejects malformed documents") {
    CHECK_THROWS_AS(embedding_from_json("{"), ParseError);
    CHECK_THROWS_AS(embedding_from_json("[1, 2]"), ParseError);
    CHECK_THROWS_AS(embedding_from_json(R"({"format_version": 2})"), ParseError);
    CHECK_THROWS_AS(embedding_from_json(R"({"format_version": 1})"), ParseError);
    CHECK_THROWS_AS(
        embedding_from_json(R"({"format_version": 1, "vertices": 3, "edges": []})"),
        ParseError);
    CHECK_THROWS_AS(embedding_from_json(
                        R"({"format_version": 1,
                            "vertices": [{"side": "g3", "index": 1, "x": 0, "y": 0}],
                            "edges": []})"),
                    ParseError);
    CHECK_THROWS_AS(embedding_from_json(
                        R"({"format_version": 1,
                            "vertices": [{"side": "g1", "index": 1, "x": 0.5, "y": 0}],
                            "edges": []})"),
                    ParseError);
    CHECK_THROWS_AS(embedding_from_json(
                        R"({"format_version": 1, "vertices": [],
                            "edges": [{"kind": "cross",
                                       "endpoints": [{"side": "g1", "index": 1}],
                                       "waypoints": []}]})"),
                    ParseError);
    CHECK_THROWS_AS(embedding_from_json(
                        R"({"format_version": 1, "vertices": [],
                            "edges": [{"kind": "cross",
                                       "endpoints": [{"side": "g1", "index": 1},
                                                     {"side": "g2", "index": 1}],
                                       "class": "Q",
                                       "waypoints": []}]})"),
                    ParseError);
    CHECK_THROWS_AS(embedding_from_json(
                        R"({"format_version": 1, "vertices": [],
                            "edges": [{"kind": "cross",
                                       "endpoints": [{"side": "g1", "index": 1},
                                                     {"side": "g2", "index": 1}],
                                       "waypoints": [[1], [2, 3]]}]})"),
                    ParseError);
}

// ---------------------------------------------------------------------------
// certificate JSON and text

TEST_CASE("certificate JSON round-trips") {
    const SubdivisionCertificate cert = extract_k33_witness(kK33);
    const SubdivisionCertificate back = certificate_from_json(certificate_to_json(cert));
    CHECK(same_certificate(back, cert));
    CHECK(verify_certificate(kK33, back));

    const SubdivisionCertificate outer = extract_outerplanar_witness(kK33);
    CHECK(same_certificate(certificate_from_json(certificate_to_json(outer)), outer));
}

TEST_CASE("certificate JSON documents carry the advertised shape") {
    const auto j = nlohmann::json::parse(certificate_to_json(extract_k33_witness(kK33)));
    CHECK(j.at("format_version") == 1);
    CHECK(j.at("pattern") == "K33");
    CHECK(j.at("branch_classes").at("X").size() == 3);
    CHECK(j.at("branch_classes").at("Y").size() == 3);
    CHECK(j.at("paths").size() == 9);
    CHECK(j.at("paths").at(0).at("endpoints").size() == 2);
    CHECK(j.at("paths").at(0).at("vertices").size() >= 2);
}

TEST_CASE("certificate JSON rejects malformed documents") {
    CHECK_THROWS_AS(certificate_from_json("nope"), ParseError);
    CHECK_THROWS_AS(certificate_from_json(R"({"format_version": 1, "pattern": "K5",
        "branch_classes": {"X": [], "Y": []}, "paths": []})"),
                    ParseError);
    CHECK_THROWS_AS(certificate_from_json(R"({"format_version": 1, "pattern": "K33",
        "branch_classes": {"X": []}, "paths": []})"),
                    ParseError);
}

TEST_CASE("certificate text form is the frozen human-readable block") {
    CHECK(certificate_to_text(extract_k33_witness(kK33)) ==
          "pattern K33\n"
          "X v2 u1 u3\n"
          "Y u2 v1 v3\n"
          "path v2 u2\n"
          "path u1 u2\n"
          "path u3 u2\n"
          "path v2 v1\n"
          "path v2 v3\n"
          "path u1 v1\n"
          "path u1 v3\n"
          "path u3 v1\n"
          "path u3 v3\n");

    // K4 certificates have no second branch class, so no Y line
    const auto k4_text = certificate_to_text(
        extract_outerplanar_witness(lad(2, 2, {{1, 1}, {1, 2}, {2, 1}, {2, 2}})));
    CHECK(k4_text.find("pattern K4\n") == 0);
    CHECK(k4_text.find("\nY") == std::string::npos);
}

// ---------------------------------------------------------------------------
// SVG rendering

TEST_CASE("SVG output contains every element of the drawing") {
    const Embedding emb = planar_embedding(kBig);
    const std::string svg = embedding_to_svg(kBig, emb);
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("</svg>\n") != std::string::npos);

    std::size_t circles = 0, polylines = 0, labels = 0;
    for (std::size_t pos = 0; (pos = svg.find("<circle", pos)) != std::string::npos; ++pos)
        ++circles;
    for (std::size_t pos = 0; (pos = svg.find("<polyline", pos)) != std::string::npos; ++pos)
        ++polylines;
    for (std::size_t pos = 0; (pos = svg.find("<text", pos)) != std::string::npos; ++pos)
        ++labels;
    CHECK(circles == 28);
    CHECK(polylines == 46);
    CHECK(labels == 28);
    CHECK(svg.find(">u1</text>") != std::string::npos);
    CHECK(svg.find(">v13</text>") != std::string::npos);
    CHECK(svg.find("#c0392b") != std::string::npos);  // an x-class route
}
