#include "ladderplan/io.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <sstream>

#include "json.hpp"

namespace ladder {

namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

std::optional<Index> parse_int(std::string_view token) {
    Index value = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) return std::nullopt;
    return value;
}

std::vector<std::string> tokenize(std::string_view line) {
    std::vector<std::string> out;
    std::istringstream in{std::string(line)};
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

// --- JSON helpers -----------------------------------------------------------

[[noreturn]] void bad(const std::string& what) { throw ParseError(0, what); }

const json& need(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

Index need_int(const json& j, const char* key) {
    const json& v = need(j, key);
    if (!v.is_number_integer()) bad(std::string("field \"") + key + "\" must be an integer");
    return v.get<Index>();
}

std::string need_str(const json& j, const char* key) {
    const json& v = need(j, key);
    if (!v.is_string()) bad(std::string("field \"") + key + "\" must be a string");
    return v.get<std::string>();
}

const json& need_array(const json& j, const char* key) {
    const json& v = need(j, key);
    if (!v.is_array()) bad(std::string("field \"") + key + "\" must be an array");
    return v;
}

json parse_document(std::string_view text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) bad("not valid JSON");
    return j;
}

void check_version(const json& j) {
    if (need_int(j, "format_version") != 1) bad("unsupported format_version");
}

Side side_from(const std::string& s) {
    if (s == "g1") return Side::g1;
    if (s == "g2") return Side::g2;
    bad("side must be \"g1\" or \"g2\"");
}

const char* side_str(Side s) { return s == Side::g1 ? "g1" : "g2"; }

ordered_json vertex_json(VertexRef v) {
    return {{"side", side_str(v.side)}, {"index", v.index}};
}

VertexRef vertex_from(const json& j) {
    return {side_from(need_str(j, "side")), need_int(j, "index")};
}

std::string vertex_name(VertexRef v) {
    return (v.side == Side::g1 ? "u" : "v") + std::to_string(v.index);
}

const char* class_str(EdgeClass c) {
    switch (c) {
        case EdgeClass::x: return "X";
        case EdgeClass::y: return "Y";
        case EdgeClass::z: return "Z";
        case EdgeClass::w: return "W";
    }
    return "?";  // unreachable
}

EdgeClass class_from(const std::string& s) {
    if (s == "X") return EdgeClass::x;
    if (s == "Y") return EdgeClass::y;
    if (s == "Z") return EdgeClass::z;
    if (s == "W") return EdgeClass::w;
    bad("class must be one of \"X\", \"Y\", \"Z\", \"W\"");
}

}  // namespace

GeneralizedLadder parse_instance(std::string_view text) {
    // Split into lines, dropping "#" comments; remember 1-based line numbers.
    std::vector<std::pair<std::size_t, std::vector<std::string>>> lines;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t end = std::min(text.find('\n', start), text.size());
        ++line_no;
        std::string_view line = text.substr(start, end - start);
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        auto toks = tokenize(line);
        if (!toks.empty()) lines.emplace_back(line_no, std::move(toks));
        start = end + 1;
    }
    if (lines.empty()) throw ParseError(0, "empty instance: expected a header line");

    const auto& [head_no, head] = lines.front();
    if (head.front() == "ladder") {
        if (head.size() != 3) throw ParseError(head_no, "expected: ladder <m> <n>");
        const auto m = parse_int(head[1]), n = parse_int(head[2]);
        if (!m || !n) throw ParseError(head_no, "expected: ladder <m> <n>");
        std::vector<CrossEdge> cross;
        for (std::size_t i = 1; i < lines.size(); ++i) {
            const auto& [no, toks] = lines[i];
            if (toks.size() != 2) throw ParseError(no, "expected: <l> <r>");
            const auto l = parse_int(toks[0]), r = parse_int(toks[1]);
            if (!l || !r) throw ParseError(no, "expected: <l> <r>");
            cross.push_back({*l, *r});
        }
        return make_ladder(*m, *n, std::move(cross));
    }
    if (head.front() == "functigraph") {
        if (head.size() != 2) throw ParseError(head_no, "expected: functigraph <n>");
        const auto n = parse_int(head[1]);
        if (!n) throw ParseError(head_no, "expected: functigraph <n>");
        std::vector<Index> values;
        for (std::size_t i = 1; i < lines.size(); ++i) {
            const auto& [no, toks] = lines[i];
            for (const std::string& tok : toks) {
                const auto v = parse_int(tok);
                if (!v) throw ParseError(no, "expected an integer, got \"" + tok + "\"");
                values.push_back(*v);
            }
        }
        if (static_cast<Index>(values.size()) != *n) {
            throw ParseError(lines.back().first,
                             "expected " + std::to_string(*n) + " values, got " +
                                 std::to_string(values.size()));
        }
        return from_functigraph(values);
    }
    throw ParseError(head_no, "unknown header \"" + head.front() +
                                  "\": expected \"ladder\" or \"functigraph\"");
}

std::string serialize_instance(const GeneralizedLadder& g) {
    std::string out = "ladder " + std::to_string(g.m()) + " " + std::to_string(g.n()) + "\n";
    for (CrossEdge e : g.cross()) {
        out += std::to_string(e.l) + " " + std::to_string(e.r) + "\n";
    }
    return out;
}

std::string embedding_to_json(const Embedding& emb) {
    ordered_json j;
    j["format_version"] = 1;
    j["vertices"] = ordered_json::array();
    for (const VertexPlacement& vp : emb.vertices) {
        ordered_json v = vertex_json(vp.v);
        v["x"] = vp.p.x;
        v["y"] = vp.p.y;
        j["vertices"].push_back(std::move(v));
    }
    j["edges"] = ordered_json::array();
    for (const PolylineEdge& pe : emb.edges) {
        ordered_json e;
        e["kind"] = pe.from.side == pe.to.side ? "path" : "cross";
        e["endpoints"] = {vertex_json(pe.from), vertex_json(pe.to)};
        if (pe.cls) e["class"] = class_str(*pe.cls);
        ordered_json pts = ordered_json::array();
        for (Point p : pe.points) pts.push_back({p.x, p.y});
        e["waypoints"] = std::move(pts);
        j["edges"].push_back(std::move(e));
    }
    return j.dump(2) + "\n";
}

Embedding embedding_from_json(std::string_view text) {
    const json j = parse_document(text);
    check_version(j);
    Embedding emb;
    for (const json& v : need_array(j, "vertices")) {
        VertexPlacement vp;
        vp.v = vertex_from(v);
        vp.p = {need_int(v, "x"), need_int(v, "y")};
        emb.vertices.push_back(vp);
    }
    for (const json& e : need_array(j, "edges")) {
        PolylineEdge pe;
        const json& ends = need_array(e, "endpoints");
        if (ends.size() != 2) bad("endpoints must list exactly two vertices");
        pe.from = vertex_from(ends[0]);
        pe.to = vertex_from(ends[1]);
        if (e.contains("class")) pe.cls = class_from(need_str(e, "class"));
        for (const json& p : need_array(e, "waypoints")) {
            if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() ||
                !p[1].is_number_integer()) {
                bad("waypoints must be [x, y] integer pairs");
            }
            pe.points.push_back({p[0].get<Index>(), p[1].get<Index>()});
        }
        emb.edges.push_back(std::move(pe));
    }
    return emb;
}

namespace {

const char* pattern_str(SubdivisionPattern p) {
    switch (p) {
        case SubdivisionPattern::k33: return "K33";
        case SubdivisionPattern::k32: return "K32";
        case SubdivisionPattern::k4: return "K4";
    }
    return "?";  // unreachable
}

SubdivisionPattern pattern_from(const std::string& s) {
    if (s == "K33") return SubdivisionPattern::k33;
    if (s == "K32") return SubdivisionPattern::k32;
    if (s == "K4") return SubdivisionPattern::k4;
    bad("pattern must be one of \"K33\", \"K32\", \"K4\"");
}

}  // namespace

std::string certificate_to_json(const SubdivisionCertificate& cert) {
    ordered_json j;
    j["format_version"] = 1;
    j["pattern"] = pattern_str(cert.pattern);
    ordered_json x = ordered_json::array(), y = ordered_json::array();
    for (VertexRef v : cert.part_x) x.push_back(vertex_json(v));
    for (VertexRef v : cert.part_y) y.push_back(vertex_json(v));
    j["branch_classes"] = {{"X", std::move(x)}, {"Y", std::move(y)}};
    j["paths"] = ordered_json::array();
    for (const CertPath& p : cert.paths) {
        ordered_json pj;
        pj["endpoints"] = {vertex_json(p.from), vertex_json(p.to)};
        ordered_json verts = ordered_json::array();
        for (VertexRef v : p.vertices) verts.push_back(vertex_json(v));
        pj["vertices"] = std::move(verts);
        j["paths"].push_back(std::move(pj));
    }
    return j.dump(2) + "\n";
}

SubdivisionCertificate certificate_from_json(std::string_view text) {
    const json j = parse_document(text);
    check_version(j);
    SubdivisionCertificate cert;
    cert.pattern = pattern_from(need_str(j, "pattern"));
    const json& classes = need(j, "branch_classes");
    for (const json& v : need_array(classes, "X")) cert.part_x.push_back(vertex_from(v));
    for (const json& v : need_array(classes, "Y")) cert.part_y.push_back(vertex_from(v));
    for (const json& p : need_array(j, "paths")) {
        CertPath path;
        const json& ends = need_array(p, "endpoints");
        if (ends.size() != 2) bad("endpoints must list exactly two vertices");
        path.from = vertex_from(ends[0]);
        path.to = vertex_from(ends[1]);
        for (const json& v : need_array(p, "vertices")) path.vertices.push_back(vertex_from(v));
        cert.paths.push_back(std::move(path));
    }
    return cert;
}

std::string certificate_to_text(const SubdivisionCertificate& cert) {
    std::string out = std::string("pattern ") + pattern_str(cert.pattern) + "\n";
    out += "X";
    for (VertexRef v : cert.part_x) out += " " + vertex_name(v);
    out += "\n";
    if (!cert.part_y.empty()) {
        out += "Y";
        for (VertexRef v : cert.part_y) out += " " + vertex_name(v);
        out += "\n";
    }
    for (const CertPath& p : cert.paths) {
        out += "path";
        for (VertexRef v : p.vertices) out += " " + vertex_name(v);
        out += "\n";
    }
    return out;
}

std::string embedding_to_svg(const GeneralizedLadder& g, const Embedding& emb) {
    // Presentation scale: keep huge drawings within a sane coordinate range.
    const double scale = static_cast<double>(std::max<Index>(1, g.m() * g.n() / 1000));

    double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
    bool first = true;
    auto see = [&](Point p) {
        const double x = p.x / scale, y = p.y / scale;
        if (first) {
            min_x = max_x = x;
            min_y = max_y = y;
            first = false;
        } else {
            min_x = std::min(min_x, x);
            max_x = std::max(max_x, x);
            min_y = std::min(min_y, y);
            max_y = std::max(max_y, y);
        }
    };
    for (const VertexPlacement& vp : emb.vertices) see(vp.p);
    for (const PolylineEdge& pe : emb.edges) {
        for (Point p : pe.points) see(p);
    }
    const double pad = std::max(1.0, 0.05 * std::max(max_x - min_x, max_y - min_y));
    // SVG's y axis grows downward; flip so the drawing matches the math.
    auto tx = [&](Point p) { return p.x / scale - min_x + pad; };
    auto ty = [&](Point p) { return max_y - p.y / scale + pad; };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 "
        << (max_x - min_x + 2 * pad) << " " << (max_y - min_y + 2 * pad) << "\">\n";
    const double stroke = std::max(0.01, (max_x - min_x + 2 * pad) / 600.0);
    for (const PolylineEdge& pe : emb.edges) {
        const char* color = "#333333";
        if (pe.cls) {
            switch (*pe.cls) {
                case EdgeClass::x: color = "#c0392b"; break;
                case EdgeClass::y: color = "#2980b9"; break;
                case EdgeClass::z: color = "#27ae60"; break;
                case EdgeClass::w: color = "#e67e22"; break;
            }
        } else if (pe.from.side != pe.to.side) {
            color = "#8e44ad";  // unclassified cross edge
        }
        svg << "  <polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"" << stroke
            << "\" points=\"";
        for (std::size_t i = 0; i < pe.points.size(); ++i) {
            if (i) svg << " ";
            svg << tx(pe.points[i]) << "," << ty(pe.points[i]);
        }
        svg << "\"/>\n";
    }
    for (const VertexPlacement& vp : emb.vertices) {
        svg << "  <circle cx=\"" << tx(vp.p) << "\" cy=\"" << ty(vp.p) << "\" r=\""
            << 2 * stroke << "\" fill=\"#000000\"/>\n";
        svg << "  <text x=\"" << tx(vp.p) + 3 * stroke << "\" y=\"" << ty(vp.p) - 2 * stroke
            << "\" font-size=\"" << 8 * stroke << "\">" << vertex_name(vp.v) << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace ladder
