// Python bindings for the ladderplan library.  The surface mirrors the C++
// API at the instance level: cross edges travel as (l, r) tuples, vertices as
// VertexRef objects, and the oracle entry points take the ladder directly.

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "ladderplan/cli.hpp"
#include "ladderplan/core.hpp"
#include "ladderplan/decision.hpp"
#include "ladderplan/embedding.hpp"
#include "ladderplan/errors.hpp"
#include "ladderplan/geometry.hpp"
#include "ladderplan/io.hpp"
#include "ladderplan/oracle.hpp"
#include "ladderplan/rng.hpp"
#include "ladderplan/witness.hpp"

namespace py = pybind11;
using namespace ladder;

namespace {

using PyEdge = std::pair<Index, Index>;

CrossEdge to_edge(PyEdge e) { return {e.first, e.second}; }
PyEdge from_edge(CrossEdge e) { return {e.l, e.r}; }

std::vector<CrossEdge> to_edges(const std::vector<PyEdge>& edges) {
    std::vector<CrossEdge> out;
    out.reserve(edges.size());
    for (PyEdge e : edges) out.push_back(to_edge(e));
    return out;
}

std::vector<PyEdge> from_edges(const std::vector<CrossEdge>& edges) {
    std::vector<PyEdge> out;
    out.reserve(edges.size());
    for (CrossEdge e : edges) out.push_back(from_edge(e));
    return out;
}

std::string vertex_name(VertexRef v) {
    return (v.side == Side::g1 ? "u" : "v") + std::to_string(v.index);
}

}  // namespace

PYBIND11_MODULE(_ladderplan, m) {
    m.doc() = "planarity and outerplanarity of generalized ladder graphs";

    // --- exceptions (derived registered after the base so they match first)
    auto base = py::register_exception<Error>(m, "Error");
    py::register_exception<IndexOutOfRangeError>(m, "IndexOutOfRangeError", base.ptr());
    py::register_exception<DuplicateEdgeError>(m, "DuplicateEdgeError", base.ptr());
    py::register_exception<EdgeNotInInstanceError>(m, "EdgeNotInInstanceError", base.ptr());
    py::register_exception<NotApplicableError>(m, "NotApplicableError", base.ptr());
    py::register_exception<NotPlanarError>(m, "NotPlanarError", base.ptr());
    py::register_exception<NotOuterplanarError>(m, "NotOuterplanarError", base.ptr());
    py::register_exception<IncompleteEmbeddingError>(m, "IncompleteEmbeddingError", base.ptr());
    py::register_exception<BudgetExceededError>(m, "BudgetExceededError", base.ptr());
    py::register_exception<TooManyEdgesError>(m, "TooManyEdgesError", base.ptr());
    py::register_exception<ParseError>(m, "ParseError", base.ptr());

    // --- enums
    py::enum_<Side>(m, "Side")
        .value("g1", Side::g1)
        .value("g2", Side::g2);

    py::enum_<Symmetry>(m, "Symmetry")
        .value("reverse_g1", Symmetry::reverse_g1)
        .value("reverse_g2", Symmetry::reverse_g2)
        .value("swap_sides", Symmetry::swap_sides);

    py::enum_<OuterplanarCondition>(m, "OuterplanarCondition")
        .value("anti_monotone", OuterplanarCondition::anti_monotone)
        .value("monotone", OuterplanarCondition::monotone);

    py::enum_<SubdivisionPattern>(m, "SubdivisionPattern")
        .value("k33", SubdivisionPattern::k33)
        .value("k32", SubdivisionPattern::k32)
        .value("k4", SubdivisionPattern::k4);

    py::enum_<EdgeClass>(m, "EdgeClass")
        .value("x", EdgeClass::x)
        .value("y", EdgeClass::y)
        .value("z", EdgeClass::z)
        .value("w", EdgeClass::w);

    // --- small value types
    py::class_<VertexRef>(m, "VertexRef")
        .def(py::init<Side, Index>(), py::arg("side"), py::arg("index"))
        .def_readwrite("side", &VertexRef::side)
        .def_readwrite("index", &VertexRef::index)
        .def_property_readonly("name", &vertex_name)
        .def(py::self == py::self)
        .def("__hash__",
             [](VertexRef v) {
                 return py::hash(py::make_tuple(v.side == Side::g1 ? 0 : 1, v.index));
             })
        .def("__repr__", [](VertexRef v) { return "VertexRef(" + vertex_name(v) + ")"; });

    py::class_<QuadrantFlags>(m, "QuadrantFlags")
        .def(py::init<>())
        .def_readwrite("up_down", &QuadrantFlags::up_down)
        .def_readwrite("up_up", &QuadrantFlags::up_up)
        .def_readwrite("down_up", &QuadrantFlags::down_up)
        .def_readwrite("down_down", &QuadrantFlags::down_down)
        .def(py::self == py::self)
        .def("__repr__", [](const QuadrantFlags& f) {
            auto b = [](bool v) { return v ? "True" : "False"; };
            return std::string("QuadrantFlags(up_down=") + b(f.up_down) +
                   ", up_up=" + b(f.up_up) + ", down_up=" + b(f.down_up) +
                   ", down_down=" + b(f.down_down) + ")";
        });

    py::class_<Point>(m, "Point")
        .def(py::init<Index, Index>(), py::arg("x"), py::arg("y"))
        .def_readwrite("x", &Point::x)
        .def_readwrite("y", &Point::y)
        .def(py::self == py::self)
        .def("__repr__", [](Point p) {
            return "Point(" + std::to_string(p.x) + ", " + std::to_string(p.y) + ")";
        });

    // --- the instance type (constructed only through the factory functions)
    py::class_<GeneralizedLadder>(m, "GeneralizedLadder")
        .def_property_readonly("m", &GeneralizedLadder::m)
        .def_property_readonly("n", &GeneralizedLadder::n)
        .def_property_readonly(
            "cross", [](const GeneralizedLadder& g) { return from_edges(g.cross()); })
        .def("contains", [](const GeneralizedLadder& g, PyEdge e) { return g.contains(to_edge(e)); },
             py::arg("edge"))
        .def(py::self == py::self)
        .def("__repr__", [](const GeneralizedLadder& g) {
            return "GeneralizedLadder(m=" + std::to_string(g.m()) +
                   ", n=" + std::to_string(g.n()) +
                   ", k=" + std::to_string(g.cross().size()) + ")";
        });

    m.def("make_ladder",
          [](Index m_, Index n_, const std::vector<PyEdge>& cross) {
              return make_ladder(m_, n_, to_edges(cross));
          },
          py::arg("m"), py::arg("n"), py::arg("cross"),
          "Canonical instance from dimensions and a cross-edge list.");
    m.def("from_functigraph", &from_functigraph, py::arg("f"),
          "The (n, n)-ladder with cross edges (i, f[i-1]).");
    m.def("random_instance", &random_instance, py::arg("seed"), py::arg("m"), py::arg("n"),
          py::arg("k"), "Seeded uniform instance with k distinct cross edges.");
    m.def("apply_symmetry", &apply_symmetry, py::arg("g"), py::arg("symmetry"));

    // --- quadrant queries
    m.def("quadrant_flags",
          [](const GeneralizedLadder& g, PyEdge e) {
              const QuadrantIndex idx = build_quadrant_index(g);
              return quadrant_flags(g, idx, to_edge(e));
          },
          py::arg("g"), py::arg("edge"),
          "Occupancy of the four quadrants around a cross edge of g.");
    m.def("quadrant_flags_naive",
          [](const GeneralizedLadder& g, PyEdge e) { return quadrant_flags_naive(g, to_edge(e)); },
          py::arg("g"), py::arg("edge"));

    // --- decisions
    py::class_<DecisionReport>(m, "DecisionReport")
        .def_readonly("verdict", &DecisionReport::verdict)
        .def_property_readonly("witness_edge",
                               [](const DecisionReport& r) -> std::optional<PyEdge> {
                                   if (!r.witness_edge) return std::nullopt;
                                   return from_edge(*r.witness_edge);
                               })
        .def_readonly("condition", &DecisionReport::condition)
        .def_property_readonly("anti_monotone_violator",
                               [](const DecisionReport& r) -> std::optional<PyEdge> {
                                   if (!r.anti_monotone_violator) return std::nullopt;
                                   return from_edge(*r.anti_monotone_violator);
                               })
        .def_property_readonly("monotone_violator",
                               [](const DecisionReport& r) -> std::optional<PyEdge> {
                                   if (!r.monotone_violator) return std::nullopt;
                                   return from_edge(*r.monotone_violator);
                               })
        .def_property_readonly("per_edge_flags",
                               [](const DecisionReport& r) {
                                   std::vector<std::pair<PyEdge, QuadrantFlags>> out;
                                   out.reserve(r.per_edge_flags.size());
                                   for (const auto& [e, f] : r.per_edge_flags) {
                                       out.emplace_back(from_edge(e), f);
                                   }
                                   return out;
                               })
        .def("__repr__", [](const DecisionReport& r) {
            return std::string("DecisionReport(verdict=") + (r.verdict ? "True" : "False") + ")";
        });

    m.def("is_planar", &is_planar, py::arg("g"));
    m.def("is_outerplanar", &is_outerplanar, py::arg("g"));
    m.def("planarity_report", &planarity_report, py::arg("g"), py::arg("with_flags") = false);
    m.def("outerplanarity_report", &outerplanarity_report, py::arg("g"),
          py::arg("with_flags") = false);

    // --- witnesses
    py::class_<CertPath>(m, "CertPath")
        .def(py::init<>())
        .def_readwrite("from_", &CertPath::from)
        .def_readwrite("to", &CertPath::to)
        .def_readwrite("vertices", &CertPath::vertices)
        .def("__repr__", [](const CertPath& p) {
            return "CertPath(" + vertex_name(p.from) + " -> " + vertex_name(p.to) + ", " +
                   std::to_string(p.vertices.size()) + " vertices)";
        });

    py::class_<SubdivisionCertificate>(m, "SubdivisionCertificate")
        .def(py::init<>())
        .def_readwrite("pattern", &SubdivisionCertificate::pattern)
        .def_readwrite("part_x", &SubdivisionCertificate::part_x)
        .def_readwrite("part_y", &SubdivisionCertificate::part_y)
        .def_readwrite("paths", &SubdivisionCertificate::paths);

    m.def("extract_k33_witness", &extract_k33_witness, py::arg("g"));
    m.def("extract_outerplanar_witness", &extract_outerplanar_witness, py::arg("g"));
    m.def("verify_certificate", &verify_certificate, py::arg("g"), py::arg("certificate"));

    // --- embeddings
    py::class_<VertexPlacement>(m, "VertexPlacement")
        .def(py::init<>())
        .def_readwrite("v", &VertexPlacement::v)
        .def_readwrite("p", &VertexPlacement::p);

    py::class_<PolylineEdge>(m, "PolylineEdge")
        .def(py::init<>())
        .def_readwrite("from_", &PolylineEdge::from)
        .def_readwrite("to", &PolylineEdge::to)
        .def_readwrite("cls", &PolylineEdge::cls)
        .def_readwrite("points", &PolylineEdge::points);

    py::class_<Embedding>(m, "Embedding")
        .def(py::init<>())
        .def_readwrite("vertices", &Embedding::vertices)
        .def_readwrite("edges", &Embedding::edges);

    m.def("classify_edges",
          [](const GeneralizedLadder& g) {
              std::vector<std::pair<PyEdge, EdgeClass>> out;
              for (const auto& [e, cls] : classify_edges(g)) out.emplace_back(from_edge(e), cls);
              return out;
          },
          py::arg("g"), "Routing class of every cross edge, in canonical order.");
    m.def("planar_embedding", &planar_embedding, py::arg("g"));
    m.def("outerplanar_embedding", &outerplanar_embedding, py::arg("g"));
    m.def("verify_embedding", &verify_embedding, py::arg("g"), py::arg("embedding"));

    // --- oracles (take the ladder; the simple-graph plumbing stays internal)
    m.def("oracle_is_planar",
          [](const GeneralizedLadder& g, std::uint64_t budget) {
              return oracle_is_planar(to_simple_graph(g), budget);
          },
          py::arg("g"), py::arg("budget") = kDefaultOracleBudget,
          "Ground-truth planarity by rotation-system enumeration.");
    m.def("oracle_is_outerplanar",
          [](const GeneralizedLadder& g, std::uint64_t budget) {
              return oracle_is_outerplanar(to_simple_graph(g), budget);
          },
          py::arg("g"), py::arg("budget") = kDefaultOracleBudget,
          "Ground-truth outerplanarity by rotation-system enumeration.");

    // --- formats
    m.def("parse_instance", [](const std::string& text) { return parse_instance(text); },
          py::arg("text"));
    m.def("serialize_instance", &serialize_instance, py::arg("g"));
    m.def("embedding_to_json", &embedding_to_json, py::arg("embedding"));
    m.def("embedding_from_json",
          [](const std::string& text) { return embedding_from_json(text); }, py::arg("text"));
    m.def("embedding_to_svg", &embedding_to_svg, py::arg("g"), py::arg("embedding"));
    m.def("certificate_to_json", &certificate_to_json, py::arg("certificate"));
    m.def("certificate_from_json",
          [](const std::string& text) { return certificate_from_json(text); }, py::arg("text"));
    m.def("certificate_to_text", &certificate_to_text, py::arg("certificate"));

    m.attr("default_oracle_budget") = kDefaultOracleBudget;
    m.attr("exact_coordinate_limit") = kExactCoordinateLimit;
}
