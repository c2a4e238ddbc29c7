#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "eulergraph/branched.hpp"
#include "eulergraph/error.hpp"
#include "eulergraph/json_util.hpp"
#include "eulergraph/reports.hpp"
#include "eulergraph/triangulation.hpp"

namespace py = pybind11;

namespace {

using namespace eulergraph;

Triangulation parse(const std::string& text) { return parse_triangulation_text(text); }

HomologyClass class_from_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
    if (j.is_array()) {
        HomologyClass cls;
        for (const auto& v : j) cls.free_coords.push_back(int_from_json(v));
        return cls;
    }
    return homology_class_from_json(j);
}

}  // namespace

PYBIND11_MODULE(_eulergraph, m) {
    m.doc() = "Euler class pipelines for taut ideal triangulations (native core)";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

    m.def(
        "validate",
        [](const std::string& text) {
            Triangulation tri = parse(text);
            return dump_report(reports::validate_report(tri));
        },
        py::arg("text"),
        "Parse a triangulation and report class counts, link types, and validity flags as JSON.");

    m.def(
        "homology",
        [](const std::string& text, std::optional<int> k) {
            Triangulation tri = parse(text);
            return dump_report(reports::homology_report(tri, k));
        },
        py::arg("text"), py::arg("k") = std::nullopt,
        "Homology of the dual complex as JSON; one degree if k is given, else all.");

    m.def(
        "enumerate_orientations",
        [](const std::string& text, long long limit, bool count_only) {
            Triangulation tri = parse(text);
            return dump_report(reports::orient_enum_report(tri, limit, count_only));
        },
        py::arg("text"), py::arg("limit") = 0, py::arg("count_only") = false,
        "Enumerate acyclic edge-class orientations as JSON (limit 0 means unlimited).");

    m.def(
        "euler_dunfield",
        [](const std::string& text, const std::string& orient) {
            Triangulation tri = parse(text);
            EdgeOrientation o =
                EdgeOrientation::from_literal(orient, tri.edge_classes().size());
            return dump_report(reports::euler_dunfield_report(tri, o));
        },
        py::arg("text"), py::arg("orient"),
        "Euler cochain and class of an acyclic orientation on a closed triangulation, as JSON.");

    m.def(
        "taut_find",
        [](const std::string& text) {
            Triangulation tri = parse(text);
            return dump_report(reports::taut_find_report(tri));
        },
        py::arg("text"), "Enumerate taut structures of an ideal triangulation as JSON.");

    m.def(
        "taut_euler",
        [](const std::string& text, const std::string& taut) {
            Triangulation tri = parse(text);
            TautStructure ts = TautStructure::from_literal(taut, tri.tet_count());
            return dump_report(reports::taut_euler_report(tri, ts));
        },
        py::arg("text"), py::arg("taut"),
        "Flatten a taut structure and report the Lackenby chains, classes, and checks as JSON.");

    m.def(
        "maw_graph",
        [](const std::string& branched_json) {
            BranchedComplex bc = branched_from_json(branched_json);
            return dump_report(reports::maw_graph_report(bc));
        },
        py::arg("branched_json"),
        "Maw dual graph and cycle law report for a branched complex given as JSON.");

    m.def(
        "swap",
        [](long long k, const std::string& delta_json) {
            return dump_report(reports::swap_report(k, class_from_text(delta_json)));
        },
        py::arg("k"), py::arg("delta_json"),
        "Difference class (2-k) * delta after a swap along a disk meeting the graph k times.");

    m.def(
        "branched_roundtrip",
        [](const std::string& branched_json) {
            return branched_to_json(branched_from_json(branched_json));
        },
        py::arg("branched_json"),
        "Parse and re-serialize a branched complex, normalizing to the stable key order.");
}
