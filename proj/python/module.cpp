#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "gns/enumeration.hpp"
#include "gns/io.hpp"
#include "gns/theorems.hpp"

// Thin binding layer: inputs are plain coordinate lists, structured results
// come back as the same JSON documents the command line emits (the Python
// package parses them), so every front end shares one serialization.

namespace py = pybind11;

namespace {

using namespace gns;

GapSet make_gapset(int d, const std::vector<std::vector<int>>& gaps) {
    std::vector<Point> pts;
    pts.reserve(gaps.size());
    for (const auto& g : gaps) pts.emplace_back(g);
    return GapSet(d, std::move(pts));
}

FamilyQuery make_query(const std::vector<int>& corner,
                       const std::vector<std::vector<int>>& avoid,
                       const std::string& order, bool dedup) {
    FamilyQuery q;
    q.corner = Point(corner);
    q.forced.reserve(avoid.size());
    for (const auto& h : avoid) q.forced.emplace_back(h);
    q.order = parse_order(order);
    q.dedup = dedup;
    return q;
}

std::vector<std::vector<int>> coords_of(const GapSet& gs) {
    std::vector<std::vector<int>> out;
    out.reserve(gs.gaps().size());
    for (const Point& p : gs.gaps()) out.push_back(p.coords());
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "gap-set computations for generalized numerical semigroups";

    m.def(
        "analyze_json",
        [](int d, const std::vector<std::vector<int>>& gaps) {
            return dump(to_json(analyze(make_gapset(d, gaps))));
        },
        py::arg("d"), py::arg("gaps"));

    m.def(
        "validate",
        [](int d, const std::vector<std::vector<int>>& gaps) -> std::optional<std::string> {
            const auto v = closure_violation(make_gapset(d, gaps));
            if (!v) return std::nullopt;
            return v->str();
        },
        py::arg("d"), py::arg("gaps"));

    m.def(
        "enumerate_json",
        [](const std::vector<int>& corner, const std::vector<std::vector<int>>& avoid,
           const std::string& order, bool dedup) {
            return dump(to_json(enumerate_family(make_query(corner, avoid, order, dedup))));
        },
        py::arg("corner"), py::arg("avoid"), py::arg("order"), py::arg("dedup"));

    m.def(
        "tree_dot",
        [](const std::vector<int>& corner, const std::vector<std::vector<int>>& avoid,
           const std::string& order, bool dedup) {
            return to_dot(enumerate_family(make_query(corner, avoid, order, dedup)));
        },
        py::arg("corner"), py::arg("avoid"), py::arg("order"), py::arg("dedup"));

    m.def(
        "maximals_json",
        [](const std::vector<int>& corner, const std::vector<std::vector<int>>& avoid,
           const std::string& order) {
            const FamilyQuery q = make_query(corner, avoid, order, true);
            return dump(maximals_json(q, maximal_elements(q)));
        },
        py::arg("corner"), py::arg("avoid"), py::arg("order"));

    m.def(
        "verify_json",
        [](const std::string& id, const std::vector<int>& bound) {
            return dump(to_json(verify_proposition(id, Point(bound))));
        },
        py::arg("id"), py::arg("bound"));

    m.def(
        "verify_pair_json",
        [](const std::vector<int>& g1, const std::vector<int>& g2) {
            return dump(to_json(verify_teo_ani({Point(g1), Point(g2)})));
        },
        py::arg("g1"), py::arg("g2"));

    m.def("registry", [] {
        std::vector<std::tuple<std::string, std::string, bool>> out;
        for (const RegistryEntry& e : verification_registry())
            out.emplace_back(e.id, e.summary, e.expects_counterexamples);
        return out;
    });

    m.def(
        "ordinary",
        [](const std::vector<int>& corner) { return coords_of(ordinary_gapset(Point(corner))); },
        py::arg("corner"));

    m.def(
        "smallest_containing",
        [](int d, const std::vector<std::vector<int>>& gaps,
           const std::vector<std::vector<int>>& adjoin) {
            std::vector<Point> pts;
            pts.reserve(adjoin.size());
            for (const auto& a : adjoin) pts.emplace_back(a);
            return coords_of(smallest_gns_containing(make_gapset(d, gaps), pts));
        },
        py::arg("d"), py::arg("gaps"), py::arg("adjoin"));

    m.def(
        "maximal_d1_avoiding",
        [](int g1, int g2) {
            std::vector<std::vector<std::vector<int>>> out;
            for (const GapSet& gs : maximal_d1_avoiding(g1, g2)) out.push_back(coords_of(gs));
            return out;
        },
        py::arg("g1"), py::arg("g2"));

    m.def(
        "atom_cover_json",
        [](const std::vector<int>& corner) {
            return dump(to_json(atom_cover(Point(corner))));
        },
        py::arg("corner"));
}
