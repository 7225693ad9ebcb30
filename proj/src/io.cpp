#include "gns/io.hpp"

#include <algorithm>
#include <sstream>

namespace gns {

json point_json(const Point& p) {
    return json(p.coords());
}

json points_json(const std::vector<Point>& pts) {
    json arr = json::array();
    for (const Point& p : pts) arr.push_back(point_json(p));
    return arr;
}

json to_json(const GapSet& gs) {
    json doc;
    doc["d"] = gs.dim();
    doc["gaps"] = points_json(gs.gaps());
    return doc;
}

namespace {

int int_field(const json& v, const char* what) {
    if (!v.is_number_integer())
        throw std::invalid_argument(std::string(what) + " must be an integer");
    return v.get<int>();
}

Point point_from_json(const json& v, int d) {
    if (!v.is_array() || static_cast<int>(v.size()) != d)
        throw std::invalid_argument("each gap must be an array of " + std::to_string(d) + " coordinates");
    std::vector<int> coords;
    coords.reserve(v.size());
    for (const json& e : v) {
        const int c = int_field(e, "coordinate");
        if (c < 0) throw std::invalid_argument("coordinates must be non-negative");
        coords.push_back(c);
    }
    return Point(std::move(coords));
}

}  // namespace

GapSet gapset_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("d") || !doc.contains("gaps"))
        throw std::invalid_argument("gap set document needs \"d\" and \"gaps\"");
    const int d = int_field(doc["d"], "\"d\"");
    if (d < 1) throw std::invalid_argument("\"d\" must be positive");
    if (!doc["gaps"].is_array())
        throw std::invalid_argument("\"gaps\" must be an array");
    std::vector<Point> gaps;
    for (const json& g : doc["gaps"]) gaps.push_back(point_from_json(g, d));
    return GapSet(d, std::move(gaps));  // sorts; rejects zero and duplicates
}

GapSet gapset_from_json_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("JSON parse error: ") + e.what());
    }
    return gapset_from_json(doc);
}

json to_json(const GnsProfile& p) {
    json doc;
    doc["d"] = p.d;
    doc["genus"] = p.genus;
    doc["corner"] = point_json(p.corner);
    doc["frobenius"] = p.frobenius ? point_json(*p.frobenius) : json(nullptr);
    doc["pf"] = points_json(p.pf);
    doc["eh"] = points_json(p.eh);
    doc["ceh"] = points_json(p.ceh);
    json sl = json::array();
    for (std::size_t i = 0; i < p.slabs.size(); ++i) {
        json s;
        s["i"] = i + 1;
        s["h"] = points_json(p.slabs[i].all);
        s["mh"] = points_json(p.slabs[i].maximals);
        sl.push_back(std::move(s));
    }
    doc["slabs"] = std::move(sl);
    doc["irreducible"] = p.irreducible ? json(*p.irreducible) : json(nullptr);
    doc["atomic"] = p.atomic ? json(*p.atomic) : json(nullptr);
    doc["ani"] = p.ani ? json(*p.ani) : json(nullptr);
    return doc;
}

json to_json(const EnumTree& t) {
    json doc;
    doc["corner"] = point_json(t.query.corner);
    doc["forced"] = points_json(t.query.forced);
    doc["order"] = order_name(t.query.order);
    doc["dedup"] = t.query.dedup;
    doc["count"] = t.nodes.size();
    json nodes = json::array();
    for (std::size_t i = 0; i < t.nodes.size(); ++i) {
        const EnumNode& n = t.nodes[i];
        json e;
        e["id"] = i;
        e["parent"] = n.parent ? json(*n.parent) : json(nullptr);
        e["extension"] = n.extension ? point_json(*n.extension) : json(nullptr);
        e["gaps"] = points_json(n.gaps.gaps());
        nodes.push_back(std::move(e));
    }
    doc["nodes"] = std::move(nodes);
    return doc;
}

json to_json(const VerificationReport& r) {
    json doc;
    doc["id"] = r.id;
    doc["bound"] = point_json(r.bound);
    if (r.params) {
        doc["params"]["g1"] = point_json(r.params->first);
        doc["params"]["g2"] = point_json(r.params->second);
    }
    doc["checked"] = r.checked;
    doc["vacuous"] = r.vacuous;
    json cxs = json::array();
    for (const Counterexample& c : r.counterexamples) {
        json e;
        if (c.gaps) e["gaps"] = to_json(*c.gaps);
        if (c.g1) e["g1"] = point_json(*c.g1);
        if (c.g2) e["g2"] = point_json(*c.g2);
        e["note"] = c.note;
        cxs.push_back(std::move(e));
    }
    doc["counterexamples"] = std::move(cxs);
    doc["ms"] = r.ms;
    return doc;
}

json to_json(const AtomCoverReport& r) {
    json doc;
    doc["corner"] = point_json(r.corner);
    doc["family_size"] = r.family_size;
    doc["atom_count"] = r.atoms.size();
    json atoms = json::array();
    for (const AtomCoverEntry& e : r.atoms) {
        json a;
        a["gaps"] = points_json(e.gaps.gaps());
        a["witnesses"] = points_json(e.witnesses);
        atoms.push_back(std::move(a));
    }
    doc["atoms"] = std::move(atoms);
    doc["cover"] = points_json(r.cover);
    return doc;
}

json maximals_json(const FamilyQuery& q, const std::vector<GapSet>& maximals) {
    json doc;
    doc["corner"] = point_json(q.corner);
    doc["avoid"] = points_json(q.forced);
    doc["order"] = order_name(q.order);
    doc["count"] = maximals.size();
    json sets = json::array();
    for (const GapSet& gs : maximals) sets.push_back(points_json(gs.gaps()));
    doc["gap_sets"] = std::move(sets);
    return doc;
}

namespace {

std::string gap_list_label(const GapSet& gs) {
    std::string s = "{";
    for (std::size_t i = 0; i < gs.gaps().size(); ++i) {
        if (i) s += ',';
        s += gs.gaps()[i].str();
    }
    s += '}';
    return s;
}

}  // namespace

std::string to_dot(const EnumTree& t) {
    std::ostringstream os;
    os << "digraph family {\n";
    os << "  rankdir=LR;\n";
    os << "  node [shape=box fontname=\"monospace\"];\n";
    for (std::size_t i = 0; i < t.nodes.size(); ++i)
        os << "  n" << i << " [label=\"" << gap_list_label(t.nodes[i].gaps) << "\"];\n";
    for (std::size_t i = 0; i < t.nodes.size(); ++i) {
        const EnumNode& n = t.nodes[i];
        if (n.parent)
            os << "  n" << *n.parent << " -> n" << i
               << " [label=\"" << n.extension->str() << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

std::string to_svg(const GapSet& gs, const GnsProfile& p) {
    if (gs.dim() != 2)
        throw std::invalid_argument("lattice plots are only drawn for d = 2");
    const int cell = 32, margin = 40, r = 6;
    // show one row/column beyond the corner so the semigroup's tail is visible
    const int nx = (p.genus > 0 ? p.corner[0] : 1) + 1;
    const int ny = (p.genus > 0 ? p.corner[1] : 1) + 1;
    const int w = 2 * margin + nx * cell, h = 2 * margin + ny * cell;
    const auto X = [&](int x) { return margin + x * cell; };
    const auto Y = [&](int y) { return h - margin - y * cell; };

    const auto in_set = [](const std::vector<Point>& v, const Point& q) {
        return std::binary_search(v.begin(), v.end(), q);
    };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\">\n";
    os << "  <rect width=\"" << w << "\" height=\"" << h << "\" fill=\"white\"/>\n";
    os << "  <line x1=\"" << X(0) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(nx) << "\" y2=\"" << Y(0)
       << "\" stroke=\"black\"/>\n";
    os << "  <line x1=\"" << X(0) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(0) << "\" y2=\"" << Y(ny)
       << "\" stroke=\"black\"/>\n";
    if (p.genus > 0) {
        os << "  <line x1=\"" << X(p.corner[0]) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(p.corner[0])
           << "\" y2=\"" << Y(ny) << "\" stroke=\"gray\" stroke-dasharray=\"4 3\"/>\n";
        os << "  <line x1=\"" << X(0) << "\" y1=\"" << Y(p.corner[1]) << "\" x2=\"" << X(nx)
           << "\" y2=\"" << Y(p.corner[1]) << "\" stroke=\"gray\" stroke-dasharray=\"4 3\"/>\n";
    }
    for (int x = 0; x <= nx; ++x) {
        for (int y = 0; y <= ny; ++y) {
            const Point q{x, y};
            const bool gap = gs.contains(q);
            os << "  <circle cx=\"" << X(x) << "\" cy=\"" << Y(y) << "\" r=\"" << r
               << "\" fill=\"" << (gap ? "red" : "black") << "\"/>\n";
            if (in_set(p.eh, q))
                os << "  <circle cx=\"" << X(x) << "\" cy=\"" << Y(y) << "\" r=\"" << r + 4
                   << "\" fill=\"none\" stroke=\"" << (in_set(p.ceh, q) ? "blue" : "gray")
                   << "\" stroke-width=\"" << (in_set(p.ceh, q) ? 3 : 2) << "\"/>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

std::string dump(const json& j) {
    return j.dump(2) + "\n";
}

}  // namespace gns
