#pragma once

#include <json.hpp>

#include <string>

#include "gns/theorems.hpp"

namespace gns {

// insertion-ordered objects so documents read in schema order
using json = nlohmann::ordered_json;

json point_json(const Point& p);
json points_json(const std::vector<Point>& pts);

// {"d": 2, "gaps": [[0,1],[1,0]]} with gaps in canonical lex order
json to_json(const GapSet& gs);

// accepts gaps in any order; duplicates, the zero vector, malformed shapes
// and malformed JSON all raise std::invalid_argument
GapSet gapset_from_json(const json& doc);
GapSet gapset_from_json_text(const std::string& text);

json to_json(const GnsProfile& p);
json to_json(const EnumTree& t);
json to_json(const VerificationReport& r);  // includes "ms"
json to_json(const AtomCoverReport& r);

// stable document for a maximal-elements run (and for the stored fixtures)
json maximals_json(const FamilyQuery& q, const std::vector<GapSet>& maximals);

// plain digraph; node labels are canonical gap lists, edge labels extensions
std::string to_dot(const EnumTree& t);

// lattice diagram for d = 2: semigroup elements black, gaps red, special gaps
// circled (corner special gaps get the heavier ring), dashes at the corner
std::string to_svg(const GapSet& gs, const GnsProfile& p);

// 2-space indentation plus trailing newline
std::string dump(const json& j);

}  // namespace gns
