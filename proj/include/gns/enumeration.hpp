#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "gns/invariants.hpp"

namespace gns {

// Gap set of the ordinary semigroup O(c): every nonzero x <= c - 1.  c must be
// a corner of positive genus (all coordinates >= 1, at least one >= 2).
GapSet ordinary_gapset(const Point& c);

// The family F(c; h_1..h_n): semigroups with corner exactly c whose gap sets
// contain every forced point.  Enumerated as a tree rooted at O(c) whose edges
// fill in one corner special gap.
struct FamilyQuery {
    Point corner;
    std::vector<Point> forced;  // points that stay gaps in every member
    MonomialOrder order = MonomialOrder::lex;
    // true: a node adopts x only when x precedes every boxed semigroup
    // element, which makes each member appear exactly once; false: all
    // extensions are generated and repeats are dropped via a visited set
    bool dedup = true;
};

struct EnumNode {
    GapSet gaps;
    std::optional<std::size_t> parent;  // unset on the root
    std::optional<Point> extension;     // the gap that was filled in
};

struct EnumTree {
    FamilyQuery query;
    std::vector<EnumNode> nodes;  // breadth-first, root first, children in
                                  // ascending monomial order of the extension
};

EnumTree enumerate_family(const FamilyQuery& q);

// members whose corner special gaps all lie in the forced set: exactly the
// maximal elements of the family; canonically sorted
std::vector<GapSet> maximal_elements(const FamilyQuery& q);

// gap set of the smallest semigroup containing S and the given points
GapSet smallest_gns_containing(const GapSet& gs, const std::vector<Point>& adjoin);

// d = 1: the maximal numerical semigroups avoiding g1 and g2 coincide with
// the maximal elements of F(g2 + 1; g1); 0 < g1 < g2 required
std::vector<GapSet> maximal_d1_avoiding(int g1, int g2);

// Empirical probe: which single forced gaps h make each atom of F(c) maximal
// in F(c; h).  An atom with no corner special gap is maximal for every choice
// of h among its gaps; one with CEH = {x} needs h = x.
struct AtomCoverEntry {
    GapSet gaps;
    std::vector<Point> witnesses;  // all h with the atom maximal in F(c; h)
};
struct AtomCoverReport {
    Point corner;
    std::size_t family_size = 0;
    std::vector<AtomCoverEntry> atoms;
    std::vector<Point> cover;  // greedy hitting set: every atom is maximal in
                               // F(c; h) for some h in this list
};
AtomCoverReport atom_cover(const Point& corner);

}  // namespace gns
