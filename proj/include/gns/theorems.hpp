#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gns/enumeration.hpp"

namespace gns {

// an ordered pair of prospective gaps, g1 strictly below g2 in the natural
// partial order
struct GapPair {
    Point g1, g2;
    GapPair(Point a, Point b);
};

// the k >= 1 with y = k * x, if any; x must be nonzero
std::optional<int> multiple_of(const Point& y, const Point& x);

// closed-form side of the classification results for the maximal elements of
// F(g2 + 1; g1, g2):

// every maximal element is non-irreducible (and so the atoms among them are
// atomic non-irreducible)
bool ani_sufficient(const GapPair& g);

// some semigroup has special gaps exactly {g1, g2}
bool exists_eh_pair(const GapPair& g);

// every maximal element is irreducible.  The literal closed form needs
// "g2 a multiple of 2 g1 - g2", which is undefined when that difference
// leaves N_0^d; such instances return nullopt here
std::optional<bool> all_maximals_irreducible_closed_form(const GapPair& g);
// total version: falls back to evaluating the enumerated family when the
// closed form is inapplicable
bool all_maximals_irreducible(const GapPair& g);

// maximal gaps x with 2x in S and both g1 - x, g2 - x outside S: filling in
// such an x keeps the semigroup inside F(g2 + 1; g1, g2).  g1, g2 must be gaps.
std::vector<Point> pair_extension_candidates(const GapSet& gs, const GapPair& g);

// maximal gaps x with 2x != g and g - x outside S; g must be a gap
std::vector<Point> blocked_gap_maximals(const GapSet& gs, const Point& g);

struct Counterexample {
    std::optional<GapSet> gaps;
    std::optional<Point> g1, g2;
    std::string note;
};

struct VerificationReport {
    std::string id;
    Point bound;                                   // sweep bound / instance corner
    std::optional<std::pair<Point, Point>> params;  // set on single-instance runs
    long long checked = 0;   // instances whose hypothesis fired and were tested
    long long vacuous = 0;   // instances skipped (hypothesis false / closed form inapplicable)
    std::vector<Counterexample> counterexamples;
    double ms = 0.0;
    bool passed() const { return counterexamples.empty(); }
};

// single-instance check: the maximal elements of F(g2 + 1; g1, g2) are all
// non-irreducible iff ani_sufficient(g)
VerificationReport verify_teo_ani(const GapPair& g);

struct RegistryEntry {
    std::string id;
    std::string summary;
    bool expects_counterexamples = false;  // statement is a refuted converse
};

const std::vector<RegistryEntry>& verification_registry();

// exhaustive desk-scale sweep of one registered statement over all semigroups
// (or gap pairs) within the bound; unknown ids throw std::invalid_argument
VerificationReport verify_proposition(const std::string& id, const Point& bound);

}  // namespace gns
