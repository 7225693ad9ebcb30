#pragma once

#include <optional>
#include <vector>

#include "gns/gapset.hpp"

namespace gns {

// Convention: every invariant below takes a gap set whose complement is a
// semigroup (see closure_violation).  analyze() checks this once at the
// boundary; the individual functions assume it.

// corner c(S) = lub(H) + (1,...,1); the zero vector for genus 0
Point corner(const GapSet& gs);

// Frobenius element: c(S) - (1,...,1) when that point is a gap, i.e. when the
// gap set has a unique maximal element
std::optional<Point> frobenius(const GapSet& gs);

// PF(S) = { x in H : x + s in S for every nonzero s in S }
std::vector<Point> pseudo_frobenius(const GapSet& gs);

// EH(S) = { x in PF(S) : 2x in S }, the gaps whose unitary extension is again
// a semigroup
std::vector<Point> special_gaps(const GapSet& gs);

// gaps on the face h_i = c_i - 1, and their maximal elements
struct Slab {
    std::vector<Point> all;       // H(S)^(i)
    std::vector<Point> maximals;  // MH(S)^(i)
};
Slab slab(const GapSet& gs, int axis);  // axis in [0, d); genus > 0 required
std::vector<Slab> slabs(const GapSet& gs);

// CEH(S) = { x in EH(S) : corner(H \ {x}) = corner(H) }.  Computed by the
// slab criterion (x in EH drops the corner iff some slab is exactly {x}) and
// re-checked against the definition on every call; disagreement throws
// std::logic_error.
std::vector<Point> corner_special_gaps(const GapSet& gs);

bool is_irreducible(const GapSet& gs);  // |EH| == 1; throws std::domain_error on genus 0
bool is_atomic(const GapSet& gs);       // |CEH| <= 1; throws std::domain_error on genus 0
bool is_ani(const GapSet& gs);          // atomic and not irreducible

// Frobenius-split criterion: with F the Frobenius element, S is irreducible
// iff every split F = x + y in N_0^d with x != y has exactly one part in H.
// Agrees with is_irreducible whenever F exists; throws std::domain_error when
// it does not.
bool irreducible_via_frobenius_splits(const GapSet& gs);

// H \ {x} for x in EH(S); throws std::invalid_argument otherwise
GapSet unitary_extension(const GapSet& gs, const Point& x);

struct GnsProfile {
    int d = 0;
    int genus = 0;
    Point corner;
    std::optional<Point> frobenius;
    std::vector<Point> pf, eh, ceh;
    std::vector<Slab> slabs;  // empty for genus 0
    // classification flags are meaningless at genus 0 and left unset there
    std::optional<bool> irreducible, atomic, ani;
};

// one-stop invariant bundle; throws std::invalid_argument on closure failure
GnsProfile analyze(const GapSet& gs);

}  // namespace gns
