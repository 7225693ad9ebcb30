#pragma once

// Reference implementations used to pin expected values in the tests.  These
// favor definition-level directness over speed and deliberately avoid the
// library's own shortcuts, so they only make sense at tiny scale.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "gns/enumeration.hpp"

namespace oracle {

using namespace gns;

inline Point ones(int d) {
    return Point(std::vector<int>(static_cast<std::size_t>(d), 1));
}

// closure sampled directly: sums of two boxed complement elements must stay
// in the complement (elements beyond the box cannot sum back into it)
inline bool closed_under_addition(const GapSet& gs) {
    if (gs.genus() == 0) return true;
    const Point top = lub(gs.gaps());
    std::vector<Point> elems;
    for (const Point& x : box_points(top))
        if (!x.is_zero() && !gs.contains(x)) elems.push_back(x);
    for (const Point& a : elems)
        for (const Point& b : elems)
            if (gs.contains(a + b)) return false;
    return true;
}

// PF scanned over a box twice the size the implementation uses; shows the
// tight bound loses nothing
inline std::vector<Point> pf_wide(const GapSet& gs) {
    std::vector<Point> out;
    if (gs.genus() == 0) return out;
    const Point wide = lub(gs.gaps()).scaled(2) + ones(gs.dim());
    for (const Point& x : gs.gaps()) {
        bool ok = true;
        for (const Point& s : box_points(wide)) {
            if (s.is_zero() || gs.contains(s)) continue;
            if (gs.contains(x + s)) { ok = false; break; }
        }
        if (ok) out.push_back(x);
    }
    return out;
}

// EH without pseudo-Frobenius machinery: x is special exactly when filling it
// in leaves a semigroup
inline std::vector<Point> eh_by_extension(const GapSet& gs) {
    std::vector<Point> out;
    for (const Point& x : gs.gaps())
        if (closed_under_addition(gs.without(x))) out.push_back(x);
    return out;
}

// corner special gaps: fill-ins that also preserve the corner
inline std::vector<Point> ceh_by_extension(const GapSet& gs) {
    std::vector<Point> out;
    for (const Point& x : gs.gaps()) {
        const GapSet ext = gs.without(x);
        if (closed_under_addition(ext) && corner(ext) == corner(gs)) out.push_back(x);
    }
    return out;
}

// every valid strict sub-gap-set, i.e. every semigroup properly containing S
inline std::vector<GapSet> proper_oversemigroups(const GapSet& gs) {
    std::vector<GapSet> out;
    const std::vector<Point>& g = gs.gaps();
    const std::uint32_t n = static_cast<std::uint32_t>(g.size());
    for (std::uint32_t mask = 0; mask + 1 < (1u << n); ++mask) {
        std::vector<Point> sub;
        for (std::uint32_t i = 0; i < n; ++i)
            if (mask & (1u << i)) sub.push_back(g[i]);
        GapSet cand(gs.dim(), std::move(sub));
        if (closed_under_addition(cand)) out.push_back(std::move(cand));
    }
    return out;
}

// irreducibility straight from the definition: no pair of proper
// oversemigroups intersects back to S (gap sets unite back to H)
inline bool irreducible_by_definition(const GapSet& gs) {
    const std::vector<GapSet> over = proper_oversemigroups(gs);
    for (std::size_t i = 0; i < over.size(); ++i)
        for (std::size_t j = i; j < over.size(); ++j) {
            std::vector<Point> uni = over[i].gaps();
            uni.insert(uni.end(), over[j].gaps().begin(), over[j].gaps().end());
            std::sort(uni.begin(), uni.end());
            uni.erase(std::unique(uni.begin(), uni.end()), uni.end());
            if (uni == gs.gaps()) return false;
        }
    return true;
}

// atom test straight from the definition, pairs restricted to the family F(c)
inline bool atom_by_definition_full(const GapSet& gs) {
    const Point c = corner(gs);
    std::vector<GapSet> over;
    for (GapSet& o : proper_oversemigroups(gs))
        if (corner(o) == c) over.push_back(std::move(o));
    for (std::size_t i = 0; i < over.size(); ++i)
        for (std::size_t j = i; j < over.size(); ++j) {
            std::vector<Point> uni = over[i].gaps();
            uni.insert(uni.end(), over[j].gaps().begin(), over[j].gaps().end());
            std::sort(uni.begin(), uni.end());
            uni.erase(std::unique(uni.begin(), uni.end()), uni.end());
            if (uni == gs.gaps()) return false;
        }
    return true;
}

// the family F(c; forced) as a plain subset sweep over the corner box
inline std::vector<GapSet> family_by_subsets(const Point& c, const std::vector<Point>& forced) {
    std::vector<Point> box;
    for (const Point& x : box_points(*subtract(c, ones(c.dim()))))
        if (!x.is_zero()) box.push_back(x);
    const std::uint32_t n = static_cast<std::uint32_t>(box.size());
    std::vector<GapSet> out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<Point> sub;
        for (std::uint32_t i = 0; i < n; ++i)
            if (mask & (1u << i)) sub.push_back(box[i]);
        GapSet cand(c.dim(), std::move(sub));
        const bool keeps_forced = std::all_of(forced.begin(), forced.end(),
                                              [&](const Point& h) { return cand.contains(h); });
        if (keeps_forced && closed_under_addition(cand) && corner(cand) == c)
            out.push_back(std::move(cand));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// inclusion-maximal members of a family given as gap sets
inline std::vector<GapSet> maximals_of(const std::vector<GapSet>& fam) {
    std::vector<GapSet> out;
    for (const GapSet& s : fam) {
        const bool beaten = std::any_of(fam.begin(), fam.end(), [&](const GapSet& t) {
            return t.genus() < s.genus() &&
                   std::includes(s.gaps().begin(), s.gaps().end(),
                                 t.gaps().begin(), t.gaps().end());
        });
        if (!beaten) out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// d = 1: the inclusion-maximal numerical semigroups with g1 and g2 as gaps.
// Any such semigroup has gaps inside {1..g2} once maximal, and comparisons
// against candidates with gaps inside that range certify maximality.
inline std::vector<GapSet> maximal_avoiding_d1(int g1, int g2) {
    std::vector<GapSet> all;
    const std::uint32_t n = static_cast<std::uint32_t>(g2);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<Point> sub;
        for (std::uint32_t i = 0; i < n; ++i)
            if (mask & (1u << i)) sub.push_back(Point{static_cast<int>(i) + 1});
        GapSet cand(1, std::move(sub));
        if (cand.contains(Point{g1}) && cand.contains(Point{g2}) && closed_under_addition(cand))
            all.push_back(std::move(cand));
    }
    return maximals_of(all);
}

}  // namespace oracle
