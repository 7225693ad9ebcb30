#include "gns/invariants.hpp"

#include <algorithm>
#include <stdexcept>

namespace gns {

namespace {

Point ones(int d) {
    return Point(std::vector<int>(static_cast<std::size_t>(d), 1));
}

void require_positive_genus(const GapSet& gs, const char* what) {
    if (gs.genus() == 0)
        throw std::domain_error(std::string(what) + " is undefined for the full semigroup N_0^d");
}

}  // namespace

Point corner(const GapSet& gs) {
    if (gs.genus() == 0) return zero_point(gs.dim());
    return lub(gs.gaps()) + ones(gs.dim());
}

std::optional<Point> frobenius(const GapSet& gs) {
    if (gs.genus() == 0) return std::nullopt;
    const Point top = lub(gs.gaps());
    if (gs.contains(top)) return top;
    return std::nullopt;
}

std::vector<Point> pseudo_frobenius(const GapSet& gs) {
    std::vector<Point> out;
    if (gs.genus() == 0) return out;
    const Point top = lub(gs.gaps());
    for (const Point& x : gs.gaps()) {
        // x + s can only land back in H when s <= lub - x; larger s push the
        // sum past the lub in some coordinate
        const Point bound = *subtract(top, x);
        bool ok = true;
        for (const Point& s : box_points(bound)) {
            if (s.is_zero() || gs.contains(s)) continue;
            if (gs.contains(x + s)) { ok = false; break; }
        }
        if (ok) out.push_back(x);
    }
    return out;
}

std::vector<Point> special_gaps(const GapSet& gs) {
    std::vector<Point> out;
    for (const Point& x : pseudo_frobenius(gs))
        if (!gs.contains(x.scaled(2))) out.push_back(x);
    return out;
}

Slab slab(const GapSet& gs, int axis) {
    require_positive_genus(gs, "slab");
    if (axis < 0 || axis >= gs.dim())
        throw std::invalid_argument("slab axis out of range");
    const Point top = lub(gs.gaps());
    Slab s;
    for (const Point& h : gs.gaps())
        if (h[axis] == top[axis]) s.all.push_back(h);
    s.maximals = maximal_points(s.all);
    return s;
}

std::vector<Slab> slabs(const GapSet& gs) {
    std::vector<Slab> out;
    out.reserve(static_cast<std::size_t>(gs.dim()));
    for (int i = 0; i < gs.dim(); ++i) out.push_back(slab(gs, i));
    return out;
}

std::vector<Point> corner_special_gaps(const GapSet& gs) {
    if (gs.genus() == 0) return {};
    const std::vector<Point> eh = special_gaps(gs);
    const std::vector<Slab> sl = slabs(gs);
    const Point c = corner(gs);

    // slab criterion: x in EH fails to preserve the corner iff it is the sole
    // gap on some face h_i = c_i - 1
    std::vector<Point> fast;
    for (const Point& x : eh) {
        bool sole = false;
        for (const Slab& s : sl)
            if (s.all.size() == 1 && s.all.front() == x) { sole = true; break; }
        if (!sole) fast.push_back(x);
    }

    // definitional recomputation, kept as a permanent cross-check
    std::vector<Point> direct;
    for (const Point& x : eh)
        if (corner(gs.without(x)) == c) direct.push_back(x);

    if (fast != direct)
        throw std::logic_error("slab criterion disagrees with corner recomputation for CEH");
    return fast;
}

bool is_irreducible(const GapSet& gs) {
    require_positive_genus(gs, "irreducibility");
    return special_gaps(gs).size() == 1;
}

bool is_atomic(const GapSet& gs) {
    require_positive_genus(gs, "atomicity");
    return corner_special_gaps(gs).size() <= 1;
}

bool is_ani(const GapSet& gs) {
    return is_atomic(gs) && !is_irreducible(gs);
}

bool irreducible_via_frobenius_splits(const GapSet& gs) {
    const std::optional<Point> f = frobenius(gs);
    if (!f)
        throw std::domain_error("Frobenius-split criterion needs a Frobenius element");
    for (const Point& x : box_points(*f)) {
        if (x + x == *f) continue;  // the half point pairs with itself
        const Point y = *subtract(*f, x);
        if (gs.contains(x) == gs.contains(y)) return false;
    }
    return true;
}

GapSet unitary_extension(const GapSet& gs, const Point& x) {
    const std::vector<Point> eh = special_gaps(gs);
    if (std::find(eh.begin(), eh.end(), x) == eh.end())
        throw std::invalid_argument(x.str() + " is not a special gap; the extension is not a semigroup");
    return gs.without(x);
}

GnsProfile analyze(const GapSet& gs) {
    if (auto v = closure_violation(gs))
        throw std::invalid_argument("not a gap set of a semigroup: " + v->str());
    GnsProfile p;
    p.d = gs.dim();
    p.genus = gs.genus();
    p.corner = corner(gs);
    p.frobenius = frobenius(gs);
    p.pf = pseudo_frobenius(gs);
    p.eh = special_gaps(gs);
    p.ceh = corner_special_gaps(gs);
    if (gs.genus() > 0) {
        p.slabs = slabs(gs);
        p.irreducible = p.eh.size() == 1;
        p.atomic = p.ceh.size() <= 1;
        p.ani = *p.atomic && !*p.irreducible;
    }
    return p;
}

}  // namespace gns
