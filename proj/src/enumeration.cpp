#include "gns/enumeration.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace gns {

namespace {

Point ones(int d) {
    return Point(std::vector<int>(static_cast<std::size_t>(d), 1));
}

FamilyQuery normalized(FamilyQuery q) {
    const Point& c = q.corner;
    bool widened = false;
    for (int i = 0; i < c.dim(); ++i) {
        if (c[i] < 1)
            throw std::invalid_argument("corner " + c.str() + " has a zero coordinate");
        if (c[i] > 1) widened = true;
    }
    if (!widened)
        throw std::invalid_argument("corner " + c.str() + " gives genus 0; no family to enumerate");
    const Point top = *subtract(c, ones(c.dim()));
    for (const Point& h : q.forced) {
        if (h.dim() != c.dim())
            throw std::invalid_argument("forced gap " + h.str() + " has wrong dimension");
        if (h.is_zero())
            throw std::invalid_argument("the zero vector cannot be a forced gap");
        if (!partial_leq(h, top))
            throw std::invalid_argument("forced gap " + h.str() + " lies outside the corner box " + c.str());
    }
    std::sort(q.forced.begin(), q.forced.end());
    q.forced.erase(std::unique(q.forced.begin(), q.forced.end()), q.forced.end());
    return q;
}

}  // namespace

GapSet ordinary_gapset(const Point& c) {
    for (int i = 0; i < c.dim(); ++i)
        if (c[i] < 1)
            throw std::invalid_argument("corner " + c.str() + " has a zero coordinate");
    const Point top = *subtract(c, ones(c.dim()));
    if (top.is_zero())
        throw std::invalid_argument("corner " + c.str() + " gives genus 0");
    std::vector<Point> gaps;
    for (const Point& x : box_points(top))
        if (!x.is_zero()) gaps.push_back(x);
    return GapSet(c.dim(), std::move(gaps));
}

EnumTree enumerate_family(const FamilyQuery& raw) {
    EnumTree tree;
    tree.query = normalized(raw);
    const FamilyQuery& q = tree.query;
    const Point top = *subtract(q.corner, ones(q.corner.dim()));
    const std::vector<Point> box = box_points(top);

    tree.nodes.push_back({ordinary_gapset(q.corner), std::nullopt, std::nullopt});
    std::set<GapSet> visited;
    if (!q.dedup) visited.insert(tree.nodes.front().gaps);

    for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
        const GapSet cur = tree.nodes[i].gaps;  // by value: nodes may reallocate
        std::vector<Point> cands;
        for (const Point& x : corner_special_gaps(cur))
            if (!std::binary_search(q.forced.begin(), q.forced.end(), x))
                cands.push_back(x);

        if (q.dedup) {
            // admit x only below every boxed element of the semigroup; the
            // threshold is the monomial-least such element
            const Point* least = nullptr;
            for (const Point& s : box) {
                if (s.is_zero() || cur.contains(s)) continue;
                if (!least || monomial_less(q.order, s, *least)) least = &s;
            }
            if (least) {
                std::erase_if(cands, [&](const Point& x) {
                    return !monomial_less(q.order, x, *least);
                });
            }
        }

        std::sort(cands.begin(), cands.end(), [&](const Point& a, const Point& b) {
            return monomial_less(q.order, a, b);
        });

        for (const Point& x : cands) {
            GapSet child = cur.without(x);
            if (!q.dedup && !visited.insert(child).second) continue;
            tree.nodes.push_back({std::move(child), i, x});
        }
    }
    return tree;
}

std::vector<GapSet> maximal_elements(const FamilyQuery& q) {
    const EnumTree tree = enumerate_family(q);
    const std::vector<Point>& forced = tree.query.forced;
    std::vector<GapSet> out;
    for (const EnumNode& n : tree.nodes) {
        const std::vector<Point> ceh = corner_special_gaps(n.gaps);
        const bool maximal = std::all_of(ceh.begin(), ceh.end(), [&](const Point& x) {
            return std::binary_search(forced.begin(), forced.end(), x);
        });
        if (maximal) out.push_back(n.gaps);
    }
    std::sort(out.begin(), out.end());
    return out;
}

GapSet smallest_gns_containing(const GapSet& gs, const std::vector<Point>& adjoin) {
    std::vector<Point> gaps = gs.gaps();
    for (const Point& p : adjoin) {
        if (p.dim() != gs.dim())
            throw std::invalid_argument("adjoined point " + p.str() + " has wrong dimension");
        std::erase(gaps, p);
    }
    const auto is_gap = [&gaps](const Point& p) {
        return std::binary_search(gaps.begin(), gaps.end(), p);
    };
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < gaps.size(); ++i) {
            const Point h = gaps[i];
            for (const Point& a : box_points(h)) {
                if (a.is_zero() || a == h || is_gap(a)) continue;
                if (!is_gap(*subtract(h, a))) {
                    gaps.erase(gaps.begin() + static_cast<std::ptrdiff_t>(i));
                    changed = true;
                    break;
                }
            }
            if (changed) break;
        }
    }
    return GapSet(gs.dim(), std::move(gaps));
}

std::vector<GapSet> maximal_d1_avoiding(int g1, int g2) {
    if (!(0 < g1 && g1 < g2))
        throw std::invalid_argument("need 0 < g1 < g2");
    // corner exactly g2 + 1 already forces the gap g2
    return maximal_elements({Point{g2 + 1}, {Point{g1}}, MonomialOrder::lex, true});
}

AtomCoverReport atom_cover(const Point& corner_point) {
    AtomCoverReport rep;
    rep.corner = corner_point;
    const EnumTree tree = enumerate_family({corner_point, {}, MonomialOrder::lex, true});
    rep.family_size = tree.nodes.size();

    for (const EnumNode& n : tree.nodes) {
        const std::vector<Point> ceh = corner_special_gaps(n.gaps);
        if (ceh.size() > 1) continue;  // not an atom
        AtomCoverEntry e{n.gaps, {}};
        e.witnesses = ceh.empty() ? n.gaps.gaps() : ceh;
        rep.atoms.push_back(std::move(e));
    }
    std::sort(rep.atoms.begin(), rep.atoms.end(),
              [](const AtomCoverEntry& a, const AtomCoverEntry& b) { return a.gaps < b.gaps; });

    // greedy hitting set over the witness lists
    std::vector<bool> covered(rep.atoms.size(), false);
    std::size_t left = rep.atoms.size();
    while (left > 0) {
        std::map<Point, std::size_t> count;
        for (std::size_t i = 0; i < rep.atoms.size(); ++i)
            if (!covered[i])
                for (const Point& h : rep.atoms[i].witnesses) ++count[h];
        const auto best = std::max_element(count.begin(), count.end(),
                                           [](const auto& a, const auto& b) { return a.second < b.second; });
        rep.cover.push_back(best->first);
        for (std::size_t i = 0; i < rep.atoms.size(); ++i) {
            if (covered[i]) continue;
            const auto& w = rep.atoms[i].witnesses;
            if (std::find(w.begin(), w.end(), best->first) != w.end()) {
                covered[i] = true;
                --left;
            }
        }
    }
    return rep;
}

}  // namespace gns
