#include "gns/theorems.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace gns {

namespace {

Point ones(int d) {
    return Point(std::vector<int>(static_cast<std::size_t>(d), 1));
}

// ---------- sweep domains ----------

std::vector<Point> corners_up_to(const Point& bound) {
    std::vector<Point> out;
    for (const Point& c : box_points(bound)) {
        bool positive = true, widened = false;
        for (int i = 0; i < c.dim(); ++i) {
            if (c[i] < 1) { positive = false; break; }
            if (c[i] > 1) widened = true;
        }
        if (positive && widened) out.push_back(c);
    }
    return out;
}

std::vector<GapPair> pairs_up_to(const Point& bound) {
    std::vector<GapPair> out;
    const auto top = subtract(bound, ones(bound.dim()));
    if (!top) return out;
    for (const Point& g2 : box_points(*top)) {
        if (g2.is_zero()) continue;
        for (const Point& g1 : box_points(g2)) {
            if (g1.is_zero() || !partial_lt(g1, g2)) continue;
            out.emplace_back(g1, g2);
        }
    }
    return out;
}

std::vector<GapSet> corner_family(const Point& c) {
    std::vector<GapSet> out;
    for (const EnumNode& n : enumerate_family({c, {}, MonomialOrder::lex, true}).nodes)
        out.push_back(n.gaps);
    return out;
}

bool gaps_strict_subset(const GapSet& small, const GapSet& big) {
    return small.genus() < big.genus() &&
           std::includes(big.gaps().begin(), big.gaps().end(),
                         small.gaps().begin(), small.gaps().end());
}

// per member, the indices of members with strictly smaller gap sets, i.e. the
// members strictly containing it as semigroups
std::vector<std::vector<std::size_t>> strict_subset_lists(const std::vector<GapSet>& ms) {
    std::vector<std::vector<std::size_t>> out(ms.size());
    for (std::size_t i = 0; i < ms.size(); ++i)
        for (std::size_t j = 0; j < ms.size(); ++j)
            if (i != j && gaps_strict_subset(ms[j], ms[i])) out[i].push_back(j);
    return out;
}

struct PairFamily {
    Point c;
    std::vector<GapSet> members;
    std::vector<bool> maximal;  // inclusion-maximal within the family
};

PairFamily pair_family(const GapPair& g) {
    PairFamily pf;
    pf.c = g.g2 + ones(g.g2.dim());
    for (const EnumNode& n : enumerate_family({pf.c, {g.g1, g.g2}, MonomialOrder::lex, true}).nodes)
        pf.members.push_back(n.gaps);
    pf.maximal.assign(pf.members.size(), true);
    for (std::size_t i = 0; i < pf.members.size(); ++i)
        for (std::size_t j = 0; j < pf.members.size(); ++j)
            if (i != j && gaps_strict_subset(pf.members[j], pf.members[i])) {
                pf.maximal[i] = false;
                break;
            }
    return pf;
}

// ---------- definition-level oracles ----------

// S fails to be an atom of F(c) exactly when S = T1 n T2 for two strictly
// larger members, and that happens exactly when two distinct gaps can be
// filled in with the complement staying a semigroup with corner c: one-gap
// fills T_i = S u {h_i} intersect back to S, and conversely maximal points of
// T_i \ S give such fills with (T1 \ S) n (T2 \ S) empty
bool atom_by_definition(const GapSet& gs, const Point& c) {
    int fills = 0;
    for (const Point& h : gs.gaps()) {
        const GapSet ext = gs.without(h);
        if (is_valid_gap_set(ext) && corner(ext) == c && ++fills == 2) return false;
    }
    return true;
}

Counterexample cx(const GapSet& gs, std::string note) {
    return {gs, std::nullopt, std::nullopt, std::move(note)};
}

Counterexample cx(const GapPair& g, std::optional<GapSet> gs, std::string note) {
    return {std::move(gs), g.g1, g.g2, std::move(note)};
}

// ---------- corner sweeps ----------

void check_atom_iff_ceh(const Point& bound, VerificationReport& rep) {
    for (const Point& c : corners_up_to(bound))
        for (const GapSet& S : corner_family(c)) {
            const bool def = atom_by_definition(S, c);
            const bool via_ceh = corner_special_gaps(S).size() <= 1;
            ++rep.checked;
            if (def != via_ceh)
                rep.counterexamples.push_back(
                    cx(S, def ? "atom with more than one corner special gap"
                              : "at most one corner special gap yet not an atom"));
        }
}

void check_atom_iff_maximal(const Point& bound, VerificationReport& rep) {
    for (const Point& c : corners_up_to(bound)) {
        const std::vector<GapSet> fam = corner_family(c);
        const auto subs = strict_subset_lists(fam);
        for (std::size_t i = 0; i < fam.size(); ++i) {
            const bool atom = atom_by_definition(fam[i], c);
            // maximal in F(c; h) for some gap h: h avoided by every strictly
            // larger member
            std::set<Point> covered;
            for (std::size_t j : subs[i])
                covered.insert(fam[j].gaps().begin(), fam[j].gaps().end());
            const bool witness = std::any_of(
                fam[i].gaps().begin(), fam[i].gaps().end(),
                [&](const Point& h) { return !covered.count(h); });
            ++rep.checked;
            if (atom != witness)
                rep.counterexamples.push_back(
                    cx(fam[i], atom ? "atom maximal in no single-gap family"
                                    : "maximal in a single-gap family yet not an atom"));
        }
    }
}

void check_eh_bound_atom(const Point& bound, VerificationReport& rep) {
    for (const Point& c : corners_up_to(bound))
        for (const GapSet& S : corner_family(c)) {
            if (corner_special_gaps(S).size() > 1) { ++rep.vacuous; continue; }
            ++rep.checked;
            if (static_cast<int>(special_gaps(S).size()) > S.dim() + 1)
                rep.counterexamples.push_back(cx(S, "atom with more than d + 1 special gaps"));
        }
}

void check_ceh_pigeonhole(const Point& bound, VerificationReport& rep) {
    for (const Point& c : corners_up_to(bound))
        for (const GapSet& S : corner_family(c)) {
            const int eh = static_cast<int>(special_gaps(S).size());
            if (eh <= S.dim()) { ++rep.vacuous; continue; }
            ++rep.checked;
            if (static_cast<int>(corner_special_gaps(S).size()) < eh - S.dim())
                rep.counterexamples.push_back(cx(S, "fewer corner special gaps than |EH| - d"));
        }
}

void check_mh_subset_eh(const Point& bound, VerificationReport& rep) {
    for (const Point& c : corners_up_to(bound))
        for (const GapSet& S : corner_family(c)) {
            const std::vector<Point> eh = special_gaps(S);
            bool ok = true;
            for (const Slab& sl : slabs(S)) {
                if (sl.all.empty()) { ok = false; break; }
                for (const Point& m : sl.maximals)
                    if (!std::binary_search(eh.begin(), eh.end(), m)) { ok = false; break; }
                if (!ok) break;
            }
            ++rep.checked;
            if (!ok)
                rep.counterexamples.push_back(cx(S, "slab empty or slab maximal outside EH"));
        }
}

void check_corner_lub_eh(const Point& bound, VerificationReport& rep) {
    for (const Point& c : corners_up_to(bound))
        for (const GapSet& S : corner_family(c)) {
            const std::vector<Point> eh = special_gaps(S);
            std::vector<Point> from_slabs;
            for (const Slab& sl : slabs(S))
                from_slabs.insert(from_slabs.end(), sl.maximals.begin(), sl.maximals.end());
            ++rep.checked;
            if (eh.empty() || lub(eh) + ones(S.dim()) != c ||
                lub(from_slabs) + ones(S.dim()) != c)
                rep.counterexamples.push_back(cx(S, "corner not lub(EH) + 1"));
        }
}

void check_frobenius_ceh_empty_irreducible(const Point& bound, VerificationReport& rep) {
    for (const Point& c : corners_up_to(bound))
        for (const GapSet& S : corner_family(c)) {
            if (!frobenius(S) || !corner_special_gaps(S).empty()) { ++rep.vacuous; continue; }
            ++rep.checked;
            if (!is_irreducible(S))
                rep.counterexamples.push_back(cx(S, "Frobenius, CEH empty, yet not irreducible"));
        }
}

void check_converse_irreducible_ceh_empty(const Point& bound, VerificationReport& rep) {
    for (const Point& c : corners_up_to(bound))
        for (const GapSet& S : corner_family(c)) {
            if (special_gaps(S).size() != 1) { ++rep.vacuous; continue; }
            ++rep.checked;
            if (!corner_special_gaps(S).empty())
                rep.counterexamples.push_back(cx(S, "irreducible with a corner special gap"));
        }
}

void check_irreducible_maximal_family(const Point& bound, VerificationReport& rep) {
    for (const Point& c : corners_up_to(bound)) {
        const std::vector<GapSet> fam = corner_family(c);
        const auto subs = strict_subset_lists(fam);
        for (std::size_t i = 0; i < fam.size(); ++i) {
            const auto f = frobenius(fam[i]);
            if (!f) { ++rep.vacuous; continue; }
            const bool maximal = std::none_of(
                subs[i].begin(), subs[i].end(),
                [&](std::size_t j) { return fam[j].contains(*f); });
            const bool irr = special_gaps(fam[i]).size() == 1;
            ++rep.checked;
            if (irr != maximal)
                rep.counterexamples.push_back(
                    cx(fam[i], irr ? "irreducible but not maximal keeping its Frobenius gap"
                                   : "maximal keeping its Frobenius gap but reducible"));
        }
    }
}

void check_pf_escape(const Point& bound, VerificationReport& rep) {
    for (const Point& c : corners_up_to(bound))
        for (const GapSet& S : corner_family(c)) {
            const Point top = lub(S.gaps());
            const std::vector<Point> eh = special_gaps(S);
            bool ok = true;
            for (const Point& t : pseudo_frobenius(S)) {
                bool hit = false;
                for (int k = 1; partial_leq(t.scaled(k), top); ++k)
                    if (std::binary_search(eh.begin(), eh.end(), t.scaled(k))) { hit = true; break; }
                if (!hit) { ok = false; break; }
            }
            ++rep.checked;
            if (!ok)
                rep.counterexamples.push_back(cx(S, "pseudo-Frobenius element with no multiple in EH"));
        }
}

void check_eh_reaches_gaps(const Point& bound, VerificationReport& rep) {
    for (const Point& c : corners_up_to(bound))
        for (const GapSet& S : corner_family(c)) {
            const std::vector<Point> pf = pseudo_frobenius(S);
            const std::vector<Point> eh = special_gaps(S);
            bool fired = false, ok = true;
            for (const Point& h : S.gaps()) {
                if (std::binary_search(pf.begin(), pf.end(), h)) continue;
                fired = true;
                const bool reach = std::any_of(eh.begin(), eh.end(), [&](const Point& x) {
                    const auto diff = subtract(x, h);
                    return diff && !S.contains(*diff);
                });
                if (!reach) { ok = false; break; }
            }
            if (!fired) { ++rep.vacuous; continue; }
            ++rep.checked;
            if (!ok)
                rep.counterexamples.push_back(cx(S, "gap outside PF unreachable from EH"));
        }
}

void check_frobenius_splits(const Point& bound, VerificationReport& rep) {
    for (const Point& c : corners_up_to(bound))
        for (const GapSet& S : corner_family(c)) {
            if (!frobenius(S)) { ++rep.vacuous; continue; }
            ++rep.checked;
            if (irreducible_via_frobenius_splits(S) != (special_gaps(S).size() == 1))
                rep.counterexamples.push_back(cx(S, "split criterion disagrees with |EH| = 1"));
        }
}

// members whose special gaps form a comparable pair g1 < g2
template <typename Fn>
void sweep_eh_pairs(const Point& bound, VerificationReport& rep, Fn&& fn) {
    for (const Point& c : corners_up_to(bound))
        for (const GapSet& S : corner_family(c)) {
            const std::vector<Point> eh = special_gaps(S);
            if (eh.size() != 2 || !(partial_lt(eh[0], eh[1]) || partial_lt(eh[1], eh[0]))) {
                ++rep.vacuous;
                continue;
            }
            const bool fwd = partial_lt(eh[0], eh[1]);
            const Point& g1 = fwd ? eh[0] : eh[1];
            const Point& g2 = fwd ? eh[1] : eh[0];
            ++rep.checked;
            fn(S, g1, g2);
        }
}

void check_eh_pair_doubling(const Point& bound, VerificationReport& rep) {
    sweep_eh_pairs(bound, rep, [&](const GapSet& S, const Point& g1, const Point& g2) {
        if (!partial_lt(g2, g1.scaled(2)))
            rep.counterexamples.push_back(cx(S, "EH pair with g2 not strictly below 2 g1"));
    });
}

void check_eh_pair_difference(const Point& bound, VerificationReport& rep) {
    sweep_eh_pairs(bound, rep, [&](const GapSet& S, const Point& g1, const Point& g2) {
        const bool first = multiple_of(g2, *subtract(g2, g1)).has_value();
        const auto diff = subtract(g1.scaled(2), g2);
        const bool second = diff && !S.contains(*diff);
        if (!first && !second)
            rep.counterexamples.push_back(
                cx(S, "EH pair with g2 not a multiple of g2 - g1 and 2 g1 - g2 not in S"));
    });
}

void check_eh_pair_blocked_singleton(const Point& bound, VerificationReport& rep) {
    sweep_eh_pairs(bound, rep, [&](const GapSet& S, const Point& g1, const Point& g2) {
        if (blocked_gap_maximals(S, g2) != std::vector<Point>{g1})
            rep.counterexamples.push_back(cx(S, "blocked-gap maximals of g2 differ from {g1}"));
    });
}

void check_blocked_gap_doubling(const Point& bound, VerificationReport& rep) {
    for (const Point& c : corners_up_to(bound))
        for (const GapSet& S : corner_family(c)) {
            bool ok = true;
            for (const Point& g : S.gaps()) {
                for (const Point& h : blocked_gap_maximals(S, g)) {
                    const Point twice = h.scaled(2);
                    if (twice == g || partial_lt(twice, g)) { ok = false; break; }
                }
                if (!ok) break;
            }
            ++rep.checked;
            if (!ok)
                rep.counterexamples.push_back(cx(S, "blocked-gap maximal h with 2h <= g"));
        }
}

void check_unique_maximal_frobenius(const Point& bound, VerificationReport& rep) {
    for (const Point& c : corners_up_to(bound))
        for (const GapSet& S : corner_family(c)) {
            const std::vector<Point> mx = maximal_points(S.gaps());
            const auto f = frobenius(S);
            ++rep.checked;
            const bool ok = (mx.size() == 1) == f.has_value() && (!f || mx.front() == *f);
            if (!ok)
                rep.counterexamples.push_back(cx(S, "unique maximal gap and Frobenius element disagree"));
        }
}

void check_ani_eh_size(const Point& bound, VerificationReport& rep) {
    for (const Point& c : corners_up_to(bound))
        for (const GapSet& S : corner_family(c)) {
            if (!frobenius(S) || !is_atomic(S) || is_irreducible(S)) { ++rep.vacuous; continue; }
            ++rep.checked;
            if (special_gaps(S).size() != 2)
                rep.counterexamples.push_back(cx(S, "Frobenius atomic non-irreducible without exactly two special gaps"));
        }
}

void check_d1_ceh(const Point& bound, VerificationReport& rep) {
    if (bound.dim() != 1)
        throw std::invalid_argument("d1-ceh needs a one-dimensional bound");
    for (const Point& c : corners_up_to(bound))
        for (const GapSet& S : corner_family(c)) {
            const auto f = frobenius(S);
            std::vector<Point> expect = special_gaps(S);
            if (f) std::erase(expect, *f);
            ++rep.checked;
            if (corner_special_gaps(S) != expect)
                rep.counterexamples.push_back(cx(S, "CEH differs from EH minus the Frobenius number"));
        }
}

// ---------- pair sweeps ----------

void check_eh_pair_maximal(const Point& bound, VerificationReport& rep) {
    for (const GapPair& g : pairs_up_to(bound)) {
        const PairFamily pf = pair_family(g);
        for (std::size_t i = 0; i < pf.members.size(); ++i) {
            const std::vector<Point> eh = special_gaps(pf.members[i]);
            const bool inside = std::all_of(eh.begin(), eh.end(), [&](const Point& x) {
                return x == g.g1 || x == g.g2;
            });
            ++rep.checked;
            if (inside != pf.maximal[i])
                rep.counterexamples.push_back(
                    cx(g, pf.members[i], "EH inside {g1, g2} disagrees with maximality"));
        }
    }
}

void check_extension_candidates_maximal(const Point& bound, VerificationReport& rep) {
    for (const GapPair& g : pairs_up_to(bound)) {
        const PairFamily pf = pair_family(g);
        for (std::size_t i = 0; i < pf.members.size(); ++i) {
            const GapSet& S = pf.members[i];
            const std::vector<Point> cand = pair_extension_candidates(S, g);
            ++rep.checked;
            if (cand.empty() != pf.maximal[i]) {
                rep.counterexamples.push_back(
                    cx(g, S, "extension candidates empty disagrees with maximality"));
                continue;
            }
            const std::vector<Point> eh = special_gaps(S);
            for (const Point& x : cand) {
                const GapSet ext = S.without(x);
                const bool stays = std::binary_search(eh.begin(), eh.end(), x) &&
                                   is_valid_gap_set(ext) && corner(ext) == pf.c &&
                                   ext.contains(g.g1) && ext.contains(g.g2);
                if (!stays) {
                    rep.counterexamples.push_back(
                        cx(g, S, "extension candidate " + x.str() + " leaves the family"));
                    break;
                }
            }
        }
    }
}

void check_exists_eh_pair(const Point& bound, VerificationReport& rep) {
    for (const GapPair& g : pairs_up_to(bound)) {
        const PairFamily pf = pair_family(g);
        const std::vector<Point> want{g.g1, g.g2};  // canonical: g1 < g2 lex too
        const bool found = std::any_of(pf.members.begin(), pf.members.end(),
                                       [&](const GapSet& S) { return special_gaps(S) == want; });
        ++rep.checked;
        if (found != exists_eh_pair(g))
            rep.counterexamples.push_back(
                cx(g, std::nullopt,
                   found ? "witness exists but the closed form denies it"
                         : "closed form affirms but no witness exists"));
    }
}

void check_teo_ani(const Point& bound, VerificationReport& rep) {
    for (const GapPair& g : pairs_up_to(bound)) {
        const PairFamily pf = pair_family(g);
        bool all_nonirr = true;
        for (std::size_t i = 0; i < pf.members.size(); ++i)
            if (pf.maximal[i] && is_irreducible(pf.members[i])) { all_nonirr = false; break; }
        ++rep.checked;
        if (all_nonirr != ani_sufficient(g))
            rep.counterexamples.push_back(
                cx(g, std::nullopt, "all-maximals-non-irreducible disagrees with the closed form"));
    }
}

void check_all_maximals_irreducible(const Point& bound, VerificationReport& rep) {
    for (const GapPair& g : pairs_up_to(bound)) {
        const PairFamily pf = pair_family(g);
        bool truth = true;
        for (std::size_t i = 0; i < pf.members.size(); ++i)
            if (pf.maximal[i] && !is_irreducible(pf.members[i])) { truth = false; break; }
        const auto cf = all_maximals_irreducible_closed_form(g);
        if (cf) {
            ++rep.checked;
            if (*cf != truth)
                rep.counterexamples.push_back(
                    cx(g, std::nullopt, "closed form disagrees with the enumerated family"));
        } else {
            ++rep.vacuous;  // closed form inapplicable; the total fallback must still agree
            if (all_maximals_irreducible(g) != truth)
                rep.counterexamples.push_back(
                    cx(g, std::nullopt, "fallback evaluation disagrees with the enumerated family"));
        }
    }
}

void check_eh_pair_characterization(const Point& bound, VerificationReport& rep) {
    for (const GapPair& g : pairs_up_to(bound)) {
        if (!partial_lt(g.g2, g.g1.scaled(2))) { ++rep.vacuous; continue; }
        const PairFamily pf = pair_family(g);
        const Point diff = *subtract(g.g2, g.g1);
        const std::vector<Point> want{g.g1, g.g2};
        for (std::size_t i = 0; i < pf.members.size(); ++i) {
            const GapSet& S = pf.members[i];
            const bool lhs = special_gaps(S) == want;
            const bool rhs = pf.maximal[i] && S.contains(diff);
            ++rep.checked;
            if (lhs != rhs)
                rep.counterexamples.push_back(
                    cx(g, S, "EH = {g1, g2} disagrees with maximal plus g2 - g1 a gap"));
        }
    }
}

struct CheckEntry {
    RegistryEntry meta;
    std::function<void(const Point&, VerificationReport&)> run;
};

const std::vector<CheckEntry>& check_table() {
    static const std::vector<CheckEntry> table = {
        {{"atom-iff-ceh", "a family member is an atom exactly when it has at most one corner special gap", false}, check_atom_iff_ceh},
        {{"atom-iff-maximal", "a member is an atom exactly when it is maximal in F(c; h) for some gap h", false}, check_atom_iff_maximal},
        {{"eh-bound-atom", "an atom has at most d + 1 special gaps", false}, check_eh_bound_atom},
        {{"ceh-pigeonhole", "|EH| >= d + k forces at least k corner special gaps", false}, check_ceh_pigeonhole},
        {{"mh-subset-eh", "every slab is nonempty and its maximal gaps are special gaps", false}, check_mh_subset_eh},
        {{"corner-lub-eh", "the corner equals lub(EH) + 1, realized already by slab maximals", false}, check_corner_lub_eh},
        {{"frobenius-ceh-empty-irreducible", "Frobenius semigroups without corner special gaps are irreducible", false}, check_frobenius_ceh_empty_irreducible},
        {{"converse-irreducible-ceh-empty", "(refuted converse) irreducibility forces CEH empty", true}, check_converse_irreducible_ceh_empty},
        {{"irreducible-maximal-family", "a Frobenius semigroup is irreducible exactly when maximal among members keeping its Frobenius gap", false}, check_irreducible_maximal_family},
        {{"pf-escape", "every pseudo-Frobenius element has a positive multiple among the special gaps", false}, check_pf_escape},
        {{"eh-reaches-gaps", "every gap outside PF differs from some special gap by a semigroup element", false}, check_eh_reaches_gaps},
        {{"frobenius-splits", "the Frobenius split criterion agrees with |EH| = 1", false}, check_frobenius_splits},
        {{"eh-pair-doubling", "EH = {g1 < g2} forces g2 strictly below 2 g1", false}, check_eh_pair_doubling},
        {{"eh-pair-difference", "EH = {g1 < g2} forces g2 a multiple of g2 - g1 or 2 g1 - g2 in S", false}, check_eh_pair_difference},
        {{"eh-pair-blocked-singleton", "EH = {g1 < g2} forces the blocked-gap maximals of g2 to be {g1}", false}, check_eh_pair_blocked_singleton},
        {{"blocked-gap-doubling", "no blocked-gap maximal h of a gap g has 2h <= g", false}, check_blocked_gap_doubling},
        {{"unique-maximal-frobenius", "the gap set has a unique maximal element exactly when a Frobenius element exists", false}, check_unique_maximal_frobenius},
        {{"ani-eh-size", "Frobenius atomic non-irreducible semigroups have exactly two special gaps", false}, check_ani_eh_size},
        {{"d1-ceh", "in dimension 1, CEH = EH minus the Frobenius number", false}, check_d1_ceh},
        {{"eh-pair-maximal", "maximality in F(g2+1; g1, g2) is EH contained in {g1, g2}", false}, check_eh_pair_maximal},
        {{"extension-candidates-maximal", "pair extension candidates stay in the family and vanish exactly at maximal members", false}, check_extension_candidates_maximal},
        {{"exists-eh-pair", "the closed form decides whether some semigroup has EH exactly {g1, g2}", false}, check_exists_eh_pair},
        {{"teo-ani", "all maximal members of the two-gap family are non-irreducible iff the closed form holds", false}, check_teo_ani},
        {{"all-maximals-irreducible", "all maximal members of the two-gap family are irreducible iff the closed form holds (where defined)", false}, check_all_maximals_irreducible},
        {{"eh-pair-characterization", "for g2 < 2 g1, EH = {g1, g2} is maximality plus g2 - g1 staying a gap", false}, check_eh_pair_characterization},
    };
    return table;
}

}  // namespace

GapPair::GapPair(Point a, Point b) : g1(std::move(a)), g2(std::move(b)) {
    if (g1.dim() != g2.dim())
        throw std::invalid_argument("gap pair dimension mismatch");
    if (g1.is_zero() || g2.is_zero())
        throw std::invalid_argument("gap pair entries must be nonzero");
    if (!partial_lt(g1, g2))
        throw std::invalid_argument("need g1 strictly below g2 in the natural partial order");
}

std::optional<int> multiple_of(const Point& y, const Point& x) {
    if (x.dim() != y.dim())
        throw std::invalid_argument("dimension mismatch");
    if (x.is_zero())
        throw std::invalid_argument("multiples of the zero vector are not considered");
    int axis = 0;
    while (x[axis] == 0) ++axis;
    if (y[axis] % x[axis] != 0) return std::nullopt;
    const int k = y[axis] / x[axis];
    if (k < 1 || x.scaled(k) != y) return std::nullopt;
    return k;
}

bool ani_sufficient(const GapPair& g) {
    return multiple_of(g.g2, *subtract(g.g2, g.g1)).has_value() && g.g1.scaled(2) != g.g2;
}

bool exists_eh_pair(const GapPair& g) {
    const Point twice = g.g1.scaled(2);
    if (!partial_lt(g.g2, twice)) return false;
    // inside this branch 2 g1 - g2 is a nonzero point of N_0^d
    return multiple_of(g.g2, *subtract(g.g2, g.g1)).has_value() ||
           !multiple_of(g.g2, *subtract(twice, g.g2)).has_value();
}

std::optional<bool> all_maximals_irreducible_closed_form(const GapPair& g) {
    const Point twice = g.g1.scaled(2);
    if (partial_leq(twice, g.g2)) return true;
    const auto diff = subtract(twice, g.g2);
    if (!diff)  // 2 g1 and g2 incomparable: the multiplicity test is undefined
        return std::nullopt;
    return !multiple_of(g.g2, *subtract(g.g2, g.g1)).has_value() &&
           multiple_of(g.g2, *diff).has_value();
}

bool all_maximals_irreducible(const GapPair& g) {
    if (const auto cf = all_maximals_irreducible_closed_form(g)) return *cf;
    const Point c = g.g2 + ones(g.g2.dim());
    for (const GapSet& S : maximal_elements({c, {g.g1, g.g2}, MonomialOrder::lex, true}))
        if (!is_irreducible(S)) return false;
    return true;
}

std::vector<Point> pair_extension_candidates(const GapSet& gs, const GapPair& g) {
    if (!gs.contains(g.g1) || !gs.contains(g.g2))
        throw std::invalid_argument("g1 and g2 must both be gaps");
    const auto blocked = [&gs](const Point& gp, const Point& x) {
        const auto diff = subtract(gp, x);
        return !diff || gs.contains(*diff);  // gp - x outside S
    };
    std::vector<Point> cand;
    for (const Point& x : gs.gaps())
        if (!gs.contains(x.scaled(2)) && blocked(g.g1, x) && blocked(g.g2, x))
            cand.push_back(x);
    return maximal_points(cand);
}

std::vector<Point> blocked_gap_maximals(const GapSet& gs, const Point& g) {
    if (!gs.contains(g))
        throw std::invalid_argument("g must be a gap");
    std::vector<Point> cand;
    for (const Point& x : gs.gaps()) {
        if (x.scaled(2) == g) continue;
        const auto diff = subtract(g, x);
        if (!diff || gs.contains(*diff)) cand.push_back(x);
    }
    return maximal_points(cand);
}

VerificationReport verify_teo_ani(const GapPair& g) {
    const auto start = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.id = "teo-ani";
    rep.bound = g.g2 + ones(g.g2.dim());
    rep.params = std::make_pair(g.g1, g.g2);
    const bool closed = ani_sufficient(g);
    bool all_nonirr = true;
    for (const GapSet& S : maximal_elements({rep.bound, {g.g1, g.g2}, MonomialOrder::lex, true})) {
        ++rep.checked;
        if (is_irreducible(S)) {
            all_nonirr = false;
            if (closed)
                rep.counterexamples.push_back(
                    cx(g, S, "closed form promises non-irreducible; this maximal member is irreducible"));
        }
    }
    if (!closed && all_nonirr)
        rep.counterexamples.push_back(
            cx(g, std::nullopt, "closed form denies it, yet every maximal member is non-irreducible"));
    rep.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

const std::vector<RegistryEntry>& verification_registry() {
    static const std::vector<RegistryEntry> entries = [] {
        std::vector<RegistryEntry> out;
        for (const CheckEntry& e : check_table()) out.push_back(e.meta);
        return out;
    }();
    return entries;
}

VerificationReport verify_proposition(const std::string& id, const Point& bound) {
    for (const CheckEntry& e : check_table()) {
        if (e.meta.id != id) continue;
        const auto start = std::chrono::steady_clock::now();
        VerificationReport rep;
        rep.id = id;
        rep.bound = bound;
        e.run(bound, rep);
        rep.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        return rep;
    }
    throw std::invalid_argument("unknown proposition id: " + id);
}

}  // namespace gns
