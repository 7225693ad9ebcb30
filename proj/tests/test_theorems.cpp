#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "gns/theorems.hpp"

using namespace gns;

TEST_CASE("gap pairs and multiples") {
    CHECK_THROWS_AS(GapPair(Point{2, 2}, Point{2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(GapPair(Point{3, 3}, Point{2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(GapPair(Point{1, 2}, Point{2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(GapPair(Point{0, 0}, Point{1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(GapPair(Point{1}, Point{2, 2}), std::invalid_argument);

    CHECK(multiple_of(Point{3, 3}, Point{1, 1}) == 3);
    CHECK(multiple_of(Point{2, 4}, Point{1, 2}) == 2);
    CHECK_FALSE(multiple_of(Point{2, 3}, Point{1, 1}).has_value());
    CHECK_FALSE(multiple_of(Point{0, 0}, Point{1, 1}).has_value());
    CHECK_FALSE(multiple_of(Point{2, 0}, Point{0, 1}).has_value());
    CHECK_THROWS_AS(multiple_of(Point{1, 1}, Point{0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(multiple_of(Point{1, 1}, Point{1}), std::invalid_argument);
}

TEST_CASE("closed forms on known pairs") {
    CHECK(ani_sufficient({Point{2, 2}, Point{3, 3}}));
    CHECK_FALSE(ani_sufficient({Point{1, 1}, Point{3, 3}}));
    CHECK_FALSE(ani_sufficient({Point{1, 2}, Point{2, 4}}));  // 2 g1 = g2
    CHECK(ani_sufficient({Point{2}, Point{3}}));
    CHECK_FALSE(ani_sufficient({Point{1}, Point{3}}));

    CHECK(exists_eh_pair({Point{2, 2}, Point{3, 3}}));
    CHECK_FALSE(exists_eh_pair({Point{1, 1}, Point{3, 3}}));
    CHECK(exists_eh_pair({Point{2, 1}, Point{2, 2}}));
    CHECK(exists_eh_pair({Point{2}, Point{3}}));
    CHECK_FALSE(exists_eh_pair({Point{3}, Point{5}}));

    CHECK(all_maximals_irreducible_closed_form({Point{1, 1}, Point{3, 3}}) == true);
    CHECK(all_maximals_irreducible_closed_form({Point{2, 2}, Point{3, 3}}) == false);
    // 2 g1 and g2 incomparable: the closed form is undefined
    CHECK_FALSE(all_maximals_irreducible_closed_form({Point{1, 2}, Point{3, 3}}).has_value());

    // the total version agrees with evaluating the family, closed form or not
    for (const GapPair& g : {GapPair{Point{1, 2}, Point{3, 3}},
                             GapPair{Point{2, 1}, Point{3, 3}},
                             GapPair{Point{1, 2}, Point{2, 3}},
                             GapPair{Point{2, 1}, Point{2, 2}},
                             GapPair{Point{2, 2}, Point{3, 3}},
                             GapPair{Point{1, 1}, Point{3, 3}}}) {
        const Point c = g.g2 + Point{1, 1};
        bool truth = true;
        for (const GapSet& m : maximal_elements({c, {g.g1, g.g2}, MonomialOrder::lex, true}))
            if (!is_irreducible(m)) { truth = false; break; }
        CAPTURE(g.g1.str());
        CAPTURE(g.g2.str());
        CHECK(all_maximals_irreducible(g) == truth);
    }
}

TEST_CASE("extension candidates vanish exactly at maximal members") {
    const GapPair pair{Point{2, 2}, Point{3, 3}};
    CHECK(pair_extension_candidates(ordinary_gapset(Point{4, 4}), pair) ==
          std::vector<Point>{{2, 3}, {3, 2}});

    const std::vector<GapSet> maximals =
        maximal_elements({Point{4, 4}, {pair.g1, pair.g2}, MonomialOrder::lex, true});
    REQUIRE(maximals.size() == 14);
    for (const GapSet& m : maximals)
        CHECK(pair_extension_candidates(m, pair).empty());

    const GapSet no_g1(2, {{1, 0}, {1, 1}, {2, 0}, {2, 1}, {3, 0}, {3, 1}, {3, 2}, {3, 3}});
    CHECK_THROWS_AS(pair_extension_candidates(no_g1, pair), std::invalid_argument);
}

TEST_CASE("blocked gap maximals") {
    CHECK(blocked_gap_maximals(ordinary_gapset(Point{6}), Point{5}) ==
          std::vector<Point>{{4}});
    const GapSet fig(2, {{0, 1}, {1, 0}, {1, 1}, {1, 2}, {3, 0}});
    CHECK(blocked_gap_maximals(fig, Point{1, 1}) == std::vector<Point>{{1, 2}, {3, 0}});
    CHECK_THROWS_AS(blocked_gap_maximals(fig, Point{2, 2}), std::invalid_argument);
}

TEST_CASE("single-instance verification of the two-gap family") {
    const VerificationReport good = verify_teo_ani({Point{2, 2}, Point{3, 3}});
    CHECK(good.id == "teo-ani");
    CHECK(good.bound == Point{4, 4});
    REQUIRE(good.params.has_value());
    CHECK(good.params->first == Point{2, 2});
    CHECK(good.params->second == Point{3, 3});
    CHECK(good.checked == 14);
    CHECK(good.passed());

    const VerificationReport other = verify_teo_ani({Point{1, 1}, Point{3, 3}});
    CHECK(other.checked == 22);
    CHECK(other.passed());
}

TEST_CASE("the verification registry") {
    const auto& reg = verification_registry();
    CHECK(reg.size() == 25);
    std::set<std::string> ids;
    int refuted = 0;
    for (const RegistryEntry& e : reg) {
        CHECK(ids.insert(e.id).second);
        CHECK_FALSE(e.summary.empty());
        if (e.expects_counterexamples) ++refuted;
    }
    CHECK(refuted == 1);
    for (const char* id : {"atom-iff-ceh", "atom-iff-maximal", "eh-bound-atom",
                           "ceh-pigeonhole", "mh-subset-eh", "corner-lub-eh",
                           "frobenius-ceh-empty-irreducible", "irreducible-maximal-family",
                           "eh-pair-maximal", "extension-candidates-maximal", "pf-escape",
                           "frobenius-splits", "teo-ani", "d1-ceh",
                           "converse-irreducible-ceh-empty"})
        CHECK(ids.count(id) == 1);

    CHECK_THROWS_AS(verify_proposition("no-such-statement", Point{3, 3}),
                    std::invalid_argument);
    CHECK_THROWS_AS(verify_proposition("d1-ceh", Point{2, 2}), std::invalid_argument);
}

TEST_CASE("every registered statement holds at desk scale") {
    for (const RegistryEntry& e : verification_registry()) {
        const Point bound = e.id == "d1-ceh" ? Point{7} : Point{3, 3};
        const VerificationReport rep = verify_proposition(e.id, bound);
        CAPTURE(e.id);
        CHECK(rep.id == e.id);
        CHECK(rep.bound == bound);
        CHECK(rep.checked + rep.vacuous > 0);
        if (!e.expects_counterexamples) CHECK(rep.passed());

        // the one-dimensional sweeps, where every statement also holds
        if (e.id == "d1-ceh") continue;
        const VerificationReport line = verify_proposition(e.id, Point{6});
        CAPTURE(line.counterexamples.empty() ? "" : line.counterexamples.front().note);
        CHECK(line.passed());
    }
}

TEST_CASE("irreducibility does not force the corner special gaps away") {
    const VerificationReport rep =
        verify_proposition("converse-irreducible-ceh-empty", Point{4, 3});
    CHECK_FALSE(rep.passed());
    const GapSet witness(2, {{1, 0}, {1, 1}, {1, 2}, {3, 0}, {3, 1}, {3, 2}});
    bool seen = false;
    for (const Counterexample& c : rep.counterexamples) {
        REQUIRE(c.gaps.has_value());
        CHECK(is_irreducible(*c.gaps));
        CHECK_FALSE(corner_special_gaps(*c.gaps).empty());
        if (*c.gaps == witness) seen = true;
    }
    CHECK(seen);
}
