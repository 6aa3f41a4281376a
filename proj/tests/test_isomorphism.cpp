#include <catch2/catch_amalgamated.hpp>

#include "planefol/builtins.hpp"
#include "planefol/canonical.hpp"
#include "planefol/isomorphism.hpp"

#include "oracles.hpp"

using namespace planefol;

TEST_CASE("identity witness on equal graphs") {
    const auto w = is_isomorphic(reeb_graph(), reeb_graph());
    REQUIRE(w.has_value());
    CHECK(w->edge_map.at("eL") == "eL");
    CHECK(w->edge_map.at("eM") == "eM");
    CHECK(w->edge_map.at("eR") == "eR");
    CHECK(w->vertex_map.at("vL") == "vL");
    CHECK(verify_isomorphism(reeb_graph(), reeb_graph(), *w));
}

TEST_CASE("no isomorphism when edge counts differ") {
    CHECK_FALSE(is_isomorphic(reeb_graph(), trans_graph()).has_value());
}

TEST_CASE("mirror Reeb graph is isomorphic by the left-right swap") {
    const auto w = is_isomorphic(reeb_graph(), mirror_reeb_graph());
    REQUIRE(w.has_value());
    CHECK(w->edge_map.at("eL") == "eR");
    CHECK(w->edge_map.at("eR") == "eL");
    CHECK(w->vertex_map.at("vL") == "vR");
    CHECK(w->vertex_map.at("vR") == "vL");
    CHECK(verify_isomorphism(reeb_graph(), mirror_reeb_graph(), *w));
}

TEST_CASE("Reeb graph is isomorphic to its orientation reversal") {
    const auto w = is_isomorphic(reeb_graph(), reverse_orientation(reeb_graph()));
    REQUIRE(w.has_value());
    CHECK(w->vertex_map.at("vL") == "vR");
}

TEST_CASE("within-end order is never reversed") {
    // same tree; b differs from a only in the order of one pair list
    const LeafSpaceGraph a{{"p", "q", "r", "s"},
                           {{"e0", {}, {"p"}},
                            {"e1", {}, {"p", "q"}},
                            {"e2", {"q"}, {"r"}},
                            {"e3", {}, {"s", "r"}},
                            {"e4", {"s"}, {}}}};
    REQUIRE(validate(a).empty());
    // b: like a but with the first pair order swapped -> breaks order matching
    LeafSpaceGraph b = a;
    b.edges[1].end_b = {"q", "p"};
    REQUIRE(validate(b).empty());
    CHECK(is_isomorphic(a, a).has_value());
    const bool oracle_says = oracles::brute_force_isomorphic(a, b);
    CHECK(is_isomorphic(a, b).has_value() == oracle_says);
}

TEST_CASE("decide_equivalence on the fixtures") {
    SECTION("translation vs Reeb: not conjugate") {
        const auto r = decide_equivalence(trans_graph(), reeb_graph());
        CHECK(r.verdict == Verdict::NotConjugate);
        CHECK_FALSE(r.witness.has_value());
    }
    SECTION("Reeb vs mirror Reeb: conjugate up to inverse") {
        const auto r = decide_equivalence(reeb_graph(), mirror_reeb_graph());
        CHECK(r.verdict == Verdict::ConjugateUpToInverse);
        REQUIRE(r.witness.has_value());
    }
    SECTION("double Reeb vs chain5: equal region counts, not conjugate") {
        REQUIRE(region_count(double_reeb_graph()) == region_count(chain5_graph()));
        const auto r = decide_equivalence(double_reeb_graph(), chain5_graph());
        CHECK(r.verdict == Verdict::NotConjugate);
    }
    SECTION("conjugate pairs have equal region counts") {
        std::mt19937_64 rng(11);
        for (int i = 0; i < 40; ++i) {
            const LeafSpaceGraph g = oracles::random_valid_graph(rng, 7);
            const LeafSpaceGraph h = oracles::scramble(rng, g);
            const auto r = decide_equivalence(g, h);
            REQUIRE(r.verdict == Verdict::ConjugateUpToInverse);
            CHECK(region_count(g) == region_count(h));
        }
    }
}

TEST_CASE("returned witnesses map the graph exactly") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 60; ++i) {
        const LeafSpaceGraph g = oracles::random_valid_graph(rng, 7);
        const LeafSpaceGraph h = oracles::scramble(rng, g);
        const auto w = is_isomorphic(g, h);
        REQUIRE(w.has_value());
        CHECK(verify_isomorphism(g, h, *w));
    }
}

TEST_CASE("is_isomorphic throws on invalid input") {
    LeafSpaceGraph bad{{}, {}};
    CHECK_THROWS_AS(is_isomorphic(bad, trans_graph()), validation_error);
}
