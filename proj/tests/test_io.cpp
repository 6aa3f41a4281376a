#include <catch2/catch_amalgamated.hpp>

#include "planefol/builtins.hpp"
#include "planefol/json_io.hpp"

#include "oracles.hpp"

using namespace planefol;

TEST_CASE("leaf-space round trip") {
    SECTION("parse then serialize is the identity on canonical text") {
        const std::string text = serialize_leafspace(reeb_graph());
        CHECK(serialize_leafspace(parse_leafspace(text)) == text);
    }
    SECTION("serialize then parse is the identity on graphs") {
        std::mt19937_64 rng(404);
        for (int i = 0; i < 40; ++i) {
            const LeafSpaceGraph g = oracles::random_valid_graph(rng, 9);
            CHECK(parse_leafspace(serialize_leafspace(g)) == g);
        }
    }
    SECTION("the documented wire format parses") {
        const std::string text =
            R"({"vertices":["vL","vR"],"edges":[{"id":"eL","endA":[],"endB":["vL"]},)"
            R"({"id":"eM","endA":[],"endB":["vL","vR"]},{"id":"eR","endA":[],"endB":["vR"]}]})";
        CHECK(parse_leafspace(text) == reeb_graph());
    }
}

TEST_CASE("leaf-space parse rejections") {
    SECTION("vertex in both ends of one edge") {
        const std::string text =
            R"({"vertices":["v"],"edges":[{"id":"e0","endA":["v"],"endB":["v"]}]})";
        try {
            parse_leafspace(text);
            FAIL("expected validation_error");
        } catch (const validation_error& e) {
            REQUIRE_FALSE(e.violations.empty());
            CHECK(e.violations[0].code == ViolationCode::CYCLE);
        }
    }
    SECTION("empty edge list") {
        try {
            parse_leafspace(R"({"vertices":[],"edges":[]})");
            FAIL("expected validation_error");
        } catch (const validation_error& e) {
            CHECK(e.violations[0].code == ViolationCode::NONEMPTY);
        }
    }
    SECTION("unknown keys are rejected") {
        CHECK_THROWS_AS(parse_leafspace(R"({"vertices":[],"edges":[],"extra":1})"),
                        parse_error);
        CHECK_THROWS_AS(
            parse_leafspace(
                R"({"vertices":[],"edges":[{"id":"e0","endA":[],"endB":[],"note":"x"}]})"),
            parse_error);
    }
    SECTION("malformed syntax") {
        CHECK_THROWS_AS(parse_leafspace("{\"vertices\":"), parse_error);
    }
}

TEST_CASE("flow-spec round trip and rejections") {
    SECTION("documented wire format") {
        const std::string text =
            R"({"lines":[{"x":-1.0,"dir":1},{"x":1.0,"dir":-1}],)"
            R"("bands":["invariant",{"transition":{"sign":1}},"invariant"]})";
        const BandFlowSpec s = parse_flowspec(text);
        CHECK(s.lines.size() == 2);
        CHECK(s.bands[1].kind == Band::Kind::Transition);
        CHECK(serialize_flowspec(parse_flowspec(serialize_flowspec(s))) ==
              serialize_flowspec(s));
    }
    SECTION("non-ascending lines") {
        const std::string text =
            R"({"lines":[{"x":1.0,"dir":1},{"x":-1.0,"dir":1}],)"
            R"("bands":["invariant","invariant","invariant"]})";
        try {
            parse_flowspec(text);
            FAIL("expected flowspec_error");
        } catch (const flowspec_error& e) {
            CHECK(e.violations[0].code == FlowSpecErrorCode::ASCENDING);
        }
    }
    SECTION("invariant band between lines of different dir") {
        const std::string text =
            R"({"lines":[{"x":-1.0,"dir":1},{"x":1.0,"dir":-1}],)"
            R"("bands":["invariant","invariant","invariant"]})";
        try {
            parse_flowspec(text);
            FAIL("expected flowspec_error");
        } catch (const flowspec_error& e) {
            CHECK(e.violations[0].code == FlowSpecErrorCode::DIR_MISMATCH);
        }
    }
    SECTION("outer transition band") {
        const std::string text =
            R"({"lines":[{"x":0.0,"dir":1}],)"
            R"("bands":[{"transition":{"sign":1}},"invariant"]})";
        try {
            parse_flowspec(text);
            FAIL("expected flowspec_error");
        } catch (const flowspec_error& e) {
            CHECK(e.violations[0].code == FlowSpecErrorCode::OUTER_TRANSITION);
        }
    }
}

TEST_CASE("built-in flow names") {
    SECTION("reeb") {
        const auto f = builtin_flow("reeb");
        REQUIRE(f.has_value());
        REQUIRE(std::holds_alternative<BandFlowSpec>(*f));
        CHECK(std::get<BandFlowSpec>(*f).lines.size() == 2);
    }
    SECTION("translation") {
        const auto f = builtin_flow("translation:1,0");
        REQUIRE(f.has_value());
        REQUIRE(std::holds_alternative<TranslationFlow>(*f));
        CHECK(std::get<TranslationFlow>(*f)(2.0, {0.0, 0.0}) == Vec2{2.0, 0.0});
    }
    SECTION("unknown names fall through") {
        CHECK_FALSE(builtin_flow("lorenz").has_value());
    }
    SECTION("bad translation arguments") {
        CHECK_THROWS_AS(builtin_flow("translation:1"), parse_error);
        CHECK_THROWS_AS(builtin_flow("translation:a,b"), parse_error);
    }
}

TEST_CASE("plane-map expression trees") {
    SECTION("documented wire format") {
        const PlaneMap m = parse_planemap(R"({"compose":[{"antipodal":{}},{"translate":[1.0,2.0]}]})");
        // antipodal after translate: p -> -(p + (1,2))
        CHECK(m({0.0, 0.0}) == Vec2{-1.0, -2.0});
    }
    SECTION("round trip") {
        const PlaneMap m = PlaneMap::compose(
            {PlaneMap::reflection_y(), PlaneMap::inverse(PlaneMap::linear_diag(2.0, 4.0)),
             PlaneMap::general(0.0, -1.0, 1.0, 0.0), PlaneMap::translation(-1.0, 3.5)});
        const PlaneMap back = parse_planemap(serialize_planemap(m));
        CHECK(serialize_planemap(back) == serialize_planemap(m));
        for (double x : {-2.0, 0.0, 1.5})
            for (double y : {-1.0, 0.25})
                CHECK(distance(back({x, y}), m({x, y})) == 0.0);
    }
    SECTION("rejections") {
        CHECK_THROWS_AS(parse_planemap(R"({"translate":[1.0]})"), parse_error);
        CHECK_THROWS_AS(parse_planemap(R"({"warp":{}})"), parse_error);
        CHECK_THROWS_AS(parse_planemap(R"({"matrix":[[1,2],[2,4]]})"), error);
    }
}
