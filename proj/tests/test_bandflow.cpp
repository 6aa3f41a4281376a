#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "planefol/bandflow.hpp"
#include "planefol/builtins.hpp"
#include "planefol/flow.hpp"

#include "oracles.hpp"

using namespace planefol;

TEST_CASE("field values on the Reeb flow") {
    const auto spec = reeb_flow_spec();
    CHECK(field_at(spec, {-3.0, 7.0}) == Vec2{0.0, 1.0});
    CHECK(field_at(spec, {-1.0, 0.0}) == Vec2{0.0, 1.0});  // boundary continuity
    CHECK(field_at(spec, {0.0, 0.0}) == Vec2{1.0, 0.0});
    CHECK(field_at(spec, {2.0, 0.0}) == Vec2{0.0, -1.0});
}

TEST_CASE("field never vanishes") {
    for (const auto& spec : {reeb_flow_spec(), double_reeb_flow_spec(), chain5_flow_spec(),
                             equal_dir_flow_spec()}) {
        for (double x = -5.0; x <= 5.0; x += 0.125)
            for (double y : {-3.0, 0.0, 3.0})
                CHECK(norm(field_at(spec, {x, y})) > 1e-9);
    }
}

TEST_CASE("flow spec validation errors") {
    SECTION("lines out of order") {
        BandFlowSpec s{{{1.0, 1}, {-1.0, -1}},
                       {Band::invariant(), Band::transition(1), Band::invariant()}};
        REQUIRE_FALSE(validate_flow_spec(s).empty());
        CHECK(validate_flow_spec(s)[0].code == FlowSpecErrorCode::ASCENDING);
    }
    SECTION("outer transition") {
        BandFlowSpec s{{{0.0, 1}}, {Band::transition(1), Band::invariant()}};
        bool found = false;
        for (const auto& v : validate_flow_spec(s))
            if (v.code == FlowSpecErrorCode::OUTER_TRANSITION) found = true;
        CHECK(found);
    }
    SECTION("invariant band between lines of different dir") {
        BandFlowSpec s{{{-1.0, 1}, {1.0, -1}},
                       {Band::invariant(), Band::invariant(), Band::invariant()}};
        bool found = false;
        for (const auto& v : validate_flow_spec(s))
            if (v.code == FlowSpecErrorCode::DIR_MISMATCH) found = true;
        CHECK(found);
    }
    SECTION("band count") {
        BandFlowSpec s{{{0.0, 1}}, {Band::invariant()}};
        CHECK(validate_flow_spec(s)[0].code == FlowSpecErrorCode::BAND_COUNT);
    }
}

TEST_CASE("flow map is exact on invariant bands and lines") {
    const auto spec = reeb_flow_spec();
    CHECK(flow_map(spec, 2.5, {-3.0, 0.0}) == Vec2{-3.0, 2.5});
    CHECK(flow_map(spec, 1.0, {2.0, 0.0}) == Vec2{2.0, -1.0});
    CHECK(flow_map(spec, 4.0, {1.0, 1.0}) == Vec2{1.0, -3.0});  // on the line itself
}

TEST_CASE("time zero is the identity exactly") {
    const auto spec = reeb_flow_spec();
    for (const Vec2 p : {Vec2{-3.0, 2.0}, Vec2{0.3, -1.0}, Vec2{1.0, 0.0}})
        CHECK(flow_map(spec, 0.0, p) == p);
}

TEST_CASE("integrator matches the closed-form in-band solution") {
    std::mt19937_64 rng(555);
    std::uniform_real_distribution<double> ux(-0.95, 0.95), uy(-5.0, 5.0), ut(-6.0, 6.0);
    const auto spec = reeb_flow_spec();
    for (int i = 0; i < 200; ++i) {
        const Vec2 p{ux(rng), uy(rng)};
        const double t = ut(rng);
        const Vec2 numeric = flow_map(spec, t, p);
        const Vec2 exact = oracles::closed_form_flow(spec, t, p);
        CAPTURE(p.x, p.y, t);
        CHECK(distance(numeric, exact) < 1e-7);
    }
}

TEST_CASE("a frozen value of the transition motion") {
    // closed form from (0,0) at t=1: x = tanh(1), y = -1 + ln 2 - ln(1 + e^-2)
    const Vec2 q = flow_map(reeb_flow_spec(), 1.0, {0.0, 0.0});
    CHECK(q.x == Catch::Approx(0.76159415595576485).epsilon(1e-9));
    CHECK(q.y == Catch::Approx(-0.43378083048302719).epsilon(1e-9));
}

TEST_CASE("group law holds to tolerance") {
    std::mt19937_64 rng(556);
    std::uniform_real_distribution<double> us(-3.0, 3.0), ux(-5.0, 5.0);
    const auto spec = reeb_flow_spec();
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double s = us(rng), t = us(rng);
        const Vec2 p{ux(rng), ux(rng)};
        const Vec2 once = flow_map(spec, s + t, p);
        const Vec2 twice = flow_map(spec, s, flow_map(spec, t, p));
        worst = std::max(worst, distance(once, twice));
    }
    CHECK(worst < 1e-6);
}

TEST_CASE("time-one map displaces every grid point") {
    const auto spec = reeb_flow_spec();
    double min_disp = 1e9;
    for (int i = 0; i <= 40; ++i)
        for (int j = 0; j <= 40; ++j) {
            const Vec2 p{-5.0 + 0.25 * i, -5.0 + 0.25 * j};
            min_disp = std::min(min_disp, distance(time_one_map(spec, p), p));
        }
    CHECK(min_disp > 0.05);
}

TEST_CASE("sampled leaves") {
    const BandFlow flow(reeb_flow_spec());
    SECTION("invariant-band leaf is a vertical segment") {
        const LeafSample leaf = sample_leaf(flow, {-3.0, 0.0}, {-2.0, 2.0, 0.25});
        REQUIRE(leaf.points.size() == 17);
        CHECK(leaf.points.front() == Vec2{-3.0, -2.0});
        CHECK(leaf.points.back() == Vec2{-3.0, 2.0});
        for (const Vec2 p : leaf.points) CHECK(p.x == -3.0);
        for (std::size_t i = 1; i < leaf.times.size(); ++i)
            CHECK(leaf.times[i] > leaf.times[i - 1]);
    }
    SECTION("degenerate window yields a single point") {
        const LeafSample leaf = sample_leaf(flow, {0.0, 0.0}, {0.5, 0.5, 0.1});
        REQUIRE(leaf.points.size() == 1);
        CHECK(distance(leaf.points[0], flow(0.5, {0.0, 0.0})) == 0.0);
    }
    SECTION("transition leaves are vertical translates of each other") {
        const LeafSample a = sample_leaf(flow, {0.0, 0.0}, {-2.0, 2.0, 0.05});
        const LeafSample b = sample_leaf(flow, {0.0, 5.0}, {-2.0, 2.0, 0.05});
        REQUIRE(a.points.size() == b.points.size());
        for (std::size_t i = 0; i < a.points.size(); ++i) {
            CHECK(std::fabs(b.points[i].x - a.points[i].x) < 1e-7);
            CHECK(std::fabs(b.points[i].y - a.points[i].y - 5.0) < 1e-7);
        }
    }
}

TEST_CASE("leaves are pairwise disjoint or identical") {
    const BandFlow flow(reeb_flow_spec());
    const LeafWindow w{-2.0, 2.0, 0.05};
    std::vector<LeafSample> leaves;
    for (double x : {-2.0, -0.5, 0.0, 0.5, 2.0}) leaves.push_back(sample_leaf(flow, {x, 0.0}, w));
    for (std::size_t i = 0; i < leaves.size(); ++i)
        for (std::size_t j = i + 1; j < leaves.size(); ++j) {
            double min_dist = 1e18;
            for (const Vec2 p : leaves[i].points)
                for (const Vec2 q : leaves[j].points) min_dist = std::min(min_dist, distance(p, q));
            CHECK(min_dist > 1e-3);  // distinct leaves stay separated
        }
}

TEST_CASE("orbit separation") {
    const BandFlow reeb(reeb_flow_spec());
    const TranslationFlow trans(1.0, 0.0);
    CHECK(orbit_separation(trans, {4.0, -2.0}, 10) == Catch::Approx(1.0));
    CHECK(orbit_separation(reeb, {-3.0, 0.0}, 10) == Catch::Approx(1.0));
    CHECK(orbit_separation(reeb, {0.0, 0.0}, 20) > 0.05);
}

TEST_CASE("trivialization coordinates") {
    const BandFlow flow(reeb_flow_spec());
    SECTION("invariant band: x coordinate and flow time from y = 0") {
        const auto c = trivialization_coord(flow, {-3.0, 0.25});
        CHECK(c.leaf_param == -3.0);
        CHECK(c.phase == Catch::Approx(0.25));
    }
    SECTION("phase advances by one under the time-one map") {
        std::mt19937_64 rng(77);
        std::uniform_real_distribution<double> ux(-5.0, 5.0);
        for (int i = 0; i < 100; ++i) {
            const Vec2 p{ux(rng), ux(rng)};
            const auto before = trivialization_coord(flow, p);
            const auto after = trivialization_coord(flow, time_one_map(flow.spec(), p));
            CAPTURE(p.x, p.y);
            CHECK(circle_distance(before.phase, after.phase) < 1e-6);
            CHECK(std::fabs(before.leaf_param - after.leaf_param) < 1e-6);
        }
    }
    SECTION("leaf parameter is invariant along the flow") {
        std::mt19937_64 rng(78);
        std::uniform_real_distribution<double> ux(-5.0, 5.0), ut(-3.0, 3.0);
        for (int i = 0; i < 50; ++i) {
            const Vec2 p{ux(rng), ux(rng)};
            const double t = ut(rng);
            const auto a = trivialization_coord(flow, p);
            const auto b = trivialization_coord(flow, flow(t, p));
            CHECK(std::fabs(a.leaf_param - b.leaf_param) < 1e-6);
        }
    }
}

TEST_CASE("integration diagnostics carry the offending point") {
    const auto spec = reeb_flow_spec();
    FlowTolerances impossible{1e-30, 1.0};  // floor above any acceptable step
    try {
        detail::integrate(spec, 1.0, {0.0, 0.0}, impossible);
        FAIL("expected numeric_error");
    } catch (const numeric_error& e) {
        CHECK(e.where_x == 0.0);
    }
}
