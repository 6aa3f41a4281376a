#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <numeric>

#include "planefol/buildgraph.hpp"
#include "planefol/builtins.hpp"
#include "planefol/numtopo.hpp"

using namespace planefol;

namespace {

std::vector<Vec2> segment(Vec2 a, Vec2 b) { return {a, b}; }

// Do two vertices share an end list in the graph?
bool share_end(const LeafSpaceGraph& g, const std::string& u, const std::string& v) {
    for (const auto& e : g.edges)
        for (const auto* end : {&e.end_a, &e.end_b}) {
            const bool has_u = std::find(end->begin(), end->end(), u) != end->end();
            const bool has_v = std::find(end->begin(), end->end(), v) != end->end();
            if (has_u && has_v) return true;
        }
    return false;
}

}  // namespace

TEST_CASE("non-separability of the Reeb boundary lines") {
    const BandFlow flow(reeb_flow_spec());
    CHECK(nonseparable_numeric(flow, -1.0, 1.0));
    CHECK(nonseparable_numeric(flow, -1.0, -1.0));  // same leaf
    CHECK_FALSE(nonseparable_numeric(flow, -1.0, -2.0));  // ordinary invariant leaf
}

TEST_CASE("equal-dir transition boundaries separate") {
    const BandFlow flow(equal_dir_flow_spec());
    CHECK_FALSE(nonseparable_numeric(flow, -1.0, 1.0));
}

TEST_CASE("nonseparable rejects points inside a transition band") {
    const BandFlow flow(reeb_flow_spec());
    CHECK_THROWS_AS(nonseparable_numeric(flow, 0.0, 1.0), error);
}

TEST_CASE("numeric and symbolic topology agree on the band fixtures") {
    for (const auto& spec : {reeb_flow_spec(), double_reeb_flow_spec(), chain5_flow_spec()}) {
        const BandFlow flow(spec);
        const LeafSpaceGraph g = build_leaf_space(spec);
        // vertices are created left to right, one per branch line
        std::map<double, std::string> vertex_of_x;
        std::size_t vi = 0;
        for (std::size_t i = 0; i < spec.lines.size(); ++i) vertex_of_x[spec.lines[i].x] = "v" + std::to_string(vi++);
        for (std::size_t i = 0; i < spec.lines.size(); ++i)
            for (std::size_t j = i + 1; j < spec.lines.size(); ++j) {
                const double xa = spec.lines[i].x, xb = spec.lines[j].x;
                const bool numeric = nonseparable_numeric(flow, xa, xb);
                const bool symbolic = share_end(g, vertex_of_x[xa], vertex_of_x[xb]);
                CAPTURE(xa, xb);
                CHECK(numeric == symbolic);
            }
    }
}

TEST_CASE("codivergence verdicts on the Reeb flow") {
    const BandFlow flow(reeb_flow_spec());
    SECTION("two points of the left region codiverge") {
        const auto v = codivergence_numeric(flow, {-2.0, 0.0}, {-3.0, 5.0},
                                            segment({-2.0, 0.0}, {-3.0, 5.0}), 50,
                                            Rect{-4.0, -1.0, -1.0, 1.0});
        CHECK(v.codivergent);
    }
    SECTION("left region and crossing band do not codiverge") {
        const auto v = codivergence_numeric(flow, {-2.0, 0.0}, {0.0, 0.0},
                                            segment({-2.0, 0.0}, {0.0, 0.0}), 50,
                                            Rect{-2.0, -1.0, 1.0, 1.0});
        CHECK_FALSE(v.codivergent);
        CHECK(v.witness == 50);  // the image still meets K at the window edge
    }
    SECTION("a constant curve far from K is codivergent evidence") {
        const auto v = codivergence_numeric(flow, {0.0, 0.0}, {0.0, 0.0},
                                            {{0.0, 0.0}}, 20, Rect{50.0, 50.0, 60.0, 60.0});
        CHECK(v.codivergent);
        CHECK(v.meet_count == 0);
    }
    SECTION("curve endpoints must match") {
        CHECK_THROWS_AS(codivergence_numeric(flow, {0.0, 0.0}, {1.0, 1.0},
                                             segment({0.0, 0.0}, {2.0, 2.0}), 5,
                                             Rect{-1, -1, 1, 1}),
                        error);
    }
}

TEST_CASE("region count matches the codivergence classes found numerically") {
    for (const auto& spec : {reeb_flow_spec(), double_reeb_flow_spec(), chain5_flow_spec()}) {
        const BandFlow flow(spec);
        // one representative per band and per line, along y = 0
        std::vector<Vec2> reps;
        double prev = spec.lines.front().x - 2.0;
        for (std::size_t i = 0; i < spec.lines.size(); ++i) {
            reps.push_back({0.5 * (prev + spec.lines[i].x), 0.0});
            reps.push_back({spec.lines[i].x, 0.0});
            prev = spec.lines[i].x;
        }
        reps.push_back({prev + 2.0, 0.0});

        const int n = static_cast<int>(reps.size());
        std::vector<int> cls(n);
        std::iota(cls.begin(), cls.end(), 0);
        auto find = [&](int a) {
            while (cls[a] != a) a = cls[a] = cls[cls[a]];
            return a;
        };
        const Rect waist{reps.front().x - 0.5, -1.0, reps.back().x + 0.5, 1.0};
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                const auto v = codivergence_numeric(flow, reps[i], reps[j],
                                                    segment(reps[i], reps[j]), 40, waist);
                if (v.codivergent) cls[find(i)] = find(j);
            }
        int classes = 0;
        for (int i = 0; i < n; ++i)
            if (find(i) == i) ++classes;
        CAPTURE(spec.lines.size());
        CHECK(classes == region_count(build_leaf_space(spec)));
    }
}
