#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <vector>

#include "planefol/bandflow.hpp"
#include "planefol/flow.hpp"
#include "planefol/geometry.hpp"

namespace planefol {

// ---------------------------------------------------------------------------
// Non-separability: the shrinking-transversal test at finite resolution.
// ---------------------------------------------------------------------------

namespace detail {

// Interval hull of crossing-height parameters of the transition leaves that
// cross a one-sided transversal of length delta at (line_x, 0), going into
// band `band`. Empty when the band is not a transition.
struct ParamHull {
    std::size_t band = 0;
    double lo = 0.0;
    double hi = 0.0;
};

inline std::optional<ParamHull> transversal_hull(const BandFlow& flow, double line_x,
                                                 std::size_t band, bool into_right,
                                                 double delta) {
    const BandFlowSpec& s = flow.spec();
    if (band >= s.bands.size() || s.bands[band].kind != Band::Kind::Transition)
        return std::nullopt;
    const double bl = s.lines[band - 1].x, br = s.lines[band].x;
    const double mid = 0.5 * (bl + br);
    const double reach = std::min(delta, 0.45 * (br - bl));
    ParamHull hull{band, std::numeric_limits<double>::infinity(),
                   -std::numeric_limits<double>::infinity()};
    const int samples = 6;
    for (int j = 0; j < samples; ++j) {
        const double eps = reach * std::pow(0.5, j);
        const Vec2 p{into_right ? line_x + eps : line_x - eps, 0.0};
        const double t = detail::crossing_time(flow, p, mid);
        const double c = flow(t, p).y;
        hull.lo = std::min(hull.lo, c);
        hull.hi = std::max(hull.hi, c);
    }
    return hull;
}

// Hulls for every transition band adjacent to the vertical leaf at x0.
inline std::vector<ParamHull> leaf_hulls(const BandFlow& flow, double x0, double delta) {
    const BandFlowSpec& s = flow.spec();
    std::vector<ParamHull> out;
    const auto loc = detail::locate(s, x0);
    if (!loc.on_line) return out;  // invariant-band leaf: no transition neighbors
    if (auto h = transversal_hull(flow, x0, loc.line, false, delta)) out.push_back(*h);
    if (auto h = transversal_hull(flow, x0, loc.line + 1, true, delta)) out.push_back(*h);
    return out;
}

}  // namespace detail

// True iff the leaves crossing shrinking transversals at the two vertical
// leaves keep escaping together: for every delta in the schedule there is a
// transition band whose crossing-parameter hulls from both sides overlap.
// Accepts any vertical leaf (a boundary line or an invariant-band leaf);
// a point strictly inside a transition band has no vertical leaf and is
// rejected.
inline bool nonseparable_numeric(const BandFlow& flow, double line_a, double line_b,
                                 const std::vector<double>& schedule = {0.5, 0.25, 0.125,
                                                                        0.0625}) {
    const BandFlowSpec& s = flow.spec();
    for (double x : {line_a, line_b}) {
        const auto loc = detail::locate(s, x);
        if (!loc.on_line && s.bands[loc.band].kind == Band::Kind::Transition)
            throw error("nonseparable_numeric: x=" + fmt17(x) +
                        " is not a vertical leaf of the spec");
    }
    if (line_a == line_b) return true;  // same leaf
    if (schedule.empty()) throw error("nonseparable_numeric: empty schedule");

    for (double delta : schedule) {
        const auto ha = detail::leaf_hulls(flow, line_a, delta);
        const auto hb = detail::leaf_hulls(flow, line_b, delta);
        bool overlap = false;
        for (const auto& a : ha)
            for (const auto& b : hb)
                if (a.band == b.band && a.lo <= b.hi && b.lo <= a.hi) overlap = true;
        if (!overlap) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Codivergence: curve-iteration semidecision.
// ---------------------------------------------------------------------------

struct CoDivergenceParams {
    int burn_in = 3;          // ignore returns at |n| <= burn_in
    double max_step = 0.05;   // resampling step for the input curve
};

struct CoDivergenceVerdict {
    bool codivergent = false;  // CoDivergentEvidence when true, NotCoDivergent otherwise
    int witness = 0;           // largest |n| at which the image still met K, or -1
    int meet_count = 0;
};

inline std::vector<Vec2> resample_polyline(const std::vector<Vec2>& curve, double max_step) {
    std::vector<Vec2> out;
    if (curve.empty()) return out;
    out.push_back(curve.front());
    for (std::size_t i = 1; i < curve.size(); ++i) {
        const Vec2 a = curve[i - 1], b = curve[i];
        const double len = distance(a, b);
        const std::size_t n = std::max<std::size_t>(1, (std::size_t)std::ceil(len / max_step));
        for (std::size_t j = 1; j <= n; ++j) {
            const double t = (double)j / (double)n;
            out.push_back(a + t * (b - a));
        }
    }
    return out;
}

namespace detail {

inline bool polyline_meets_rect(const std::vector<Vec2>& pts, const Rect& K) {
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        if (segment_meets_rect(pts[i], pts[i + 1], K)) return true;
    return pts.size() == 1 && K.contains(pts[0]);
}

}  // namespace detail

// Iterates the sampled curve joining x and y under the time-one map and
// watches whether its image keeps meeting the compact window K.
// CoDivergentEvidence when the images leave K for good within |n| <= N;
// NotCoDivergent when they still meet K at the edge of the window. A
// semidecision at the sampling density: evidence, not proof.
template <class Flow>
CoDivergenceVerdict codivergence_numeric(const Flow& flow, Vec2 x, Vec2 y,
                                         const std::vector<Vec2>& curve, int n_max,
                                         const Rect& K, const CoDivergenceParams& params = {}) {
    if (n_max < 1) throw error("codivergence_numeric: N must be >= 1");
    if (curve.size() < 1) throw error("codivergence_numeric: empty curve");
    const double tol = 1e-9;
    if (distance(curve.front(), x) > tol || distance(curve.back(), y) > tol)
        throw error("codivergence_numeric: curve endpoints must equal x and y");

    const std::vector<Vec2> base = resample_polyline(curve, params.max_step);
    int last_meet = -1;
    int meets = 0;
    auto scan = [&](double direction) {
        std::vector<Vec2> pts = base;
        for (int n = 0; n <= n_max; ++n) {
            if (n > 0)
                for (auto& p : pts) p = flow(direction, p);
            if (detail::polyline_meets_rect(pts, K)) {
                ++meets;
                if (n > params.burn_in) last_meet = std::max(last_meet, n);
            }
        }
    };
    scan(1.0);
    scan(-1.0);

    CoDivergenceVerdict v;
    v.meet_count = meets;
    v.witness = last_meet;
    v.codivergent = last_meet < n_max;
    return v;
}

}  // namespace planefol
