#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "planefol/bandflow.hpp"
#include "planefol/geometry.hpp"

namespace planefol {

struct LeafWindow {
    double t_min = -1.0;
    double t_max = 1.0;
    double max_step = 0.01;
};

// Sampled flowline polyline: points[i] is the flow of base_point at times[i].
struct LeafSample {
    Vec2 base_point;
    std::vector<double> times;
    std::vector<Vec2> points;
    LeafWindow window;
};

template <class Flow>
LeafSample sample_leaf(const Flow& flow, Vec2 p, const LeafWindow& w) {
    if (w.t_max < w.t_min) throw error("sample_leaf: window must have t_min <= t_max");
    LeafSample out;
    out.base_point = p;
    out.window = w;
    const double span = w.t_max - w.t_min;
    if (span == 0.0) {
        out.times.push_back(w.t_min);
        out.points.push_back(flow(w.t_min, p));
        return out;
    }
    const double step = w.max_step > 0.0 ? w.max_step : 0.01;
    const std::size_t n = static_cast<std::size_t>(std::ceil(span / step));
    const double dt = span / static_cast<double>(n);
    Vec2 q = flow(w.t_min, p);
    out.times.push_back(w.t_min);
    out.points.push_back(q);
    for (std::size_t i = 1; i <= n; ++i) {
        q = flow(dt, q);
        out.times.push_back(w.t_min + dt * static_cast<double>(i));
        out.points.push_back(q);
    }
    return out;
}

// Minimum displacement of p under the iterates f^n, 1 <= |n| <= N. Strictly
// positive for a free mapping: the cyclic group it generates acts as a
// covering space action.
template <class Flow>
double orbit_separation(const Flow& flow, Vec2 p, int n_max) {
    if (n_max < 1) throw error("orbit_separation: N must be >= 1");
    double best = std::numeric_limits<double>::infinity();
    Vec2 fwd = p, bwd = p;
    for (int n = 1; n <= n_max; ++n) {
        fwd = flow(1.0, fwd);
        bwd = flow(-1.0, bwd);
        best = std::min(best, std::min(distance(fwd, p), distance(bwd, p)));
    }
    return best;
}

// Coordinates realizing the local product structure of plane/<f> over the
// leaf space: leaf_param identifies the leaf, phase the position along it as
// flow time from the leaf's reference point, mod 1.
struct TrivializationCoord {
    double leaf_param = 0.0;
    double phase = 0.0;  // in [0, 1)
};

namespace detail {

// Flow time from p to the point where the trajectory crosses x = target,
// found by bracketing and bisection on the (monotone) horizontal motion.
inline double crossing_time(const BandFlow& flow, Vec2 p, double target) {
    auto offset = [&](double t) { return flow(t, p).x - target; };
    const double f0 = offset(0.0);
    if (f0 == 0.0) return 0.0;
    double lo = 0.0, hi = 0.0, span = 1.0;
    for (int i = 0; i < 64; ++i) {
        if (offset(span) * f0 < 0.0) {
            hi = span;
            break;
        }
        if (offset(-span) * f0 < 0.0) {
            hi = -span;
            break;
        }
        span *= 2.0;
        if (i == 63) throw numeric_error("crossing_time: cannot bracket transversal", p.x, p.y);
    }
    for (int i = 0; i < 100 && std::fabs(hi - lo) > 1e-12; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (offset(mid) * f0 < 0.0)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace detail

// Invariant bands and boundary lines use the x coordinate as leaf parameter
// and the transversal y = 0 as reference; a transition leaf is identified by
// its crossing height on the vertical transversal at the band midpoint.
inline TrivializationCoord trivialization_coord(const BandFlow& flow, Vec2 p) {
    const BandFlowSpec& s = flow.spec();
    const auto loc = detail::locate(s, p.x);
    if (loc.on_line) {
        const double t = p.y * s.lines[loc.line].dir;  // time from (x, 0) to p
        return {p.x, mod_unit(t)};
    }
    if (s.bands[loc.band].kind == Band::Kind::Invariant) {
        const double t = p.y * detail::invariant_dir(s, loc.band);
        return {p.x, mod_unit(t)};
    }
    const double mid = 0.5 * (s.lines[loc.band - 1].x + s.lines[loc.band].x);
    const double t_back = detail::crossing_time(flow, p, mid);
    const Vec2 ref = flow(t_back, p);
    return {ref.y, mod_unit(-t_back)};
}

}  // namespace planefol
