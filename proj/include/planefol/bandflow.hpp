#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "planefol/geometry.hpp"
#include "planefol/leafspace.hpp"

namespace planefol {

// A plane flow assembled from vertical bands: invariant bands translate
// vertically, transition bands carry the flow across between two boundary
// lines. lines[i] sits between bands[i] and bands[i+1]; the outermost bands
// are invariant. dir is the vertical direction of a boundary flowline.
struct BoundaryLine {
    double x = 0.0;
    int dir = 1;  // +1 up, -1 down
};

struct Band {
    enum class Kind { Invariant, Transition };
    Kind kind = Kind::Invariant;
    int sign = 1;  // horizontal crossing direction, transitions only

    static Band invariant() { return {Kind::Invariant, 1}; }
    static Band transition(int sign) { return {Kind::Transition, sign}; }
};

struct BandFlowSpec {
    std::vector<BoundaryLine> lines;
    std::vector<Band> bands;  // size == lines.size() + 1
};

enum class FlowSpecErrorCode {
    ASCENDING,         // line coordinates not strictly increasing
    BAND_COUNT,        // bands.size() != lines.size() + 1
    OUTER_TRANSITION,  // outermost band is a transition
    DIR_MISMATCH,      // invariant band between lines of different dir
    BAD_DIR,           // dir not in {-1, +1}
    BAD_SIGN,          // transition sign not in {-1, +1}
};

inline const char* to_string(FlowSpecErrorCode c) {
    switch (c) {
        case FlowSpecErrorCode::ASCENDING: return "ASCENDING";
        case FlowSpecErrorCode::BAND_COUNT: return "BAND_COUNT";
        case FlowSpecErrorCode::OUTER_TRANSITION: return "OUTER_TRANSITION";
        case FlowSpecErrorCode::DIR_MISMATCH: return "DIR_MISMATCH";
        case FlowSpecErrorCode::BAD_DIR: return "BAD_DIR";
        case FlowSpecErrorCode::BAD_SIGN: return "BAD_SIGN";
    }
    return "?";
}

struct FlowSpecViolation {
    FlowSpecErrorCode code;
    std::string message;
};

struct flowspec_error : error {
    explicit flowspec_error(std::vector<FlowSpecViolation> v)
        : error(v.empty() ? "invalid flow spec"
                          : std::string(to_string(v.front().code)) + ": " + v.front().message),
          violations(std::move(v)) {}
    std::vector<FlowSpecViolation> violations;
};

inline std::vector<FlowSpecViolation> validate_flow_spec(const BandFlowSpec& s) {
    std::vector<FlowSpecViolation> out;
    auto add = [&out](FlowSpecErrorCode c, std::string m) { out.push_back({c, std::move(m)}); };

    if (s.bands.size() != s.lines.size() + 1)
        add(FlowSpecErrorCode::BAND_COUNT,
            "expected " + std::to_string(s.lines.size() + 1) + " bands, got " +
                std::to_string(s.bands.size()));
    for (std::size_t i = 0; i + 1 < s.lines.size(); ++i)
        if (!(s.lines[i].x < s.lines[i + 1].x))
            add(FlowSpecErrorCode::ASCENDING, "line coordinates must be strictly increasing");
    for (const auto& l : s.lines)
        if (l.dir != 1 && l.dir != -1)
            add(FlowSpecErrorCode::BAD_DIR, "line dir must be +1 or -1");
    if (!out.empty()) return out;

    if (!s.bands.empty()) {
        if (!s.lines.empty()) {
            if (s.bands.front().kind == Band::Kind::Transition)
                add(FlowSpecErrorCode::OUTER_TRANSITION, "leftmost band must be invariant");
            if (s.bands.back().kind == Band::Kind::Transition)
                add(FlowSpecErrorCode::OUTER_TRANSITION, "rightmost band must be invariant");
        } else if (s.bands.front().kind == Band::Kind::Transition) {
            add(FlowSpecErrorCode::OUTER_TRANSITION, "a transition band needs two boundary lines");
        }
    }
    for (std::size_t k = 0; k < s.bands.size(); ++k) {
        const Band& b = s.bands[k];
        if (b.kind == Band::Kind::Transition) {
            if (b.sign != 1 && b.sign != -1)
                add(FlowSpecErrorCode::BAD_SIGN, "transition sign must be +1 or -1");
        } else {
            // field continuity: an invariant band translates with the dir its
            // boundary lines carry, so those dirs must agree
            const bool has_left = k > 0, has_right = k < s.lines.size();
            if (has_left && has_right && s.lines[k - 1].dir != s.lines[k].dir)
                add(FlowSpecErrorCode::DIR_MISMATCH,
                    "invariant band between lines of different dir at x=" +
                        fmt17(s.lines[k - 1].x) + " and x=" + fmt17(s.lines[k].x));
        }
    }
    return out;
}

inline void require_valid(const BandFlowSpec& s) {
    auto v = validate_flow_spec(s);
    if (!v.empty()) throw flowspec_error(std::move(v));
}

namespace detail {

// Band containing x; points exactly on a line belong to no band interior
// and are reported via on_line.
struct BandLocation {
    std::size_t band = 0;
    bool on_line = false;
    std::size_t line = 0;
};

inline BandLocation locate(const BandFlowSpec& s, double x) {
    for (std::size_t i = 0; i < s.lines.size(); ++i)
        if (x == s.lines[i].x) return {0, true, i};
    std::size_t k = 0;
    while (k < s.lines.size() && x > s.lines[k].x) ++k;
    return {k, false, 0};
}

// Vertical translation direction of an invariant band (taken from an
// adjacent line; a lineless spec translates upward).
inline int invariant_dir(const BandFlowSpec& s, std::size_t band) {
    if (band > 0) return s.lines[band - 1].dir;
    if (!s.lines.empty()) return s.lines[0].dir;
    return 1;
}

}  // namespace detail

// Velocity of the band field. Invariant band: (0, dir). Transition band
// between b_l and b_r with boundary dirs d_l, d_r and w = (x-b_l)/(b_r-b_l):
//   ( sign * (x-b_l) * (b_r-x),  d_l*(1-w) + d_r*w )
// Continuous everywhere, never zero.
inline Vec2 field_at(const BandFlowSpec& s, Vec2 p) {
    const auto loc = detail::locate(s, p.x);
    if (loc.on_line) return {0.0, static_cast<double>(s.lines[loc.line].dir)};
    const Band& band = s.bands[loc.band];
    if (band.kind == Band::Kind::Invariant)
        return {0.0, static_cast<double>(detail::invariant_dir(s, loc.band))};
    const double bl = s.lines[loc.band - 1].x, br = s.lines[loc.band].x;
    const double dl = s.lines[loc.band - 1].dir, dr = s.lines[loc.band].dir;
    const double w = (p.x - bl) / (br - bl);
    return {band.sign * (p.x - bl) * (br - p.x), dl * (1.0 - w) + dr * w};
}

struct FlowTolerances {
    double tol_per_unit_time = 1e-9;
    double min_step = 1e-13;
};

namespace detail {

// One classic fourth-order Runge-Kutta step of the autonomous band field.
inline Vec2 rk4_step(const BandFlowSpec& s, Vec2 p, double h) {
    const Vec2 k1 = field_at(s, p);
    const Vec2 k2 = field_at(s, p + 0.5 * h * k1);
    const Vec2 k3 = field_at(s, p + 0.5 * h * k2);
    const Vec2 k4 = field_at(s, p + h * k3);
    return p + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

// Adaptive step-doubling integrator for motion inside a transition band.
// The horizontal component is a one-dimensional autonomous equation and the
// vertical one is a quadrature over it, so the pair is integrated together.
inline Vec2 integrate(const BandFlowSpec& s, double t, Vec2 p, const FlowTolerances& tol) {
    const double dir = t >= 0.0 ? 1.0 : -1.0;
    double remaining = std::fabs(t);
    double h = std::min(remaining, 0.1);
    while (remaining > 0.0) {
        h = std::min(h, remaining);
        const Vec2 full = rk4_step(s, p, dir * h);
        const Vec2 half = rk4_step(s, rk4_step(s, p, dir * h * 0.5), dir * h * 0.5);
        const double err = norm(full - half);
        const double allowed = tol.tol_per_unit_time * h;
        if (err <= allowed || h <= tol.min_step) {
            if (h <= tol.min_step && err > allowed)
                throw numeric_error("integrator step underflow", p.x, p.y);
            // fifth-order combination of the two estimates
            p = half + (1.0 / 15.0) * (half - full);
            remaining -= h;
            const double grow = err > 0.0 ? 0.9 * std::pow(allowed / err, 0.25) : 5.0;
            h *= std::min(5.0, std::max(0.2, grow));
        } else {
            h *= std::max(0.2, 0.9 * std::pow(allowed / err, 0.25));
            if (h < tol.min_step) h = tol.min_step;
        }
    }
    return p;
}

}  // namespace detail

// Time-t map of the band flow. Exact on boundary lines and invariant bands;
// a transition band never hands a trajectory to another band, so everything
// else is one in-band integration.
inline Vec2 flow_map(const BandFlowSpec& s, double t, Vec2 p,
                     const FlowTolerances& tol = {}) {
    if (t == 0.0) return p;
    const auto loc = detail::locate(s, p.x);
    if (loc.on_line)
        return {p.x, p.y + t * s.lines[loc.line].dir};
    if (s.bands[loc.band].kind == Band::Kind::Invariant)
        return {p.x, p.y + t * detail::invariant_dir(s, loc.band)};
    return detail::integrate(s, t, p, tol);
}

inline Vec2 time_one_map(const BandFlowSpec& s, Vec2 p, const FlowTolerances& tol = {}) {
    return flow_map(s, 1.0, p, tol);
}

// Callable flow objects; generic trajectory utilities are templates over
// anything invocable as (t, p) -> p.

class BandFlow {
public:
    explicit BandFlow(BandFlowSpec spec, FlowTolerances tol = {})
        : spec_(std::move(spec)), tol_(tol) {
        planefol::require_valid(spec_);
    }
    Vec2 operator()(double t, Vec2 p) const { return flow_map(spec_, t, p, tol_); }
    Vec2 velocity(Vec2 p) const { return field_at(spec_, p); }
    const BandFlowSpec& spec() const { return spec_; }
    const FlowTolerances& tolerances() const { return tol_; }

private:
    BandFlowSpec spec_;
    FlowTolerances tol_;
};

class TranslationFlow {
public:
    TranslationFlow(double a, double b) : v_{a, b} {
        if (a == 0.0 && b == 0.0) throw error("translation flow must be fixed-point free");
    }
    Vec2 operator()(double t, Vec2 p) const { return p + t * v_; }
    Vec2 velocity(Vec2) const { return v_; }
    Vec2 step() const { return v_; }

private:
    Vec2 v_;
};

}  // namespace planefol
