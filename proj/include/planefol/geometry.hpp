#pragma once

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

namespace planefol {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when an integration step underflows or a numeric routine cannot
// bracket its target; carries the offending point.
struct numeric_error : error {
    numeric_error(const std::string& msg, double x, double y)
        : error(msg), where_x(x), where_y(y) {}
    double where_x = 0.0;
    double where_y = 0.0;
};

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
    friend bool operator==(Vec2 a, Vec2 b) { return a.x == b.x && a.y == b.y; }
};

inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline double distance(Vec2 a, Vec2 b) { return norm(a - b); }

struct Rect {
    double x_min = 0.0, y_min = 0.0, x_max = 0.0, y_max = 0.0;

    bool contains(Vec2 p) const {
        return p.x >= x_min && p.x <= x_max && p.y >= y_min && p.y <= y_max;
    }
    double width() const { return x_max - x_min; }
    double height() const { return y_max - y_min; }
};

// True iff segment [a,b] has a point inside the rectangle.
inline bool segment_meets_rect(Vec2 a, Vec2 b, const Rect& r) {
    if (r.contains(a) || r.contains(b)) return true;
    // Liang-Barsky clip of the parametric segment against the slab bounds.
    double t0 = 0.0, t1 = 1.0;
    const double dx = b.x - a.x, dy = b.y - a.y;
    const double p[4] = {-dx, dx, -dy, dy};
    const double q[4] = {a.x - r.x_min, r.x_max - a.x, a.y - r.y_min, r.y_max - a.y};
    for (int i = 0; i < 4; ++i) {
        if (p[i] == 0.0) {
            if (q[i] < 0.0) return false;
        } else {
            const double t = q[i] / p[i];
            if (p[i] < 0.0) {
                if (t > t1) return false;
                if (t > t0) t0 = t;
            } else {
                if (t < t0) return false;
                if (t < t1) t1 = t;
            }
        }
    }
    return t0 <= t1;
}

// Fixed 17-significant-digit formatting used for all rendered numeric output.
inline std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline double mod_unit(double t) {
    double r = std::fmod(t, 1.0);
    if (r < 0.0) r += 1.0;
    if (r == 1.0) r = 0.0;
    return r;
}

// Distance on the unit circle between two phases in [0,1).
inline double circle_distance(double a, double b) {
    const double d = std::fabs(mod_unit(a) - mod_unit(b));
    return std::min(d, 1.0 - d);
}

}  // namespace planefol
