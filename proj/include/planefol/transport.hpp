#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "planefol/flow.hpp"
#include "planefol/geometry.hpp"
#include "planefol/numtopo.hpp"
#include "planefol/planemap.hpp"

namespace planefol {

// The conjugated flow h o f^t o h^-1. Kept implicit: conjugates of band flows
// are generally not band flows, so leaf-space claims about them are checked
// by transport rather than by rebuilding.
template <class Flow>
class ConjugatedFlow {
public:
    ConjugatedFlow(PlaneMap h, Flow base)
        : h_(std::move(h)), h_inv_(h_.inverted()), base_(std::move(base)) {}

    Vec2 operator()(double t, Vec2 p) const { return h_(base_(t, h_inv_(p))); }
    const PlaneMap& conjugator() const { return h_; }
    const Flow& base() const { return base_; }

private:
    PlaneMap h_;
    PlaneMap h_inv_;
    Flow base_;
};

template <class Flow>
ConjugatedFlow<Flow> conjugate_flow(const PlaneMap& h, const Flow& base) {
    return ConjugatedFlow<Flow>(h, base);
}

// ---------------------------------------------------------------------------
// Affine identities: translations are strongly reversible.
// ---------------------------------------------------------------------------

struct AffineIdentityReport {
    double err_conjugation = 0.0;  // h^-1 T_{a,b} h = T_{c,d},  h(x,y) = (ax/c, by/d)
    double err_reversal = 0.0;     // f_A T_{a,b} f_A^-1 = T_{a,b}^-1
    double err_involution = 0.0;   // f_A^2 = Id
    double max_error() const {
        return std::max({err_conjugation, err_reversal, err_involution});
    }
};

inline AffineIdentityReport verify_affine_identities(double a, double b, double c, double d,
                                                     const std::vector<Vec2>& grid) {
    if (c == 0.0 || d == 0.0) throw error("verify_affine_identities: c and d must be nonzero");
    if (a == 0.0 || b == 0.0) throw error("verify_affine_identities: a and b must be nonzero");

    const PlaneMap T_ab = PlaneMap::translation(a, b);
    const PlaneMap T_cd = PlaneMap::translation(c, d);
    const PlaneMap h = PlaneMap::linear_diag(a / c, b / d);
    const PlaneMap fA = PlaneMap::antipodal();

    const PlaneMap conj = h.inverted() * T_ab * h;
    const PlaneMap rev = fA * T_ab * fA.inverted();
    const PlaneMap T_ab_inv = T_ab.inverted();
    const PlaneMap invol = fA * fA;

    AffineIdentityReport r;
    for (const Vec2 p : grid) {
        r.err_conjugation = std::max(r.err_conjugation, distance(conj(p), T_cd(p)));
        r.err_reversal = std::max(r.err_reversal, distance(rev(p), T_ab_inv(p)));
        r.err_involution = std::max(r.err_involution, distance(invol(p), p));
    }
    return r;
}

inline std::vector<Vec2> sample_grid(const Rect& r, int nx, int ny) {
    std::vector<Vec2> pts;
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < ny; ++j)
            pts.push_back({r.x_min + r.width() * i / (nx - 1.0),
                           r.y_min + r.height() * j / (ny - 1.0)});
    return pts;
}

// ---------------------------------------------------------------------------
// Leaf transport: a conjugacy carries leaves to leaves.
// ---------------------------------------------------------------------------

// Max over a of min distance from a to segments of b.
inline double one_sided_hausdorff(const std::vector<Vec2>& a, const std::vector<Vec2>& b) {
    if (b.empty()) throw error("one_sided_hausdorff: empty polyline");
    auto point_segment = [](Vec2 p, Vec2 s0, Vec2 s1) {
        const Vec2 d = s1 - s0;
        const double len2 = d.x * d.x + d.y * d.y;
        if (len2 == 0.0) return distance(p, s0);
        double t = ((p.x - s0.x) * d.x + (p.y - s0.y) * d.y) / len2;
        t = std::clamp(t, 0.0, 1.0);
        return distance(p, s0 + t * d);
    };
    double worst = 0.0;
    for (const Vec2 p : a) {
        double best = distance(p, b[0]);
        for (std::size_t i = 0; i + 1 < b.size(); ++i)
            best = std::min(best, point_segment(p, b[i], b[i + 1]));
        worst = std::max(worst, best);
    }
    return worst;
}

struct TransportReport {
    struct Entry {
        Vec2 base;
        double hausdorff;
    };
    std::vector<Entry> entries;
    double max_distance = 0.0;
    double tol = 1e-3;
    bool passed = false;
};

// For each base point x: compares h(leaf of x under the base flow) against
// the leaf of h(x) under the conjugated flow, one-sided sampled Hausdorff.
template <class Flow>
TransportReport leaf_transport_check(const PlaneMap& h, const Flow& base,
                                     const std::vector<Vec2>& base_points,
                                     const LeafWindow& window, double tol = 1e-3) {
    const auto conj = conjugate_flow(h, base);
    TransportReport report;
    report.tol = tol;
    for (const Vec2 x : base_points) {
        LeafSample leaf = sample_leaf(base, x, window);
        std::vector<Vec2> transported;
        transported.reserve(leaf.points.size());
        for (const Vec2 p : leaf.points) transported.push_back(h(p));
        const LeafSample conj_leaf = sample_leaf(conj, h(x), window);
        const double dist = one_sided_hausdorff(transported, conj_leaf.points);
        report.entries.push_back({x, dist});
        report.max_distance = std::max(report.max_distance, dist);
    }
    report.passed = report.max_distance < tol;
    return report;
}

// ---------------------------------------------------------------------------
// Codivergence equivariance under conjugation.
// ---------------------------------------------------------------------------

struct CurvePair {
    Vec2 x;
    Vec2 y;
    std::vector<Vec2> curve;
};

struct EquivarianceReport {
    struct Entry {
        Vec2 x;
        Vec2 y;
        bool base_codivergent;
        bool conj_codivergent;
        bool match;
    };
    std::vector<Entry> entries;
    bool all_match = true;
};

// Image of an axis rectangle under h, which must again be an axis rectangle
// (translations, axis reflections, the antipodal map, diagonal scalings).
inline Rect transform_rect(const PlaneMap& h, const Rect& k) {
    const Vec2 c00 = h({k.x_min, k.y_min});
    const Vec2 c11 = h({k.x_max, k.y_max});
    const Vec2 c01 = h({k.x_min, k.y_max});
    const Vec2 c10 = h({k.x_max, k.y_min});
    Rect out{std::min(c00.x, c11.x), std::min(c00.y, c11.y), std::max(c00.x, c11.x),
             std::max(c00.y, c11.y)};
    const double tol = 1e-9 * (1.0 + std::fabs(out.x_max) + std::fabs(out.y_max));
    auto on_corner = [&](Vec2 p) {
        return (std::fabs(p.x - out.x_min) < tol || std::fabs(p.x - out.x_max) < tol) &&
               (std::fabs(p.y - out.y_min) < tol || std::fabs(p.y - out.y_max) < tol);
    };
    if (!on_corner(c01) || !on_corner(c10))
        throw error("transform_rect: conjugator does not preserve axis rectangles");
    return out;
}

// The codivergence verdict is a conjugacy invariant: checks that each pair's
// verdict is unchanged when the flow, points, curve and window are pushed
// through h.
template <class Flow>
EquivarianceReport region_equivariance_check(const PlaneMap& h, const Flow& base,
                                             const std::vector<CurvePair>& pairs, int n_max,
                                             const Rect& K,
                                             const CoDivergenceParams& params = {}) {
    const auto conj = conjugate_flow(h, base);
    const Rect hK = transform_rect(h, K);
    EquivarianceReport report;
    for (const auto& pair : pairs) {
        std::vector<Vec2> h_curve;
        h_curve.reserve(pair.curve.size());
        for (const Vec2 p : pair.curve) h_curve.push_back(h(p));
        const auto base_verdict =
            codivergence_numeric(base, pair.x, pair.y, pair.curve, n_max, K, params);
        const auto conj_verdict =
            codivergence_numeric(conj, h(pair.x), h(pair.y), h_curve, n_max, hK, params);
        const bool match = base_verdict.codivergent == conj_verdict.codivergent;
        report.entries.push_back(
            {pair.x, pair.y, base_verdict.codivergent, conj_verdict.codivergent, match});
        report.all_match = report.all_match && match;
    }
    return report;
}

}  // namespace planefol
