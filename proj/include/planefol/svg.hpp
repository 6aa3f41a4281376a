#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "planefol/bandflow.hpp"
#include "planefol/buildgraph.hpp"
#include "planefol/flow.hpp"
#include "planefol/geometry.hpp"
#include "planefol/leafspace.hpp"

namespace planefol {

namespace svgdetail {

inline std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

// World-to-canvas transform with the y axis flipped.
struct Canvas {
    Rect world;
    double width = 640.0, height = 640.0, margin = 24.0;

    double sx() const { return (width - 2 * margin) / world.width(); }
    double sy() const { return (height - 2 * margin) / world.height(); }
    Vec2 to_px(Vec2 p) const {
        return {margin + (p.x - world.x_min) * sx(),
                height - margin - (p.y - world.y_min) * sy()};
    }
};

inline std::string svg_open(const Canvas& c) {
    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt17(c.width)
      << "\" height=\"" << fmt17(c.height) << "\" viewBox=\"0 0 " << fmt17(c.width) << " "
      << fmt17(c.height) << "\">\n";
    return s.str();
}

inline void polyline(std::ostringstream& s, const std::vector<Vec2>& px,
                     const std::string& cls, const std::string& style) {
    s << "<polyline class=\"" << cls << "\" fill=\"none\" " << style << " points=\"";
    for (std::size_t i = 0; i < px.size(); ++i) {
        if (i) s << " ";
        s << fmt17(px[i].x) << "," << fmt17(px[i].y);
    }
    s << "\"/>\n";
}

inline void arrow_head(std::ostringstream& s, Vec2 at, Vec2 dir) {
    const double len = norm(dir);
    if (len == 0.0) return;
    const Vec2 u{dir.x / len, dir.y / len};
    const Vec2 n{-u.y, u.x};
    const double a = 7.0, b = 3.5;
    const Vec2 tip = at + a * u;
    const Vec2 left = at + b * n;
    const Vec2 right = at + (-b) * n;
    s << "<polygon class=\"arrow\" points=\"" << fmt17(tip.x) << "," << fmt17(tip.y) << " "
      << fmt17(left.x) << "," << fmt17(left.y) << " " << fmt17(right.x) << "," << fmt17(right.y)
      << "\"/>\n";
}

}  // namespace svgdetail

// ---------------------------------------------------------------------------
// Foliation portraits: one polyline per sampled leaf, arrowheads along the
// flow orientation, branch leaves highlighted.
// ---------------------------------------------------------------------------

namespace svgdetail {

template <class Flow>
void emit_leaf(std::ostringstream& out, const Canvas& canvas, const Flow& flow, Vec2 seed,
               double t_span, const std::string& cls, const std::string& style) {
    const LeafSample leaf = sample_leaf(flow, seed, {-t_span, t_span, t_span / 200.0});
    std::vector<Vec2> px;
    px.reserve(leaf.points.size());
    for (const Vec2 p : leaf.points) px.push_back(canvas.to_px(p));
    polyline(out, px, cls, style);
    const std::size_t mid = leaf.points.size() / 2;
    if (mid + 1 < leaf.points.size()) {
        const Vec2 a = canvas.to_px(leaf.points[mid]);
        const Vec2 b = canvas.to_px(leaf.points[mid + 1]);
        arrow_head(out, a, b - a);
    }
}

}  // namespace svgdetail

inline std::string render_foliation(const BandFlowSpec& spec, const Rect& region, int density) {
    require_valid(spec);
    if (density < 1) throw error("render_foliation: density must be >= 1");
    const svgdetail::Canvas canvas{region};
    std::ostringstream out;
    out << svgdetail::svg_open(canvas);
    out << "<rect class=\"frame\" fill=\"white\" stroke=\"#cccccc\" x=\""
        << fmt17(canvas.margin) << "\" y=\"" << fmt17(canvas.margin) << "\" width=\""
        << fmt17(canvas.width - 2 * canvas.margin) << "\" height=\""
        << fmt17(canvas.height - 2 * canvas.margin) << "\"/>\n";

    const BandFlow flow(spec);
    const double t_span = region.width() + region.height() + 4.0;
    const auto branch = detail::branch_lines(spec);

    // visible x-interval of each band, seeds spread proportionally
    struct Interval {
        double a, b;
    };
    std::vector<Interval> visible;
    double cursor = region.x_min;
    for (std::size_t k = 0; k <= spec.lines.size(); ++k) {
        const double right = k < spec.lines.size() ? std::min(spec.lines[k].x, region.x_max)
                                                   : region.x_max;
        visible.push_back({cursor, std::max(cursor, right)});
        cursor = std::max(cursor, right);
    }
    double total = 0.0;
    for (const auto& iv : visible) total += iv.b - iv.a;
    for (std::size_t k = 0; k < visible.size(); ++k) {
        const double w = visible[k].b - visible[k].a;
        if (w <= 0.0) continue;
        const int seeds = std::max(1, (int)std::ceil(density * w / total));
        for (int j = 0; j < seeds; ++j) {
            const double x = visible[k].a + (j + 0.5) * w / seeds;
            svgdetail::emit_leaf(out, canvas, flow, {x, 0.5 * (region.y_min + region.y_max)},
                                 t_span, "leaf", "stroke=\"#336699\" stroke-width=\"1\"");
        }
    }
    for (std::size_t i = 0; i < spec.lines.size(); ++i) {
        if (spec.lines[i].x < region.x_min || spec.lines[i].x > region.x_max) continue;
        const std::string cls = branch[i] ? "leaf branch" : "leaf boundary";
        const std::string style = branch[i] ? "stroke=\"#cc2222\" stroke-width=\"2.5\""
                                            : "stroke=\"#555555\" stroke-width=\"1.5\"";
        svgdetail::emit_leaf(out, canvas, flow,
                             {spec.lines[i].x, 0.5 * (region.y_min + region.y_max)}, t_span, cls,
                             style);
    }
    out << "</svg>\n";
    return out.str();
}

inline std::string render_foliation(const TranslationFlow& flow, const Rect& region,
                                    int density) {
    if (density < 1) throw error("render_foliation: density must be >= 1");
    const svgdetail::Canvas canvas{region};
    std::ostringstream out;
    out << svgdetail::svg_open(canvas);
    const Vec2 v = flow.step();
    const Vec2 n{-v.y / norm(v), v.x / norm(v)};  // transverse direction
    const double reach = 0.5 * (region.width() + region.height());
    const Vec2 center{0.5 * (region.x_min + region.x_max), 0.5 * (region.y_min + region.y_max)};
    const double t_span = (region.width() + region.height()) / norm(v) + 2.0;
    for (int j = 0; j < density; ++j) {
        const double offset = (density == 1) ? 0.0 : -reach + 2.0 * reach * j / (density - 1.0);
        svgdetail::emit_leaf(out, canvas, flow, center + offset * n, t_span, "leaf",
                             "stroke=\"#336699\" stroke-width=\"1\"");
    }
    out << "</svg>\n";
    return out.str();
}

// ---------------------------------------------------------------------------
// Leaf-space diagrams: one segment per edge, glyphs for branch points,
// non-separable clusters annotated with their order.
// ---------------------------------------------------------------------------

namespace svgdetail {

struct TreeLayout {
    std::map<std::string, Vec2> edge_pos;
    std::map<std::string, Vec2> vertex_pos;
    Rect extent{0, 0, 0, 0};
};

// Positions the incidence tree: collinear when it is a path (band-derived
// chains), radial fan otherwise.
inline TreeLayout layout_incidence_tree(const LeafSpaceGraph& g) {
    struct Node {
        bool is_edge;
        std::string id;
    };
    std::vector<Node> nodes;
    std::map<std::string, std::size_t> index;
    for (const auto& e : g.edges) {
        index["E:" + e.id] = nodes.size();
        nodes.push_back({true, e.id});
    }
    for (const auto& v : g.vertices) {
        index["V:" + v] = nodes.size();
        nodes.push_back({false, v});
    }
    std::vector<std::vector<std::size_t>> adj(nodes.size());
    for (const auto& e : g.edges)
        for (const auto* end : {&e.end_a, &e.end_b})
            for (const auto& v : *end) {
                adj[index.at("E:" + e.id)].push_back(index.at("V:" + v));
                adj[index.at("V:" + v)].push_back(index.at("E:" + e.id));
            }
    for (auto& a : adj) std::sort(a.begin(), a.end());

    TreeLayout layout;
    auto place = [&](std::size_t n, Vec2 p) {
        if (nodes[n].is_edge)
            layout.edge_pos[nodes[n].id] = p;
        else
            layout.vertex_pos[nodes[n].id] = p;
        layout.extent.x_min = std::min(layout.extent.x_min, p.x);
        layout.extent.x_max = std::max(layout.extent.x_max, p.x);
        layout.extent.y_min = std::min(layout.extent.y_min, p.y);
        layout.extent.y_max = std::max(layout.extent.y_max, p.y);
    };

    const bool is_path =
        std::all_of(adj.begin(), adj.end(), [](const auto& a) { return a.size() <= 2; });
    const double spacing = 60.0;

    if (is_path && !nodes.empty()) {
        std::size_t start = 0;
        for (std::size_t i = 0; i < nodes.size(); ++i)
            if (adj[i].size() <= 1) {
                start = i;
                break;
            }
        std::vector<char> seen(nodes.size(), 0);
        std::size_t cur = start;
        double x = 0.0;
        for (;;) {
            seen[cur] = 1;
            place(cur, {x, 0.0});
            x += spacing;
            bool advanced = false;
            for (std::size_t nb : adj[cur])
                if (!seen[nb]) {
                    cur = nb;
                    advanced = true;
                    break;
                }
            if (!advanced) break;
        }
        return layout;
    }

    // radial: root at the lexicographically smallest edge id
    std::size_t root = 0;
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i].is_edge && (!nodes[root].is_edge || nodes[i].id < nodes[root].id)) root = i;
    std::vector<char> seen(nodes.size(), 0);
    // subtree leaf counts for angular allocation
    std::vector<double> weight(nodes.size(), 1.0);
    {
        std::vector<std::pair<std::size_t, std::size_t>> order;  // (node, parent)
        std::vector<std::pair<std::size_t, std::size_t>> stack{{root, root}};
        std::vector<char> mark(nodes.size(), 0);
        while (!stack.empty()) {
            auto [n, p] = stack.back();
            stack.pop_back();
            mark[n] = 1;
            order.push_back({n, p});
            for (std::size_t nb : adj[n])
                if (!mark[nb]) stack.push_back({nb, n});
        }
        for (auto it = order.rbegin(); it != order.rend(); ++it)
            if (it->first != it->second) weight[it->second] += weight[it->first];
    }
    struct Frame {
        std::size_t node, parent;
        Vec2 pos;
        double angle_lo, angle_hi;
    };
    std::vector<Frame> stack{{root, root, {0.0, 0.0}, 0.0, 2.0 * 3.14159265358979323846}};
    while (!stack.empty()) {
        const Frame f = stack.back();
        stack.pop_back();
        seen[f.node] = 1;
        place(f.node, f.pos);
        std::vector<std::size_t> kids;
        for (std::size_t nb : adj[f.node])
            if (!seen[nb] && nb != f.parent) kids.push_back(nb);
        double total = 0.0;
        for (std::size_t k : kids) total += weight[k];
        double lo = f.angle_lo;
        for (std::size_t k : kids) {
            const double share = (f.angle_hi - f.angle_lo) * (total > 0 ? weight[k] / total : 1.0);
            const double mid = lo + share / 2.0;
            stack.push_back(
                {k, f.node, f.pos + spacing * Vec2{std::cos(mid), std::sin(mid)}, lo, lo + share});
            lo += share;
        }
    }
    return layout;
}

}  // namespace svgdetail

inline std::string render_leafspace(const LeafSpaceGraph& g) {
    const auto layout = svgdetail::layout_incidence_tree(g);
    const double margin = 60.0;
    const Rect world{layout.extent.x_min - margin, layout.extent.y_min - margin,
                     layout.extent.x_max + margin, layout.extent.y_max + margin};
    const svgdetail::Canvas canvas{world,
                                   std::max(320.0, 1.2 * world.width()),
                                   std::max(240.0, 1.2 * world.height()), 10.0};
    std::ostringstream out;
    out << svgdetail::svg_open(canvas);

    // vertices that are their own one-dimensional fundamental region
    auto own_region = [&g](const std::string& v) {
        for (const auto& e : g.edges)
            if ((e.end_a.size() == 1 && e.end_a[0] == v) ||
                (e.end_b.size() == 1 && e.end_b[0] == v))
                return false;
        return true;
    };

    for (const auto& e : g.edges) {
        const Vec2 center = layout.edge_pos.at(e.id);
        auto side_point = [&](const std::vector<std::string>& end, double sign) {
            if (!end.empty()) {
                Vec2 c{0.0, 0.0};
                for (const auto& v : end) c = c + layout.vertex_pos.at(v);
                c = (1.0 / end.size()) * c;
                return center + 0.8 * (c - center);
            }
            Vec2 dir{sign, 0.0};
            if (!e.end_a.empty() || !e.end_b.empty()) {
                const auto& other = end == e.end_a ? e.end_b : e.end_a;
                if (!other.empty()) {
                    Vec2 c{0.0, 0.0};
                    for (const auto& v : other) c = c + layout.vertex_pos.at(v);
                    c = (1.0 / other.size()) * c;
                    const Vec2 d = center - c;
                    const double len = norm(d);
                    if (len > 0) dir = {d.x / len, d.y / len};
                }
            }
            return center + 25.0 * dir;
        };
        const Vec2 a = canvas.to_px(side_point(e.end_a, -1.0));
        const Vec2 b = canvas.to_px(side_point(e.end_b, 1.0));
        out << "<line class=\"edge\" stroke=\"#333333\" stroke-width=\"2\" x1=\"" << fmt17(a.x)
            << "\" y1=\"" << fmt17(a.y) << "\" x2=\"" << fmt17(b.x) << "\" y2=\"" << fmt17(b.y)
            << "\"/>\n";
        const Vec2 c = canvas.to_px(center);
        out << "<text class=\"edge-label\" font-size=\"11\" x=\"" << fmt17(c.x) << "\" y=\""
            << fmt17(c.y - 8.0) << "\">" << svgdetail::escape(e.id) << "</text>\n";
    }

    for (const auto& v : g.vertices) {
        const Vec2 p = canvas.to_px(layout.vertex_pos.at(v));
        if (own_region(v))
            out << "<rect class=\"vertex own-region\" fill=\"#cc2222\" x=\"" << fmt17(p.x - 4.0)
                << "\" y=\"" << fmt17(p.y - 4.0) << "\" width=\"8\" height=\"8\"/>\n";
        else
            out << "<circle class=\"vertex\" fill=\"#222288\" cx=\"" << fmt17(p.x) << "\" cy=\""
                << fmt17(p.y) << "\" r=\"4\"/>\n";
        out << "<text class=\"vertex-label\" font-size=\"11\" x=\"" << fmt17(p.x + 6.0)
            << "\" y=\"" << fmt17(p.y + 12.0) << "\">" << svgdetail::escape(v) << "</text>\n";
    }

    // order annotations beside non-separable clusters
    for (const auto& e : g.edges)
        for (const auto* end : {&e.end_a, &e.end_b}) {
            if (end->size() < 2) continue;
            std::string label;
            for (std::size_t i = 0; i < end->size(); ++i) {
                if (i) label += " < ";
                label += (*end)[i];
            }
            const Vec2 c = canvas.to_px(layout.edge_pos.at(e.id));
            out << "<text class=\"order\" font-size=\"10\" fill=\"#666666\" x=\"" << fmt17(c.x)
                << "\" y=\"" << fmt17(c.y + 18.0) << "\">" << svgdetail::escape(label)
                << "</text>\n";
        }

    out << "</svg>\n";
    return out.str();
}

}  // namespace planefol
