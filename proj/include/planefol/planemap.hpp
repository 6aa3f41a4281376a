#pragma once

#include <cmath>
#include <memory>
#include <utility>
#include <vector>

#include "planefol/geometry.hpp"

namespace planefol {

// Expression tree of explicit plane homeomorphisms used as conjugators.
// Every node is invertible; inverses are closed-form (primitive inverses,
// reversed composition), never numeric.
class PlaneMap {
public:
    enum class Kind { Translation, LinearDiag, Antipodal, ReflectionY, General2x2, Compose, Inverse };

    static PlaneMap identity() { return translation(0.0, 0.0); }
    static PlaneMap translation(double a, double b) {
        return PlaneMap(node(Kind::Translation, {a, b, 0, 0}, {}));
    }
    static PlaneMap linear_diag(double u, double v) {
        if (u == 0.0 || v == 0.0 || !std::isfinite(u) || !std::isfinite(v))
            throw error("linear_diag: scale factors must be nonzero and finite");
        return PlaneMap(node(Kind::LinearDiag, {u, v, 0, 0}, {}));
    }
    static PlaneMap antipodal() { return PlaneMap(node(Kind::Antipodal, {}, {})); }
    static PlaneMap reflection_y() { return PlaneMap(node(Kind::ReflectionY, {}, {})); }
    // Row-major matrix [[m00, m01], [m10, m11]].
    static PlaneMap general(double m00, double m01, double m10, double m11) {
        const double det = m00 * m11 - m01 * m10;
        if (det == 0.0 || !std::isfinite(det))
            throw error("general: matrix must be invertible");
        return PlaneMap(node(Kind::General2x2, {m00, m01, m10, m11}, {}));
    }
    static PlaneMap compose(std::vector<PlaneMap> maps) {
        std::vector<NodePtr> children;
        children.reserve(maps.size());
        for (auto& m : maps) children.push_back(m.root_);
        return PlaneMap(node(Kind::Compose, {}, std::move(children)));
    }
    static PlaneMap inverse(const PlaneMap& m) {
        return PlaneMap(node(Kind::Inverse, {}, {m.root_}));
    }

    // compose(a, b) applies b first: (a o b)(p) = a(b(p)).
    friend PlaneMap operator*(const PlaneMap& a, const PlaneMap& b) {
        return compose({a, b});
    }

    Vec2 operator()(Vec2 p) const { return eval(*root_, p); }

    PlaneMap inverted() const { return PlaneMap(invert(root_)); }

    // Determinant sign: +1 orientation preserving, -1 reversing.
    int orientation() const { return orientation(*root_); }

    Kind kind() const { return root_->kind; }
    const std::vector<double>& params() const { return root_->p; }
    std::vector<PlaneMap> children() const {
        std::vector<PlaneMap> out;
        for (const auto& c : root_->children) out.push_back(PlaneMap(c));
        return out;
    }

private:
    struct Node {
        Kind kind;
        std::vector<double> p;
        std::vector<std::shared_ptr<const Node>> children;
    };
    using NodePtr = std::shared_ptr<const Node>;

    explicit PlaneMap(NodePtr root) : root_(std::move(root)) {}

    static NodePtr node(Kind k, std::vector<double> p, std::vector<NodePtr> children) {
        return std::make_shared<const Node>(Node{k, std::move(p), std::move(children)});
    }

    static Vec2 eval(const Node& n, Vec2 q) {
        switch (n.kind) {
            case Kind::Translation: return {q.x + n.p[0], q.y + n.p[1]};
            case Kind::LinearDiag: return {n.p[0] * q.x, n.p[1] * q.y};
            case Kind::Antipodal: return {-q.x, -q.y};
            case Kind::ReflectionY: return {-q.x, q.y};
            case Kind::General2x2:
                return {n.p[0] * q.x + n.p[1] * q.y, n.p[2] * q.x + n.p[3] * q.y};
            case Kind::Compose:
                for (auto it = n.children.rbegin(); it != n.children.rend(); ++it)
                    q = eval(**it, q);
                return q;
            case Kind::Inverse: return eval(*invert(n.children[0]), q);
        }
        throw error("eval: bad node");
    }

    static NodePtr invert(const NodePtr& n) {
        switch (n->kind) {
            case Kind::Translation: return node(Kind::Translation, {-n->p[0], -n->p[1], 0, 0}, {});
            case Kind::LinearDiag:
                return node(Kind::LinearDiag, {1.0 / n->p[0], 1.0 / n->p[1], 0, 0}, {});
            case Kind::Antipodal:
            case Kind::ReflectionY: return n;  // involutions
            case Kind::General2x2: {
                const double det = n->p[0] * n->p[3] - n->p[1] * n->p[2];
                return node(Kind::General2x2,
                            {n->p[3] / det, -n->p[1] / det, -n->p[2] / det, n->p[0] / det}, {});
            }
            case Kind::Compose: {
                std::vector<NodePtr> rev;
                for (auto it = n->children.rbegin(); it != n->children.rend(); ++it)
                    rev.push_back(invert(*it));
                return node(Kind::Compose, {}, std::move(rev));
            }
            case Kind::Inverse: return n->children[0];
        }
        throw error("invert: bad node");
    }

    static int orientation(const Node& n) {
        switch (n.kind) {
            case Kind::Translation:
            case Kind::Antipodal: return 1;
            case Kind::ReflectionY: return -1;
            case Kind::LinearDiag: return n.p[0] * n.p[1] > 0.0 ? 1 : -1;
            case Kind::General2x2:
                return n.p[0] * n.p[3] - n.p[1] * n.p[2] > 0.0 ? 1 : -1;
            case Kind::Compose: {
                int sign = 1;
                for (const auto& c : n.children) sign *= orientation(*c);
                return sign;
            }
            case Kind::Inverse: return orientation(*n.children[0]);
        }
        throw error("orientation: bad node");
    }

    NodePtr root_;
};

}  // namespace planefol
