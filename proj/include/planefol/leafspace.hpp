#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "planefol/geometry.hpp"

namespace planefol {

// One edge of a leaf-space graph. An edge stands for the open interval of
// leaves filling a two-dimensional fundamental region; end_a/end_b list the
// branch-point vertices adjacent to each end of that interval, in
// branch-point order (order is part of the structure, labels are not).
struct LeafEdge {
    std::string id;
    std::vector<std::string> end_a;
    std::vector<std::string> end_b;

    friend bool operator==(const LeafEdge& l, const LeafEdge& r) {
        return l.id == r.id && l.end_a == r.end_a && l.end_b == r.end_b;
    }
};

// Finite model of the oriented leaf space of a plane foliation: a
// simply connected, possibly non-Hausdorff 1-manifold. Vertices are exactly
// the branch-point leaves; two vertices are non-separable iff they share an
// end list.
struct LeafSpaceGraph {
    std::vector<std::string> vertices;
    std::vector<LeafEdge> edges;

    const LeafEdge* find_edge(const std::string& id) const {
        for (const auto& e : edges)
            if (e.id == id) return &e;
        return nullptr;
    }
    bool has_vertex(const std::string& id) const {
        return std::find(vertices.begin(), vertices.end(), id) != vertices.end();
    }

    friend bool operator==(const LeafSpaceGraph& l, const LeafSpaceGraph& r) {
        return l.vertices == r.vertices && l.edges == r.edges;
    }
};

enum class ViolationCode {
    DUP_ID,        // duplicate edge or vertex identifier
    UNDECLARED,    // end list mentions an undeclared vertex
    DUP_END,       // vertex repeated within one end list
    CYCLE,         // vertex in both ends of one edge, or cyclic incidence
    DEGREE,        // vertex without exactly two attachments on distinct edges
    NOT_BRANCH,    // vertex never shares an end list with another vertex
    DISCONNECTED,  // incidence structure not connected
    NONEMPTY,      // no edges at all
    TWO_REGIONS,   // derived fundamental-region count is exactly two
};

inline const char* to_string(ViolationCode c) {
    switch (c) {
        case ViolationCode::DUP_ID: return "DUP_ID";
        case ViolationCode::UNDECLARED: return "UNDECLARED";
        case ViolationCode::DUP_END: return "DUP_END";
        case ViolationCode::CYCLE: return "CYCLE";
        case ViolationCode::DEGREE: return "DEGREE";
        case ViolationCode::NOT_BRANCH: return "NOT_BRANCH";
        case ViolationCode::DISCONNECTED: return "DISCONNECTED";
        case ViolationCode::NONEMPTY: return "NONEMPTY";
        case ViolationCode::TWO_REGIONS: return "TWO_REGIONS";
    }
    return "?";
}

struct Violation {
    ViolationCode code;
    std::string message;
};

struct validation_error : error {
    explicit validation_error(std::vector<Violation> v)
        : error(v.empty() ? "invalid leaf-space graph"
                          : std::string(to_string(v.front().code)) + ": " + v.front().message),
          violations(std::move(v)) {}
    std::vector<Violation> violations;
};

// Where a vertex is attached: which edge, which end, which position in the list.
struct Attachment {
    std::size_t edge_index;
    bool at_end_b;
    std::size_t position;
};

inline std::map<std::string, std::vector<Attachment>> attachment_index(const LeafSpaceGraph& g) {
    std::map<std::string, std::vector<Attachment>> idx;
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        const auto& e = g.edges[i];
        for (std::size_t p = 0; p < e.end_a.size(); ++p)
            idx[e.end_a[p]].push_back({i, false, p});
        for (std::size_t p = 0; p < e.end_b.size(); ++p)
            idx[e.end_b[p]].push_back({i, true, p});
    }
    return idx;
}

// Fundamental-region count: one region per edge, plus one per vertex that is
// never alone in an end list. A vertex alone at some end bounds an invariant
// region that is closed and swallows it; a vertex that is always paired has
// transition regions on both sides and is its own one-dimensional region.
inline int region_count(const LeafSpaceGraph& g) {
    int count = static_cast<int>(g.edges.size());
    for (const auto& v : g.vertices) {
        bool alone = false;
        for (const auto& e : g.edges) {
            if ((e.end_a.size() == 1 && e.end_a[0] == v) ||
                (e.end_b.size() == 1 && e.end_b[0] == v))
                alone = true;
        }
        if (!alone) ++count;
    }
    return count;
}

inline std::vector<Violation> validate(const LeafSpaceGraph& g) {
    std::vector<Violation> out;
    auto add = [&out](ViolationCode c, std::string m) { out.push_back({c, std::move(m)}); };

    std::set<std::string> vertex_ids(g.vertices.begin(), g.vertices.end());
    if (vertex_ids.size() != g.vertices.size())
        add(ViolationCode::DUP_ID, "duplicate vertex identifier");
    std::set<std::string> edge_ids;
    for (const auto& e : g.edges)
        if (!edge_ids.insert(e.id).second)
            add(ViolationCode::DUP_ID, "duplicate edge identifier '" + e.id + "'");

    if (g.edges.empty()) add(ViolationCode::NONEMPTY, "graph has no edges");

    bool refs_ok = true;
    for (const auto& e : g.edges) {
        std::set<std::string> in_a, in_b;
        for (const auto& v : e.end_a) {
            if (!vertex_ids.count(v)) {
                add(ViolationCode::UNDECLARED, "edge '" + e.id + "' mentions undeclared vertex '" + v + "'");
                refs_ok = false;
            }
            if (!in_a.insert(v).second) {
                add(ViolationCode::DUP_END, "vertex '" + v + "' repeated in endA of edge '" + e.id + "'");
                refs_ok = false;
            }
        }
        for (const auto& v : e.end_b) {
            if (!vertex_ids.count(v)) {
                add(ViolationCode::UNDECLARED, "edge '" + e.id + "' mentions undeclared vertex '" + v + "'");
                refs_ok = false;
            }
            if (!in_b.insert(v).second) {
                add(ViolationCode::DUP_END, "vertex '" + v + "' repeated in endB of edge '" + e.id + "'");
                refs_ok = false;
            }
        }
        for (const auto& v : e.end_a)
            if (in_b.count(v)) {
                add(ViolationCode::CYCLE, "vertex '" + v + "' appears in both ends of edge '" + e.id + "'");
                refs_ok = false;
            }
    }
    if (!refs_ok) return out;

    const auto idx = attachment_index(g);
    for (const auto& v : g.vertices) {
        auto it = idx.find(v);
        const std::size_t deg = it == idx.end() ? 0 : it->second.size();
        if (deg != 2) {
            add(ViolationCode::DEGREE,
                "vertex '" + v + "' has " + std::to_string(deg) + " attachments, expected 2");
            continue;
        }
        if (it->second[0].edge_index == it->second[1].edge_index)
            add(ViolationCode::CYCLE, "vertex '" + v + "' attached twice to edge '" +
                                          g.edges[it->second[0].edge_index].id + "'");
    }

    for (const auto& v : g.vertices) {
        bool branch = false;
        for (const auto& e : g.edges) {
            auto in = [&v](const std::vector<std::string>& end) {
                return std::find(end.begin(), end.end(), v) != end.end();
            };
            if ((e.end_a.size() >= 2 && in(e.end_a)) || (e.end_b.size() >= 2 && in(e.end_b)))
                branch = true;
        }
        if (!branch)
            add(ViolationCode::NOT_BRANCH, "vertex '" + v + "' is not a branch point");
    }

    // Incidence multigraph on edges + vertices must be a tree
    // (simple connectivity of the leaf space).
    {
        const std::size_t n_edges = g.edges.size();
        const std::size_t n_nodes = n_edges + g.vertices.size();
        std::map<std::string, std::size_t> vnode;
        for (std::size_t i = 0; i < g.vertices.size(); ++i) vnode[g.vertices[i]] = n_edges + i;
        std::vector<std::vector<std::size_t>> adj(n_nodes);
        std::size_t arcs = 0;
        for (std::size_t i = 0; i < n_edges; ++i) {
            auto attach = [&](const std::vector<std::string>& end) {
                for (const auto& v : end) {
                    adj[i].push_back(vnode[v]);
                    adj[vnode[v]].push_back(i);
                    ++arcs;
                }
            };
            attach(g.edges[i].end_a);
            attach(g.edges[i].end_b);
        }
        if (n_nodes > 0) {
            std::vector<char> seen(n_nodes, 0);
            std::vector<std::size_t> stack{0};
            seen[0] = 1;
            std::size_t reached = 1;
            while (!stack.empty()) {
                const std::size_t u = stack.back();
                stack.pop_back();
                for (std::size_t w : adj[u])
                    if (!seen[w]) {
                        seen[w] = 1;
                        ++reached;
                        stack.push_back(w);
                    }
            }
            if (reached != n_nodes)
                add(ViolationCode::DISCONNECTED, "incidence structure is not connected");
            else if (arcs + 1 != n_nodes)
                add(ViolationCode::CYCLE, "incidence structure contains a cycle");
        }
    }

    if (out.empty() && region_count(g) == 2)
        add(ViolationCode::TWO_REGIONS, "derived fundamental-region count is exactly two");

    return out;
}

inline void require_valid(const LeafSpaceGraph& g) {
    auto v = validate(g);
    if (!v.empty()) throw validation_error(std::move(v));
}

// Replacing the mapping by its inverse reverses every leaf, hence the
// branch-point order at every end. An involution.
inline LeafSpaceGraph reverse_orientation(const LeafSpaceGraph& g) {
    LeafSpaceGraph r = g;
    for (auto& e : r.edges) {
        std::reverse(e.end_a.begin(), e.end_a.end());
        std::reverse(e.end_b.begin(), e.end_b.end());
    }
    return r;
}

}  // namespace planefol
