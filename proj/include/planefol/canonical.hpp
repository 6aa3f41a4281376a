#pragma once

#include <algorithm>
#include <string>

#include "planefol/leafspace.hpp"

namespace planefol {

namespace detail {

// Rooted encoding of the incidence tree with end-order decorations.
// "^" marks the position of the vertex we arrived from; the two ends are
// serialized in both flip orders and the smaller string is kept, since an
// isomorphism may flip each edge independently. Within-end order is encoded
// as-is because it must be preserved forward.
inline std::string encode_edge(const LeafSpaceGraph& g,
                               const std::map<std::string, std::vector<Attachment>>& idx,
                               std::size_t edge_index, const std::string& parent_vertex);

inline std::string encode_vertex(const LeafSpaceGraph& g,
                                 const std::map<std::string, std::vector<Attachment>>& idx,
                                 const std::string& vertex, std::size_t parent_edge) {
    const auto& att = idx.at(vertex);
    for (const auto& a : att)
        if (a.edge_index != parent_edge)
            return "(" + encode_edge(g, idx, a.edge_index, vertex) + ")";
    return "(!)";  // degree-1 vertex; not reachable for validated graphs
}

inline std::string encode_edge(const LeafSpaceGraph& g,
                               const std::map<std::string, std::vector<Attachment>>& idx,
                               std::size_t edge_index, const std::string& parent_vertex) {
    const LeafEdge& e = g.edges[edge_index];
    auto list = [&](const std::vector<std::string>& end) {
        std::string s = "[";
        for (const auto& v : end)
            s += v == parent_vertex ? "^" : encode_vertex(g, idx, v, edge_index);
        s += "]";
        return s;
    };
    const std::string a = list(e.end_a), b = list(e.end_b);
    return "E" + std::min(a + "|" + b, b + "|" + a);
}

}  // namespace detail

// Canonical labeling of the decorated incidence tree: the minimum rooted
// encoding over all root-edge choices. Two valid graphs have equal canonical
// forms iff they are isomorphic.
inline std::string canonical_form(const LeafSpaceGraph& g) {
    require_valid(g);
    const auto idx = attachment_index(g);
    std::string best;
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        std::string s = detail::encode_edge(g, idx, i, std::string());
        if (best.empty() || s < best) best = std::move(s);
    }
    return best;
}

}  // namespace planefol
