#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "planefol/leafspace.hpp"

namespace planefol {

// Witness of an order-preserving leaf-space homeomorphism. An isomorphism may
// swap the two ends of an edge (end_flip) but must map every end list forward:
// the branch-point order is never reversed.
struct Isomorphism {
    std::map<std::string, std::string> edge_map;
    std::map<std::string, std::string> vertex_map;
    std::map<std::string, bool> end_flip;
};

// Applies the witness mechanically and checks the image reproduces `to`
// exactly, including within-end order.
inline bool verify_isomorphism(const LeafSpaceGraph& from, const LeafSpaceGraph& to,
                               const Isomorphism& iso) {
    if (from.edges.size() != to.edges.size() || from.vertices.size() != to.vertices.size())
        return false;
    auto map_list = [&iso](const std::vector<std::string>& in,
                           std::vector<std::string>& out) {
        out.clear();
        for (const auto& v : in) {
            auto it = iso.vertex_map.find(v);
            if (it == iso.vertex_map.end()) return false;
            out.push_back(it->second);
        }
        return true;
    };
    std::set<std::string> used_targets;
    for (const auto& e : from.edges) {
        auto em = iso.edge_map.find(e.id);
        auto fl = iso.end_flip.find(e.id);
        if (em == iso.edge_map.end() || fl == iso.end_flip.end()) return false;
        if (!used_targets.insert(em->second).second) return false;
        const LeafEdge* t = to.find_edge(em->second);
        if (!t) return false;
        std::vector<std::string> a, b;
        if (!map_list(e.end_a, a) || !map_list(e.end_b, b)) return false;
        const auto& ta = fl->second ? t->end_b : t->end_a;
        const auto& tb = fl->second ? t->end_a : t->end_b;
        if (a != ta || b != tb) return false;
    }
    std::set<std::string> used_vertices;
    for (const auto& [v, w] : iso.vertex_map) {
        if (!from.has_vertex(v) || !to.has_vertex(w)) return false;
        if (!used_vertices.insert(w).second) return false;
    }
    return iso.vertex_map.size() == from.vertices.size();
}

namespace detail {

struct IsoSearch {
    const LeafSpaceGraph& g1;
    const LeafSpaceGraph& g2;
    std::vector<std::size_t> src_order;      // g1 edge indices sorted by id
    std::vector<std::size_t> tgt_order;      // g2 edge indices sorted by id
    std::vector<char> tgt_used;
    std::map<std::string, std::string> vmap;  // forward vertex map
    std::map<std::string, std::string> vrev;  // inverse vertex map
    Isomorphism result;

    IsoSearch(const LeafSpaceGraph& a, const LeafSpaceGraph& b) : g1(a), g2(b) {
        for (std::size_t i = 0; i < g1.edges.size(); ++i) src_order.push_back(i);
        for (std::size_t i = 0; i < g2.edges.size(); ++i) tgt_order.push_back(i);
        auto by_id1 = [&](std::size_t l, std::size_t r) { return g1.edges[l].id < g1.edges[r].id; };
        auto by_id2 = [&](std::size_t l, std::size_t r) { return g2.edges[l].id < g2.edges[r].id; };
        std::sort(src_order.begin(), src_order.end(), by_id1);
        std::sort(tgt_order.begin(), tgt_order.end(), by_id2);
        tgt_used.assign(g2.edges.size(), 0);
    }

    bool try_lists(const std::vector<std::string>& src, const std::vector<std::string>& tgt,
                   std::vector<std::pair<std::string, std::string>>& added) {
        if (src.size() != tgt.size()) return false;
        for (std::size_t i = 0; i < src.size(); ++i) {
            auto it = vmap.find(src[i]);
            if (it != vmap.end()) {
                if (it->second != tgt[i]) return false;
                continue;
            }
            if (vrev.count(tgt[i])) return false;
            vmap[src[i]] = tgt[i];
            vrev[tgt[i]] = src[i];
            added.emplace_back(src[i], tgt[i]);
        }
        return true;
    }

    void undo(const std::vector<std::pair<std::string, std::string>>& added) {
        for (const auto& [s, t] : added) {
            vmap.erase(s);
            vrev.erase(t);
        }
    }

    bool search(std::size_t k) {
        if (k == src_order.size()) return true;
        const LeafEdge& e = g1.edges[src_order[k]];
        for (std::size_t ti : tgt_order) {
            if (tgt_used[ti]) continue;
            const LeafEdge& t = g2.edges[ti];
            for (int flip = 0; flip < 2; ++flip) {
                const auto& ta = flip ? t.end_b : t.end_a;
                const auto& tb = flip ? t.end_a : t.end_b;
                if (e.end_a.size() != ta.size() || e.end_b.size() != tb.size()) continue;
                std::vector<std::pair<std::string, std::string>> added;
                if (try_lists(e.end_a, ta, added) && try_lists(e.end_b, tb, added)) {
                    tgt_used[ti] = 1;
                    result.edge_map[e.id] = t.id;
                    result.end_flip[e.id] = flip != 0;
                    if (search(k + 1)) return true;
                    tgt_used[ti] = 0;
                    result.edge_map.erase(e.id);
                    result.end_flip.erase(e.id);
                }
                undo(added);
            }
        }
        return false;
    }
};

}  // namespace detail

// Order-preserving isomorphism between two valid leaf-space graphs.
// Deterministic: returns the first witness in id-sorted search order,
// trying the unflipped assignment before the flipped one.
inline std::optional<Isomorphism> is_isomorphic(const LeafSpaceGraph& g1,
                                                const LeafSpaceGraph& g2) {
    require_valid(g1);
    require_valid(g2);
    if (g1.edges.size() != g2.edges.size() || g1.vertices.size() != g2.vertices.size())
        return std::nullopt;
    detail::IsoSearch s(g1, g2);
    if (!s.search(0)) return std::nullopt;
    s.result.vertex_map = s.vmap;
    return s.result;
}

enum class Verdict { ConjugateUpToInverse, NotConjugate };

struct EquivalenceResult {
    Verdict verdict = Verdict::NotConjugate;
    bool via_reversal = false;  // witness matches against the reversed second graph
    std::optional<Isomorphism> witness;
};

// Main decision: the time-one maps are conjugate up to inverse iff the
// oriented leaf spaces are isomorphic directly or after orientation reversal.
// For graphs built from flows the reversal branch is redundant, but it hardens
// the decision for hand-authored inputs.
inline EquivalenceResult decide_equivalence(const LeafSpaceGraph& g1, const LeafSpaceGraph& g2) {
    EquivalenceResult r;
    if (auto w = is_isomorphic(g1, g2)) {
        r.verdict = Verdict::ConjugateUpToInverse;
        r.witness = std::move(w);
        return r;
    }
    if (auto w = is_isomorphic(g1, reverse_orientation(g2))) {
        r.verdict = Verdict::ConjugateUpToInverse;
        r.via_reversal = true;
        r.witness = std::move(w);
        return r;
    }
    return r;
}

}  // namespace planefol
