#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "planefol/leafspace.hpp"

namespace planefol {

enum class EdgeClass {
    NonExtreme,
    FirstOrderExtreme,   // one end empty, exactly one boundary vertex
    SecondOrderExtreme,  // one end empty, two or more boundary vertices
    FinalPointReady,     // both ends empty: a lone interval, contractible directly
};

inline const char* to_string(EdgeClass c) {
    switch (c) {
        case EdgeClass::NonExtreme: return "NonExtreme";
        case EdgeClass::FirstOrderExtreme: return "FirstOrderExtreme";
        case EdgeClass::SecondOrderExtreme: return "SecondOrderExtreme";
        case EdgeClass::FinalPointReady: return "FinalPointReady";
    }
    return "?";
}

inline EdgeClass classify_edge(const LeafEdge& e) {
    const std::size_t boundary = e.end_a.size() + e.end_b.size();
    if (!e.end_a.empty() && !e.end_b.empty()) return EdgeClass::NonExtreme;
    if (boundary == 0) return EdgeClass::FinalPointReady;
    return boundary == 1 ? EdgeClass::FirstOrderExtreme : EdgeClass::SecondOrderExtreme;
}

// Accepts intermediate contraction states as well as valid graphs.
inline std::map<std::string, EdgeClass> classify_edges(const LeafSpaceGraph& g) {
    std::map<std::string, EdgeClass> out;
    for (const auto& e : g.edges) out[e.id] = classify_edge(e);
    return out;
}

enum class StepKind { FirstOrder, SecondOrder, FinalPoint };

inline const char* to_string(StepKind k) {
    switch (k) {
        case StepKind::FirstOrder: return "FirstOrder";
        case StepKind::SecondOrder: return "SecondOrder";
        case StepKind::FinalPoint: return "FinalPoint";
    }
    return "?";
}

struct ContractionStep {
    int round = 0;
    StepKind kind = StepKind::FirstOrder;
    std::string collapsed_edge;
    std::optional<std::string> through_vertex;
    std::optional<std::string> absorbing_edge;
};

// Record of the deformation-retraction sequence that contracts the leaf
// space to a point: rounds of extreme-edge collapses, first order before
// second order, ending with the one remaining edge. Intermediate states may
// break the branch-point and degree invariants.
struct ContractionTrace {
    std::vector<ContractionStep> steps;
    std::vector<LeafSpaceGraph> states;  // states[0] is the input, one state per step after
};

namespace detail {

inline void erase_vertex(LeafSpaceGraph& g, const std::string& v) {
    g.vertices.erase(std::remove(g.vertices.begin(), g.vertices.end(), v), g.vertices.end());
    for (auto& e : g.edges) {
        e.end_a.erase(std::remove(e.end_a.begin(), e.end_a.end(), v), e.end_a.end());
        e.end_b.erase(std::remove(e.end_b.begin(), e.end_b.end(), v), e.end_b.end());
    }
}

inline void erase_edge(LeafSpaceGraph& g, const std::string& id) {
    g.edges.erase(std::remove_if(g.edges.begin(), g.edges.end(),
                                 [&](const LeafEdge& e) { return e.id == id; }),
                  g.edges.end());
}

// The edge other than `edge_id` the vertex is attached to, if any.
inline std::optional<std::string> other_edge(const LeafSpaceGraph& g, const std::string& v,
                                             const std::string& edge_id) {
    for (const auto& e : g.edges) {
        if (e.id == edge_id) continue;
        if (std::find(e.end_a.begin(), e.end_a.end(), v) != e.end_a.end() ||
            std::find(e.end_b.begin(), e.end_b.end(), v) != e.end_b.end())
            return e.id;
    }
    return std::nullopt;
}

inline std::vector<std::string> edges_of_class(const LeafSpaceGraph& g, EdgeClass c) {
    std::vector<std::string> ids;
    for (const auto& e : g.edges)
        if (classify_edge(e) == c) ids.push_back(e.id);
    std::sort(ids.begin(), ids.end());
    return ids;
}

inline bool any_first_order(const LeafSpaceGraph& g) {
    for (const auto& e : g.edges)
        if (classify_edge(e) == EdgeClass::FirstOrderExtreme) return true;
    return false;
}

}  // namespace detail

// Contracts a valid graph to a point. Each round takes a snapshot of the
// first-order extreme edges and collapses them (id order, re-checked at each
// turn), then a snapshot of the second-order extreme edges; a second-order
// collapse is allowed only while no first-order extreme edge exists, so the
// absorber an earlier first-order collapse needs is never destroyed first.
// A second-order collapse removes the lexicographically smallest boundary
// vertex; the remaining vertices of the collapsed end keep their other
// attachment. Terminates with FinalPoint on the single remaining edge.
inline ContractionTrace collapse_sequence(const LeafSpaceGraph& input) {
    require_valid(input);
    ContractionTrace trace;
    LeafSpaceGraph g = input;
    trace.states.push_back(g);

    auto record = [&](ContractionStep step) {
        trace.steps.push_back(std::move(step));
        trace.states.push_back(g);
    };

    for (int round = 1;; ++round) {
        if (g.edges.size() == 1) {
            const std::string last = g.edges[0].id;
            g.edges.clear();
            g.vertices.clear();
            record({round, StepKind::FinalPoint, last, std::nullopt, std::nullopt});
            return trace;
        }

        const std::size_t edges_at_round_start = g.edges.size();

        for (const auto& id : detail::edges_of_class(g, EdgeClass::FirstOrderExtreme)) {
            const LeafEdge* e = g.find_edge(id);
            if (!e || classify_edge(*e) != EdgeClass::FirstOrderExtreme) continue;
            const std::string v = e->end_a.empty() ? e->end_b[0] : e->end_a[0];
            const auto absorber = detail::other_edge(g, v, id);
            detail::erase_edge(g, id);
            detail::erase_vertex(g, v);
            record({round, StepKind::FirstOrder, id, v, absorber});
        }

        for (const auto& id : detail::edges_of_class(g, EdgeClass::SecondOrderExtreme)) {
            if (detail::any_first_order(g)) break;
            const LeafEdge* e = g.find_edge(id);
            if (!e || classify_edge(*e) != EdgeClass::SecondOrderExtreme) continue;
            std::vector<std::string> boundary = e->end_a.empty() ? e->end_b : e->end_a;
            std::sort(boundary.begin(), boundary.end());
            const std::string v = boundary.front();
            const auto absorber = detail::other_edge(g, v, id);
            detail::erase_edge(g, id);
            detail::erase_vertex(g, v);
            record({round, StepKind::SecondOrder, id, v, absorber});
        }

        if (g.edges.size() == 1) {
            const std::string last = g.edges[0].id;
            g.edges.clear();
            g.vertices.clear();
            record({round, StepKind::FinalPoint, last, std::nullopt, std::nullopt});
            return trace;
        }
        if (g.edges.size() >= edges_at_round_start)
            throw error("collapse_sequence: no progress in round " + std::to_string(round) +
                        "; graph not reducible to a point");
    }
}

}  // namespace planefol
