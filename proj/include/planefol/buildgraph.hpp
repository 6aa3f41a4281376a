#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "planefol/bandflow.hpp"
#include "planefol/leafspace.hpp"

namespace planefol {

namespace detail {

// lines[i] is a branch leaf iff it bounds a transition band whose boundary
// dirs differ: only there do nearby leaves escape together to the same end.
inline std::vector<bool> branch_lines(const BandFlowSpec& s) {
    std::vector<bool> branch(s.lines.size(), false);
    for (std::size_t k = 0; k < s.bands.size(); ++k) {
        if (s.bands[k].kind != Band::Kind::Transition) continue;
        if (s.lines[k - 1].dir != s.lines[k].dir) {
            branch[k - 1] = true;
            branch[k] = true;
        }
    }
    return branch;
}

}  // namespace detail

// Symbolic leaf space of a band flow. Edges are maximal runs of bands not
// separated by a branch line; an opposite-dir transition attaches both its
// boundary vertices in one end list (on the end its leaves escape toward,
// determined by sign and dirs, endA = down / endB = up), ordered by the
// traversal order of the oriented crossing leaves: a leaf visits the left
// boundary line first when sign is +1, the right one first when sign is -1.
// That order is an invariant of the oriented foliation, so replacing the
// mapping by its inverse reverses it. A run edge attaches at most one vertex
// per side (endA = left, endB = right); equal-dir transitions merge silently
// into their run.
inline LeafSpaceGraph build_leaf_space(const BandFlowSpec& s) {
    require_valid(s);
    const auto branch = detail::branch_lines(s);

    LeafSpaceGraph g;
    std::vector<std::string> vertex_of_line(s.lines.size());
    for (std::size_t i = 0; i < s.lines.size(); ++i) {
        if (!branch[i]) continue;
        vertex_of_line[i] = "v" + std::to_string(g.vertices.size());
        g.vertices.push_back(vertex_of_line[i]);
    }

    // valid specs have invariant outer bands, so a transition band at index k
    // always has boundary lines k-1 and k
    auto is_branch_transition = [&s](std::size_t k) {
        return s.bands[k].kind == Band::Kind::Transition &&
               s.lines[k - 1].dir != s.lines[k].dir;
    };

    std::size_t k = 0;
    while (k < s.bands.size()) {
        const std::string id = "e" + std::to_string(g.edges.size());
        LeafEdge e{id, {}, {}};
        if (is_branch_transition(k)) {
            const BoundaryLine& left = s.lines[k - 1];
            const std::string first =
                s.bands[k].sign == 1 ? vertex_of_line[k - 1] : vertex_of_line[k];
            const std::string second =
                s.bands[k].sign == 1 ? vertex_of_line[k] : vertex_of_line[k - 1];
            auto& end = (s.bands[k].sign * left.dir == 1) ? e.end_b : e.end_a;
            end = {first, second};
            ++k;
        } else {
            if (k > 0 && branch[k - 1]) e.end_a = {vertex_of_line[k - 1]};
            while (k < s.bands.size()) {
                if (k < s.lines.size() && branch[k]) {  // run ends at this line
                    e.end_b = {vertex_of_line[k]};
                    ++k;
                    break;
                }
                ++k;
            }
        }
        g.edges.push_back(std::move(e));
    }

    require_valid(g);
    return g;
}

// Leaf space of a pure translation: a single edge, no branch points.
inline LeafSpaceGraph translation_leaf_space() {
    return LeafSpaceGraph{{}, {LeafEdge{"e0", {}, {}}}};
}

}  // namespace planefol
