#pragma once

#include <optional>
#include <string>

#include "planefol/bandflow.hpp"
#include "planefol/leafspace.hpp"

namespace planefol {

// The canonical three-region flow: opposite vertical translations joined by
// one crossing band.
inline BandFlowSpec reeb_flow_spec() {
    return {{{-1.0, 1}, {1.0, -1}},
            {Band::invariant(), Band::transition(1), Band::invariant()}};
}

// Two crossing bands back to back; the shared boundary line is its own
// one-dimensional fundamental region (five regions total).
inline BandFlowSpec double_reeb_flow_spec() {
    return {{{-2.0, 1}, {0.0, -1}, {2.0, 1}},
            {Band::invariant(), Band::transition(1), Band::transition(1), Band::invariant()}};
}

// Five regions arranged in a chain: not conjugate to the double Reeb flow
// although the region counts agree.
inline BandFlowSpec chain5_flow_spec() {
    return {{{-3.0, 1}, {-1.0, -1}, {1.0, -1}, {3.0, 1}},
            {Band::invariant(), Band::transition(1), Band::invariant(), Band::transition(1),
             Band::invariant()}};
}

// A crossing band between translations of the same direction: no branch
// leaves, leaf space is a line (conjugate to a translation).
inline BandFlowSpec equal_dir_flow_spec() {
    return {{{-1.0, 1}, {1.0, 1}},
            {Band::invariant(), Band::transition(1), Band::invariant()}};
}

// Reeb flow conjugated by the reflection about the y axis.
inline BandFlowSpec mirror_reeb_flow_spec() {
    return {{{-1.0, -1}, {1.0, 1}},
            {Band::invariant(), Band::transition(-1), Band::invariant()}};
}

inline LeafSpaceGraph reeb_graph() {
    return {{"vL", "vR"},
            {{"eL", {}, {"vL"}}, {"eM", {}, {"vL", "vR"}}, {"eR", {}, {"vR"}}}};
}

inline LeafSpaceGraph mirror_reeb_graph() {
    return {{"vL", "vR"},
            {{"eL", {}, {"vL"}}, {"eM", {}, {"vR", "vL"}}, {"eR", {}, {"vR"}}}};
}

inline LeafSpaceGraph trans_graph() { return {{}, {{"e0", {}, {}}}}; }

inline LeafSpaceGraph double_reeb_graph() {
    return {{"v1", "v2", "v3"},
            {{"e0", {}, {"v1"}},
             {"e1", {}, {"v1", "v2"}},
             {"e2", {"v2", "v3"}, {}},
             {"e3", {"v3"}, {}}}};
}

inline LeafSpaceGraph chain5_graph() {
    return {{"v1", "v2", "v3", "v4"},
            {{"e0", {}, {"v1"}},
             {"e1", {}, {"v1", "v2"}},
             {"e2", {"v2"}, {"v3"}},
             {"e3", {"v3", "v4"}, {}},
             {"e4", {"v4"}, {}}}};
}

// Four extreme edges around one triple branch cluster: three first order,
// one second order (the edge classification counts of the paper's fourth
// example foliation).
inline LeafSpaceGraph star4_graph() {
    return {{"v1", "v2", "v3"},
            {{"eT", {"v1", "v2", "v3"}, {}},
             {"e1", {"v1"}, {}},
             {"e2", {"v2"}, {}},
             {"e3", {"v3"}, {}}}};
}

}  // namespace planefol
