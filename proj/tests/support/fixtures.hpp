// Shared fixtures: the five-state example graph and its printed incidence
// matrices, frozen entry by entry.

#pragma once

#include "pathbound/graph.hpp"

#include <vector>

namespace fixtures {

// 5 nodes, edges (1,2),(1,3),(1,4),(2,3),(3,4),(3,5),(4,5).
inline pathbound::DegradationGraph fig1(double eta = 1.0, double gamma = 1.5) {
    std::vector<pathbound::Edge> edges{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {3, 4}, {3, 5}, {4, 5}};
    std::vector<pathbound::WeibullParams> params(edges.size(), {eta, gamma});
    return pathbound::DegradationGraph(5, edges, params);
}

inline pathbound::RationalMatrix fig1_incidence() {
    return pathbound::RationalMatrix::from_int_rows({
        {-1, -1, -1, 0, 0, 0, 0},
        {1, 0, 0, -1, 0, 0, 0},
        {0, 1, 0, 1, -1, -1, 0},
        {0, 0, 1, 0, 1, 0, -1},
        {0, 0, 0, 0, 0, 1, 1},
    });
}

inline pathbound::RationalMatrix fig1_extended() {
    return pathbound::RationalMatrix::from_int_rows({
        {-1, -1, -1, 0, 0, 0, 0, 1},
        {1, 0, 0, -1, 0, 0, 0, 1},
        {0, 1, 0, 1, -1, -1, 0, 1},
        {0, 0, 1, 0, 1, 0, -1, 1},
        {0, 0, 0, 0, 0, 1, 1, 1},
    });
}

// Two nodes joined by a single edge.
inline pathbound::DegradationGraph single_edge(double eta = 1.0, double gamma = 1.0) {
    return pathbound::DegradationGraph(2, {{1, 2}}, {{eta, gamma}});
}

// 1->2->3 versus the direct edge 1->3.
inline pathbound::DegradationGraph two_route(double eta = 1.0, double gamma = 1.0) {
    std::vector<pathbound::Edge> edges{{1, 2}, {2, 3}, {1, 3}};
    std::vector<pathbound::WeibullParams> params(edges.size(), {eta, gamma});
    return pathbound::DegradationGraph(3, edges, params);
}

} // namespace fixtures
