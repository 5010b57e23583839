// Degradation DAG: construction, validation, incidence matrices, demand
// vector, and exhaustive 1->n path enumeration for desk-scale oracles.
//
// Nodes are 1-based everywhere: node 1 is the new-system state, node n the
// unacceptable-degradation state. Edges keep input order; column j of the
// incidence matrix corresponds to edge j.

#pragma once

#include "pathbound/errors.hpp"
#include "pathbound/rational_linalg.hpp"
#include "pathbound/weibull.hpp"

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace pathbound {

struct Edge {
    int tail = 0;
    int head = 0;
};

class DegradationGraph {
public:
    // Throws StructuralError on bad node ids, self-loops, or duplicate
    // (tail, head) pairs. Weibull parameter positivity is NOT enforced here;
    // validate() reports it so that bad files can still be diagnosed.
    DegradationGraph(int node_count, std::vector<Edge> edges,
                     std::vector<WeibullParams> edge_params);

    int node_count() const { return node_count_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<WeibullParams>& edge_params() const { return edge_params_; }
    int source() const { return 1; }
    int sink() const { return node_count_; }

private:
    int node_count_;
    std::vector<Edge> edges_;
    std::vector<WeibullParams> edge_params_;
};

struct GraphDiagnostics {
    bool acyclic = false;
    bool sink_reachable = false;     // node n reachable from node 1
    bool params_positive = false;    // eta > 0 and gamma > 0 on every edge
    bool all_nodes_reach_sink = false; // informational only, not gating
    std::vector<std::string> issues;

    bool pass() const { return acyclic && sink_reachable && params_positive; }
};

GraphDiagnostics validate(const DegradationGraph& g);

// Topological order of node ids, or empty vector if the graph has a cycle.
std::vector<int> topological_order(const DegradationGraph& g);

// n x m incidence matrix: column j has -1 in the tail row and +1 in the head
// row of edge j, zeros elsewhere.
RationalMatrix build_incidence(const DegradationGraph& g);

// [A0 | e]: appends an all-ones column, restoring full row rank.
RationalMatrix extend_incidence(const RationalMatrix& a0);

// [-1, 0, ..., 0, 1]: one unit leaves node 1 and arrives at node n.
RationalVector demand_vector(int n);

// A directed 1->n path as both an edge/node listing and a 0/1 LP vector.
struct PathVector {
    std::vector<int> edge_indices;  // 0-based positions into g.edges()
    std::vector<int> node_sequence; // 1, ..., n

    // Length m+1 vector with 1 on the path's edges and 0 elsewhere
    // (including the extended column).
    RationalVector as_vector(std::size_t edge_count) const;
};

// All directed 1->n paths, in DFS order with edges explored by index.
// Throws PreconditionError if the graph is cyclic and ResourceError if the
// number of paths exceeds the cap.
std::vector<PathVector> enumerate_paths(const DegradationGraph& g,
                                        std::size_t cap = 1'000'000);

// Line-oriented graph file:
//   nodes <n>
//   edge <tail> <head> eta=<float> gamma=<float>
// '#' starts a comment. Throws ParseError with the offending line number.
DegradationGraph parse_graph(std::istream& in);
DegradationGraph parse_graph_file(const std::string& path);

} // namespace pathbound
