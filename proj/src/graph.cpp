#include "pathbound/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>

namespace pathbound {

DegradationGraph::DegradationGraph(int node_count, std::vector<Edge> edges,
                                   std::vector<WeibullParams> edge_params)
    : node_count_(node_count), edges_(std::move(edges)), edge_params_(std::move(edge_params)) {
    if (node_count_ < 2)
        throw StructuralError("graph needs at least 2 nodes, got " + std::to_string(node_count_));
    if (edge_params_.size() != edges_.size())
        throw StructuralError("edge parameter count does not match edge count");
    std::set<std::pair<int, int>> seen;
    for (std::size_t j = 0; j < edges_.size(); ++j) {
        const Edge& e = edges_[j];
        if (e.tail < 1 || e.tail > node_count_ || e.head < 1 || e.head > node_count_)
            throw StructuralError("edge " + std::to_string(j + 1) + " has node id outside 1.." +
                                  std::to_string(node_count_));
        if (e.tail == e.head)
            throw StructuralError("edge " + std::to_string(j + 1) + " is a self-loop at node " +
                                  std::to_string(e.tail));
        if (!seen.insert({e.tail, e.head}).second)
            throw StructuralError("duplicate edge (" + std::to_string(e.tail) + "," +
                                  std::to_string(e.head) + ")");
    }
}

std::vector<int> topological_order(const DegradationGraph& g) {
    const int n = g.node_count();
    std::vector<int> indegree(n + 1, 0);
    for (const Edge& e : g.edges()) ++indegree[e.head];
    std::vector<int> order;
    order.reserve(n);
    std::vector<int> queue;
    for (int v = 1; v <= n; ++v)
        if (indegree[v] == 0) queue.push_back(v);
    // smallest node id first keeps the order deterministic
    while (!queue.empty()) {
        auto it = std::min_element(queue.begin(), queue.end());
        const int v = *it;
        queue.erase(it);
        order.push_back(v);
        for (const Edge& e : g.edges())
            if (e.tail == v && --indegree[e.head] == 0) queue.push_back(e.head);
    }
    if (static_cast<int>(order.size()) != n) return {};
    return order;
}

namespace {

std::vector<bool> reachable_from(const DegradationGraph& g, int start, bool reverse) {
    std::vector<bool> seen(g.node_count() + 1, false);
    std::vector<int> stack{start};
    seen[start] = true;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (const Edge& e : g.edges()) {
            const int from = reverse ? e.head : e.tail;
            const int to = reverse ? e.tail : e.head;
            if (from == v && !seen[to]) {
                seen[to] = true;
                stack.push_back(to);
            }
        }
    }
    return seen;
}

} // namespace

GraphDiagnostics validate(const DegradationGraph& g) {
    GraphDiagnostics d;
    d.acyclic = !topological_order(g).empty();
    if (!d.acyclic) d.issues.push_back("graph contains a directed cycle");

    const auto forward = reachable_from(g, g.source(), /*reverse=*/false);
    d.sink_reachable = forward[g.sink()];
    if (!d.sink_reachable)
        d.issues.push_back("sink node " + std::to_string(g.sink()) +
                           " is not reachable from node 1");

    d.params_positive = true;
    for (std::size_t j = 0; j < g.edge_params().size(); ++j) {
        if (!params_valid(g.edge_params()[j])) {
            d.params_positive = false;
            d.issues.push_back("edge " + std::to_string(j + 1) +
                               " has non-positive Weibull parameters");
        }
    }

    const auto to_sink = reachable_from(g, g.sink(), /*reverse=*/true);
    d.all_nodes_reach_sink =
        std::all_of(to_sink.begin() + 1, to_sink.end(), [](bool b) { return b; });
    return d;
}

RationalMatrix build_incidence(const DegradationGraph& g) {
    RationalMatrix a0(g.node_count(), g.edge_count());
    for (std::size_t j = 0; j < g.edge_count(); ++j) {
        const Edge& e = g.edges()[j];
        a0.at(e.tail - 1, j) = -1;
        a0.at(e.head - 1, j) = 1;
    }
    return a0;
}

RationalMatrix extend_incidence(const RationalMatrix& a0) {
    RationalMatrix a(a0.rows(), a0.cols() + 1);
    for (std::size_t r = 0; r < a0.rows(); ++r) {
        for (std::size_t c = 0; c < a0.cols(); ++c) a.at(r, c) = a0.at(r, c);
        a.at(r, a0.cols()) = 1;
    }
    return a;
}

RationalVector demand_vector(int n) {
    if (n < 2) throw StructuralError("demand vector needs n >= 2");
    RationalVector b(n);
    b[0] = -1;
    b[n - 1] = 1;
    return b;
}

RationalVector PathVector::as_vector(std::size_t edge_count) const {
    RationalVector x(edge_count + 1);
    for (int j : edge_indices) x[j] = 1;
    return x;
}

std::vector<PathVector> enumerate_paths(const DegradationGraph& g, std::size_t cap) {
    if (topological_order(g).empty())
        throw PreconditionError("path enumeration requires an acyclic graph");

    // out-edges by tail, in edge-index order
    std::vector<std::vector<int>> out(g.node_count() + 1);
    for (std::size_t j = 0; j < g.edge_count(); ++j) out[g.edges()[j].tail].push_back(static_cast<int>(j));

    std::vector<PathVector> paths;
    std::vector<int> edge_stack;
    std::vector<int> node_stack{g.source()};

    // depth-first walk; frame i holds the next out-edge position of node_stack[i]
    std::vector<std::size_t> pos{0};
    while (!pos.empty()) {
        const int v = node_stack.back();
        if (v == g.sink()) {
            if (paths.size() >= cap)
                throw ResourceError("path enumeration cap of " + std::to_string(cap) +
                                    " exceeded");
            paths.push_back({edge_stack, node_stack});
            pos.pop_back();
            node_stack.pop_back();
            if (!edge_stack.empty()) edge_stack.pop_back();
            continue;
        }
        if (pos.back() < out[v].size()) {
            const int j = out[v][pos.back()++];
            edge_stack.push_back(j);
            node_stack.push_back(g.edges()[j].head);
            pos.push_back(0);
        } else {
            pos.pop_back();
            node_stack.pop_back();
            if (!edge_stack.empty()) edge_stack.pop_back();
        }
    }
    return paths;
}

namespace {

bool parse_keyed_double(const std::string& token, const std::string& key, double& out) {
    if (token.rfind(key + "=", 0) != 0) return false;
    const std::string value = token.substr(key.size() + 1);
    std::size_t used = 0;
    try {
        out = std::stod(value, &used);
    } catch (const std::exception&) {
        return false;
    }
    return used == value.size();
}

} // namespace

DegradationGraph parse_graph(std::istream& in) {
    int node_count = -1;
    std::vector<Edge> edges;
    std::vector<WeibullParams> params;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word)) continue; // blank or comment-only
        if (word == "nodes") {
            if (node_count != -1) throw ParseError(line_no, "duplicate 'nodes' line");
            if (!(ls >> node_count) || node_count < 2)
                throw ParseError(line_no, "'nodes' needs an integer >= 2");
        } else if (word == "edge") {
            if (node_count == -1) throw ParseError(line_no, "'edge' before 'nodes'");
            Edge e;
            if (!(ls >> e.tail >> e.head))
                throw ParseError(line_no, "'edge' needs integer tail and head");
            std::string t1, t2;
            if (!(ls >> t1 >> t2))
                throw ParseError(line_no, "'edge' needs eta=<float> and gamma=<float>");
            WeibullParams p;
            bool got_eta = parse_keyed_double(t1, "eta", p.eta) ||
                           parse_keyed_double(t2, "eta", p.eta);
            bool got_gamma = parse_keyed_double(t1, "gamma", p.gamma) ||
                             parse_keyed_double(t2, "gamma", p.gamma);
            if (!got_eta || !got_gamma)
                throw ParseError(line_no, "expected eta=<float> and gamma=<float>, got '" + t1 +
                                              " " + t2 + "'");
            std::string extra;
            if (ls >> extra) throw ParseError(line_no, "unexpected trailing token '" + extra + "'");
            edges.push_back(e);
            params.push_back(p);
        } else {
            throw ParseError(line_no, "unknown directive '" + word + "'");
        }
    }
    if (node_count == -1) throw ParseError(line_no, "missing 'nodes' line");
    try {
        return DegradationGraph(node_count, std::move(edges), std::move(params));
    } catch (const StructuralError& e) {
        throw ParseError(line_no, e.what());
    }
}

DegradationGraph parse_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw StructuralError("cannot open graph file: " + path);
    return parse_graph(in);
}

} // namespace pathbound
