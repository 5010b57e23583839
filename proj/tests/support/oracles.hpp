// Test-only oracles, independent of the implementation paths they referee:
// adaptive quadrature, Laplace-expansion determinants, plain-division rank,
// recursive path enumeration, and a seeded random DAG generator.

#pragma once

#include "pathbound/graph.hpp"
#include "pathbound/rational_linalg.hpp"

#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>
#include <vector>

namespace oracles {

// --- adaptive Simpson quadrature -----------------------------------------

inline double simpson(const std::function<double(double)>& f, double a, double b, double fa,
                      double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

inline double adaptive_simpson_rec(const std::function<double(double)>& f, double a, double b,
                                   double fa, double fm, double fb, double whole, double tol,
                                   int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = simpson(f, a, m, fa, flm, fm);
    const double right = simpson(f, m, b, fm, frm, fb);
    const double delta = left + right - whole;
    if (depth <= 0) return left + right + delta / 15.0;
    if (std::fabs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return adaptive_simpson_rec(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
           adaptive_simpson_rec(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-13, int depth = 60) {
    if (a == b) return 0.0;
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const double whole = simpson(f, a, b, fa, fm, fb);
    return adaptive_simpson_rec(f, a, b, fa, fm, fb, whole, tol, depth);
}

// Upper incomplete gamma by quadrature. The substitution t = u^2 keeps the
// integrand smooth near t=0 when a < 1; the tolerance scales with the
// integrand magnitude so tiny tails keep their relative accuracy.
inline double upper_gamma_quadrature(double a, double x) {
    const double cut = std::max(x, 1.0);
    const double far = cut + 150.0;
    const double scale = std::pow(std::max(x, 0.5), a - 1.0) * std::exp(-x);
    const double tol = 1e-13 * std::max(scale, 1e-280);
    auto integrand = [a](double t) { return std::pow(t, a - 1.0) * std::exp(-t); };
    double head = 0.0;
    if (x < cut) {
        auto subst = [a](double u) { return 2.0 * std::pow(u, 2.0 * a - 1.0) * std::exp(-u * u); };
        head = integrate(subst, std::sqrt(x), std::sqrt(cut), tol);
    }
    return head + integrate(integrand, cut, far, tol);
}

// --- exact determinant by Laplace expansion (first row) -------------------

inline pathbound::Rational laplace_determinant(const pathbound::RationalMatrix& m) {
    using pathbound::Rational;
    using pathbound::RationalMatrix;
    const std::size_t n = m.rows();
    if (n != m.cols()) throw std::invalid_argument("square matrix required");
    if (n == 0) return Rational(1);
    if (n == 1) return m.at(0, 0);
    Rational det = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (m.at(0, c) == 0) continue;
        RationalMatrix minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t jj = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == c) continue;
                minor.at(i - 1, jj++) = m.at(i, j);
            }
        }
        const Rational term = m.at(0, c) * laplace_determinant(minor);
        det += (c % 2 == 0) ? term : -term;
    }
    return det;
}

// --- rank by ordinary exact Gaussian elimination (pivot division) ---------

inline int gauss_rank(pathbound::RationalMatrix m) {
    using pathbound::Rational;
    const std::size_t nr = m.rows(), nc = m.cols();
    std::size_t row = 0;
    for (std::size_t col = 0; col < nc && row < nr; ++col) {
        std::size_t p = row;
        while (p < nr && m.at(p, col) == 0) ++p;
        if (p == nr) continue;
        for (std::size_t j = 0; j < nc; ++j) std::swap(m.at(p, j), m.at(row, j));
        const Rational pivot = m.at(row, col);
        for (std::size_t i = row + 1; i < nr; ++i) {
            const Rational f = m.at(i, col) / pivot;
            for (std::size_t j = col; j < nc; ++j) m.at(i, j) -= f * m.at(row, j);
        }
        ++row;
    }
    return static_cast<int>(row);
}

// --- recursive exhaustive path enumeration --------------------------------

inline void dfs_paths(const pathbound::DegradationGraph& g, int v, std::vector<int>& nodes,
                      std::vector<std::vector<int>>& out) {
    if (v == g.sink()) {
        out.push_back(nodes);
        return;
    }
    for (const auto& e : g.edges()) {
        if (e.tail != v) continue;
        nodes.push_back(e.head);
        dfs_paths(g, e.head, nodes, out);
        nodes.pop_back();
    }
}

inline std::vector<std::vector<int>> all_paths_by_nodes(const pathbound::DegradationGraph& g) {
    std::vector<std::vector<int>> out;
    std::vector<int> nodes{g.source()};
    dfs_paths(g, g.source(), nodes, out);
    return out;
}

// Exhaustive shortest path over the enumerated node paths.
inline double brute_shortest(const pathbound::DegradationGraph& g,
                             const std::vector<double>& costs) {
    auto edge_index = [&](int tail, int head) {
        for (std::size_t j = 0; j < g.edge_count(); ++j)
            if (g.edges()[j].tail == tail && g.edges()[j].head == head) return j;
        throw std::logic_error("edge not found");
    };
    double best = std::numeric_limits<double>::infinity();
    for (const auto& nodes : all_paths_by_nodes(g)) {
        double len = 0.0;
        for (std::size_t i = 0; i + 1 < nodes.size(); ++i)
            len += costs[edge_index(nodes[i], nodes[i + 1])];
        best = std::min(best, len);
    }
    return best;
}

// --- seeded random DAG generator -------------------------------------------

// Random DAG on n nodes whose edges always include a 1 -> ... -> n backbone,
// oriented low -> high so the graph is acyclic by construction.
inline pathbound::DegradationGraph random_dag(std::mt19937_64& rng, int n, int extra_edges,
                                              double gamma_lo = 1.0, double gamma_hi = 2.0) {
    using pathbound::Edge;
    using pathbound::WeibullParams;
    std::vector<Edge> edges;
    std::vector<std::pair<int, int>> seen;
    auto add_edge = [&](int t, int h) {
        for (auto& p : seen)
            if (p.first == t && p.second == h) return;
        seen.push_back({t, h});
        edges.push_back({t, h});
    };
    for (int v = 1; v < n; ++v) add_edge(v, v + 1);
    std::uniform_int_distribution<int> node(1, n);
    for (int e = 0; e < extra_edges; ++e) {
        int a = node(rng), b = node(rng);
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        add_edge(a, b);
    }
    std::uniform_real_distribution<double> eta_dist(0.5, 3.0);
    std::uniform_real_distribution<double> gamma_dist(gamma_lo, gamma_hi);
    std::vector<WeibullParams> params;
    params.reserve(edges.size());
    for (std::size_t j = 0; j < edges.size(); ++j)
        params.push_back({eta_dist(rng), gamma_dist(rng)});
    return pathbound::DegradationGraph(n, edges, params);
}

// Random positive rational with numerator/denominator in [1, 20] / [1, 9].
inline pathbound::Rational random_positive_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(1, 20), den(1, 9);
    return pathbound::rational(num(rng), den(rng));
}

} // namespace oracles
