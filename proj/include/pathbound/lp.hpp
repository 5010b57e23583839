// Random linear program core: basis enumeration and classification, alpha
// coefficients, reduced-cost optimality test, admissible index sets, and the
// deterministic surrogate solved by exhaustive feasible-basis enumeration.
//
// All basis algebra is exact rational arithmetic. An int64 fraction-free
// screen (valid while Hadamard bounds fit in 63 bits) discards singular
// column subsets cheaply before any rational work happens.

#pragma once

#include "pathbound/errors.hpp"
#include "pathbound/rational_linalg.hpp"
#include "pathbound/weibull.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pathbound {

// Per-column cost: either a fixed value (the extended column's structural
// zero) or a Weibull transition time.
struct ColumnCost {
    enum class Kind { deterministic, weibull };
    Kind kind = Kind::deterministic;
    double value = 0.0;
    WeibullParams params;

    static ColumnCost fixed(double v) { return {Kind::deterministic, v, {}}; }
    static ColumnCost random(const WeibullParams& p) { return {Kind::weibull, 0.0, p}; }

    bool is_random() const { return kind == Kind::weibull; }
    double mean_value() const;
    double second_moment_value() const;
};

// min c^t x  s.t.  a x = b, x >= 0, with a full row rank.
struct LinearProgram {
    RationalMatrix a;
    RationalVector b;
    std::vector<ColumnCost> cost_model;

    LinearProgram(RationalMatrix a_in, RationalVector b_in, std::vector<ColumnCost> costs);

    std::size_t n_rows() const { return a.rows(); }
    std::size_t n_cols() const { return a.cols(); }

    // Column means as a double vector (deterministic columns contribute
    // their fixed value).
    std::vector<double> mean_costs() const;
};

// A size-m_r column subset with invertible A_B, its exact inverse, basic
// solution, and alpha = A_B^-1 A_B^c (reduced-cost coefficients; entry
// (j, i) weights basic column indices[j] in non-basic column complement[i]).
struct Basis {
    std::vector<int> indices;    // sorted
    std::vector<int> complement; // sorted
    RationalMatrix inv;
    RationalVector x_basic;
    RationalMatrix alpha;
    bool feasible = false; // x_basic >= 0 componentwise

    // double mirrors for Monte Carlo hot loops
    std::vector<double> x_basic_d;
    std::vector<double> alpha_d; // row-major, indices.size() x complement.size()

    double alpha_entry(std::size_t j, std::size_t i) const {
        return alpha_d[j * complement.size() + i];
    }

    // Basic solution embedded as a full-length vector (zeros off B).
    RationalVector full_solution(std::size_t n_cols) const;
};

// Builds the Basis for a sorted column subset. Throws SingularMatrixError
// if A_B is not invertible.
Basis make_basis(const LinearProgram& lp, std::vector<int> indices);

// All bases in lexicographic order of their index sets; feasible_only keeps
// those with x_basic >= 0. Throws ResourceError if binomial(n_cols, n_rows)
// exceeds the cap.
std::vector<Basis> enumerate_bases(const LinearProgram& lp, bool feasible_only,
                                   std::size_t cap = 1'000'000);

// Necessary optimality condition: c_i >= sum_j c_j alpha_ji for every
// non-basic column i. Exact and double overloads share the convention.
bool reduced_cost_condition(const Basis& basis, const RationalVector& costs);
bool reduced_cost_condition(const Basis& basis, std::span<const double> costs);

struct DeterministicSolution {
    Rational value;
    Basis basis;     // lexicographically smallest optimal basis
    RationalVector x; // full-length optimal vector, x_Bc = 0
};

// Exhaustive scan of all feasible bases; exact arithmetic; ties broken by
// lexicographically smallest index set. Throws InfeasibleError when no
// feasible basis exists.
DeterministicSolution solve_deterministic(const LinearProgram& lp, const RationalVector& costs,
                                          std::size_t cap = 1'000'000);

// I_B: the basic columns plus every non-basic column whose alpha column is
// componentwise nonnegative (so sum_j c_j alpha_ji >= 0 for any c >= 0).
std::vector<int> index_set(const Basis& basis);

// Intersection of I_B over the family. Throws StructuralError when empty.
std::vector<int> family_index_set(std::span<const Basis> family);

struct Witness {
    RationalVector x;   // full-length feasible vector, support inside the family index set
    std::string source; // "basic-solution" or "candidate"
    double score = 0.0; // sum_i E[c_i] x_i
};

// Searches (i) the family's own basic solutions, then (ii) the supplied
// candidate vectors (e.g. path vectors), keeping the admissible one with the
// largest mean-cost objective. Returns nullopt when no candidate has support
// inside the family index set (bound unavailable for this family).
std::optional<Witness> admissible_witness(const LinearProgram& lp, std::span<const Basis> family,
                                          std::span<const RationalVector> candidates = {});

// Lexicographically smallest basis containing the support of a feasible
// vertex x (used to attach bases to path vectors).
Basis basis_containing_support(const LinearProgram& lp, const RationalVector& x);

} // namespace pathbound
