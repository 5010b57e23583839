// Certified bounds on the expected shortest-path length: per-basis
// optimality probabilities (conditional-product Monte Carlo, indicator Monte
// Carlo, and a closed-form lower bound), the expectation lower bound, the
// sorted-sum upper bound, and the trivial mean-cost optimum zeta.

#pragma once

#include "pathbound/lp.hpp"
#include "pathbound/montecarlo.hpp"
#include "pathbound/spath.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pathbound {

// Two closed-form flavors: "as_printed" divides each deduction bracket by
// eta_i^gamma_i as is; "rederived_power" first raises the bracket to
// gamma_i, which is the flavor the validity tests hold against the Monte
// Carlo estimate.
enum class PbVariant { rederived_power, as_printed };

// Which estimate feeds the expectation lower bound.
enum class PbSource { formula_mc, closed_form };

enum class FamilySpec { deterministic_optimal, k_cheapest_paths };

struct BoundConfig {
    double beta = 1.0; // must be >= 1
    FamilySpec family = FamilySpec::deterministic_optimal;
    int k = 1; // family size for k_cheapest_paths
    PbVariant pb_variant = PbVariant::rederived_power;
    PbSource pb_source = PbSource::formula_mc;
    std::size_t mc_samples = 100000;
    std::uint64_t seed = 1;
    bool clamp_negative_pb = true;
    std::size_t dfm_set_size = 0; // 0: use the row count
    bool include_mc = true;       // indicator MC + E[z] estimate in the report
    int workers = 1;
    std::size_t chunk_size = 4096;
};

struct McEstimate {
    double estimate = 0.0;
    double std_err = 0.0;
};

// Requires every random column to have shape in [1,2] (PreconditionError).
void require_bound_shapes(const LinearProgram& lp);

// Conditional-product estimator: average over sampled basic costs of
// prod_{i in B^c} P(c_i >= sum_j alpha_ji c_j | c_B). Deterministic columns
// in B^c contribute the indicator of their reduced-cost inequality.
McEstimate pb_formula_mc(const LinearProgram& lp, const Basis& basis, std::size_t n,
                         std::uint64_t seed, std::size_t chunk_size = 4096, int workers = 1);

// Frequency, over sampled full cost vectors, that the basis is feasible and
// satisfies the reduced-cost condition. Infeasible bases give exactly 0.
McEstimate pb_indicator_mc(const LinearProgram& lp, const Basis& basis, std::size_t n,
                           std::uint64_t seed, std::size_t chunk_size = 4096, int workers = 1);

// Closed-form lower bound on p_B; raw value, may be <= 0 (vacuous).
double pb_closed_form_lower(const LinearProgram& lp, const Basis& basis, PbVariant variant);

// (1/beta) sum over the family of p_hat_B * E[c_B]^t x_B with x the witness.
// p_hat_B comes from cfg.pb_source: the clamped closed form, or the
// formula-MC estimate minus two standard errors (conservative).
double expectation_lower_bound(const LinearProgram& lp, std::span<const Basis> family,
                               const RationalVector& witness_x, const BoundConfig& cfg);

// Sum of the set_size largest E[c_i] * x_i values over a feasible x
// (descending order, index ties ascending). set_size 0 means the row count.
double dfm_upper_bound(const LinearProgram& lp, const RationalVector& x,
                       std::size_t set_size = 0);

// zeta: the optimum of the deterministic program with mean costs.
double trivial_upper_bound(const LinearProgram& lp);

// Mean-cost deterministic solve (exact; means enter as exact rationals).
DeterministicSolution solve_mean_lp(const LinearProgram& lp);

struct PerBasisReport {
    std::vector<int> indices;
    std::vector<int> admissible_columns; // I_B
    double pb_closed_raw = 0.0;
    double pb_closed_clamped = 0.0;
    McEstimate pb_formula;
    std::optional<McEstimate> pb_indicator;
    double contribution = 0.0; // E[c_B]^t x_B of the witness
};

struct BoundReport {
    BoundConfig config;
    int nodes = 0;
    int edges = 0;
    bool beta_condition_ok = false;
    double zeta = 0.0;
    double dfm_bound = 0.0;
    double lower_bound = 0.0; // expectation lower bound
    bool witness_available = false;
    std::string witness_source;
    std::vector<double> witness; // full-length vector
    std::vector<std::vector<int>> family;
    std::vector<int> family_index_set;
    std::vector<PerBasisReport> per_basis;
    std::optional<SimulationResult> mc; // E[z] estimate, present when include_mc
};

// Orchestrates everything above. Deterministic in (g, cfg), including the
// worker count.
BoundReport build_report(const DegradationGraph& g, const BoundConfig& cfg);

} // namespace pathbound
