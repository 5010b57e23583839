#include "pathbound/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace pathbound {

namespace {

constexpr double kFourSqrtE = 6.5948850828004290; // 4 * sqrt(e)
constexpr std::uint64_t kTagFormula = 0xF0F0A1;
constexpr std::uint64_t kTagIndicator = 0xF0F0A2;

double clamp01(double v) { return std::min(1.0, std::max(0.0, v)); }

std::uint64_t basis_fingerprint(const std::vector<int>& indices) {
    std::uint64_t h = 1469598103934665603ULL; // FNV-1a
    for (int i : indices) {
        h ^= static_cast<std::uint64_t>(i) + 1;
        h *= 1099511628211ULL;
    }
    return h;
}

std::uint64_t pb_stream_seed(std::uint64_t seed, const Basis& basis, std::uint64_t tag) {
    return splitmix64(seed ^ splitmix64(basis_fingerprint(basis.indices) ^ tag));
}

void check_witness(const LinearProgram& lp, std::span<const Basis> family,
                   const RationalVector& x) {
    if (x.size() != lp.n_cols()) throw PreconditionError("witness length mismatch");
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] < 0) throw PreconditionError("witness has a negative component");
    if (!(lp.a * x == lp.b)) throw PreconditionError("witness does not satisfy the constraints");
    const std::vector<int> allowed = family_index_set(family);
    std::vector<bool> mask(lp.n_cols(), false);
    for (int i : allowed) mask[i] = true;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != 0 && !mask[i])
            throw PreconditionError("witness support leaves the family index set at column " +
                                    std::to_string(i + 1));
}

} // namespace

void require_bound_shapes(const LinearProgram& lp) {
    for (std::size_t i = 0; i < lp.cost_model.size(); ++i) {
        const ColumnCost& c = lp.cost_model[i];
        if (c.is_random() && !(c.params.gamma >= 1.0 && c.params.gamma <= 2.0))
            throw PreconditionError("bound machinery requires shape in [1,2]; column " +
                                    std::to_string(i + 1) + " has gamma " +
                                    std::to_string(c.params.gamma));
    }
}

McEstimate pb_formula_mc(const LinearProgram& lp, const Basis& basis, std::size_t n,
                         std::uint64_t seed, std::size_t chunk_size, int workers) {
    require_bound_shapes(lp);
    if (n == 0) throw StructuralError("sample count must be at least 1");
    if (!basis.feasible)
        throw PreconditionError("formula estimator requires a feasible basis");

    const std::size_t m = basis.indices.size();
    const std::size_t nc = basis.complement.size();

    auto per_sample = [&](std::mt19937_64& rng) {
        // random basic columns consume draws in index order
        std::vector<double> c_basic(m);
        for (std::size_t j = 0; j < m; ++j) {
            const ColumnCost& col = lp.cost_model[basis.indices[j]];
            c_basic[j] = col.is_random() ? sample(col.params, uniform_open01(rng)) : col.value;
        }
        double product = 1.0;
        for (std::size_t i = 0; i < nc && product > 0.0; ++i) {
            double h = 0.0;
            for (std::size_t j = 0; j < m; ++j) h += basis.alpha_entry(j, i) * c_basic[j];
            const ColumnCost& col = lp.cost_model[basis.complement[i]];
            if (col.is_random())
                product *= survival(col.params, std::max(0.0, h));
            else if (col.value < h)
                product = 0.0; // deterministic cost fails its reduced-cost inequality
        }
        return product;
    };
    const RunningStats stats = chunked_accumulate(n, seed, chunk_size, workers, per_sample);
    return {stats.mean, std::sqrt(stats.variance_unbiased() / static_cast<double>(stats.count))};
}

McEstimate pb_indicator_mc(const LinearProgram& lp, const Basis& basis, std::size_t n,
                           std::uint64_t seed, std::size_t chunk_size, int workers) {
    require_bound_shapes(lp);
    if (n == 0) throw StructuralError("sample count must be at least 1");
    if (!basis.feasible) return {0.0, 0.0}; // never optimal

    auto per_sample = [&](std::mt19937_64& rng) {
        std::vector<double> costs(lp.n_cols());
        for (std::size_t i = 0; i < costs.size(); ++i) {
            const ColumnCost& col = lp.cost_model[i];
            costs[i] = col.is_random() ? sample(col.params, uniform_open01(rng)) : col.value;
        }
        return reduced_cost_condition(basis, std::span<const double>(costs)) ? 1.0 : 0.0;
    };
    const RunningStats stats = chunked_accumulate(n, seed, chunk_size, workers, per_sample);
    return {stats.mean, std::sqrt(stats.variance_unbiased() / static_cast<double>(stats.count))};
}

double pb_closed_form_lower(const LinearProgram& lp, const Basis& basis, PbVariant variant) {
    require_bound_shapes(lp);
    double deduction = 0.0;
    for (std::size_t i = 0; i < basis.complement.size(); ++i) {
        const ColumnCost& col = lp.cost_model[basis.complement[i]];
        if (!col.is_random()) continue; // no distributional tail to bound
        double sum_sq = 0.0;   // sum_j alpha_ji^2 E[c_j^2]
        double sum_mean = 0.0; // sum_j alpha_ji E[c_j]
        for (std::size_t j = 0; j < basis.indices.size(); ++j) {
            const double a = basis.alpha_entry(j, i);
            if (a == 0.0) continue;
            const ColumnCost& bj = lp.cost_model[basis.indices[j]];
            sum_sq += a * a * bj.second_moment_value();
            sum_mean += a * bj.mean_value();
        }
        const double bracket = kFourSqrtE * std::sqrt(sum_sq) + std::fabs(sum_mean);
        const double gamma_i = col.params.gamma;
        const double denom = std::pow(col.params.eta, gamma_i);
        deduction += (variant == PbVariant::as_printed ? bracket : std::pow(bracket, gamma_i)) /
                     denom;
    }
    return 1.0 - deduction;
}

double expectation_lower_bound(const LinearProgram& lp, std::span<const Basis> family,
                               const RationalVector& witness_x, const BoundConfig& cfg) {
    const BetaCondition beta(cfg.beta);
    require_bound_shapes(lp);
    check_witness(lp, family, witness_x);

    double bound = 0.0;
    for (const Basis& basis : family) {
        double p_hat;
        if (cfg.pb_source == PbSource::formula_mc) {
            const McEstimate est = pb_formula_mc(lp, basis, cfg.mc_samples,
                                                 pb_stream_seed(cfg.seed, basis, kTagFormula),
                                                 cfg.chunk_size, cfg.workers);
            p_hat = clamp01(est.estimate - 2.0 * est.std_err);
        } else {
            const double raw = pb_closed_form_lower(lp, basis, cfg.pb_variant);
            p_hat = cfg.clamp_negative_pb ? clamp01(raw) : std::min(raw, 1.0);
        }
        double contribution = 0.0;
        for (int j : basis.indices)
            contribution += lp.cost_model[j].mean_value() * to_double(witness_x[j]);
        bound += p_hat * contribution;
    }
    return bound / beta.beta;
}

double dfm_upper_bound(const LinearProgram& lp, const RationalVector& x, std::size_t set_size) {
    if (x.size() != lp.n_cols()) throw PreconditionError("vector length mismatch");
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] < 0) throw PreconditionError("vector is not feasible (negative component)");
    if (!(lp.a * x == lp.b))
        throw PreconditionError("vector does not satisfy the constraints");
    if (set_size == 0) set_size = lp.n_rows();

    std::vector<double> values(lp.n_cols());
    for (std::size_t i = 0; i < values.size(); ++i)
        values[i] = lp.cost_model[i].mean_value() * to_double(x[i]);
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (values[a] != values[b]) return values[a] > values[b];
        return a < b;
    });
    double sum = 0.0;
    for (std::size_t r = 0; r < std::min(set_size, values.size()); ++r) sum += values[order[r]];
    return sum;
}

DeterministicSolution solve_mean_lp(const LinearProgram& lp) {
    RationalVector costs(lp.n_cols());
    for (std::size_t i = 0; i < lp.n_cols(); ++i)
        costs[i] = rational_from_double(lp.cost_model[i].mean_value());
    return solve_deterministic(lp, costs);
}

double trivial_upper_bound(const LinearProgram& lp) {
    return to_double(solve_mean_lp(lp).value);
}

BoundReport build_report(const DegradationGraph& g, const BoundConfig& cfg) {
    const GraphDiagnostics diag = validate(g);
    if (!diag.pass()) {
        std::string msg = "graph failed validation:";
        for (const auto& issue : diag.issues) msg += " " + issue + ";";
        throw PreconditionError(msg);
    }

    const LinearProgram lp = lp_from_graph(g);
    require_bound_shapes(lp);
    const BetaCondition beta(cfg.beta);

    BoundReport report;
    report.config = cfg;
    if (report.config.dfm_set_size == 0) report.config.dfm_set_size = lp.n_rows();
    report.nodes = g.node_count();
    report.edges = static_cast<int>(g.edge_count());

    report.beta_condition_ok = true;
    for (const WeibullParams& p : g.edge_params()) {
        const std::vector<double> grid = linear_grid(0.0, 10.0 * p.eta, 200);
        if (!verify_beta_condition(p, beta, grid)) report.beta_condition_ok = false;
    }

    const DeterministicSolution mean_sol = solve_mean_lp(lp);
    report.zeta = to_double(mean_sol.value);

    // family selection
    std::vector<Basis> family;
    std::vector<RationalVector> candidates;
    if (cfg.family == FamilySpec::deterministic_optimal) {
        family.push_back(mean_sol.basis);
    } else {
        if (cfg.k < 1) throw StructuralError("k must be at least 1");
        std::vector<PathVector> paths = enumerate_paths(g);
        const std::vector<double> mu = lp.mean_costs();
        auto path_cost = [&](const PathVector& p) {
            double c = 0.0;
            for (int j : p.edge_indices) c += mu[j];
            return c;
        };
        std::sort(paths.begin(), paths.end(), [&](const PathVector& a, const PathVector& b) {
            const double ca = path_cost(a), cb = path_cost(b);
            if (ca != cb) return ca < cb;
            return a.edge_indices < b.edge_indices;
        });
        const std::size_t take = std::min<std::size_t>(cfg.k, paths.size());
        for (std::size_t p = 0; p < take; ++p) {
            Basis basis = basis_containing_support(lp, paths[p].as_vector(g.edge_count()));
            const bool dup = std::any_of(family.begin(), family.end(), [&](const Basis& b) {
                return b.indices == basis.indices;
            });
            if (!dup) family.push_back(std::move(basis));
        }
        std::sort(family.begin(), family.end(),
                  [](const Basis& a, const Basis& b) { return a.indices < b.indices; });
        for (const PathVector& p : paths) candidates.push_back(p.as_vector(g.edge_count()));
    }
    for (const Basis& basis : family) report.family.push_back(basis.indices);
    report.family_index_set = family_index_set(family);

    const std::optional<Witness> witness = admissible_witness(lp, family, candidates);
    if (witness) {
        report.witness_available = true;
        report.witness_source = witness->source;
        report.witness.reserve(lp.n_cols());
        for (std::size_t i = 0; i < lp.n_cols(); ++i)
            report.witness.push_back(to_double(witness->x[i]));
    }

    for (const Basis& basis : family) {
        PerBasisReport pb;
        pb.indices = basis.indices;
        pb.admissible_columns = index_set(basis);
        pb.pb_closed_raw = pb_closed_form_lower(lp, basis, cfg.pb_variant);
        pb.pb_closed_clamped = clamp01(pb.pb_closed_raw);
        pb.pb_formula = pb_formula_mc(lp, basis, cfg.mc_samples,
                                      pb_stream_seed(cfg.seed, basis, kTagFormula),
                                      cfg.chunk_size, cfg.workers);
        if (cfg.include_mc)
            pb.pb_indicator = pb_indicator_mc(lp, basis, cfg.mc_samples,
                                              pb_stream_seed(cfg.seed, basis, kTagIndicator),
                                              cfg.chunk_size, cfg.workers);
        if (witness)
            for (int j : basis.indices)
                pb.contribution += lp.cost_model[j].mean_value() * to_double(witness->x[j]);
        report.per_basis.push_back(std::move(pb));
    }

    report.lower_bound =
        witness ? expectation_lower_bound(lp, family, witness->x, cfg) : 0.0;
    report.dfm_bound = dfm_upper_bound(lp, mean_sol.x, report.config.dfm_set_size);

    if (cfg.include_mc)
        report.mc = estimate_expected_shortest(
            g, SimConfig{cfg.mc_samples, cfg.seed, cfg.chunk_size, cfg.workers});
    return report;
}

} // namespace pathbound
