#include "pathbound/lp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

namespace pathbound {

double ColumnCost::mean_value() const {
    return is_random() ? mean(params) : value;
}

double ColumnCost::second_moment_value() const {
    return is_random() ? second_moment(params) : value * value;
}

LinearProgram::LinearProgram(RationalMatrix a_in, RationalVector b_in,
                             std::vector<ColumnCost> costs)
    : a(std::move(a_in)), b(std::move(b_in)), cost_model(std::move(costs)) {
    if (b.size() != a.rows()) throw StructuralError("b length does not match row count");
    if (cost_model.size() != a.cols())
        throw StructuralError("cost model length does not match column count");
    if (a.rows() == 0 || a.cols() < a.rows())
        throw StructuralError("program needs at least as many columns as rows");
    if (rank(a) != static_cast<int>(a.rows()))
        throw StructuralError("constraint matrix is not full row rank");
}

std::vector<double> LinearProgram::mean_costs() const {
    std::vector<double> mu(cost_model.size());
    for (std::size_t i = 0; i < cost_model.size(); ++i) mu[i] = cost_model[i].mean_value();
    return mu;
}

namespace {

bool next_subset(std::vector<int>& idx, int n) {
    const int k = static_cast<int>(idx.size());
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    return true;
}

bool binomial_exceeds(std::size_t n, std::size_t k, std::size_t cap) {
    if (k > n) return false; // zero subsets
    k = std::min(k, n - k);
    unsigned __int128 c = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        c = c * (n - k + i) / i;
        if (c > cap) return true;
    }
    return false;
}

// Integer mirror of the program for fast singular-subset screening and
// fraction-free Cramer solves. Valid only while the Hadamard bound on any
// minor fits comfortably in int64.
struct IntMirror {
    bool usable = false;
    std::size_t rows = 0, col_count = 0;
    std::vector<std::int64_t> a; // row-major
    std::vector<std::int64_t> b;

    static IntMirror build(const RationalMatrix& a, const RationalVector& b) {
        IntMirror m;
        if (!a.all_entries_integer()) return m;
        for (std::size_t i = 0; i < b.size(); ++i)
            if (!is_integer(b[i])) return m;
        m.rows = a.rows();
        m.col_count = a.cols();
        m.a.resize(m.rows * m.col_count);
        m.b.resize(m.rows);
        double max_abs = 1.0;
        for (std::size_t r = 0; r < m.rows; ++r) {
            for (std::size_t c = 0; c < m.col_count; ++c) {
                const BigInt num = numerator(a.at(r, c));
                if (num < std::numeric_limits<std::int32_t>::min() ||
                    num > std::numeric_limits<std::int32_t>::max())
                    return m;
                m.a[r * m.col_count + c] = num.convert_to<std::int64_t>();
                max_abs =
                    std::max(max_abs, std::fabs(static_cast<double>(m.a[r * m.col_count + c])));
            }
            const BigInt num = numerator(b[r]);
            if (num < std::numeric_limits<std::int32_t>::min() ||
                num > std::numeric_limits<std::int32_t>::max())
                return m;
            m.b[r] = num.convert_to<std::int64_t>();
            max_abs = std::max(max_abs, std::fabs(static_cast<double>(m.b[r])));
        }
        // Hadamard: |minor| <= (sqrt(m) * max_abs)^m; require < 2^61
        const double k = static_cast<double>(m.rows);
        if (k * std::log2(std::sqrt(k) * max_abs) >= 61.0) return m;
        m.usable = true;
        return m;
    }

    // Bareiss determinant of the subset columns (and optional replacement of
    // one column by b, for Cramer).
    std::int64_t subset_det(const std::vector<int>& cols, int replace_pos = -1) const {
        const std::size_t k = cols.size();
        std::vector<std::int64_t> w(k * k);
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = 0; c < k; ++c)
                w[r * k + c] =
                    (static_cast<int>(c) == replace_pos) ? b[r] : a[r * col_count + cols[c]];
        std::int64_t prev = 1;
        int sign = 1;
        for (std::size_t col = 0; col < k; ++col) {
            std::size_t pivot = col;
            while (pivot < k && w[pivot * k + col] == 0) ++pivot;
            if (pivot == k) return 0;
            if (pivot != col) {
                for (std::size_t j = 0; j < k; ++j) std::swap(w[pivot * k + j], w[col * k + j]);
                sign = -sign;
            }
            const std::int64_t p = w[col * k + col];
            for (std::size_t i = col + 1; i < k; ++i) {
                for (std::size_t j = col + 1; j < k; ++j)
                    w[i * k + j] = (w[i * k + j] * p - w[i * k + col] * w[col * k + j]) / prev;
                w[i * k + col] = 0;
            }
            prev = p;
        }
        return sign * prev;
    }
};

} // namespace

RationalVector Basis::full_solution(std::size_t n_cols) const {
    RationalVector x(n_cols);
    for (std::size_t j = 0; j < indices.size(); ++j) x[indices[j]] = x_basic[j];
    return x;
}

Basis make_basis(const LinearProgram& lp, std::vector<int> indices) {
    std::sort(indices.begin(), indices.end());
    if (std::adjacent_find(indices.begin(), indices.end()) != indices.end())
        throw StructuralError("basis indices contain a duplicate");
    if (indices.size() != lp.n_rows())
        throw StructuralError("basis must have exactly " + std::to_string(lp.n_rows()) +
                              " columns");
    Basis basis;
    basis.indices = std::move(indices);
    basis.complement.reserve(lp.n_cols() - basis.indices.size());
    for (int i = 0, k = 0; i < static_cast<int>(lp.n_cols()); ++i) {
        if (k < static_cast<int>(basis.indices.size()) && basis.indices[k] == i)
            ++k;
        else
            basis.complement.push_back(i);
    }
    const RationalMatrix a_b = lp.a.select_columns(basis.indices);
    basis.inv = inverse(a_b); // throws SingularMatrixError when rank deficient
    basis.x_basic = basis.inv * lp.b;
    basis.alpha = basis.inv * lp.a.select_columns(basis.complement);
    basis.feasible = true;
    for (std::size_t j = 0; j < basis.x_basic.size(); ++j)
        if (basis.x_basic[j] < 0) basis.feasible = false;

    basis.x_basic_d.resize(basis.x_basic.size());
    for (std::size_t j = 0; j < basis.x_basic.size(); ++j)
        basis.x_basic_d[j] = to_double(basis.x_basic[j]);
    basis.alpha_d.resize(basis.indices.size() * basis.complement.size());
    for (std::size_t j = 0; j < basis.indices.size(); ++j)
        for (std::size_t i = 0; i < basis.complement.size(); ++i)
            basis.alpha_d[j * basis.complement.size() + i] = to_double(basis.alpha.at(j, i));
    return basis;
}

std::vector<Basis> enumerate_bases(const LinearProgram& lp, bool feasible_only, std::size_t cap) {
    const std::size_t m_r = lp.n_rows(), n_c = lp.n_cols();
    if (binomial_exceeds(n_c, m_r, cap))
        throw ResourceError("basis enumeration cap of " + std::to_string(cap) +
                            " column subsets exceeded");
    const IntMirror mirror = IntMirror::build(lp.a, lp.b);

    std::vector<Basis> out;
    std::vector<int> subset(m_r);
    for (std::size_t i = 0; i < m_r; ++i) subset[i] = static_cast<int>(i);
    do {
        if (mirror.usable && mirror.subset_det(subset) == 0) continue;
        Basis basis;
        try {
            basis = make_basis(lp, subset);
        } catch (const SingularMatrixError&) {
            continue;
        }
        if (!feasible_only || basis.feasible) out.push_back(std::move(basis));
    } while (next_subset(subset, static_cast<int>(n_c)));
    return out;
}

bool reduced_cost_condition(const Basis& basis, const RationalVector& costs) {
    const std::size_t n_c = basis.indices.size() + basis.complement.size();
    if (costs.size() != n_c) throw StructuralError("cost vector length mismatch");
    for (std::size_t i = 0; i < basis.complement.size(); ++i) {
        Rational lhs = 0;
        for (std::size_t j = 0; j < basis.indices.size(); ++j)
            lhs += costs[basis.indices[j]] * basis.alpha.at(j, i);
        if (costs[basis.complement[i]] < lhs) return false;
    }
    return true;
}

bool reduced_cost_condition(const Basis& basis, std::span<const double> costs) {
    const std::size_t n_c = basis.indices.size() + basis.complement.size();
    if (costs.size() != n_c) throw StructuralError("cost vector length mismatch");
    for (std::size_t i = 0; i < basis.complement.size(); ++i) {
        double lhs = 0.0;
        for (std::size_t j = 0; j < basis.indices.size(); ++j)
            lhs += costs[basis.indices[j]] * basis.alpha_entry(j, i);
        if (costs[basis.complement[i]] < lhs) return false;
    }
    return true;
}

DeterministicSolution solve_deterministic(const LinearProgram& lp, const RationalVector& costs,
                                          std::size_t cap) {
    const std::size_t m_r = lp.n_rows(), n_c = lp.n_cols();
    if (costs.size() != n_c) throw StructuralError("cost vector length mismatch");
    for (std::size_t i = 0; i < n_c; ++i)
        if (costs[i] < 0) throw PreconditionError("deterministic solve requires nonnegative costs");
    if (binomial_exceeds(n_c, m_r, cap))
        throw ResourceError("basis enumeration cap of " + std::to_string(cap) +
                            " column subsets exceeded");

    const IntMirror mirror = IntMirror::build(lp.a, lp.b);

    bool found = false;
    Rational best_value;
    std::vector<std::vector<int>> tied; // subsets achieving best_value, lex order

    std::vector<int> subset(m_r);
    for (std::size_t i = 0; i < m_r; ++i) subset[i] = static_cast<int>(i);
    do {
        Rational value;
        if (mirror.usable) {
            const std::int64_t det = mirror.subset_det(subset);
            if (det == 0) continue;
            // Cramer: x_j = det(A_B with column j replaced by b) / det
            bool feasible = true;
            Rational obj = 0;
            for (std::size_t j = 0; j < m_r && feasible; ++j) {
                const std::int64_t num = mirror.subset_det(subset, static_cast<int>(j));
                if ((num > 0 && det < 0) || (num < 0 && det > 0)) feasible = false;
                else if (num != 0) obj += costs[subset[j]] * num;
            }
            if (!feasible) continue;
            value = obj / det;
        } else {
            RationalVector x_b;
            try {
                x_b = solve(lp.a.select_columns(subset), lp.b);
            } catch (const SingularMatrixError&) {
                continue;
            }
            bool feasible = true;
            Rational obj = 0;
            for (std::size_t j = 0; j < m_r; ++j) {
                if (x_b[j] < 0) {
                    feasible = false;
                    break;
                }
                obj += costs[subset[j]] * x_b[j];
            }
            if (!feasible) continue;
            value = obj;
        }
        if (!found || value < best_value) {
            found = true;
            best_value = value;
            tied.clear();
            tied.push_back(subset);
        } else if (value == best_value) {
            tied.push_back(subset);
        }
    } while (next_subset(subset, static_cast<int>(n_c)));

    if (!found) throw InfeasibleError("no feasible basis: the program is infeasible");

    // Degenerate bases can share the optimal vertex while violating the
    // reduced-cost inequalities; a satisfying one always exists. Take the
    // lexicographically first of those (enumeration order is already lex).
    DeterministicSolution sol;
    bool have_basis = false;
    for (const auto& candidate : tied) {
        Basis basis = make_basis(lp, candidate);
        if (reduced_cost_condition(basis, costs)) {
            sol.basis = std::move(basis);
            have_basis = true;
            break;
        }
    }
    if (!have_basis) sol.basis = make_basis(lp, tied.front());
    sol.value = best_value;
    sol.x = sol.basis.full_solution(n_c);
    return sol;
}

std::vector<int> index_set(const Basis& basis) {
    std::vector<int> out = basis.indices;
    for (std::size_t i = 0; i < basis.complement.size(); ++i) {
        bool nonnegative = true;
        for (std::size_t j = 0; j < basis.indices.size() && nonnegative; ++j)
            if (basis.alpha.at(j, i) < 0) nonnegative = false;
        if (nonnegative) out.push_back(basis.complement[i]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> family_index_set(std::span<const Basis> family) {
    if (family.empty()) throw StructuralError("family index set needs a nonempty family");
    std::vector<int> acc = index_set(family.front());
    for (std::size_t k = 1; k < family.size(); ++k) {
        const std::vector<int> next = index_set(family[k]);
        std::vector<int> merged;
        std::set_intersection(acc.begin(), acc.end(), next.begin(), next.end(),
                              std::back_inserter(merged));
        acc = std::move(merged);
    }
    return acc;
}

namespace {

bool support_inside(const RationalVector& x, const std::vector<bool>& allowed) {
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != 0 && !allowed[i]) return false;
    return true;
}

} // namespace

std::optional<Witness> admissible_witness(const LinearProgram& lp, std::span<const Basis> family,
                                          std::span<const RationalVector> candidates) {
    const std::vector<int> family_set = family_index_set(family);
    std::vector<bool> allowed(lp.n_cols(), false);
    for (int i : family_set) allowed[i] = true;
    const std::vector<double> mu = lp.mean_costs();

    auto score_of = [&](const RationalVector& x) {
        double s = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) s += mu[i] * to_double(x[i]);
        return s;
    };

    std::optional<Witness> best;
    for (const Basis& basis : family) {
        if (!basis.feasible) continue;
        RationalVector x = basis.full_solution(lp.n_cols());
        if (!support_inside(x, allowed)) continue;
        const double s = score_of(x);
        if (!best || s > best->score) best = Witness{std::move(x), "basic-solution", s};
    }
    if (best) return best;

    for (const RationalVector& x : candidates) {
        if (x.size() != lp.n_cols()) throw StructuralError("candidate vector length mismatch");
        bool nonneg = true;
        for (std::size_t i = 0; i < x.size() && nonneg; ++i)
            if (x[i] < 0) nonneg = false;
        if (!nonneg || !(lp.a * x == lp.b)) continue; // not feasible; ignore
        if (!support_inside(x, allowed)) continue;
        const double s = score_of(x);
        if (!best || s > best->score) best = Witness{x, "candidate", s};
    }
    return best;
}

Basis basis_containing_support(const LinearProgram& lp, const RationalVector& x) {
    if (x.size() != lp.n_cols()) throw StructuralError("vector length mismatch");
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] < 0) throw StructuralError("vector is not feasible (negative component)");
    if (!(lp.a * x == lp.b)) throw StructuralError("vector does not satisfy the constraints");

    std::vector<int> support, rest;
    for (int i = 0; i < static_cast<int>(lp.n_cols()); ++i)
        (x[i] != 0 ? support : rest).push_back(i);
    if (support.size() > lp.n_rows())
        throw InfeasibleError("vector support exceeds basis size; not a basic solution");

    const std::size_t fill_count = lp.n_rows() - support.size();
    const IntMirror mirror = IntMirror::build(lp.a, lp.b);

    std::vector<int> fill(fill_count);
    for (std::size_t i = 0; i < fill_count; ++i) fill[i] = static_cast<int>(i);
    if (fill_count == 0) {
        try {
            return make_basis(lp, support);
        } catch (const SingularMatrixError&) {
            throw InfeasibleError("vector is not a basic solution: support columns are dependent");
        }
    }
    do {
        std::vector<int> columns = support;
        for (int f : fill) columns.push_back(rest[f]);
        std::sort(columns.begin(), columns.end());
        if (mirror.usable && mirror.subset_det(columns) == 0) continue;
        try {
            return make_basis(lp, columns);
        } catch (const SingularMatrixError&) {
            continue;
        }
    } while (next_subset(fill, static_cast<int>(rest.size())));
    throw InfeasibleError("vector is not a basic solution: no invertible completion");
}

} // namespace pathbound
