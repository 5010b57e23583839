#include "pathbound/weibull.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace pathbound {

namespace {

constexpr double kRelTol = 1e-15;
constexpr int kMaxIter = 500;

void check_params(const WeibullParams& p) {
    if (!params_valid(p))
        throw DomainError("Weibull parameters must be positive (eta=" + std::to_string(p.eta) +
                          ", gamma=" + std::to_string(p.gamma) + ")");
}

// Regularized lower incomplete gamma P(a,x) by series, valid for x < a+1.
double lower_regularized_series(double a, double x) {
    double ap = a;
    double del = 1.0 / a;
    double sum = del;
    for (int i = 0; i < kMaxIter; ++i) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::fabs(del) < std::fabs(sum) * kRelTol)
            return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
    }
    throw ResourceError("incomplete gamma series did not converge in 500 iterations");
}

// Continued fraction for the upper tail, valid for x >= a+1. Returns the
// CF value h with Gamma(a,x) = exp(-x + a ln x) * h (Lentz's method).
double upper_cf(double a, double x) {
    const double fpmin = std::numeric_limits<double>::min() / kRelTol;
    double b = x + 1.0 - a;
    double c = 1.0 / fpmin;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= kMaxIter; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < fpmin) d = fpmin;
        c = b + an / c;
        if (std::fabs(c) < fpmin) c = fpmin;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) <= kRelTol) return h;
    }
    throw ResourceError("incomplete gamma continued fraction did not converge in 500 iterations");
}

} // namespace

BetaCondition::BetaCondition(double b) : beta(b) {
    if (!(b >= 1.0)) throw DomainError("beta must be >= 1, got " + std::to_string(b));
}

double pdf(const WeibullParams& p, double t) {
    check_params(p);
    if (t < 0.0) throw DomainError("Weibull density is defined for t >= 0");
    const double r = t / p.eta;
    if (t == 0.0) {
        if (p.gamma == 1.0) return 1.0 / p.eta;
        return p.gamma > 1.0 ? 0.0 : std::numeric_limits<double>::infinity();
    }
    return (p.gamma / p.eta) * std::pow(r, p.gamma - 1.0) * std::exp(-std::pow(r, p.gamma));
}

double survival(const WeibullParams& p, double h) {
    check_params(p);
    if (h < 0.0) throw DomainError("survival is defined for h >= 0");
    return std::exp(-std::pow(h / p.eta, p.gamma));
}

double mean(const WeibullParams& p) {
    check_params(p);
    return p.eta * std::tgamma(1.0 + 1.0 / p.gamma);
}

double second_moment(const WeibullParams& p) {
    check_params(p);
    return p.eta * p.eta * std::tgamma(1.0 + 2.0 / p.gamma);
}

double sample(const WeibullParams& p, double u) {
    check_params(p);
    if (!(u > 0.0 && u < 1.0)) throw DomainError("uniform variate must lie in (0,1)");
    return p.eta * std::pow(-std::log(u), 1.0 / p.gamma);
}

double upper_incomplete_gamma(double a, double x) {
    if (!(a > 0.0)) throw DomainError("incomplete gamma requires a > 0");
    if (x < 0.0) throw DomainError("incomplete gamma requires x >= 0");
    if (x == 0.0) return std::tgamma(a);
    if (x < a + 1.0)
        return std::tgamma(a) * (1.0 - lower_regularized_series(a, x));
    return std::exp(-x + a * std::log(x)) * upper_cf(a, x);
}

double log_upper_incomplete_gamma(double a, double x) {
    if (!(a > 0.0)) throw DomainError("incomplete gamma requires a > 0");
    if (x < 0.0) throw DomainError("incomplete gamma requires x >= 0");
    if (x == 0.0) return std::lgamma(a);
    if (x < a + 1.0)
        return std::lgamma(a) + std::log1p(-lower_regularized_series(a, x));
    return -x + a * std::log(x) + std::log(upper_cf(a, x));
}

double mrtf(const WeibullParams& p, double h) {
    check_params(p);
    if (h < 0.0) throw DomainError("MRTF is defined for h >= 0");
    const double z = std::pow(h / p.eta, p.gamma);
    return p.eta * std::exp(z + log_upper_incomplete_gamma(1.0 + 1.0 / p.gamma, z));
}

double mrtf_deriv(const WeibullParams& p, double h) {
    check_params(p);
    if (!(h > 0.0)) throw DomainError("MRTF derivative requires h > 0");
    const double z = std::pow(h / p.eta, p.gamma);
    return p.gamma * z * (mrtf(p, h) - h) / h;
}

double mrtf_second_deriv(const WeibullParams& p, double h) {
    check_params(p);
    if (!(h > 0.0)) throw DomainError("MRTF second derivative requires h > 0");
    const double z = std::pow(h / p.eta, p.gamma);
    const double g = mrtf(p, h);
    const double gp = p.gamma * z * (g - h) / h;
    return p.gamma * z * ((p.gamma - 1.0) * (g - h) / (h * h) + (gp - 1.0) / h);
}

bool verify_beta_condition(const WeibullParams& p, const BetaCondition& beta,
                           std::span<const double> h_grid) {
    const double mu = mean(p);
    for (double h : h_grid) {
        if (h < 0.0) throw DomainError("beta condition grid must be nonnegative");
        if (mrtf(p, h) > mu + beta.beta * h + 1e-9) return false;
    }
    return true;
}

std::vector<double> linear_grid(double lo, double hi, int count) {
    if (count < 2) throw StructuralError("grid needs at least two points");
    std::vector<double> g(count);
    for (int i = 0; i < count; ++i)
        g[i] = lo + (hi - lo) * static_cast<double>(i) / (count - 1);
    return g;
}

} // namespace pathbound
