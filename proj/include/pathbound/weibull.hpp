// Weibull distribution machinery: density, survival, moments, inverse-CDF
// sampling, the upper incomplete gamma function, and the mean residual time
// to failure (MRTF) with its first two derivatives.
//
// Shapes gamma >= 1 are the working range of the bound machinery; the
// functions here only require eta > 0, gamma > 0. The stricter gamma in
// [1,2] requirement is enforced at the bound entry points.

#pragma once

#include "pathbound/errors.hpp"

#include <span>
#include <vector>

namespace pathbound {

// Scale/shape pair for one edge's transition time.
struct WeibullParams {
    double eta = 1.0;   // scale, time units
    double gamma = 1.0; // shape, dimensionless
};

inline bool params_valid(const WeibullParams& p) { return p.eta > 0.0 && p.gamma > 0.0; }

// Slope bound in E[X | X >= h] <= E[X] + beta * h. beta = 1 holds for
// Weibull shapes in [1,2]; values below 1 are rejected.
struct BetaCondition {
    explicit BetaCondition(double b);
    double beta;
};

// f(t) = (gamma/eta) (t/eta)^(gamma-1) exp(-(t/eta)^gamma)
double pdf(const WeibullParams& p, double t);

// P(X >= h) = exp(-(h/eta)^gamma)
double survival(const WeibullParams& p, double h);

double mean(const WeibullParams& p);          // eta * Gamma(1 + 1/gamma)
double second_moment(const WeibullParams& p); // eta^2 * Gamma(1 + 2/gamma)

// Inverse-CDF transform of a uniform(0,1) variate: eta * (-ln u)^(1/gamma).
double sample(const WeibullParams& p, double u);

// Upper incomplete gamma: integral of t^(a-1) e^-t over [x, inf).
// Series for x < a+1, continued fraction otherwise; relative tolerance 1e-12,
// iteration cap 500 (ResourceError on non-convergence).
double upper_incomplete_gamma(double a, double x);

// log of the above, computed without overflow for large x.
double log_upper_incomplete_gamma(double a, double x);

// Mean residual time to failure G(h) = E[X | X >= h], evaluated in the
// log-compensated form eta * exp(z + log Gamma(1+1/gamma, z)), z = (h/eta)^gamma,
// so that large h does not overflow the exp(z) factor.
double mrtf(const WeibullParams& p, double h);

// Closed-form first derivative: G'(h) = gamma * z * (G(h) - h) / h.
// Requires h > 0 (G'(0+) is 0 for gamma > 1 and 1 for gamma = 1).
double mrtf_deriv(const WeibullParams& p, double h);

// Second derivative, obtained by differentiating the implemented G':
// G''(h) = gamma * z * ((gamma-1)(G-h)/h^2 + (G'-1)/h).
double mrtf_second_deriv(const WeibullParams& p, double h);

// True iff G(h) <= mean + beta*h at every grid point, within 1e-9 slack.
bool verify_beta_condition(const WeibullParams& p, const BetaCondition& beta,
                           std::span<const double> h_grid);

// Convenience: 'count' evenly spaced points on [lo, hi].
std::vector<double> linear_grid(double lo, double hi, int count);

} // namespace pathbound
