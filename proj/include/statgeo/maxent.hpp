#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "statgeo/quadrature.hpp"

namespace statgeo::money {

// KL(p || q) over the support described by the quadrature spec. Both
// densities must be normalized under the rule; SupportError fires when q
// vanishes on a node where p carries mass. This is the negative of the
// entropy functional being maximized.
double relative_entropy(const std::function<double(double)>& p,
                        const std::function<double(double)>& q,
                        const QuadratureSpec& quad);

struct MaxEntProblem {
    std::function<double(double)> prior;  // q(x); need not be normalized
    std::vector<std::function<double(double)>> constraints;  // a_alpha(x)
    Eigen::VectorXd targets;                                 // Theta_alpha
};

struct MaxEntResult {
    std::function<double(double)> density;  // normalized under the rule
    Eigen::VectorXd lambda;
    double log_z = 0.0;
    int iterations = 0;
    double residual = 0.0;  // max constraint violation at exit
};

// Solves max-entropy-relative-to-q under expectation constraints by damped
// Newton iteration on the multipliers of p ~ q * exp(-sum lambda_a a(x)).
// InfeasibleError when the residuals cannot be brought under tol within the
// iteration budget (e.g. targets outside the attainable set).
MaxEntResult maxent_fit(const MaxEntProblem& prob, const QuadratureSpec& quad,
                        double tol = 1e-10, int max_iter = 200);

}  // namespace statgeo::money
