#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "statgeo/manifold.hpp"
#include "statgeo/quadrature.hpp"

namespace statgeo::manifold {

struct CheckReport {
    double max_deviation = 0.0;
    bool pass = false;
};

// g_ab = integral of p * (d_a ln p)(d_b ln p) over the micro support, with
// score derivatives by central differences in theta. Throws
// NormalizationError if the density does not integrate to 1 within norm_tol
// under the given rule, QuadratureError if nodes leave the support box.
Eigen::MatrixXd fisher_metric_numeric(const NumericDensityFamily& family,
                                      const Eigen::VectorXd& theta,
                                      const std::vector<QuadratureSpec>& quads,
                                      double norm_tol = 1e-8);
Eigen::MatrixXd fisher_metric_numeric(const NumericDensityFamily& family,
                                      const MacroPoint& p,
                                      const std::vector<QuadratureSpec>& quads,
                                      double norm_tol = 1e-8);

// Recomputes the Fisher metric after the micro change of variables y = f(x)
// (one-dimensional micro only) and reports the largest entrywise difference.
// The transformed density is evaluated through a numeric inverse of f, on a
// quadrature rule mapped through f. Monotonicity failures raise MapError; a
// transformed density that no longer normalizes under the mapped rule raises
// QuadratureError.
CheckReport check_micro_invariance(const NumericDensityFamily& family,
                                   const std::function<double(double)>& f,
                                   const MacroPoint& p, double tol);

// Verifies the two-index transformation law of the metric under a chart map
// theta -> theta_hat: the metric mapped with the (finite-difference) Jacobian
// must reproduce squared lengths of small displacements pushed through the
// actual map. Rank-deficient Jacobians raise SingularJacobianError.
CheckReport check_reparam_covariance(
    const MetricFamily& family,
    const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& chart_map,
    const MacroPoint& p, double tol);

}  // namespace statgeo::manifold
