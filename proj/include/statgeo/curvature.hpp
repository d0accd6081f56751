#pragma once

#include <Eigen/Dense>

#include "statgeo/manifold.hpp"
#include "statgeo/tensor.hpp"

namespace statgeo::manifold {

struct CurvatureBundle {
    Tensor3 christoffel;   // Gamma^c_{ab} at (c, a, b)
    Tensor4 riemann;       // R^c_{abd} at (c, a, b, d)
    Eigen::MatrixXd ricci;
    double scalar = 0.0;

    explicit CurvatureBundle(int d)
        : christoffel(d), riemann(d), ricci(Eigen::MatrixXd::Zero(d, d)) {}
};

Eigen::MatrixXd metric_at(const MetricFamily& family, const Eigen::VectorXd& theta);
Eigen::MatrixXd metric_at(const MetricFamily& family, const MacroPoint& p);

Eigen::MatrixXd inverse_metric_at(const MetricFamily& family,
                                  const Eigen::VectorXd& theta);

Tensor3 christoffel_at(const MetricFamily& family, const Eigen::VectorXd& theta);
Tensor3 christoffel_at(const MetricFamily& family, const MacroPoint& p);

// dGamma(e, c, a, b) = d Gamma^c_{ab} / d theta^e, central differences.
Tensor4 christoffel_partials(const MetricFamily& family,
                             const Eigen::VectorXd& theta);

CurvatureBundle curvature_at(const MetricFamily& family,
                             const Eigen::VectorXd& theta);
CurvatureBundle curvature_at(const MetricFamily& family, const MacroPoint& p);

double squared_distance(const MetricFamily& family, const MacroPoint& p,
                        const Eigen::VectorXd& dtheta);

}  // namespace statgeo::manifold
