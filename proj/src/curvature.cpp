#include "statgeo/curvature.hpp"

#include <cmath>
#include <vector>

#include "statgeo/errors.hpp"

namespace statgeo::manifold {

Eigen::MatrixXd metric_at(const MetricFamily& family,
                          const Eigen::VectorXd& theta) {
    family.require_admissible(theta);
    return family.metric(theta);
}

Eigen::MatrixXd metric_at(const MetricFamily& family, const MacroPoint& p) {
    family.require_point(p);
    return family.metric(p.coords);
}

Eigen::MatrixXd inverse_metric_at(const MetricFamily& family,
                                  const Eigen::VectorXd& theta) {
    Eigen::MatrixXd g = metric_at(family, theta);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(g);
    if (!lu.isInvertible())
        throw SingularMetricError("metric of chart '" + family.id() +
                                  "' is singular at the given point");
    return lu.inverse();
}

Tensor3 christoffel_at(const MetricFamily& family, const Eigen::VectorXd& theta) {
    const int d = family.dim();
    Eigen::MatrixXd ginv = inverse_metric_at(family, theta);
    Tensor3 dg = family.metric_partials(theta);
    Tensor3 gamma(d);
    for (int c = 0; c < d; ++c)
        for (int a = 0; a < d; ++a)
            for (int b = a; b < d; ++b) {
                double sum = 0.0;
                for (int e = 0; e < d; ++e)
                    sum += ginv(c, e) *
                           (dg(a, e, b) + dg(b, e, a) - dg(e, a, b));
                gamma(c, a, b) = 0.5 * sum;
                gamma(c, b, a) = gamma(c, a, b);
            }
    return gamma;
}

Tensor3 christoffel_at(const MetricFamily& family, const MacroPoint& p) {
    family.require_point(p);
    return christoffel_at(family, p.coords);
}

Tensor4 christoffel_partials(const MetricFamily& family,
                             const Eigen::VectorXd& theta) {
    const int d = family.dim();
    std::vector<bool> scale(d, false);
    for (int s : family.scale_coordinates()) scale[s] = true;
    Tensor4 dgamma(d);
    for (int e = 0; e < d; ++e) {
        // Five-point stencil: the result feeds curvature and deviation
        // right-hand sides, where second-order differences are too coarse.
        double h = fd_step5(theta[e], scale[e]);
        Eigen::VectorXd t = theta;
        t[e] = theta[e] + h;
        Tensor3 gp1 = christoffel_at(family, t);
        t[e] = theta[e] - h;
        Tensor3 gm1 = christoffel_at(family, t);
        t[e] = theta[e] + 2.0 * h;
        Tensor3 gp2 = christoffel_at(family, t);
        t[e] = theta[e] - 2.0 * h;
        Tensor3 gm2 = christoffel_at(family, t);
        for (int c = 0; c < d; ++c)
            for (int a = 0; a < d; ++a)
                for (int b = 0; b < d; ++b)
                    dgamma(e, c, a, b) =
                        (-gp2(c, a, b) + 8.0 * gp1(c, a, b) -
                         8.0 * gm1(c, a, b) + gm2(c, a, b)) /
                        (12.0 * h);
    }
    return dgamma;
}

CurvatureBundle curvature_at(const MetricFamily& family,
                             const Eigen::VectorXd& theta) {
    const int d = family.dim();
    CurvatureBundle bundle(d);
    bundle.christoffel = christoffel_at(family, theta);
    Tensor4 dgamma = christoffel_partials(family, theta);
    const Tensor3& G = bundle.christoffel;

    for (int c = 0; c < d; ++c)
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b)
                for (int e = 0; e < d; ++e) {
                    double quad = 0.0;
                    for (int m = 0; m < d; ++m)
                        quad += G(c, b, m) * G(m, a, e) -
                                G(c, e, m) * G(m, a, b);
                    bundle.riemann(c, a, b, e) =
                        dgamma(b, c, a, e) - dgamma(e, c, a, b) + quad;
                }

    for (int a = 0; a < d; ++a)
        for (int e = 0; e < d; ++e) {
            double sum = 0.0;
            for (int c = 0; c < d; ++c) sum += bundle.riemann(c, a, c, e);
            bundle.ricci(a, e) = sum;
        }

    Eigen::MatrixXd ginv = inverse_metric_at(family, theta);
    bundle.scalar = (ginv * bundle.ricci).trace();
    return bundle;
}

CurvatureBundle curvature_at(const MetricFamily& family, const MacroPoint& p) {
    family.require_point(p);
    return curvature_at(family, p.coords);
}

double squared_distance(const MetricFamily& family, const MacroPoint& p,
                        const Eigen::VectorXd& dtheta) {
    if (dtheta.size() != family.dim())
        throw DomainError("displacement length must match the chart dimension");
    Eigen::MatrixXd g = metric_at(family, p);
    return dtheta.dot(g * dtheta);
}

}  // namespace statgeo::manifold
