#pragma once

// Test-side oracles kept independent of the library paths they check: the
// Christoffel and curvature oracles difference the raw metric() callback with
// their own step choices, and the deviation oracle hand-codes the
// three-coordinate system with its own integrator.

#include <Eigen/Dense>
#include <cmath>
#include <functional>
#include <vector>

#include "statgeo/manifold.hpp"
#include "statgeo/tensor.hpp"

namespace oracles {

inline statgeo::Tensor3 fd_christoffel(
    const statgeo::manifold::MetricFamily& fam, const Eigen::VectorXd& theta,
    double h_rel = 1e-5) {
    const int d = fam.dim();
    statgeo::Tensor3 dg(d);
    for (int c = 0; c < d; ++c) {
        double h = h_rel * std::max(1.0, std::abs(theta[c]));
        Eigen::VectorXd tp = theta, tm = theta;
        tp[c] += h;
        tm[c] -= h;
        Eigen::MatrixXd gp = fam.metric(tp), gm = fam.metric(tm);
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b)
                dg(c, a, b) = (gp(a, b) - gm(a, b)) / (2.0 * h);
    }
    Eigen::MatrixXd ginv = fam.metric(theta).inverse();
    statgeo::Tensor3 gamma(d);
    for (int c = 0; c < d; ++c)
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) {
                double sum = 0.0;
                for (int e = 0; e < d; ++e)
                    sum += ginv(c, e) *
                           (dg(a, e, b) + dg(b, e, a) - dg(e, a, b));
                gamma(c, a, b) = 0.5 * sum;
            }
    return gamma;
}

// Scalar curvature from metric() alone: Riemann assembled out of nested
// central differences of the finite-difference Christoffels.
inline double fd_scalar_curvature(const statgeo::manifold::MetricFamily& fam,
                                  const Eigen::VectorXd& theta,
                                  double h_rel = 1e-4) {
    const int d = fam.dim();
    statgeo::Tensor3 gamma = fd_christoffel(fam, theta);
    statgeo::Tensor4 dgamma(d);
    for (int e = 0; e < d; ++e) {
        double h = h_rel * std::max(1.0, std::abs(theta[e]));
        Eigen::VectorXd tp = theta, tm = theta;
        tp[e] += h;
        tm[e] -= h;
        statgeo::Tensor3 gp = fd_christoffel(fam, tp);
        statgeo::Tensor3 gm = fd_christoffel(fam, tm);
        for (int c = 0; c < d; ++c)
            for (int a = 0; a < d; ++a)
                for (int b = 0; b < d; ++b)
                    dgamma(e, c, a, b) =
                        (gp(c, a, b) - gm(c, a, b)) / (2.0 * h);
    }
    Eigen::MatrixXd ricci = Eigen::MatrixXd::Zero(d, d);
    for (int a = 0; a < d; ++a)
        for (int dd = 0; dd < d; ++dd) {
            double sum = 0.0;
            for (int c = 0; c < d; ++c) {
                double r = dgamma(c, c, a, dd) - dgamma(dd, c, a, c);
                for (int e = 0; e < d; ++e)
                    r += gamma(c, c, e) * gamma(e, a, dd) -
                         gamma(c, dd, e) * gamma(e, a, c);
                sum += r;
            }
            ricci(a, dd) = sum;
        }
    Eigen::MatrixXd ginv = fam.metric(theta).inverse();
    return (ginv * ricci).trace();
}

// Hand-coded geodesic-plus-deviation system for the shared-spread chart with
// uncorrelated micro variables, coordinates (mu_x, mu_y, sigma). State packs
// (theta, u, psi, psi_rate).
inline Eigen::VectorXd handcoded_deviation_rhs(const Eigen::VectorXd& y) {
    const double s = y[2];
    const double u1 = y[3], u2 = y[4], u3 = y[5];
    const double p1 = y[6], p2 = y[7], p3 = y[8];
    const double q1 = y[9], q2 = y[10], q3 = y[11];
    Eigen::VectorXd dy(12);
    dy[0] = u1;
    dy[1] = u2;
    dy[2] = u3;
    dy[3] = 2.0 / s * u1 * u3;
    dy[4] = 2.0 / s * u2 * u3;
    dy[5] = -(u1 * u1 + u2 * u2) / (4.0 * s) + u3 * u3 / s;
    dy[6] = q1;
    dy[7] = q2;
    dy[8] = q3;
    dy[9] = -2.0 / (s * s) * u1 * u3 * p3 + 2.0 / s * (u1 * q3 + u3 * q1);
    dy[10] = -2.0 / (s * s) * u2 * u3 * p3 + 2.0 / s * (u2 * q3 + u3 * q2);
    dy[11] = -p3 * (-(u1 * u1 + u2 * u2) / (4.0 * s * s) + u3 * u3 / (s * s)) -
             (u1 * q1 + u2 * q2) / (2.0 * s) + 2.0 / s * u3 * q3;
    return dy;
}

// Plain fixed-step RK4 owned by the tests.
inline std::vector<Eigen::VectorXd> rk4_path(
    const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& f,
    Eigen::VectorXd y, double t_end, double h, int sample_every = 1) {
    std::vector<Eigen::VectorXd> out;
    out.push_back(y);
    const long n = std::lround(t_end / h);
    for (long i = 0; i < n; ++i) {
        Eigen::VectorXd k1 = f(y);
        Eigen::VectorXd k2 = f(y + 0.5 * h * k1);
        Eigen::VectorXd k3 = f(y + 0.5 * h * k2);
        Eigen::VectorXd k4 = f(y + h * k3);
        y += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        if ((i + 1) % sample_every == 0) out.push_back(y);
    }
    return out;
}

}  // namespace oracles
