#pragma once

#include <Eigen/Dense>
#include <functional>
#include <string>
#include <vector>

namespace statgeo {

using OdeRhs = std::function<Eigen::VectorXd(double, const Eigen::VectorXd&)>;
using OdeGuard = std::function<bool(double, const Eigen::VectorXd&)>;

struct OdeResult {
    std::vector<double> t;
    std::vector<Eigen::VectorXd> y;
    bool completed = false;       // reached the end of the span
    std::string stop_reason;      // empty when completed
    long steps = 0;
    double max_error_estimate = 0.0;  // adaptive runs only
};

/// Classical fixed-step RK4 from t0 to t1 (t1 > t0). Samples every
/// `sample_every` accepted steps plus the initial and final states. When a
/// guard is supplied and rejects a step's endpoint, integration stops and the
/// result holds the valid prefix with completed = false.
OdeResult integrate_rk4(const OdeRhs& f, const Eigen::VectorXd& y0, double t0,
                        double t1, double h, const OdeGuard& valid = {},
                        int sample_every = 1);

/// Adaptive Runge-Kutta-Fehlberg 4(5) with the fifth-order solution carried
/// forward. Error is controlled against atol + rtol*|y| per component.
OdeResult integrate_rkf45(const OdeRhs& f, const Eigen::VectorXd& y0, double t0,
                          double t1, double rel_tol, double abs_tol = 1e-12,
                          double h0 = 0.0, const OdeGuard& valid = {});

}  // namespace statgeo
