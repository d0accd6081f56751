#include "statgeo/ode.hpp"

#include <algorithm>
#include <cmath>

#include "statgeo/errors.hpp"

namespace statgeo {

namespace {

bool finite(const Eigen::VectorXd& v) { return v.allFinite(); }

}  // namespace

OdeResult integrate_rk4(const OdeRhs& f, const Eigen::VectorXd& y0, double t0,
                        double t1, double h, const OdeGuard& valid,
                        int sample_every) {
    if (!(h > 0.0)) throw DomainError("rk4: step size must be > 0");
    if (!(t1 > t0)) throw DomainError("rk4: span end must exceed start");
    if (sample_every < 1) sample_every = 1;

    OdeResult out;
    Eigen::VectorXd y = y0;
    double t = t0;
    out.t.push_back(t);
    out.y.push_back(y);

    const long n_full = static_cast<long>(std::floor((t1 - t0) / h + 1e-12));
    long step_index = 0;
    while (t < t1) {
        double hs = std::min(h, t1 - t);
        if (hs < 1e-15 * std::max(1.0, std::abs(t1))) break;  // span exhausted
        Eigen::VectorXd k1 = f(t, y);
        Eigen::VectorXd k2 = f(t + 0.5 * hs, y + 0.5 * hs * k1);
        Eigen::VectorXd k3 = f(t + 0.5 * hs, y + 0.5 * hs * k2);
        Eigen::VectorXd k4 = f(t + hs, y + hs * k3);
        Eigen::VectorXd y_next = y + (hs / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        double t_next = (step_index + 1 <= n_full) ? t0 + (step_index + 1) * h : t1;
        if (t_next > t1) t_next = t1;

        if (!finite(y_next)) {
            out.stop_reason = "non-finite state";
            return out;
        }
        if (valid && !valid(t_next, y_next)) {
            out.stop_reason = "left admissible domain";
            return out;
        }
        y = std::move(y_next);
        t = t_next;
        ++step_index;
        ++out.steps;
        if (step_index % sample_every == 0 || t >= t1) {
            out.t.push_back(t);
            out.y.push_back(y);
        }
    }
    out.completed = true;
    return out;
}

OdeResult integrate_rkf45(const OdeRhs& f, const Eigen::VectorXd& y0, double t0,
                          double t1, double rel_tol, double abs_tol, double h0,
                          const OdeGuard& valid) {
    if (!(rel_tol > 0.0)) throw DomainError("rkf45: relative tolerance must be > 0");
    if (!(t1 > t0)) throw DomainError("rkf45: span end must exceed start");

    // Fehlberg tableau.
    static const double a21 = 1.0 / 4.0;
    static const double a31 = 3.0 / 32.0, a32 = 9.0 / 32.0;
    static const double a41 = 1932.0 / 2197.0, a42 = -7200.0 / 2197.0,
                        a43 = 7296.0 / 2197.0;
    static const double a51 = 439.0 / 216.0, a52 = -8.0, a53 = 3680.0 / 513.0,
                        a54 = -845.0 / 4104.0;
    static const double a61 = -8.0 / 27.0, a62 = 2.0, a63 = -3544.0 / 2565.0,
                        a64 = 1859.0 / 4104.0, a65 = -11.0 / 40.0;
    // 5th order weights.
    static const double b1 = 16.0 / 135.0, b3 = 6656.0 / 12825.0,
                        b4 = 28561.0 / 56430.0, b5 = -9.0 / 50.0, b6 = 2.0 / 55.0;
    // 4th order weights (for the error estimate).
    static const double c1 = 25.0 / 216.0, c3 = 1408.0 / 2565.0,
                        c4 = 2197.0 / 4104.0, c5 = -1.0 / 5.0;

    OdeResult out;
    Eigen::VectorXd y = y0;
    double t = t0;
    out.t.push_back(t);
    out.y.push_back(y);

    double h = (h0 > 0.0) ? h0 : (t1 - t0) / 100.0;
    const double h_min = 1e-14 * (t1 - t0);

    while (t < t1) {
        h = std::min(h, t1 - t);
        Eigen::VectorXd k1 = f(t, y);
        Eigen::VectorXd k2 = f(t + h * 0.25, y + h * (a21 * k1));
        Eigen::VectorXd k3 = f(t + h * 3.0 / 8.0, y + h * (a31 * k1 + a32 * k2));
        Eigen::VectorXd k4 =
            f(t + h * 12.0 / 13.0, y + h * (a41 * k1 + a42 * k2 + a43 * k3));
        Eigen::VectorXd k5 =
            f(t + h, y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
        Eigen::VectorXd k6 = f(t + h * 0.5, y + h * (a61 * k1 + a62 * k2 +
                                                     a63 * k3 + a64 * k4 + a65 * k5));

        Eigen::VectorXd y5 = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
        Eigen::VectorXd y4 = y + h * (c1 * k1 + c3 * k3 + c4 * k4 + c5 * k5);

        if (!finite(y5)) {
            out.stop_reason = "non-finite state";
            return out;
        }

        double err = 0.0;
        for (Eigen::Index i = 0; i < y.size(); ++i) {
            double scale =
                abs_tol + rel_tol * std::max(std::abs(y[i]), std::abs(y5[i]));
            err = std::max(err, std::abs(y5[i] - y4[i]) / scale);
        }

        if (err <= 1.0) {
            double t_next = t + h;
            if (valid && !valid(t_next, y5)) {
                out.stop_reason = "left admissible domain";
                return out;
            }
            t = t_next;
            y = std::move(y5);
            ++out.steps;
            out.max_error_estimate = std::max(out.max_error_estimate, err);
            out.t.push_back(t);
            out.y.push_back(y);
        }

        double factor = (err > 0.0) ? 0.9 * std::pow(err, -0.2) : 5.0;
        h *= std::clamp(factor, 0.2, 5.0);
        if (h < h_min) {
            out.stop_reason = "step size underflow";
            return out;
        }
    }
    out.completed = true;
    return out;
}

}  // namespace statgeo
