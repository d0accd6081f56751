#include "statgeo/geodesic.hpp"

#include <cmath>
#include <limits>

#include "statgeo/ode.hpp"

namespace statgeo::geodesic {

namespace {

Eigen::VectorXd nan_vector(Eigen::Index n) {
    return Eigen::VectorXd::Constant(n,
                                     std::numeric_limits<double>::quiet_NaN());
}

Eigen::VectorXd geodesic_acceleration(const Tensor3& gamma,
                                      const Eigen::VectorXd& u) {
    const int d = gamma.dim();
    Eigen::VectorXd du = Eigen::VectorXd::Zero(d);
    for (int c = 0; c < d; ++c) {
        double sum = 0.0;
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) sum += gamma(c, a, b) * u[a] * u[b];
        du[c] = -sum;
    }
    return du;
}

Trajectory pack_trajectory(const MetricFamily& family, const OdeResult& res,
                           bool has_deviation, const Stepper& stepper) {
    Trajectory traj;
    traj.dim = family.dim();
    traj.has_deviation = has_deviation;
    traj.chart_id = family.id();
    traj.s = res.t;
    traj.rows = res.y;
    traj.meta.method = stepper.kind == Stepper::Kind::rk4 ? "rk4" : "rkf45";
    traj.meta.step = stepper.kind == Stepper::Kind::rk4 ? stepper.step : 0.0;
    traj.meta.rel_tol =
        stepper.kind == Stepper::Kind::rkf45 ? stepper.rel_tol : 0.0;
    traj.meta.steps = res.steps;
    traj.meta.max_error_estimate = res.max_error_estimate;

    const int d = traj.dim;
    double base_norm2 = 0.0;
    for (std::size_t i = 0; i < traj.rows.size(); ++i) {
        Eigen::VectorXd theta = traj.rows[i].head(d);
        Eigen::VectorXd u = traj.rows[i].segment(d, d);
        double n2 = u.dot(family.metric(theta) * u);
        if (i == 0)
            base_norm2 = n2;
        else
            traj.meta.affine_drift =
                std::max(traj.meta.affine_drift, std::abs(n2 - base_norm2));
    }
    return traj;
}

OdeResult dispatch(const Stepper& stepper, const OdeRhs& rhs,
                   const Eigen::VectorXd& y0, double s0, double s1,
                   const OdeGuard& guard) {
    if (stepper.kind == Stepper::Kind::rk4)
        return integrate_rk4(rhs, y0, s0, s1, stepper.step, guard,
                             stepper.sample_every);
    return integrate_rkf45(rhs, y0, s0, s1, stepper.rel_tol, 1e-12, 0.0, guard);
}

}  // namespace

GeodesicState Trajectory::geodesic_state(std::size_t i) const {
    GeodesicState st;
    st.point.coords = rows[i].head(dim);
    st.point.chart_id = chart_id;
    st.tangent = rows[i].segment(dim, dim);
    st.arclength = s[i];
    return st;
}

DeviationState Trajectory::deviation_state(std::size_t i) const {
    DeviationState st;
    st.base = geodesic_state(i);
    st.psi = rows[i].segment(2 * dim, dim);
    st.psi_rate = rows[i].segment(3 * dim, dim);
    return st;
}

std::pair<Eigen::VectorXd, Eigen::VectorXd> geodesic_rhs(
    const MetricFamily& family, const GeodesicState& state) {
    family.require_point(state.point);
    if (state.tangent.size() != family.dim())
        throw DomainError("tangent length must match the chart dimension");
    Tensor3 gamma = manifold::christoffel_at(family, state.point.coords);
    return {state.tangent, geodesic_acceleration(gamma, state.tangent)};
}

Trajectory integrate_geodesic(const MetricFamily& family,
                              const GeodesicState& init, double s_end,
                              const Stepper& stepper) {
    family.require_point(init.point);
    const int d = family.dim();
    if (init.tangent.size() != d)
        throw DomainError("tangent length must match the chart dimension");
    if (!(s_end > init.arclength))
        throw DomainError("arclength span must be increasing");

    Eigen::VectorXd y0(2 * d);
    y0 << init.point.coords, init.tangent;

    auto rhs = [&family, d](double, const Eigen::VectorXd& y) -> Eigen::VectorXd {
        Eigen::VectorXd theta = y.head(d);
        if (!family.admissible(theta)) return nan_vector(y.size());
        Tensor3 gamma = manifold::christoffel_at(family, theta);
        Eigen::VectorXd dy(2 * d);
        dy << y.segment(d, d), geodesic_acceleration(gamma, y.segment(d, d));
        return dy;
    };
    auto guard = [&family, d](double, const Eigen::VectorXd& y) {
        return y.allFinite() && family.admissible(y.head(d));
    };

    OdeResult res =
        dispatch(stepper, rhs, y0, init.arclength, s_end, guard);
    Trajectory traj = pack_trajectory(family, res, false, stepper);
    if (!res.completed)
        throw BlowupError("geodesic left the admissible chart domain (" +
                              res.stop_reason + ")",
                          std::move(traj));
    return traj;
}

Trajectory integrate_deviation(const MetricFamily& family,
                               const DeviationState& init, double s_end,
                               const Stepper& stepper) {
    family.require_point(init.base.point);
    const int d = family.dim();
    if (init.base.tangent.size() != d || init.psi.size() != d ||
        init.psi_rate.size() != d)
        throw DomainError("state component lengths must match the chart "
                          "dimension");
    if (!(s_end > init.base.arclength))
        throw DomainError("arclength span must be increasing");

    Eigen::VectorXd y0(4 * d);
    y0 << init.base.point.coords, init.base.tangent, init.psi, init.psi_rate;

    auto rhs = [&family, d](double, const Eigen::VectorXd& y) -> Eigen::VectorXd {
        Eigen::VectorXd theta = y.head(d);
        if (!family.admissible(theta)) return nan_vector(y.size());
        Eigen::VectorXd u = y.segment(d, d);
        Eigen::VectorXd psi = y.segment(2 * d, d);
        Eigen::VectorXd psi_rate = y.segment(3 * d, d);

        Tensor3 gamma = manifold::christoffel_at(family, theta);
        Tensor4 dgamma = manifold::christoffel_partials(family, theta);

        // Coordinate expansion of the second-order deviation equation along
        // the base geodesic:
        //   psi''^c = -dGamma^c_{ab}/dtheta^e psi^e u^a u^b
        //            - 2 Gamma^c_{ab} u^a psi'^b
        Eigen::VectorXd acc = Eigen::VectorXd::Zero(d);
        for (int c = 0; c < d; ++c) {
            double sum = 0.0;
            for (int a = 0; a < d; ++a)
                for (int b = 0; b < d; ++b) {
                    for (int e = 0; e < d; ++e)
                        sum += dgamma(e, c, a, b) * psi[e] * u[a] * u[b];
                    sum += 2.0 * gamma(c, a, b) * u[a] * psi_rate[b];
                }
            acc[c] = -sum;
        }

        Eigen::VectorXd dy(4 * d);
        dy << u, geodesic_acceleration(gamma, u), psi_rate, acc;
        return dy;
    };
    auto guard = [&family, d](double, const Eigen::VectorXd& y) {
        return y.allFinite() && family.admissible(y.head(d));
    };

    OdeResult res =
        dispatch(stepper, rhs, y0, init.base.arclength, s_end, guard);
    Trajectory traj = pack_trajectory(family, res, true, stepper);
    if (!res.completed)
        throw BlowupError("deviation run left the admissible chart domain (" +
                              res.stop_reason + ")",
                          std::move(traj));
    return traj;
}

double deviation_norm(const MetricFamily& family, const MacroPoint& p,
                      const Eigen::VectorXd& psi) {
    if (psi.size() != family.dim())
        throw DomainError("deviation vector length must match the chart "
                          "dimension");
    Eigen::MatrixXd g = manifold::metric_at(family, p);
    double n2 = psi.dot(g * psi);
    if (n2 < 0.0)
        throw DomainError("metric is not positive on the deviation vector");
    return std::sqrt(n2);
}

std::vector<std::pair<double, double>> deviation_norm_series(
    const MetricFamily& family, const Trajectory& traj) {
    if (!traj.has_deviation)
        throw DomainError("trajectory carries no deviation components");
    std::vector<std::pair<double, double>> series;
    series.reserve(traj.size());
    const int d = traj.dim;
    for (std::size_t i = 0; i < traj.size(); ++i) {
        Eigen::VectorXd theta = traj.rows[i].head(d);
        Eigen::VectorXd psi = traj.rows[i].segment(2 * d, d);
        double n2 = psi.dot(family.metric(theta) * psi);
        series.emplace_back(traj.s[i], std::sqrt(std::max(n2, 0.0)));
    }
    return series;
}

}  // namespace statgeo::geodesic
