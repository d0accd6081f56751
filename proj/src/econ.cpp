#include "statgeo/econ.hpp"

#include <cmath>

#include "statgeo/ode.hpp"

namespace statgeo::econ {

GrowthParams::GrowthParams(double mu_, double nu_, double k0_)
    : mu(mu_), nu(nu_), k0(k0_) {
    if (!(mu > 0.0) || mu > 1.0)
        throw DomainError("savings rate must lie in (0, 1]");
    if (!(nu > 0.0)) throw DomainError("capital-output ratio must be > 0");
    if (!(k0 > 0.0)) throw DomainError("initial capital must be > 0");
}

namespace {

GrowthSample growth_sample(const GrowthParams& p, double t, double K) {
    GrowthSample s;
    s.t = t;
    s.K = K;
    s.Y = K / p.nu;
    s.S = p.mu * s.Y;
    s.I = s.S;
    s.C = s.Y - s.S;
    return s;
}

OdeResult run_stepper(const geodesic::Stepper& stepper, const OdeRhs& rhs,
                      const Eigen::VectorXd& y0, double t_end,
                      const OdeGuard& guard = {}) {
    if (stepper.kind == geodesic::Stepper::Kind::rk4)
        return integrate_rk4(rhs, y0, 0.0, t_end, stepper.step, guard,
                             stepper.sample_every);
    return integrate_rkf45(rhs, y0, 0.0, t_end, stepper.rel_tol, 1e-12, 0.0,
                           guard);
}

}  // namespace

std::vector<GrowthSample> harrod_domar_trajectory(
    const GrowthParams& params, double t_end,
    const geodesic::Stepper& stepper) {
    if (!(t_end > 0.0)) throw DomainError("time span must be positive");
    const double rate = params.mu / params.nu;
    auto rhs = [rate](double, const Eigen::VectorXd& y) {
        Eigen::VectorXd dy(1);
        dy[0] = rate * y[0];
        return dy;
    };
    Eigen::VectorXd y0(1);
    y0[0] = params.k0;
    OdeResult res = run_stepper(stepper, rhs, y0, t_end);
    std::vector<GrowthSample> out;
    out.reserve(res.t.size());
    for (std::size_t i = 0; i < res.t.size(); ++i)
        out.push_back(growth_sample(params, res.t[i], res.y[i][0]));
    return out;
}

double harrod_domar_closed_form(const GrowthParams& params, double t) {
    return params.k0 * std::exp(params.mu / params.nu * t);
}

LVParams::LVParams(double alpha1_, double alpha2_, SignVariant variant_)
    : alpha1(alpha1_), alpha2(alpha2_), sign_variant(variant_) {
    if (!(alpha1 > 0.0)) throw DomainError("alpha1 must be > 0");
    if (!(alpha2 > 0.0)) throw DomainError("alpha2 must be > 0");
}

bool conservative(const LVParams& params) {
    return params.sign_variant == LVParams::SignVariant::standard;
}

std::pair<double, double> lv_rhs(const LVParams& params, double K, double I) {
    if (K < 0.0 || I < 0.0)
        throw DomainError("capital and income must be nonnegative");
    double dk = -params.alpha1 * K * I + params.alpha2 * K;
    double di = params.alpha1 * K * I;
    di += params.sign_variant == LVParams::SignVariant::paper
              ? params.alpha2 * I
              : -params.alpha2 * I;
    return {dk, di};
}

std::vector<LVSample> integrate_lv(const LVParams& params, double k0, double i0,
                                   double t_end,
                                   const geodesic::Stepper& stepper,
                                   double growth_bound) {
    if (!(k0 > 0.0) || !(i0 > 0.0))
        throw DomainError("initial capital and income must be positive");
    if (!(t_end > 0.0)) throw DomainError("time span must be positive");
    const double a1 = params.alpha1, a2 = params.alpha2;
    const double sign = conservative(params) ? -1.0 : 1.0;
    auto rhs = [a1, a2, sign](double, const Eigen::VectorXd& y) {
        Eigen::VectorXd dy(2);
        dy[0] = -a1 * y[0] * y[1] + a2 * y[0];
        dy[1] = a1 * y[0] * y[1] + sign * a2 * y[1];
        return dy;
    };
    auto guard = [growth_bound](double, const Eigen::VectorXd& y) {
        return y.allFinite() && y.cwiseAbs().maxCoeff() < growth_bound;
    };
    Eigen::VectorXd y0(2);
    y0 << k0, i0;
    OdeResult res = run_stepper(stepper, rhs, y0, t_end, guard);
    std::vector<LVSample> out;
    out.reserve(res.t.size());
    for (std::size_t i = 0; i < res.t.size(); ++i)
        out.push_back({res.t[i], res.y[i][0], res.y[i][1]});
    if (!res.completed)
        throw LVBlowupError("trajectory exceeded the growth bound (" +
                                res.stop_reason + ")",
                            std::move(out));
    return out;
}

double lv_first_integral(const LVParams& params, double K, double I) {
    if (!(K > 0.0) || !(I > 0.0))
        throw DomainError("the first integral needs K > 0 and I > 0");
    return params.alpha1 * K - params.alpha2 * std::log(K) +
           params.alpha1 * I - params.alpha2 * std::log(I);
}

KIGeodesicSystem::KIGeodesicSystem(const manifold::MetricFamily& metric2d)
    : family_(&metric2d) {
    if (metric2d.dim() != 2)
        throw DomainError("the (K, I) chart needs a two-dimensional metric");
}

std::pair<Eigen::VectorXd, Eigen::VectorXd> KIGeodesicSystem::rhs(
    const geodesic::GeodesicState& state) const {
    return geodesic::geodesic_rhs(*family_, state);
}

geodesic::Trajectory KIGeodesicSystem::integrate(
    const geodesic::GeodesicState& init, double s_end,
    const geodesic::Stepper& stepper) const {
    return geodesic::integrate_geodesic(*family_, init, s_end, stepper);
}

geodesic::Trajectory KIGeodesicSystem::integrate_deviation(
    const geodesic::DeviationState& init, double s_end,
    const geodesic::Stepper& stepper) const {
    return geodesic::integrate_deviation(*family_, init, s_end, stepper);
}

ConnectionFit fit_connection_quadratic(double alpha1, double alpha2,
                                       LVParams::SignVariant variant) {
    ConnectionFit fit{Tensor3(2), Eigen::Matrix2d::Zero()};
    // -2 Gamma^1_{12} K I == -alpha1 K I and -2 Gamma^2_{12} K I == alpha1 K I
    fit.gamma(0, 0, 1) = alpha1 / 2.0;
    fit.gamma(0, 1, 0) = alpha1 / 2.0;
    fit.gamma(1, 0, 1) = -alpha1 / 2.0;
    fit.gamma(1, 1, 0) = -alpha1 / 2.0;
    fit.residual_linear(0, 0) = alpha2;
    fit.residual_linear(1, 1) =
        variant == LVParams::SignVariant::standard ? -alpha2 : alpha2;
    return fit;
}

ConnectionFit fit_connection_quadratic(const LVParams& params) {
    return fit_connection_quadratic(params.alpha1, params.alpha2,
                                    params.sign_variant);
}

std::pair<double, double> reconstruct_rhs(const ConnectionFit& fit, double K,
                                          double I) {
    Eigen::Vector2d u(K, I);
    Eigen::Vector2d out = fit.residual_linear * u;
    for (int c = 0; c < 2; ++c)
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) out[c] -= fit.gamma(c, a, b) * u[a] * u[b];
    return {out[0], out[1]};
}

}  // namespace statgeo::econ
