#include "statgeo/closed_form.hpp"

#include <cmath>

#include "statgeo/errors.hpp"

namespace statgeo::geodesic {

ClosedFormParams::ClosedFormParams(double A_, double B_, Variant variant_,
                                   double r_, bool positive_sigma_)
    : A(A_), B(B_), r(r_), variant(variant_), positive_sigma(positive_sigma_) {
    if (B == 0.0) throw DomainError("B must be nonzero");
    if (!(-A / B > 0.0))
        throw DomainError("the radicand -A/B must be positive");
    if (variant == Variant::correlated) {
        if (!(std::abs(r) < 1.0))
            throw DomainError("correlation must satisfy |r| < 1");
        if (r == 0.5)
            throw DomainError("r = 1/2 makes the printed frequency singular");
        if (!(2.0 * A * (r - 1.0) / B >= 0.0))
            throw DomainError("the radicand 2A(r-1)/B must be nonnegative");
    }
}

double ClosedFormParams::frequency() const {
    if (variant == Variant::correlated) return 2.0 * A * B / (2.0 * r - 1.0);
    return -2.0 * A * B;
}

double ClosedFormParams::mu_amplitude() const {
    if (variant == Variant::correlated)
        return std::sqrt(2.0 * A * (r - 1.0) / B);
    return std::sqrt(-2.0 * A / B);
}

double ClosedFormParams::sigma_amplitude() const { return std::sqrt(-A / B); }

manifold::MacroPoint closed_form_geodesic(const ClosedFormParams& params,
                                          double s) {
    double k = params.frequency();
    double mu = -params.mu_amplitude() * std::tanh(k * s);
    double sigma = -params.sigma_amplitude() / std::cosh(k * s);
    if (params.positive_sigma) sigma = -sigma;
    manifold::MacroPoint p;
    p.coords = Eigen::Vector3d(mu, mu, sigma);
    p.chart_id = "gaussian3d";
    return p;
}

Eigen::Vector3d closed_form_tangent(const ClosedFormParams& params, double s) {
    double k = params.frequency();
    double sech = 1.0 / std::cosh(k * s);
    double dmu = -params.mu_amplitude() * k * sech * sech;
    double dsigma = params.sigma_amplitude() * k * std::tanh(k * s) * sech;
    if (params.positive_sigma) dsigma = -dsigma;
    return {dmu, dmu, dsigma};
}

Eigen::Vector3d analytic_deviation_profile(const AnalyticDeviationParams& p,
                                           double s) {
    double psi1 = (p.a1 + p.a2 * p.rho) * std::exp(-p.r * p.rho * s);
    double decay = std::exp(-p.rho * s);
    double psi3 = (p.a3 + p.a4 * p.rho) * decay;
    double psi2;
    if (p.a5 == 0.0) {
        psi2 = psi3 + p.a6;
    } else {
        if (p.rho == 0.0)
            throw DomainError("the a5 term requires rho != 0");
        psi2 = psi3 - p.a5 / (2.0 * p.rho) * decay + p.a6;
    }
    return {psi1, psi2, psi3};
}

}  // namespace statgeo::geodesic
