#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "statgeo/errors.hpp"
#include "statgeo/geodesic.hpp"
#include "statgeo/manifold.hpp"
#include "statgeo/tensor.hpp"

namespace statgeo::econ {

struct GrowthParams {
    GrowthParams(double mu, double nu, double k0);
    double mu;  // savings rate, fraction of income
    double nu;  // capital-output ratio
    double k0;  // initial capital
};

struct GrowthSample {
    double t, K, Y, S, I, C;
};

std::vector<GrowthSample> harrod_domar_trajectory(
    const GrowthParams& params, double t_end,
    const geodesic::Stepper& stepper = {});

double harrod_domar_closed_form(const GrowthParams& params, double t);

struct LVParams {
    enum class SignVariant { paper, standard };
    LVParams(double alpha1, double alpha2,
             SignVariant variant = SignVariant::standard);
    double alpha1;  // interaction coefficient
    double alpha2;  // linear coefficient
    SignVariant sign_variant;
};

// The verbatim income equation gains money without bound; only the
// standard sign admits the conserved first integral.
bool conservative(const LVParams& params);

std::pair<double, double> lv_rhs(const LVParams& params, double K, double I);

struct LVSample {
    double t, K, I;
};

class LVBlowupError : public statgeo::BlowupError {
public:
    LVBlowupError(const std::string& msg, std::vector<LVSample> partial_series)
        : statgeo::BlowupError(msg), partial(std::move(partial_series)) {}
    std::vector<LVSample> partial;
};

std::vector<LVSample> integrate_lv(const LVParams& params, double k0, double i0,
                                   double t_end,
                                   const geodesic::Stepper& stepper = {},
                                   double growth_bound = 1e12);

double lv_first_integral(const LVParams& params, double K, double I);

// Geodesic machinery instantiated on a two-dimensional (K, I) chart with the
// velocities identified with (K, I).
class KIGeodesicSystem {
public:
    explicit KIGeodesicSystem(const manifold::MetricFamily& metric2d);

    std::pair<Eigen::VectorXd, Eigen::VectorXd> rhs(
        const geodesic::GeodesicState& state) const;
    geodesic::Trajectory integrate(const geodesic::GeodesicState& init,
                                   double s_end,
                                   const geodesic::Stepper& stepper = {}) const;
    geodesic::Trajectory integrate_deviation(
        const geodesic::DeviationState& init, double s_end,
        const geodesic::Stepper& stepper = {}) const;
    const manifold::MetricFamily& family() const { return *family_; }

private:
    const manifold::MetricFamily* family_;
};

// The quadratic parts of the LV field written as -Gamma^c_{ab} U^a U^b plus
// the linear remainder the geodesic form cannot absorb.
struct ConnectionFit {
    Tensor3 gamma;                    // d = 2
    Eigen::Matrix2d residual_linear;  // F^c(U) = residual_linear * U
};

ConnectionFit fit_connection_quadratic(const LVParams& params);
// Raw-coefficient form; accepts alpha1 = 0 (purely linear field).
ConnectionFit fit_connection_quadratic(
    double alpha1, double alpha2,
    LVParams::SignVariant variant = LVParams::SignVariant::standard);

std::pair<double, double> reconstruct_rhs(const ConnectionFit& fit, double K,
                                          double I);

}  // namespace statgeo::econ
