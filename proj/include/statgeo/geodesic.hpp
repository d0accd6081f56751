#pragma once

#include <Eigen/Dense>
#include <string>
#include <utility>
#include <vector>

#include "statgeo/curvature.hpp"
#include "statgeo/errors.hpp"
#include "statgeo/manifold.hpp"

namespace statgeo::geodesic {

using manifold::MacroPoint;
using manifold::MetricFamily;

struct GeodesicState {
    MacroPoint point;
    Eigen::VectorXd tangent;
    double arclength = 0.0;
};

struct DeviationState {
    GeodesicState base;
    Eigen::VectorXd psi;
    Eigen::VectorXd psi_rate;
};

struct Stepper {
    enum class Kind { rk4, rkf45 };
    Kind kind = Kind::rk4;
    double step = 1e-3;     // rk4
    double rel_tol = 1e-8;  // rkf45
    int sample_every = 1;   // rk4 sampling cadence
};

struct StepperMeta {
    std::string method;
    double step = 0.0;
    double rel_tol = 0.0;
    long steps = 0;
    double max_error_estimate = 0.0;
    double affine_drift = 0.0;  // max |g(U,U) - g(U,U) at S0| over samples
};

// Samples along arclength; each row packs (theta, u) or
// (theta, u, psi, psi_rate) for deviation runs.
struct Trajectory {
    std::vector<double> s;
    std::vector<Eigen::VectorXd> rows;
    int dim = 0;
    bool has_deviation = false;
    std::string chart_id;
    StepperMeta meta;

    std::size_t size() const { return s.size(); }
    GeodesicState geodesic_state(std::size_t i) const;
    DeviationState deviation_state(std::size_t i) const;
};

// Raised when a trajectory leaves the admissible chart domain; carries the
// valid prefix integrated so far.
class BlowupError : public statgeo::BlowupError {
public:
    BlowupError(const std::string& msg, Trajectory partial_trajectory)
        : statgeo::BlowupError(msg), partial(std::move(partial_trajectory)) {}
    Trajectory partial;
};

// (dTheta/dS, dU/dS) at the given state.
std::pair<Eigen::VectorXd, Eigen::VectorXd> geodesic_rhs(
    const MetricFamily& family, const GeodesicState& state);

Trajectory integrate_geodesic(const MetricFamily& family,
                              const GeodesicState& init, double s_end,
                              const Stepper& stepper = {});

Trajectory integrate_deviation(const MetricFamily& family,
                               const DeviationState& init, double s_end,
                               const Stepper& stepper = {});

double deviation_norm(const MetricFamily& family, const MacroPoint& p,
                      const Eigen::VectorXd& psi);

// (S, |psi|) pairs from a deviation trajectory.
std::vector<std::pair<double, double>> deviation_norm_series(
    const MetricFamily& family, const Trajectory& traj);

}  // namespace statgeo::geodesic
