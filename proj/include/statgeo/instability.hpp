#pragma once

#include <string>
#include <utility>
#include <vector>

namespace statgeo::geodesic {

struct InstabilityFit {
    double c_bar = 0.0;     // fitted amplitude of c_bar * exp(rho * S)
    double rho = 0.0;       // growth exponent per unit arclength
    double residual = 0.0;  // rms misfit of ln|psi| against the line
    bool exponential = false;  // residual within the threshold
};

// Least squares of ln|psi| against S after dropping the leading transient.
// Throws FitError when a norm is nonpositive or fewer than 10 samples
// survive the transient cut.
InstabilityFit fit_instability_exponent(
    const std::vector<std::pair<double, double>>& norm_series,
    double transient_fraction = 0.2, double residual_threshold = 1e-2);

enum class StabilityClass { oscillatory, divergent, flat, mixed };

std::string to_string(StabilityClass c);

// Classifies a list of scalar curvatures sampled along a trajectory.
StabilityClass stability_classification(const std::vector<double>& scalars,
                                        double tol = 1e-9);

}  // namespace statgeo::geodesic
