#include "statgeo/instability.hpp"

#include <cmath>

#include "statgeo/errors.hpp"

namespace statgeo::geodesic {

InstabilityFit fit_instability_exponent(
    const std::vector<std::pair<double, double>>& norm_series,
    double transient_fraction, double residual_threshold) {
    if (transient_fraction < 0.0 || transient_fraction >= 1.0)
        throw DomainError("transient fraction must lie in [0, 1)");
    const std::size_t n = norm_series.size();
    const std::size_t skip =
        static_cast<std::size_t>(std::floor(transient_fraction * n));
    if (n < skip || n - skip < 10)
        throw FitError("need at least 10 post-transient samples, have " +
                       std::to_string(n - std::min(n, skip)));

    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    const std::size_t m = n - skip;
    for (std::size_t i = skip; i < n; ++i) {
        auto [s, norm] = norm_series[i];
        if (!(norm > 0.0))
            throw FitError("deviation norm must be positive for the "
                           "exponential fit");
        double y = std::log(norm);
        sx += s;
        sy += y;
        sxx += s * s;
        sxy += s * y;
    }
    double denom = m * sxx - sx * sx;
    if (denom == 0.0)
        throw FitError("arclength samples are degenerate");
    InstabilityFit fit;
    fit.rho = (m * sxy - sx * sy) / denom;
    double intercept = (sy - fit.rho * sx) / m;
    fit.c_bar = std::exp(intercept);

    double sse = 0.0;
    for (std::size_t i = skip; i < n; ++i) {
        auto [s, norm] = norm_series[i];
        double e = std::log(norm) - (intercept + fit.rho * s);
        sse += e * e;
    }
    fit.residual = std::sqrt(sse / m);
    fit.exponential = fit.residual <= residual_threshold;
    return fit;
}

std::string to_string(StabilityClass c) {
    switch (c) {
        case StabilityClass::oscillatory: return "oscillatory";
        case StabilityClass::divergent: return "divergent";
        case StabilityClass::flat: return "flat";
        case StabilityClass::mixed: return "mixed";
    }
    return "mixed";
}

StabilityClass stability_classification(const std::vector<double>& scalars,
                                        double tol) {
    if (scalars.empty())
        throw DomainError("curvature sample list is empty");
    bool all_small = true, all_pos = true, all_neg = true;
    for (double r : scalars) {
        if (std::abs(r) > tol) all_small = false;
        if (!(r > 0.0)) all_pos = false;
        if (!(r < 0.0)) all_neg = false;
    }
    if (all_small) return StabilityClass::flat;
    if (all_pos) return StabilityClass::oscillatory;
    if (all_neg) return StabilityClass::divergent;
    return StabilityClass::mixed;
}

}  // namespace statgeo::geodesic
