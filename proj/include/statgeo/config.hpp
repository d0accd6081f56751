#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "statgeo/errors.hpp"
#include "statgeo/geodesic.hpp"
#include "statgeo/manifold.hpp"

namespace statgeo::scenario {

struct ParseIssue {
    int line = 0;
    int col = 0;
    std::string message;
    bool syntax = false;  // malformed text vs an invalid or missing value
};

// Carries every problem found in one pass, not just the first.
class ConfigError : public Error {
public:
    explicit ConfigError(std::vector<ParseIssue> issues);
    const std::vector<ParseIssue>& issues() const { return issues_; }

private:
    std::vector<ParseIssue> issues_;
};

enum class ScenarioKind {
    geodesic,
    deviation,
    curvature_scan,
    lv,
    growth,
    money_sim,
    couple,
    maxent,
    fisher_check,
};

std::string to_string(ScenarioKind kind);

struct FamilySpec {
    std::string name = "gaussian3d";
    double r = 0.0;                // gaussian3d
    int dim = 2;                   // constant, inverse_square_diag
    std::vector<double> entries;   // constant metric, row-major; empty = identity
};

std::unique_ptr<manifold::MetricFamily> make_family(const FamilySpec& spec);

struct GeodesicScenario {
    FamilySpec family;
    std::vector<double> theta0, u0;
    double s_end = 5.0;
    geodesic::Stepper stepper;
};

struct DeviationScenario {
    FamilySpec family;
    std::vector<double> theta0, u0, psi0, psi_rate0;
    double s_end = 5.0;
    geodesic::Stepper stepper;
    double transient_fraction = 0.2;
    double residual_threshold = 1e-2;
};

struct CurvatureScanScenario {
    FamilySpec family;
    std::vector<double> start, stop;
    int samples = 50;
};

struct LVScenario {
    double alpha1 = 1.0, alpha2 = 1.0;
    std::string variant = "standard";
    double k0 = 1.0, i0 = 1.0, t_end = 10.0;
    geodesic::Stepper stepper;
};

struct GrowthScenario {
    double mu = 0.2, nu = 2.0, k0 = 100.0, t_end = 10.0;
    geodesic::Stepper stepper;
};

struct MoneySimScenario {
    int agents = 1000;
    double m_units = 5000.0;
    std::int64_t steps = 1000000;
    std::string init = "equal";
    std::string rule = "random_split";
    double delta_units = 1.0;       // fixed_delta only
    std::int64_t sample_every = 10000;
    std::int64_t burn_in = 200000;  // snapshots at or before this step are
                                    // excluded from pooled statistics
    int bins = 60;
    double hist_max = -1.0;         // units; <= 0 picks 10 * (M/N)
};

struct CoupleScenario {
    int n1 = 500, n2 = 500;
    double m1 = 1000.0, m2 = 4000.0;
    std::int64_t steps = 1000000;
    std::int64_t sample_every = 5000;
};

struct MaxEntScenario {
    std::string support = "half_line";  // or real_line
    std::vector<double> powers = {1.0};
    std::vector<double> targets = {5.0};
    int order = 64;
    double scale = 0.0;  // <= 0 picks a scale from the targets
};

struct FisherCheckScenario {
    std::string density = "gaussian";  // gaussian, exponential,
                                       // gaussian2d_shared_sigma
    std::vector<double> theta = {0.0, 1.0};
    int order = 64;
    std::string map = "affine";  // identity, affine, cube, none
    double map_a = 2.0, map_b = 1.0;
    std::string chart_map = "log_scale";  // identity, log_scale, none
    double tol = 1e-6;
};

struct ScenarioConfig {
    ScenarioKind kind = ScenarioKind::geodesic;
    std::string output_dir = ".";
    std::uint64_t seed = 0;
    bool plots = true;
    std::variant<GeodesicScenario, DeviationScenario, CurvatureScanScenario,
                 LVScenario, GrowthScenario, MoneySimScenario, CoupleScenario,
                 MaxEntScenario, FisherCheckScenario>
        params;
};

// Parses the INI-style text (sections, key = value, arrays in brackets,
// full-line # or ; comments) and validates every referenced parameter.
// Throws ConfigError listing all problems.
ScenarioConfig parse_config(const std::string& text);

// Reads the file and parses it; IoError if unreadable.
ScenarioConfig load_config(const std::string& path);

}  // namespace statgeo::scenario
