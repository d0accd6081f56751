#pragma once

#include <Eigen/Dense>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "statgeo/quadrature.hpp"
#include "statgeo/tensor.hpp"

namespace statgeo::manifold {

struct MacroPoint {
    Eigen::VectorXd coords;
    std::string chart_id;
};

MacroPoint make_point(std::initializer_list<double> coords,
                      std::string chart_id = "");

class MetricFamily {
public:
    virtual ~MetricFamily() = default;

    virtual int dim() const = 0;
    virtual std::string id() const = 0;

    // Indices of coordinates that must stay strictly positive (sigma-like).
    virtual std::vector<int> scale_coordinates() const { return {}; }

    virtual Eigen::MatrixXd metric(const Eigen::VectorXd& theta) const = 0;

    // dg(c, a, b) = d g_ab / d theta^c. Default is central differences on
    // metric(); analytic families override with exact derivatives.
    virtual Tensor3 metric_partials(const Eigen::VectorXd& theta) const;

    bool admissible(const Eigen::VectorXd& theta) const;
    void require_admissible(const Eigen::VectorXd& theta) const;
    void require_point(const MacroPoint& p) const;
};

class RaoGaussianAsPrinted final : public MetricFamily {
public:
    int dim() const override { return 2; }
    std::string id() const override { return "rao_gaussian_as_printed"; }
    std::vector<int> scale_coordinates() const override { return {1}; }
    Eigen::MatrixXd metric(const Eigen::VectorXd& theta) const override;
    Tensor3 metric_partials(const Eigen::VectorXd& theta) const override;
};

class RaoGaussianStandard final : public MetricFamily {
public:
    int dim() const override { return 2; }
    std::string id() const override { return "rao_gaussian_standard"; }
    std::vector<int> scale_coordinates() const override { return {1}; }
    Eigen::MatrixXd metric(const Eigen::VectorXd& theta) const override;
    Tensor3 metric_partials(const Eigen::VectorXd& theta) const override;
};

// Two means sharing one spread, with correlation r between the micro
// variables. Coordinates (mu_x, mu_y, sigma).
class Gaussian3D final : public MetricFamily {
public:
    explicit Gaussian3D(double r = 0.0);
    int dim() const override { return 3; }
    std::string id() const override { return "gaussian3d"; }
    std::vector<int> scale_coordinates() const override { return {2}; }
    Eigen::MatrixXd metric(const Eigen::VectorXd& theta) const override;
    Tensor3 metric_partials(const Eigen::VectorXd& theta) const override;
    double correlation() const { return r_; }

private:
    double r_;
    Eigen::Matrix3d coeff_;  // metric is coeff_ / sigma^2
};

class ConstantMetric final : public MetricFamily {
public:
    explicit ConstantMetric(Eigen::MatrixXd g);
    int dim() const override { return static_cast<int>(g_.rows()); }
    std::string id() const override { return "constant"; }
    Eigen::MatrixXd metric(const Eigen::VectorXd& theta) const override;
    Tensor3 metric_partials(const Eigen::VectorXd& theta) const override;

private:
    Eigen::MatrixXd g_;
};

// Diagnostic chart g = diag(1/theta_i^2) on the positive orthant. Kept for
// comparison runs only; not part of any validated family.
class InverseSquareDiagonal final : public MetricFamily {
public:
    explicit InverseSquareDiagonal(int d = 3);
    int dim() const override { return d_; }
    std::string id() const override { return "inverse_square_diag"; }
    std::vector<int> scale_coordinates() const override;
    Eigen::MatrixXd metric(const Eigen::VectorXd& theta) const override;
    Tensor3 metric_partials(const Eigen::VectorXd& theta) const override;

private:
    int d_;
};

// Metric computed from a micro-level density by quadrature. The density maps
// (micro point x, parameters theta) to p(x|theta); quadrature specs are built
// per theta so rules can track moving centers/scales.
class NumericDensityFamily final : public MetricFamily {
public:
    using Density =
        std::function<double(const Eigen::VectorXd&, const Eigen::VectorXd&)>;
    using QuadBuilder =
        std::function<std::vector<QuadratureSpec>(const Eigen::VectorXd&)>;
    using Prior = std::function<double(const Eigen::VectorXd&)>;

    NumericDensityFamily(int param_dim, int micro_dim, Density density,
                         QuadBuilder quads, std::vector<int> scale_coords = {},
                         Prior prior = {});

    int dim() const override { return param_dim_; }
    std::string id() const override { return "numeric_density"; }
    std::vector<int> scale_coordinates() const override { return scale_coords_; }
    Eigen::MatrixXd metric(const Eigen::VectorXd& theta) const override;

    int micro_dim() const { return micro_dim_; }
    double density(const Eigen::VectorXd& x, const Eigen::VectorXd& theta) const;
    std::vector<QuadratureSpec> quads_for(const Eigen::VectorXd& theta) const;
    const Prior& prior() const { return prior_; }

    // Optional box constraint on the micro support; quadrature nodes falling
    // outside raise QuadratureError.
    void set_support(Eigen::VectorXd lo, Eigen::VectorXd hi);
    const Eigen::VectorXd& support_lo() const { return lo_; }
    const Eigen::VectorXd& support_hi() const { return hi_; }

private:
    int param_dim_;
    int micro_dim_;
    Density density_;
    QuadBuilder quads_;
    std::vector<int> scale_coords_;
    Prior prior_;
    Eigen::VectorXd lo_, hi_;
};

// Central-difference step for d/dtheta at the given coordinate value,
// shrunk when a positivity constraint is nearby.
double fd_step(double coord, bool scale_like = false);

// Step for the five-point first-derivative stencil (evaluations out to
// +-2h must stay admissible).
double fd_step5(double coord, bool scale_like = false);

}  // namespace statgeo::manifold
