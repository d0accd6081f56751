#include "statgeo/manifold.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include "statgeo/errors.hpp"
#include "statgeo/fisher_checks.hpp"

namespace statgeo::manifold {

MacroPoint make_point(std::initializer_list<double> coords,
                      std::string chart_id) {
    MacroPoint p;
    p.coords = Eigen::VectorXd(static_cast<Eigen::Index>(coords.size()));
    Eigen::Index i = 0;
    for (double c : coords) p.coords[i++] = c;
    p.chart_id = std::move(chart_id);
    return p;
}

double fd_step(double coord, bool scale_like) {
    static const double cbrt_eps =
        std::cbrt(std::numeric_limits<double>::epsilon());
    double h = cbrt_eps * std::max(1.0, std::abs(coord));
    if (scale_like && coord > 0.0) h = std::min(h, 0.5 * coord);
    return h;
}

double fd_step5(double coord, bool scale_like) {
    static const double fifth_root_eps =
        std::pow(std::numeric_limits<double>::epsilon(), 0.2);
    double h = fifth_root_eps * std::max(1.0, std::abs(coord));
    if (scale_like && coord > 0.0) h = std::min(h, 0.25 * coord);
    return h;
}

Tensor3 MetricFamily::metric_partials(const Eigen::VectorXd& theta) const {
    const int d = dim();
    Tensor3 dg(d);
    std::vector<bool> scale(d, false);
    for (int s : scale_coordinates()) scale[s] = true;
    for (int c = 0; c < d; ++c) {
        double h = fd_step(theta[c], scale[c]);
        Eigen::VectorXd tp = theta, tm = theta;
        tp[c] += h;
        tm[c] -= h;
        Eigen::MatrixXd gp = metric(tp);
        Eigen::MatrixXd gm = metric(tm);
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b)
                dg(c, a, b) = (gp(a, b) - gm(a, b)) / (2.0 * h);
    }
    return dg;
}

bool MetricFamily::admissible(const Eigen::VectorXd& theta) const {
    if (theta.size() != dim()) return false;
    if (!theta.allFinite()) return false;
    for (int s : scale_coordinates())
        if (!(theta[s] > 0.0)) return false;
    return true;
}

void MetricFamily::require_admissible(const Eigen::VectorXd& theta) const {
    if (theta.size() != dim())
        throw DomainError("point has " + std::to_string(theta.size()) +
                          " coordinates, chart '" + id() + "' has dimension " +
                          std::to_string(dim()));
    if (!theta.allFinite())
        throw DomainError("point has non-finite coordinates");
    for (int s : scale_coordinates())
        if (!(theta[s] > 0.0))
            throw DomainError("scale coordinate " + std::to_string(s + 1) +
                              " must be > 0 in chart '" + id() + "'");
}

void MetricFamily::require_point(const MacroPoint& p) const {
    if (!p.chart_id.empty() && p.chart_id != id())
        throw DomainError("point belongs to chart '" + p.chart_id +
                          "', not '" + id() + "'");
    require_admissible(p.coords);
}

Eigen::MatrixXd RaoGaussianAsPrinted::metric(const Eigen::VectorXd& theta) const {
    require_admissible(theta);
    double s2 = theta[1] * theta[1];
    Eigen::Matrix2d g;
    g << 1.0 / s2, 0.0, 0.0, 1.0 / s2;
    return g;
}

Tensor3 RaoGaussianAsPrinted::metric_partials(const Eigen::VectorXd& theta) const {
    require_admissible(theta);
    double s3 = theta[1] * theta[1] * theta[1];
    Tensor3 dg(2);
    dg(1, 0, 0) = -2.0 / s3;
    dg(1, 1, 1) = -2.0 / s3;
    return dg;
}

Eigen::MatrixXd RaoGaussianStandard::metric(const Eigen::VectorXd& theta) const {
    require_admissible(theta);
    double s2 = theta[1] * theta[1];
    Eigen::Matrix2d g;
    g << 1.0 / s2, 0.0, 0.0, 2.0 / s2;
    return g;
}

Tensor3 RaoGaussianStandard::metric_partials(const Eigen::VectorXd& theta) const {
    require_admissible(theta);
    double s3 = theta[1] * theta[1] * theta[1];
    Tensor3 dg(2);
    dg(1, 0, 0) = -2.0 / s3;
    dg(1, 1, 1) = -4.0 / s3;
    return dg;
}

Gaussian3D::Gaussian3D(double r) : r_(r) {
    if (!(std::abs(r) < 1.0))
        throw DomainError("correlation must satisfy |r| < 1");
    double q = 1.0 - r * r;
    coeff_ << 1.0 / q, -r / q, 0.0, -r / q, 1.0 / q, 0.0, 0.0, 0.0, 4.0;
}

Eigen::MatrixXd Gaussian3D::metric(const Eigen::VectorXd& theta) const {
    require_admissible(theta);
    double s2 = theta[2] * theta[2];
    return coeff_ / s2;
}

Tensor3 Gaussian3D::metric_partials(const Eigen::VectorXd& theta) const {
    require_admissible(theta);
    double s3 = theta[2] * theta[2] * theta[2];
    Tensor3 dg(3);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) dg(2, a, b) = -2.0 * coeff_(a, b) / s3;
    return dg;
}

ConstantMetric::ConstantMetric(Eigen::MatrixXd g) : g_(std::move(g)) {
    if (g_.rows() != g_.cols() || g_.rows() < 1)
        throw DomainError("constant metric must be a square matrix");
    if (!g_.isApprox(g_.transpose(), 1e-12))
        throw DomainError("constant metric must be symmetric");
}

Eigen::MatrixXd ConstantMetric::metric(const Eigen::VectorXd& theta) const {
    require_admissible(theta);
    return g_;
}

Tensor3 ConstantMetric::metric_partials(const Eigen::VectorXd& theta) const {
    require_admissible(theta);
    return Tensor3(dim());
}

InverseSquareDiagonal::InverseSquareDiagonal(int d) : d_(d) {
    if (d < 1 || d > 8) throw DomainError("dimension must lie in [1, 8]");
}

std::vector<int> InverseSquareDiagonal::scale_coordinates() const {
    std::vector<int> all(d_);
    for (int i = 0; i < d_; ++i) all[i] = i;
    return all;
}

Eigen::MatrixXd InverseSquareDiagonal::metric(const Eigen::VectorXd& theta) const {
    require_admissible(theta);
    Eigen::MatrixXd g = Eigen::MatrixXd::Zero(d_, d_);
    for (int i = 0; i < d_; ++i) g(i, i) = 1.0 / (theta[i] * theta[i]);
    return g;
}

Tensor3 InverseSquareDiagonal::metric_partials(const Eigen::VectorXd& theta) const {
    require_admissible(theta);
    Tensor3 dg(d_);
    for (int i = 0; i < d_; ++i)
        dg(i, i, i) = -2.0 / (theta[i] * theta[i] * theta[i]);
    return dg;
}

NumericDensityFamily::NumericDensityFamily(int param_dim, int micro_dim,
                                           Density density, QuadBuilder quads,
                                           std::vector<int> scale_coords,
                                           Prior prior)
    : param_dim_(param_dim),
      micro_dim_(micro_dim),
      density_(std::move(density)),
      quads_(std::move(quads)),
      scale_coords_(std::move(scale_coords)),
      prior_(std::move(prior)) {
    if (param_dim_ < 1 || param_dim_ > 8)
        throw DomainError("parameter dimension must lie in [1, 8]");
    if (micro_dim_ < 1 || micro_dim_ > 3)
        throw DomainError("micro dimension must lie in [1, 3]");
    if (!density_) throw DomainError("density callable is required");
    if (!quads_) throw DomainError("quadrature builder is required");
    double inf = std::numeric_limits<double>::infinity();
    lo_ = Eigen::VectorXd::Constant(micro_dim_, -inf);
    hi_ = Eigen::VectorXd::Constant(micro_dim_, inf);
}

double NumericDensityFamily::density(const Eigen::VectorXd& x,
                                     const Eigen::VectorXd& theta) const {
    return density_(x, theta);
}

std::vector<QuadratureSpec> NumericDensityFamily::quads_for(
    const Eigen::VectorXd& theta) const {
    auto specs = quads_(theta);
    if (static_cast<int>(specs.size()) != micro_dim_)
        throw QuadratureError("quadrature builder returned " +
                              std::to_string(specs.size()) + " specs for " +
                              std::to_string(micro_dim_) + " micro dimensions");
    return specs;
}

void NumericDensityFamily::set_support(Eigen::VectorXd lo, Eigen::VectorXd hi) {
    if (lo.size() != micro_dim_ || hi.size() != micro_dim_)
        throw DomainError("support bounds must match the micro dimension");
    lo_ = std::move(lo);
    hi_ = std::move(hi);
}

Eigen::MatrixXd NumericDensityFamily::metric(const Eigen::VectorXd& theta) const {
    require_admissible(theta);
    return fisher_metric_numeric(*this, theta, quads_for(theta));
}

}  // namespace statgeo::manifold
