#include "statgeo/quadrature.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "statgeo/errors.hpp"

namespace statgeo {

namespace {

// Golub-Welsch: nodes are eigenvalues of the Jacobi matrix, weights are
// mu0 * (first eigenvector component)^2.
QuadratureRule golub_welsch(const Eigen::VectorXd& diag,
                            const Eigen::VectorXd& offdiag, double mu0) {
    const int n = static_cast<int>(diag.size());
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) J(i, i) = diag[i];
    for (int i = 0; i + 1 < n; ++i) {
        J(i, i + 1) = offdiag[i];
        J(i + 1, i) = offdiag[i];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    if (es.info() != Eigen::Success)
        throw QuadratureError("Jacobi matrix eigendecomposition failed");
    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        rule.nodes[i] = es.eigenvalues()[i];
        double v0 = es.eigenvectors()(0, i);
        rule.weights[i] = mu0 * v0 * v0;
    }
    return rule;
}

}  // namespace

QuadratureRule make_quadrature(const QuadratureSpec& spec) {
    if (spec.order < 2 || spec.order > 256)
        throw QuadratureError("quadrature order must lie in [2, 256]");
    if (!(spec.scale > 0.0))
        throw QuadratureError("quadrature scale must be > 0");

    const int n = spec.order;
    QuadratureRule rule;

    switch (spec.scheme) {
        case QuadScheme::gauss_hermite: {
            Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
            Eigen::VectorXd off(n - 1);
            for (int k = 1; k < n; ++k) off[k - 1] = std::sqrt(k / 2.0);
            rule = golub_welsch(diag, off, std::sqrt(M_PI));
            // Convert from weight e^{-t^2} to a plain integral over x =
            // center + scale * t.
            for (int i = 0; i < n; ++i) {
                double t = rule.nodes[i];
                rule.weights[i] *= spec.scale * std::exp(t * t);
                rule.nodes[i] = spec.center + spec.scale * t;
            }
            break;
        }
        case QuadScheme::gauss_laguerre: {
            Eigen::VectorXd diag(n), off(n - 1);
            for (int k = 0; k < n; ++k) diag[k] = 2.0 * k + 1.0;
            for (int k = 1; k < n; ++k) off[k - 1] = static_cast<double>(k);
            rule = golub_welsch(diag, off, 1.0);
            // Weight e^{-u} on [0, inf); map to x = left + scale * u.
            for (int i = 0; i < n; ++i) {
                double u = rule.nodes[i];
                rule.weights[i] *= spec.scale * std::exp(u);
                rule.nodes[i] = spec.left + spec.scale * u;
            }
            break;
        }
        case QuadScheme::trapezoid: {
            double lo = spec.center - 6.0 * spec.scale;
            double hi = spec.center + 6.0 * spec.scale;
            double h = (hi - lo) / (n - 1);
            rule.nodes.resize(n);
            rule.weights.resize(n);
            for (int i = 0; i < n; ++i) {
                rule.nodes[i] = lo + i * h;
                rule.weights[i] = (i == 0 || i == n - 1) ? h / 2.0 : h;
            }
            break;
        }
    }
    return rule;
}

}  // namespace statgeo
