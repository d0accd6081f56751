#include "statgeo/fisher_checks.hpp"

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "statgeo/errors.hpp"

namespace statgeo::manifold {

namespace {

struct ProductRule {
    std::vector<QuadratureRule> axes;
    int micro_dim;

    template <typename Fn>
    void for_each_node(Fn&& fn) const {
        std::vector<int> idx(micro_dim, 0);
        Eigen::VectorXd x(micro_dim);
        while (true) {
            double w = 1.0;
            for (int k = 0; k < micro_dim; ++k) {
                x[k] = axes[k].nodes[idx[k]];
                w *= axes[k].weights[idx[k]];
            }
            fn(x, w);
            int k = 0;
            for (; k < micro_dim; ++k) {
                if (++idx[k] < static_cast<int>(axes[k].nodes.size())) break;
                idx[k] = 0;
            }
            if (k == micro_dim) break;
        }
    }
};

ProductRule build_rule(const NumericDensityFamily& family,
                       const std::vector<QuadratureSpec>& quads) {
    if (static_cast<int>(quads.size()) != family.micro_dim())
        throw QuadratureError("expected " + std::to_string(family.micro_dim()) +
                              " quadrature specs, got " +
                              std::to_string(quads.size()));
    ProductRule rule;
    rule.micro_dim = family.micro_dim();
    for (const auto& q : quads) rule.axes.push_back(make_quadrature(q));
    for (int k = 0; k < rule.micro_dim; ++k)
        for (double node : rule.axes[k].nodes)
            if (node < family.support_lo()[k] || node > family.support_hi()[k])
                throw QuadratureError(
                    "quadrature node " + std::to_string(node) +
                    " falls outside the density support in dimension " +
                    std::to_string(k + 1));
    return rule;
}

double invert_monotone(const std::function<double(double)>& f, double y,
                       double x_seed, double w0) {
    double w = std::max(std::abs(w0), 1e-8);
    double lo = x_seed - w, hi = x_seed + w;
    double flo = f(lo), fhi = f(hi);
    int it = 0;
    while (!((flo <= y && y <= fhi) || (fhi <= y && y <= flo))) {
        w *= 2.0;
        lo = x_seed - w;
        hi = x_seed + w;
        flo = f(lo);
        fhi = f(hi);
        if (++it > 200)
            throw MapError("failed to bracket the inverse image of a node");
    }
    bool increasing = flo <= fhi;
    for (int i = 0; i < 160; ++i) {
        double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        if ((f(mid) < y) == increasing)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

Eigen::MatrixXd fisher_metric_numeric(const NumericDensityFamily& family,
                                      const Eigen::VectorXd& theta,
                                      const std::vector<QuadratureSpec>& quads,
                                      double norm_tol) {
    family.require_admissible(theta);
    ProductRule rule = build_rule(family, quads);

    double mass = 0.0;
    rule.for_each_node([&](const Eigen::VectorXd& x, double w) {
        mass += w * family.density(x, theta);
    });
    if (!(std::abs(mass - 1.0) <= norm_tol)) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.6g", mass);
        throw NormalizationError("density integrates to " + std::string(buf) +
                                 " under the given rule, expected 1");
    }

    const int d = family.dim();
    std::vector<bool> scale(d, false);
    for (int s : family.scale_coordinates()) scale[s] = true;
    std::vector<double> h(d);
    std::vector<Eigen::VectorXd> tp(d), tm(d);
    for (int a = 0; a < d; ++a) {
        h[a] = fd_step(theta[a], scale[a]);
        tp[a] = theta;
        tp[a][a] += h[a];
        tm[a] = theta;
        tm[a][a] -= h[a];
    }

    Eigen::MatrixXd g = Eigen::MatrixXd::Zero(d, d);
    Eigen::VectorXd score(d);
    rule.for_each_node([&](const Eigen::VectorXd& x, double w) {
        double p0 = family.density(x, theta);
        if (p0 < 1e-300) return;  // negligible mass, score ill-defined
        for (int a = 0; a < d; ++a) {
            double pp = family.density(x, tp[a]);
            double pm = family.density(x, tm[a]);
            if (!(pp > 0.0) || !(pm > 0.0))
                throw DomainError(
                    "density vanished at a node under a parameter shift; "
                    "theta-dependent support is not handled");
            score[a] = (std::log(pp) - std::log(pm)) / (2.0 * h[a]);
        }
        g.noalias() += (w * p0) * (score * score.transpose());
    });
    return 0.5 * (g + g.transpose());
}

Eigen::MatrixXd fisher_metric_numeric(const NumericDensityFamily& family,
                                      const MacroPoint& p,
                                      const std::vector<QuadratureSpec>& quads,
                                      double norm_tol) {
    family.require_point(p);
    return fisher_metric_numeric(family, p.coords, quads, norm_tol);
}

CheckReport check_micro_invariance(const NumericDensityFamily& family,
                                   const std::function<double(double)>& f,
                                   const MacroPoint& p, double tol) {
    family.require_point(p);
    if (family.micro_dim() != 1)
        throw DomainError("micro-variable invariance checks are limited to "
                          "one-dimensional micro variables");
    const Eigen::VectorXd theta = p.coords;
    const auto quads = family.quads_for(theta);
    Eigen::MatrixXd g = fisher_metric_numeric(family, theta, quads);

    QuadratureRule base = make_quadrature(quads[0]);
    int direction = 0;
    for (size_t i = 0; i + 1 < base.nodes.size(); ++i) {
        double diff = f(base.nodes[i + 1]) - f(base.nodes[i]);
        if (diff == 0.0)
            throw MapError("map is not strictly monotone on the sampled support");
        int s = diff > 0.0 ? 1 : -1;
        if (direction == 0)
            direction = s;
        else if (s != direction)
            throw MapError("map changes direction on the sampled support");
    }

    QuadratureSpec tq = quads[0];
    switch (tq.scheme) {
        case QuadScheme::gauss_hermite: {
            double c = quads[0].center, s = quads[0].scale;
            tq.center = f(c);
            tq.scale = std::abs(f(c + s) - f(c - s)) / 2.0;
            break;
        }
        case QuadScheme::gauss_laguerre: {
            if (direction < 0)
                throw MapError("decreasing maps are not supported on "
                               "half-line supports");
            tq.left = f(quads[0].left);
            tq.scale = f(quads[0].left + quads[0].scale) - tq.left;
            break;
        }
        case QuadScheme::trapezoid: {
            double lo = f(quads[0].center - 6.0 * quads[0].scale);
            double hi = f(quads[0].center + 6.0 * quads[0].scale);
            if (lo > hi) std::swap(lo, hi);
            tq.center = 0.5 * (lo + hi);
            tq.scale = (hi - lo) / 12.0;
            break;
        }
    }
    if (!(tq.scale > 0.0) || !std::isfinite(tq.scale))
        throw MapError("map collapses the quadrature support");

    const double seed = quads[0].scheme == QuadScheme::gauss_laguerre
                            ? quads[0].left + quads[0].scale
                            : quads[0].center;
    const double width = quads[0].scale;
    NumericDensityFamily mapped(
        family.dim(), 1,
        [&family, &f, seed, width](const Eigen::VectorXd& y,
                                   const Eigen::VectorXd& th) {
            double x = invert_monotone(f, y[0], seed, width);
            double hd = fd_step(x);
            double slope = (f(x + hd) - f(x - hd)) / (2.0 * hd);
            if (!std::isfinite(slope) || slope == 0.0)
                throw QuadratureError(
                    "map Jacobian vanished at a transformed node");
            Eigen::VectorXd xv(1);
            xv[0] = x;
            return family.density(xv, th) / std::abs(slope);
        },
        [tq](const Eigen::VectorXd&) {
            return std::vector<QuadratureSpec>{tq};
        },
        family.scale_coordinates());

    Eigen::MatrixXd g_hat;
    try {
        g_hat = fisher_metric_numeric(mapped, theta, {tq});
    } catch (const NormalizationError& e) {
        throw QuadratureError(
            std::string("transformed density failed to normalize under the "
                        "mapped rule: ") +
            e.what());
    }

    CheckReport rep;
    rep.max_deviation = (g_hat - g).cwiseAbs().maxCoeff();
    rep.pass = rep.max_deviation <= tol;
    return rep;
}

CheckReport check_reparam_covariance(
    const MetricFamily& family,
    const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& chart_map,
    const MacroPoint& p, double tol) {
    family.require_point(p);
    const Eigen::VectorXd theta = p.coords;
    const int d = family.dim();
    const Eigen::MatrixXd g = family.metric(theta);

    std::vector<bool> scale(d, false);
    for (int s : family.scale_coordinates()) scale[s] = true;

    Eigen::MatrixXd J(d, d);
    for (int b = 0; b < d; ++b) {
        double h = fd_step(theta[b], scale[b]);
        Eigen::VectorXd tp = theta, tm = theta;
        tp[b] += h;
        tm[b] -= h;
        Eigen::VectorXd mp = chart_map(tp), mm = chart_map(tm);
        if (mp.size() != d || mm.size() != d)
            throw DomainError("chart map must preserve the dimension");
        J.col(b) = (mp - mm) / (2.0 * h);
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(J);
    if (!lu.isInvertible())
        throw SingularJacobianError(
            "chart map Jacobian is rank-deficient at the base point");
    Eigen::MatrixXd Jinv = lu.inverse();
    Eigen::MatrixXd g_hat = Jinv.transpose() * g * Jinv;

    // Squared lengths of small displacements, pushed through the actual map,
    // must agree with the transformed metric.
    Eigen::VectorXd eps(d);
    for (int i = 0; i < d; ++i) eps[i] = 1e-4 * std::max(1.0, std::abs(theta[i]));
    auto mismatch = [&](const Eigen::VectorXd& v) {
        Eigen::VectorXd dtheta = eps.cwiseProduct(v);
        Eigen::VectorXd delta =
            (chart_map(theta + dtheta) - chart_map(theta - dtheta)) / 2.0;
        double lhs = delta.dot(g_hat * delta);
        double rhs = dtheta.dot(g * dtheta);
        return std::abs(lhs - rhs) / std::abs(rhs);
    };

    CheckReport rep;
    for (int a = 0; a < d; ++a) {
        Eigen::VectorXd v = Eigen::VectorXd::Zero(d);
        v[a] = 1.0;
        rep.max_deviation = std::max(rep.max_deviation, mismatch(v));
        for (int b = a + 1; b < d; ++b) {
            v[b] = 1.0;
            rep.max_deviation = std::max(rep.max_deviation, mismatch(v));
            v[b] = 0.0;
        }
    }
    rep.max_deviation =
        std::max(rep.max_deviation, mismatch(Eigen::VectorXd::Ones(d)));
    rep.pass = rep.max_deviation <= tol;
    return rep;
}

}  // namespace statgeo::manifold
