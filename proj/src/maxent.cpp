#include "statgeo/maxent.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "statgeo/errors.hpp"

namespace statgeo::money {

double relative_entropy(const std::function<double(double)>& p,
                        const std::function<double(double)>& q,
                        const QuadratureSpec& quad) {
    QuadratureRule rule = make_quadrature(quad);
    double zp = 0.0, zq = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        zp += rule.weights[i] * p(rule.nodes[i]);
        zq += rule.weights[i] * q(rule.nodes[i]);
    }
    if (!std::isfinite(zp) || !std::isfinite(zq))
        throw QuadratureError("density is not integrable under the rule");
    if (std::abs(zp - 1.0) > 1e-6)
        throw NormalizationError("p integrates to " + std::to_string(zp));
    if (std::abs(zq - 1.0) > 1e-6)
        throw NormalizationError("q integrates to " + std::to_string(zq));

    double kl = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        double pi = p(rule.nodes[i]);
        if (pi <= 1e-300) continue;
        double qi = q(rule.nodes[i]);
        if (qi <= 1e-300)
            throw SupportError("q vanishes at x = " +
                               std::to_string(rule.nodes[i]) +
                               " where p has mass");
        kl += rule.weights[i] * pi * std::log(pi / qi);
    }
    if (kl < 0.0 && kl > -1e-12) kl = 0.0;  // quadrature roundoff on p == q
    return kl;
}

namespace {

struct DualState {
    double zt = 0.0;          // shifted partition sum
    double shift = 0.0;       // max exponent used for stability
    double objective = 0.0;   // log Z + lambda . targets, convex in lambda
    Eigen::VectorXd moments;  // E[a]
    Eigen::VectorXd residual;
    Eigen::MatrixXd cov;
};

DualState evaluate_dual(const Eigen::MatrixXd& a, const Eigen::VectorXd& wq,
                        const Eigen::VectorXd& lambda,
                        const Eigen::VectorXd& targets, bool with_cov) {
    const Eigen::Index n = wq.size();
    const Eigen::Index k = lambda.size();
    Eigen::VectorXd expo = -(a * lambda);
    double shift = -std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < n; ++i)
        if (wq[i] > 0.0) shift = std::max(shift, expo[i]);
    if (!std::isfinite(shift))
        throw InfeasibleError("prior carries no mass on the quadrature nodes");

    DualState st;
    st.shift = shift;
    Eigen::VectorXd pt(n);
    for (Eigen::Index i = 0; i < n; ++i)
        pt[i] = wq[i] > 0.0 ? wq[i] * std::exp(expo[i] - shift) : 0.0;
    st.zt = pt.sum();
    if (!(st.zt > 0.0) || !std::isfinite(st.zt))
        throw InfeasibleError("partition sum vanished during the iteration");
    pt /= st.zt;

    st.objective = std::log(st.zt) + shift + lambda.dot(targets);
    st.moments = a.transpose() * pt;
    st.residual = st.moments - targets;
    if (with_cov) {
        st.cov = Eigen::MatrixXd::Zero(k, k);
        for (Eigen::Index i = 0; i < n; ++i) {
            if (pt[i] == 0.0) continue;
            Eigen::VectorXd c = a.row(i).transpose() - st.moments;
            st.cov.noalias() += pt[i] * c * c.transpose();
        }
    }
    return st;
}

}  // namespace

MaxEntResult maxent_fit(const MaxEntProblem& prob, const QuadratureSpec& quad,
                        double tol, int max_iter) {
    if (prob.constraints.empty())
        throw DomainError("at least one constraint is required");
    if (prob.targets.size() != static_cast<Eigen::Index>(prob.constraints.size()))
        throw DomainError("target count must match the constraint count");
    if (!prob.targets.allFinite())
        throw DomainError("targets must be finite");
    if (!prob.prior) throw DomainError("prior callable is required");

    QuadratureRule rule = make_quadrature(quad);
    const auto n = static_cast<Eigen::Index>(rule.nodes.size());
    const auto k = static_cast<Eigen::Index>(prob.constraints.size());

    Eigen::VectorXd wq(n);
    Eigen::MatrixXd a(n, k);
    for (Eigen::Index i = 0; i < n; ++i) {
        double q = prob.prior(rule.nodes[i]);
        if (q < 0.0) throw DomainError("prior must be nonnegative");
        wq[i] = rule.weights[i] * q;
        for (Eigen::Index j = 0; j < k; ++j)
            a(i, j) = prob.constraints[j](rule.nodes[i]);
    }
    if (!a.allFinite())
        throw DomainError("constraint functions must be finite on the nodes");

    Eigen::VectorXd lambda = Eigen::VectorXd::Zero(k);
    DualState st = evaluate_dual(a, wq, lambda, prob.targets, true);
    int iter = 0;
    for (; iter < max_iter; ++iter) {
        if (st.residual.cwiseAbs().maxCoeff() < tol) break;

        Eigen::MatrixXd cov = st.cov;
        Eigen::LDLT<Eigen::MatrixXd> solver(cov);
        Eigen::VectorXd step;
        if (solver.info() == Eigen::Success) step = solver.solve(st.residual);
        if (solver.info() != Eigen::Success || !step.allFinite()) {
            cov.diagonal().array() += 1e-12 * (1.0 + cov.diagonal().maxCoeff());
            Eigen::LDLT<Eigen::MatrixXd> retry(cov);
            if (retry.info() != Eigen::Success)
                throw InfeasibleError("constraint covariance is degenerate");
            step = retry.solve(st.residual);
            if (!step.allFinite())
                throw InfeasibleError("constraint covariance is degenerate");
        }

        // Armijo backtracking on the dual objective; its gradient is the
        // negated residual, so the Newton direction is always a descent
        // direction and overshoots get rejected instead of trapping the
        // iteration in a point-mass collapse.
        double slope = -st.residual.dot(step);  // grad . step, negative
        double t = 1.0;
        bool improved = false;
        while (t > 1e-14) {
            Eigen::VectorXd trial = lambda + t * step;
            DualState trial_st;
            try {
                trial_st = evaluate_dual(a, wq, trial, prob.targets, false);
            } catch (const InfeasibleError&) {
                t *= 0.5;
                continue;
            }
            if (trial_st.objective <=
                st.objective + 1e-4 * t * slope) {
                lambda = trial;
                improved = true;
                break;
            }
            t *= 0.5;
        }
        if (!improved)
            throw InfeasibleError(
                "damped Newton stalled; the targets appear unattainable "
                "(residual " +
                std::to_string(st.residual.cwiseAbs().maxCoeff()) + ")");
        st = evaluate_dual(a, wq, lambda, prob.targets, true);
    }
    if (st.residual.cwiseAbs().maxCoeff() >= tol)
        throw InfeasibleError("iteration budget exhausted with residual " +
                              std::to_string(st.residual.cwiseAbs().maxCoeff()));

    MaxEntResult res;
    res.lambda = lambda;
    res.iterations = iter;
    res.residual = st.residual.cwiseAbs().maxCoeff();
    res.log_z = std::log(st.zt) + st.shift;

    auto prior = prob.prior;
    auto constraints = prob.constraints;
    double log_z = res.log_z;
    Eigen::VectorXd lam = lambda;
    res.density = [prior, constraints, lam, log_z](double x) {
        double expo = 0.0;
        for (std::size_t j = 0; j < constraints.size(); ++j)
            expo -= lam[static_cast<Eigen::Index>(j)] * constraints[j](x);
        return prior(x) * std::exp(expo - log_z);
    };
    return res;
}

}  // namespace statgeo::money
