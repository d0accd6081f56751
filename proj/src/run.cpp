#include "statgeo/run.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <limits>
#include <memory>
#include <numeric>
#include <ostream>

#include "statgeo/closed_form.hpp"
#include "statgeo/csvio.hpp"
#include "statgeo/curvature.hpp"
#include "statgeo/econ.hpp"
#include "statgeo/fisher_checks.hpp"
#include "statgeo/geodesic.hpp"
#include "statgeo/instability.hpp"
#include "statgeo/maxent.hpp"
#include "statgeo/money.hpp"
#include "statgeo/svgplot.hpp"

namespace fs = std::filesystem;

namespace statgeo::scenario {

namespace {

Eigen::VectorXd to_vec(const std::vector<double>& v) {
    Eigen::VectorXd out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i];
    return out;
}

struct Sink {
    fs::path dir;
    bool plots;
    RunReport* report;

    std::string path(const std::string& name) const {
        return (dir / name).string();
    }
    void record(const std::string& name) {
        report->files.push_back(path(name));
    }
};

void plot_trajectory(Sink& sink, const std::string& name,
                     const geodesic::Trajectory& traj,
                     const std::string& title) {
    if (!sink.plots) return;
    std::vector<PlotSeries> series(traj.dim);
    for (int c = 0; c < traj.dim; ++c) {
        series[c].label = "theta_" + std::to_string(c + 1);
        for (std::size_t k = 0; k < traj.size(); ++k) {
            series[c].x.push_back(traj.s[k]);
            series[c].y.push_back(traj.rows[k][c]);
        }
    }
    PlotOptions opt;
    opt.title = title;
    opt.x_label = "S";
    opt.y_label = "coordinates";
    write_svg_plot(sink.path(name), series, opt);
    sink.record(name);
}

void run_geodesic(const GeodesicScenario& p, Sink& sink, RunReport& rep) {
    auto family = make_family(p.family);
    geodesic::GeodesicState init{{to_vec(p.theta0), family->id()},
                                 to_vec(p.u0),
                                 0.0};
    geodesic::Trajectory traj;
    bool completed = true;
    try {
        traj = integrate_geodesic(*family, init, p.s_end, p.stepper);
    } catch (const geodesic::BlowupError& e) {
        traj = e.partial;
        completed = false;
        rep.notes.push_back({"stopped_early", e.what()});
    }
    write_trajectory_csv(sink.path("geodesic.csv"), traj);
    sink.record("geodesic.csv");
    plot_trajectory(sink, "geodesic.svg", traj,
                    "Geodesic on " + family->id());
    rep.scalars.push_back({"s_reached", traj.s.empty() ? 0.0 : traj.s.back()});
    rep.scalars.push_back({"affine_drift", traj.meta.affine_drift});
    rep.scalars.push_back({"steps", static_cast<double>(traj.meta.steps)});
    rep.checks.push_back({"completed", completed});
    rep.checks.push_back(
        {"affine_parameter_preserved", traj.meta.affine_drift < 1e-6});
}

void run_deviation(const DeviationScenario& p, Sink& sink, RunReport& rep) {
    auto family = make_family(p.family);
    geodesic::DeviationState init{{{to_vec(p.theta0), family->id()},
                                   to_vec(p.u0),
                                   0.0},
                                  to_vec(p.psi0),
                                  to_vec(p.psi_rate0)};
    geodesic::Trajectory traj;
    bool completed = true;
    try {
        traj = integrate_deviation(*family, init, p.s_end, p.stepper);
    } catch (const geodesic::BlowupError& e) {
        traj = e.partial;
        completed = false;
        rep.notes.push_back({"stopped_early", e.what()});
    }
    write_trajectory_csv(sink.path("deviation.csv"), traj);
    sink.record("deviation.csv");

    auto norms = deviation_norm_series(*family, traj);
    std::vector<std::vector<double>> rows;
    rows.reserve(norms.size());
    for (const auto& [s, n] : norms) rows.push_back({s, n});
    write_csv(sink.path("deviation_norm.csv"), {"S", "norm"}, rows);
    sink.record("deviation_norm.csv");

    if (sink.plots) {
        PlotSeries ns;
        ns.label = "|psi|";
        for (const auto& [s, n] : norms) {
            ns.x.push_back(s);
            ns.y.push_back(n);
        }
        PlotOptions opt;
        opt.title = "Deviation growth";
        opt.x_label = "S";
        opt.y_label = "|psi|";
        opt.log_y = true;
        write_svg_plot(sink.path("deviation_norm.svg"), {ns}, opt);
        sink.record("deviation_norm.svg");
    }

    rep.checks.push_back({"completed", completed});
    try {
        auto fit = geodesic::fit_instability_exponent(norms, p.transient_fraction,
                                                      p.residual_threshold);
        rep.scalars.push_back({"rho", fit.rho});
        rep.scalars.push_back({"c_bar", fit.c_bar});
        rep.scalars.push_back({"fit_residual", fit.residual});
        rep.checks.push_back({"exponential_growth", fit.exponential});
    } catch (const FitError& e) {
        rep.notes.push_back({"instability_fit", e.what()});
    }
}

void run_curvature_scan(const CurvatureScanScenario& p, Sink& sink,
                        RunReport& rep) {
    auto family = make_family(p.family);
    Eigen::VectorXd a = to_vec(p.start), b = to_vec(p.stop);
    std::vector<std::string> header = {"lambda"};
    for (int i = 1; i <= family->dim(); ++i)
        header.push_back("theta_" + std::to_string(i));
    header.push_back("scalar_curvature");
    std::vector<std::vector<double>> rows;
    std::vector<double> scalars;
    for (int i = 0; i < p.samples; ++i) {
        double lam = static_cast<double>(i) / (p.samples - 1);
        Eigen::VectorXd theta = a + lam * (b - a);
        auto bundle = manifold::curvature_at(*family, theta);
        std::vector<double> row = {lam};
        for (int c = 0; c < theta.size(); ++c) row.push_back(theta[c]);
        row.push_back(bundle.scalar);
        rows.push_back(std::move(row));
        scalars.push_back(bundle.scalar);
    }
    write_csv(sink.path("curvature.csv"), header, rows);
    sink.record("curvature.csv");
    if (sink.plots) {
        PlotSeries s;
        s.label = "R";
        for (const auto& row : rows) {
            s.x.push_back(row.front());
            s.y.push_back(row.back());
        }
        PlotOptions opt;
        opt.title = "Scalar curvature along the segment";
        opt.x_label = "lambda";
        opt.y_label = "R";
        write_svg_plot(sink.path("curvature.svg"), {s}, opt);
        sink.record("curvature.svg");
    }
    auto [mn, mx] = std::minmax_element(scalars.begin(), scalars.end());
    rep.scalars.push_back({"scalar_min", *mn});
    rep.scalars.push_back({"scalar_max", *mx});
    rep.notes.push_back(
        {"classification",
         to_string(geodesic::stability_classification(scalars))});
}

void run_lv(const LVScenario& p, Sink& sink, RunReport& rep) {
    econ::LVParams params(p.alpha1, p.alpha2,
                          p.variant == "paper"
                              ? econ::LVParams::SignVariant::paper
                              : econ::LVParams::SignVariant::standard);
    std::vector<econ::LVSample> series;
    bool completed = true;
    try {
        series = econ::integrate_lv(params, p.k0, p.i0, p.t_end, p.stepper);
    } catch (const econ::LVBlowupError& e) {
        series = e.partial;
        completed = false;
        rep.notes.push_back({"stopped_early", e.what()});
    }
    std::vector<std::vector<double>> rows;
    rows.reserve(series.size());
    for (const auto& s : series) rows.push_back({s.t, s.K, s.I});
    write_csv(sink.path("lotka_volterra.csv"), {"t", "K", "I"}, rows);
    sink.record("lotka_volterra.csv");
    if (sink.plots && !series.empty()) {
        PlotSeries phase;
        phase.label = "orbit";
        for (const auto& s : series) {
            phase.x.push_back(s.K);
            phase.y.push_back(s.I);
        }
        PlotOptions opt;
        opt.title = "Capital against income";
        opt.x_label = "K";
        opt.y_label = "I";
        write_svg_plot(sink.path("lotka_volterra_phase.svg"), {phase}, opt);
        sink.record("lotka_volterra_phase.svg");
    }
    rep.checks.push_back({"completed", completed});
    rep.notes.push_back(
        {"conservative", econ::conservative(params) ? "true" : "false"});
    if (!series.empty()) {
        rep.scalars.push_back({"k_final", series.back().K});
        rep.scalars.push_back({"i_final", series.back().I});
    }
    if (econ::conservative(params) && !series.empty()) {
        double h0 = econ::lv_first_integral(params, series.front().K,
                                            series.front().I);
        double drift = 0.0;
        for (const auto& s : series) {
            drift = std::max(drift, std::abs(econ::lv_first_integral(
                                                 params, s.K, s.I) -
                                             h0));
        }
        double rel = drift / std::max(1.0, std::abs(h0));
        rep.scalars.push_back({"first_integral_drift", rel});
        rep.checks.push_back({"first_integral_conserved", rel < 1e-6});
    }
}

void run_growth(const GrowthScenario& p, Sink& sink, RunReport& rep) {
    econ::GrowthParams params(p.mu, p.nu, p.k0);
    auto series = econ::harrod_domar_trajectory(params, p.t_end, p.stepper);
    std::vector<std::vector<double>> rows;
    rows.reserve(series.size());
    double max_rel_err = 0.0, max_identity_gap = 0.0;
    for (const auto& s : series) {
        rows.push_back({s.t, s.K, s.Y, s.S, s.I, s.C});
        double exact = econ::harrod_domar_closed_form(params, s.t);
        max_rel_err = std::max(max_rel_err, std::abs(s.K - exact) / exact);
        max_identity_gap = std::max(
            {max_identity_gap, std::abs(s.Y - s.K / p.nu),
             std::abs(s.S - p.mu * s.Y), std::abs(s.I - s.S),
             std::abs(s.C - (s.Y - s.S))});
    }
    write_csv(sink.path("growth.csv"), {"t", "K", "Y", "S", "I", "C"}, rows);
    sink.record("growth.csv");
    if (sink.plots) {
        PlotSeries k;
        k.label = "K(t)";
        for (const auto& s : series) {
            k.x.push_back(s.t);
            k.y.push_back(s.K);
        }
        PlotOptions opt;
        opt.title = "Capital growth";
        opt.x_label = "t";
        opt.y_label = "K";
        opt.log_y = true;
        write_svg_plot(sink.path("growth.svg"), {k}, opt);
        sink.record("growth.svg");
    }
    rep.scalars.push_back({"growth_rate", p.mu / p.nu});
    rep.scalars.push_back({"doubling_time", std::log(2.0) * p.nu / p.mu});
    rep.scalars.push_back({"k_final", series.back().K});
    rep.scalars.push_back({"max_rel_err_vs_closed_form", max_rel_err});
    rep.checks.push_back({"matches_closed_form", max_rel_err < 1e-6});
    rep.checks.push_back({"accounting_identities", max_identity_gap < 1e-9});
}

void run_money_sim(const MoneySimScenario& p, std::uint64_t seed, Sink& sink,
                   RunReport& rep) {
    using namespace money;
    AgentEnsemble e =
        init_ensemble(p.agents, p.m_units,
                      p.init == "equal" ? InitRule::equal : InitRule::all_to_one,
                      seed);
    ExchangeRule rule;
    rule.kind = p.rule == "random_split" ? ExchangeRule::Kind::random_split
                                         : ExchangeRule::Kind::fixed_delta;
    rule.delta = std::llround(p.delta_units * kCentsPerUnit);
    ExchangeRun run = run_exchange(e, p.steps, rule, p.sample_every, p.bins,
                                   p.hist_max);

    double t_bar = temperature(run.final_state);
    double hi = p.hist_max > 0 ? p.hist_max : 10.0 * t_bar;

    // Pool every post-burn-in snapshot so the empirical law is averaged over
    // the stationary regime rather than read off one configuration.
    std::vector<double> pooled;
    for (std::size_t k = 0; k < run.snapshots.size(); ++k) {
        if (run.snapshot_steps[k] <= p.burn_in) continue;
        for (std::int64_t cents : run.snapshots[k])
            pooled.push_back(static_cast<double>(cents) / kCentsPerUnit);
    }
    if (pooled.empty()) {
        for (std::int64_t cents : run.final_state.holdings)
            pooled.push_back(static_cast<double>(cents) / kCentsPerUnit);
        rep.notes.push_back(
            {"pooling", "no snapshot past burn_in, used the final state"});
    }
    Histogram pooled_hist = make_histogram(pooled, p.bins, 0.0, hi);
    write_histogram_csv(sink.path("histogram.csv"), pooled_hist);
    sink.record("histogram.csv");

    auto fit = fit_exponential(pooled_hist);
    double ks_raw = ks_statistic_exponential(pooled, t_bar);
    double below = 0.0;
    for (double m : pooled)
        if (m < t_bar) below += 1.0;
    below /= static_cast<double>(pooled.size());

    if (sink.plots) {
        PlotSeries emp, bg;
        emp.label = "empirical";
        double n = static_cast<double>(pooled_hist.total_count);
        for (std::size_t i = 0; i + 1 < pooled_hist.bin_edges.size(); ++i) {
            double w = pooled_hist.bin_edges[i + 1] - pooled_hist.bin_edges[i];
            emp.x.push_back(0.5 * (pooled_hist.bin_edges[i] +
                                   pooled_hist.bin_edges[i + 1]));
            emp.y.push_back(pooled_hist.counts[i] / (n * w));
        }
        bg.label = "exponential";
        for (double x = 0; x <= hi; x += hi / 200.0) {
            bg.x.push_back(x);
            bg.y.push_back(bg_pdf(x, t_bar));
        }
        PlotOptions opt;
        opt.title = "Money distribution";
        opt.x_label = "m";
        opt.y_label = "density";
        opt.log_y = true;
        write_svg_plot(sink.path("histogram.svg"), {emp, bg}, opt);
        sink.record("histogram.svg");
    }

    rep.scalars.push_back({"t_bar", t_bar});
    rep.scalars.push_back({"t_hat", fit.t_hat});
    rep.scalars.push_back({"ks", ks_raw});
    rep.scalars.push_back({"p_below_tbar", below});
    rep.scalars.push_back({"entropy", gibbs_entropy(pooled_hist)});
    rep.scalars.push_back(
        {"pooled_samples", static_cast<double>(pooled.size())});
    rep.checks.push_back({"money_conserved",
                          run.final_state.total == e.total});
    if (p.rule == "random_split")
        rep.checks.push_back({"near_exponential", ks_raw < 0.05});
}

void run_couple(const CoupleScenario& p, std::uint64_t seed, Sink& sink,
                RunReport& rep) {
    using namespace money;
    AgentEnsemble e1 = init_ensemble(p.n1, p.m1, InitRule::equal, seed);
    AgentEnsemble e2 = init_ensemble(p.n2, p.m2, InitRule::equal, seed + 1);
    ExchangeRule rule;  // random_split
    CoupleResult res =
        couple_and_equilibrate(e1, e2, p.steps, rule, p.sample_every, seed);

    write_traces_csv(sink.path("traces.csv"), res.trace_steps, res.t1, res.t2);
    sink.record("traces.csv");
    if (sink.plots) {
        PlotSeries s1, s2;
        s1.label = "T1";
        s2.label = "T2";
        for (std::size_t i = 0; i < res.trace_steps.size(); ++i) {
            double x = static_cast<double>(res.trace_steps[i]);
            s1.x.push_back(x);
            s1.y.push_back(res.t1[i]);
            s2.x.push_back(x);
            s2.y.push_back(res.t2[i]);
        }
        PlotOptions opt;
        opt.title = "Temperatures after coupling";
        opt.x_label = "step";
        opt.y_label = "mean money";
        write_svg_plot(sink.path("traces.svg"), {s1, s2}, opt);
        sink.record("traces.svg");
    }

    // average the trailing quarter of the trace
    std::size_t n = res.trace_steps.size();
    std::size_t tail = std::max<std::size_t>(1, n / 4);
    double t1_avg = std::accumulate(res.t1.end() - tail, res.t1.end(), 0.0) /
                    static_cast<double>(tail);
    double t2_avg = std::accumulate(res.t2.end() - tail, res.t2.end(), 0.0) /
                    static_cast<double>(tail);
    double t_combined = (p.m1 + p.m2) / (p.n1 + p.n2);
    rep.scalars.push_back({"t1_initial", p.m1 / p.n1});
    rep.scalars.push_back({"t2_initial", p.m2 / p.n2});
    rep.scalars.push_back({"t1_final", t1_avg});
    rep.scalars.push_back({"t2_final", t2_avg});
    rep.scalars.push_back({"t_combined", t_combined});
    rep.checks.push_back(
        {"money_conserved", res.merged.total == e1.total + e2.total});
    rep.checks.push_back(
        {"temperatures_equalized",
         std::abs(t1_avg - t_combined) < 0.05 * t_combined &&
             std::abs(t2_avg - t_combined) < 0.05 * t_combined});
}

void run_maxent(const MaxEntScenario& p, Sink& sink, RunReport& rep) {
    using namespace money;
    MaxEntProblem prob;
    prob.prior = [](double) { return 1.0; };
    prob.targets = to_vec(p.targets);
    for (double power : p.powers) {
        prob.constraints.push_back(
            [power](double x) { return std::pow(x, power); });
    }

    QuadratureSpec quad;
    quad.order = p.order;
    double scale = p.scale;
    if (p.support == "half_line") {
        quad.scheme = QuadScheme::gauss_laguerre;
        quad.left = 0.0;
        if (scale <= 0) {
            scale = 1.0;
            for (std::size_t j = 0; j < p.powers.size(); ++j) {
                if (p.targets[j] > 0 && p.powers[j] > 0)
                    scale = std::max(scale,
                                     std::pow(p.targets[j], 1.0 / p.powers[j]));
            }
        }
    } else {
        quad.scheme = QuadScheme::gauss_hermite;
        quad.center = 0.0;
        if (scale <= 0) {
            scale = 1.0;
            for (std::size_t j = 0; j < p.powers.size(); ++j) {
                if (p.powers[j] == 2.0 && p.targets[j] > 0)
                    scale = std::max(scale, std::sqrt(2.0 * p.targets[j]));
            }
        }
    }
    quad.scale = scale;

    MaxEntResult result = maxent_fit(prob, quad);

    double lo = p.support == "half_line" ? 0.0 : -4.0 * scale;
    double hi = p.support == "half_line" ? 5.0 * scale : 4.0 * scale;
    std::vector<std::vector<double>> rows;
    PlotSeries curve;
    curve.label = "p(x)";
    for (int i = 0; i <= 200; ++i) {
        double x = lo + (hi - lo) * i / 200.0;
        double y = result.density(x);
        rows.push_back({x, y});
        curve.x.push_back(x);
        curve.y.push_back(y);
    }
    write_csv(sink.path("maxent_density.csv"), {"x", "p"}, rows);
    sink.record("maxent_density.csv");
    if (sink.plots) {
        PlotOptions opt;
        opt.title = "Maximum entropy density";
        opt.x_label = "x";
        opt.y_label = "p";
        write_svg_plot(sink.path("maxent_density.svg"), {curve}, opt);
        sink.record("maxent_density.svg");
    }

    for (int j = 0; j < result.lambda.size(); ++j) {
        rep.scalars.push_back(
            {"lambda_" + std::to_string(j + 1), result.lambda[j]});
    }
    rep.scalars.push_back({"log_z", result.log_z});
    rep.scalars.push_back({"residual", result.residual});
    rep.scalars.push_back(
        {"iterations", static_cast<double>(result.iterations)});

    auto rule = make_quadrature(quad);
    double entropy = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        double pd = result.density(rule.nodes[i]);
        if (pd > 0) entropy -= rule.weights[i] * pd * std::log(pd);
    }
    rep.scalars.push_back({"entropy", entropy});
    rep.checks.push_back({"converged", true});
}

void run_fisher_check(const FisherCheckScenario& p, Sink& sink,
                      RunReport& rep) {
    using manifold::NumericDensityFamily;
    const double root_2pi = std::sqrt(2.0 * M_PI);
    std::unique_ptr<NumericDensityFamily> family;
    if (p.density == "gaussian") {
        family = std::make_unique<NumericDensityFamily>(
            2, 1,
            [root_2pi](const Eigen::VectorXd& x, const Eigen::VectorXd& th) {
                double z = (x[0] - th[0]) / th[1];
                return std::exp(-0.5 * z * z) / (th[1] * root_2pi);
            },
            [](const Eigen::VectorXd& th) {
                QuadratureSpec q;
                q.scheme = QuadScheme::gauss_hermite;
                q.center = th[0];
                q.scale = std::sqrt(2.0) * th[1];
                return std::vector<QuadratureSpec>{q};
            },
            std::vector<int>{1});
    } else if (p.density == "exponential") {
        family = std::make_unique<NumericDensityFamily>(
            1, 1,
            [](const Eigen::VectorXd& x, const Eigen::VectorXd& th) {
                return x[0] < 0 ? 0.0 : std::exp(-x[0] / th[0]) / th[0];
            },
            [](const Eigen::VectorXd& th) {
                QuadratureSpec q;
                q.scheme = QuadScheme::gauss_laguerre;
                q.left = 0.0;
                q.scale = th[0];
                return std::vector<QuadratureSpec>{q};
            },
            std::vector<int>{0});
        Eigen::VectorXd lo(1), hi(1);
        lo << 0.0;
        hi << std::numeric_limits<double>::infinity();
        family->set_support(lo, hi);
    } else {  // gaussian2d_shared_sigma
        family = std::make_unique<NumericDensityFamily>(
            3, 2,
            [](const Eigen::VectorXd& x, const Eigen::VectorXd& th) {
                double zx = (x[0] - th[0]) / th[2];
                double zy = (x[1] - th[1]) / th[2];
                return std::exp(-0.5 * (zx * zx + zy * zy)) /
                       (2.0 * M_PI * th[2] * th[2]);
            },
            [](const Eigen::VectorXd& th) {
                QuadratureSpec qx, qy;
                qx.scheme = qy.scheme = QuadScheme::gauss_hermite;
                qx.center = th[0];
                qy.center = th[1];
                qx.scale = qy.scale = std::sqrt(2.0) * th[2];
                return std::vector<QuadratureSpec>{qx, qy};
            },
            std::vector<int>{2});
    }

    Eigen::VectorXd theta = to_vec(p.theta);
    manifold::MacroPoint point{theta, family->id()};
    auto quads = family->quads_for(theta);
    for (auto& q : quads) q.order = p.order;
    Eigen::MatrixXd g = fisher_metric_numeric(*family, theta, quads);

    std::vector<std::string> header;
    for (int j = 1; j <= g.cols(); ++j)
        header.push_back("g_" + std::to_string(j));
    std::vector<std::vector<double>> rows;
    for (int i = 0; i < g.rows(); ++i) {
        std::vector<double> row;
        for (int j = 0; j < g.cols(); ++j) row.push_back(g(i, j));
        rows.push_back(std::move(row));
    }
    write_csv(sink.path("fisher.csv"), header, rows);
    sink.record("fisher.csv");

    if (p.map != "none") {
        std::function<double(double)> f;
        if (p.map == "identity") {
            f = [](double x) { return x; };
        } else if (p.map == "affine") {
            double a = p.map_a, b = p.map_b;
            f = [a, b](double x) { return a * x + b; };
        } else {
            f = [](double x) { return x * x * x; };
        }
        try {
            auto cr = manifold::check_micro_invariance(*family, f, point, p.tol);
            rep.scalars.push_back({"micro_max_dev", cr.max_deviation});
            rep.checks.push_back({"micro_invariance", cr.pass});
        } catch (const Error& e) {
            rep.notes.push_back({"micro_invariance", e.what()});
            rep.checks.push_back({"micro_invariance", false});
        }
    }

    if (p.chart_map != "none") {
        std::function<Eigen::VectorXd(const Eigen::VectorXd&)> cm;
        if (p.chart_map == "identity") {
            cm = [](const Eigen::VectorXd& th) { return th; };
        } else {
            cm = [](const Eigen::VectorXd& th) {
                Eigen::VectorXd out = th;
                out[out.size() - 1] = std::log(th[th.size() - 1]);
                return out;
            };
        }
        auto cr = manifold::check_reparam_covariance(*family, cm, point, p.tol);
        rep.scalars.push_back({"reparam_max_dev", cr.max_deviation});
        rep.checks.push_back({"reparam_covariance", cr.pass});
    }
}

}  // namespace

RunReport run_scenario(const ScenarioConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    RunReport rep;
    std::error_code ec;
    fs::create_directories(cfg.output_dir, ec);
    if (ec) {
        throw IoError("cannot create output directory '" + cfg.output_dir +
                      "': " + ec.message());
    }
    Sink sink{fs::path(cfg.output_dir), cfg.plots, &rep};

    switch (cfg.kind) {
        case ScenarioKind::geodesic:
            run_geodesic(std::get<GeodesicScenario>(cfg.params), sink, rep);
            break;
        case ScenarioKind::deviation:
            run_deviation(std::get<DeviationScenario>(cfg.params), sink, rep);
            break;
        case ScenarioKind::curvature_scan:
            run_curvature_scan(std::get<CurvatureScanScenario>(cfg.params),
                               sink, rep);
            break;
        case ScenarioKind::lv:
            run_lv(std::get<LVScenario>(cfg.params), sink, rep);
            break;
        case ScenarioKind::growth:
            run_growth(std::get<GrowthScenario>(cfg.params), sink, rep);
            break;
        case ScenarioKind::money_sim:
            run_money_sim(std::get<MoneySimScenario>(cfg.params), cfg.seed,
                          sink, rep);
            break;
        case ScenarioKind::couple:
            run_couple(std::get<CoupleScenario>(cfg.params), cfg.seed, sink,
                       rep);
            break;
        case ScenarioKind::maxent:
            run_maxent(std::get<MaxEntScenario>(cfg.params), sink, rep);
            break;
        case ScenarioKind::fisher_check:
            run_fisher_check(std::get<FisherCheckScenario>(cfg.params), sink,
                             rep);
            break;
    }

    rep.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    return rep;
}

void print_report(std::ostream& out, const ScenarioConfig& cfg,
                  const RunReport& report) {
    out << "scenario: " << to_string(cfg.kind) << "\n";
    for (const auto& f : report.files) out << "wrote: " << f << "\n";
    for (const auto& [k, v] : report.scalars)
        out << "  " << k << " = " << format_double(v) << "\n";
    for (const auto& [k, v] : report.notes) out << "  " << k << ": " << v << "\n";
    for (const auto& [k, ok] : report.checks)
        out << "  check " << k << ": " << (ok ? "pass" : "FAIL") << "\n";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", report.seconds);
    out << "elapsed: " << buf << " s\n";
}

}  // namespace statgeo::scenario
