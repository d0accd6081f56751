#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>

#include "statgeo/closed_form.hpp"
#include "statgeo/config.hpp"
#include "statgeo/curvature.hpp"
#include "statgeo/econ.hpp"
#include "statgeo/fisher_checks.hpp"
#include "statgeo/geodesic.hpp"
#include "statgeo/instability.hpp"
#include "statgeo/maxent.hpp"
#include "statgeo/money.hpp"
#include "statgeo/run.hpp"

namespace py = pybind11;
using namespace statgeo;

namespace {

std::unique_ptr<manifold::MetricFamily> family_from(const std::string& name,
                                                    double r, int dim,
                                                    std::vector<double> entries) {
    scenario::FamilySpec spec;
    spec.name = name;
    spec.r = r;
    spec.dim = dim;
    spec.entries = std::move(entries);
    return scenario::make_family(spec);
}

geodesic::Stepper stepper_from(const std::string& method, double step,
                               double rel_tol, int sample_every) {
    geodesic::Stepper st;
    if (method == "rk4") {
        st.kind = geodesic::Stepper::Kind::rk4;
    } else if (method == "rkf45") {
        st.kind = geodesic::Stepper::Kind::rkf45;
    } else {
        throw DomainError("unknown method '" + method + "' (rk4 or rkf45)");
    }
    st.step = step;
    st.rel_tol = rel_tol;
    st.sample_every = sample_every;
    return st;
}

py::dict trajectory_to_dict(const geodesic::Trajectory& traj) {
    const int d = traj.dim;
    const auto n = static_cast<Eigen::Index>(traj.size());
    Eigen::VectorXd s(n);
    Eigen::MatrixXd theta(n, d), u(n, d);
    Eigen::MatrixXd psi, psi_rate;
    if (traj.has_deviation) {
        psi.resize(n, d);
        psi_rate.resize(n, d);
    }
    for (Eigen::Index k = 0; k < n; ++k) {
        s[k] = traj.s[k];
        const auto& row = traj.rows[k];
        theta.row(k) = row.segment(0, d).transpose();
        u.row(k) = row.segment(d, d).transpose();
        if (traj.has_deviation) {
            psi.row(k) = row.segment(2 * d, d).transpose();
            psi_rate.row(k) = row.segment(3 * d, d).transpose();
        }
    }
    py::dict out;
    out["s"] = s;
    out["theta"] = theta;
    out["u"] = u;
    if (traj.has_deviation) {
        out["psi"] = psi;
        out["psi_rate"] = psi_rate;
    }
    out["affine_drift"] = traj.meta.affine_drift;
    out["steps"] = traj.meta.steps;
    out["method"] = traj.meta.method;
    return out;
}

py::dict report_to_dict(const scenario::ScenarioConfig& cfg,
                        const scenario::RunReport& rep) {
    py::dict out;
    out["kind"] = to_string(cfg.kind);
    out["files"] = rep.files;
    out["seconds"] = rep.seconds;
    py::dict scalars, checks, notes;
    for (const auto& [k, v] : rep.scalars) scalars[py::str(k)] = v;
    for (const auto& [k, v] : rep.checks) checks[py::str(k)] = v;
    for (const auto& [k, v] : rep.notes) notes[py::str(k)] = v;
    out["scalars"] = scalars;
    out["checks"] = checks;
    out["notes"] = notes;
    return out;
}

}  // namespace

PYBIND11_MODULE(_statgeo, m) {
    m.doc() = "geodesics, curvature and exchange statistics on economic "
              "state manifolds";

    // Translators run newest-first, so register the base before the derived
    // class or DomainError would surface as a bare StatgeoError.
    py::register_exception<statgeo::Error>(m, "StatgeoError",
                                           PyExc_RuntimeError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

    py::class_<manifold::MetricFamily>(m, "MetricFamily")
        .def_property_readonly("dim", &manifold::MetricFamily::dim)
        .def_property_readonly("id", &manifold::MetricFamily::id)
        .def("metric",
             [](const manifold::MetricFamily& f, const Eigen::VectorXd& th) {
                 return manifold::metric_at(f, th);
             })
        .def("inverse_metric",
             [](const manifold::MetricFamily& f, const Eigen::VectorXd& th) {
                 return manifold::inverse_metric_at(f, th);
             })
        .def("christoffel",
             [](const manifold::MetricFamily& f, const Eigen::VectorXd& th) {
                 auto gamma = manifold::christoffel_at(f, th);
                 const int d = gamma.dim();
                 py::array_t<double> out({d, d, d});
                 auto view = out.mutable_unchecked<3>();
                 for (int c = 0; c < d; ++c)
                     for (int a = 0; a < d; ++a)
                         for (int b = 0; b < d; ++b)
                             view(c, a, b) = gamma(c, a, b);
                 return out;
             })
        .def("curvature",
             [](const manifold::MetricFamily& f, const Eigen::VectorXd& th) {
                 auto bundle = manifold::curvature_at(f, th);
                 py::dict out;
                 out["scalar"] = bundle.scalar;
                 out["ricci"] = bundle.ricci;
                 return out;
             })
        .def("squared_distance",
             [](const manifold::MetricFamily& f, const Eigen::VectorXd& th,
                const Eigen::VectorXd& dth) {
                 return manifold::squared_distance(f, {th, f.id()}, dth);
             })
        .def("admissible", &manifold::MetricFamily::admissible);

    m.def("make_family", &family_from, py::arg("name"), py::arg("r") = 0.0,
          py::arg("dim") = 2, py::arg("entries") = std::vector<double>{});

    m.def(
        "check_reparam_covariance",
        [](const manifold::MetricFamily& f,
           const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& map,
           const Eigen::VectorXd& th, double tol) {
            auto rep = manifold::check_reparam_covariance(f, map,
                                                          {th, f.id()}, tol);
            py::dict out;
            out["max_deviation"] = rep.max_deviation;
            out["pass"] = rep.pass;
            return out;
        },
        py::arg("family"), py::arg("chart_map"), py::arg("theta"),
        py::arg("tol") = 1e-6);

    m.def(
        "integrate_geodesic",
        [](const manifold::MetricFamily& f, const Eigen::VectorXd& theta0,
           const Eigen::VectorXd& u0, double s_end, const std::string& method,
           double step, double rel_tol, int sample_every) {
            auto traj = geodesic::integrate_geodesic(
                f, {{theta0, f.id()}, u0, 0.0}, s_end,
                stepper_from(method, step, rel_tol, sample_every));
            return trajectory_to_dict(traj);
        },
        py::arg("family"), py::arg("theta0"), py::arg("u0"), py::arg("s_end"),
        py::arg("method") = "rkf45", py::arg("step") = 1e-3,
        py::arg("rel_tol") = 1e-8, py::arg("sample_every") = 1);

    m.def(
        "integrate_deviation",
        [](const manifold::MetricFamily& f, const Eigen::VectorXd& theta0,
           const Eigen::VectorXd& u0, const Eigen::VectorXd& psi0,
           const Eigen::VectorXd& psi_rate0, double s_end,
           const std::string& method, double step, double rel_tol,
           int sample_every) {
            auto traj = geodesic::integrate_deviation(
                f, {{{theta0, f.id()}, u0, 0.0}, psi0, psi_rate0}, s_end,
                stepper_from(method, step, rel_tol, sample_every));
            py::dict out = trajectory_to_dict(traj);
            auto norms = geodesic::deviation_norm_series(f, traj);
            Eigen::VectorXd nv(norms.size());
            for (std::size_t i = 0; i < norms.size(); ++i)
                nv[static_cast<Eigen::Index>(i)] = norms[i].second;
            out["norm"] = nv;
            return out;
        },
        py::arg("family"), py::arg("theta0"), py::arg("u0"), py::arg("psi0"),
        py::arg("psi_rate0"), py::arg("s_end"), py::arg("method") = "rkf45",
        py::arg("step") = 1e-3, py::arg("rel_tol") = 1e-8,
        py::arg("sample_every") = 1);

    m.def(
        "fit_instability_exponent",
        [](const Eigen::VectorXd& s, const Eigen::VectorXd& norm,
           double transient_fraction, double residual_threshold) {
            std::vector<std::pair<double, double>> series;
            for (Eigen::Index i = 0; i < s.size(); ++i)
                series.emplace_back(s[i], norm[i]);
            auto fit = geodesic::fit_instability_exponent(
                series, transient_fraction, residual_threshold);
            py::dict out;
            out["c_bar"] = fit.c_bar;
            out["rho"] = fit.rho;
            out["residual"] = fit.residual;
            out["exponential"] = fit.exponential;
            return out;
        },
        py::arg("s"), py::arg("norm"), py::arg("transient_fraction") = 0.2,
        py::arg("residual_threshold") = 1e-2);

    m.def(
        "stability_classification",
        [](const std::vector<double>& scalars, double tol) {
            return to_string(geodesic::stability_classification(scalars, tol));
        },
        py::arg("scalars"), py::arg("tol") = 1e-9);

    m.def(
        "closed_form_geodesic",
        [](double A, double B, const Eigen::VectorXd& s,
           const std::string& variant, double r, bool positive_sigma) {
            geodesic::ClosedFormParams params(
                A, B,
                variant == "correlated"
                    ? geodesic::ClosedFormParams::Variant::correlated
                    : geodesic::ClosedFormParams::Variant::uncorrelated,
                r, positive_sigma);
            Eigen::MatrixXd theta(s.size(), 3), u(s.size(), 3);
            for (Eigen::Index i = 0; i < s.size(); ++i) {
                theta.row(i) =
                    geodesic::closed_form_geodesic(params, s[i]).coords
                        .transpose();
                u.row(i) =
                    geodesic::closed_form_tangent(params, s[i]).transpose();
            }
            py::dict out;
            out["theta"] = theta;
            out["u"] = u;
            return out;
        },
        py::arg("A"), py::arg("B"), py::arg("s"),
        py::arg("variant") = "uncorrelated", py::arg("r") = 0.0,
        py::arg("positive_sigma") = false);

    m.def(
        "harrod_domar_trajectory",
        [](double mu, double nu, double k0, double t_end) {
            auto series = econ::harrod_domar_trajectory({mu, nu, k0}, t_end);
            const auto n = static_cast<Eigen::Index>(series.size());
            Eigen::MatrixXd out(n, 6);
            for (Eigen::Index i = 0; i < n; ++i) {
                const auto& s = series[i];
                out.row(i) << s.t, s.K, s.Y, s.S, s.I, s.C;
            }
            return out;
        },
        py::arg("mu"), py::arg("nu"), py::arg("k0"), py::arg("t_end"),
        "columns t, K, Y, S, I, C");

    m.def(
        "integrate_lv",
        [](double alpha1, double alpha2, double k0, double i0, double t_end,
           const std::string& variant) {
            econ::LVParams params(alpha1, alpha2,
                                  variant == "paper"
                                      ? econ::LVParams::SignVariant::paper
                                      : econ::LVParams::SignVariant::standard);
            auto series = econ::integrate_lv(params, k0, i0, t_end);
            const auto n = static_cast<Eigen::Index>(series.size());
            Eigen::MatrixXd out(n, 3);
            for (Eigen::Index i = 0; i < n; ++i)
                out.row(i) << series[i].t, series[i].K, series[i].I;
            return out;
        },
        py::arg("alpha1"), py::arg("alpha2"), py::arg("k0"), py::arg("i0"),
        py::arg("t_end"), py::arg("variant") = "standard",
        "columns t, K, I");

    m.def(
        "lv_first_integral",
        [](double alpha1, double alpha2, double K, double I,
           const std::string& variant) {
            econ::LVParams params(alpha1, alpha2,
                                  variant == "paper"
                                      ? econ::LVParams::SignVariant::paper
                                      : econ::LVParams::SignVariant::standard);
            return econ::lv_first_integral(params, K, I);
        },
        py::arg("alpha1"), py::arg("alpha2"), py::arg("K"), py::arg("I"),
        py::arg("variant") = "standard");

    m.def(
        "fit_connection_quadratic",
        [](double alpha1, double alpha2, const std::string& variant) {
            auto fit = econ::fit_connection_quadratic(
                alpha1, alpha2,
                variant == "paper" ? econ::LVParams::SignVariant::paper
                                   : econ::LVParams::SignVariant::standard);
            py::array_t<double> gamma({2, 2, 2});
            auto view = gamma.mutable_unchecked<3>();
            for (int c = 0; c < 2; ++c)
                for (int a = 0; a < 2; ++a)
                    for (int b = 0; b < 2; ++b)
                        view(c, a, b) = fit.gamma(c, a, b);
            py::dict out;
            out["gamma"] = gamma;
            out["residual_linear"] = Eigen::MatrixXd(fit.residual_linear);
            return out;
        },
        py::arg("alpha1"), py::arg("alpha2"), py::arg("variant") = "standard");

    m.def(
        "run_exchange",
        [](int agents, double m_units, std::int64_t steps, std::uint64_t seed,
           const std::string& rule, double delta_units,
           std::int64_t sample_every, int bins, double hist_max) {
            using namespace money;
            AgentEnsemble e =
                init_ensemble(agents, m_units, InitRule::equal, seed);
            ExchangeRule r;
            r.kind = rule == "fixed_delta" ? ExchangeRule::Kind::fixed_delta
                                           : ExchangeRule::Kind::random_split;
            r.delta = std::llround(delta_units * kCentsPerUnit);
            auto run = run_exchange(e, steps, r, sample_every, bins, hist_max);
            const auto& h = run.histograms.back();
            Eigen::VectorXd holdings(run.final_state.size());
            for (int i = 0; i < run.final_state.size(); ++i)
                holdings[i] = static_cast<double>(run.final_state.holdings[i]) /
                              kCentsPerUnit;
            auto fit = fit_exponential(h);
            py::dict out;
            out["holdings"] = holdings;
            out["t_bar"] = temperature(run.final_state);
            out["t_hat"] = fit.t_hat;
            out["ks"] = fit.ks;
            out["bin_edges"] = h.bin_edges;
            out["counts"] = h.counts;
            out["entropy"] = gibbs_entropy(h);
            return out;
        },
        py::arg("agents"), py::arg("m_units"), py::arg("steps"),
        py::arg("seed") = 0, py::arg("rule") = "random_split",
        py::arg("delta_units") = 1.0, py::arg("sample_every") = 10000,
        py::arg("bins") = 60, py::arg("hist_max") = -1.0);

    m.def(
        "couple_and_equilibrate",
        [](int n1, double m1, int n2, double m2, std::int64_t steps,
           std::uint64_t seed, std::int64_t sample_every) {
            using namespace money;
            auto e1 = init_ensemble(n1, m1, InitRule::equal, seed);
            auto e2 = init_ensemble(n2, m2, InitRule::equal, seed + 1);
            auto res = couple_and_equilibrate(e1, e2, steps, {}, sample_every,
                                              seed);
            py::dict out;
            out["steps"] = res.trace_steps;
            out["t1"] = res.t1;
            out["t2"] = res.t2;
            out["t_combined"] = (m1 + m2) / (n1 + n2);
            return out;
        },
        py::arg("n1"), py::arg("m1"), py::arg("n2"), py::arg("m2"),
        py::arg("steps"), py::arg("seed") = 0, py::arg("sample_every") = 5000);

    m.def("bg_pdf", &money::bg_pdf, py::arg("m"), py::arg("temperature"));

    m.def(
        "maxent_fit",
        [](const std::string& support, const std::vector<double>& powers,
           const Eigen::VectorXd& targets, int order, double scale,
           double tol) {
            using namespace money;
            MaxEntProblem prob;
            prob.prior = [](double) { return 1.0; };
            prob.targets = targets;
            for (double p : powers)
                prob.constraints.push_back(
                    [p](double x) { return std::pow(x, p); });
            QuadratureSpec quad;
            quad.order = order;
            if (support == "half_line") {
                quad.scheme = QuadScheme::gauss_laguerre;
                quad.left = 0.0;
            } else {
                quad.scheme = QuadScheme::gauss_hermite;
            }
            quad.scale = scale;
            auto res = maxent_fit(prob, quad, tol);
            py::dict out;
            out["lambda"] = Eigen::VectorXd(res.lambda);
            out["log_z"] = res.log_z;
            out["residual"] = res.residual;
            out["iterations"] = res.iterations;
            return out;
        },
        py::arg("support"), py::arg("powers"), py::arg("targets"),
        py::arg("order") = 64, py::arg("scale") = 1.0, py::arg("tol") = 1e-10);

    m.def(
        "run_scenario_file",
        [](const std::string& path, const std::string& out_dir,
           py::object seed, bool plots) {
            auto cfg = scenario::load_config(path);
            if (!out_dir.empty()) cfg.output_dir = out_dir;
            if (!seed.is_none()) cfg.seed = seed.cast<std::uint64_t>();
            if (!plots) cfg.plots = false;
            auto report = scenario::run_scenario(cfg);
            return report_to_dict(cfg, report);
        },
        py::arg("path"), py::arg("out_dir") = "", py::arg("seed") = py::none(),
        py::arg("plots") = true);
}
