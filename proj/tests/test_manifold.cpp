#include <cmath>
#include <random>

#include <Eigen/Dense>

#include "doctest.h"
#include "statgeo/curvature.hpp"
#include "statgeo/errors.hpp"
#include "statgeo/fisher_checks.hpp"
#include "statgeo/manifold.hpp"
#include "support/oracles.hpp"

using namespace statgeo;
using namespace statgeo::manifold;

namespace {

Eigen::VectorXd vec3(double a, double b, double c) {
    Eigen::VectorXd v(3);
    v << a, b, c;
    return v;
}

Eigen::VectorXd vec2(double a, double b) {
    Eigen::VectorXd v(2);
    v << a, b;
    return v;
}

NumericDensityFamily gaussian_numeric_family() {
    auto density = [](const Eigen::VectorXd& x, const Eigen::VectorXd& th) {
        double z = (x[0] - th[0]) / th[1];
        return std::exp(-0.5 * z * z) / (th[1] * std::sqrt(2.0 * M_PI));
    };
    auto quads = [](const Eigen::VectorXd& th) {
        QuadratureSpec q;
        q.scheme = QuadScheme::gauss_hermite;
        q.order = 64;
        q.center = th[0];
        q.scale = std::sqrt(2.0) * th[1];
        return std::vector<QuadratureSpec>{q};
    };
    return NumericDensityFamily(2, 1, density, quads, {1});
}

NumericDensityFamily exponential_numeric_family() {
    auto density = [](const Eigen::VectorXd& x, const Eigen::VectorXd& th) {
        return std::exp(-x[0] / th[0]) / th[0];
    };
    auto quads = [](const Eigen::VectorXd& th) {
        QuadratureSpec q;
        q.scheme = QuadScheme::gauss_laguerre;
        q.order = 64;
        q.left = 0.0;
        q.scale = th[0];
        return std::vector<QuadratureSpec>{q};
    };
    NumericDensityFamily fam(1, 1, density, quads, {0});
    Eigen::VectorXd lo(1), hi(1);
    lo[0] = 0.0;
    hi[0] = std::numeric_limits<double>::infinity();
    fam.set_support(lo, hi);
    return fam;
}

}  // namespace

TEST_CASE("two-parameter gaussian charts match their closed-form metrics") {
    RaoGaussianAsPrinted printed;
    RaoGaussianStandard standard;

    Eigen::VectorXd th = vec2(0.7, 1.8);
    double s2 = th[1] * th[1];

    Eigen::MatrixXd gp = printed.metric(th);
    CHECK(gp(0, 0) == doctest::Approx(1.0 / s2).epsilon(1e-14));
    CHECK(gp(1, 1) == doctest::Approx(1.0 / s2).epsilon(1e-14));
    CHECK(gp(0, 1) == 0.0);

    Eigen::MatrixXd gs = standard.metric(th);
    CHECK(gs(0, 0) == doctest::Approx(1.0 / s2).epsilon(1e-14));
    CHECK(gs(1, 1) == doctest::Approx(2.0 / s2).epsilon(1e-14));
    CHECK(gs(0, 1) == 0.0);
}

TEST_CASE("gaussian3d metric carries the correlation block") {
    double r = 0.6;
    Gaussian3D fam(r);
    Eigen::VectorXd th = vec3(0.4, -1.1, 2.0);
    Eigen::MatrixXd g = fam.metric(th);
    double s2 = th[2] * th[2];
    double q = 1.0 - r * r;

    CHECK(g(0, 0) == doctest::Approx(1.0 / (q * s2)).epsilon(1e-14));
    CHECK(g(1, 1) == doctest::Approx(1.0 / (q * s2)).epsilon(1e-14));
    CHECK(g(0, 1) == doctest::Approx(-r / (q * s2)).epsilon(1e-14));
    CHECK(g(2, 2) == doctest::Approx(4.0 / s2).epsilon(1e-14));
    CHECK(g(0, 2) == 0.0);
    CHECK(g(1, 2) == 0.0);
    CHECK(fam.correlation() == r);
}

TEST_CASE("analytic metric partials agree with central differences") {
    std::mt19937 rng(41);
    std::uniform_real_distribution<double> mu(-2.0, 2.0);
    std::uniform_real_distribution<double> sig(0.4, 3.0);

    auto check_family = [&](const MetricFamily& fam, auto make_theta) {
        for (int trial = 0; trial < 20; ++trial) {
            Eigen::VectorXd th = make_theta();
            Tensor3 analytic = fam.metric_partials(th);
            Tensor3 numeric = fam.MetricFamily::metric_partials(th);
            const int d = fam.dim();
            for (int c = 0; c < d; ++c)
                for (int a = 0; a < d; ++a)
                    for (int b = 0; b < d; ++b)
                        CHECK(analytic(c, a, b) ==
                              doctest::Approx(numeric(c, a, b)).epsilon(1e-7));
        }
    };

    RaoGaussianAsPrinted printed;
    check_family(printed, [&] { return vec2(mu(rng), sig(rng)); });

    RaoGaussianStandard standard;
    check_family(standard, [&] { return vec2(mu(rng), sig(rng)); });

    Gaussian3D correlated(0.45);
    check_family(correlated, [&] { return vec3(mu(rng), mu(rng), sig(rng)); });
}

TEST_CASE("christoffel symbols agree with an independent reconstruction") {
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> mu(-2.0, 2.0);
    std::uniform_real_distribution<double> sig(0.5, 3.0);

    for (double r : {0.0, 0.5, -0.7}) {
        Gaussian3D fam(r);
        for (int trial = 0; trial < 30; ++trial) {
            Eigen::VectorXd th = vec3(mu(rng), mu(rng), sig(rng));
            Tensor3 gamma = christoffel_at(fam, th);
            Tensor3 ref = oracles::fd_christoffel(fam, th);
            for (int c = 0; c < 3; ++c)
                for (int a = 0; a < 3; ++a)
                    for (int b = 0; b < 3; ++b) {
                        CHECK(std::abs(gamma(c, a, b) - ref(c, a, b)) < 1e-6);
                        CHECK(gamma(c, a, b) ==
                              doctest::Approx(gamma(c, b, a)).epsilon(1e-12));
                    }
        }
    }
}

TEST_CASE("uncorrelated christoffel symbols take their closed-form values") {
    Gaussian3D fam(0.0);
    Eigen::VectorXd th = vec3(0.3, -0.9, 1.7);
    double s = th[2];
    Tensor3 gamma = christoffel_at(fam, th);

    CHECK(gamma(0, 0, 2) == doctest::Approx(-1.0 / s).epsilon(1e-12));
    CHECK(gamma(1, 1, 2) == doctest::Approx(-1.0 / s).epsilon(1e-12));
    CHECK(gamma(2, 2, 2) == doctest::Approx(-1.0 / s).epsilon(1e-12));
    CHECK(gamma(2, 0, 0) == doctest::Approx(1.0 / (4.0 * s)).epsilon(1e-12));
    CHECK(gamma(2, 1, 1) == doctest::Approx(1.0 / (4.0 * s)).epsilon(1e-12));
    CHECK(gamma(2, 0, 1) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(gamma(0, 0, 0) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(gamma(0, 1, 2) == doctest::Approx(0.0).epsilon(1e-12));

    double r = 0.35;
    Gaussian3D corr(r);
    Tensor3 gc = christoffel_at(corr, th);
    double expected = -r / (4.0 * s * (1.0 - r * r));
    CHECK(gc(2, 0, 1) == doctest::Approx(expected).epsilon(1e-10));
}

TEST_CASE("scalar curvature matches the known constants") {
    RaoGaussianAsPrinted printed;
    RaoGaussianStandard standard;
    Gaussian3D plain(0.0);
    Gaussian3D corr(0.5);

    std::mt19937 rng(7);
    std::uniform_real_distribution<double> mu(-3.0, 3.0);
    std::uniform_real_distribution<double> sig(0.5, 4.0);

    for (int trial = 0; trial < 10; ++trial) {
        Eigen::VectorXd th2 = vec2(mu(rng), sig(rng));
        CHECK(curvature_at(printed, th2).scalar ==
              doctest::Approx(-2.0).epsilon(1e-6));
        CHECK(curvature_at(standard, th2).scalar ==
              doctest::Approx(-1.0).epsilon(1e-6));

        Eigen::VectorXd th3 = vec3(mu(rng), mu(rng), sig(rng));
        CHECK(curvature_at(plain, th3).scalar ==
              doctest::Approx(-1.5).epsilon(1e-6));
        CHECK(curvature_at(corr, th3).scalar ==
              doctest::Approx(-1.5).epsilon(1e-6));
    }
}

TEST_CASE("scalar curvature agrees with a nested difference oracle") {
    Eigen::VectorXd th2 = vec2(0.8, 1.4);
    RaoGaussianStandard standard;
    CHECK(std::abs(curvature_at(standard, th2).scalar -
                   oracles::fd_scalar_curvature(standard, th2)) < 1e-4);

    Gaussian3D fam(0.3);
    Eigen::VectorXd th3 = vec3(0.1, -0.5, 2.2);
    CHECK(std::abs(curvature_at(fam, th3).scalar -
                   oracles::fd_scalar_curvature(fam, th3)) < 1e-4);
}

TEST_CASE("scalar curvature is strictly negative across the chart") {
    Gaussian3D fam(0.0);
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> mu(-5.0, 5.0);
    std::uniform_real_distribution<double> sig(0.2, 6.0);
    for (int trial = 0; trial < 50; ++trial) {
        Eigen::VectorXd th = vec3(mu(rng), mu(rng), sig(rng));
        CHECK(curvature_at(fam, th).scalar < 0.0);
    }
}

TEST_CASE("riemann tensor carries the expected symmetries") {
    Gaussian3D fam(0.4);
    Eigen::VectorXd th = vec3(0.6, -0.2, 1.3);
    CurvatureBundle bundle = curvature_at(fam, th);

    // Antisymmetry in the two derivative slots.
    for (int c = 0; c < 3; ++c)
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                for (int d = 0; d < 3; ++d)
                    CHECK(bundle.riemann(c, a, b, d) +
                              bundle.riemann(c, a, d, b) ==
                          doctest::Approx(0.0).scale(1.0).epsilon(1e-9));

    CHECK((bundle.ricci - bundle.ricci.transpose()).cwiseAbs().maxCoeff() <
          1e-9);
}

TEST_CASE("a constant metric is flat") {
    Eigen::MatrixXd g(2, 2);
    g << 3.0, 1.0, 1.0, 2.0;
    ConstantMetric fam(g);

    Eigen::VectorXd th = vec2(5.0, -7.0);
    CHECK((fam.metric(th) - g).cwiseAbs().maxCoeff() == 0.0);
    CHECK(christoffel_at(fam, th).max_abs() < 1e-12);

    CurvatureBundle bundle = curvature_at(fam, th);
    CHECK(bundle.riemann.max_abs() < 1e-10);
    CHECK(std::abs(bundle.scalar) < 1e-10);
}

TEST_CASE("inverse square diagonal chart") {
    InverseSquareDiagonal fam(3);
    Eigen::VectorXd th = vec3(0.5, 2.0, 4.0);
    Eigen::MatrixXd g = fam.metric(th);
    for (int i = 0; i < 3; ++i)
        CHECK(g(i, i) == doctest::Approx(1.0 / (th[i] * th[i])).epsilon(1e-14));
    CHECK(g(0, 1) == 0.0);

    CHECK(fam.admissible(th));
    CHECK_FALSE(fam.admissible(vec3(0.5, -2.0, 4.0)));
    CHECK(fam.scale_coordinates().size() == 3);
}

TEST_CASE("squared distance applies the metric to the displacement") {
    Gaussian3D fam(0.0);
    MacroPoint p = make_point({0.0, 0.0, 2.0}, "gaussian3d");
    Eigen::VectorXd dth = vec3(0.1, -0.2, 0.05);
    Eigen::MatrixXd g = fam.metric(p.coords);
    CHECK(squared_distance(fam, p, dth) ==
          doctest::Approx(dth.dot(g * dth)).epsilon(1e-12));
}

TEST_CASE("inadmissible points and malformed families are rejected") {
    Gaussian3D fam(0.0);
    CHECK_THROWS_AS((void)fam.metric(vec2(0.0, 1.0)), DomainError);
    CHECK_THROWS_AS((void)fam.metric(vec3(0.0, 0.0, -1.0)), DomainError);
    CHECK_THROWS_AS((void)fam.metric(vec3(0.0, 0.0, 0.0)), DomainError);
    CHECK_THROWS_AS(
        (void)fam.metric(vec3(0.0, std::numeric_limits<double>::quiet_NaN(), 1.0)),
        DomainError);

    MacroPoint wrong_chart = make_point({0.0, 0.0, 1.0}, "constant");
    CHECK_THROWS_AS(fam.require_point(wrong_chart), DomainError);

    CHECK_THROWS_AS(Gaussian3D(1.0), DomainError);
    CHECK_THROWS_AS(Gaussian3D(-1.2), DomainError);

    Eigen::MatrixXd bad(2, 3);
    bad.setZero();
    CHECK_THROWS_AS(ConstantMetric{bad}, DomainError);
    Eigen::MatrixXd asym(2, 2);
    asym << 1.0, 0.5, -0.5, 1.0;
    CHECK_THROWS_AS(ConstantMetric{asym}, DomainError);

    CHECK_THROWS_AS(InverseSquareDiagonal(0), DomainError);
    CHECK_THROWS_AS(InverseSquareDiagonal(9), DomainError);
}

TEST_CASE("numeric fisher metric reproduces the gaussian information") {
    NumericDensityFamily fam = gaussian_numeric_family();
    Eigen::VectorXd th = vec2(1.2, 0.8);
    Eigen::MatrixXd g = fisher_metric_numeric(fam, th, fam.quads_for(th));
    double s2 = th[1] * th[1];

    CHECK(g(0, 0) == doctest::Approx(1.0 / s2).epsilon(1e-6));
    CHECK(g(1, 1) == doctest::Approx(2.0 / s2).epsilon(1e-6));
    CHECK(std::abs(g(0, 1)) < 1e-8);

    MacroPoint p = make_point({1.2, 0.8}, fam.id());
    Eigen::MatrixXd g2 = fisher_metric_numeric(fam, p, fam.quads_for(th));
    CHECK((g - g2).cwiseAbs().maxCoeff() == 0.0);

    MacroPoint mismatched = make_point({1.2, 0.8}, "gaussian3d");
    CHECK_THROWS_AS(
        (void)fisher_metric_numeric(fam, mismatched, fam.quads_for(th)),
        DomainError);
}

TEST_CASE("numeric fisher metric reproduces the exponential information") {
    NumericDensityFamily fam = exponential_numeric_family();
    for (double t : {0.5, 1.0, 3.7}) {
        Eigen::VectorXd th(1);
        th[0] = t;
        Eigen::MatrixXd g = fisher_metric_numeric(fam, th, fam.quads_for(th));
        CHECK(g(0, 0) == doctest::Approx(1.0 / (t * t)).epsilon(1e-6));
    }
}

TEST_CASE("densities that fail to normalize are rejected") {
    auto density = [](const Eigen::VectorXd& x, const Eigen::VectorXd& th) {
        double z = (x[0] - th[0]) / th[1];
        return 2.0 * std::exp(-0.5 * z * z) / (th[1] * std::sqrt(2.0 * M_PI));
    };
    auto quads = [](const Eigen::VectorXd& th) {
        QuadratureSpec q;
        q.scheme = QuadScheme::gauss_hermite;
        q.order = 64;
        q.center = th[0];
        q.scale = std::sqrt(2.0) * th[1];
        return std::vector<QuadratureSpec>{q};
    };
    NumericDensityFamily fam(2, 1, density, quads, {1});
    Eigen::VectorXd th = vec2(0.0, 1.0);
    CHECK_THROWS_AS((void)fisher_metric_numeric(fam, th, fam.quads_for(th)),
                    NormalizationError);
}

TEST_CASE("quadrature nodes outside the declared support are rejected") {
    NumericDensityFamily fam = gaussian_numeric_family();
    Eigen::VectorXd lo(1), hi(1);
    lo[0] = -1.0;
    hi[0] = 1.0;
    fam.set_support(lo, hi);
    Eigen::VectorXd th = vec2(0.0, 1.0);
    CHECK_THROWS_AS((void)fisher_metric_numeric(fam, th, fam.quads_for(th)),
                    QuadratureError);
}

TEST_CASE("fisher metric is invariant under affine micro changes") {
    NumericDensityFamily fam = gaussian_numeric_family();
    MacroPoint p = make_point({0.5, 1.3}, fam.id());

    CheckReport rep = check_micro_invariance(
        fam, [](double x) { return 2.0 * x + 1.0; }, p, 1e-6);
    CHECK(rep.pass);
    CHECK(rep.max_deviation < 1e-6);

    CheckReport flipped = check_micro_invariance(
        fam, [](double x) { return -0.5 * x + 3.0; }, p, 1e-6);
    CHECK(flipped.pass);
}

TEST_CASE("non-monotone micro maps are rejected") {
    NumericDensityFamily fam = gaussian_numeric_family();
    MacroPoint p = make_point({0.5, 1.3}, fam.id());

    CHECK_THROWS_AS(
        (void)check_micro_invariance(fam, [](double x) { return x * x; }, p, 1e-6),
        MapError);
    CHECK_THROWS_AS(
        (void)check_micro_invariance(fam, [](double) { return 4.0; }, p, 1e-6),
        MapError);

    NumericDensityFamily expo = exponential_numeric_family();
    MacroPoint q = make_point({2.0}, expo.id());
    CHECK_THROWS_AS(
        (void)check_micro_invariance(expo, [](double x) { return -x; }, q, 1e-6),
        MapError);
}

TEST_CASE("metric entries transform covariantly under chart maps") {
    Gaussian3D fam(0.0);
    MacroPoint p = make_point({0.4, -0.3, 1.6}, "gaussian3d");

    auto log_scale = [](const Eigen::VectorXd& th) {
        Eigen::VectorXd out = th;
        out[2] = std::log(th[2]);
        return out;
    };
    CheckReport rep = check_reparam_covariance(fam, log_scale, p, 1e-6);
    CHECK(rep.pass);

    auto collapse = [](const Eigen::VectorXd& th) {
        Eigen::VectorXd out = Eigen::VectorXd::Ones(th.size());
        return out;
    };
    CHECK_THROWS_AS((void)check_reparam_covariance(fam, collapse, p, 1e-6),
                    SingularJacobianError);
}
