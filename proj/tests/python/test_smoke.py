"""End-to-end checks of the python module against known values."""

import math
import os
import sys
import tempfile

import numpy as np

import statgeo


def check_family():
    fam = statgeo.make_family("gaussian3d", r=0.0)
    assert fam.dim == 3
    assert fam.id == "gaussian3d"

    theta = np.array([0.0, 0.0, 2.0])
    g = fam.metric(theta)
    assert np.allclose(np.diag(g), [0.25, 0.25, 1.0])
    assert fam.admissible(theta)
    assert not fam.admissible(np.array([0.0, 0.0, -1.0]))

    curv = fam.curvature(theta)
    assert abs(curv["scalar"] + 1.5) < 1e-6

    gamma = fam.christoffel(theta)
    assert gamma.shape == (3, 3, 3)
    assert abs(gamma[0, 0, 2] + 0.5) < 1e-12

    printed = statgeo.make_family("rao_gaussian_as_printed")
    assert abs(printed.curvature(np.array([0.0, 1.0]))["scalar"] + 2.0) < 1e-6


def check_geodesic():
    fam = statgeo.make_family("gaussian3d")
    run = statgeo.integrate_geodesic(
        fam,
        theta0=np.array([0.0, 0.0, 1.0]),
        u0=np.array([0.35, -0.2, 0.4]),
        s_end=5.0,
        method="rk4",
        step=1e-3,
        sample_every=100,
    )
    assert run["affine_drift"] < 1e-8
    assert run["theta"].shape[1] == 3
    assert run["s"][-1] >= 5.0 - 1e-9

    closed = statgeo.closed_form_geodesic(
        1.0, -1.0, np.linspace(0.0, 2.0, 21), positive_sigma=True
    )
    start = closed["theta"][0]
    assert abs(start[0]) < 1e-12 and abs(start[2] - 1.0) < 1e-12


def check_deviation():
    fam = statgeo.make_family("gaussian3d")
    run = statgeo.integrate_deviation(
        fam,
        theta0=np.array([0.0, 0.0, 1.0]),
        u0=np.array([0.0, 0.0, 1.0]),
        psi0=np.array([1.0, 0.0, 0.0]),
        psi_rate0=np.array([1.0, 0.0, 0.0]),
        s_end=6.0,
        method="rk4",
        step=1e-3,
        sample_every=100,
    )
    fit = statgeo.fit_instability_exponent(
        run["s"], run["norm"], transient_fraction=0.5
    )
    assert fit["exponential"]
    assert abs(fit["rho"] - 1.0) < 0.05


def check_econ():
    path = statgeo.harrod_domar_trajectory(mu=0.2, nu=2.0, k0=100.0, t_end=10.0)
    t, K = path[-1, 0], path[-1, 1]
    assert abs(K - 100.0 * math.exp(0.1 * t)) / K < 1e-6

    orbit = statgeo.integrate_lv(0.02, 0.5, 30.0, 20.0, 15.0)
    h0 = statgeo.lv_first_integral(0.02, 0.5, orbit[0, 1], orbit[0, 2])
    h1 = statgeo.lv_first_integral(0.02, 0.5, orbit[-1, 1], orbit[-1, 2])
    assert abs(h1 - h0) / abs(h0) < 1e-6

    fit = statgeo.fit_connection_quadratic(0.04, 0.7)
    assert abs(fit["gamma"][0, 0, 1] - 0.02) < 1e-12
    assert abs(fit["residual_linear"][1, 1] + 0.7) < 1e-12


def check_money():
    run = statgeo.run_exchange(
        agents=200, m_units=1000.0, steps=200000, seed=3, sample_every=20000
    )
    assert abs(sum(run["holdings"]) - 1000.0) < 1e-6
    assert abs(run["t_bar"] - 5.0) < 1e-9
    assert abs(run["t_hat"] - 5.0) < 0.75
    assert run["ks"] < 0.1

    res = statgeo.maxent_fit(
        "half_line", [1.0], np.array([5.0]), order=64, scale=5.0
    )
    assert abs(res["lambda"][0] - 0.2) < 1e-8
    assert abs(res["log_z"] - math.log(5.0)) < 1e-8

    assert abs(statgeo.bg_pdf(0.0, 5.0) - 0.2) < 1e-12


def check_errors():
    fam = statgeo.make_family("gaussian3d")
    try:
        fam.metric(np.array([0.0, 0.0, -1.0]))
    except ValueError:
        pass
    else:
        raise AssertionError("inadmissible point should raise ValueError")

    try:
        statgeo.maxent_fit("half_line", [1.0], np.array([-1.0]), scale=1.0)
    except RuntimeError:
        pass
    else:
        raise AssertionError("infeasible target should raise RuntimeError")


def check_scenario_file():
    with tempfile.TemporaryDirectory() as tmp:
        cfg = os.path.join(tmp, "growth.ini")
        with open(cfg, "w", encoding="utf-8") as f:
            f.write("[scenario]\nkind = growth\n\n[growth]\nt_end = 5\n")
        report = statgeo.run_scenario_file(cfg, out_dir=tmp, plots=False)
        assert report["kind"] == "growth"
        assert all(os.path.exists(p) for p in report["files"])
        assert any(p.endswith(".csv") for p in report["files"])
        checks = dict(report["checks"])
        assert checks["matches_closed_form"]


def main():
    steps = [
        check_family,
        check_geodesic,
        check_deviation,
        check_econ,
        check_money,
        check_errors,
        check_scenario_file,
    ]
    for step in steps:
        step()
        print(f"ok {step.__name__}")
    print(f"all {len(steps)} smoke checks passed")


if __name__ == "__main__":
    sys.exit(main())
