"""Acceptance suite: eleven numbered criteria, one pass/fail line each.

Each test prints ``criterion NN: PASS|FAIL (detail)`` directly to the
terminal (bypassing capture) and then asserts, so the tee'd run log
always carries the full scoreboard.  The frozen oracle numbers come from
``tests/_frozen.py``; see that module for provenance.
"""

import math
import warnings

import numpy as np

from _frozen import ORACLE
from casimir_stress import (
    Geometry,
    PlasmaModel,
    SlowConvergenceWarning,
    ThermalState,
    Tolerance,
    critical_omega_pa,
    energy_density,
    nec_longitudinal,
    nec_transverse,
    pressure_xx,
    pressure_zz,
    reference_limits,
)
from casimir_stress import stress as stress_mod
from casimir_stress.quadrature import (
    SemiInfinite,
    integrate_2d,
    integrate_semiinf,
    integrate_unit,
    matsubara_sum,
)

SAMPLE_TOL = Tolerance(rel_tol=1e-6, abs_tol=1e-9)


def report(capsys, num, ok, detail):
    line = f"criterion {num:02d}: {'PASS' if ok else 'FAIL'} ({detail})"
    with capsys.disabled():
        print(line)
    assert ok, line


def sample_points(n=100):
    """The shared randomized sample for criteria 5 and 6."""
    rng = np.random.default_rng(20240817)
    points = []
    for _ in range(n):
        omega_p = float(10.0 ** rng.uniform(-1.0, 3.0))
        z = float(rng.uniform(0.05, 0.95))
        beta = (None, 2.0, 5.0, 20.0)[int(rng.integers(0, 4))]
        points.append((omega_p, z, beta))
    return points


def clear_caches():
    stress_mod._zero_t_indep.cache_clear()
    stress_mod._thermal_term.cache_clear()


def test_criterion_01_perfect_conductor_convergence(capsys):
    geom = Geometry(0.5)
    model = PlasmaModel(1e4)
    refs = reference_limits()
    t00 = energy_density(geom, model).value
    txx = pressure_xx(geom, model).value
    tzz = pressure_zz(geom, model).value
    nec_z = nec_longitudinal(geom, model).value
    nec_x = nec_transverse(geom, model).value
    parts = {
        "t00": abs(t00 - refs["pc_energy_density"]) <= 0.01 * abs(refs["pc_energy_density"]),
        "txx": abs(txx - refs["pc_pressure_xx"]) <= 0.01 * abs(refs["pc_pressure_xx"]),
        "tzz": abs(tzz - refs["pc_pressure_zz"]) <= 0.01 * abs(refs["pc_pressure_zz"]),
        "nec_z": abs(nec_z - refs["pc_nec_longitudinal"])
        <= 0.01 * abs(refs["pc_nec_longitudinal"]),
        "nec_x": abs(nec_x) <= 2e-4,
    }
    detail = ", ".join(
        f"{name} dev {abs(val / ref - 1.0):.4%}"
        for name, val, ref in (
            ("t00", t00, refs["pc_energy_density"]),
            ("txx", txx, refs["pc_pressure_xx"]),
            ("tzz", tzz, refs["pc_pressure_zz"]),
            ("nec_z", nec_z, refs["pc_nec_longitudinal"]),
        )
    )
    detail += f", |nec_x| {abs(nec_x):.3e}"
    failed = [name for name, ok in parts.items() if not ok]
    if failed:
        detail += "; out of tolerance: " + ", ".join(failed)
    report(capsys, 1, all(parts.values()), detail)


def test_criterion_02_negative_energy_onset(capsys):
    value = critical_omega_pa()
    ok = value is not None and 80.0 <= value <= 120.0
    report(capsys, 2, ok, f"critical omega_p*a = {value}")


def test_criterion_03_thermal_positivity_threshold(capsys):
    hot = critical_omega_pa(ThermalState.finite(2.5))
    warm = critical_omega_pa(ThermalState.finite(5.0))
    cold = critical_omega_pa()
    ok = hot is None and warm is not None and cold is not None and warm > cold
    report(
        capsys, 3, ok,
        f"beta=2.5 -> {hot}, beta=5 -> {warm}, zero T -> {cold}",
    )


def test_criterion_04_blackbody_limit(capsys):
    geom = Geometry(0.5)
    exact = energy_density(geom, PlasmaModel(0.0), ThermalState.finite(1.0)).value
    refs = reference_limits()
    bitwise = exact == refs["blackbody_energy_coeff"]

    # Doubling the gap tenfold at fixed physical temperature and plasma
    # frequency multiplies omega_p*a by 10 and divides beta/a by 10; in
    # fixed physical units the interaction part must then shrink.
    u1 = energy_density(geom, PlasmaModel(100.0), ThermalState.finite(1.0)).value
    casimir1 = abs(u1 - math.pi**2 / 15.0)
    u2 = energy_density(geom, PlasmaModel(1000.0), ThermalState.finite(0.1)).value
    casimir2 = abs(u2 - math.pi**2 / (15.0 * 0.1**4)) / 1e4
    shrink = casimir1 / casimir2
    ok = bitwise and shrink >= 10.0
    report(
        capsys, 4, ok,
        f"energy at omega_p=0 {'==' if bitwise else '!='} pi^2/15, "
        f"interaction part shrinks {shrink:.0f}x on a -> 10a",
    )


def evaluate_nec_sample():
    out = []
    for omega_p, z, beta in sample_points():
        thermal = None if beta is None else ThermalState.finite(beta)
        res = nec_transverse(Geometry(z), PlasmaModel(omega_p), thermal, tol=SAMPLE_TOL)
        out.append((res.value, res.error_estimate))
    return out


def test_criterion_05_nec_positivity_property_suite(capsys):
    first = evaluate_nec_sample()
    margins_ok = all(value >= -10.0 * err for value, err in first)
    worst = min(value / max(err, 1e-300) for value, err in first)
    clear_caches()
    second = evaluate_nec_sample()
    repro_ok = first == second
    ok = margins_ok and repro_ok
    report(
        capsys, 5, ok,
        f"100 points, min value/error = {worst:.3g}, "
        f"reseeded rerun {'bitwise identical' if repro_ok else 'DIFFERS'}",
    )


def test_criterion_06_tracelessness_and_mirror_symmetry(capsys):
    worst_trace = 0.0
    worst_mirror = 0.0
    ok = True
    for omega_p, z, beta in sample_points():
        thermal = None if beta is None else ThermalState.finite(beta)
        model = PlasmaModel(omega_p)
        t00 = energy_density(Geometry(z), model, thermal, tol=SAMPLE_TOL)
        txx = pressure_xx(Geometry(z), model, thermal, tol=SAMPLE_TOL)
        tzz = pressure_zz(Geometry(z), model, thermal, tol=SAMPLE_TOL)
        trace = abs(t00.value - 2.0 * txx.value - tzz.value)
        bound = max(
            1e-10,
            10.0 * (t00.error_estimate + 2.0 * txx.error_estimate + tzz.error_estimate),
        )
        ok = ok and trace <= bound
        worst_trace = max(worst_trace, trace / bound)

        mirror = Geometry(1.0 - z)
        for q, here in (
            (energy_density(mirror, model, thermal, tol=SAMPLE_TOL), t00),
            (pressure_xx(mirror, model, thermal, tol=SAMPLE_TOL), txx),
        ):
            gap = abs(q.value - here.value)
            mbound = max(1e-10, 10.0 * (q.error_estimate + here.error_estimate))
            ok = ok and gap <= mbound
            worst_mirror = max(worst_mirror, gap / mbound)
    report(
        capsys, 6, ok,
        f"100 points, worst trace residual {worst_trace:.3g} of bound, "
        f"worst mirror residual {worst_mirror:.3g} of bound",
    )


def test_criterion_07_near_wall_law(capsys):
    model = PlasmaModel(100.0)
    zs = np.logspace(-3.0, -2.0, 5)
    vals = []
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", SlowConvergenceWarning)
        for z in zs:
            vals.append(pressure_xx(Geometry(float(z)), model, tol=SAMPLE_TOL).value)
    slope = np.polyfit(np.log(zs), np.log(vals), 1)[0]
    slope_ok = -3.2 <= slope <= -2.8

    u = energy_density(Geometry(1e-3), model, tol=SAMPLE_TOL).value
    ratio = u / vals[0]
    ratio_ok = abs(ratio - 2.0) <= 0.1 * 2.0
    ok = slope_ok and ratio_ok
    report(
        capsys, 7, ok,
        f"log-log slope {slope:.4f} (window [-3.2, -2.8]), "
        f"energy/pressure ratio {ratio:.6f}",
    )


def test_criterion_08_oracle_equivalence(capsys):
    worst = 0.0
    for (omega_p, z), expected in ORACLE.items():
        geom = Geometry(z)
        model = PlasmaModel(omega_p)
        for name, op in (
            ("energy_density", energy_density),
            ("pressure_zz", pressure_zz),
            ("pressure_xx", pressure_xx),
        ):
            got = op(geom, model).value
            rel = abs(got - expected[name]) / abs(expected[name])
            worst = max(worst, rel)
    report(capsys, 8, worst <= 1e-6, f"worst relative deviation {worst:.3e}")


def test_criterion_09_coordinate_equivalence(capsys):
    worst = 0.0
    for (omega_p, z) in ORACLE:
        geom = Geometry(z)
        model = PlasmaModel(omega_p)
        direct = nec_transverse(geom, model).value
        summed = energy_density(geom, model).value + pressure_xx(geom, model).value
        rel = abs(direct - summed) / abs(direct)
        worst = max(worst, rel)
    report(capsys, 9, worst <= 1e-6, f"worst relative gap {worst:.3e}")


def test_criterion_10_matsubara_sum_approaches_integral(capsys):
    geom = Geometry(0.5)
    model = PlasmaModel(100.0)
    beta = 100.0
    thermal = energy_density(geom, model, ThermalState.finite(beta)).value
    casimir = thermal - math.pi**2 / (15.0 * beta**4)
    zero = energy_density(geom, model).value
    rel = abs(casimir - zero) / abs(zero)
    report(capsys, 10, rel <= 5e-3, f"relative gap {rel:.3e} at beta = 100")


def test_criterion_11_quadrature_battery(capsys):
    checks = []

    def add(res, exact, label, hard_tol=None):
        err_ok = abs(res.value - exact) <= 10.0 * res.error_estimate + 1e-13
        hard_ok = hard_tol is None or abs(res.value - exact) <= hard_tol
        checks.append((label, err_ok and hard_ok and res.converged))

    add(integrate_semiinf(lambda x: np.exp(-x), 1.0), 1.0, "exp")
    add(
        integrate_semiinf(
            lambda x: x**3 * np.exp(-x) / (-np.expm1(-x)), 1.0,
            Tolerance(rel_tol=1e-12),
        ),
        math.pi**4 / 15.0,
        "bose cubic",
        hard_tol=1e-10,
    )
    add(integrate_semiinf(lambda x: x**2 * np.exp(-2.0 * x), 0.5), 0.25, "damped square")
    add(integrate_unit(lambda t: 3.0 * t**2 - 1.0), 0.0, "unit cancel")
    add(integrate_unit(lambda t: t * (1.0 - t**2)), 0.25, "unit cubic")
    add(
        integrate_2d(lambda x, y: np.exp(-x - y), SemiInfinite(1.0), SemiInfinite(1.0)),
        1.0,
        "product 2d",
    )
    q = math.exp(-2.0 * math.pi)
    add(
        matsubara_sum(lambda z: math.exp(-z), 1.0),
        0.5 + q / (1.0 - q),
        "thermal sum",
    )
    ok = all(flag for _, flag in checks)
    failed = [label for label, flag in checks if not flag]
    detail = f"{len(checks)} integrals within 10x reported error"
    if failed:
        detail += "; failed: " + ", ".join(failed)
    report(capsys, 11, ok, detail)
