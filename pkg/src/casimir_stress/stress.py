"""Stress tensor of the electromagnetic vacuum between plasma half-spaces.

Two identical half-spaces with plasma-model permittivity face each other
across a vacuum gap of width ``a``; this module evaluates the renormalized
expectation values of the field squares and of the diagonal stress tensor
components inside the gap, at zero or finite temperature.  Everything is
computed in units of the gap width: lengths in ``a``, frequencies in
``1/a``, densities and pressures in ``1/a**4`` (with hbar = c = 1).  The
``units`` module converts to SI when needed.

Every quantity is a mode sum over imaginary frequency ``zeta`` and
transverse wavenumber ``k``, with ``kappa = sqrt(zeta**2 + k**2)`` the
decay constant of evanescent modes.  Two integrand building blocks appear
throughout, both built from the reflection coefficients ``r_s``, ``r_p``
and the round-trip factor ``E = exp(-2*kappa*a)``:

* a position-independent part proportional to
  ``r**2*E / (1 - r**2*E)`` summed over both polarizations, and
* a position-dependent interference part proportional to
  ``r / (1 - r**2*E)`` times the mirror factor
  ``(exp(-2*kappa*z) + exp(-2*kappa*(a-z))) / 2``,

which is the overflow-free form of ``exp(-kappa*a)*cosh(kappa*(2z-a))``.
The null-energy-condition combinations are also offered in polar spectral
coordinates ``(u, t)`` with ``zeta = u*t``, ``kappa = u``, where their
integrands are manifestly sign-definite term by term; the two coordinate
routes agree to quadrature tolerance and serve as a cross-check.

At finite temperature the continuous frequency integral becomes a sum
over Matsubara frequencies ``zeta_n = 2*pi*n/beta`` (half weight at
``n = 0``) and the homogeneous blackbody contribution is added back:
``pi**2/(15*beta**4)`` to the energy density, one third of that to each
pressure, and ``4*pi**2/(45*beta**4)`` to the transverse null-energy
combination.  The summand is even analytic in ``zeta``, so the truncated
sum converges to the zero-temperature integral exponentially fast as
``beta`` grows.

Sign conventions: negative energy density means the vacuum energy lies
below the free-space value; negative ``pressure_zz`` means the walls
attract.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, replace
from functools import lru_cache

import numpy as np

from . import dielectric
from .dielectric import PlasmaModel
from .quadrature import (
    QuadratureResult,
    SemiInfinite,
    Tolerance,
    UnitInterval,
    bracket_root,
    integrate_2d,
    integrate_semiinf,
    matsubara_sum,
)

__all__ = [
    "Geometry",
    "SlowConvergenceWarning",
    "StressDiagonal",
    "ThermalState",
    "critical_omega_pa",
    "energy_density",
    "mean_sq_B",
    "mean_sq_E",
    "near_wall_asymptote",
    "nec_longitudinal",
    "nec_transverse",
    "pressure_xx",
    "pressure_zz",
    "reference_limits",
    "stress_tensor",
]

_QUARTER_PI2 = 1.0 / (4.0 * math.pi**2)
_HALF_PI2 = 1.0 / (2.0 * math.pi**2)
_IND_SCALE = 0.5


class SlowConvergenceWarning(UserWarning):
    """Issued when a requested position sits within 1e-3 of a wall.

    The integrand there decays only on the scale 1/(2*min(z, a-z)) and
    the quantities themselves grow like 1/z**3, so quadrature cost and
    cancellation both climb.  Results are still returned; for positions
    deep inside the wall region consider near_wall_asymptote instead.
    """


@dataclass(frozen=True)
class Geometry:
    """Gap geometry: evaluation position ``z`` inside a gap of width ``a``.

    Parameters
    ----------
    z : float
        Position measured from one wall, 0 < z < a.
    a : float, default 1.0
        Gap width.  All internal arithmetic uses the ratio z/a and
        reports densities in 1/a**4 units; ``a`` itself matters only for
        SI conversion.
    """

    z: float
    a: float = 1.0

    def __post_init__(self):
        if not (math.isfinite(self.a) and self.a > 0.0):
            raise ValueError("gap width a must be a positive finite number")
        if not (math.isfinite(self.z) and 0.0 < self.z < self.a):
            raise ValueError("position z must satisfy 0 < z < a")

    @property
    def z_over_a(self) -> float:
        """Dimensionless position in (0, 1)."""
        return self.z / self.a


@dataclass(frozen=True)
class ThermalState:
    """Zero temperature, or a finite inverse temperature ``beta``.

    Parameters
    ----------
    beta : float or None
        Inverse temperature in units of the gap width ``a``; ``None``
        (or infinity, which normalizes to ``None``) means exactly zero
        temperature.
    """

    beta: float | None = None

    def __post_init__(self):
        if self.beta is not None:
            if math.isinf(self.beta) and self.beta > 0:
                object.__setattr__(self, "beta", None)
            elif not (math.isfinite(self.beta) and self.beta > 0.0):
                raise ValueError("beta must be positive (or None for zero temperature)")

    @classmethod
    def zero(cls) -> "ThermalState":
        """The zero-temperature state."""
        return cls(None)

    @classmethod
    def finite(cls, beta: float) -> "ThermalState":
        """A finite-temperature state with inverse temperature ``beta``."""
        return cls(float(beta))

    @property
    def is_zero(self) -> bool:
        """True when this state is exactly zero temperature."""
        return self.beta is None


@dataclass(frozen=True)
class StressDiagonal:
    """Diagonal stress tensor components, each with its error estimate.

    ``tyy`` always equals ``txx`` (the two transverse directions are
    equivalent by symmetry), and ``t00 = txx + tyy + tzz`` holds within
    the combined error estimates because the underlying integrands obey
    the tracelessness identity exactly.
    """

    t00: QuadratureResult
    txx: QuadratureResult
    tyy: QuadratureResult
    tzz: QuadratureResult


def _warn_if_near_wall(geom: Geometry) -> None:
    zr = geom.z_over_a
    if zr < 1e-3 or zr > 1.0 - 1e-3:
        warnings.warn(
            "position is within 1e-3*a of a wall; convergence is slow and the "
            "quantity grows like 1/z**3 (near_wall_asymptote gives the leading law)",
            SlowConvergenceWarning,
            stacklevel=3,
        )


def _dep_scale(z_over_a: float) -> float:
    """Decay scale of the position-dependent integrands, 1/(2*min(z, a-z))."""
    return 1.0 / (2.0 * min(z_over_a, 1.0 - z_over_a))


def _combine(*weighted: tuple[float, QuadratureResult]) -> QuadratureResult:
    """Weighted sum of quadrature results with root-sum-square errors."""
    value = 0.0
    variance = 0.0
    evaluations = 0
    converged = True
    for coeff, part in weighted:
        value += coeff * part.value
        variance += (coeff * part.error_estimate) ** 2
        evaluations += part.evaluations
        converged = converged and part.converged
    return QuadratureResult(value, math.sqrt(variance), evaluations, converged)


def _plus_constant(result: QuadratureResult, shift: float) -> QuadratureResult:
    return QuadratureResult(
        result.value + shift, result.error_estimate, result.evaluations, result.converged
    )


# ----------------------------------------------------------------------
# Integrands in (zeta, k) coordinates.
#
# Each factory closes over the model (and the position where needed) and
# returns f(zeta, k) accepting a scalar zeta with an array of k values.
# ----------------------------------------------------------------------


def _zk_fields(zeta, k, omega_p):
    kappa = np.sqrt(zeta * zeta + k * k)
    r_s, r_p = dielectric.rs_rp(zeta, k, omega_p)
    damp = np.exp(-2.0 * kappa)
    den_s = 1.0 - r_s * r_s * damp
    den_p = 1.0 - r_p * r_p * damp
    return kappa, r_s, r_p, damp, den_s, den_p


def _bound_sum(r_s, r_p, damp, den_s, den_p):
    return r_s * r_s * damp / den_s + r_p * r_p * damp / den_p


def _mirror(kappa, z_over_a):
    return 0.5 * (
        np.exp(-2.0 * kappa * z_over_a) + np.exp(-2.0 * kappa * (1.0 - z_over_a))
    )


def _interference_stable(zeta, kappa, r_s, r_p, damp, den_s, den_p, omega_p):
    """r_s/den_s + r_p/den_p computed without the r_p + r_s cancellation."""
    pair_sum = dielectric.rp_plus_rs_ut(kappa, zeta / kappa, omega_p)
    return pair_sum * (1.0 - r_s * r_p * damp) / (den_s * den_p)


def _f_energy_indep(omega_p):
    def f(zeta, k):
        kappa, r_s, r_p, damp, den_s, den_p = _zk_fields(zeta, k, omega_p)
        return -(zeta * zeta) * (k / kappa) * _bound_sum(r_s, r_p, damp, den_s, den_p)

    return f


def _f_energy_dep(omega_p, z_over_a):
    def f(zeta, k):
        kappa, r_s, r_p, damp, den_s, den_p = _zk_fields(zeta, k, omega_p)
        inter = r_s / den_s + r_p / den_p
        return (k / kappa) * k * k * inter * _mirror(kappa, z_over_a)

    return f


def _f_pressure_zz(omega_p):
    def f(zeta, k):
        kappa, r_s, r_p, damp, den_s, den_p = _zk_fields(zeta, k, omega_p)
        return -(k * kappa) * _bound_sum(r_s, r_p, damp, den_s, den_p)

    return f


def _f_pressure_xx_indep(omega_p):
    def f(zeta, k):
        kappa, r_s, r_p, damp, den_s, den_p = _zk_fields(zeta, k, omega_p)
        return (k**3 / kappa) * _bound_sum(r_s, r_p, damp, den_s, den_p)

    return f


def _f_pressure_xx_dep(omega_p, z_over_a):
    def f(zeta, k):
        kappa, r_s, r_p, damp, den_s, den_p = _zk_fields(zeta, k, omega_p)
        inter = r_s / den_s + r_p / den_p
        return (k**3 / kappa) * inter * _mirror(kappa, z_over_a)

    return f


def _f_sq_e_dep(omega_p, z_over_a):
    def f(zeta, k):
        kappa, r_s, r_p, damp, den_s, den_p = _zk_fields(zeta, k, omega_p)
        z2 = zeta * zeta
        weighted = -z2 * r_s / den_s + (2.0 * k * k + z2) * r_p / den_p
        return (k / kappa) * weighted * _mirror(kappa, z_over_a)

    return f


def _f_sq_b_dep(omega_p, z_over_a):
    def f(zeta, k):
        kappa, r_s, r_p, damp, den_s, den_p = _zk_fields(zeta, k, omega_p)
        z2 = zeta * zeta
        weighted = -z2 * r_p / den_p + (2.0 * k * k + z2) * r_s / den_s
        return (k / kappa) * weighted * _mirror(kappa, z_over_a)

    return f


def _f_nec_transverse_indep(omega_p):
    def f(zeta, k):
        kappa, r_s, r_p, damp, den_s, den_p = _zk_fields(zeta, k, omega_p)
        return (
            (k / kappa)
            * (k * k - 2.0 * zeta * zeta)
            * _bound_sum(r_s, r_p, damp, den_s, den_p)
        )

    return f


def _f_nec_transverse_dep(omega_p, z_over_a):
    def f(zeta, k):
        kappa, r_s, r_p, damp, den_s, den_p = _zk_fields(zeta, k, omega_p)
        inter = _interference_stable(
            zeta, kappa, r_s, r_p, damp, den_s, den_p, omega_p
        )
        return (k / kappa) * 3.0 * k * k * inter * _mirror(kappa, z_over_a)

    return f


def _f_nec_transverse_mid(omega_p):
    # Midpoint fast path: with z = a/2 the k-integral of the transverse
    # null-energy summand collapses, via k dk = kappa dkappa, to a single
    # integral over kappa = zeta + x:
    #     (kappa**2 - 3*zeta**2)*bound + 3*(kappa**2 - zeta**2)*inter*exp(-kappa)
    # where kappa**2 - zeta**2 is formed as x*(x + 2*zeta) to keep full
    # precision at small x.
    def f(zeta, x):
        kappa = zeta + x
        tpol = zeta / kappa
        r_s, r_p = dielectric.rs_rp_ut(kappa, tpol, omega_p)
        damp = np.exp(-2.0 * kappa)
        den_s = 1.0 - r_s * r_s * damp
        den_p = 1.0 - r_p * r_p * damp
        bound = _bound_sum(r_s, r_p, damp, den_s, den_p)
        pair_sum = dielectric.rp_plus_rs_ut(kappa, tpol, omega_p)
        inter = pair_sum * (1.0 - r_s * r_p * damp) / (den_s * den_p)
        k2 = x * (x + 2.0 * zeta)
        return (kappa * kappa - 3.0 * zeta * zeta) * bound + 3.0 * k2 * inter * np.exp(
            -kappa
        )

    return f


# ----------------------------------------------------------------------
# Integrands in polar spectral coordinates (u, t), used for the zero-
# temperature null-energy combinations.  The outer variable is u (the
# evanescent decay constant), the inner is t = zeta/u on (0, 1); both
# integrand pieces live under one integral here, which is what makes the
# sign structure manifest.
# ----------------------------------------------------------------------


def _ut_fields(u, t, omega_p):
    r_s, r_p = dielectric.rs_rp_ut(u, t, omega_p)
    damp = math.exp(-2.0 * u)
    den_s = 1.0 - r_s * r_s * damp
    den_p = 1.0 - r_p * r_p * damp
    bound = _bound_sum(r_s, r_p, damp, den_s, den_p)
    pair_sum = dielectric.rp_plus_rs_ut(u, t, omega_p)
    inter = pair_sum * (1.0 - r_s * r_p * damp) / (den_s * den_p)
    return bound, inter


def _f_nec_transverse_ut(omega_p, z_over_a):
    def f(u, t):
        bound, inter = _ut_fields(u, t, omega_p)
        mirror = 0.5 * (
            math.exp(-2.0 * u * z_over_a) + math.exp(-2.0 * u * (1.0 - z_over_a))
        )
        t2 = t * t
        return u**3 * (-(3.0 * t2 - 1.0) * bound + 3.0 * (1.0 - t2) * inter * mirror)

    return f


def _f_nec_longitudinal_ut(omega_p, z_over_a):
    def f(u, t):
        bound, inter = _ut_fields(u, t, omega_p)
        mirror = 0.5 * (
            math.exp(-2.0 * u * z_over_a) + math.exp(-2.0 * u * (1.0 - z_over_a))
        )
        t2 = t * t
        return u**3 * (-(1.0 + t2) * bound + (1.0 - t2) * inter * mirror)

    return f


# ----------------------------------------------------------------------
# Assembly: zero-temperature double integrals and Matsubara sums.
#
# Position-independent parts depend only on (part, omega_p, tolerance)
# and are cached, as are the per-frequency inner integrals of the
# thermal sums; a midpoint profile then reuses every z-independent piece
# across positions.
# ----------------------------------------------------------------------

_ZK_PARTS = {
    "energy_indep": (_f_energy_indep, False),
    "energy_dep": (_f_energy_dep, True),
    "pressure_zz": (_f_pressure_zz, False),
    "pressure_xx_indep": (_f_pressure_xx_indep, False),
    "pressure_xx_dep": (_f_pressure_xx_dep, True),
    "sq_e_dep": (_f_sq_e_dep, True),
    "sq_b_dep": (_f_sq_b_dep, True),
    "nec_transverse_indep": (_f_nec_transverse_indep, False),
    "nec_transverse_dep": (_f_nec_transverse_dep, True),
    "nec_transverse_mid": (_f_nec_transverse_mid, False),
}


def _part_integrand(name: str, omega_p: float, z_over_a):
    builder, needs_z = _ZK_PARTS[name]
    return builder(omega_p, z_over_a) if needs_z else builder(omega_p)


def _part_scale(name: str, z_over_a) -> float:
    if name == "nec_transverse_mid":
        return 1.0
    return _dep_scale(z_over_a) if _ZK_PARTS[name][1] else _IND_SCALE


@lru_cache(maxsize=4096)
def _zero_t_indep(name: str, omega_p: float, tol: Tolerance) -> QuadratureResult:
    f = _part_integrand(name, omega_p, None)
    domain = SemiInfinite(_IND_SCALE)
    return integrate_2d(f, domain, domain, tol)


def _zero_t_dep(name: str, omega_p: float, z_over_a: float, tol: Tolerance):
    f = _part_integrand(name, omega_p, z_over_a)
    domain = SemiInfinite(_dep_scale(z_over_a))
    return integrate_2d(f, domain, domain, tol)


@lru_cache(maxsize=262144)
def _thermal_term(
    name: str, omega_p: float, z_over_a, zeta: float, tol: Tolerance
) -> QuadratureResult:
    f = _part_integrand(name, omega_p, z_over_a)
    return integrate_semiinf(
        lambda k: f(zeta, k), _part_scale(name, z_over_a), tol
    )


def _thermal_sum(
    names: list[str],
    omega_p: float,
    z_over_a: float,
    beta: float,
    tol: Tolerance,
    prefactor: float,
) -> QuadratureResult:
    """Matsubara-sum the named inner integrals and scale by 2*pi*prefactor.

    The inner-quadrature error of every term rides along with the same
    weights as the values (half weight for the zero frequency) and is
    added to the truncation estimate of the frequency sum.
    """
    inner_errors: list[float] = []
    state = {"evals": 0, "ok": True}

    def summand(zeta: float) -> float:
        value = 0.0
        error = 0.0
        for name in names:
            z_key = z_over_a if _ZK_PARTS[name][1] else None
            part = _thermal_term(name, omega_p, z_key, zeta, tol)
            value += part.value
            error += part.error_estimate
            state["evals"] += part.evaluations
            state["ok"] = state["ok"] and part.converged
        inner_errors.append(error)
        return value

    summed = matsubara_sum(summand, beta, tol)
    inner = (0.5 * inner_errors[0] + sum(inner_errors[1:])) / beta
    scale = 2.0 * math.pi * prefactor
    return QuadratureResult(
        scale * summed.value,
        abs(scale) * (summed.error_estimate + inner),
        summed.evaluations + state["evals"],
        summed.converged and state["ok"],
    )


_DEFAULT_TOL = Tolerance()


def _resolve(thermal, tol):
    thermal = ThermalState.zero() if thermal is None else thermal
    tol = _DEFAULT_TOL if tol is None else tol
    return thermal, tol


# ----------------------------------------------------------------------
# Public operations.
# ----------------------------------------------------------------------


def mean_sq_E(
    geom: Geometry, model: PlasmaModel, *, tol: Tolerance | None = None
) -> QuadratureResult:
    """Renormalized <E**2> at position z, zero temperature, in 1/a**4.

    Parameters
    ----------
    geom : Geometry
    model : PlasmaModel
    tol : Tolerance, optional

    Returns
    -------
    QuadratureResult
        The field square relative to unbounded vacuum; the average of
        this and mean_sq_B is the energy density.
    """
    _, tol = _resolve(None, tol)
    _warn_if_near_wall(geom)
    wp = model.omega_p
    zr = geom.z_over_a
    indep = _zero_t_indep("energy_indep", wp, tol)
    dep = _zero_t_dep("sq_e_dep", wp, zr, tol)
    return _combine((_HALF_PI2, indep), (_HALF_PI2, dep))


def mean_sq_B(
    geom: Geometry, model: PlasmaModel, *, tol: Tolerance | None = None
) -> QuadratureResult:
    """Renormalized <B**2> at position z, zero temperature, in 1/a**4.

    Shares the position-independent integral with mean_sq_E; the
    position-dependent part swaps the roles of the two polarizations.
    """
    _, tol = _resolve(None, tol)
    _warn_if_near_wall(geom)
    wp = model.omega_p
    zr = geom.z_over_a
    indep = _zero_t_indep("energy_indep", wp, tol)
    dep = _zero_t_dep("sq_b_dep", wp, zr, tol)
    return _combine((_HALF_PI2, indep), (_HALF_PI2, dep))


def energy_density(
    geom: Geometry,
    model: PlasmaModel,
    thermal: ThermalState | None = None,
    *,
    tol: Tolerance | None = None,
) -> QuadratureResult:
    """Energy density T_00 at position z, in 1/a**4.

    Parameters
    ----------
    geom : Geometry
    model : PlasmaModel
    thermal : ThermalState, optional
        Defaults to zero temperature.  At finite temperature the
        frequency integral becomes the half-weighted Matsubara sum and
        the blackbody energy pi**2/(15*beta**4) is added.
    tol : Tolerance, optional

    Returns
    -------
    QuadratureResult
    """
    thermal, tol = _resolve(thermal, tol)
    _warn_if_near_wall(geom)
    wp = model.omega_p
    zr = geom.z_over_a
    if thermal.is_zero:
        indep = _zero_t_indep("energy_indep", wp, tol)
        dep = _zero_t_dep("energy_dep", wp, zr, tol)
        return _combine((_HALF_PI2, indep), (_HALF_PI2, dep))
    beta = thermal.beta
    core = _thermal_sum(
        ["energy_indep", "energy_dep"], wp, zr, beta, tol, _HALF_PI2
    )
    return _plus_constant(core, math.pi**2 / (15.0 * beta**4))


def pressure_zz(
    geom: Geometry,
    model: PlasmaModel,
    thermal: ThermalState | None = None,
    *,
    tol: Tolerance | None = None,
) -> QuadratureResult:
    """Longitudinal pressure T_zz, independent of z, in 1/a**4.

    Negative values mean the half-spaces attract; the magnitude is the
    force per unit area on either wall.  The integrand carries no z, so
    repeated calls at different positions return identical values.  At
    finite temperature the isotropic blackbody pressure
    pi**2/(45*beta**4) is included.
    """
    thermal, tol = _resolve(thermal, tol)
    wp = model.omega_p
    if thermal.is_zero:
        part = _zero_t_indep("pressure_zz", wp, tol)
        return _combine((_HALF_PI2, part))
    beta = thermal.beta
    core = _thermal_sum(
        ["pressure_zz"], wp, geom.z_over_a, beta, tol, _HALF_PI2
    )
    return _plus_constant(core, math.pi**2 / (45.0 * beta**4))


def pressure_xx(
    geom: Geometry,
    model: PlasmaModel,
    thermal: ThermalState | None = None,
    *,
    tol: Tolerance | None = None,
) -> QuadratureResult:
    """Transverse pressure T_xx (= T_yy) at position z, in 1/a**4.

    Grows like 1/z**3 toward either wall with exactly half the energy
    density's coefficient; near_wall_asymptote returns that leading law.
    At finite temperature the isotropic blackbody pressure
    pi**2/(45*beta**4) is included.
    """
    thermal, tol = _resolve(thermal, tol)
    _warn_if_near_wall(geom)
    wp = model.omega_p
    zr = geom.z_over_a
    if thermal.is_zero:
        indep = _zero_t_indep("pressure_xx_indep", wp, tol)
        dep = _zero_t_dep("pressure_xx_dep", wp, zr, tol)
        return _combine((_QUARTER_PI2, indep), (_QUARTER_PI2, dep))
    beta = thermal.beta
    core = _thermal_sum(
        ["pressure_xx_indep", "pressure_xx_dep"], wp, zr, beta, tol, _QUARTER_PI2
    )
    return _plus_constant(core, math.pi**2 / (45.0 * beta**4))


def stress_tensor(
    geom: Geometry,
    model: PlasmaModel,
    thermal: ThermalState | None = None,
    *,
    tol: Tolerance | None = None,
) -> StressDiagonal:
    """All diagonal stress components at one point.

    Returns
    -------
    StressDiagonal
        t00 from energy_density, txx = tyy from pressure_xx, tzz from
        pressure_zz, each with its own error estimate.
    """
    t00 = energy_density(geom, model, thermal, tol=tol)
    txx = pressure_xx(geom, model, thermal, tol=tol)
    tzz = pressure_zz(geom, model, thermal, tol=tol)
    return StressDiagonal(t00=t00, txx=txx, tyy=replace(txx), tzz=tzz)


def nec_transverse(
    geom: Geometry,
    model: PlasmaModel,
    thermal: ThermalState | None = None,
    *,
    tol: Tolerance | None = None,
) -> QuadratureResult:
    """Null-energy combination T_00 + T_xx for rays along the walls.

    Nonnegative for every plasma frequency, position, and temperature;
    the margin shrinks toward zero in the perfect-conductor limit.  At
    zero temperature this evaluates a single double integral in polar
    spectral coordinates, where both integrand pieces carry their signs
    explicitly, rather than differencing two larger quantities.  At
    finite temperature the blackbody part contributes
    4*pi**2/(45*beta**4); at the midpoint the per-frequency integral
    collapses to a single-variable integral and that fast path is used.
    """
    thermal, tol = _resolve(thermal, tol)
    _warn_if_near_wall(geom)
    wp = model.omega_p
    zr = geom.z_over_a
    if thermal.is_zero:
        part = integrate_2d(
            _f_nec_transverse_ut(wp, zr),
            SemiInfinite(_dep_scale(zr)),
            UnitInterval(),
            tol,
        )
        return _combine((_QUARTER_PI2, part))
    beta = thermal.beta
    if zr == 0.5:
        names = ["nec_transverse_mid"]
    else:
        names = ["nec_transverse_indep", "nec_transverse_dep"]
    core = _thermal_sum(names, wp, zr, beta, tol, _QUARTER_PI2)
    return _plus_constant(core, 4.0 * math.pi**2 / (45.0 * beta**4))


def nec_longitudinal(
    geom: Geometry,
    model: PlasmaModel,
    thermal: ThermalState | None = None,
    *,
    tol: Tolerance | None = None,
) -> QuadratureResult:
    """Null-energy combination T_00 + T_zz for rays normal to the walls.

    Genuinely negative in the middle of the gap once the walls reflect
    well (approaching -pi**2/180 in the perfect-conductor limit) while
    turning positive near the walls.  At zero temperature this is a
    single double integral in polar spectral coordinates; at finite
    temperature it is assembled as energy_density + pressure_zz.
    """
    thermal, tol = _resolve(thermal, tol)
    wp = model.omega_p
    zr = geom.z_over_a
    if thermal.is_zero:
        _warn_if_near_wall(geom)
        part = integrate_2d(
            _f_nec_longitudinal_ut(wp, zr),
            SemiInfinite(_dep_scale(zr)),
            UnitInterval(),
            tol,
        )
        return _combine((_HALF_PI2, part))
    energy = energy_density(geom, model, thermal, tol=tol)
    pressure = pressure_zz(geom, model, thermal, tol=tol)
    return _combine((1.0, energy), (1.0, pressure))


def near_wall_asymptote(z: float, model: PlasmaModel) -> tuple[float, float]:
    """Leading small-z forms of the energy density and transverse pressure.

    Parameters
    ----------
    z : float
        Distance from the nearer wall, > 0, in units of a.  For points
        near the far wall evaluate at a - z; the profile is symmetric.
    model : PlasmaModel

    Returns
    -------
    tuple of float
        (energy density, transverse pressure) asymptotes
        sqrt(2)*omega_p/(64*pi*z**3) and sqrt(2)*omega_p/(128*pi*z**3).
        Their ratio is exactly 2.  Valid while omega_p*z stays well
        below 1; the error is about 11 percent at omega_p*z = 0.1 and
        about 1 percent at omega_p*z = 0.01.
    """
    if not (z > 0.0):
        raise ValueError("z must be positive")
    scale = math.sqrt(2.0) * model.omega_p / (64.0 * math.pi * z**3)
    return scale, 0.5 * scale


def reference_limits() -> dict[str, float]:
    """Analytic reference constants, in 1/a**4 (coefficients of beta**-4).

    Returns
    -------
    dict
        Perfect-conductor values of the stress components and both
        null-energy combinations, and the blackbody coefficients: the
        energy density pi**2/15, the isotropic pressure pi**2/45, and
        their transverse null-energy sum 4*pi**2/45, each to be divided
        by beta**4.
    """
    pc_energy = -math.pi**2 / 720.0
    return {
        "pc_energy_density": pc_energy,
        "pc_pressure_xx": -pc_energy,
        "pc_pressure_yy": -pc_energy,
        "pc_pressure_zz": 3.0 * pc_energy,
        "pc_nec_transverse": 0.0,
        "pc_nec_longitudinal": -math.pi**2 / 180.0,
        "blackbody_energy_coeff": math.pi**2 / 15.0,
        "blackbody_pressure_coeff": math.pi**2 / 45.0,
        "blackbody_nec_transverse_coeff": 4.0 * math.pi**2 / 45.0,
    }


def critical_omega_pa(
    thermal: ThermalState | None = None,
    *,
    tol: Tolerance | None = None,
    root_rel_tol: float = 3e-4,
) -> float | None:
    """Plasma frequency at which the midpoint energy density turns negative.

    Scans omega_p*a over [1, 1e5] on a log grid, then bisects the first
    sign change of energy_density(z = a/2).  Returns None when the
    energy density keeps one sign across the whole range, which is the
    expected outcome at high temperature (beta below roughly 2.6*a).

    Parameters
    ----------
    thermal : ThermalState, optional
    tol : Tolerance, optional
        Tolerance for the underlying energy evaluations; the default is
        relaxed relative to the package default because root location
        needs sign stability, not many digits.
    root_rel_tol : float, default 3e-4
        Bisection width target, relative to the log10 grid span.

    Returns
    -------
    float or None
    """
    thermal = ThermalState.zero() if thermal is None else thermal
    tol = Tolerance(rel_tol=1e-7, abs_tol=1e-10) if tol is None else tol
    geom = Geometry(z=0.5)

    def midpoint_energy(log10_wp: float) -> float:
        model = PlasmaModel(omega_p=10.0**log10_wp)
        return energy_density(geom, model, thermal, tol=tol).value

    grid = np.linspace(0.0, 5.0, 11)
    values = [midpoint_energy(x) for x in grid]
    for left, right, f_left, f_right in zip(grid, grid[1:], values, values[1:]):
        if f_left == 0.0:
            return 10.0**left
        if (f_left > 0.0) != (f_right > 0.0):
            root = bracket_root(
                midpoint_energy, float(left), float(right), rel_tol=root_rel_tol
            )
            if root is None:
                continue
            return 10.0**root
    return None
