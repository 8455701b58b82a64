"""Deterministic adaptive quadrature for exponentially decaying integrands.

Every integral in this package has the same shape: a smooth integrand on
[0, inf) that dies off exponentially with a scale known in advance, either
alone or iterated with an inner integral over [0, inf) or [0, 1].  The
half-line is mapped onto the unit interval with the rational substitution
x = L*s/(1-s), where L is the expected decay scale, and the result is
integrated with globally adaptive Gauss-Kronrod 7/15 panels: the panel
with the largest error estimate is split first, and the final value is
accumulated over panels sorted by their left edge.  Subdivision order and
accumulation order are fixed, so repeated runs return bit-identical
values; nothing here depends on threads, hashing or global state.

Integrands are called with a numpy array of abscissae and should return
an array of the same shape.  Plain scalar functions (for example
``math``-based lambdas) are detected on the first call and evaluated
point by point instead.
"""

from __future__ import annotations

import heapq
import math
import warnings
from dataclasses import dataclass
from typing import Callable, Union

import numpy as np

__all__ = [
    "Tolerance",
    "QuadratureResult",
    "QuadratureError",
    "SemiInfinite",
    "UnitInterval",
    "integrate_semiinf",
    "integrate_unit",
    "integrate_2d",
    "matsubara_sum",
    "bracket_root",
]


class QuadratureError(RuntimeError):
    """An integrand returned a non-finite value."""


@dataclass(frozen=True)
class Tolerance:
    """Termination targets for one integration pass.

    A pass is accepted once the summed panel error estimate drops below
    max(abs_tol, rel_tol*|value|).  ``max_evaluations`` bounds the number
    of integrand evaluations in a single one-dimensional pass; when it is
    exhausted the result is returned with ``converged=False`` rather than
    raising.
    """

    rel_tol: float = 1e-9
    abs_tol: float = 1e-14
    max_evaluations: int = 10_000_000

    def __post_init__(self):
        if not (self.rel_tol > 0.0 and math.isfinite(self.rel_tol)):
            raise ValueError("rel_tol must be a positive finite number")
        if not (self.abs_tol >= 0.0 and math.isfinite(self.abs_tol)):
            raise ValueError("abs_tol must be non-negative and finite")
        if self.max_evaluations < 15:
            raise ValueError("max_evaluations must allow at least one panel")

    def tightened(self, factor: float) -> "Tolerance":
        """A copy with both tolerances divided by ``factor`` (inner passes)."""
        return Tolerance(
            rel_tol=self.rel_tol / factor,
            abs_tol=self.abs_tol / factor,
            max_evaluations=self.max_evaluations,
        )


@dataclass
class QuadratureResult:
    """Value of an integral together with bookkeeping.

    ``error_estimate`` is an upper-bound style estimate (summed Kronrod
    minus Gauss differences, plus propagated inner errors for iterated
    integrals); ``evaluations`` counts integrand calls; ``converged``
    records whether the tolerance targets were met within budget.
    """

    value: float
    error_estimate: float
    evaluations: int
    converged: bool


@dataclass(frozen=True)
class SemiInfinite:
    """Domain marker: [0, inf) with the given exponential decay scale."""

    decay_scale: float

    def __post_init__(self):
        if not (self.decay_scale > 0.0 and math.isfinite(self.decay_scale)):
            raise ValueError("decay_scale must be a positive finite number")


@dataclass(frozen=True)
class UnitInterval:
    """Domain marker: [0, 1]."""


_DEFAULT_TOL = Tolerance()

# Gauss-Kronrod 7/15 nodes and weights on [-1, 1] (QUADPACK dqk15 values).
# The embedded 7-point Gauss rule lives on the odd-index Kronrod nodes.
_XK_HALF = (
    0.991455371120813,
    0.949107912342759,
    0.864864423359769,
    0.741531185599394,
    0.586087235467691,
    0.405845151377397,
    0.207784955007898,
    0.0,
)
_WK_HALF = (
    0.022935322010529,
    0.063092092629979,
    0.104790010322250,
    0.140653259715525,
    0.169004726639267,
    0.190350578064785,
    0.204432940075298,
    0.209482141084728,
)
_WG_HALF = (
    0.129484966168870,
    0.279705391489277,
    0.381830050505119,
    0.417959183673469,
)

_XK = np.array([-x for x in _XK_HALF[:-1]] + [0.0] + [x for x in reversed(_XK_HALF[:-1])])
_WK = np.array(list(_WK_HALF[:-1]) + [_WK_HALF[-1]] + list(reversed(_WK_HALF[:-1])))
_WG = np.array(list(_WG_HALF[:-1]) + [_WG_HALF[-1]] + list(reversed(_WG_HALF[:-1])))


def _eval_panels(fv, lefts, rights):
    """Evaluate Gauss-Kronrod 7/15 on a batch of panels with one call.

    ``fv`` maps an abscissa array of shape (n,) to values of shape (n, m).
    Returns per-panel Kronrod values and |K15 - G7| error estimates, both
    of shape (p, m).
    """
    mids = 0.5 * (lefts + rights)
    halfs = 0.5 * (rights - lefts)
    x = (mids[:, None] + halfs[:, None] * _XK[None, :]).ravel()
    y = fv(x)
    y = y.reshape(len(lefts), 15, -1)
    kron = halfs[:, None] * np.einsum("j,pjm->pm", _WK, y)
    gauss = halfs[:, None] * np.einsum("j,pjm->pm", _WG, y[:, 1::2, :])
    return kron, np.abs(kron - gauss)


def _adaptive(fv, edges, rel_tol, abs_tol, max_evaluations):
    """Globally adaptive refinement over initial panels given by ``edges``.

    Splits the panel with the largest error estimate of the first
    component until the summed estimate meets the tolerance or the budget
    runs out.  Returns (value, error, evaluations, converged) with value
    and error of shape (m,), summed over panels in left-edge order.
    """
    lefts = np.asarray(edges[:-1], dtype=float)
    rights = np.asarray(edges[1:], dtype=float)
    vals, errs = _eval_panels(fv, lefts, rights)
    evaluations = 15 * len(lefts)

    panels = {}
    heap = []
    seq = 0
    for i in range(len(lefts)):
        panels[seq] = (lefts[i], rights[i], vals[i], errs[i])
        heapq.heappush(heap, (-errs[i][0], seq))
        seq += 1
    done = []

    total_v = float(np.sum(vals[:, 0]))
    total_e = float(np.sum(errs[:, 0]))
    min_width = (edges[-1] - edges[0]) * 1e-13
    converged = True
    while True:
        if total_e <= max(abs_tol, rel_tol * abs(total_v)):
            break
        if not heap or evaluations + 30 > max_evaluations:
            converged = False
            break
        neg_err, key = heapq.heappop(heap)
        a, b, v, e = panels.pop(key)
        if (b - a) <= min_width or neg_err >= 0.0:
            # refining cannot improve this panel any further
            done.append((a, b, v, e))
            continue
        mid = 0.5 * (a + b)
        cv, ce = _eval_panels(fv, np.array([a, mid]), np.array([mid, b]))
        evaluations += 30
        total_v += cv[0, 0] + cv[1, 0] - v[0]
        total_e += ce[0, 0] + ce[1, 0] - e[0]
        for half in (0, 1):
            panels[seq] = ((a, mid)[half], (mid, b)[half], cv[half], ce[half])
            heapq.heappush(heap, (-ce[half][0], seq))
            seq += 1

    done.extend(panels.values())
    done.sort(key=lambda p: p[0])
    value = np.sum(np.stack([p[2] for p in done]), axis=0)
    error = np.sum(np.stack([p[3] for p in done]), axis=0)
    return value, error, evaluations, converged


def _scalar_tolerant(f):
    """Wrap ``f`` so it always maps (n,) arrays to (n,) arrays.

    Vectorized callables pass through; scalar-only callables (detected by
    a failed or mis-shaped array call) fall back to a point loop.
    """
    state = {"loop": False}

    def call(x):
        if not state["loop"]:
            try:
                y = np.asarray(f(x), dtype=float)
                if y.shape == x.shape:
                    return y
            except (TypeError, ValueError):
                pass
            state["loop"] = True
        return np.array([float(f(xi)) for xi in x])

    return call


def _check_finite(y, x, where):
    if not np.all(np.isfinite(y)):
        bad = np.asarray(x)[~np.isfinite(y)]
        raise QuadratureError(
            f"integrand returned a non-finite value at {where} = {bad.flat[0]!r}"
        )


def integrate_unit(f, tol: Tolerance | None = None) -> QuadratureResult:
    """Integrate ``f`` over [0, 1].

    Parameters
    ----------
    f : callable
        Integrand; called with an abscissa array, scalar fallback applies.
    tol : Tolerance, optional
        Termination targets; package defaults when omitted.

    Returns
    -------
    QuadratureResult
        Panel endpoints are never evaluated, so integrable endpoint
        behavior is fine.  Non-finite integrand values raise
        QuadratureError with the abscissa in the message.
    """
    tol = tol or _DEFAULT_TOL
    fs = _scalar_tolerant(f)

    def fv(x):
        y = fs(x)
        _check_finite(y, x, "x")
        return y[:, None]

    v, e, n, ok = _adaptive(
        fv, np.linspace(0.0, 1.0, 5), tol.rel_tol, tol.abs_tol, tol.max_evaluations
    )
    return QuadratureResult(float(v[0]), float(e[0]), n, ok)


def integrate_semiinf(f, decay_scale: float, tol: Tolerance | None = None) -> QuadratureResult:
    """Integrate ``f`` over [0, inf) assuming exponential decay.

    Parameters
    ----------
    f : callable
        Integrand; called with an abscissa array, scalar fallback applies.
    decay_scale : float
        Expected scale L of the falloff, exp(-x/L) style.  The rational
        map x = L*s/(1-s) places half of the unit interval below x = L.
        A mismatched scale costs extra subdivisions, not correctness.
    tol : Tolerance, optional

    Returns
    -------
    QuadratureResult

    Notes
    -----
    The transformed integrand is assumed to vanish at the mapped image of
    s -> 1; that is exactly the exponential-decay contract.  Non-finite
    integrand values raise QuadratureError carrying the original
    (untransformed) abscissa.
    """
    if not (decay_scale > 0.0 and math.isfinite(decay_scale)):
        raise ValueError("decay_scale must be a positive finite number")
    tol = tol or _DEFAULT_TOL
    fs = _scalar_tolerant(f)

    def fv(s):
        one_m = 1.0 - s
        ok = one_m > 0.0
        safe = np.where(ok, one_m, 1.0)
        x = decay_scale * s / safe
        out = np.zeros_like(s)
        if ok.all():
            y = fs(x)
            _check_finite(y, x, "x")
            out = y * decay_scale / safe**2
        elif ok.any():
            y = fs(x[ok])
            _check_finite(y, x[ok], "x")
            out[ok] = y * decay_scale / safe[ok] ** 2
        return out[:, None]

    v, e, n, ok = _adaptive(
        fv, np.linspace(0.0, 1.0, 9), tol.rel_tol, tol.abs_tol, tol.max_evaluations
    )
    return QuadratureResult(float(v[0]), float(e[0]), n, ok)


def integrate_2d(
    f,
    outer: SemiInfinite,
    inner: Union[SemiInfinite, UnitInterval],
    tol: Tolerance | None = None,
) -> QuadratureResult:
    """Iterated integral of ``f(x, y)``, outer in x over [0, inf).

    Parameters
    ----------
    f : callable
        Called as ``f(x, y)`` with scalar x and an array of y abscissae;
        must return an array over y (scalar fallback applies).
    outer : SemiInfinite
        Decay scale for the x integration.
    inner : SemiInfinite or UnitInterval
        Domain of the y integration.
    tol : Tolerance, optional
        The inner passes run 10x tighter than the requested tolerance so
        that their contribution to the total error stays subdominant.

    Returns
    -------
    QuadratureResult
        ``error_estimate`` combines the outer panel estimate with the
        integral of the inner error estimates (the inner error is carried
        through the outer quadrature as a second vector component), and
        ``evaluations`` counts inner integrand calls.  If any inner pass
        fails to converge, the result is flagged ``converged=False`` and a
        warning names the outer abscissa.
    """
    tol = tol or _DEFAULT_TOL
    inner_tol = tol.tightened(10.0)
    counters = {"evals": 0}
    failures: list[float] = []

    def inner_pass(x: float) -> QuadratureResult:
        if isinstance(inner, UnitInterval):
            return integrate_unit(lambda yy: f(x, yy), inner_tol)
        return integrate_semiinf(lambda yy: f(x, yy), inner.decay_scale, inner_tol)

    L = outer.decay_scale

    def fv(s):
        one_m = 1.0 - s
        jac = np.where(one_m > 0.0, L / np.where(one_m > 0.0, one_m, 1.0) ** 2, 0.0)
        x = np.where(one_m > 0.0, L * s / np.where(one_m > 0.0, one_m, 1.0), np.inf)
        out = np.zeros((s.size, 2))
        for i in range(s.size):
            if not np.isfinite(x[i]):
                continue
            r = inner_pass(float(x[i]))
            counters["evals"] += r.evaluations
            if not r.converged:
                failures.append(float(x[i]))
            out[i, 0] = r.value * jac[i]
            out[i, 1] = r.error_estimate * jac[i]
        return out

    v, e, _, ok = _adaptive(
        fv, np.linspace(0.0, 1.0, 9), tol.rel_tol, tol.abs_tol, tol.max_evaluations
    )
    if failures:
        shown = ", ".join(f"{x:.6g}" for x in failures[:3])
        warnings.warn(
            f"inner integration did not converge at outer abscissa {shown}"
            + ("" if len(failures) <= 3 else f" (+{len(failures) - 3} more)"),
            stacklevel=2,
        )
        ok = False
    error = float(e[0]) + max(float(v[1]), 0.0)
    return QuadratureResult(float(v[0]), error, counters["evals"], ok)


def matsubara_sum(g, beta: float, tol: Tolerance | None = None) -> QuadratureResult:
    """Weighted thermal sum (1/beta) * [g(0)/2 + sum_{n>=1} g(2*pi*n/beta)].

    The n = 0 term carries half weight.  Summation stops once three
    consecutive terms fall below rel_tol times the running (unscaled)
    sum, with a hard cap of 1e5 terms.  The error estimate is a geometric
    tail extrapolation from the last two terms; ``evaluations`` counts
    calls to ``g``.
    """
    if not (beta > 0.0 and math.isfinite(beta)):
        raise ValueError("beta must be a positive finite number")
    tol = tol or _DEFAULT_TOL

    total = 0.5 * float(g(0.0))
    evaluations = 1
    consecutive = 0
    second_last = 0.0
    last = 0.0
    converged = False
    cap = 100_000
    for n in range(1, cap + 1):
        term = float(g(2.0 * math.pi * n / beta))
        evaluations += 1
        total += term
        second_last, last = last, abs(term)
        if last <= tol.rel_tol * abs(total) + tol.abs_tol:
            consecutive += 1
            if consecutive >= 3:
                converged = True
                break
        else:
            consecutive = 0

    ratio = last / second_last if second_last > 0.0 else 0.0
    if 0.0 < ratio < 0.999:
        tail = last * ratio / (1.0 - ratio)
    else:
        tail = last
    return QuadratureResult(
        value=total / beta,
        error_estimate=(tail + tol.abs_tol) / beta,
        evaluations=evaluations,
        converged=converged,
    )


def bracket_root(
    f: Callable[[float], float], lo: float, hi: float, rel_tol: float = 1e-10
):
    """Locate a sign change of ``f`` on [lo, hi] by bisection.

    Returns the midpoint of the final bracket once its width is below
    rel_tol relative to the endpoint magnitudes.  Returns None when
    f(lo) and f(hi) have the same sign (no bracketed root); that outcome
    is deliberately distinct from numerical failure, which raises.
    """
    if not (lo < hi):
        raise ValueError("need lo < hi")
    flo = float(f(lo))
    fhi = float(f(hi))
    if not (math.isfinite(flo) and math.isfinite(fhi)):
        raise QuadratureError("non-finite endpoint value in bracket_root")
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if (flo > 0.0) == (fhi > 0.0):
        return None
    scale = max(abs(lo), abs(hi), 1e-300)
    while (hi - lo) > rel_tol * scale:
        mid = 0.5 * (lo + hi)
        if not (lo < mid < hi):
            break
        fm = float(f(mid))
        if not math.isfinite(fm):
            raise QuadratureError(f"non-finite value in bracket_root at {mid!r}")
        if fm == 0.0:
            return mid
        if (fm > 0.0) == (flo > 0.0):
            lo, flo = mid, fm
        else:
            hi, fhi = mid, fm
        scale = max(abs(lo), abs(hi), 1e-300)
    return 0.5 * (lo + hi)
