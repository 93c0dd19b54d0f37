"""Evaluators for Riemann's auxiliary function R(s) and related quantities.

R(s) is the integral of x^{-s} e^{pi i x^2} / (e^{pi i x} - e^{-pi i x}) over a
slope-one line crossing the real axis between 0 and 1, run south-west. Moving
the crossing into (N, N+1) picks up the residues n^{-s}/(2 pi i) at n = 1..N,
so

    R(s) = sum_{n<=N} n^{-s} + integral over the line through N + 1/2.

The line is parametrised as x = c + u e^{5 pi i/4}; along it e^{pi i x^2}
behaves like e^{-pi u^2} and the trapezoid rule converges geometrically.
Choosing the crossing next to the saddle point of x^{-s} e^{pi i x^2} keeps
the integrand the same size as the answer, which is what makes double
precision usable for |t| in the thousands.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from rauxlab._numerics import csum
from rauxlab.errors import ContourError, DomainError, PrecisionError
from rauxlab.specfun import EPS, LOG_PI, EvalResult, as_point, log_gamma, riemann_siegel_theta
from rauxlab import thetafun

DIRECTION = cmath.exp(1.25j * math.pi)
_LN10 = math.log(10.0)
BASE_STEP = 1.0 / 16.0
DEFAULT_TOL = 1e-12
_POLE_MARGIN = 0.05
_MAX_LOG = 700.0


@dataclass(frozen=True)
class QuadratureSpec:
    """Geometry of the integration line.

    ``crossing`` is where the line meets the real axis; it must lie in
    (N, N+1) at least 0.05 away from both integers, N = ``shift_level``.
    The parameter u runs over [center - half_width, center + half_width]
    with trapezoid step ``step``. ``center`` defaults to 0 (the crossing).
    """

    crossing: float
    shift_level: int
    half_width: float
    step: float
    center: float = 0.0

    def __post_init__(self):
        n = self.shift_level
        if n < 0 or int(n) != n:
            raise ContourError(f"shift_level must be a non-negative integer, got {n!r}")
        if not (n + _POLE_MARGIN <= self.crossing <= n + 1 - _POLE_MARGIN):
            raise ContourError(
                f"crossing {self.crossing!r} not inside ({n}, {n + 1}) with margin {_POLE_MARGIN}"
            )
        if not (self.half_width > 0 and self.step > 0):
            raise ContourError("half_width and step must be positive")
        if self.step > self.half_width:
            raise ContourError("step must not exceed half_width")


def saddle_point(s: complex) -> complex:
    """Saddle of x^{-s} e^{pi i x^2}: x0^2 = s / (2 pi i), the root whose slope-one
    line meets the positive real axis furthest to the right."""
    r = cmath.sqrt(s / (2j * math.pi))
    return r if (r.real - r.imag) >= (-r.real + r.imag) else -r


def saddle_shift_level(s: complex) -> int:
    x0 = saddle_point(s)
    return max(0, int(math.floor(x0.real - x0.imag)))


def _half_width(digits: float, sigma: float) -> float:
    return math.sqrt((digits + 2.0) * _LN10 / math.pi) + 0.25 * math.sqrt(abs(sigma)) + 1.0


def auto_spec(s, digits: float = 16.0, shift_level: Optional[int] = None) -> QuadratureSpec:
    """Quadrature line for s: crossing N + 1/2 with N from the saddle point.

    For s = sigma + it with moderate sigma and t > 0 the saddle rule reduces to
    N = floor(sqrt(t / 2 pi)); for t < 0 and for large sigma it moves the line
    to where the integrand is no larger than R itself.
    """
    s = as_point(s)
    n = saddle_shift_level(s) if shift_level is None else int(shift_level)
    c = n + 0.5
    x0 = saddle_point(s)
    center = ((x0 - c) / DIRECTION).real if n == saddle_shift_level(s) else 0.0
    return QuadratureSpec(c, n, _half_width(digits, s.real), BASE_STEP, center)


def direct_spec(digits: float = 16.0, sigma: float = 0.0) -> QuadratureSpec:
    """The defining contour: crossing at 1/2, no residues extracted."""
    return QuadratureSpec(0.5, 0, _half_width(digits, sigma), BASE_STEP, 0.0)


# --- vectorised core ----------------------------------------------------------


def _log_integrand(s, x):
    """log of x^{-s} e^{pi i x^2} / (e^{pi i x} - e^{-pi i x}), stable for any Im x."""
    lx = np.log(x)
    below = x.imag <= 0.0
    w = np.where(below, np.exp(-2j * np.pi * x), np.exp(2j * np.pi * x))
    log_inv_den = np.where(below, -1j * np.pi * x, 1j * np.pi + 1j * np.pi * x) - np.log1p(-w)
    return -s * lx + 1j * np.pi * x * x + log_inv_den, lx


def _core(s, c, center, half_width, step, nderiv):
    """Batch evaluation on the grid u = center + j*step/2.

    Returns (values, abs_errs, log_scale, tail_ok, halving_diffs); values and
    errors are lists over derivative order, scaled by exp(-log_scale).
    """
    s = np.asarray(s, dtype=complex)
    c = np.asarray(c, dtype=float)
    center = np.asarray(center, dtype=float)
    hh = 0.5 * step
    m = int(math.ceil(half_width / hh))
    j = np.arange(-m, m + 1)
    u = center[:, None] + j[None, :] * hh
    x = c[:, None] + u * DIRECTION
    L, lx = _log_integrand(s[:, None], x)

    nmax = int(np.max(np.floor(c))) if c.size else 0
    if nmax > 0:
        n = np.arange(1, nmax + 1, dtype=float)
        ln = np.log(n)
        Ls = -s[:, None] * ln[None, :]
        mask = n[None, :] <= np.floor(c)[:, None]
        smax = np.max(np.where(mask, Ls.real, -np.inf), axis=1)
        Ls = np.where(mask, Ls, 0.0)
    else:
        smax = np.full(s.shape, -np.inf)

    lmax = np.max(L.real, axis=1)
    scale = np.maximum(lmax, smax)
    f = np.exp(L - scale[:, None])
    absf = np.abs(f)
    tail = np.maximum(absf[:, 0], absf[:, -1])
    peak = np.max(absf, axis=1)
    tail_ok = tail <= 1e-18 * np.maximum(peak, 1e-300)

    rnd_w = EPS * (4.0 + np.abs(L))

    even = (j % 2) == 0
    results = []
    errors = []
    diffs = []
    for k in range(nderiv + 1):
        g = f if k == 0 else f * (-lx) ** k
        fine = hh * csum(g, axis=1)
        coarse = step * csum(g[:, even], axis=1)
        rnd = hh * np.sum(np.abs(g) * rnd_w, axis=1)
        total = DIRECTION * fine
        diff = np.abs(fine - coarse)
        err = diff + rnd + hh * np.abs(g[:, [0, -1]]).max(axis=1)
        if nmax > 0:
            terms = np.exp(Ls - scale[:, None])
            if k:
                terms = terms * (-ln[None, :]) ** k
            terms = np.where(mask, terms, 0.0)
            total = total + csum(terms, axis=1)
            err = err + np.sum(np.abs(terms) * EPS * (4.0 + np.abs(Ls.real) + np.abs(Ls.imag)), axis=1)
        results.append(total)
        errors.append(err)
        diffs.append(diff)
    return results, errors, scale, tail_ok, diffs


def _prepare(s_arr, shift_levels=None, digits=16.0):
    cs, cents = [], []
    for i, s in enumerate(s_arr):
        sp = auto_spec(s, digits, None if shift_levels is None else shift_levels[i])
        cs.append(sp.crossing)
        cents.append(sp.center)
    return np.array(cs), np.array(cents)


def eval_batch(s, nderiv: int = 0, shift_levels=None, digits: float = 16.0, scaled: bool = False):
    """Evaluate R (and R' if nderiv=1) at an array of points.

    Returns (values, errors, log_scale) where values has shape (nderiv+1, n).
    With ``scaled`` the outputs are multiplied by exp(-log_scale), which keeps
    them finite in the lower half-plane where |R| grows like e^{pi |t| / 4}.
    """
    s = np.atleast_1d(np.asarray(s, dtype=complex))
    if s.size == 0:
        return np.zeros((nderiv + 1, 0), complex), np.zeros((nderiv + 1, 0)), np.zeros(0)
    if not np.all(np.isfinite(s)):
        raise DomainError("non-finite point in batch")
    c, center = _prepare(s, shift_levels, digits)
    half_width = _half_width(digits, float(np.max(np.abs(s.real))))
    for _ in range(6):
        vals, errs, scale, tail_ok, _ = _core(s, c, center, half_width, BASE_STEP, nderiv)
        if np.all(tail_ok):
            break
        half_width *= 1.5
    vals = np.array(vals)
    errs = np.array(errs)
    if not scaled:
        if np.any(scale > _MAX_LOG):
            raise PrecisionError("R(s) overflows double precision; use scaled=True")
        fac = np.exp(scale)
        vals = vals * fac
        errs = errs * fac
    return vals, errs, scale


def _spec_eval(s, spec: QuadratureSpec, nderiv: int, tol: float):
    step = spec.step
    hw = spec.half_width
    best = None
    for _ in range(5):
        vals, errs, scale, tail_ok, diffs = _core(
            np.array([s]), np.array([spec.crossing]), np.array([spec.center]), hw, step, nderiv
        )
        if scale[0] > _MAX_LOG:
            raise PrecisionError(f"R({s}) overflows double precision")
        fac = math.exp(scale[0])
        v = complex(vals[nderiv][0]) * fac
        e = float(errs[nderiv][0]) * fac
        d = float(diffs[nderiv][0]) * fac
        best = (v, e)
        if not tail_ok[0]:
            hw *= 1.5
            continue
        # only the discretisation part can be reduced by halving; rounding is reported, not chased
        if d <= tol * max(1.0, abs(v)):
            return best
        step *= 0.5
    v, e = best
    raise PrecisionError(f"R evaluation at s={s}: step halving still differs by {d:.3g} (tol {tol:g})", e)


def _resolve_spec(s, spec, method, digits=16.0):
    if spec is None or spec == "auto":
        if method == "direct":
            return direct_spec(digits, s.real)
        return auto_spec(s, digits)
    if isinstance(spec, QuadratureSpec):
        return spec
    raise ContourError(f"unrecognised quadrature spec {spec!r}")


def eval_r(s, spec=None, tol: float = DEFAULT_TOL, method: str = "shifted") -> EvalResult:
    """R(s) with an a-posteriori error estimate.

    ``spec`` is a QuadratureSpec or None/'auto'; ``method='direct'`` forces
    the defining contour through 1/2. ``tol`` is relative to max(1, |R|).
    """
    s = as_point(s)
    sp = _resolve_spec(s, spec, method)
    v, e = _spec_eval(s, sp, 0, tol)
    return EvalResult(v, e, "direct" if sp.shift_level == 0 else f"shifted-{sp.shift_level}")


def eval_r_prime(s, spec=None, tol: float = DEFAULT_TOL, method: str = "shifted") -> EvalResult:
    """R'(s): integrand times -log x, Dirichlet terms times -log n."""
    s = as_point(s)
    sp = _resolve_spec(s, spec, method)
    v, e = _spec_eval(s, sp, 1, tol)
    return EvalResult(v, e, "direct" if sp.shift_level == 0 else f"shifted-{sp.shift_level}")


def log_derivative(s) -> EvalResult:
    """R'(s)/R(s) with first-order error propagation."""
    s = as_point(s)
    vals, errs, _ = eval_batch(np.array([s]), nderiv=1, scaled=True)
    r, rp = complex(vals[0, 0]), complex(vals[1, 0])
    q = rp / r
    err = (errs[1, 0] + abs(q) * errs[0, 0]) / abs(r)
    return EvalResult(q, float(err), "shifted")


# --- the completed function F(s) = s pi^{-s/2} Gamma(s/2) R(s) -------------------


def gamma_factor(s) -> EvalResult:
    """s * pi^{-s/2} * Gamma(s/2) = 2 pi^{-s/2} Gamma(1 + s/2)."""
    s = as_point(s)
    lg = log_gamma(1.0 + 0.5 * s)
    v = 2.0 * cmath.exp(lg.value - 0.5 * s * LOG_PI)
    return EvalResult(v, abs(v) * (lg.abs_err + 4 * EPS * (1 + abs(s))), "stirling")


def eval_F_product(s) -> EvalResult:
    """F(s) from the contour value of R(s): s pi^{-s/2} Gamma(s/2) R(s)."""
    s = as_point(s)
    if s == 0:
        raise DomainError("F(s) representation requires s != 0")
    r = eval_r(s)
    g = gamma_factor(s)
    v = g.value * r.value
    return EvalResult(v, abs(g.value) * r.abs_err + abs(r.value) * g.abs_err, r.method)


def _exp_sinh_nodes(level: int, vmax: float = 4.0):
    h = 2.0 ** -level
    v = np.arange(-vmax, vmax + h / 2, h)
    x = np.exp(0.5 * math.pi * np.sinh(v))
    w = x * 0.5 * math.pi * np.cosh(v) * h
    return x, w


def eval_F_theta(s, tol: float = 1e-13) -> EvalResult:
    """F(s) = -e^{-pi i s/4} int_0^inf (-1+ix)^{s/2} phi'(x) dx.

    The integral is computed with the exp-sinh substitution x = e^{(pi/2) sinh v}
    and step halving; abs_err is the last halving difference plus rounding.
    """
    s = as_point(s)
    if s == 0:
        raise DomainError("theta representation requires s != 0")
    pref = -cmath.exp(-0.25j * math.pi * s)
    prev = None
    for level in range(3, 9):
        x, w = _exp_sinh_nodes(level)
        dphi = thetafun.phi_prime_array(x)
        g = np.exp(0.5 * s * np.log(-1.0 + 1j * x)) * dphi * w
        val = complex(csum(g))
        rnd = EPS * float(np.sum(np.abs(g) * (4.0 + 0.5 * abs(s) * np.abs(np.log(-1.0 + 1j * x)))))
        if prev is not None:
            diff = abs(val - prev)
            if diff <= tol * max(1.0, abs(val)) or level == 8:
                err = abs(pref) * (diff + rnd)
                if level == 8 and diff > tol * max(1.0, abs(val)):
                    raise PrecisionError(f"theta integral at s={s} did not converge", err)
                return EvalResult(pref * val, err, "theta-integral")
        prev = val
    raise AssertionError("unreachable")


@dataclass(frozen=True)
class Envelope:
    f_t: float
    g_sigma: float

    @property
    def bound(self) -> float:
        return self.f_t * self.g_sigma


def bound_envelope(s) -> Envelope:
    """Growth envelope f(t) g(sigma) of |s pi^{-s/2} Gamma(s/2) R(s)|."""
    s = as_point(s)
    f = 1.0 if s.imag >= 0 else math.exp(math.pi * abs(s.imag) / 4.0)
    g = 1.0 if s.real <= 0 else 3.0 * 2.0 ** (s.real / 4.0) * math.gamma(1.0 + s.real / 2.0)
    return Envelope(f, g)


# --- critical line --------------------------------------------------------------


def z_function(t: float) -> EvalResult:
    """Z(t) = 2 Re{ e^{i theta(t)} R(1/2 + it) }."""
    t = float(t)
    if not math.isfinite(t) or abs(t) > 2000.0:
        raise DomainError(f"z_function supports |t| <= 2000, got {t!r}")
    r = eval_r(complex(0.5, t))
    th = riemann_siegel_theta(t)
    v = 2.0 * (cmath.exp(1j * th.value.real) * r.value).real
    return EvalResult(complex(v, 0.0), 2.0 * (r.abs_err + abs(r.value) * th.abs_err), r.method)


def z_batch(t) -> np.ndarray:
    """Vectorised Z(t) for arrays of t (no error estimates)."""
    t = np.atleast_1d(np.asarray(t, dtype=float))
    vals, _, _ = eval_batch(0.5 + 1j * t)
    th = np.array([riemann_siegel_theta(x).value.real for x in t])
    return 2.0 * (np.exp(1j * th) * vals[0]).real
