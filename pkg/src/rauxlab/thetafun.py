"""Jacobi theta kernels at tau = -1 + ix.

phi(x) = theta_4(0, ix) = 1 + 2 sum (-1)^n e^{-pi n^2 x}
       = (2/sqrt x) sum_{n>=0} e^{-pi (n+1/2)^2 / x}

The first form is summed for x >= 1, the second (theta transformation) for
x < 1. Truncation uses a geometric majorant of the tail, not a fixed count.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from rauxlab.errors import DomainError
from rauxlab.specfun import EvalResult, as_point

TAIL_TOL = 1e-17
_MAX_TERMS = 10_000


@dataclass(frozen=True)
class PhiEval:
    x: float
    phi: float
    phi_prime: float
    series_used: str  # "direct" | "transformed"
    terms: int


def _check_x(x) -> float:
    x = float(x)
    if not (x > 0.0) or not math.isfinite(x):
        raise DomainError(f"phi requires x > 0, got {x!r}")
    return x


def _direct(x: float, tol: float = TAIL_TOL) -> tuple[float, float, int]:
    """phi and phi' from 1 + 2 sum (-1)^n e^{-pi n^2 x}."""
    s = [1.0]
    d = []
    n = 1
    while n < _MAX_TERMS:
        e = math.exp(-math.pi * n * n * x)
        sign = -1.0 if n % 2 else 1.0
        s.append(2.0 * sign * e)
        d.append(-2.0 * math.pi * n * n * sign * e)
        # next term ratio is e^{-pi (2n+1) x} < 1; tail <= first omitted term / (1 - q)
        q = math.exp(-math.pi * (2 * n + 1) * x)
        nxt = 2.0 * math.pi * (n + 1) ** 2 * e * q
        if nxt / (1.0 - q) < tol and 2.0 * e * q / (1.0 - q) < tol:
            break
        n += 1
    return math.fsum(s), math.fsum(d), n


def _transformed(x: float, tol: float = TAIL_TOL) -> tuple[float, float, int]:
    """phi and phi' from (2/sqrt x) sum e^{-pi (n+1/2)^2 / x}.

    phi'(x) = sum [ (2 pi (n+1/2)^2) x^{-5/2} - x^{-3/2} ] e^{-pi (n+1/2)^2/x},
    the termwise derivative; no cancellation between large terms for x < 1.
    """
    rx = math.sqrt(x)
    s = []
    d = []
    n = 0
    while n < _MAX_TERMS:
        m2 = (n + 0.5) ** 2
        e = math.exp(-math.pi * m2 / x)
        s.append(2.0 / rx * e)
        d.append((2.0 * math.pi * m2 / (x * x * rx) - 1.0 / (x * rx)) * e)
        q = math.exp(-math.pi * (2 * n + 2) / x)
        m2n = (n + 1.5) ** 2
        nxt_d = (2.0 * math.pi * m2n / (x * x * rx) + 1.0 / (x * rx)) * e * q
        if nxt_d / (1.0 - q) < tol and 2.0 / rx * e * q / (1.0 - q) < tol:
            break
        n += 1
    return math.fsum(s), math.fsum(d), n + 1


def phi(x: float) -> PhiEval:
    """phi(x) with its derivative; direct series for x >= 1, transformed for x < 1."""
    x = _check_x(x)
    if x >= 1.0:
        p, dp, n = _direct(x)
        return PhiEval(x, p, dp, "direct", n)
    p, dp, n = _transformed(x)
    return PhiEval(x, p, dp, "transformed", n)


def phi_direct(x: float) -> float:
    return _direct(_check_x(x))[0]


def phi_transformed(x: float) -> float:
    return _transformed(_check_x(x))[0]


def phi_prime(x: float) -> float:
    """phi'(x) by termwise differentiation of the series selected in ``phi``."""
    return phi(x).phi_prime


def phi_prime_array(x) -> np.ndarray:
    """Vectorised phi'(x) with the same branch rule as ``phi``.

    Seven terms of either series leave a tail below 1e-30 on its branch.
    """
    x = np.asarray(x, dtype=float)
    if np.any(x <= 0):
        raise DomainError("phi' requires x > 0")
    out = np.zeros_like(x)
    big = x >= 1.0
    if np.any(big):
        xb = x[big][:, None]
        n = np.arange(1, 8, dtype=float)[None, :]
        sign = np.where(n % 2 == 1, -1.0, 1.0)
        out[big] = np.sum(-2.0 * np.pi * n * n * sign * np.exp(-np.pi * n * n * xb), axis=1)
    small = ~big
    if np.any(small):
        xs = x[small][:, None]
        m2 = (np.arange(0, 7, dtype=float)[None, :] + 0.5) ** 2
        with np.errstate(under="ignore"):
            e = np.exp(-np.pi * m2 / xs)
        out[small] = np.sum((2.0 * np.pi * m2 * xs**-2.5 - xs**-1.5) * e, axis=1)
    return out


def phi_product(x: float, tol: float = TAIL_TOL) -> float:
    """phi(x) = prod_{n>=1} (1 - e^{-pi n x})(1 - e^{-pi (2n-1) x})."""
    x = _check_x(x)
    logp = []
    n = 1
    while True:
        a = math.exp(-math.pi * n * x)
        b = math.exp(-math.pi * (2 * n - 1) * x)
        logp.append(math.log1p(-a))
        logp.append(math.log1p(-b))
        # remaining log-factors are bounded by 2 e^{-pi (n+1) x} / (1 - e^{-pi x}) * (1 + ...)
        q = math.exp(-math.pi * x)
        if 3.0 * a * q / (1.0 - q) ** 2 < tol:
            break
        n += 1
        if n > 10 * _MAX_TERMS:
            break
    return math.exp(math.fsum(logp))


def theta3(tau) -> tuple[EvalResult, EvalResult]:
    """theta_3(0, tau) = 1 + 2 sum e^{pi i n^2 tau} and its tau-derivative.

    Returns (value, derivative). Requires Im tau > 0.
    """
    tau = as_point(tau)
    y = tau.imag
    if not y > 0.0:
        raise DomainError(f"theta3 requires Im(tau) > 0, got {tau!r}")
    vals = [1.0 + 0j]
    ders = []
    n = 1
    while n < 100 * _MAX_TERMS:
        e = cmath.exp(1j * math.pi * n * n * tau)
        vals.append(2.0 * e)
        ders.append(2.0j * math.pi * n * n * e)
        q = math.exp(-math.pi * (2 * n + 1) * y)
        mag = abs(e)
        if 2.0 * math.pi * (n + 1) ** 2 * mag * q / (1.0 - q) < TAIL_TOL and 2.0 * mag * q / (1.0 - q) < TAIL_TOL:
            break
        n += 1
    v = complex(math.fsum(z.real for z in vals), math.fsum(z.imag for z in vals))
    dv = complex(math.fsum(z.real for z in ders), math.fsum(z.imag for z in ders))
    scale = sum(abs(z) for z in vals)
    return (
        EvalResult(v, TAIL_TOL + 4e-16 * scale, "theta-series"),
        EvalResult(dv, TAIL_TOL + 4e-16 * sum(abs(z) for z in ders), "theta-series"),
    )


@dataclass
class KernelBoundsReport:
    """Worst margins of the three phi' inequalities over a grid.

    A margin is (bound - value); negative beyond ``slack`` is a violation.
    """

    n_points: int = 0
    min_margin_nonneg: float = math.inf
    min_margin_exp: float = math.inf
    min_margin_small_x: float = math.inf
    violations: list = field(default_factory=list)
    slack: float = 1e-12

    @property
    def ok(self) -> bool:
        return not self.violations


def check_kernel_bounds(x_grid: Sequence[float], slack: float = 1e-12) -> KernelBoundsReport:
    """Check phi' >= 0, phi' <= 2 pi e^{-pi x}, and phi' <= (pi/2) x^{-5/2} e^{-pi/(4x)} for x < 1."""
    rep = KernelBoundsReport(slack=slack)
    for x in x_grid:
        x = _check_x(x)
        d = phi_prime(x)
        rep.n_points += 1
        checks = [("nonneg", d, "min_margin_nonneg"), ("exp", 2.0 * math.pi * math.exp(-math.pi * x) - d, "min_margin_exp")]
        if x < 1.0:
            bound = 0.5 * math.pi * x**-2.5 * math.exp(-math.pi / (4.0 * x))
            checks.append(("small_x", bound - d, "min_margin_small_x"))
        for name, margin, attr in checks:
            setattr(rep, attr, min(getattr(rep, attr), margin))
            if margin < -slack:
                rep.violations.append((name, x, margin))
    return rep
