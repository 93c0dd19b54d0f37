"""Special functions: log-gamma, digamma, Euler's constant, Riemann-Siegel theta
and an independent critical-line zeta oracle.

Everything here is self-contained (no scipy.special) so that the oracles used
to check the contour evaluators do not share code with them.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from rauxlab.errors import DomainError, PoleError, PrecisionError

EPS = 2.0**-52
LOG_PI = math.log(math.pi)
HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)
EULER_GAMMA = 0.57721566490153286060651209008240243

# B_2, B_4, ..., B_26
_BERNOULLI = (
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
)

# Stirling series is used once Re(z) reaches this value.
_STIRLING_RE = 15.0


@dataclass(frozen=True)
class EvalResult:
    """A complex value with an a-posteriori absolute error estimate.

    ``method`` records which evaluator produced the number. ``abs_err`` is
    +inf only when the evaluator declares failure.
    """

    value: complex
    abs_err: float
    method: str

    def __post_init__(self):
        if not (self.abs_err >= 0.0):
            raise ValueError(f"abs_err must be >= 0, got {self.abs_err!r}")

    @property
    def ok(self) -> bool:
        return math.isfinite(self.abs_err)

    def __complex__(self):
        return complex(self.value)


def as_point(s) -> complex:
    """Coerce to a finite complex number (the ComplexPoint invariant)."""
    z = complex(s)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError(f"non-finite point {z!r}")
    return z


def _check_pole(z: complex, name: str) -> None:
    if z.imag == 0.0 and z.real <= 0.0 and z.real == math.floor(z.real):
        raise PoleError(f"{name} has a pole at s = {z.real:g}")


def _shift(z: complex) -> tuple[complex, int]:
    m = 0 if z.real >= _STIRLING_RE else int(math.ceil(_STIRLING_RE - z.real))
    return z + m, m


def log_gamma(s) -> EvalResult:
    """Principal branch of log Gamma(s), continuous on the plane cut along (-inf, 0].

    Upward recurrence into Re(z) >= 15 followed by the Stirling series; the
    error estimate is the first omitted Stirling term plus the rounding of
    the recurrence logs.
    """
    z0 = as_point(s)
    _check_pole(z0, "log_gamma")
    z, m = _shift(z0)
    lz = cmath.log(z)
    inv = 1.0 / z
    inv2 = inv * inv
    base = (z - 0.5) * lz - z + HALF_LOG_2PI
    terms = []
    p = inv
    for k, b in enumerate(_BERNOULLI[:-1], start=1):
        terms.append(b / (2 * k * (2 * k - 1)) * p)
        p = p * inv2
    k = len(_BERNOULLI)
    tail = abs(_BERNOULLI[-1] / (2 * k * (2 * k - 1)) * p)
    re = [base.real] + [t.real for t in reversed(terms)]
    im = [base.imag] + [t.imag for t in reversed(terms)]
    if m:
        logs = [cmath.log(z0 + j) for j in range(m)]
        re.extend(-w.real for w in logs)
        im.extend(-w.imag for w in logs)
    value = complex(math.fsum(re), math.fsum(im))
    scale = abs(base) + sum(abs(x) for x in re[len(terms) + 1 :]) + sum(abs(x) for x in im[len(terms) + 1 :])
    err = tail + 4.0 * EPS * scale + 2.0 * EPS * abs(value)
    return EvalResult(value, err, "stirling")


def digamma(s) -> EvalResult:
    """Gamma'(s)/Gamma(s) via recurrence and the asymptotic series."""
    z0 = as_point(s)
    _check_pole(z0, "digamma")
    z, m = _shift(z0)
    inv = 1.0 / z
    inv2 = inv * inv
    terms = [cmath.log(z), -0.5 * inv]
    p = inv2
    for k, b in enumerate(_BERNOULLI[:-1], start=1):
        terms.append(-b / (2 * k) * p)
        p = p * inv2
    k = len(_BERNOULLI)
    tail = abs(_BERNOULLI[-1] / (2 * k) * p)
    terms.extend(-1.0 / (z0 + j) for j in range(m))
    value = complex(math.fsum(t.real for t in terms), math.fsum(t.imag for t in terms))
    scale = sum(abs(t) for t in terms)
    return EvalResult(value, tail + 4.0 * EPS * scale, "asymptotic")


def euler_gamma() -> float:
    """Euler's constant 0.5772156649015328606..."""
    return EULER_GAMMA


def riemann_siegel_theta(t: float) -> EvalResult:
    """theta(t) = Im log Gamma(1/4 + it/2) - (t/2) log(pi); odd in t, theta(0) = 0."""
    t = float(t)
    if not math.isfinite(t):
        raise DomainError(f"non-finite t {t!r}")
    a = abs(t)
    lg = log_gamma(complex(0.25, 0.5 * a))
    val = lg.value.imag - 0.5 * a * LOG_PI
    err = lg.abs_err + 2.0 * EPS * (abs(lg.value.imag) + 0.5 * a * LOG_PI)
    return EvalResult(complex(val if t >= 0 else -val, 0.0), err, "stirling")


def theta(t: float) -> float:
    """Real value of riemann_siegel_theta."""
    return riemann_siegel_theta(t).value.real


def theta_prime(t: float) -> float:
    """theta'(t) = Re(digamma(1/4 + it/2))/2 - log(pi)/2."""
    return 0.5 * digamma(complex(0.25, 0.5 * t)).value.real - 0.5 * LOG_PI


# --- zeta oracle --------------------------------------------------------------

_LOG_BORWEIN = math.log(3.0 + math.sqrt(8.0))


def _borwein_weights(n: int) -> np.ndarray:
    """1 - d_k/d_n for k = 0..n-1 of Borwein's alternating-series accelerator.

    d_k = n * sum_{i<=k} (n+i-1)! 4^i / ((n-i)! (2i)!), computed in log space
    so that n in the thousands does not overflow.
    """
    logs = np.array(
        [math.lgamma(n + i) - math.lgamma(n - i + 1) - math.lgamma(2 * i + 1) + i * math.log(4.0) for i in range(n + 1)]
    )
    cum = np.cumsum(np.exp(logs - logs.max()))
    return 1.0 - cum[:-1] / cum[-1]


def zeta_line_oracle(t: float, depth: int | None = None, target: float = 1e-9) -> EvalResult:
    """zeta(1/2 + it) from the alternating eta series with Borwein acceleration.

    eta(s) = sum (-1)^k (1 - d_k/d_n) / (k+1)^s with all weights in [0, 1]; the
    truncation bound is 3/(3+sqrt 8)^n / |Gamma(s)| / |1 - 2^(1-s)|.
    ``depth`` overrides the adaptive choice of n. Raises PrecisionError when
    the total error bound exceeds ``target``.
    """
    t = float(t)
    if not math.isfinite(t) or abs(t) > 5000.0:
        raise DomainError(f"zeta_line_oracle supports |t| <= 5000, got {t!r}")
    s = complex(0.5, t)
    # log(1/|Gamma(s)|) for the error bound
    log_inv_gamma = -log_gamma(s).value.real
    denom = 1.0 - 2.0 ** (1.0 - s)
    log_den = math.log(abs(denom))
    if depth is None:
        need = log_inv_gamma - log_den + math.log(3.0) - math.log(target * 0.1)
        depth = max(8, int(math.ceil(need / _LOG_BORWEIN)) + 2)
    n = int(depth)
    w = _borwein_weights(n)
    k = np.arange(1, n + 1, dtype=float)
    sign = np.where(np.arange(n) % 2 == 0, 1.0, -1.0)
    terms = sign * w * np.exp(-s * np.log(k))
    eta = complex(math.fsum(terms.real), math.fsum(terms.imag))
    value = eta / denom
    trunc = math.exp(math.log(3.0) - n * _LOG_BORWEIN + log_inv_gamma - log_den)
    # phase of k^-s is computed with absolute error ~ eps*|s|*log k
    phase_err = 4.0 * EPS * (1.0 + abs(s) * math.log(n)) * math.sqrt(float(np.sum(np.abs(terms) ** 2)))
    rounding = (8.0 * EPS * float(np.sum(np.abs(terms))) + phase_err) / abs(denom) + 4.0 * EPS * n * abs(value)
    err = trunc + rounding
    if err > target:
        raise PrecisionError(f"zeta oracle: bound {err:.3g} exceeds target {target:.3g} at depth {n}", err)
    return EvalResult(value, err, "borwein")


def z_from_oracle(t: float, target: float = 1e-9) -> EvalResult:
    """Hardy Z(t) = e^{i theta(t)} zeta(1/2 + it) using the eta-series oracle."""
    z = zeta_line_oracle(t, target=target)
    th = riemann_siegel_theta(t)
    v = cmath.exp(1j * th.value.real) * z.value
    return EvalResult(complex(v.real, 0.0), z.abs_err + abs(z.value) * th.abs_err + abs(v.imag), "borwein")
