"""The phase omega(t) of R on the critical line and its zero-sum decomposition.

R(1/2 + it) = e^{-i omega(t)} g(t) with g real. omega is obtained by
integrating omega'(t) = -Re R'/R(1/2 + it) from omega(0) = -arg R(1/2), on
panels of width 1/4 with a 12/24-point Gauss-Legendre pair per panel
(subdivided where the two disagree). Prefix integrals at panel boundaries
are cached, so tables along a t-grid cost one pass.

The decomposition checked here is

    omega(t) = theta(t) + u(t) + d(t) - B t + arctan(2t) + omega(0)

with u summed over zeros above the real axis, d over those with gamma <= 0.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Sequence

import numpy as np
from numpy.polynomial.legendre import leggauss
from scipy.optimize import brentq

from rauxlab.errors import IncompleteStoreError, NearZeroOnLineError
from rauxlab.rzeta import eval_batch, eval_r, eval_r_prime, QuadratureSpec, auto_spec
from rauxlab.specfun import EULER_GAMMA, LOG_PI, EvalResult, digamma, theta, theta_prime
from rauxlab.zerolab import ZeroRecord, ZeroStore

PANEL = 0.25
NEAR_ZERO = 1e-9
PANEL_TOL = 1e-13
MAX_T = 1000.0
# O-constants used by the desk-scale checks (suite parameters)
O_CONST = 10.0

_X12, _W12 = leggauss(12)
_X24, _W24 = leggauss(24)


# --- omega ------------------------------------------------------------------------


def _integrand(x: np.ndarray) -> np.ndarray:
    """-Re R'/R at 1/2 + ix; raises NearZeroOnLineError where |R| < 1e-9."""
    s = 0.5 + 1j * np.asarray(x, dtype=float)
    vals, _, scale = eval_batch(s, nderiv=1, scaled=True)
    with np.errstate(over="ignore"):
        mag = np.abs(vals[0]) * np.exp(scale)
    bad = mag < NEAR_ZERO
    if np.any(bad):
        t = float(np.asarray(x)[np.argmax(bad)])
        raise NearZeroOnLineError(f"|R(1/2 + i t)| < {NEAR_ZERO:g} at t = {t:.12g}", float(mag[np.argmax(bad)]))
    return -(vals[1] / vals[0]).real


def _gl_pair(a: np.ndarray, b: np.ndarray, with_max: bool = False):
    """12- and 24-point Gauss-Legendre integrals over many panels at once."""
    half = 0.5 * (b - a)
    mid = 0.5 * (b + a)
    x12 = mid[:, None] + half[:, None] * _X12[None, :]
    x24 = mid[:, None] + half[:, None] * _X24[None, :]
    f = _integrand(np.concatenate([x12.ravel(), x24.ravel()]))
    f12 = f[: x12.size].reshape(x12.shape)
    f24 = f[x12.size :].reshape(x24.shape)
    if with_max:
        return half * (f12 @ _W12), half * (f24 @ _W24), np.abs(f24).max(axis=1)
    return half * (f12 @ _W12), half * (f24 @ _W24)


def _noise(a, b, f_abs_max):
    # rounding floor of a panel integral: R'/R carries ~1e-13 relative error
    return 1e-13 * abs(b - a) * f_abs_max


def _panel_integral(a: float, b: float, tol: float, depth: int = 0):
    i12, i24, fmax = _gl_pair(np.array([a]), np.array([b]), with_max=True)
    i12, i24 = float(i12[0]), float(i24[0])
    err = abs(i24 - i12)
    if err <= max(tol, _noise(a, b, float(fmax[0]))) or depth >= 16:
        return i24, err
    m = 0.5 * (a + b)
    l, el = _panel_integral(a, m, 0.5 * tol, depth + 1)
    r, er = _panel_integral(m, b, 0.5 * tol, depth + 1)
    return l + r, el + er


class PhaseIntegrator:
    """Cached prefix integrals of omega' on the panel grid k * PANEL."""

    def __init__(self, panel: float = PANEL, tol: float = PANEL_TOL):
        self.panel = panel
        self.tol = tol
        r = eval_r(0.5)
        self.omega0 = EvalResult(complex(-math.atan2(r.value.imag, r.value.real)), r.abs_err / abs(r.value), "arg")
        # cum[sign][k] = integral from 0 to sign * k * panel
        self._cum = {1: [0.0], -1: [0.0]}
        self._err = {1: [0.0], -1: [0.0]}

    def _extend(self, sign: int, k_needed: int) -> None:
        cum, errs = self._cum[sign], self._err[sign]
        k0 = len(cum) - 1
        if k_needed <= k0:
            return
        # extend in chunks so the batch evaluator sees many nodes at once
        k1 = max(k_needed, k0 + 64)
        ks = np.arange(k0, k1, dtype=float)
        a = sign * ks * self.panel
        b = sign * (ks + 1) * self.panel
        i12, i24, fmax = _gl_pair(a, b, with_max=True)
        for j in range(ks.size):
            val, err = float(i24[j]), abs(float(i24[j] - i12[j]))
            if err > max(self.tol, _noise(a[j], b[j], fmax[j])):
                val, err = _panel_integral(float(a[j]), float(b[j]), self.tol)
            cum.append(cum[-1] + val)
            errs.append(errs[-1] + err)

    def integral(self, t: float) -> tuple[float, float]:
        """(integral of omega' over [0, t], error estimate)."""
        t = float(t)
        if abs(t) > MAX_T:
            raise ValueError(f"omega supports |t| <= {MAX_T:g}")
        sign = 1 if t >= 0 else -1
        k = int(math.floor(abs(t) / self.panel))
        self._extend(sign, k)
        base, err = self._cum[sign][k], self._err[sign][k]
        start = sign * k * self.panel
        if t == start:
            return base, err
        part, perr = _panel_integral(start, t, self.tol) if sign > 0 else _panel_integral(t, start, self.tol)
        if sign < 0:
            part = -part
        return base + part, err + perr

    def omega(self, t: float) -> EvalResult:
        val, err = self.integral(t)
        w0 = self.omega0.value.real
        return EvalResult(complex(w0 + val, 0.0), err + self.omega0.abs_err + 1e-15 * abs(w0 + val), "integral")

    def grid(self, t_max: float, sign: int = 1) -> tuple[np.ndarray, np.ndarray]:
        """omega at all panel boundaries in [0, t_max] (or [-t_max, 0])."""
        k = int(math.floor(t_max / self.panel))
        self._extend(sign, k)
        ts = sign * np.arange(k + 1) * self.panel
        return ts, self.omega0.value.real + np.array(self._cum[sign][: k + 1])


_DEFAULT: Optional[PhaseIntegrator] = None


def _default() -> PhaseIntegrator:
    global _DEFAULT
    if _DEFAULT is None:
        _DEFAULT = PhaseIntegrator()
    return _DEFAULT


def omega(t: float) -> EvalResult:
    """omega(t) = omega(0) + integral_0^t -Re R'/R(1/2 + ix) dx, |t| <= 1000."""
    return _default().omega(t)


def omega_prime(t: float) -> float:
    return float(_integrand(np.array([float(t)]))[0])


# --- critical-line zeros of zeta ----------------------------------------------------


def zeta_line_zeros(t_min: float, t_max: float, xtol: float = 1e-10) -> List[float]:
    """All t in (t_min, t_max) with cos(theta(t) - omega(t)) = 0.

    phi = theta - omega is continuous, so each crossing of a level pi/2 + k pi
    between consecutive panel boundaries is detected even on a coarse grid;
    intervals where phi' changes sign are subdivided before counting.
    """
    if not t_max > t_min:
        return []
    integ = _default()
    lo, hi = max(0.0, t_min), t_max
    if t_min < 0:
        raise ValueError("zeta_line_zeros is implemented for t_min >= 0")
    ts, om = integ.grid(hi)
    keep = (ts >= lo) & (ts <= hi)
    ts, om = list(ts[keep]), list(om[keep])
    if not ts or ts[0] > lo:
        ts.insert(0, lo)
        om.insert(0, integ.omega(lo).value.real)
    if ts[-1] < hi:
        ts.append(hi)
        om.append(integ.omega(hi).value.real)

    def phi(t):
        return theta(t) - integ.omega(t).value.real

    def dphi(t):
        return theta_prime(t) - omega_prime(t)

    out: List[float] = []
    stack = []
    for a, b, wa, wb in zip(ts[:-1], ts[1:], om[:-1], om[1:]):
        stack.append((a, b, theta(a) - wa, theta(b) - wb, 0))
    stack.reverse()
    while stack:
        a, b, pa, pb, depth = stack.pop()
        if depth < 12 and (dphi(a) > 0) != (dphi(b) > 0):
            m = 0.5 * (a + b)
            pm = phi(m)
            stack.append((m, b, pm, pb, depth + 1))
            stack.append((a, m, pa, pm, depth + 1))
            continue
        ka = math.floor((pa - 0.5 * math.pi) / math.pi)
        kb = math.floor((pb - 0.5 * math.pi) / math.pi)
        for k in range(min(ka, kb) + 1, max(ka, kb) + 1):
            level = 0.5 * math.pi + k * math.pi
            r = brentq(lambda x: phi(x) - level, a, b, xtol=xtol, rtol=4 * np.finfo(float).eps)
            if t_min < r < t_max:
                out.append(r)
    return sorted(out)


# --- zero sums --------------------------------------------------------------------


def u_margin(t: float) -> float:
    return 50.0 * max(1.0, math.log(t)) if t > 1 else 50.0


def u_terms(t: float, zeros: Iterable[ZeroRecord]) -> List[float]:
    """arctan(gamma/b) - arctan((gamma - t)/b), b = beta - 1/2, per zero above the axis."""
    out = []
    for z in zeros:
        b = z.beta - 0.5
        if z.gamma <= 0 or b == 0.0:
            continue
        out.append(z.multiplicity * (math.atan(z.gamma / b) - math.atan((z.gamma - t) / b)))
    return out


def d_terms(t: float, zeros: Iterable[ZeroRecord]) -> List[float]:
    """arctan((t - gamma)/b) + arctan(gamma/b) - t b/(b^2 + gamma^2) per zero with gamma <= 0."""
    out = []
    for z in zeros:
        b = z.beta - 0.5
        if z.gamma > 0 or b == 0.0:
            continue
        g = z.gamma
        out.append(z.multiplicity * (math.atan((t - g) / b) + math.atan(g / b) - t * b / (b * b + g * g)))
    return out


def u_partial(t: float, zeros: Iterable[ZeroRecord]) -> float:
    return math.fsum(u_terms(t, zeros))


def d_partial(t: float, zeros: Iterable[ZeroRecord]) -> float:
    return math.fsum(d_terms(t, zeros))


@dataclass(frozen=True)
class TailSum:
    partial: float
    tail: float
    tail_err: float

    @property
    def value(self) -> float:
        return self.partial + self.tail


def _upper_checked(store: ZeroStore, height: float) -> List[ZeroRecord]:
    cov = store.covered_height(upper=True)
    if cov < height:
        raise IncompleteStoreError(f"store covers gamma <= {cov:g} above the axis, need {height:g}")
    return [z for z in store.zeros if 0 < z.gamma]


def u_detail(t: float, store: ZeroStore) -> TailSum:
    """u(t) over the stored zeros plus an estimate of the zeros above the store.

    Beyond the covered height G each zero contributes about b t / (gamma (gamma - t)).
    With D the sum of b per unit height over (G/2, G], the tail is about
    D log(G / (G - t)); its error is taken as its own size.
    """
    t = float(t)
    if t == 0.0:
        return TailSum(0.0, 0.0, 0.0)
    if t < 0:
        raise ValueError("u is defined here for t >= 0")
    zs = _upper_checked(store, t + u_margin(t))
    G = store.covered_height(upper=True)
    partial = u_partial(t, zs)
    recent = [(z.beta - 0.5) * z.multiplicity for z in zs if 0.5 * G < z.gamma <= G]
    D = math.fsum(recent) / (0.5 * G)
    tail = D * math.log(G / (G - t))
    return TailSum(partial, tail, abs(tail))


def u_of_t(t: float, store: ZeroStore) -> float:
    return u_detail(t, store).value


# --- the gamma <= 0 zeros beyond the store ------------------------------------------------


@dataclass
class LowerModel:
    """Smooth extrapolation of the gamma <= 0 zeros by their ordinal m = 1 - index.

    beta(m) = 4 pi^2 m / L^2 + corrections and gamma(m) = -4 pi m / L + corrections,
    with L = log m. The leading terms are fixed at their known asymptotic values;
    the corrections are powers of log L over higher powers of L, least-squares
    fitted on the stored zeros. Order 2 keeps terms through m (log L)^2 / L^2
    beyond the leading one, order 1 through m / L.
    """

    cb: np.ndarray
    cg: np.ndarray
    m_last: int
    order: int

    @staticmethod
    def _basis(m, order, first):
        L = np.log(m)
        LL = np.log(L)
        cols = [m * LL / L ** (first + 1), m / L ** (first + 1)]
        if order >= 2:
            cols += [m * LL**2 / L ** (first + 2), m * LL / L ** (first + 2), m / L ** (first + 2)]
        cols.append(np.ones_like(m))
        return np.stack(cols, axis=-1)

    @classmethod
    def fit(cls, zeros: Sequence[ZeroRecord], order: int = 2, m_min: int = 15) -> "LowerModel":
        m = np.array([1 - z.index for z in zeros], dtype=float)
        b = np.array([z.beta for z in zeros])
        g = np.array([z.gamma for z in zeros])
        use = m >= m_min
        if use.sum() < order + 4:
            raise IncompleteStoreError("too few zeros below the axis to model the tail")
        L = np.log(m[use])
        rb = b[use] - 4 * math.pi**2 * m[use] / L**2
        rg = g[use] + 4 * math.pi * m[use] / L
        cb, *_ = np.linalg.lstsq(cls._basis(m[use], order, 2), rb, rcond=None)
        cg, *_ = np.linalg.lstsq(cls._basis(m[use], order, 1), rg, rcond=None)
        return cls(cb, cg, int(m.max()), order)

    def zeros(self, m: np.ndarray):
        m = np.asarray(m, dtype=float)
        L = np.log(m)
        beta = 4 * math.pi**2 * m / L**2 + self._basis(m, self.order, 2) @ self.cb
        gamma = -4 * math.pi * m / L + self._basis(m, self.order, 1) @ self.cg
        return beta, gamma


_TAIL_M = 200_000
_CHUNK = 50_000


def _model_sum(model: LowerModel, fn, m_to: int = _TAIL_M) -> tuple[float, float]:
    """Sum fn(beta, gamma) over modelled zeros m_last+1 .. m_to, plus an m^-2 remainder."""
    total = []
    for a in range(model.m_last + 1, m_to + 1, _CHUNK):
        m = np.arange(a, min(a + _CHUNK, m_to + 1), dtype=float)
        beta, gamma = model.zeros(m)
        total.append(math.fsum(fn(beta, gamma)))
    beta, gamma = model.zeros(np.array([float(m_to)]))
    last = float(fn(beta, gamma)[0])
    # terms decay like m^-2 (up to logs), so the remainder is about m * last term
    return math.fsum(total) + m_to * last, abs(m_to * last)


def _d_fn(t):
    def fn(beta, gamma):
        b = beta - 0.5
        return np.arctan((t - gamma) / b) + np.arctan(gamma / b) - t * b / (b * b + gamma * gamma)

    return fn


def _lower_zeros(store: ZeroStore) -> List[ZeroRecord]:
    zs = store.lower()
    if not zs:
        raise IncompleteStoreError("store has no zeros with gamma <= 0")
    return zs


def d_detail(t: float, store: ZeroStore, K: Optional[int] = None) -> TailSum:
    """d(t) over the stored zeros with gamma <= 0 (first K of them) plus the modelled tail.

    The tail error is the spread between fits of two correction orders plus
    the remainder bound of the model sum.
    """
    t = float(t)
    zs = _lower_zeros(store)
    if K is not None:
        if len(zs) < K:
            raise IncompleteStoreError(f"store holds {len(zs)} zeros with gamma <= 0, need {K}")
        zs = zs[:K]
    if t == 0.0:
        return TailSum(0.0, 0.0, 0.0)
    partial = d_partial(t, zs)
    m2 = LowerModel.fit(zs, order=2)
    m1 = LowerModel.fit(zs, order=1)
    tail2, r2 = _model_sum(m2, _d_fn(t))
    tail1, _ = _model_sum(m1, _d_fn(t))
    return TailSum(partial, tail2, abs(tail2 - tail1) + r2)


def d_of_t(t: float, store: ZeroStore, K: Optional[int] = None) -> float:
    return d_detail(t, store, K).value


# --- constants ----------------------------------------------------------------------


def compute_a(spec: Optional[QuadratureSpec] = None) -> EvalResult:
    """a = -2 R'(0) - gamma_E / 2."""
    rp = eval_r_prime(0.0, spec=spec)
    return EvalResult(-2.0 * rp.value - 0.5 * EULER_GAMMA, 2.0 * rp.abs_err + 1e-16, "contour")


def remark_identity(spec: Optional[QuadratureSpec] = None) -> EvalResult:
    """2 + R'(1/2)/R(1/2) + psi(1/4)/2."""
    r = eval_r(0.5, spec=spec)
    rp = eval_r_prime(0.5, spec=spec)
    psi = digamma(0.25)
    q = rp.value / r.value
    err = (rp.abs_err + abs(q) * r.abs_err) / abs(r.value) + 0.5 * psi.abs_err
    return EvalResult(2.0 + q + 0.5 * psi.value, err, "contour")


def halved_spec(s) -> QuadratureSpec:
    """The automatic quadrature at s with half the step (resolution check)."""
    sp = auto_spec(s)
    return QuadratureSpec(sp.crossing, sp.shift_level, sp.half_width, sp.step / 2.0, sp.center)


@dataclass
class ConstantsReport:
    a: complex
    B_estimate: float
    B_truncation_error: float
    identity_value: complex
    partial_sum_right: float
    last_summand_right: float = 0.0
    B_via_identity: float = math.nan
    B_regression: float = math.nan
    n_upper: int = 0
    n_lower: int = 0
    gamma_max: float = math.nan

    def __post_init__(self):
        if not self.B_truncation_error >= 0:
            raise ValueError("B_truncation_error must be >= 0")


def _upper_tail_bound(G: float, weight: float) -> float:
    # sum over gamma > G of weight / gamma^2 with density log(gamma/2pi) / (2 pi)
    return weight * (math.log(G / (2 * math.pi)) + 1.0) / (2 * math.pi * G)


def estimate_B(store: ZeroStore, gamma_max: Optional[float] = None, residual_slope: Optional[float] = None) -> ConstantsReport:
    """B = -log(pi)/2 + sum_{n>=1} b/(b^2 + gamma^2) + Re a + Re sum (1/rho - 1/(rho - 1/2)).

    Zeros up to |gamma| <= gamma_max on both halves (default: everything
    stored). The truncation error bounds the omitted upper zeros by
    2/gamma^2 and 1/(2 gamma^2) majorants and the omitted lower zeros by the
    fitted model summed with |rho|^-2 weights.
    """
    if not store.zeros:
        raise IncompleteStoreError("empty zero store")
    G_up = store.covered_height(upper=True)
    G_lo = store.covered_height(upper=False)
    if gamma_max is not None:
        if G_up < gamma_max or G_lo < gamma_max:
            raise IncompleteStoreError(f"store covers {G_up:g} above and {G_lo:g} below, need {gamma_max:g}")
        G_up = G_lo = float(gamma_max)
    if G_up <= 0 or G_lo <= 0:
        raise IncompleteStoreError("store must be populated on both halves")
    up = sorted((z for z in store.zeros if 0 < z.gamma <= G_up), key=lambda z: z.index)
    low = [z for z in store.lower() if z.gamma >= -G_lo]
    right_terms = [z.multiplicity * (z.beta - 0.5) / ((z.beta - 0.5) ** 2 + z.gamma**2) for z in up]
    partial_right = math.fsum(right_terms)
    mixed = [z.multiplicity * (1 / z.rho - 1 / (z.rho - 0.5)) for z in up + low]
    mixed_re = math.fsum(w.real for w in mixed)
    a = compute_a()
    ident = remark_identity()
    B = -0.5 * LOG_PI + partial_right + a.value.real + mixed_re
    model = LowerModel.fit(low)
    low_mixed, low_rem = _model_sum(model, lambda b, g: 0.5 / (np.hypot(b, g) * np.hypot(b - 0.5, g)))
    trunc = (
        _upper_tail_bound(G_up, 2.0)
        + _upper_tail_bound(G_up, 0.5)
        + low_mixed
        + low_rem
        + a.abs_err
    )
    return ConstantsReport(
        a=a.value,
        B_estimate=B,
        B_truncation_error=trunc,
        identity_value=ident.value,
        partial_sum_right=partial_right,
        last_summand_right=right_terms[-1] if right_terms else 0.0,
        B_via_identity=-0.5 * LOG_PI + partial_right + ident.value.real,
        B_regression=-residual_slope if residual_slope is not None else math.nan,
        n_upper=len(up),
        n_lower=len(low),
        gamma_max=min(G_up, G_lo),
    )


# --- decomposition ----------------------------------------------------------------


@dataclass(frozen=True)
class PhaseSample:
    t: float
    omega: float
    u: float
    d: float
    theta: float
    residual: float
    tail_err: float = 0.0


def decomposition_check(t_grid: Sequence[float], store: ZeroStore, B: Optional[float] = None) -> List[PhaseSample]:
    """residual(t) = omega - [theta + u + d - B t + arctan 2t + omega(0)] on a grid.

    With B=None the store's estimate is used; B=0 exposes the slope -B.
    """
    if B is None:
        B = estimate_B(store).B_estimate
    integ = _default()
    w0 = integ.omega0.value.real
    out = []
    for t in t_grid:
        t = float(t)
        w = integ.omega(t).value.real
        if t == 0.0:
            uu = dd = 0.0
            terr = 0.0
        else:
            ud, dd_ = u_detail(t, store), d_detail(t, store)
            uu, dd = ud.value, dd_.value
            terr = ud.tail_err + dd_.tail_err
        th = theta(t)
        res = w - (th + uu + dd - B * t + math.atan(2 * t) + w0)
        out.append(PhaseSample(t, w, uu, dd, th, res, terr))
    return out


def residual_slope(samples: Sequence[PhaseSample]) -> float:
    """Least-squares slope through the origin of residual against t."""
    t = np.array([s.t for s in samples])
    r = np.array([s.residual for s in samples])
    return float(t @ r / (t @ t))


def half_theta_gap(t: float, store: ZeroStore) -> float:
    """omega(t) - theta(t)/2 - u(t)."""
    return omega(t).value.real - 0.5 * theta(t) - u_of_t(t, store)


def scenario_table(T_values: Sequence[float], store: ZeroStore) -> List[dict]:
    """theta/(6 pi N_r), theta/(3 pi N_l) and 3 omega/theta per T (diagnostic only)."""
    from rauxlab.zerolab import sided_counts

    rows = []
    for T in T_values:
        c = sided_counts(T, store)
        th = theta(T)
        w = omega(T).value.real
        rows.append(
            {
                "T": T,
                "theta_over_6pi_Nr": th / (6 * math.pi * c.N_r) if c.N_r else math.nan,
                "theta_over_3pi_Nl": th / (3 * math.pi * c.N_l) if c.N_l else math.nan,
                "three_omega_over_theta": 3 * w / th,
            }
        )
    return rows


# --- partial sums --------------------------------------------------------------------


@dataclass
class LemmaReport:
    K: int
    right_sum: float
    negative_sum: float
    log_ratio: float  # negative_sum / ((1/8) log K)
    last_index: int = 0


def lemma_partial_sums(store: ZeroStore, K: int) -> LemmaReport:
    """sum_{n=1..K} |Re 1/rho_n| and sum_{n=-1..-K} beta/(beta^2 + gamma^2)."""
    K = int(K)
    if K < 0:
        raise ValueError("K must be >= 0")
    if K == 0:
        return LemmaReport(0, 0.0, 0.0, math.nan, 0)
    up = sorted((z for z in store.zeros if z.gamma > 0), key=lambda z: z.index)[:K]
    neg = [z for z in store.lower() if z.index <= -1][:K]
    if len(up) < K or len(neg) < K:
        raise IncompleteStoreError(f"need {K} zeros on each half, store has {len(up)} and {len(neg)}")
    right = math.fsum(abs((1 / z.rho).real) for z in up)
    negative = math.fsum(z.beta / (z.beta**2 + z.gamma**2) for z in neg)
    lr = negative / (0.125 * math.log(K)) if K > 1 else math.nan
    return LemmaReport(K, right, negative, lr, neg[-1].index)


# --- output -------------------------------------------------------------------------


def write_phase_table(samples: Sequence[PhaseSample], path) -> None:
    """CSV with header t,omega,u,d,theta,residual and 17 significant digits."""
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["t", "omega", "u", "d", "theta", "residual"])
        for s in samples:
            w.writerow([format(v, ".17g") for v in (s.t, s.omega, s.u, s.d, s.theta, s.residual)])
