"""Acceptance criteria 1-15, one test each.

Every test records a PASS/FAIL line (printed in the terminal summary) before
asserting, so a failing criterion still reports what it measured.
"""

import cmath
import math
import time

import numpy as np
import pytest

from conftest import record
from rauxlab.phase import (
    O_CONST,
    compute_a,
    d_detail,
    decomposition_check,
    estimate_B,
    half_theta_gap,
    lemma_partial_sums,
    omega,
    remark_identity,
    u_detail,
    zeta_line_zeros,
)
from rauxlab.rzeta import auto_spec, bound_envelope, eval_F_theta, eval_r, saddle_shift_level
from rauxlab.specfun import log_gamma, riemann_siegel_theta, theta, z_from_oracle, zeta_line_oracle
from rauxlab.thetafun import check_kernel_bounds
from rauxlab.zerolab import ZeroStore, sided_counts

GRID = [complex(s, t) for s in (-3.5, -1.5, 0.5, 2.5, 4.0) for t in (-20.0, -10.0, 0.0, 10.0, 20.0)]


def check(number: int, ok: bool, detail: str) -> None:
    record(number, ok, detail)
    print(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}")
    assert ok, detail


def test_criterion_01_value_at_zero():
    t0 = time.perf_counter()
    r = eval_r(0.0).value
    dt = time.perf_counter() - t0
    err = abs(r + 0.5)
    check(1, err <= 1e-10 and dt < 1.0, f"|R(0) + 1/2| = {err:.2e}, {dt:.3f} s")


def test_criterion_02_constant_a():
    t0 = time.perf_counter()
    a = compute_a().value
    dt = time.perf_counter() - t0
    err = abs(a - complex(0.64087373271637604, 0.55990021329435156))
    check(2, err <= 1e-9 and dt < 5.0, f"a = {a.real:.17g} + {a.imag:.17g}i, error {err:.2e}, {dt:.3f} s")


def test_criterion_03_identity():
    t0 = time.perf_counter()
    v = remark_identity().value
    dt = time.perf_counter() - t0
    err = abs(v - complex(0.6373866805736784379, 0.5524349167416397674))
    check(3, err <= 1e-9 and dt < 5.0, f"identity = {v.real:.17g} + {v.imag:.17g}i, error {err:.2e}, {dt:.3f} s")


def test_criterion_04_omega_at_zero():
    w = omega(0.0).value.real
    check(4, abs(w - 2.86349) <= 5e-5, f"omega(0) = {w:.12f}")


def test_criterion_05_representations_agree():
    t0 = time.perf_counter()
    worst = 0.0
    for s in GRID:
        lg = log_gamma(s / 2).value
        direct = s * cmath.exp(-s / 2 * math.log(math.pi) + lg) * eval_r(s).value
        worst = max(worst, abs(eval_F_theta(s).value - direct))
    dt = time.perf_counter() - t0
    check(5, worst <= 1e-8 and dt < 60.0, f"max |F_theta - s pi^(-s/2) Gamma(s/2) R| = {worst:.2e} on 25 points, {dt:.2f} s")


def test_criterion_06_envelope():
    bad = [s for s in GRID if abs(eval_F_theta(s).value) > bound_envelope(s).bound]
    check(6, not bad, f"{len(bad)} envelope violations on 25 points")


def test_criterion_07_kernel_inequalities():
    rep = check_kernel_bounds(np.linspace(0.05, 5.0, 100))
    check(7, rep.n_points == 100 and not rep.violations, f"{len(rep.violations)} violations on {rep.n_points} points")


def test_criterion_08_shift_invariance():
    t0 = time.perf_counter()
    worst = 0.0
    for t in (10.0, 50.0, 200.0):
        s = complex(0.5, t)
        n = saddle_shift_level(s)
        a = eval_r(s, spec=auto_spec(s, shift_level=n)).value
        b = eval_r(s, spec=auto_spec(s, shift_level=n + 1)).value
        worst = max(worst, abs(a - b))
    dt = time.perf_counter() - t0
    check(8, worst <= 1e-9 and dt < 30.0, f"max |R_N - R_(N+1)| = {worst:.2e}, {dt:.2f} s")


def test_criterion_09_z_consistency():
    t0 = time.perf_counter()
    worst = 0.0
    for t in (10.0, 25.0, 50.0, 100.0, 250.0):
        rot = cmath.exp(1j * riemann_siegel_theta(t).value.real)
        z_r = 2.0 * (rot * eval_r(complex(0.5, t)).value).real
        z_o = rot * zeta_line_oracle(t).value
        worst = max(worst, abs(z_r - z_o))
    dt = time.perf_counter() - t0
    check(9, worst <= 1e-6 and dt < 60.0, f"max |Z_R - e^(i theta) zeta| = {worst:.2e}, {dt:.2f} s")


@pytest.mark.slow
def test_criterion_10_census(census):
    results, dt = census
    st = ZeroStore()
    st.add_scan(results)
    rep = sided_counts(400.0, st)
    literal = sum(1 for z in st.zeros if 0 < z.gamma <= 400.0 and -1.0 <= z.beta <= 3.0)
    ok = abs(rep.count_residual) <= 3.0 and rep.N == rep.N_r + rep.N_l and dt < 1800.0
    check(
        10,
        ok,
        f"N(400) = {rep.N:g} (N_r {rep.N_r:g}, N_l {rep.N_l:g}), main term {rep.main_term:.3f}, "
        f"residual {rep.count_residual:.3f}; {literal} of them in -1 <= beta <= 3; scan {dt:.1f} s",
    )


@pytest.mark.slow
def test_criterion_11_omega_tracks_right_zeros(store):
    parts, ok = [], True
    for T in (100.0, 200.0, 400.0):
        nr = sided_counts(T, store).N_r
        gap = abs(omega(T).value.real - 2 * math.pi * nr)
        ok &= gap <= O_CONST * math.log(T)
        parts.append(f"T={T:g}: {gap:.2f} <= {O_CONST * math.log(T):.1f}")
    check(11, ok, "; ".join(parts))


@pytest.mark.slow
def test_criterion_12_u_counts_difference(store):
    parts, ok = [], True
    for T in (100.0, 200.0, 400.0):
        c = sided_counts(T, store)
        gap = abs(u_detail(T, store).value - math.pi * (c.N_r - c.N_l))
        bound = O_CONST * math.sqrt(T) * math.log(T)
        ok &= gap <= bound
        parts.append(f"T={T:g}: {gap:.2f}")
    check(12, ok, "|u - pi (N_r - N_l)| " + "; ".join(parts))


@pytest.mark.slow
def test_criterion_13_decomposition_and_B(store):
    rep = estimate_B(store, gamma_max=400.0)
    B = rep.B_estimate
    ok_B = abs(B - 0.05592) <= 0.02 + rep.B_truncation_error

    ok_half = True
    for t in (50.0, 100.0, 200.0):
        ok_half &= abs(half_theta_gap(t, store)) <= O_CONST * math.sqrt(t) * math.log(t)

    flat = {s.t: s.residual / s.t for s in decomposition_check([200.0, 400.0], store, B=0.0)}
    drift = abs(flat[400.0] - flat[200.0])

    ok_d = True
    for T in (100.0, 200.0, 400.0):
        dd = d_detail(T, store)
        ok_d &= abs(dd.value - B * T + 0.5 * theta(T)) <= O_CONST * math.sqrt(T) * math.log(T) + dd.tail_err

    worst = 0.0
    ok_res = True
    for s in decomposition_check([50.0, 100.0, 200.0, 400.0], store, B=B):
        worst = max(worst, abs(s.residual))
        ok_res &= abs(s.residual) <= O_CONST * math.sqrt(s.t) * math.log(s.t) + s.tail_err

    ok = ok_B and ok_half and drift < 0.02 and ok_d and ok_res
    check(
        13,
        ok,
        f"B = {B:.5f} (trunc {rep.B_truncation_error:.4f}, via identity {rep.B_via_identity:.5f}, "
        f"slope with B=0 {-flat[400.0]:.5f}, drift {drift:.4f}), max |residual| {worst:.3f}",
    )


@pytest.mark.slow
def test_criterion_14_lemma_signature(store):
    sums = [lemma_partial_sums(store, K).negative_sum for K in (10, 20, 40)]
    need = 0.5 * 0.125 * (math.log(40) - math.log(10))
    ok = sums[0] < sums[1] < sums[2] and sums[2] - sums[0] >= need
    check(14, ok, f"sums {sums[0]:.4f}, {sums[1]:.4f}, {sums[2]:.4f}; growth {sums[2] - sums[0]:.4f} >= {need:.4f}")


def _oracle_sign_changes(a: float, b: float, step: float = 0.05) -> list:
    ts = np.arange(a + step, b, step)
    zs = [z_from_oracle(t).value.real for t in ts]
    out = []
    for t0, t1, z0, z1 in zip(ts[:-1], ts[1:], zs[:-1], zs[1:]):
        if z0 == 0.0 or (z0 > 0) == (z1 > 0):
            continue
        lo, hi, zlo = t0, t1, z0
        while hi - lo > 1e-9:
            m = 0.5 * (lo + hi)
            zm = z_from_oracle(m).value.real
            if (zm > 0) == (zlo > 0):
                lo, zlo = m, zm
            else:
                hi = m
        out.append(0.5 * (lo + hi))
    return out


def test_criterion_15_line_zeros():
    t0 = time.perf_counter()
    found = zeta_line_zeros(0.0, 50.0)
    dt = time.perf_counter() - t0
    ref = _oracle_sign_changes(0.0, 50.0)
    worst = max((abs(a - b) for a, b in zip(found, ref)), default=math.inf)
    ok = len(found) == len(ref) == 10 and worst <= 1e-6 and dt < 120.0
    check(15, ok, f"{len(found)} zeros found, {len(ref)} oracle sign changes, max offset {worst:.2e}, {dt:.2f} s")
