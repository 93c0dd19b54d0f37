"""Self-contained verification suites behind ``rauxlab verify``.

Each check returns a Check; none of them needs a zero store on disk, so the
suites run on a fresh checkout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Dict, List

import numpy as np


@dataclass(frozen=True)
class Check:
    suite: str
    name: str
    ok: bool
    detail: str


def _specfun() -> List[Check]:
    from rauxlab.specfun import log_gamma, riemann_siegel_theta, zeta_line_oracle

    out = []
    lg = log_gamma(0.5).value
    out.append(Check("specfun", "log_gamma(1/2) = log sqrt(pi)", abs(lg - 0.5 * math.log(math.pi)) < 1e-14, f"{lg.real:.17g}"))
    th = riemann_siegel_theta(10.0).value.real
    # frozen value of theta(10) from an independent multiprecision evaluation
    ref = -3.0670743962898953
    out.append(Check("specfun", "theta(10)", abs(th - ref) < 1e-12, f"{th:.17g}"))
    z = zeta_line_oracle(14.134725141734693)
    out.append(Check("specfun", "zeta oracle vanishes at the first zero", abs(z.value) < 1e-9, f"|zeta| = {abs(z.value):.3g}"))
    return out


def _theta() -> List[Check]:
    from rauxlab.thetafun import check_kernel_bounds, phi_direct, phi_transformed

    out = []
    d = max(abs(phi_direct(x) - phi_transformed(x)) for x in (0.3, 0.8, 1.0, 1.7, 3.0))
    out.append(Check("theta", "dual series agree", d < 1e-14, f"max diff {d:.3g}"))
    rep = check_kernel_bounds(np.linspace(0.05, 5.0, 100))
    out.append(Check("theta", "phi' inequalities on 100 points", rep.ok, f"{len(rep.violations)} violations"))
    return out


def _rzeta() -> List[Check]:
    from rauxlab.rzeta import auto_spec, bound_envelope, eval_F_product, eval_F_theta, eval_r, z_function
    from rauxlab.specfun import z_from_oracle

    out = []
    r0 = eval_r(0.0).value
    out.append(Check("rzeta", "R(0) = -1/2", abs(r0 + 0.5) < 1e-10, f"{r0.real:.17g},{r0.imag:.17g}"))
    worst = 0.0
    for t in (10.0, 50.0, 200.0):
        s = complex(0.5, t)
        n = auto_spec(s).shift_level
        worst = max(worst, abs(eval_r(s, spec=auto_spec(s, shift_level=n)).value - eval_r(s, spec=auto_spec(s, shift_level=n + 1)).value))
    out.append(Check("rzeta", "shift levels N and N+1 agree", worst < 1e-9, f"max diff {worst:.3g}"))
    s = complex(1.5, 10.0)
    diff = abs(eval_F_theta(s).value - eval_F_product(s).value)
    out.append(Check("rzeta", "theta-integral and product forms of F agree", diff < 1e-8, f"diff {diff:.3g}"))
    env = bound_envelope(s)
    out.append(Check("rzeta", "envelope bound", abs(eval_F_product(s).value) <= env.bound, f"bound {env.bound:.3g}"))
    zd = abs(z_function(25.0).value.real - z_from_oracle(25.0).value.real)
    out.append(Check("rzeta", "Z(25) against the eta-series oracle", zd < 1e-6, f"diff {zd:.3g}"))
    return out


def _zeros() -> List[Check]:
    from rauxlab.zerolab import Rectangle, refine_zero, scan_zeros, winding_count

    out = []
    w = winding_count(Rectangle(-3.0, -1.0, -1.0, 1.0))
    out.append(Check("zeros", "trivial zero at -2 enclosed", w == 1, f"winding {w}"))
    w = winding_count(Rectangle(2.0, 4.0, 110.0, 120.0))
    out.append(Check("zeros", "no zeros in [2,4] x [110,120]", w == 0, f"winding {w}"))
    z = refine_zero(complex(-2.05, 0.03))
    out.append(Check("zeros", "Newton finds -2", abs(z.rho + 2) < 1e-8, f"{z.beta:.17g},{z.gamma:.17g}"))
    res = scan_zeros(0.0, 50.0, -1.0, 3.0, window=25.0)
    ok = all(r.count == r.winding for r in res)
    n = sum(r.count for r in res)
    out.append(Check("zeros", "scan (0,50] matches winding numbers", ok and n == 4, f"{n} zeros"))
    return out


def _phase() -> List[Check]:
    from rauxlab.phase import compute_a, omega, omega_prime, remark_identity, zeta_line_zeros

    out = []
    w0 = omega(0.0).value.real
    out.append(Check("phase", "omega(0)", abs(w0 - 2.86349) < 5e-5, f"{w0:.17g}"))
    a = compute_a().value
    ref = complex(0.64087373271637604, 0.55990021329435156)
    out.append(Check("phase", "constant a", abs(a - ref) < 1e-9, f"{a.real:.17g},{a.imag:.17g}"))
    ident = remark_identity().value
    ref = complex(0.6373866805736784379, 0.5524349167416397674)
    out.append(Check("phase", "identity at t = 0", abs(ident - ref) < 1e-9, f"{ident.real:.17g},{ident.imag:.17g}"))
    h = 1e-4
    fd = (omega(20 + h).value.real - omega(20 - h).value.real) / (2 * h)
    out.append(Check("phase", "omega' by finite differences", abs(fd - omega_prime(20.0)) < 1e-5, f"{fd:.12g}"))
    zs = zeta_line_zeros(10.0, 15.0)
    ok = len(zs) == 1 and abs(zs[0] - 14.134725141734693) < 1e-6
    out.append(Check("phase", "first zeta zero from the phase", ok, ", ".join(f"{z:.12g}" for z in zs)))
    return out


SUITES: Dict[str, Callable[[], List[Check]]] = {
    "specfun": _specfun,
    "theta": _theta,
    "rzeta": _rzeta,
    "zeros": _zeros,
    "phase": _phase,
}


def run(suite: str) -> List[Check]:
    names = list(SUITES) if suite == "all" else [suite]
    out: List[Check] = []
    for name in names:
        try:
            out.extend(SUITES[name]())
        except Exception as exc:  # a crash is a failed check, not a traceback
            out.append(Check(name, "suite raised", False, f"{type(exc).__name__}: {exc}"))
    return out
