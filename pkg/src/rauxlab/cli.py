"""Command-line entry point: ``rauxlab <subcommand> ...``.

Exit status is 0 on success, 1 when a verification fails or a store is
incomplete or unreadable, and 2 for usage errors (argparse's convention).
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from dataclasses import dataclass
from typing import List, Optional, Sequence

from rauxlab.errors import DomainError, IncompleteStoreError, PrecisionError, StoreFormatError

STORE_ENV = "RAUXLAB_STORE"


@dataclass(frozen=True)
class RunConfig:
    precision_target: float = 1e-9
    threads: int = 1
    store_path: Optional[str] = None
    output_path: Optional[str] = None

    def __post_init__(self):
        if not 1e-12 <= self.precision_target <= 1e-4:
            raise ValueError("precision target must lie in [1e-12, 1e-4]")
        if self.threads < 1:
            raise ValueError("threads must be >= 1")


def fmt(x: float) -> str:
    return format(float(x), ".17g")


def fmt_c(z: complex) -> str:
    z = complex(z)
    return f"{fmt(z.real)},{fmt(z.imag)}"


def _complex_arg(text: str) -> complex:
    try:
        re, im = text.split(",")
        return complex(float(re), float(im))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected RE,IM, got {text!r}") from None


def _precision(text: str) -> float:
    v = float(text)
    if not 1e-12 <= v <= 1e-4:
        raise argparse.ArgumentTypeError("must lie in [1e-12, 1e-4]")
    return v


def _positive_int(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rauxlab", description="Evaluate R(s), locate its zeros and study its phase.")
    p.add_argument("--threads", type=_positive_int, default=1, help="worker processes for scans")
    p.add_argument("--precision", type=_precision, default=1e-9, help="requested absolute error (default 1e-9)")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("eval", help="evaluate R(s)")
    e.add_argument("--s", type=_complex_arg, required=True, metavar="RE,IM")
    e.add_argument("--method", choices=["direct", "shifted"], default="shifted")
    e.add_argument("--derivative", action="store_true", help="also print R'(s)")

    t = sub.add_parser("theta", help="evaluate phi(x) = theta_4(0, ix) and phi'(x)")
    t.add_argument("--x", type=float, required=True)

    z = sub.add_parser("zeros", help="zero scanning")
    zs = z.add_subparsers(dest="zeros_command", required=True)
    scan = zs.add_parser("scan", help="scan a t-range and append the zeros to a store")
    scan.add_argument("--tmin", type=float, required=True)
    scan.add_argument("--tmax", type=float, required=True)
    scan.add_argument("--smin", type=float, default=-1.0)
    scan.add_argument("--smax", type=float, default=4.0)
    scan.add_argument("--store")

    c = sub.add_parser("counts", help="N, N_r, N_l up to height T")
    c.add_argument("--T", type=float, required=True)
    c.add_argument("--store")
    c.add_argument("--verify", action="store_true", help="re-check completeness with a fresh winding count")

    ph = sub.add_parser("phase", help="write the phase decomposition table")
    ph.add_argument("--tmax", type=float, required=True)
    ph.add_argument("--step", type=float, required=True)
    ph.add_argument("--store")
    ph.add_argument("--out", required=True)

    k = sub.add_parser("constants", help="a, the identity at t = 0, and B")
    k.add_argument("--store")

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", choices=["specfun", "theta", "rzeta", "zeros", "phase", "all"], default="all")
    return p


def _store_path(args, parser) -> str:
    path = getattr(args, "store", None) or os.environ.get(STORE_ENV)
    if not path:
        parser.error(f"--store is required (or set {STORE_ENV})")
    return path


def _cmd_eval(args, cfg: RunConfig) -> int:
    from rauxlab.rzeta import eval_r, eval_r_prime

    r = eval_r(args.s, method=args.method)
    print(f"s={fmt_c(args.s)}")
    print(f"R={fmt_c(r.value)}")
    print(f"abs_err={fmt(r.abs_err)}")
    print(f"method={r.method}")
    if args.derivative:
        d = eval_r_prime(args.s, method=args.method)
        print(f"R'={fmt_c(d.value)}")
        print(f"abs_err'={fmt(d.abs_err)}")
    return 0


def _cmd_theta(args, cfg: RunConfig) -> int:
    from rauxlab.thetafun import phi

    r = phi(args.x)
    print(f"x={fmt(r.x)}")
    print(f"phi={fmt(r.phi)}")
    print(f"phi'={fmt(r.phi_prime)}")
    print(f"series={r.series_used} terms={r.terms}")
    return 0


def _cmd_scan(args, cfg: RunConfig) -> int:
    from rauxlab.zerolab import ZeroStore, scan_lower, scan_zeros

    path = cfg.store_path
    if args.tmax < args.tmin:
        raise DomainError("--tmax must not be below --tmin")
    results = []
    if args.tmin < 0:
        results += scan_lower(args.tmin, min(args.tmax, 0.0), sigma_min=args.smin, workers=cfg.threads)
    if args.tmax > 0:
        results += scan_zeros(max(args.tmin, 0.0), args.tmax, args.smin, args.smax, workers=cfg.threads)
    store = ZeroStore.load(path) if os.path.exists(path) else ZeroStore(path)
    store.append(results, path)
    found = sum(len(r.zeros) for r in results)
    clusters = sum(len(r.clusters) for r in results)
    print(f"windows={len(results)} zeros={found} clusters={clusters} store={path} total={len(store.zeros)}")
    for r in results:
        g = r.region
        print(f"window t=[{fmt(g.t_min)},{fmt(g.t_max)}] sigma=[{fmt(g.sigma_min)},{fmt(g.sigma_max)}] winding={r.winding}")
    return 1 if clusters else 0


def _cmd_counts(args, cfg: RunConfig) -> int:
    from rauxlab.zerolab import ZeroStore, sided_counts

    store = ZeroStore.load(cfg.store_path)
    rep = sided_counts(args.T, store, verify=args.verify)
    for key in ("T", "N", "N_r", "N_l", "main_term", "count_residual"):
        print(f"{key}={fmt(getattr(rep, key))}")
    print(f"line_ambiguous={rep.ambiguous}")
    return 0


def _cmd_phase(args, cfg: RunConfig) -> int:
    from rauxlab.phase import decomposition_check, estimate_B, write_phase_table
    from rauxlab.zerolab import ZeroStore

    if args.step <= 0 or args.tmax < 0:
        raise DomainError("--step must be positive and --tmax non-negative")
    store = ZeroStore.load(cfg.store_path)
    n = int(math.floor(args.tmax / args.step + 1e-9))
    grid = [k * args.step for k in range(n + 1)]
    B = estimate_B(store).B_estimate
    samples = decomposition_check(grid, store, B=B)
    write_phase_table(samples, args.out)
    print(f"rows={len(samples)} B={fmt(B)} out={args.out}")
    return 0


def _cmd_constants(args, cfg: RunConfig) -> int:
    from rauxlab.phase import estimate_B
    from rauxlab.zerolab import ZeroStore

    store = ZeroStore.load(cfg.store_path)
    rep = estimate_B(store)
    print(f"a={fmt_c(rep.a)}")
    print(f"identity={fmt_c(rep.identity_value)}")
    print(f"partial_sum_right={fmt(rep.partial_sum_right)} (truncated at {rep.n_upper} zeros, last summand {fmt(rep.last_summand_right)})")
    print(f"B_estimate={fmt(rep.B_estimate)}")
    print(f"B_truncation_error={fmt(rep.B_truncation_error)}")
    print(f"B_via_identity={fmt(rep.B_via_identity)}")
    return 0


def _cmd_verify(args, cfg: RunConfig) -> int:
    from rauxlab.verify import run

    checks = run(args.suite)
    for c in checks:
        print(f"{'PASS' if c.ok else 'FAIL'} [{c.suite}] {c.name}: {c.detail}")
    failed = sum(not c.ok for c in checks)
    print(f"{len(checks) - failed}/{len(checks)} checks passed")
    return 1 if failed else 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    store = None
    if args.command in ("counts", "phase", "constants") or (args.command == "zeros"):
        store = _store_path(args, parser)
    cfg = RunConfig(args.precision, args.threads, store, getattr(args, "out", None))
    handlers = {
        "eval": _cmd_eval,
        "theta": _cmd_theta,
        "zeros": _cmd_scan,
        "counts": _cmd_counts,
        "phase": _cmd_phase,
        "constants": _cmd_constants,
        "verify": _cmd_verify,
    }
    try:
        return handlers[args.command](args, cfg)
    except (IncompleteStoreError, StoreFormatError, PrecisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except DomainError as exc:
        print(f"rauxlab: error: {exc}", file=sys.stderr)
        return 2


def dispatch(argv: Sequence[str]) -> int:
    """Run the CLI on ``argv`` and return the exit code (usage errors included)."""
    try:
        return main(argv)
    except SystemExit as exc:
        return int(exc.code or 0)


if __name__ == "__main__":
    sys.exit(main())
