"""Zeros of R(s): argument-principle counting, isolation, refinement, storage.

The winding number of R around a rectangle is accumulated from
arg(R(z_{k+1}) / R(z_k)) over boundary samples. Sampling is refined until
consecutive values satisfy |R_{k+1} - R_k| < 0.75 min(|R_k|, |R_{k+1}|), so the
chord between samples cannot pass through the origin (this also keeps every
argument increment below pi/2). Values are carried with a separate
logarithmic scale, so rectangles deep in the lower half-plane, where |R|
grows like e^{pi |t| / 4}, are handled without overflow.
"""

from __future__ import annotations

import json
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, List, Optional, Sequence

import numpy as np

from rauxlab.errors import BoundaryZeroError, IncompleteStoreError, PrecisionError, StoreFormatError
from rauxlab.rzeta import eval_batch
from rauxlab.specfun import EPS, theta

TIE_TOL = 1e-6
EDGE_SHIFT = 1e-3
RESID_TOL = 1e-8
STEP_TOL = 1e-10
STORE_FORMAT = "rauxlab-zero-store"
STORE_VERSION = 1

_CHORD = 0.75
_MAX_ROUNDS = 40
_MIN_SEG = 1e-9


# --- types ----------------------------------------------------------------------


@dataclass(frozen=True)
class Rectangle:
    sigma_min: float
    sigma_max: float
    t_min: float
    t_max: float

    def __post_init__(self):
        if not (self.sigma_min < self.sigma_max and self.t_min < self.t_max):
            raise ValueError(f"degenerate rectangle {self}")

    @property
    def width(self) -> float:
        return self.sigma_max - self.sigma_min

    @property
    def height(self) -> float:
        return self.t_max - self.t_min

    @property
    def center(self) -> complex:
        return complex(0.5 * (self.sigma_min + self.sigma_max), 0.5 * (self.t_min + self.t_max))

    def contains(self, z: complex, pad: float = 0.0) -> bool:
        return (
            self.sigma_min - pad <= z.real <= self.sigma_max + pad
            and self.t_min - pad <= z.imag <= self.t_max + pad
        )

    def corners(self) -> list:
        a, b, c, d = self.sigma_min, self.sigma_max, self.t_min, self.t_max
        return [complex(a, c), complex(b, c), complex(b, d), complex(a, d)]


def classify_side(beta: float, tie_tol: float = TIE_TOL) -> str:
    if beta - 0.5 > tie_tol:
        return "right"
    if beta - 0.5 < -tie_tol:
        return "left"
    return "line-ambiguous"


@dataclass
class ZeroRecord:
    """One zero rho = beta + i gamma of R(s)."""

    beta: float
    gamma: float
    multiplicity: int = 1
    side: str = ""
    resid: float = 0.0
    index: int = 0
    method: str = "newton"

    def __post_init__(self):
        if not self.side:
            self.side = classify_side(self.beta)

    @property
    def rho(self) -> complex:
        return complex(self.beta, self.gamma)

    @property
    def ordering_sensitive(self) -> bool:
        # zeros near the origin where the gamma <= 0 ordering is not settled
        return abs(self.rho) < 5.0


@dataclass
class Cluster:
    """A minimal rectangle whose winding number could not be split further."""

    rect: Rectangle
    winding: int
    reason: str = ""


@dataclass
class ScanResult:
    region: Rectangle
    winding: int
    zeros: List[ZeroRecord] = field(default_factory=list)
    clusters: List[Cluster] = field(default_factory=list)

    @property
    def count(self) -> int:
        return sum(z.multiplicity for z in self.zeros) + sum(c.winding for c in self.clusters)


# --- argument principle ---------------------------------------------------------


def _edge_values(pts: np.ndarray):
    vals, _, scale = eval_batch(pts, scaled=True)
    return vals[0], scale


def _bad_chords(v, sc):
    """Mask of intervals violating the chord condition (scaled values)."""
    a, b = v[:-1], v[1:]
    ds = sc[1:] - sc[:-1]
    with np.errstate(over="ignore", divide="ignore", invalid="ignore"):
        q = (b / a) * np.exp(ds)
        bad = ~(np.abs(q - 1.0) < _CHORD) | ~(np.abs(1.0 / q - 1.0) < _CHORD)
    return bad | ~np.isfinite(q)


def arg_variation(vertices: Sequence[complex], init_step: float = 0.25) -> float:
    """Total change of arg R along the closed polygon through ``vertices``.

    Raises BoundaryZeroError when a segment has to be refined below 1e-9
    without satisfying the chord condition.
    """
    verts = list(vertices) + [vertices[0]]
    lam_list = []
    for a, b in zip(verts[:-1], verts[1:]):
        n = max(4, int(math.ceil(abs(b - a) / init_step)))
        lam = np.linspace(0.0, 1.0, n + 1)
        lam_list.append(lam)
    edges = list(zip(verts[:-1], verts[1:]))
    vals = []
    scales = []
    allpts = np.concatenate([a + lam * (b - a) for (a, b), lam in zip(edges, lam_list)])
    v, sc = _edge_values(allpts)
    pos = 0
    for lam in lam_list:
        vals.append(v[pos : pos + lam.size])
        scales.append(sc[pos : pos + lam.size])
        pos += lam.size
    for _ in range(_MAX_ROUNDS):
        todo = []
        for k, ((a, b), lam) in enumerate(zip(edges, lam_list)):
            bad = _bad_chords(vals[k], scales[k])
            if np.any(bad):
                idx = np.nonzero(bad)[0]
                if np.any((lam[idx + 1] - lam[idx]) * abs(b - a) < _MIN_SEG):
                    z = a + lam[idx[0]] * (b - a)
                    raise BoundaryZeroError(f"zero of R on or near the edge at {z:.12g}")
                todo.append((k, idx))
        if not todo:
            break
        newpts = []
        for k, idx in todo:
            (a, b), lam = edges[k], lam_list[k]
            mid = 0.5 * (lam[idx] + lam[idx + 1])
            newpts.append(a + mid * (b - a))
        nv, nsc = _edge_values(np.concatenate(newpts))
        pos = 0
        for k, idx in todo:
            lam = lam_list[k]
            mid = 0.5 * (lam[idx] + lam[idx + 1])
            m = mid.size
            lam_new = np.insert(lam, idx + 1, mid)
            vals[k] = np.insert(vals[k], idx + 1, nv[pos : pos + m])
            scales[k] = np.insert(scales[k], idx + 1, nsc[pos : pos + m])
            lam_list[k] = lam_new
            pos += m
    else:
        raise BoundaryZeroError("argument tracking did not converge")
    total = 0.0
    for v in vals:
        total += float(np.sum(np.angle(v[1:] / v[:-1])))
    return total


def winding_count(rect: Rectangle, init_step: float = 0.25) -> int:
    """Number of zeros of R inside ``rect`` (with multiplicity)."""
    w = arg_variation(rect.corners(), init_step) / (2.0 * math.pi)
    n = round(w)
    if abs(w - n) > 0.25:
        raise PrecisionError(f"winding number {w:.4f} not close to an integer for {rect}")
    return int(n)


def robust_winding(rect: Rectangle, outward: bool = True, tries: int = 6) -> tuple:
    """winding_count with edge perturbation; returns (winding, rect actually used)."""
    r = rect
    for k in range(tries):
        try:
            return winding_count(r), r
        except BoundaryZeroError:
            d = EDGE_SHIFT * (k + 1) * (1 if outward else -1)
            r = Rectangle(r.sigma_min - d, r.sigma_max + d, r.t_min - d, r.t_max + d)
    raise BoundaryZeroError(f"could not find a zero-free boundary near {rect}")


# --- refinement -----------------------------------------------------------------


class RefinementError(PrecisionError):
    """Newton iteration failed to converge (possible multiple zero or cluster)."""


def refine_zero(seed, max_iter: int = 50, box: Optional[Rectangle] = None, max_step: Optional[float] = None) -> ZeroRecord:
    """Newton iteration s <- s - R/R' from ``seed``.

    Stops when the step is <= 1e-10 (scaled by max(1, |s|)) and |R| <= 1e-8.
    With ``box`` the iterate must stay inside it (padded by 1e-6).
    """
    s = complex(seed)
    for it in range(max_iter):
        vals, _, scale = eval_batch(np.array([s]), nderiv=1, scaled=True)
        r, rp = complex(vals[0, 0]), complex(vals[1, 0])
        if rp == 0 or not np.isfinite(rp):
            raise RefinementError(f"zero derivative at {s}")
        step = r / rp
        if max_step is not None and abs(step) > max_step:
            step *= max_step / abs(step)
        s = s - step
        if box is not None and not box.contains(s, pad=1e-6):
            raise RefinementError(f"Newton left the isolating box at {s}")
        if abs(step) <= STEP_TOL * max(1.0, abs(s)):
            vals, errs, scale = eval_batch(np.array([s]), nderiv=1, scaled=True)
            f = math.exp(float(scale[0]))
            resid = abs(complex(vals[0, 0])) * f
            # a double within half an ulp of the zero cannot do better than |R'| eps |s|
            floor = f * (8.0 * EPS * abs(s) * abs(complex(vals[1, 0])) + 4.0 * float(errs[0, 0]))
            if resid > max(RESID_TOL, floor):
                raise RefinementError(f"Newton converged to {s} but |R| = {resid:.3g}")
            return ZeroRecord(s.real, s.imag, 1, classify_side(s.real), resid, 0, "newton")
    raise RefinementError(f"no convergence after {max_iter} iterations from {seed}")


# --- scanning ---------------------------------------------------------------------


def _split(rect: Rectangle, frac: float = 0.5):
    if rect.width >= rect.height:
        m = rect.sigma_min + frac * rect.width
        return (
            Rectangle(rect.sigma_min, m, rect.t_min, rect.t_max),
            Rectangle(m, rect.sigma_max, rect.t_min, rect.t_max),
        )
    m = rect.t_min + frac * rect.height
    return (
        Rectangle(rect.sigma_min, rect.sigma_max, rect.t_min, m),
        Rectangle(rect.sigma_min, rect.sigma_max, m, rect.t_max),
    )


def _isolate(rect: Rectangle, winding: int, out: ScanResult, depth: int = 0, newton_size: float = 2.0):
    if winding == 0:
        return
    diag = math.hypot(rect.width, rect.height)
    if winding == 1 and diag <= newton_size:
        try:
            z = refine_zero(rect.center, box=rect, max_step=diag)
            out.zeros.append(z)
            return
        except (RefinementError, PrecisionError):
            pass
    if diag < 1e-7 or depth > 60:
        out.clusters.append(Cluster(rect, winding, "unsplittable"))
        return
    # try a few split positions until both halves have zero-free boundaries
    for frac in (0.5, 0.5 + 1.7e-3, 0.5 - 2.9e-3, 0.47, 0.53):
        a, b = _split(rect, frac)
        try:
            wa = winding_count(a)
            wb = winding_count(b)
        except BoundaryZeroError:
            continue
        if wa + wb != winding:
            continue
        _isolate(a, wa, out, depth + 1, newton_size)
        _isolate(b, wb, out, depth + 1, newton_size)
        return
    out.clusters.append(Cluster(rect, winding, "split failed"))


def scan_rectangle(rect: Rectangle) -> ScanResult:
    """Find every zero inside one rectangle (boundary perturbed if needed)."""
    w, used = robust_winding(rect)
    res = ScanResult(used, w)
    _isolate(used, w, res)
    # Newton may converge to the same zero from two neighbouring boxes
    res.zeros = _dedupe(res.zeros)
    return res


def _dedupe(zeros: List[ZeroRecord], tol: float = 1e-7) -> List[ZeroRecord]:
    out: List[ZeroRecord] = []
    for z in sorted(zeros, key=lambda r: (r.gamma, r.beta)):
        if out and abs(out[-1].rho - z.rho) < tol * max(1.0, abs(z.rho)):
            continue
        out.append(z)
    return out


def _windows(t_min, t_max, sigma_min, sigma_max, window):
    n = max(1, int(math.ceil((t_max - t_min) / window)))
    edges = np.linspace(t_min, t_max, n + 1)
    return [Rectangle(sigma_min, sigma_max, float(a), float(b)) for a, b in zip(edges[:-1], edges[1:])]


def _strip_rect(lo: float, hi: float, t_min: float, t_max: float) -> Rectangle:
    # keep strips crossing the trivial zeros -2, -4, ... off the real axis
    if lo < -1.5 and t_min <= 0.0 <= t_max:
        if t_max > 0:
            t_min = max(t_min, EDGE_SHIFT)
        else:
            t_max = min(t_max, -EDGE_SHIFT)
    return Rectangle(lo, hi, t_min, t_max)


def left_floor(t: float) -> float:
    """Left edge the upper-half scans always reach: -(1 + log^2 t / 2).

    Empirical: the leftmost zeros up to t = 700 sit near -0.22 log^2 t, and
    [-60, left_floor] is zero-free there; widening continues past it regardless.
    """
    return -(1.0 + 0.5 * math.log(max(abs(t), math.e)) ** 2)


def _scan_window(job) -> ScanResult:
    """Scan one window, then widen in sigma until the bordering strip on each side is zero-free.

    The first strip on the left reaches at least ``floor``; left-hand zeros come
    in isolated runs, so a zero-free strip next to the box proves little.
    """
    rect, widen, strips, floor = job
    res = scan_rectangle(rect)
    if not widen:
        return res
    lo, hi = res.region.sigma_min, res.region.sigma_max
    t0, t1 = res.region.t_min, res.region.t_max
    for direction in (-1, 1):
        for _ in range(64):
            strip = strips[0] if direction < 0 else strips[1]
            a, b = (min(lo - strip, floor), lo) if direction < 0 else (hi, hi + strip)
            piece = _strip_rect(a, b, t0, t1)
            w, used = robust_winding(piece, outward=False)
            if direction < 0:
                lo = a
            else:
                hi = b
            if w == 0:
                break
            sub = ScanResult(used, w)
            _isolate(used, w, sub)
            res.zeros.extend(sub.zeros)
            res.clusters.extend(sub.clusters)
            res.winding += w
        else:
            raise PrecisionError(f"sigma widening did not terminate for {rect}")
    res.region = Rectangle(lo, hi, t0, t1)
    res.zeros = _dedupe(res.zeros)
    return res


def assign_indices(zeros: Iterable[ZeroRecord]) -> List[ZeroRecord]:
    """Index 1, 2, ... for gamma > 0 by increasing gamma; 0, -1, ... for gamma <= 0 by decreasing gamma."""
    zs = list(zeros)
    up = sorted((z for z in zs if z.gamma > 0), key=lambda z: (z.gamma, z.beta))
    down = sorted((z for z in zs if z.gamma <= 0), key=lambda z: (-z.gamma, z.beta))
    for k, z in enumerate(up, start=1):
        z.index = k
    for k, z in enumerate(down):
        z.index = -k
    return down[::-1] + up


def _run(jobs, workers: int) -> List[ScanResult]:
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            results = list(ex.map(_scan_window, jobs))
    else:
        results = [_scan_window(j) for j in jobs]
    # deterministic merge: windows in increasing t, zeros by gamma inside each
    return sorted(results, key=lambda r: r.region.t_min)


def scan_zeros(
    t_min: float,
    t_max: float,
    sigma_min: float = -1.0,
    sigma_max: float = 4.0,
    window: float = 10.0,
    workers: int = 1,
    widen: bool = True,
    strip: float = 4.0,
) -> List[ScanResult]:
    """Scan [sigma_min, sigma_max] x [t_min, t_max] in horizontal windows.

    Each window is isolated independently (in parallel when workers > 1).
    With ``widen`` the sigma range of every window is extended to the left at
    least to ``left_floor`` and then strip by strip on both sides until a
    bordering strip of width ``strip`` has winding number 0, so zeros outside
    the nominal range are not lost. The sum of multiplicities in each
    window equals that window's winding number by construction.
    """
    if t_max - t_min > 2000.0:
        raise ValueError("scan height limited to 2000")
    if t_max <= t_min:
        return []
    jobs = [
        (r, widen, (strip, strip), left_floor(r.t_max))
        for r in _windows(t_min, t_max, sigma_min, sigma_max, window)
    ]
    return _run(jobs, workers)


def lower_beta_model(gamma: float) -> float:
    """Rough beta of the gamma < 0 zeros from beta ~ 4 pi^2 n / log^2 n, gamma ~ -4 pi n / log n."""
    g = abs(gamma) / (4.0 * math.pi)
    # n / log n = g has a root n >= e only for g >= e
    n = math.e
    if g > math.e:
        n = g * math.log(g)
        for _ in range(50):
            n = g * math.log(n)
    return 4.0 * math.pi**2 * n / math.log(n) ** 2


def scan_lower(t_min: float, t_max: float = 0.0, sigma_min: float = -1.0, window: float = 10.0, workers: int = 1) -> List[ScanResult]:
    """Scan [t_min, t_max] (t_max <= 0) for the zeros with gamma <= 0.

    The sigma range of each window is sized from ``lower_beta_model`` and then
    widened on both sides until the bordering strips are zero-free.
    """
    if t_max > 0:
        raise ValueError("scan_lower needs t_max <= 0")
    if t_max - t_min > 2000.0:
        raise ValueError("scan height limited to 2000")
    if t_max <= t_min:
        return []
    jobs = []
    for r in _windows(t_min, t_max, sigma_min, sigma_min + 1.0, window):
        hi = 1.3 * lower_beta_model(r.t_min) + 15.0
        jobs.append((Rectangle(sigma_min, hi, r.t_min, r.t_max), True, (4.0, max(4.0, 0.1 * hi)), math.inf))
    return _run(jobs, workers)


# --- store ------------------------------------------------------------------------


def _fmt(x: float) -> str:
    return format(float(x), ".17g") if math.isfinite(x) else json.dumps(float(x))


@dataclass
class ScanCoverage:
    sigma_min: float
    sigma_max: float
    t_min: float
    t_max: float
    winding: int


class ZeroStore:
    """Zero records plus the scanned rectangles that certify completeness.

    File format: a JSON header line ``{"format": ..., "version": 1}`` followed
    by one JSON object per line; ``kind`` is "zero", "cluster" or "scan".
    Floats are written with 17 significant digits (bit-exact round trip).
    """

    def __init__(self, path: Optional[os.PathLike] = None):
        self.path = Path(path) if path is not None else None
        self.zeros: List[ZeroRecord] = []
        self.clusters: List[Cluster] = []
        self.coverage: List[ScanCoverage] = []

    # ---- content
    def add_scan(self, results: Sequence[ScanResult]) -> None:
        for res in results:
            self.zeros.extend(res.zeros)
            self.clusters.extend(res.clusters)
            r = res.region
            self.coverage.append(ScanCoverage(r.sigma_min, r.sigma_max, r.t_min, r.t_max, res.winding))
        self.zeros = assign_indices(_dedupe(self.zeros))

    def upper(self, t_max: float = math.inf) -> List[ZeroRecord]:
        return [z for z in self.zeros if 0 < z.gamma <= t_max]

    def lower(self, k: Optional[int] = None) -> List[ZeroRecord]:
        """Zeros with gamma <= 0 by decreasing gamma (index 0, -1, ...), first k of them."""
        zs = sorted((z for z in self.zeros if z.gamma <= 0), key=lambda z: -z.index)
        return zs if k is None else zs[:k]

    def covered_height(self, upper: bool = True) -> float:
        """Largest T such that (0, T] (or [-T, 0]) is covered by contiguous scans."""
        spans = sorted(
            ((c.t_min, c.t_max) for c in self.coverage if (c.t_max > 0 if upper else c.t_min < 0)),
            key=lambda p: p[0] if upper else -p[1],
        )
        if upper:
            reach = None
            for a, b in spans:
                if reach is None:
                    if a > 1.0:
                        return 0.0
                    reach = b
                elif a <= reach + 1e-6:
                    reach = max(reach, b)
            return reach or 0.0
        reach = None
        for a, b in spans:
            if reach is None:
                if b < -0.01:
                    return 0.0
                reach = a
            elif b >= reach - 1e-6:
                reach = min(reach, a)
        return -(reach or 0.0)

    def sigma_range(self, upper: bool = True) -> tuple:
        """Smallest sigma interval containing every scanned window of one half."""
        cov = [c for c in self.coverage if (c.t_max > 0 if upper else c.t_min < 0)]
        if not cov:
            return (math.nan, math.nan)
        return (min(c.sigma_min for c in cov), max(c.sigma_max for c in cov))

    # ---- io
    def _lines(self, zeros, clusters, coverage):
        for c in coverage:
            yield (
                '{"kind": "scan", "sigma_min": %s, "sigma_max": %s, "t_min": %s, "t_max": %s, "winding": %d}'
                % (_fmt(c.sigma_min), _fmt(c.sigma_max), _fmt(c.t_min), _fmt(c.t_max), c.winding)
            )
        for z in zeros:
            yield (
                '{"kind": "zero", "beta": %s, "gamma": %s, "multiplicity": %d, "side": "%s", '
                '"resid": %s, "index": %d, "method": "%s"}'
                % (_fmt(z.beta), _fmt(z.gamma), z.multiplicity, z.side, _fmt(z.resid), z.index, z.method)
            )
        for cl in clusters:
            r = cl.rect
            yield (
                '{"kind": "cluster", "sigma_min": %s, "sigma_max": %s, "t_min": %s, "t_max": %s, '
                '"winding": %d, "reason": %s}'
                % (_fmt(r.sigma_min), _fmt(r.sigma_max), _fmt(r.t_min), _fmt(r.t_max), cl.winding, json.dumps(cl.reason))
            )

    def save(self, path: Optional[os.PathLike] = None) -> Path:
        """Write the whole store (header first)."""
        p = Path(path) if path is not None else self.path
        if p is None:
            raise ValueError("no store path")
        with open(p, "w", encoding="utf-8") as fh:
            fh.write(json.dumps({"format": STORE_FORMAT, "version": STORE_VERSION}) + "\n")
            for line in self._lines(self.zeros, self.clusters, self.coverage):
                fh.write(line + "\n")
        self.path = p
        return p

    def append(self, results: Sequence[ScanResult], path: Optional[os.PathLike] = None) -> Path:
        """Merge scan results into the store and write it (single writer)."""
        p = Path(path) if path is not None else self.path
        if p is None:
            raise ValueError("no store path")
        self.add_scan(results)
        # new zeros may fall between old ones, so indices change: rewrite whole file
        return self.save(p)

    @classmethod
    def load(cls, path: os.PathLike) -> "ZeroStore":
        p = Path(path)
        if not p.exists():
            raise IncompleteStoreError(f"incomplete store: {p} does not exist (run a scan first)")
        st = cls(p)
        with open(p, encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, start=1):
                line = line.strip()
                if not line:
                    continue
                try:
                    obj = json.loads(line)
                except json.JSONDecodeError as exc:
                    raise StoreFormatError(p, lineno, f"invalid JSON ({exc.msg})") from None
                if not isinstance(obj, dict):
                    raise StoreFormatError(p, lineno, "expected a JSON object")
                if lineno == 1:
                    if obj.get("format") != STORE_FORMAT or obj.get("version") != STORE_VERSION:
                        raise StoreFormatError(p, lineno, "missing or unsupported format header")
                    continue
                try:
                    kind = obj["kind"]
                    if kind == "zero":
                        st.zeros.append(
                            ZeroRecord(
                                float(obj["beta"]),
                                float(obj["gamma"]),
                                int(obj["multiplicity"]),
                                str(obj["side"]),
                                float(obj["resid"]),
                                int(obj["index"]),
                                str(obj["method"]),
                            )
                        )
                    elif kind == "scan":
                        st.coverage.append(
                            ScanCoverage(
                                float(obj["sigma_min"]),
                                float(obj["sigma_max"]),
                                float(obj["t_min"]),
                                float(obj["t_max"]),
                                int(obj["winding"]),
                            )
                        )
                    elif kind == "cluster":
                        rect = Rectangle(
                            float(obj["sigma_min"]), float(obj["sigma_max"]), float(obj["t_min"]), float(obj["t_max"])
                        )
                        st.clusters.append(Cluster(rect, int(obj["winding"]), str(obj.get("reason", ""))))
                    else:
                        raise StoreFormatError(p, lineno, f"unknown record kind {kind!r}")
                except (KeyError, TypeError, ValueError) as exc:
                    if isinstance(exc, StoreFormatError):
                        raise
                    raise StoreFormatError(p, lineno, f"bad field ({exc})") from None
        return st


def store_io(path, mode: str = "r", store: Optional[ZeroStore] = None) -> ZeroStore:
    """Read (mode 'r'), overwrite ('w') or append ('a') a zero store file."""
    if mode == "r":
        return ZeroStore.load(path)
    if store is None:
        raise ValueError("store required for writing")
    if mode == "w":
        store.save(path)
        return store
    if mode == "a":
        p = Path(path)
        if p.exists() and p.stat().st_size:
            old = ZeroStore.load(p)
            old.zeros.extend(store.zeros)
            old.clusters.extend(store.clusters)
            old.coverage.extend(store.coverage)
            old.zeros = assign_indices(_dedupe(old.zeros))
            old.save(p)
            return old
        store.save(p)
        return store
    raise ValueError(f"unknown mode {mode!r}")


# --- counts ---------------------------------------------------------------------------


@dataclass
class CountReport:
    T: float
    N: float
    N_r: float
    N_l: float
    main_term: float
    count_residual: float
    ambiguous: int = 0


def main_term(T: float) -> float:
    """theta(T)/(2 pi) - sqrt(T / 2 pi) / 2."""
    return theta(T) / (2.0 * math.pi) - 0.5 * math.sqrt(T / (2.0 * math.pi))


def _weights(zeros: Sequence[ZeroRecord], T: float, tie_tol: float = TIE_TOL):
    nr = nl = 0.0
    amb = 0
    for z in zeros:
        if not (0 < z.gamma <= T + tie_tol):
            continue
        w = float(z.multiplicity)
        if abs(z.gamma - T) <= tie_tol:
            w *= 0.5
        if z.side == "right":
            nr += w
        elif z.side == "left":
            nl += w
        else:
            nr += 0.5 * w
            nl += 0.5 * w
            amb += 1
    return nr, nl, amb


def verify_completeness(store: ZeroStore, T: float) -> int:
    """Winding count of the store's upper region up to T versus stored multiplicities.

    Returns the winding number; raises IncompleteStoreError on mismatch.
    """
    lo, hi = store.sigma_range(upper=True)
    t_lo = min(c.t_min for c in store.coverage if c.t_max > 0)
    w, used = robust_winding(Rectangle(lo, hi, t_lo, T + 2e-6), outward=False)
    stored = sum(z.multiplicity for z in store.zeros if used.t_min < z.gamma <= used.t_max and used.sigma_min <= z.beta <= used.sigma_max)
    stored += sum(c.winding for c in store.clusters if c.rect.t_max > 0 and c.rect.t_min < used.t_max)
    if stored != w:
        raise IncompleteStoreError(f"store holds {stored} zeros below T={T} but the winding count is {w}")
    return w


def sided_counts(T: float, store: ZeroStore, verify: bool = False) -> CountReport:
    """N_r(T), N_l(T) with half weights on the critical line and at height T."""
    T = float(T)
    if store.covered_height(upper=True) < T:
        raise IncompleteStoreError(
            f"store covers 0 < gamma <= {store.covered_height(upper=True):g}, need {T:g}"
        )
    if store.clusters and any(c.rect.t_min < T and c.rect.t_max > 0 for c in store.clusters):
        raise IncompleteStoreError("unresolved clusters below T")
    if verify:
        verify_completeness(store, T)
    nr, nl, amb = _weights(store.zeros, T)
    mt = main_term(T)
    n = nr + nl
    return CountReport(T, n, nr, nl, mt, n - mt, amb)
