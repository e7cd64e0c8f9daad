"""Representation stability checks: unpadding, stable-range scans, LES characters.

Coordinates are zero-based throughout; coordinate 0 is N_1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Optional

from .characters import ClassFunction, Decomposition, cycle_types, induce, restrict
from .complex import PackingComplex
from .config import DEFAULT, Config
from .equivariant import homology_character, homology_decomposition
from .partitions import NPartition, Partition, pad_partition
from .syzygy import SyzygyQuery, betti_entry


class StabilityError(ValueError):
    """A decomposition could not be unpadded on the requested coordinates."""


def unpad_constituents(dec: Decomposition, scanned) -> dict[NPartition, int]:
    """Strip the first row of each component on the scanned coordinates."""
    scanned = sorted(set(scanned))
    out: dict[NPartition, int] = {}
    for lam, m in dec:
        comps = list(lam)
        for i in scanned:
            c = comps[i]
            stripped = Partition(c[1:])
            if pad_partition(stripped, c.size) != c:
                raise StabilityError(f"component {c.bracket()} of {lam.bracket()} is not a padded partition")
            comps[i] = stripped
        key = NPartition(comps)
        out[key] = out.get(key, 0) + m
    return dict(sorted(out.items(), reverse=True))


def _render_unpadded(mults: dict) -> str:
    if not mults:
        return "-"
    return " + ".join(lam.bracket() if m == 1 else f"{m}*{lam.bracket()}" for lam, m in mults.items())


@dataclass
class ScanPoint:
    values: tuple          # scanned coordinate values (N_i, or b_i for syzygy scans)
    N: tuple
    decomposition: Decomposition
    unpadded: dict

    def to_json(self) -> dict:
        return {
            "values": list(self.values),
            "N": list(self.N),
            "decomposition": self.decomposition.to_json(),
            "unpadded": [{"lambda": [list(c) for c in lam], "mult": m} for lam, m in self.unpadded.items()],
        }


@dataclass
class StabilityReport:
    kind: str                          # "homology" or "syzygy"
    d: tuple
    k: int
    fixed: dict                        # coordinate -> fixed value
    scanned: tuple                     # scanned coordinates
    scan_from: tuple
    scan_to: tuple
    m: int
    bound: tuple                       # stable-range bound on the scanned values
    points: list = field(default_factory=list)
    stable_from: Optional[tuple] = None
    passed: bool = False
    margin_ok: bool = False
    pq: Optional[tuple] = None
    sharp: Optional[bool] = None

    def point(self, values) -> ScanPoint:
        values = tuple(values)
        for pt in self.points:
            if pt.values == values:
                return pt
        raise KeyError(values)

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "d": list(self.d),
            "k": self.k,
            "pq": list(self.pq) if self.pq else None,
            "fixed": {str(i): v for i, v in sorted(self.fixed.items())},
            "scanned": list(self.scanned),
            "scan_from": list(self.scan_from),
            "scan_to": list(self.scan_to),
            "m": self.m,
            "bound": list(self.bound),
            "stable_from": list(self.stable_from) if self.stable_from is not None else None,
            "passed": self.passed,
            "margin_ok": self.margin_ok,
            "sharp": self.sharp,
            "points": [pt.to_json() for pt in self.points],
        }

    def render(self) -> str:
        label = "b" if self.kind == "syzygy" else "N"
        names = ",".join(f"{label}{i + 1}" for i in self.scanned)
        lines = []
        head = f"{self.kind} scan d={self.d}"
        head += f" p,q={self.pq}" if self.pq else f" k={self.k}"
        fixed = " ".join(f"{label}{i + 1}={v}" for i, v in sorted(self.fixed.items()))
        lines.append(f"{head} fixed {fixed} m={self.m}")
        for pt in self.points:
            lines.append(f"  {names}={','.join(map(str, pt.values))}: {_render_unpadded(pt.unpadded)}")
        fmt = lambda t: ",".join(map(str, t)) if t is not None else "none"
        lines.append(f"stable from {names}={fmt(self.stable_from)}; bound {fmt(self.bound)}")
        lines.append(f"passed={self.passed} margin_ok={self.margin_ok}" + (f" sharp={self.sharp}" if self.sharp is not None else ""))
        return "\n".join(lines) + "\n"


def _stable_corner(points: list, lo: tuple, hi: tuple) -> Optional[tuple]:
    """Least corner c (lex among minimal ones) with every point >= c agreeing with the top."""
    table = {pt.values: pt.unpadded for pt in points}
    top = table[hi]
    agrees = {v: table[v] == top for v in table}
    # up[v]: every lattice point >= v agrees with the top corner
    up = {}
    for v in sorted(table, reverse=True):
        ok = agrees[v]
        for j in range(len(v)):
            if ok and v[j] < hi[j]:
                w = v[:j] + (v[j] + 1,) + v[j + 1:]
                ok = up[w]
        up[v] = ok
    corners = [v for v, ok in up.items() if ok]
    minimal = [
        v for v in corners
        if not any(w != v and all(a <= b for a, b in zip(w, v)) for w in corners)
    ]
    return min(minimal) if minimal else None


def _run_scan(report: StabilityReport, compute, margin: int = 2) -> StabilityReport:
    lo, hi = report.scan_from, report.scan_to
    if len(lo) != len(report.scanned) or len(hi) != len(report.scanned):
        raise ValueError("scan window does not match the scanned coordinates")
    if any(a > b for a, b in zip(lo, hi)):
        raise ValueError(f"empty scan window {lo}..{hi}")
    for values in product(*(range(a, b + 1) for a, b in zip(lo, hi))):
        N, dec = compute(values)
        report.points.append(ScanPoint(values, N, dec, unpad_constituents(dec, report.scanned)))
    report.stable_from = _stable_corner(report.points, lo, hi)
    corner = tuple(max(b, a) for b, a in zip(report.bound, lo))
    inside = all(c <= h for c, h in zip(corner, hi))
    if inside and report.stable_from is not None:
        report.passed = all(s <= c for s, c in zip(report.stable_from, corner))
    report.margin_ok = all(h >= b + margin for h, b in zip(hi, report.bound))
    return report


def _split(n: int, fixed: dict):
    fixed = {int(i): int(v) for i, v in fixed.items()}
    if any(i < 0 or i >= n for i in fixed):
        raise ValueError(f"fixed coordinates {sorted(fixed)} out of range for n={n}")
    if not fixed:
        raise ValueError("at least one coordinate must stay fixed")
    scanned = tuple(i for i in range(n) if i not in fixed)
    return fixed, scanned


def stable_range_scan(d, k: int, fixed: dict, scan_from, scan_to, config: Config = DEFAULT) -> StabilityReport:
    """Scan H~_k(C_N^d) over the unfixed coordinates and locate stabilization.

    ``fixed`` maps coordinates to their N values.  The stable-range bound is
    N_i >= 2 m d_i with m = min floor(N_j / d_j) over fixed j.  ``passed``
    means the observed stabilization corner is at or below that bound;
    ``margin_ok`` records whether the window reaches two past the bound.
    """
    d = tuple(d)
    fixed, scanned = _split(len(d), fixed)
    m = min(fixed[j] // d[j] for j in fixed)
    bound = tuple(2 * m * d[i] for i in scanned)
    report = StabilityReport(
        "homology", d, k, fixed, scanned, tuple(scan_from), tuple(scan_to), m, bound
    )

    def compute(values):
        N = [0] * len(d)
        for j, v in fixed.items():
            N[j] = v
        for i, v in zip(scanned, values):
            N[i] = v
        N = tuple(N)
        return N, homology_decomposition(N, d, k, config)

    return _run_scan(report, compute)


def syzygy_stability_check(p: int, q: int, d, fixed_b: dict, scan_from, scan_to, config: Config = DEFAULT) -> StabilityReport:
    """Scan K_{p,q}^d(b) over the unfixed b_i; stable for b_i >= (p+q) d_i.

    Needs b_j < d_j for some fixed j.  For d = (1,...,1), one scanned
    coordinate and q = 0 the bound a >= p is sharp, and ``sharp`` records
    whether b_1 = p - 1 (when in the window) differs from the stable value.
    """
    d = tuple(d)
    fixed_b, scanned = _split(len(d), fixed_b)
    if not any(0 <= fixed_b[j] < d[j] for j in fixed_b):
        raise ValueError("need 0 <= b_j < d_j for some fixed coordinate j")
    m = p + q
    bound = tuple((p + q) * d[i] for i in scanned)
    report = StabilityReport(
        "syzygy", d, p - 1, fixed_b, scanned, tuple(scan_from), tuple(scan_to), m, bound, pq=(p, q)
    )

    def compute(values):
        b = [0] * len(d)
        for j, v in fixed_b.items():
            b[j] = v
        for i, v in zip(scanned, values):
            b[i] = v
        qy = SyzygyQuery(p, q, d, tuple(b))
        return qy.N, betti_entry(qy, config)

    _run_scan(report, compute)
    if all(x == 1 for x in d) and len(scanned) == 1 and q == 0 and p >= 1:
        before = (p - 1,)
        if report.scan_from[0] <= before[0] < report.scan_to[0]:
            report.sharp = report.point(before).unpadded != report.point(report.scan_to).unpadded
    return report


# -- long exact sequence -------------------------------------------------------------

@dataclass
class LESReport:
    N: tuple
    d: tuple
    i: int
    ok: bool
    degrees: list = field(default_factory=list)
    dims: dict = field(default_factory=dict)       # r -> (ind, link-deleted, restricted)
    failures: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "N": list(self.N),
            "d": list(self.d),
            "i": self.i,
            "ok": self.ok,
            "dims": {str(r): list(v) for r, v in sorted(self.dims.items())},
            "failures": [rho.bracket() for rho in self.failures],
        }


def les_consistency(N, d, i: int, alpha=None, config: Config = DEFAULT) -> LESReport:
    """Character-level exactness of the deletion long exact sequence.

    Removing the last element of A_i gives A^i; removing a vertex alpha
    through it gives A' = N - d.  Checks, on S_{A^i},
    sum_r (-1)^r [Ind(H~_r(C_A') (x) 1) - H~_r(C_{A^i}) + Res H~_r(C_A)] = 0.
    ``alpha`` is optional and only validated: all such vertices are
    conjugate, so the characters do not depend on it.
    """
    N, d = tuple(N), tuple(d)
    n = len(N)
    if not 0 <= i < n:
        raise ValueError(f"coordinate {i} out of range")
    if any(a < b for a, b in zip(N, d)):
        raise ValueError(f"need N_j >= d_j for a vertex to exist, got N={N}, d={d}")
    if alpha is not None:
        _check_alpha(alpha, N, d, i)
    Ni = tuple(x - (j == i) for j, x in enumerate(N))
    Np = tuple(a - b for a, b in zip(N, d))
    top = PackingComplex(N, d, max_simplices=config.max_simplices).max_dim
    degrees = list(range(-1, top + 1))
    total = ClassFunction.zero(Ni)
    report = LESReport(N, d, i, ok=True, degrees=degrees)
    for r in degrees:
        ind = induce(homology_character(Np, d, r, config), Ni)
        mid = homology_character(Ni, d, r, config)
        res = restrict(homology_character(N, d, r, config), Ni)
        report.dims[r] = tuple(int(x.identity_value()) for x in (ind, mid, res))
        term = ind - mid + res
        total = total + (term if r % 2 == 0 else -term)
    for rho in cycle_types(Ni):
        if total[rho]:
            report.ok = False
            report.failures.append(rho)
    return report


def _check_alpha(alpha, N, d, i):
    if len(alpha) != len(N):
        raise ValueError("alpha has the wrong number of coordinates")
    for j, (a, Nj, dj) in enumerate(zip(alpha, N, d)):
        a = set(a)
        if len(a) != dj or not a <= set(range(Nj)):
            raise ValueError(f"alpha coordinate {j} is not a {dj}-subset of range({Nj})")
    if N[i] - 1 not in set(alpha[i]):
        raise ValueError("alpha must contain the removed element N_i - 1 in coordinate i")
