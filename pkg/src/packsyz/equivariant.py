"""Characters of S_N on the reduced homology of packing complexes."""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from fractions import Fraction

from . import cache as disk_cache
from .characters import ClassFunction, Decomposition, cycle_types, decompose, induce
from .complex import PackingComplex
from .config import DEFAULT, Config
from .linalg import QuotientEchelon, reduce_columns
from .partitions import NPartition

__all__ = [
    "Decomposition",
    "HomologyBasis",
    "HopfReport",
    "homology_basis",
    "homology_character",
    "homology_decomposition",
    "homology_dimension",
    "zero_dim_h0",
    "hopf_trace_check",
    "clear_memo",
]

_memo: dict = {}
_memo_lock = threading.Lock()


def clear_memo() -> None:
    with _memo_lock:
        _memo.clear()


def _key(N, d, k):
    return (tuple(int(x) for x in N), tuple(int(x) for x in d), int(k))


@dataclass
class HomologyBasis:
    """Representatives of H~_k as cycles, completed against the boundary echelon.

    ``rank_in`` is rank of the boundary into C_k, ``rank_out`` the rank of the
    boundary out of it; ``echelon.dim`` equals count - rank_in - rank_out.
    """

    complex: PackingComplex
    k: int
    echelon: QuotientEchelon
    rank_in: int
    rank_out: int

    @property
    def dim(self) -> int:
        return self.echelon.dim

    def trace(self, rho) -> Fraction:
        if not self.dim:
            return Fraction(0)
        g = self.complex.act(rho, self.k)
        return self.echelon.trace(g.apply)


def homology_basis(cx: PackingComplex, k: int) -> HomologyBasis:
    up = reduce_columns(cx.boundary(k + 1).columns)
    # columns that are pivots of the reduced d_{k+1} die in d_k without being essential
    down = reduce_columns(cx.boundary(k).columns, skip=up.lows.keys(), track=True)
    qe = QuotientEchelon(up.lows, down.cycles)
    basis = HomologyBasis(cx, k, qe, rank_in=len(up.lows), rank_out=len(down.lows))
    expected = cx.count(k) - basis.rank_in - basis.rank_out
    if basis.dim != expected:
        raise ArithmeticError(f"homology basis of size {basis.dim}, rank count gives {expected}")
    return basis


def homology_dimension(N, d, k: int, config: Config = DEFAULT) -> int:
    """dim H~_k by rank counting only; builds simplices up to dimension k+1."""
    if k < -1:
        return 0
    cx = PackingComplex(N, d, max_dim=k + 1, max_simplices=config.max_simplices)
    if k > cx.max_dim:
        return 0
    up = reduce_columns(cx.boundary(k + 1).columns)
    down = reduce_columns(cx.boundary(k).columns, skip=up.lows.keys())
    return cx.count(k) - len(up.lows) - len(down.lows)


def homology_character(N, d, k: int, config: Config = DEFAULT) -> ClassFunction:
    """Character of S_N on H~_k(C_N^d; Q), evaluated on canonical class representatives."""
    key = _key(N, d, k)
    with _memo_lock:
        hit = _memo.get(key)
    if hit is not None:
        return hit
    N, d, k = key
    cache_dir = config.cache_path()
    chi = disk_cache.load_character(cache_dir, N, d, k) if cache_dir else None
    if chi is None:
        chi = _compute_character(N, d, k, config)
        if cache_dir:
            disk_cache.store_character(cache_dir, N, d, k, chi)
    with _memo_lock:
        _memo.setdefault(key, chi)
    return chi


def _compute_character(N, d, k, config) -> ClassFunction:
    if any(x < 0 for x in N):
        raise ValueError(f"negative N={N}")
    if k < -1:
        return ClassFunction.zero(N)
    cx = PackingComplex(N, d, max_dim=k + 1, max_simplices=config.max_simplices)
    if k > cx.max_dim:
        return ClassFunction.zero(N)
    basis = homology_basis(cx, k)
    if not basis.dim:
        return ClassFunction.zero(N)
    values = {}
    for rho in cycle_types(N):
        t = basis.trace(rho)
        if t.denominator != 1:
            raise ArithmeticError(f"non-integral trace {t} at class {rho.bracket()}")
        values[rho] = t
    chi = ClassFunction(N, values)
    if chi.identity_value() != basis.dim:
        raise ArithmeticError("identity trace differs from the homology dimension")
    return chi


def homology_decomposition(N, d, k: int, config: Config = DEFAULT) -> Decomposition:
    """Irreducible constituents of H~_k; an empty Decomposition means H~_k = 0."""
    N = tuple(N)
    if any(x < 0 for x in N):
        raise ValueError(f"negative N={N}")
    return decompose(homology_character(N, d, k, config))


def zero_dim_h0(N, d) -> Decomposition:
    """Unreduced H_0 when some N_j < 2 d_j, i.e. when the complex is a discrete set.

    The vertices form one S_N orbit with stabilizer prod S_{d_i} x S_{N_i - d_i},
    so H_0 is the induced trivial character: two-row shapes with first row at
    least max(d_i, N_i - d_i) in each factor.
    """
    N, d = tuple(N), tuple(d)
    if len(N) != len(d):
        raise ValueError("N and d have different lengths")
    if any(a < b for a, b in zip(N, d)):
        raise ValueError(f"need N_i >= d_i, got N={N}, d={d}")
    if not any(a < 2 * b for a, b in zip(N, d)):
        raise ValueError(f"need N_j < 2 d_j for some j, got N={N}, d={d}")
    return decompose(induce(ClassFunction.trivial(d), N))


@dataclass
class HopfReport:
    N: tuple
    d: tuple
    ok: bool
    chain_side: dict = field(default_factory=dict)
    homology_side: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "N": list(self.N),
            "d": list(self.d),
            "ok": self.ok,
            "failures": [rho.bracket() for rho in self.failures],
        }


def hopf_trace_check(N, d, config: Config = DEFAULT) -> HopfReport:
    """Compare sum (-1)^k tr(g|C_k) with sum (-1)^k tr(g|H~_k) on every class."""
    N, d = tuple(N), tuple(d)
    cx = PackingComplex(N, d, max_simplices=config.max_simplices)
    chars = {k: homology_character(N, d, k, config) for k in range(-1, cx.max_dim + 1)}
    report = HopfReport(N, d, ok=True)
    for rho in cycle_types(N):
        chain = sum((-1 if k % 2 else 1) * cx.chain_trace(rho, k) for k in range(-1, cx.max_dim + 1))
        hom = sum((-1 if k % 2 else 1) * chi[rho] for k, chi in chars.items())
        report.chain_side[rho] = chain
        report.homology_side[rho] = hom
        if chain != hom:
            report.ok = False
            report.failures.append(rho)
    return report


def is_swap_symmetric(dec: Decomposition, i: int, j: int) -> bool:
    """Whether swapping partition components i and j maps the decomposition to itself."""
    swapped = {}
    for lam, m in dec.terms.items():
        comps = list(lam)
        comps[i], comps[j] = comps[j], comps[i]
        swapped[NPartition(comps)] = m
    return swapped == dict(dec.terms)
