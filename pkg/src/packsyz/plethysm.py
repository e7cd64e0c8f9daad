"""Torus-weight oracle for the plethysms behind the linear strands.

A polynomial representation of GL_m1 x ... x GL_mn is determined by its
multiset of weights.  ``schur_expand`` peels off irreducibles by repeatedly
taking the lex-largest dominant weight that is still present; the Kostka
matrix is unitriangular for that order, so the peeling is exact.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import combinations, combinations_with_replacement, product
from math import comb, prod
from typing import Iterable, Optional

from .characters import CharacterError, sign_kronecker_multiplicity
from .partitions import NPartition, Partition, partitions_of, weyl_dim


class ConsistencyError(ArithmeticError):
    """Two independent computations of the same multiplicities disagree."""


class WeightMultiset:
    """Weights of a GL_m1 x ... x GL_mn representation, run-length encoded.

    Each weight is a tuple of n exponent vectors; ``ms`` holds the variable
    counts.  Single-factor multisets use n = 1.
    """

    __slots__ = ("ms", "counts")

    def __init__(self, ms, weights: Iterable = ()):
        self.ms = (ms,) if isinstance(ms, int) else tuple(ms)
        counts: Counter = Counter()
        if isinstance(weights, dict):
            items = weights.items()
        else:
            items = ((w, 1) for w in weights)
        for w, c in items:
            w = _normalize(w, len(self.ms))
            for vec, m in zip(w, self.ms):
                if len(vec) != m or min(vec, default=0) < 0:
                    raise ValueError(f"weight {w} does not fit {self.ms} variables")
            counts[w] += c
        self.counts = dict(sorted((w, c) for w, c in counts.items() if c))
        degs = {tuple(sum(v) for v in w) for w in self.counts}
        if len(degs) > 1:
            raise ValueError(f"weights of mixed degree {sorted(degs)}")

    @property
    def n(self) -> int:
        return len(self.ms)

    @property
    def m(self) -> int:
        return self.ms[0]

    def degree(self) -> tuple:
        for w in self.counts:
            return tuple(sum(v) for v in w)
        return (0,) * self.n

    def total(self) -> int:
        return sum(self.counts.values())

    def dominant(self) -> dict:
        return {w: c for w, c in self.counts.items() if all(_is_dominant(v) for v in w)}

    def __len__(self):
        return len(self.counts)

    def __repr__(self):
        return f"WeightMultiset(ms={self.ms}, distinct={len(self.counts)}, total={self.total()})"


def _normalize(w, n):
    if n == 1 and w and isinstance(w[0], int):
        return (tuple(w),)
    return tuple(tuple(v) for v in w)


def _is_dominant(v) -> bool:
    return all(v[i] >= v[i + 1] for i in range(len(v) - 1))


# -- Kostka numbers -------------------------------------------------------------

def _strips_below(lam: tuple, k: int):
    """All nu with lam/nu a horizontal strip of size k."""
    rows = len(lam)
    out = []

    def rec(i, left, acc):
        if i == rows:
            if left == 0:
                out.append(tuple(x for x in acc if x))
            return
        nxt = lam[i + 1] if i + 1 < rows else 0
        for take in range(min(left, lam[i] - nxt) + 1):
            rec(i + 1, left - take, acc + [lam[i] - take])

    rec(0, k, [])
    return out


@lru_cache(maxsize=None)
def kostka(lam: tuple, mu: tuple) -> int:
    """Number of SSYT of shape lam and content mu (mu any composition)."""
    lam = tuple(x for x in lam if x)
    mu = tuple(x for x in mu if x)
    if sum(lam) != sum(mu):
        return 0
    if not mu:
        return 1
    return sum(kostka(nu, mu[:-1]) for nu in _strips_below(lam, mu[-1]))


# -- expansion -------------------------------------------------------------------

def _expand(w: WeightMultiset) -> dict[tuple, int]:
    remaining = {k: v for k, v in w.dominant().items()}
    out = {}
    while remaining:
        top = max(remaining)
        c = remaining[top]
        if c < 0:
            raise CharacterError(f"negative coefficient {c} at {top}: not a representation")
        out[top] = c
        for mu in list(remaining):
            k = prod(kostka(a, b) for a, b in zip(top, mu))
            if k:
                left = remaining[mu] - c * k
                if left:
                    remaining[mu] = left
                else:
                    del remaining[mu]
    return out


def schur_expand(w: WeightMultiset) -> dict[Partition, int]:
    """Single-factor expansion: weights -> {lambda: c_lambda}."""
    if w.n != 1:
        raise ValueError("schur_expand takes a single-factor multiset; use schur_expand_multi")
    return {Partition(lam[0]): c for lam, c in sorted(_expand(w).items(), reverse=True)}


def schur_expand_multi(w: WeightMultiset) -> dict[NPartition, int]:
    return {NPartition(lam): c for lam, c in sorted(_expand(w).items(), reverse=True)}


# -- weight multisets of the plethysms --------------------------------------------

def monomials(m: int, deg: int) -> list[tuple[int, ...]]:
    """Exponent vectors of degree deg in m variables."""
    out = []
    for combo in combinations_with_replacement(range(m), deg):
        v = [0] * m
        for x in combo:
            v[x] += 1
        out.append(tuple(v))
    return sorted(out, reverse=True)


def _add(vs, m):
    acc = [0] * m
    for v in vs:
        for i, x in enumerate(v):
            acc[i] += x
    return tuple(acc)


def sym_sym_weights(p: int, e: int, m: int) -> WeightMultiset:
    mons = monomials(m, e)
    return WeightMultiset(m, Counter(_add(c, m) for c in combinations_with_replacement(mons, p)))


def wedge_sym_weights(p: int, d: int, m: int) -> WeightMultiset:
    mons = monomials(m, d)
    return WeightMultiset(m, Counter(_add(c, m) for c in combinations(mons, p)))


def wedge_tensor_weights(p: int, ms) -> WeightMultiset:
    """Weights of Lambda^p(V_1 (x) ... (x) V_n) with dim V_i = ms[i]."""
    ms = tuple(ms)
    basis = list(product(*(range(m) for m in ms)))
    counts: Counter = Counter()
    for subset in combinations(basis, p):
        vecs = [[0] * m for m in ms]
        for b in subset:
            for i, x in enumerate(b):
                vecs[i][x] += 1
        counts[tuple(tuple(v) for v in vecs)] += 1
    return WeightMultiset(ms, counts)


# -- the multiplicities -------------------------------------------------------------

def _check_rows(mults: dict, rows: int, what: str):
    for lam in mults:
        if len(lam) > rows:
            raise CharacterError(f"{what}: constituent {lam.bracket()} has more than {rows} rows")


@lru_cache(maxsize=None)
def _sym_sym(p, e, m):
    return schur_expand(sym_sym_weights(p, e, m))


@lru_cache(maxsize=None)
def _wedge_sym(p, d, m):
    return schur_expand(wedge_sym_weights(p, d, m))


def sym_sym_multiplicities(p: int, e: int, m: Optional[int] = None) -> dict[Partition, int]:
    """Multiplicities of S_lambda V in Sym^p(Sym^e V), lambda |- p e.

    Every constituent has at most p rows, so ``m`` defaults to max(p, 1)
    variables; a larger m gives the same answer.
    """
    if p < 0 or e < 0:
        raise ValueError("p and e must be nonnegative")
    if p == 0 or e == 0:
        # Sym^0 of anything, or Sym^p of the trivial line
        return {Partition(): 1}
    m = max(p, 1) if m is None else m
    out = dict(_sym_sym(p, e, m))
    _check_rows(out, p, "Sym^p(Sym^e)")
    return out


def wedge_sym_multiplicities(p: int, d: int, m: Optional[int] = None) -> dict[Partition, int]:
    """Multiplicities of S_lambda V in Lambda^p(Sym^d V), lambda |- p d."""
    if p < 0 or d < 1:
        raise ValueError("need p >= 0 and d >= 1")
    if p == 0:
        return {Partition(): 1}
    m = max(p, 1) if m is None else m
    if comb(m + d - 1, d) < p:
        raise ValueError(f"{m} variables are too few to see Lambda^{p}(Sym^{d})")
    out = dict(_wedge_sym(p, d, m))
    _check_rows(out, p, "Lambda^p(Sym^d)")
    return out


@lru_cache(maxsize=None)
def _wedge_tensor_characters(p: int, n: int) -> dict[NPartition, int]:
    out = {}
    parts = partitions_of(p)
    for combo in product(parts, repeat=n):
        m = sign_kronecker_multiplicity(combo)
        if m:
            out[NPartition(combo)] = m
    return dict(sorted(out.items(), reverse=True))


def wedge_tensor_multiplicities(p: int, n: int, check: Optional[bool] = None) -> dict[NPartition, int]:
    """Multiplicities of S_l1 V1 (x) ... (x) S_ln Vn in Lambda^p(V1 (x) ... (x) Vn).

    Computed from the sign-Kronecker character sum.  For n = 2 and p <= 4 the
    answer is also recomputed from torus weights (``check`` overrides).
    """
    if p < 0 or n < 1:
        raise ValueError("need p >= 0 and n >= 1")
    out = dict(_wedge_tensor_characters(p, n))
    if check is None:
        check = n == 2 and p <= 4
    if check and p > 0:
        by_weights = schur_expand_multi(wedge_tensor_weights(p, (p,) * n))
        if by_weights != out:
            raise ConsistencyError(f"Lambda^{p} of an {n}-fold tensor: characters {out} vs weights {by_weights}")
    return out


# -- audits -------------------------------------------------------------------------

def dimension_audit(mults: dict[Partition, int], m: int, expected: int) -> bool:
    return sum(c * weyl_dim(lam, m) for lam, c in mults.items()) == expected


def newell_bar(lam: Partition, p: int) -> Partition:
    """(1 + lam_1, ..., 1 + lam_p): add a column of height p."""
    return Partition(1 + lam.part(i) for i in range(p))


def newell_identity(p: int, d: int) -> bool:
    """Sym^p(Sym^{d-1}) [lam] = Lambda^p(Sym^d) [lam bar] for every lam.

    Every lam bar has exactly p rows, and every p-row partition of p d is a
    lam bar, so the comparison is against the p-row part of Lambda^p(Sym^d).
    Constituents with fewer rows are not constrained.
    """
    ss = sym_sym_multiplicities(p, d - 1)
    ws = wedge_sym_multiplicities(p, d)
    mapped = {newell_bar(lam, p): c for lam, c in ss.items()}
    return mapped == {mu: c for mu, c in ws.items() if len(mu) == p}
