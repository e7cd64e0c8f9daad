"""Packing complexes C_N^d, their oriented simplices, boundaries and S_N action.

A vertex is an n-tuple of sorted d_i-subsets of {0, ..., N_i - 1}; a simplex is
a set of vertices that are pairwise disjoint in every coordinate.  Simplices
are stored as strictly increasing tuples of vertex indices, which fixes the
orientation.  Dimension -1 holds the empty simplex, so every boundary map
below is the augmented one and homology is reduced homology.
"""

from __future__ import annotations

from itertools import combinations, product
from typing import Optional, Sequence

from .characters import class_representative
from .partitions import NPartition
from .linalg import SignedPermutation, SparseMat

DEFAULT_MAX_SIMPLICES = 5_000_000


class ResourceLimitError(RuntimeError):
    """A computation would exceed a configured size cap."""


def _sort_sign(seq: list) -> tuple[tuple, int]:
    """Sorted copy and the parity of the sorting permutation (entries distinct)."""
    arr = list(seq)
    sign = 1
    # insertion sort: simplices are short
    for i in range(1, len(arr)):
        x = arr[i]
        j = i - 1
        while j >= 0 and arr[j] > x:
            arr[j + 1] = arr[j]
            j -= 1
            sign = -sign
        arr[j + 1] = x
    return tuple(arr), sign


class PackingComplex:
    """All simplices of C_N^d up to dimension ``max_dim`` (default: all)."""

    def __init__(
        self,
        N: Sequence[int],
        d: Sequence[int],
        max_dim: Optional[int] = None,
        max_simplices: int = DEFAULT_MAX_SIMPLICES,
    ):
        self.N = tuple(int(x) for x in N)
        self.d = tuple(int(x) for x in d)
        if len(self.N) != len(self.d) or not self.N:
            raise ValueError(f"N={self.N} and d={self.d} must be nonempty tuples of equal length")
        if any(x < 0 for x in self.N) or any(x < 1 for x in self.d):
            raise ValueError(f"need N_i >= 0 and d_i >= 1, got N={self.N}, d={self.d}")
        self.top_possible = min(Ni // di for Ni, di in zip(self.N, self.d)) - 1
        self.max_dim = self.top_possible if max_dim is None else min(max_dim, self.top_possible)

        self.vertices = sorted(
            product(*(combinations(range(Ni), di) for Ni, di in zip(self.N, self.d)))
        )
        self.vertex_index = {v: i for i, v in enumerate(self.vertices)}
        masks = [tuple(sum(1 << x for x in a) for a in v) for v in self.vertices]

        simplices: dict[int, list[tuple[int, ...]]] = {-1: [()]}
        for k in range(0, self.max_dim + 1):
            simplices[k] = []
        count = 1
        n = len(self.N)
        nverts = len(self.vertices)
        limit = self.max_dim + 1

        # depth-first over vertices in canonical order; dimension lists end up sorted
        stack = [((), (0,) * n, 0)]
        while stack:
            cur, used, start = stack.pop()
            if len(cur) == limit:
                continue
            children = []
            for j in range(start, nverts):
                m = masks[j]
                ok = True
                for i in range(n):
                    if m[i] & used[i]:
                        ok = False
                        break
                if ok:
                    children.append(j)
            for j in children:
                s = cur + (j,)
                simplices[len(s) - 1].append(s)
                count += 1
                if count > max_simplices:
                    raise ResourceLimitError(
                        f"C_{self.N}^{self.d} exceeds the cap of {max_simplices} simplices"
                    )
            for j in reversed(children):
                m = masks[j]
                stack.append((cur + (j,), tuple(u | x for u, x in zip(used, m)), j + 1))
        for k in simplices:
            simplices[k].sort()
        while self.max_dim >= 0 and not simplices.get(self.max_dim):
            simplices.pop(self.max_dim, None)
            self.max_dim -= 1
        self.simplices = simplices
        self.index = {k: {s: i for i, s in enumerate(lst)} for k, lst in simplices.items()}

    # -- basic data -------------------------------------------------------------

    @property
    def dimension(self) -> int:
        return self.max_dim

    @property
    def is_empty(self) -> bool:
        return not self.vertices

    def count(self, k: int) -> int:
        return len(self.simplices.get(k, ()))

    def counts(self) -> dict[int, int]:
        return {k: len(v) for k, v in sorted(self.simplices.items())}

    def total_simplices(self) -> int:
        return sum(len(v) for v in self.simplices.values())

    def reduced_euler_characteristic(self) -> int:
        return sum((-1 if k % 2 else 1) * len(v) for k, v in self.simplices.items())

    def __repr__(self):
        return f"PackingComplex(N={self.N}, d={self.d}, counts={self.counts()})"

    # -- boundary ------------------------------------------------------------------

    def boundary(self, k: int) -> SparseMat:
        """Augmented boundary from k-chains to (k-1)-chains."""
        src = self.simplices.get(k, [])
        tgt_index = self.index.get(k - 1, {})
        cols = []
        for s in src:
            col = {}
            for i in range(len(s)):
                col[tgt_index[s[:i] + s[i + 1:]]] = -1 if i % 2 else 1
            cols.append(col)
        return SparseMat(len(tgt_index), len(src), cols)

    # -- group action -----------------------------------------------------------------

    def vertex_permutation(self, perms: Sequence[Sequence[int]]) -> list[int]:
        """Images of vertex indices under a tuple of per-factor permutations."""
        out = []
        for v in self.vertices:
            img = tuple(tuple(sorted(p[x] for x in a)) for p, a in zip(perms, v))
            out.append(self.vertex_index[img])
        return out

    def act_on_simplex(self, vmap: Sequence[int], s: tuple[int, ...]) -> tuple[tuple[int, ...], int]:
        return _sort_sign([vmap[x] for x in s])

    def act(self, g, k: int) -> SignedPermutation:
        """Signed permutation of the k-chains induced by g.

        ``g`` is either a cycle type given as an NPartition (its canonical
        representative is used) or a tuple of zero-based per-factor
        permutations.
        """
        perms = _as_perms(g, self.N)
        vmap = self.vertex_permutation(perms)
        idx = self.index.get(k, {})
        image, sign = [], []
        for s in self.simplices.get(k, []):
            t, sg = _sort_sign([vmap[x] for x in s])
            image.append(idx[t])
            sign.append(sg)
        return SignedPermutation(image, sign)

    def chain_trace(self, g, k: int) -> int:
        """Trace of g on the k-chains: signed count of setwise-fixed simplices."""
        perms = _as_perms(g, self.N)
        vmap = self.vertex_permutation(perms)
        total = 0
        for s in self.simplices.get(k, []):
            t, sg = _sort_sign([vmap[x] for x in s])
            if t == s:
                total += sg
        return total

    # -- export -----------------------------------------------------------------------

    def vertex_label(self, i: int) -> str:
        return "(" + "|".join(",".join(str(x + 1) for x in a) for a in self.vertices[i]) + ")"

    def face_list(self) -> str:
        """One simplex per line, vertices written as (a,b,...|c,d,...) with 1-based labels."""
        lines = []
        for k in sorted(self.simplices):
            if k < 0:
                continue
            for s in self.simplices[k]:
                lines.append(" ".join(self.vertex_label(i) for i in s))
        return "\n".join(lines) + ("\n" if lines else "")


def _as_perms(g, N) -> tuple[tuple[int, ...], ...]:
    if len(g) != len(N):
        raise ValueError(f"group element has {len(g)} factors, expected {len(N)}")
    if isinstance(g, NPartition):
        return class_representative(g)
    perms = tuple(tuple(p) for p in g)
    for p, n in zip(perms, N):
        if sorted(p) != list(range(n)):
            raise ValueError(f"{p} is not a permutation of range({n})")
    return perms


def build(N, d, max_dim=None, max_simplices=DEFAULT_MAX_SIMPLICES) -> PackingComplex:
    return PackingComplex(N, d, max_dim=max_dim, max_simplices=max_simplices)


def boundary(cx: PackingComplex, k: int) -> SparseMat:
    return cx.boundary(k)


def act(g, cx: PackingComplex, k: int) -> SignedPermutation:
    return cx.act(g, k)


def chessboard_count(N1: int, N2: int, k: int) -> int:
    """Number of k-simplices of C_(N1,N2)^(1,1)."""
    from math import comb, factorial

    return comb(N1, k + 1) * comb(N2, k + 1) * factorial(k + 1)
