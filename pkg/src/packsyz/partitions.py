"""Young-diagram combinatorics: partitions, n-partitions, padding, content, Pieri."""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from math import factorial, prod
from typing import Iterable, Iterator, Optional, Sequence


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Trailing zeros are stripped on construction, so ``Partition((2, 1, 0))``
    equals ``Partition((2, 1))`` and the empty partition is ``Partition()``.
    Ordering is the tuple (lexicographic) ordering.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(x) for x in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for i, x in enumerate(parts):
            if x < 0:
                raise ValueError(f"negative part in {parts}")
            if i and parts[i - 1] < x:
                raise ValueError(f"parts not weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """Zero-based part lookup that returns 0 past the end."""
        return self[i] if i < len(self) else 0

    def conjugate(self) -> "Partition":
        if not self:
            return self
        return Partition(sum(1 for x in self if x > j) for j in range(self[0]))

    def boxes(self) -> Iterator[tuple[int, int]]:
        for i, row in enumerate(self):
            for j in range(row):
                yield i, j

    def hook(self, i: int, j: int) -> int:
        conj = self.conjugate()
        return self[i] - j + conj[j] - i - 1

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"

    def bracket(self) -> str:
        return "(" + ",".join(str(x) for x in self) + ")"


EMPTY = Partition()


class NPartition(tuple):
    """An ordered n-tuple of partitions; indexes irreps of S_N1 x ... x S_Nn."""

    __slots__ = ()

    def __new__(cls, components: Iterable = ()):
        comps = tuple(c if isinstance(c, Partition) else Partition(c) for c in components)
        if not comps:
            raise ValueError("an n-partition needs n >= 1 components")
        return super().__new__(cls, comps)

    @property
    def n(self) -> int:
        return len(self)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(c.size for c in self)

    def __repr__(self) -> str:
        return f"NPartition({tuple(tuple(c) for c in self)!r})"

    def bracket(self) -> str:
        return "x".join(c.bracket() for c in self)


def as_npartition(obj) -> NPartition:
    return obj if isinstance(obj, NPartition) else NPartition(obj)


def parse_bracket(text: str) -> NPartition:
    """Inverse of :meth:`NPartition.bracket`: ``"(4,3,1)x(2,2,2,1)"``."""
    comps = []
    for piece in text.strip().split("x"):
        piece = piece.strip()
        if not (piece.startswith("(") and piece.endswith(")")):
            raise ValueError(f"bad partition literal {piece!r}")
        inner = piece[1:-1].strip()
        comps.append(Partition(int(x) for x in inner.split(",")) if inner else EMPTY)
    return NPartition(comps)


# -- enumeration -------------------------------------------------------------

@lru_cache(maxsize=None)
def partitions_of(n: int, max_part: Optional[int] = None) -> tuple[Partition, ...]:
    """All partitions of n in increasing lexicographic order."""
    if n < 0:
        return ()
    if max_part is None:
        max_part = n
    out = []

    def rec(remaining, cap, prefix):
        if remaining == 0:
            out.append(Partition(prefix))
            return
        for x in range(min(cap, remaining), 0, -1):
            rec(remaining - x, x, prefix + [x])

    rec(n, max_part, [])
    return tuple(sorted(out))


def npartitions_of(sizes: Sequence[int]) -> tuple[NPartition, ...]:
    return tuple(NPartition(c) for c in product(*(partitions_of(s) for s in sizes)))


# -- padding -----------------------------------------------------------------

def pad(lam, N: Sequence[int]) -> Optional[NPartition]:
    """Prepend a first row of length N_i - |lam^i| to every component.

    Returns None (the zero functor) when some new row would be shorter than
    the old first row.
    """
    lam = as_npartition(lam)
    if len(N) != lam.n:
        raise ValueError(f"tuple length {len(N)} does not match n={lam.n}")
    comps = []
    for part, Ni in zip(lam, N):
        head = Ni - part.size
        if head < part.part(0):
            return None
        comps.append(Partition((head,) + tuple(part)))
    return NPartition(comps)


def pad_partition(delta: Partition, m: int) -> Optional[Partition]:
    head = m - delta.size
    if head < delta.part(0):
        return None
    return Partition((head,) + tuple(delta))


def unpad(mu) -> NPartition:
    """Strip the first row of each component."""
    mu = as_npartition(mu)
    return NPartition(Partition(c[1:]) for c in mu)


# -- statistics --------------------------------------------------------------

def content(delta) -> int:
    """Sum over boxes (row i, column j) of j - i."""
    delta = Partition(delta)
    return sum(j - i for i, j in delta.boxes())


def hook_lengths(delta: Partition) -> list[int]:
    conj = delta.conjugate()
    return [delta[i] - j + conj[j] - i - 1 for i, j in delta.boxes()]


@lru_cache(maxsize=None)
def num_syt(delta: Partition) -> int:
    """Number of standard Young tableaux, i.e. dim of the S_n irrep [delta]."""
    return factorial(delta.size) // prod(hook_lengths(delta))


def npartition_dim(lam: NPartition) -> int:
    return prod(num_syt(c) for c in lam)


def weyl_dim(lam, m: int) -> int:
    """dim S_lam(K^m) by the hook-content formula."""
    lam = Partition(lam)
    if len(lam) > m:
        return 0
    num = prod(m + j - i for i, j in lam.boxes())
    den = prod(hook_lengths(lam))
    return num // den


def dominates(lam: Partition, mu: Partition) -> bool:
    """lam >= mu in dominance order (same size assumed)."""
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam.part(i)
        b += mu.part(i)
        if a < b:
            return False
    return True


# -- Pieri -------------------------------------------------------------------

def pieri_row(lam, k: int) -> list[Partition]:
    """Partitions obtained from lam by adding a horizontal strip of k boxes."""
    lam = Partition(lam)
    if k < 0:
        return []
    rows = len(lam) + 1
    out = []

    def rec(i, left, acc):
        if i == rows:
            if left == 0:
                out.append(Partition(acc))
            return
        # row i may grow up to the old length of row i-1
        cap = left if i == 0 else min(left, lam.part(i - 1) - lam.part(i))
        for extra in range(cap, -1, -1):
            rec(i + 1, left - extra, acc + [lam.part(i) + extra])

    rec(0, k, [])
    return sorted(set(out))


def is_horizontal_strip(outer: Partition, inner: Partition) -> bool:
    if len(outer) < len(inner):
        return False
    for i in range(len(outer)):
        if outer.part(i) < inner.part(i):
            return False
        if i and outer.part(i) > inner.part(i - 1):
            return False
    return True


# -- rendering ---------------------------------------------------------------

def young_diagram(delta, box: str = "□") -> str:
    """English-notation diagram as rows of unicode boxes."""
    delta = Partition(delta)
    if not delta:
        return "∅"
    return "\n".join(box * row for row in delta)
