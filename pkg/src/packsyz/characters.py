"""Characters of products of symmetric groups S_N1 x ... x S_Nn.

Irreducible characters come from the Murnaghan-Nakayama rule on beta-sets.
Class functions are dense over cycle types; every inner product is computed
with exact rationals and integrality of multiplicities is asserted.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import factorial, prod
from typing import Mapping, Optional, Sequence

from .partitions import (
    NPartition,
    Partition,
    as_npartition,
    npartition_dim,
    npartitions_of,
    partitions_of,
)

CycleType = NPartition


class CharacterError(ArithmeticError):
    """A multiplicity came out non-integral or negative: an upstream trace bug."""


# -- single symmetric group ---------------------------------------------------

@lru_cache(maxsize=None)
def irreducible_character(lam, rho) -> int:
    """chi_lam evaluated on the class of cycle type rho."""
    lam, rho = Partition(lam), Partition(rho)
    if lam.size != rho.size:
        raise ValueError(f"size mismatch: |{tuple(lam)}| != |{tuple(rho)}|")
    if not rho:
        return 1
    r, rest = rho[0], Partition(rho[1:])
    ell = len(lam)
    beta = [lam[i] + ell - 1 - i for i in range(ell)]
    beta_set = set(beta)
    total = 0
    for b in beta:
        nb = b - r
        if nb < 0 or nb in beta_set:
            continue
        # height of the removed rim hook = beta numbers jumped over
        height = sum(1 for x in beta if nb < x < b)
        new_beta = sorted((x if x != b else nb for x in beta), reverse=True)
        new_lam = Partition(new_beta[i] - (ell - 1 - i) for i in range(ell))
        term = irreducible_character(new_lam, rest)
        total += -term if height % 2 else term
    return total


def z_factor(rho) -> int:
    """Order of the centralizer of a permutation of cycle type rho."""
    rho = Partition(rho)
    return prod(i ** m * factorial(m) for i, m in Counter(rho).items())


def sign_of(rho) -> int:
    rho = Partition(rho)
    return -1 if (rho.size - len(rho)) % 2 else 1


@lru_cache(maxsize=None)
def character_table(n: int) -> tuple[tuple[int, ...], ...]:
    """Rows indexed by partitions_of(n) (irreps), columns by partitions_of(n) (classes)."""
    parts = partitions_of(n)
    return tuple(tuple(irreducible_character(lam, rho) for rho in parts) for lam in parts)


# -- products of symmetric groups -----------------------------------------------

def cycle_types(N: Sequence[int]) -> tuple[CycleType, ...]:
    return npartitions_of(tuple(N))


def class_size(rho) -> int:
    rho = as_npartition(rho)
    return prod(factorial(c.size) // z_factor(c) for c in rho)


def centralizer_order(rho) -> int:
    return prod(z_factor(c) for c in as_npartition(rho))


def group_order(N: Sequence[int]) -> int:
    return prod(factorial(x) for x in N)


def product_character(lam, rho) -> int:
    lam, rho = as_npartition(lam), as_npartition(rho)
    return prod(irreducible_character(a, b) for a, b in zip(lam, rho))


def class_representative(rho) -> tuple[tuple[int, ...], ...]:
    """Canonical permutation of each factor: cycles on consecutive integers,
    longest first, as zero-based images ``perm[x]``."""
    perms = []
    for c in as_npartition(rho):
        perm = []
        start = 0
        for length in c:
            perm.extend(start + (t + 1) % length for t in range(length))
            start += length
        perms.append(tuple(perm))
    return tuple(perms)


class ClassFunction:
    """Rational-valued function on the cycle types of S_N."""

    __slots__ = ("N", "values")

    def __init__(self, N: Sequence[int], values: Optional[Mapping] = None):
        self.N = tuple(int(x) for x in N)
        vals = {}
        given = {as_npartition(k): v for k, v in (values or {}).items()}
        for rho in cycle_types(self.N):
            vals[rho] = Fraction(given.pop(rho, 0))
        if given:
            raise ValueError(f"cycle types {list(given)} do not belong to S_{self.N}")
        self.values = vals

    @classmethod
    def zero(cls, N):
        return cls(N)

    @classmethod
    def trivial(cls, N):
        return cls(N, {rho: 1 for rho in cycle_types(N)})

    @classmethod
    def irreducible(cls, lam):
        lam = as_npartition(lam)
        N = lam.sizes
        return cls(N, {rho: product_character(lam, rho) for rho in cycle_types(N)})

    def __getitem__(self, rho):
        return self.values[as_npartition(rho)]

    def identity_value(self):
        return self.values[NPartition(Partition((1,) * x) for x in self.N)]

    def _check(self, other):
        if self.N != other.N:
            raise ValueError(f"class functions on different groups {self.N} vs {other.N}")

    def __add__(self, other):
        self._check(other)
        return ClassFunction(self.N, {r: self.values[r] + other.values[r] for r in self.values})

    def __sub__(self, other):
        self._check(other)
        return ClassFunction(self.N, {r: self.values[r] - other.values[r] for r in self.values})

    def __neg__(self):
        return ClassFunction(self.N, {r: -v for r, v in self.values.items()})

    def scale(self, c):
        return ClassFunction(self.N, {r: c * v for r, v in self.values.items()})

    def __eq__(self, other):
        return isinstance(other, ClassFunction) and self.N == other.N and self.values == other.values

    def is_zero(self) -> bool:
        return not any(self.values.values())

    def inner(self, other) -> Fraction:
        """<self, other> = (1/|G|) sum_g self(g) other(g); characters are real."""
        self._check(other)
        return sum(
            (self.values[r] * other.values[r] / centralizer_order(r) for r in self.values),
            Fraction(0),
        )

    def __repr__(self):
        nz = {r.bracket(): str(v) for r, v in self.values.items() if v}
        return f"ClassFunction(N={self.N}, {nz})"


# -- decompositions ---------------------------------------------------------------

class Decomposition:
    """Multiset of irreducibles: n-partition -> positive multiplicity.

    The same object reads as S_N-representations ``[lam]`` or, through the
    syzygy correspondence, as tensor products of Schur functors ``S_lam``.
    """

    __slots__ = ("N", "terms")

    def __init__(self, N: Sequence[int], terms: Optional[Mapping] = None):
        self.N = tuple(int(x) for x in N)
        clean = {}
        for lam, m in (terms or {}).items():
            lam = as_npartition(lam)
            if lam.sizes != self.N:
                raise ValueError(f"{lam.bracket()} is not an n-partition of {self.N}")
            if m < 0 or int(m) != m:
                raise CharacterError(f"invalid multiplicity {m} for {lam.bracket()}")
            if m:
                clean[lam] = clean.get(lam, 0) + int(m)
        # descending lex order, the order in which constituents are usually listed
        self.terms = dict(sorted(clean.items(), reverse=True))

    def __eq__(self, other):
        if isinstance(other, Decomposition):
            return self.N == other.N and self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.N, tuple(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms.items())

    def __getitem__(self, lam):
        return self.terms.get(as_npartition(lam), 0)

    def __add__(self, other):
        if self.N != other.N:
            raise ValueError("decompositions over different groups")
        merged = dict(self.terms)
        for lam, m in other.terms.items():
            merged[lam] = merged.get(lam, 0) + m
        return Decomposition(self.N, merged)

    def dimension(self) -> int:
        """Dimension as an S_N-representation."""
        return sum(m * npartition_dim(lam) for lam, m in self.terms.items())

    def gl_dimension(self, dims: Sequence[int]) -> int:
        """Dimension as a GL(V_1) x ... x GL(V_n)-representation, dim V_i = dims[i]."""
        from .partitions import weyl_dim

        return sum(m * prod(weyl_dim(c, k) for c, k in zip(lam, dims)) for lam, m in self.terms.items())

    def character(self) -> ClassFunction:
        out = ClassFunction.zero(self.N)
        for lam, m in self.terms.items():
            out = out + ClassFunction.irreducible(lam).scale(m)
        return out

    def to_json(self) -> list:
        return [{"lambda": [list(c) for c in lam], "mult": m} for lam, m in self.terms.items()]

    @classmethod
    def from_json(cls, N, items) -> "Decomposition":
        return cls(N, {NPartition(Partition(c) for c in it["lambda"]): it["mult"] for it in items})

    def bracket(self, empty: str = "-") -> str:
        if not self.terms:
            return empty
        out = []
        for lam, m in self.terms.items():
            out.append(lam.bracket() if m == 1 else f"{m}*{lam.bracket()}")
        return " + ".join(out)

    def __repr__(self):
        return f"Decomposition(N={self.N}, {self.bracket()})"


def multiplicities(chi: ClassFunction) -> dict[NPartition, int]:
    """Signed multiplicities <chi, chi_lam> of a virtual character."""
    out = {}
    for lam in npartitions_of(chi.N):
        total = Fraction(0)
        for rho, v in chi.values.items():
            if v:
                total += v * product_character(lam, rho) / centralizer_order(rho)
        if total.denominator != 1:
            raise CharacterError(f"non-integral multiplicity {total} for {lam.bracket()}")
        if total:
            out[lam] = int(total)
    return out


def decompose(chi: ClassFunction) -> Decomposition:
    """Isotypic multiplicities of a genuine character."""
    mults = multiplicities(chi)
    negative = {lam.bracket(): m for lam, m in mults.items() if m < 0}
    if negative:
        raise CharacterError(f"negative multiplicities {negative}: not a genuine character")
    return Decomposition(chi.N, mults)


# -- induction and restriction ----------------------------------------------------

def _splittings(rho: Partition, a: int):
    """Ways to write rho as a union of a partition of a and one of |rho|-a."""
    counts = Counter(rho)
    keys = sorted(counts)
    for choice in product(*(range(counts[k] + 1) for k in keys)):
        size = sum(k * c for k, c in zip(keys, choice))
        if size != a:
            continue
        left = Partition(sorted((k for k, c in zip(keys, choice) for _ in range(c)), reverse=True))
        right = Partition(
            sorted((k for k, c in zip(keys, choice) for _ in range(counts[k] - c)), reverse=True)
        )
        yield left, right


def induce(chi: ClassFunction, into: Sequence[int], filler=None) -> ClassFunction:
    """Ind from S_N x S_{N'-N} to S_N' of chi (x) [filler].

    ``filler`` defaults to the trivial (one-row) partitions.
    """
    into = tuple(into)
    if len(into) != len(chi.N) or any(b < a for a, b in zip(chi.N, into)):
        raise ValueError(f"cannot induce from {chi.N} into {into}")
    if filler is None:
        filler = NPartition(Partition((b - a,)) if b > a else Partition() for a, b in zip(chi.N, into))
    filler = as_npartition(filler)
    if any(f.size != b - a for f, a, b in zip(filler, chi.N, into)):
        raise ValueError(f"filler {filler.bracket()} does not have sizes {tuple(b - a for a, b in zip(chi.N, into))}")

    values = {}
    for rho in cycle_types(into):
        total = Fraction(0)
        split_lists = [list(_splittings(r, a)) for r, a in zip(rho, chi.N)]
        for combo in product(*split_lists):
            left = NPartition(c[0] for c in combo)
            right = NPartition(c[1] for c in combo)
            v = chi.values[left]
            if not v:
                continue
            weight = Fraction(centralizer_order(rho), centralizer_order(left) * centralizer_order(right))
            total += weight * v * product_character(filler, right)
        values[rho] = total
    return ClassFunction(into, values)


def restrict(chi: ClassFunction, to: Sequence[int]) -> ClassFunction:
    """Res to S_N (fixing the extra points) of a class function on S_N'."""
    to = tuple(to)
    if len(to) != len(chi.N) or any(a > b for a, b in zip(to, chi.N)):
        raise ValueError(f"cannot restrict from {chi.N} to {to}")
    values = {}
    for rho in cycle_types(to):
        ext = NPartition(
            Partition(tuple(c) + (1,) * (b - a)) for c, a, b in zip(rho, to, chi.N)
        )
        values[rho] = chi.values[ext]
    return ClassFunction(to, values)


def sign_kronecker_multiplicity(mus) -> int:
    """(1/p!) sum_sigma sgn(sigma) prod_i chi_{mu^i}(sigma).

    Equals the multiplicity of S_mu1 V1 (x) ... (x) S_mun Vn in
    Lambda^p(V1 (x) ... (x) Vn).
    """
    mus = [Partition(m) for m in mus]
    sizes = {m.size for m in mus}
    if len(sizes) != 1:
        raise ValueError(f"partitions of different sizes: {[tuple(m) for m in mus]}")
    p = sizes.pop()
    total = Fraction(0)
    for rho in partitions_of(p):
        total += Fraction(sign_of(rho) * prod(irreducible_character(m, rho) for m in mus), z_factor(rho))
    if total.denominator != 1 or total < 0:
        raise CharacterError(f"sign-Kronecker sum {total} is not a multiplicity")
    return int(total)


def permutation_character(N: Sequence[int], fixed_points) -> ClassFunction:
    """Class function from a callable giving the number of fixed points of a class rep."""
    return ClassFunction(N, {rho: fixed_points(class_representative(rho)) for rho in cycle_types(N)})


def regular_character(N: Sequence[int]) -> ClassFunction:
    order = group_order(N)
    ident = NPartition(Partition((1,) * x) for x in N)
    return ClassFunction(N, {ident: order})


def dimension_of(lam) -> int:
    return npartition_dim(as_npartition(lam))
