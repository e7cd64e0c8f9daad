"""Exact sparse linear algebra over the rationals.

Two layers live here.  The small-matrix layer (``rref``, ``kernel_basis``,
``laplacian``, ``integer_spectrum``) works with ``Fraction`` entries and is
meant for matrices of a few hundred rows.  The chain-complex layer
(``reduce_columns``, ``HomologyBasis``) does fraction-free integer column
reduction with lowest-index pivots, which keeps fill-in small on simplicial
boundary matrices with thousands of columns.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable, Optional, Sequence


class SparseMat:
    """rows x cols matrix stored column-wise as ``{row: value}`` dicts."""

    __slots__ = ("rows", "cols", "columns")

    def __init__(self, rows: int, cols: int, columns: Optional[Sequence[dict]] = None):
        self.rows = rows
        self.cols = cols
        if columns is None:
            columns = [{} for _ in range(cols)]
        if len(columns) != cols:
            raise ValueError(f"expected {cols} columns, got {len(columns)}")
        clean = []
        for col in columns:
            c = {}
            for r, v in col.items():
                if not 0 <= r < rows:
                    raise IndexError(f"row index {r} out of range for {rows} rows")
                if v:
                    c[r] = v
            clean.append(c)
        self.columns = clean

    @classmethod
    def from_dense(cls, dense: Sequence[Sequence]) -> "SparseMat":
        rows = len(dense)
        cols = len(dense[0]) if rows else 0
        return cls(rows, cols, [{i: dense[i][j] for i in range(rows) if dense[i][j]} for j in range(cols)])

    @classmethod
    def from_entries(cls, rows: int, cols: int, entries: Iterable[tuple[int, int, object]]) -> "SparseMat":
        columns = [{} for _ in range(cols)]
        for r, c, v in entries:
            if r in columns[c]:
                raise ValueError(f"duplicate entry at ({r}, {c})")
            columns[c][r] = v
        return cls(rows, cols, columns)

    @classmethod
    def identity(cls, n: int) -> "SparseMat":
        return cls(n, n, [{i: 1} for i in range(n)])

    @classmethod
    def zero(cls, rows: int, cols: int) -> "SparseMat":
        return cls(rows, cols)

    def entries(self) -> list[tuple[int, int, object]]:
        """(row, col, value) triples in row-major canonical order."""
        return sorted((r, c, v) for c, col in enumerate(self.columns) for r, v in col.items())

    def to_dense(self) -> list[list]:
        out = [[0] * self.cols for _ in range(self.rows)]
        for c, col in enumerate(self.columns):
            for r, v in col.items():
                out[r][c] = v
        return out

    def row_dicts(self) -> list[dict]:
        rows = [{} for _ in range(self.rows)]
        for c, col in enumerate(self.columns):
            for r, v in col.items():
                rows[r][c] = v
        return rows

    def transpose(self) -> "SparseMat":
        return SparseMat(self.cols, self.rows, self.row_dicts())

    def __matmul__(self, other: "SparseMat") -> "SparseMat":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        out = []
        for col in other.columns:
            acc = {}
            for k, v in col.items():
                for r, w in self.columns[k].items():
                    acc[r] = acc.get(r, 0) + w * v
            out.append(acc)
        return SparseMat(self.rows, other.cols, out)

    def __add__(self, other: "SparseMat") -> "SparseMat":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} + {other.shape}")
        out = []
        for a, b in zip(self.columns, other.columns):
            c = dict(a)
            for r, v in b.items():
                c[r] = c.get(r, 0) + v
            out.append(c)
        return SparseMat(self.rows, self.cols, out)

    def apply(self, vec: dict) -> dict:
        acc = {}
        for k, v in vec.items():
            for r, w in self.columns[k].items():
                acc[r] = acc.get(r, 0) + w * v
        return {r: v for r, v in acc.items() if v}

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def nnz(self) -> int:
        return sum(len(c) for c in self.columns)

    def is_zero(self) -> bool:
        return not any(self.columns)

    def is_symmetric(self) -> bool:
        if self.rows != self.cols:
            return False
        for c, col in enumerate(self.columns):
            for r, v in col.items():
                if self.columns[r].get(c, 0) != v:
                    return False
        return True

    def __eq__(self, other):
        return isinstance(other, SparseMat) and self.shape == other.shape and self.columns == other.columns

    def __repr__(self):
        return f"SparseMat({self.rows}x{self.cols}, nnz={self.nnz()})"


# -- small-matrix layer ------------------------------------------------------------

@dataclass
class Echelon:
    """Reduced row echelon form E = T @ M with pivot columns."""

    rows: list[dict]
    pivots: list[int]
    transform: list[dict]
    ncols: int

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def as_matrix(self) -> SparseMat:
        return SparseMat.from_entries(
            len(self.rows), self.ncols, [(i, c, v) for i, row in enumerate(self.rows) for c, v in row.items()]
        )


def rref(m: SparseMat) -> Echelon:
    """Row-reduced echelon form over Q, with the row transform T (T @ m = E)."""
    rows = [{c: Fraction(v) for c, v in r.items()} for r in m.row_dicts()]
    trans = [{i: Fraction(1)} for i in range(m.rows)]
    pivots = []
    prow = 0
    for col in range(m.cols):
        best = None
        for i in range(prow, len(rows)):
            if col in rows[i] and (best is None or len(rows[i]) < len(rows[best])):
                best = i
        if best is None:
            continue
        rows[prow], rows[best] = rows[best], rows[prow]
        trans[prow], trans[best] = trans[best], trans[prow]
        inv = 1 / rows[prow][col]
        rows[prow] = {c: v * inv for c, v in rows[prow].items()}
        trans[prow] = {c: v * inv for c, v in trans[prow].items()}
        prow_dict, ptrans = rows[prow], trans[prow]
        for i in range(len(rows)):
            if i == prow or col not in rows[i]:
                continue
            f = rows[i][col]
            _axpy(rows[i], -f, prow_dict)
            _axpy(trans[i], -f, ptrans)
        pivots.append(col)
        prow += 1
    nonzero = [i for i in range(len(rows)) if rows[i]]
    # zero rows sit after the pivot rows; keep their transforms for left-kernel use
    order = nonzero + [i for i in range(len(rows)) if not rows[i]]
    return Echelon([rows[i] for i in order], pivots, [trans[i] for i in order], m.cols)


def _axpy(target: dict, a, source: dict) -> None:
    for c, v in source.items():
        nv = target.get(c, 0) + a * v
        if nv:
            target[c] = nv
        else:
            target.pop(c, None)


def rank(m: SparseMat) -> int:
    """Exact rank via integer column reduction (entries must be rational)."""
    return len(reduce_columns(_integral_columns(m)).lows)


def kernel_basis(m: SparseMat) -> list[dict]:
    """Basis of the right kernel as sparse column vectors with Fraction entries."""
    ech = rref(m)
    pivset = set(ech.pivots)
    basis = []
    for free in range(m.cols):
        if free in pivset:
            continue
        v = {free: Fraction(1)}
        for row, p in zip(ech.rows, ech.pivots):
            c = row.get(free)
            if c:
                v[p] = -c
        basis.append(v)
    return basis


def laplacian(bk: Optional[SparseMat], bk1: Optional[SparseMat]) -> SparseMat:
    """Delta_k = bk^T bk + bk1 bk1^T on the k-chains.

    ``bk`` maps k-chains down, ``bk1`` maps (k+1)-chains onto k-chains; either
    may be None when that side of the complex is zero.
    """
    if bk is None and bk1 is None:
        raise ValueError("need at least one boundary map")
    n = bk.cols if bk is not None else bk1.rows
    if bk is not None and bk1 is not None and bk.cols != bk1.rows:
        raise ValueError(f"shape mismatch: bk is {bk.shape}, bk1 is {bk1.shape}")
    out = SparseMat.zero(n, n)
    if bk is not None:
        out = out + bk.transpose() @ bk
    if bk1 is not None:
        out = out + bk1 @ bk1.transpose()
    return out


def charpoly(m: SparseMat) -> list[Fraction]:
    """Coefficients (constant term first) of det(x I - m), via Hessenberg reduction."""
    n = m.rows
    if n != m.cols:
        raise ValueError("characteristic polynomial needs a square matrix")
    a = [[Fraction(v) for v in row] for row in m.to_dense()]
    # similarity transform to upper Hessenberg form
    for j in range(n - 2):
        piv = next((i for i in range(j + 1, n) if a[i][j]), None)
        if piv is None:
            continue
        if piv != j + 1:
            a[piv], a[j + 1] = a[j + 1], a[piv]
            for row in a:
                row[piv], row[j + 1] = row[j + 1], row[piv]
        pv = a[j + 1][j]
        for i in range(j + 2, n):
            if not a[i][j]:
                continue
            f = a[i][j] / pv
            ri, rp = a[i], a[j + 1]
            for c in range(n):
                if rp[c]:
                    ri[c] -= f * rp[c]
            for row in a:
                if row[i]:
                    row[j + 1] += f * row[i]
    # p_k(x) = det(x I - H_k) recurrence on leading principal minors
    polys = [[Fraction(1)]]
    for k in range(1, n + 1):
        prev = polys[k - 1]
        cur = [Fraction(0)] + prev  # x * p_{k-1}
        h = a[k - 1][k - 1]
        for i, c in enumerate(prev):
            cur[i] -= h * c
        prod_sub = Fraction(1)
        for i in range(k - 1, 0, -1):
            prod_sub *= a[i][i - 1]
            if not prod_sub:
                break
            coef = a[i - 1][k - 1] * prod_sub
            for t, c in enumerate(polys[i - 1]):
                cur[t] -= coef * c
        polys.append(cur)
    return polys[n]


def integer_spectrum(m: SparseMat) -> Optional[list[int]]:
    """Eigenvalues with multiplicity if the characteristic polynomial splits
    over the integers, else None."""
    if not m.is_symmetric():
        raise ValueError("integer_spectrum expects a symmetric matrix")
    n = m.rows
    if n == 0:
        return []
    poly = charpoly(m)
    bound = 0
    for col in m.columns:
        bound = max(bound, sum(abs(v) for v in col.values()))
    bound = int(bound) + 1
    roots = []
    for r in range(-bound, bound + 1):
        while len(poly) > 1:
            q, rem = _synthetic_division(poly, r)
            if rem:
                break
            roots.append(r)
            poly = q
    if len(poly) > 1:
        return None
    return sorted(roots)


def _synthetic_division(poly: list, r: int):
    # poly constant-first; divide by (x - r)
    deg = len(poly) - 1
    q = [Fraction(0)] * deg
    acc = poly[deg]
    for i in range(deg - 1, -1, -1):
        q[i] = acc
        acc = poly[i] + acc * r
    return q, acc


# -- chain-complex layer ------------------------------------------------------------

def _integral_columns(m: SparseMat) -> list[dict]:
    cols = []
    for col in m.columns:
        if all(isinstance(v, int) for v in col.values()):
            cols.append(dict(col))
            continue
        fr = {r: Fraction(v) for r, v in col.items()}
        den = 1
        for v in fr.values():
            den = den * v.denominator // gcd(den, v.denominator)
        cols.append({r: int(v * den) for r, v in fr.items()})
    return cols


def _primitive(v: dict) -> dict:
    g = 0
    for x in v.values():
        g = gcd(g, x)
        if g == 1:
            return v
    if g > 1:
        return {k: x // g for k, x in v.items()}
    return v


@dataclass
class ColumnReduction:
    """Result of reducing the columns of a boundary matrix.

    ``lows[r]`` is the reduced column whose largest nonzero row is r;
    ``cycles[j]`` is the combination of original columns (as a chain in the
    source space) that reduced to zero at column j, recorded only when asked.
    """

    lows: dict[int, dict] = field(default_factory=dict)
    low_source: dict[int, int] = field(default_factory=dict)
    cycles: dict[int, dict] = field(default_factory=dict)
    zero_columns: list[int] = field(default_factory=list)


def reduce_columns(
    columns: Sequence[dict],
    skip: Iterable[int] = (),
    track: bool = False,
    keep_cycles: Optional[Iterable[int]] = None,
) -> ColumnReduction:
    """Fraction-free column reduction with lowest-index (max row) pivots.

    Columns listed in ``skip`` are known to reduce to zero and are not
    touched (clearing).  With ``track`` the source combination of every
    pivot column is kept so that zero columns yield explicit cycles; only
    cycles of columns in ``keep_cycles`` (default: all) are stored.
    """
    skip = set(skip)
    keep = None if keep_cycles is None else set(keep_cycles)
    out = ColumnReduction()
    sources: dict[int, dict] = {}
    for j, col in enumerate(columns):
        if j in skip:
            continue
        v = dict(col)
        src = {j: 1} if track else None
        while v:
            lo = max(v)
            w = out.lows.get(lo)
            if w is None:
                break
            a, b = w[lo], v[lo]
            g = gcd(a, b)
            a, b = a // g, b // g
            if a < 0:
                a, b = -a, -b
            if a != 1:
                v = {k: a * x for k, x in v.items()}
            for k, x in w.items():
                y = v.get(k, 0) - b * x
                if y:
                    v[k] = y
                else:
                    del v[k]
            if track:
                wsrc = sources[lo]
                if a != 1:
                    src = {k: a * x for k, x in src.items()}
                for k, x in wsrc.items():
                    y = src.get(k, 0) - b * x
                    if y:
                        src[k] = y
                    else:
                        del src[k]
            if a != 1:
                if track:
                    # keep column and source on a common primitive scale
                    g = 0
                    for x in v.values():
                        g = gcd(g, x)
                    for x in src.values():
                        g = gcd(g, x)
                    if g > 1:
                        v = {k: x // g for k, x in v.items()}
                        src = {k: x // g for k, x in src.items()}
                else:
                    v = _primitive(v)
        if v:
            lo = max(v)
            out.lows[lo] = v
            out.low_source[lo] = j
            if track:
                sources[lo] = src
        else:
            out.zero_columns.append(j)
            if track and (keep is None or j in keep):
                out.cycles[j] = src
    return out


class SignedPermutation:
    """A signed permutation of basis vectors: e_i -> sign[i] * e_{image[i]}."""

    __slots__ = ("image", "sign")

    def __init__(self, image: Sequence[int], sign: Sequence[int]):
        self.image = list(image)
        self.sign = list(sign)

    def __len__(self):
        return len(self.image)

    def apply(self, vec: dict) -> dict:
        im, sg = self.image, self.sign
        return {im[i]: sg[i] * x for i, x in vec.items()}

    def compose(self, other: "SignedPermutation") -> "SignedPermutation":
        """self after other."""
        return SignedPermutation(
            [self.image[other.image[i]] for i in range(len(other))],
            [other.sign[i] * self.sign[other.image[i]] for i in range(len(other))],
        )

    def trace(self) -> int:
        return sum(s for i, (t, s) in enumerate(zip(self.image, self.sign)) if t == i)

    def to_matrix(self) -> SparseMat:
        n = len(self.image)
        return SparseMat(n, n, [{self.image[i]: self.sign[i]} for i in range(n)])


class QuotientEchelon:
    """Echelon data for a quotient Z/B of subspaces of Q^n.

    B is spanned by ``boundary_lows`` (vectors keyed by their largest index);
    the representatives ``reps`` (keyed likewise) complete B to a basis of Z.
    The trace of a map preserving both spans is the sum, over reps z_j, of
    the z_j-coefficient of g(z_j) in this combined echelon basis.
    """

    def __init__(self, boundary_lows: dict[int, dict], reps: dict[int, dict]):
        self.boundary_lows = boundary_lows
        self.reps = reps
        overlap = set(boundary_lows) & set(reps)
        if overlap:
            raise ValueError(f"representatives share pivots with the boundary span: {sorted(overlap)[:5]}")

    @property
    def dim(self) -> int:
        return len(self.reps)

    def coefficient(self, vec: dict, j: int) -> Fraction:
        """Coefficient of reps[j] when ``vec`` (in span Z) is expanded in the basis."""
        v = {k: x for k, x in vec.items() if x}
        scale = 1
        while v:
            lo = max(v)
            if lo < j:
                return Fraction(0)
            if lo == j:
                return Fraction(v[lo], scale * self.reps[j][j])
            w = self.boundary_lows.get(lo)
            if w is None:
                w = self.reps.get(lo)
            if w is None:
                raise ArithmeticError(f"vector leaves the cycle span at index {lo}")
            a, b = w[lo], v[lo]
            g = gcd(a, b)
            a, b = a // g, b // g
            if a < 0:
                a, b = -a, -b
            if a != 1:
                v = {k: a * x for k, x in v.items()}
                scale *= a
            for k, x in w.items():
                y = v.get(k, 0) - b * x
                if y:
                    v[k] = y
                else:
                    del v[k]
        return Fraction(0)

    def trace(self, act) -> Fraction:
        """Trace of the induced map; ``act`` maps a sparse vector to its image."""
        return sum((self.coefficient(act(z), j) for j, z in self.reps.items()), Fraction(0))

    def check_membership(self, vec: dict) -> bool:
        v = {k: Fraction(x) for k, x in vec.items() if x}
        while v:
            lo = max(v)
            w = self.boundary_lows.get(lo) or self.reps.get(lo)
            if w is None:
                return False
            f = v[lo] / w[lo]
            _axpy(v, -f, w)
        return True


def quotient_action_trace(Z: Sequence[dict], B: Sequence[dict], g) -> Fraction:
    """Trace of g on span(Z)/span(B).

    ``g`` is a SignedPermutation, a SparseMat, or a callable on sparse vectors.
    Raises ArithmeticError when g(Z) leaves span(Z).
    """
    qe = quotient_echelon(Z, B)
    act = _as_action(g)
    for z in qe.reps.values():
        if not qe.check_membership(act(z)):
            raise ArithmeticError("g does not preserve the span of Z")
    return qe.trace(act)


def quotient_echelon(Z: Sequence[dict], B: Sequence[dict]) -> QuotientEchelon:
    bred = reduce_columns(_integral_columns_from_vectors(B))
    reps = {}
    lows = dict(bred.lows)
    for z in _integral_columns_from_vectors(Z):
        v = dict(z)
        while v:
            lo = max(v)
            w = lows.get(lo)
            if w is None:
                break
            a, b = w[lo], v[lo]
            g = gcd(a, b)
            a, b = a // g, b // g
            if a < 0:
                a, b = -a, -b
            v = {k: a * x for k, x in v.items()}
            for k, x in w.items():
                y = v.get(k, 0) - b * x
                if y:
                    v[k] = y
                else:
                    del v[k]
        if v:
            v = _primitive(v)
            lows[max(v)] = v
            reps[max(v)] = v
    return QuotientEchelon(bred.lows, reps)


def _integral_columns_from_vectors(vecs: Sequence[dict]) -> list[dict]:
    if not vecs:
        return []
    n = max((max(v) for v in vecs if v), default=-1) + 1
    return _integral_columns(SparseMat(n, len(vecs), list(vecs)))


def _as_action(g):
    if isinstance(g, SignedPermutation):
        return g.apply
    if isinstance(g, SparseMat):
        return g.apply
    return g
