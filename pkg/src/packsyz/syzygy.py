"""Equivariant Betti tables of line bundles on Segre-Veronese varieties.

The multiplicity of S_lam in K_{p,q}^d(b) equals that of [lam] in
H~_{p-1}(C_N^d) with N_i = (p+q) d_i + b_i, so every entry here is a homology
decomposition read as Schur functors.  The Koszul oracle at the bottom
computes dimensions straight from the wedge complex instead.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations
from math import comb, prod
from typing import Optional

from .characters import Decomposition
from .complex import ResourceLimitError
from .config import DEFAULT, Config
from .equivariant import homology_decomposition
from .linalg import reduce_columns
from .partitions import NPartition, Partition, pad_partition, weyl_dim
from .plethysm import monomials, sym_sym_multiplicities, wedge_tensor_multiplicities


@dataclass(frozen=True)
class SyzygyQuery:
    p: int
    q: int
    d: tuple
    b: tuple

    def __post_init__(self):
        object.__setattr__(self, "d", tuple(int(x) for x in self.d))
        object.__setattr__(self, "b", tuple(int(x) for x in self.b))
        if self.p < 0 or self.q < 0:
            raise ValueError("p and q must be nonnegative")
        if not self.d or any(x < 1 for x in self.d):
            raise ValueError(f"d must be a nonempty tuple of positive integers, got {self.d}")
        if len(self.b) != len(self.d):
            raise ValueError(f"b={self.b} and d={self.d} have different lengths")

    @property
    def N(self) -> tuple:
        return tuple((self.p + self.q) * di + bi for di, bi in zip(self.d, self.b))

    @property
    def defined(self) -> bool:
        return all(x >= 0 for x in self.N)

    @property
    def degree(self) -> int:
        """Homology degree k = p - 1."""
        return self.p - 1


def betti_entry(qy: SyzygyQuery, config: Config = DEFAULT) -> Decomposition:
    """K_{p,q}^d(b) as a multiset of n-partitions (Schur functor labels)."""
    if not qy.defined:
        return Decomposition(qy.N)
    return homology_decomposition(qy.N, qy.d, qy.degree, config)


def is_trivial_entry(dec: Decomposition) -> bool:
    """The one-dimensional entry K_{0,0}(0) = K, labelled by empty partitions."""
    return dec.terms == {NPartition((Partition(),) * len(dec.N)): 1}


def render_entry(dec: Decomposition) -> str:
    if is_trivial_entry(dec):
        return "K"
    return dec.bracket(empty="-")


@dataclass
class BettiTable:
    pmax: int
    qmax: int
    d: tuple
    b: tuple
    grid: dict = field(default_factory=dict)

    def __getitem__(self, pq) -> Decomposition:
        return self.grid[pq]

    def render(self) -> str:
        """Rows q, columns p; '-' marks a zero entry and 'K' the ground field."""
        header = ["q\\p"] + [str(p) for p in range(self.pmax + 1)]
        rows = [header]
        for q in range(self.qmax + 1):
            rows.append([str(q)] + [render_entry(self.grid[(p, q)]) for p in range(self.pmax + 1)])
        widths = [max(len(r[i]) for r in rows) for i in range(len(header))]
        lines = [" | ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip() for r in rows]
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {
            "pmax": self.pmax,
            "qmax": self.qmax,
            "d": list(self.d),
            "b": list(self.b),
            "entries": [
                entry_json(SyzygyQuery(p, q, self.d, self.b), self.grid[(p, q)])
                for q in range(self.qmax + 1)
                for p in range(self.pmax + 1)
            ],
        }


def entry_json(qy: SyzygyQuery, dec: Decomposition) -> dict:
    return {"p": qy.p, "q": qy.q, "d": list(qy.d), "b": list(qy.b), "entries": dec.to_json()}


def betti_table(pmax: int, qmax: int, d, b=None, config: Config = DEFAULT) -> BettiTable:
    d = tuple(d)
    b = tuple(b) if b is not None else (0,) * len(d)
    table = BettiTable(pmax, qmax, d, b)
    for q in range(qmax + 1):
        for p in range(pmax + 1):
            table.grid[(p, q)] = betti_entry(SyzygyQuery(p, q, d, b), config)
    return table


# -- vanishing -------------------------------------------------------------------

def vanishing_predicates(qy: SyzygyQuery) -> dict:
    """Which known bounds force K_{p,q}^d(b) = 0.

    athanasiadis: N_i >= p (d_i + 1) + d_i for all i, so H~_{p-1} vanishes.
    np_bound: q = 2 and p <= min(d_i + b_i).
    """
    N = qy.N
    ath = all(Ni >= qy.p * (di + 1) + di for Ni, di in zip(N, qy.d))
    np_bound = qy.q == 2 and qy.p <= min(di + bi for di, bi in zip(qy.d, qy.b))
    return {"athanasiadis": ath, "np_bound": np_bound}


# -- closed forms ----------------------------------------------------------------

def linear_strand_segre(p: int, a: int, n: int) -> Decomposition:
    """K_{p,0}(a) for the Segre embedding, d = (1,...,1), b = (a,0,...,0).

    Each constituent S_l1 (x) ... (x) S_ln of Lambda^p(V1 (x) ... (x) Vn)
    contributes S_{l1[p+a]} (x) S_l2 (x) ...; the padded functor is zero
    when l1 has first row longer than a.
    """
    if p < 0 or a < 0 or n < 1:
        raise ValueError("need p, a >= 0 and n >= 1")
    N = (p + a,) + (p,) * (n - 1)
    terms = {}
    for lam, m in wedge_tensor_multiplicities(p, n).items():
        head = pad_partition(lam[0], p + a)
        if head is None:
            continue
        key = NPartition((head,) + tuple(lam[1:]))
        terms[key] = terms.get(key, 0) + m
    return Decomposition(N, terms)


def linear_strand_veronese(p: int, d: int) -> Decomposition:
    """K_{p,0}^d(1) on P(V): S_lam~ over Sym^p(Sym^{d-1}) constituents lam.

    lam~ = (1 + lam_1, ..., 1 + lam_p, 1) adds a column of height p + 1.
    At d = 1 this describes the syzygies of the maximal ideal; the 3-term
    Koszul complex there has H^0(O(0)) = K, so K_{p,0}^1(1) itself is 0.
    """
    if p < 0 or d < 1:
        raise ValueError("need p >= 0 and d >= 1")
    terms = {}
    for lam, m in sym_sym_multiplicities(p, d - 1).items():
        tilde = Partition([1 + lam.part(i) for i in range(p)] + [1])
        key = NPartition((tilde,))
        terms[key] = terms.get(key, 0) + m
    return Decomposition((p * d + 1,), terms)


def mpower_resolution(a: int, pmax: int) -> list:
    """Shapes S_{a,1^p} V in the minimal free resolution of m^a, p = 0..pmax."""
    if a < 1 or pmax < 0:
        raise ValueError("need a >= 1 and pmax >= 0")
    return [Partition((a,) + (1,) * p) for p in range(pmax + 1)]


def mpower_consistency(a: int, pmax: int, dim: int) -> bool:
    """Check the m^a shapes two ways.

    The Segre closed form at n = 1 gives Lambda^p V = S_{1^p} V, padded to
    (a, 1^p).  Independently, the p-th syzygies of m^a in degree a + p are the
    kernel of Lambda^p V (x) S_a V -> Lambda^{p-1} V (x) S_{a+1} V, whose
    dimension must equal dim S_{a,1^p}(K^dim).
    """
    shapes = mpower_resolution(a, pmax)
    for p, shape in enumerate(shapes):
        wedge = wedge_tensor_multiplicities(p, 1, check=False)
        padded = {pad_partition(lam[0], p + a): m for lam, m in wedge.items()}
        if padded != {shape: 1}:
            return False
        if _koszul_kernel_dim(p, a, dim) != weyl_dim(shape, dim):
            return False
    return True


def _koszul_kernel_dim(p: int, a: int, m: int) -> int:
    basis = list(range(m))
    src = [(w, f) for w in combinations(basis, p) for f in monomials(m, a)]
    tgt_index = {}
    cols = []
    for w, f in src:
        col = {}
        for i, x in enumerate(w):
            rest = w[:i] + w[i + 1:]
            g = list(f)
            g[x] += 1
            key = (rest, tuple(g))
            r = tgt_index.setdefault(key, len(tgt_index))
            col[r] = col.get(r, 0) + (-1) ** i
        cols.append({r: v for r, v in col.items() if v})
    if p == 0:
        return len(src)
    return len(src) - len(reduce_columns(cols).lows)


# -- Koszul dimension oracle ---------------------------------------------------------

def _multi_monomials(dims, degs):
    """Monomial basis of Sym^{deg_1} V_1 (x) ... as tuples of exponent vectors."""
    if any(c < 0 for c in degs):
        return []
    out = [()]
    for m, c in zip(dims, degs):
        out = [x + (mon,) for x in out for mon in monomials(m, c)]
    return out


def _mul(f, g):
    return tuple(tuple(a + b for a, b in zip(u, v)) for u, v in zip(f, g))


def _weight(f):
    return tuple(tuple(v) for v in f)


def koszul_dimension_oracle(qy: SyzygyQuery, dims, config: Config = DEFAULT) -> int:
    """dim K_{p,q}^d(b) for dim V_i = dims[i], from the 3-term wedge complex.

    W = H^0(O(d)) and H^0(O(c)) are spanned by multihomogeneous monomials.
    The complex splits into blocks by total torus weight, and each block is
    ranked exactly.
    """
    dims = tuple(int(x) for x in dims)
    if len(dims) != len(qy.d) or any(x < 1 for x in dims):
        raise ValueError(f"dims={dims} must be positive and match d={qy.d}")
    p, q, d, b = qy.p, qy.q, qy.d, qy.b
    W = _multi_monomials(dims, d)
    nW = len(W)

    def h0(t):
        return _multi_monomials(dims, [t * di + bi for di, bi in zip(d, b)])

    def size(k, t):
        if k < 0 or k > nW:
            return 0
        return comb(nW, k) * len(h0(t))

    sizes = (size(p + 1, q - 1), size(p, q), size(p - 1, q + 1))
    if max(sizes) * nW > config.max_oracle_entries:
        raise ResourceLimitError(f"Koszul oracle for {qy} at dims {dims} exceeds the entry cap")

    H_mid = h0(q)
    if p > nW or not H_mid:
        return 0

    # weight of a wedge-tensor-section basis element
    def blocks(k, t):
        out = defaultdict(list)
        if k < 0 or k > nW:
            return out
        sections = h0(t)
        for ws in combinations(range(nW), k):
            wsum = None
            for i in ws:
                wsum = W[i] if wsum is None else _mul(wsum, W[i])
            for f in sections:
                wt = f if wsum is None else _mul(wsum, f)
                out[_weight(wt)].append((ws, f))
        return out

    mid = blocks(p, q)
    upper = blocks(p + 1, q - 1)
    lower_index = {}

    total = 0
    for wt, basis in mid.items():
        index = {elt: i for i, elt in enumerate(basis)}
        # d: Lambda^{p+1} W (x) H^0(q-1) -> Lambda^p W (x) H^0(q) into this block
        cols_in = [_koszul_column(elt, W, index) for elt in upper.get(wt, [])]
        rank_in = len(reduce_columns(cols_in).lows) if cols_in else 0
        # d: this block -> Lambda^{p-1} W (x) H^0(q+1)
        lower_index.clear()
        cols_out = [_koszul_column(elt, W, lower_index, grow=True) for elt in basis] if p > 0 else []
        rank_out = len(reduce_columns(cols_out).lows) if cols_out else 0
        total += len(basis) - rank_in - rank_out
    return total


def _koszul_column(elt, W, index, grow=False) -> dict:
    """d(w_1 ^ ... ^ w_k (x) f) = sum_i (-1)^i (... w_i omitted ...) (x) w_i f."""
    ws, f = elt
    col = {}
    for i, x in enumerate(ws):
        key = (ws[:i] + ws[i + 1:], _mul(W[x], f))
        if grow:
            r = index.setdefault(key, len(index))
        else:
            r = index[key]
        v = col.get(r, 0) + (-1) ** i
        if v:
            col[r] = v
        else:
            col.pop(r, None)
    return col


def gl_dimension(dec: Decomposition, dims) -> int:
    """sum_lam m_lam prod_i dim S_{lam^i}(K^{dims_i})."""
    return sum(m * prod(weyl_dim(c, k) for c, k in zip(lam, dims)) for lam, m in dec)


# -- top Laplacian of C_(p+a, p, ..., p) ----------------------------------------------

@dataclass
class SpectrumReport:
    p: int
    a: int
    n: int
    spectrum: Optional[list]
    allowed: list
    kernel_dim: int
    expected_kernel_dim: int

    @property
    def ok(self) -> bool:
        if self.spectrum is None:
            return False
        return (
            all(x >= 0 and x in self.allowed for x in self.spectrum)
            and self.kernel_dim == self.expected_kernel_dim
        )

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "a": self.a,
            "n": self.n,
            "spectrum": self.spectrum,
            "allowed": self.allowed,
            "kernel_dim": self.kernel_dim,
            "expected_kernel_dim": self.expected_kernel_dim,
            "ok": self.ok,
        }


def allowed_eigenvalues(p: int, a: int) -> list:
    """C(lam) - C(mu) + p - binom(a, 2) over mu |- p and lam = mu plus a horizontal a-strip."""
    from .partitions import content, partitions_of, pieri_row

    vals = set()
    for mu in partitions_of(p):
        for lam in pieri_row(mu, a):
            vals.add(content(lam) - content(mu) + p - comb(a, 2))
    return sorted(vals)


def top_laplacian_check(p: int, a: int, n: int = 2, config: Config = DEFAULT) -> SpectrumReport:
    """Spectrum of d^T d on the top chains of C_(p+a, p, ..., p)^(1, ..., 1).

    The top chains have p vertices, so the Laplacian acts on C_{p-1} and uses
    the augmented boundary (at p = 1 it maps onto the empty simplex).
    """
    from .complex import PackingComplex
    from .linalg import laplacian, integer_spectrum

    if p < 1 or a < 0 or n < 2:
        raise ValueError("need p >= 1, a >= 0 and n >= 2")
    N = (p + a,) + (p,) * (n - 1)
    cx = PackingComplex(N, (1,) * n, max_simplices=config.max_simplices)
    eigs = integer_spectrum(laplacian(cx.boundary(p - 1), None))
    kernel = eigs.count(0) if eigs is not None else -1
    expected = linear_strand_segre(p, a, n).dimension()
    return SpectrumReport(p, a, n, eigs, allowed_eigenvalues(p, a), kernel, expected)
