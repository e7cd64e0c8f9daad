"""Verification suites behind ``packsyz verify``.

Each suite returns a list of Check records; a suite passes when every check
does.  Reference values are the published two-factor Segre table and worked
examples, written out below as literals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Callable

from .characters import (
    ClassFunction,
    Decomposition,
    character_table,
    dimension_of,
    induce,
    restrict,
    z_factor,
)
from .complex import PackingComplex
from .config import DEFAULT, Config
from .equivariant import homology_character, homology_decomposition, homology_dimension, hopf_trace_check
from .linalg import laplacian, rank
from .partitions import NPartition, Partition, npartitions_of, parse_bracket, partitions_of
from .plethysm import newell_identity
from .stability import les_consistency, stable_range_scan, syzygy_stability_check
from .syzygy import (
    SyzygyQuery,
    betti_entry,
    betti_table,
    gl_dimension,
    koszul_dimension_oracle,
    linear_strand_segre,
    linear_strand_veronese,
    top_laplacian_check,
    vanishing_predicates,
)


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        tag = "PASS" if self.ok else "FAIL"
        return f"{tag} {self.name}" + (f": {self.detail}" if self.detail and not self.ok else "")


def _dec(N, *brackets) -> Decomposition:
    terms = {}
    for b in brackets:
        lam = parse_bracket(b)
        terms[lam] = terms.get(lam, 0) + 1
    return Decomposition(N, terms)


# Two-factor Segre table, d = (1,1), b = (0,0): (p, q) -> constituents.
# "K" is the ground field; an empty list is a dash.
GOLDEN_TABLE = {
    (0, 0): "K",
    (1, 0): [], (2, 0): [], (3, 0): [], (4, 0): [],
    (0, 1): [],
    (1, 1): ["(1,1)x(1,1)"],
    (2, 1): ["(2,1)x(1,1,1)", "(1,1,1)x(2,1)"],
    (3, 1): ["(3,1)x(1,1,1,1)", "(2,1,1)x(2,1,1)", "(1,1,1,1)x(3,1)"],
    (4, 1): ["(4,1)x(1,1,1,1,1)", "(3,1,1)x(2,1,1,1)", "(2,1,1,1)x(3,1,1)", "(1,1,1,1,1)x(4,1)"],
    (0, 2): [], (1, 2): [], (2, 2): [], (3, 2): [],
    (4, 2): ["(2,2,2)x(2,2,2)"],
}


def golden_entry(p: int, q: int) -> Decomposition:
    N = (p + q, p + q)
    entry = GOLDEN_TABLE[(p, q)]
    if entry == "K":
        return Decomposition(N, {NPartition((Partition(), Partition())): 1})
    return _dec(N, *entry)


def suite_figure1(config: Config = DEFAULT) -> list[Check]:
    table = betti_table(4, 2, (1, 1), (0, 0), config)
    out = []
    for (p, q) in sorted(GOLDEN_TABLE, key=lambda t: (t[1], t[0])):
        got, want = table[(p, q)], golden_entry(p, q)
        out.append(Check(f"figure1 K_{p},{q}", got == want, f"got {got.bracket()}, want {want.bracket()}"))
    return out


def suite_examples(config: Config = DEFAULT) -> list[Check]:
    cases = [
        ("H~_0 C_(2,2)", (2, 2), 0, _dec((2, 2), "(1,1)x(1,1)")),
        ("H~_1 C_(3,2)", (3, 2), 1, _dec((3, 2), "(1,1,1)x(2)")),
        ("H~_1 C_(3,3)", (3, 3), 1, _dec((3, 3), "(1,1,1)x(2,1)", "(2,1)x(1,1,1)")),
        ("H~_0 C_(3,3)", (3, 3), 0, Decomposition((3, 3))),
    ]
    out = []
    for name, N, k, want in cases:
        got = homology_decomposition(N, (1, 1), k, config)
        out.append(Check(name, got == want, f"got {got.bracket()}, want {want.bracket()}"))
    # the two transpositions act by -1 on H~_0 C_(2,2)
    chi = homology_character((2, 2), (1, 1), 0, config)
    signs = chi[((2,), (1, 1))] == -1 and chi[((1, 1), (2,))] == -1
    out.append(Check("transpositions act by -1 on H~_0 C_(2,2)", signs))
    # the exact sequence 0 -> H~_1 C_(3,2) -> H~_1 C_(3,3) -> Ind H~_0 C_(2,2) -> 0
    les = les_consistency((3, 3), (1, 1), 1, config=config)
    dims = les.dims[1][1], les.dims[1][2], les.dims[0][0]
    out.append(Check("exact sequence dimensions 1 + 3 = 4", les.ok and dims == (1, 4, 3), f"dims {dims}"))
    return out


def suite_linear_strand(config: Config = DEFAULT) -> list[Check]:
    out = []
    for n, p, a in product((2, 3), range(4), range(4)):
        closed = linear_strand_segre(p, a, n)
        direct = betti_entry(SyzygyQuery(p, 0, (1,) * n, (a,) + (0,) * (n - 1)), config)
        out.append(Check(f"segre strand n={n} p={p} a={a}", closed == direct,
                         f"closed form {closed.bracket()}, homology {direct.bracket()}"))
    # d = 1 is excluded: there H^0(O(0)) = K makes the module free and K_{p,0}^1(1) = 0,
    # while the closed form gives the syzygies of the maximal ideal instead
    for p, d in [(0, 2), (1, 2), (2, 2), (3, 2), (0, 3), (1, 3), (2, 3), (1, 4)]:
        closed = linear_strand_veronese(p, d)
        direct = betti_entry(SyzygyQuery(p, 0, (d,), (1,)), config)
        out.append(Check(f"veronese strand p={p} d={d}", closed == direct,
                         f"closed form {closed.bracket()}, homology {direct.bracket()}"))
    return out


def suite_newell(config: Config = DEFAULT) -> list[Check]:
    return [Check(f"newell p={p} d={d}", newell_identity(p, d)) for p in range(1, 4) for d in range(1, 5)]


VANISHING_DS = ((1, 1), (1, 2), (2, 2))


def suite_vanishing(config: Config = DEFAULT, nmax: int = 7) -> list[Check]:
    out = []
    bad_h, bad_np, count_h, count_np = [], [], 0, 0
    for d in VANISHING_DS:
        for N in product(range(nmax + 1), repeat=2):
            p = 0
            while all(Ni >= p * (di + 1) + di for Ni, di in zip(N, d)):
                count_h += 1
                if homology_dimension(N, d, p - 1, config):
                    bad_h.append((N, d, p))
                p += 1
        for b in product((0, 1), repeat=2):
            p = 0
            while True:
                qy = SyzygyQuery(p, 2, d, b)
                if not vanishing_predicates(qy)["np_bound"]:
                    break
                if all(x <= nmax for x in qy.N):
                    count_np += 1
                    if homology_dimension(qy.N, d, p - 1, config):
                        bad_np.append((p, d, b))
                p += 1
    out.append(Check(f"H~_(p-1) = 0 above the vanishing bound ({count_h} cases)", not bad_h, str(bad_h[:5])))
    out.append(Check(f"K_(p,2) = 0 for p <= min(d_i + b_i) ({count_np} cases)", not bad_np, str(bad_np[:5])))
    return out


def suite_stability(config: Config = DEFAULT) -> list[Check]:
    out = []
    for k, N2 in product((0, 1), (2, 3)):
        bound = 2 * N2
        rep = stable_range_scan((1, 1), k, {1: N2}, (1,), (bound + 2,), config)
        seen = rep.stable_from[0] if rep.stable_from else None
        out.append(Check(f"scan d=(1,1) k={k} N2={N2}: stable from N1={seen}, bound {bound}",
                         rep.passed and rep.margin_ok, rep.render()))
    for p in (1, 2, 3):
        rep = syzygy_stability_check(p, 0, (1, 1), {1: 0}, (0,), (p + 2,), config)
        seen = rep.stable_from[0] if rep.stable_from else None
        out.append(Check(f"K_{p},0(a) stable from a={seen}, sharp at a={p}",
                         rep.passed and rep.sharp is True and rep.stable_from == (p,), rep.render()))
    rep = syzygy_stability_check(1, 1, (1, 1), {1: 0}, (1,), (4,), config)
    out.append(Check("K_1,1(b1,0) stable by b1=2", rep.passed, rep.render()))
    return out


LES_CASES_11 = [((a, b), (1, 1)) for a in range(1, 5) for b in range(1, 5)]
LES_CASES_12 = [((a, b), (1, 2)) for a in range(1, 6) for b in range(2, 5)]


def suite_les(config: Config = DEFAULT) -> list[Check]:
    out = []
    for N, d in LES_CASES_11 + LES_CASES_12:
        for i in range(2):
            rep = les_consistency(N, d, i, config=config)
            out.append(Check(f"les N={N} d={d} i={i}", rep.ok, f"fails at {[r.bracket() for r in rep.failures]}"))
    return out


def suite_spectra(config: Config = DEFAULT) -> list[Check]:
    out = []
    for p, a in product(range(1, 4), range(3)):
        rep = top_laplacian_check(p, a, 2, config)
        out.append(Check(f"laplacian C_({p + a},{p}) spectrum in allowed set, kernel {rep.kernel_dim}",
                         rep.ok, str(rep.to_json())))
    return out


ORACLE_DIMS = ((2, 2), (3, 3))


def suite_oracle(config: Config = DEFAULT) -> list[Check]:
    out = []
    for p, q, dims in product(range(4), range(3), ORACLE_DIMS):
        qy = SyzygyQuery(p, q, (1, 1), (0, 0))
        direct = koszul_dimension_oracle(qy, dims, config)
        via = gl_dimension(betti_entry(qy, config), dims)
        out.append(Check(f"koszul dim K_{p},{q} at dims {dims} = {direct}", direct == via, f"representation side {via}"))
    return out


STRUCTURAL_COMPLEXES = [
    ((2, 2), (1, 1)), ((3, 3), (1, 1)), ((4, 3), (1, 1)), ((4, 4), (1, 1)),
    ((3, 4), (1, 2)), ((5, 4), (1, 2)), ((4, 4), (2, 2)), ((5,), (2,)), ((6,), (2,)),
    ((3, 2, 2), (1, 1, 1)), ((1, 1), (2, 1)),
]


def suite_structural(config: Config = DEFAULT) -> list[Check]:
    out = []
    for N, d in STRUCTURAL_COMPLEXES:
        cx = PackingComplex(N, d, max_simplices=config.max_simplices)
        dd = all((cx.boundary(k) @ cx.boundary(k + 1)).is_zero() for k in range(-1, cx.max_dim))
        out.append(Check(f"boundary squares to zero on C_{N}^{d}", dd))
        rep = hopf_trace_check(N, d, config)
        out.append(Check(f"hopf trace identity on C_{N}^{d}", rep.ok, str(rep.to_json())))
        harmonic = True
        for k in range(-1, cx.max_dim + 1):
            bk = cx.boundary(k)
            bk1 = cx.boundary(k + 1)
            if cx.count(k) > 400:
                continue
            lap = laplacian(bk, bk1)
            kernel = cx.count(k) - rank(lap)
            if kernel != homology_dimension(N, d, k, config):
                harmonic = False
        out.append(Check(f"harmonic rank equals homology rank on C_{N}^{d}", harmonic))
    out.append(Check("character orthogonality for S_n, n <= 8", all(_orthogonal(n) for n in range(1, 9))))
    out.append(Check("frobenius reciprocity samples", _frobenius_samples()))
    out.extend(suite_les(config))
    return out


def _orthogonal(n: int) -> bool:
    parts = partitions_of(n)
    table = character_table(n)
    for i, j in product(range(len(parts)), repeat=2):
        s = sum(Fraction(table[i][c] * table[j][c], z_factor(rho)) for c, rho in enumerate(parts))
        if s != (i == j):
            return False
    return True


def _frobenius_samples() -> bool:
    """sum_psi dim(psi) <Ind(chi x psi), mu> = <chi, Res mu>, Res fixing the extra points."""
    cases = [((2, 1), (3, 2)), ((3,), (5,)), ((2, 2), (4, 3)), ((1, 2), (3, 3))]
    for small, big in cases:
        rest = tuple(b - a for a, b in zip(small, big))
        for lam in npartitions_of(small):
            chi = ClassFunction.irreducible(lam)
            for mu in npartitions_of(big):
                irr = ClassFunction.irreducible(mu)
                lhs = sum(
                    dimension_of(psi) * induce(chi, big, filler=psi).inner(irr) for psi in npartitions_of(rest)
                )
                if lhs != chi.inner(restrict(irr, small)):
                    return False
    return True


SUITES: dict[str, Callable[..., list[Check]]] = {
    "figure1": suite_figure1,
    "examples": suite_examples,
    "linear-strand": suite_linear_strand,
    "newell": suite_newell,
    "vanishing": suite_vanishing,
    "stability": suite_stability,
    "les": suite_les,
    "spectra": suite_spectra,
    "oracle": suite_oracle,
    "structural": suite_structural,
}


def run_suite(name: str, config: Config = DEFAULT) -> list[Check]:
    if name == "all":
        out = []
        for key, fn in SUITES.items():
            out.extend(fn(config))
        return out
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(list(SUITES) + ['all'])}")
    return SUITES[name](config)
