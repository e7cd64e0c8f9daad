from itertools import product

import jsonschema
import pytest
from hypothesis import assume, given, strategies as st

from packsyz.characters import Decomposition
from packsyz.partitions import NPartition, Partition
from packsyz.render import BETTI_ENTRY_SCHEMA, BETTI_TABLE_SCHEMA
from packsyz.syzygy import (
    SyzygyQuery,
    allowed_eigenvalues,
    betti_entry,
    betti_table,
    entry_json,
    gl_dimension,
    koszul_dimension_oracle,
    linear_strand_segre,
    linear_strand_veronese,
    mpower_consistency,
    mpower_resolution,
    render_entry,
    top_laplacian_check,
    vanishing_predicates,
)
from packsyz.complex import ResourceLimitError
from packsyz.config import Config
from tests import reference_text
from tests.conftest import dec


def segre_query(p, a, n):
    return SyzygyQuery(p, 0, (1,) * n, (a,) + (0,) * (n - 1))


def test_small_entries_against_figure():
    fig = reference_text.betti_figure()
    assert betti_entry(SyzygyQuery(1, 1, (1, 1), (0, 0))) == dec((2, 2), fig[(1, 1)])
    assert betti_entry(SyzygyQuery(2, 1, (1, 1), (0, 0))) == dec((3, 3), fig[(2, 1)])
    assert fig[(0, 0)] == "K"
    assert render_entry(betti_entry(SyzygyQuery(0, 0, (1, 1), (0, 0)))) == "K"


def test_table_corner_and_dashes():
    table = betti_table(1, 2, (1, 1), (0, 0))
    text = table.render()
    assert text.splitlines()[0].split("|")[0].strip() == "q\\p"
    assert [render_entry(table[(p, 0)]) for p in range(2)] == ["K", "-"]
    assert render_entry(table[(1, 1)]) == "(1,1)x(1,1)"
    jsonschema.validate(table.to_json(), BETTI_TABLE_SCHEMA)


def test_undefined_query_is_empty():
    qy = SyzygyQuery(0, 0, (1, 1), (-1, 0))
    assert not qy.defined
    assert not betti_entry(qy)
    jsonschema.validate(entry_json(qy, betti_entry(qy)), BETTI_ENTRY_SCHEMA)


@given(st.integers(0, 3), st.integers(0, 1), st.sampled_from([(1, 1), (1, 2), (2, 1)]), st.data())
def test_shift_identity(p, q, d, data):
    b = tuple(data.draw(st.integers(di, di + 1)) for di in d)
    # keep the complexes desk-sized
    assume(sum((p + q) * di + bi for di, bi in zip(d, b)) <= 11)
    shifted = tuple(bi - di for bi, di in zip(b, d))
    lhs = betti_entry(SyzygyQuery(p, q, d, b))
    rhs = betti_entry(SyzygyQuery(p, q + 1, d, shifted))
    assert lhs == rhs


def test_shift_identity_in_reference():
    assert r"K_{p,q}(\mc{B}_{\ul{b}})=K_{p,q+1}(\mc{B}_{\ul{b}}\otimes\mc{L}^{-1})" in reference_text.text()


def test_vanishing_predicate_examples():
    assert vanishing_predicates(SyzygyQuery(1, 2, (2, 2), (0, 0)))["np_bound"]
    qy = SyzygyQuery(3, 0, (1, 1), (5, 5))
    assert all(Ni >= 3 * (di + 1) + di for Ni, di in zip(qy.N, qy.d))
    assert vanishing_predicates(qy)["athanasiadis"]


@given(st.integers(0, 3), st.sampled_from([(1, 1), (1, 2), (2, 2)]), st.tuples(st.integers(0, 1), st.integers(0, 1)))
def test_quadratic_strand_vanishing_never_contradicted(p, d, b):
    qy = SyzygyQuery(p, 2, d, b)
    if vanishing_predicates(qy)["np_bound"] and max(qy.N) <= 7:
        assert not betti_entry(qy)


def test_segre_examples():
    assert linear_strand_segre(2, 2, 2) == dec((4, 2), {((2, 2), (1, 1)): 1, ((2, 1, 1), (2,)): 1})
    for p in range(1, 4):
        assert not linear_strand_segre(p, 0, 2)


@pytest.mark.parametrize("n,p,a", [(n, p, a) for n in (2, 3) for p in range(3) for a in range(4)])
def test_segre_closed_form_matches_homology(n, p, a):
    assert linear_strand_segre(p, a, n) == betti_entry(segre_query(p, a, n))


def test_veronese_examples():
    for p in range(4):
        hook = Partition((p + 1,) + (1,) * p)
        assert linear_strand_veronese(p, 2) == Decomposition((2 * p + 1,), {NPartition((hook,)): 1})
    assert linear_strand_veronese(2, 3) == dec((7,), {((5, 1, 1),): 1, ((3, 3, 1),): 1})


@pytest.mark.parametrize("p,d", [(0, 2), (1, 2), (2, 2), (3, 2), (1, 3), (2, 3), (1, 4)])
def test_veronese_matches_homology(p, d):
    assert linear_strand_veronese(p, d) == betti_entry(SyzygyQuery(p, 0, (d,), (1,)))


def test_veronese_at_d_one_describes_the_maximal_ideal():
    # H^0(O(0)) = K makes the module free, so the Koszul groups vanish,
    # while the closed form gives the resolution of m
    for p in range(3):
        assert not betti_entry(SyzygyQuery(p, 0, (1,), (1,)))
        assert linear_strand_veronese(p, 1) == dec((p + 1,), {((1,) * (p + 1),): 1})


def test_mpower_resolution():
    src = reference_text.text()
    assert r"S_{a,1}V\otimes S(-a-1)\leftarrow S_{a,1^2}V\otimes S(-a-2)" in src
    assert mpower_resolution(2, 2) == [Partition((2,)), Partition((2, 1)), Partition((2, 1, 1))]
    for a in (1, 2, 3):
        assert mpower_consistency(a, 3, 3)


def test_koszul_oracle_minors():
    assert "spanned precisely by the $2\\times 2$ minors" in reference_text.text()
    qy = SyzygyQuery(1, 1, (1, 1), (0, 0))
    assert koszul_dimension_oracle(qy, (2, 2)) == 1
    assert koszul_dimension_oracle(qy, (3, 3)) == 9


@pytest.mark.parametrize("p,q,dims", [(p, q, dims) for p in range(3) for q in range(2) for dims in [(2, 2), (2, 3)]])
def test_koszul_oracle_matches_homology(p, q, dims):
    qy = SyzygyQuery(p, q, (1, 1), (0, 0))
    assert koszul_dimension_oracle(qy, dims) == gl_dimension(betti_entry(qy), dims)


def test_koszul_oracle_resource_cap():
    with pytest.raises(ResourceLimitError):
        koszul_dimension_oracle(SyzygyQuery(3, 1, (1, 1), (0, 0)), (3, 3), Config(max_oracle_entries=10))


def test_allowed_eigenvalues_small():
    assert allowed_eigenvalues(1, 0) == [1]
    assert 0 in allowed_eigenvalues(2, 1)


@pytest.mark.parametrize("p,a", list(product(range(1, 3), range(3))))
def test_top_laplacian(p, a):
    rep = top_laplacian_check(p, a)
    assert rep.ok, rep.to_json()


def test_top_laplacian_rejects_bad_input():
    with pytest.raises(ValueError):
        top_laplacian_check(0, 1)
