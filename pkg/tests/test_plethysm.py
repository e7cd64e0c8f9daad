from math import comb, prod

import pytest
from hypothesis import given, strategies as st

from packsyz.partitions import NPartition, Partition, partitions_of, weyl_dim
from packsyz.plethysm import (
    WeightMultiset,
    dimension_audit,
    kostka,
    newell_bar,
    newell_identity,
    schur_expand,
    sym_sym_multiplicities,
    sym_sym_weights,
    wedge_sym_multiplicities,
    wedge_sym_weights,
    wedge_tensor_multiplicities,
)
from tests import oracles, reference_text
from tests.frozen import SYM_SYM, WEDGE_SYM, WEDGE_TENSOR_2


def plain(mults):
    return {tuple(lam): c for lam, c in mults.items()}


def plain_multi(mults):
    return {tuple(tuple(c) for c in lam): m for lam, m in mults.items()}


@pytest.mark.parametrize("pe", sorted(SYM_SYM))
def test_sym_sym_frozen(pe):
    assert plain(sym_sym_multiplicities(*pe)) == SYM_SYM[pe]


@pytest.mark.parametrize("pd", sorted(WEDGE_SYM))
def test_wedge_sym_frozen(pd):
    assert plain(wedge_sym_multiplicities(*pd)) == WEDGE_SYM[pd]


@pytest.mark.parametrize("p", sorted(WEDGE_TENSOR_2))
def test_wedge_tensor_frozen(p):
    assert plain_multi(wedge_tensor_multiplicities(p, 2)) == WEDGE_TENSOR_2[p]


def test_frozen_small_cases_reproduce():
    assert oracles.sym_sym(2, 2, 3) == SYM_SYM[(2, 2)]
    assert oracles.wedge_sym(2, 3, 3) == WEDGE_SYM[(2, 3)]
    assert oracles.wedge_tensor_2(3, 3, 3) == WEDGE_TENSOR_2[3]


def test_weight_elimination_examples():
    assert plain(schur_expand(sym_sym_weights(2, 2, 3))) == {(4,): 1, (2, 2): 1}
    assert plain(schur_expand(wedge_sym_weights(2, 2, 3))) == {(3, 1): 1}


def test_two_fold_cauchy():
    assert plain_multi(wedge_tensor_multiplicities(2, 2)) == {((2,), (1, 1)): 1, ((1, 1), (2,)): 1}
    assert plain_multi(wedge_tensor_multiplicities(3, 2)) == {
        ((3,), (1, 1, 1)): 1, ((1, 1, 1), (3,)): 1, ((2, 1), (2, 1)): 1}


@given(st.integers(1, 3), st.integers(1, 3), st.integers(1, 2))
def test_more_variables_change_nothing(p, e, extra):
    assert sym_sym_multiplicities(p, e) == sym_sym_multiplicities(p, e, m=p + extra)
    assert wedge_sym_multiplicities(p, e) == wedge_sym_multiplicities(p, e, m=p + extra)


@given(st.integers(1, 3), st.integers(1, 3), st.integers(1, 4))
def test_dimension_audits(p, e, m):
    ss = sym_sym_multiplicities(p, e)
    assert dimension_audit(ss, m, comb(comb(m + e - 1, e) + p - 1, p))
    ws = wedge_sym_multiplicities(p, e)
    assert dimension_audit(ws, m, comb(comb(m + e - 1, e), p))


@pytest.mark.parametrize("p,n", [(2, 3), (3, 3), (4, 2)])
def test_wedge_tensor_dimension(p, n):
    mults = wedge_tensor_multiplicities(p, n)
    for dims in [(2,) * n, (3,) * n, tuple(range(2, 2 + n))]:
        total = sum(m * prod(weyl_dim(c, k) for c, k in zip(lam, dims)) for lam, m in mults.items())
        assert total == comb(prod(dims), p)


@given(st.integers(1, 6).flatmap(lambda n: st.tuples(st.sampled_from(partitions_of(n)), st.sampled_from(partitions_of(n)))))
def test_kostka_against_tableau_count(pair):
    lam, mu = pair
    assert kostka(tuple(lam), tuple(mu)) == oracles.ssyt_count(tuple(lam), tuple(mu))


@pytest.mark.parametrize("p,d", [(p, d) for p in range(1, 4) for d in range(1, 5)])
def test_newell_identity(p, d):
    assert r"\overline{\ll}=(1+\ll_1,\cdots,1+\ll_p)" in reference_text.text()
    assert newell_identity(p, d)


def test_newell_bar():
    assert newell_bar(Partition((2,)), 3) == Partition((3, 1, 1))


def test_mixed_degree_weights_rejected():
    with pytest.raises(ValueError):
        WeightMultiset(2, [(1, 0), (2, 0)])


def test_too_few_variables():
    with pytest.raises(ValueError):
        wedge_sym_multiplicities(4, 1, m=2)


def test_degenerate_cases():
    assert plain(sym_sym_multiplicities(0, 3)) == {(): 1}
    assert plain(sym_sym_multiplicities(3, 0)) == {(): 1}
    assert plain(wedge_sym_multiplicities(0, 2)) == {(): 1}
    assert plain_multi(wedge_tensor_multiplicities(1, 3)) == {((1,), (1,), (1,)): 1}
    assert NPartition((Partition(),)) in wedge_tensor_multiplicities(0, 1)
