from hypothesis import given, strategies as st

from packsyz.partitions import (
    NPartition,
    Partition,
    content,
    dominates,
    hook_lengths,
    num_syt,
    pad,
    pad_partition,
    parse_bracket,
    partitions_of,
    pieri_row,
    unpad,
    weyl_dim,
    young_diagram,
)
from tests import oracles, reference_text
from tests.frozen import KOSTKA


def P(*parts):
    return Partition(parts)


def test_pad_worked_example():
    src = reference_text.text()
    assert r"$\ll=((3,1),(2,2,1))$ and $\underline{N}=(8,7)$" in src
    assert r"$\ll[\underline{N}]=((4,3,1),(2,2,2,1))$" in src
    lam = NPartition((P(3, 1), P(2, 2, 1)))
    assert pad(lam, (8, 7)) == NPartition((P(4, 3, 1), P(2, 2, 2, 1)))


def test_pad_undefined():
    assert "is not defined" in reference_text.text()
    assert pad(NPartition((P(3, 1), P(2, 2, 1))), (8, 6)) is None


def test_unpad_inverts_example():
    assert unpad(NPartition((P(4, 3, 1), P(2, 2, 2, 1)))) == NPartition((P(3, 1), P(2, 2, 1)))


def test_content_example():
    assert "C_{\\delta}=9" in reference_text.text()
    assert content(P(6, 3, 3, 1)) == 9


def test_pieri_from_example():
    # Ind of (1,1) from S_2 x S_1 gives (2,1) + (1,1,1)
    assert set(pieri_row(P(1, 1), 1)) == {P(2, 1), P(1, 1, 1)}


def _brute_strips(lam, k):
    n = lam.size + k
    return {mu for mu in partitions_of(n)
            if all(mu.part(i) >= lam.part(i) for i in range(len(mu) + 1))
            and all(mu.part(i + 1) <= lam.part(i) for i in range(len(mu)))}


def test_pieri_two_boxes_on_a_row():
    assert set(pieri_row(P(2), 2)) == {P(4), P(3, 1), P(2, 2)} == _brute_strips(P(2), 2)


@given(st.integers(0, 6).flatmap(lambda n: st.sampled_from(partitions_of(n))), st.integers(0, 4))
def test_pieri_matches_brute_force(lam, k):
    assert set(pieri_row(lam, k)) == _brute_strips(lam, k)


def test_weyl_dims():
    assert weyl_dim(P(1, 1), 3) == 3
    assert weyl_dim(P(2, 1), 3) == 8


@given(st.integers(1, 6).flatmap(lambda n: st.sampled_from(partitions_of(n))), st.integers(1, 4))
def test_weyl_dim_matches_oracle(lam, m):
    assert weyl_dim(lam, m) == oracles.weyl_dim(tuple(lam), m)


@given(st.integers(1, 6).flatmap(lambda n: st.sampled_from(partitions_of(n))))
def test_hook_length_formula_counts_tableaux(lam):
    assert num_syt(lam) == oracles.ssyt_count(tuple(lam), (1,) * lam.size)
    assert len(hook_lengths(lam)) == lam.size


def test_kostka_frozen():
    for (lam, mu), k in KOSTKA.items():
        assert oracles.ssyt_count(lam, mu) == k


@given(st.integers(0, 7).flatmap(lambda n: st.sampled_from(partitions_of(n))), st.integers(0, 12))
def test_unpad_pad_roundtrip(delta, m):
    padded = pad_partition(delta, m)
    if padded is None:
        assert m - delta.size < delta.part(0)
    else:
        assert padded.size == m
        assert Partition(padded[1:]) == delta


@given(st.lists(st.integers(0, 5).flatmap(lambda n: st.sampled_from(partitions_of(n))), min_size=1, max_size=3))
def test_bracket_roundtrip(parts):
    lam = NPartition(parts)
    assert parse_bracket(lam.bracket()) == lam


def test_dominance_and_diagram():
    assert dominates(P(3, 1), P(2, 2)) and not dominates(P(2, 2), P(3, 1))
    assert young_diagram(P(2, 1)) == "□□\n□"
    assert young_diagram(P()) == "∅"


def test_partition_rejects_bad_input():
    import pytest

    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, -1))
