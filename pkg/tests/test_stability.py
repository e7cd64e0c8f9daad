import pytest
from hypothesis import given, strategies as st

from packsyz.equivariant import homology_decomposition
from packsyz.partitions import NPartition, Partition
from packsyz.stability import (
    les_consistency,
    stable_range_scan,
    syzygy_stability_check,
    unpad_constituents,
)
from tests import reference_text


def np_(*comps):
    return NPartition(Partition(c) for c in comps)


def test_unpad_example_homology():
    h = homology_decomposition((3, 3), (1, 1), 1)
    assert unpad_constituents(h, [0]) == {np_((1, 1), (2, 1)): 1, np_((1,), (1, 1, 1)): 1}


def test_unpad_then_pad_recovers_every_constituent():
    h = homology_decomposition((4, 4), (1, 1), 2)
    for lam, m in unpad_constituents(h, [0, 1]).items():
        padded = NPartition(Partition((4 - c.size,) + tuple(c)) for c in lam)
        assert h[padded] == m


def test_bound_in_reference():
    assert r"holds for $N_i\geq 2m\cdot d_i$" in reference_text.text()


def test_scan_k0_fixed_two():
    r = stable_range_scan((1, 1), 0, {1: 2}, (2,), (6,))
    assert r.m == 2 and r.bound == (4,)
    assert r.passed and r.margin_ok
    assert r.stable_from[0] <= 4


def test_scan_k1_fixed_three():
    r = stable_range_scan((1, 1), 1, {1: 3}, (3,), (7,))
    assert r.m == 3 and r.bound == (6,)
    assert r.passed and r.stable_from[0] <= 6
    assert not r.margin_ok        # the window stops one short of bound + 2
    assert r.point((4,)).N == (4, 3)


def test_syzygy_sharpness():
    assert "so the inequality becomes $a\\geq p$" in reference_text.text()
    r = syzygy_stability_check(2, 0, (1, 1), {1: 0}, (0,), (4,))
    assert r.bound == (2,)
    assert r.passed and r.sharp
    assert r.point((1,)).unpadded != r.point((2,)).unpadded == r.point((4,)).unpadded


def test_syzygy_quadratic_scan():
    r = syzygy_stability_check(1, 1, (1, 1), {1: 0}, (1,), (3,))
    assert r.point((2,)).unpadded == r.point((3,)).unpadded
    assert r.passed


def test_scan_errors():
    with pytest.raises(ValueError):
        stable_range_scan((1, 1), 1, {1: 3}, (7,), (3,))
    with pytest.raises(ValueError):
        stable_range_scan((1, 1), 1, {}, (3, 3), (4, 4))
    with pytest.raises(ValueError):
        stable_range_scan((1, 1), 1, {5: 3}, (3,), (4,))
    with pytest.raises(ValueError):
        syzygy_stability_check(1, 0, (1, 1), {1: 1}, (0,), (2,))


def test_report_json_and_text():
    r = stable_range_scan((1, 1), 0, {1: 2}, (2,), (4,))
    js = r.to_json()
    assert js["kind"] == "homology" and js["fixed"] == {"1": 2}
    assert len(js["points"]) == 3
    assert r.render().splitlines()[0].startswith("homology scan")


def test_les_three_by_three():
    # H1(C_32) + Ind H0(C_22) = H1(C_33) restricted: 1 + 3 = 4
    r = les_consistency((3, 3), (1, 1), 1)
    assert r.ok
    assert r.dims[1] == (0, 1, 4) and r.dims[0] == (3, 0, 0)


def test_les_two_by_two():
    r = les_consistency((2, 2), (1, 1), 0)
    assert r.ok and r.dims[0] == (0, 1, 1)


def test_les_alpha_validation():
    les_consistency((3, 3), (1, 1), 1, alpha=((0,), (2,)))
    with pytest.raises(ValueError):
        les_consistency((3, 3), (1, 1), 1, alpha=((0,), (1,)))
    with pytest.raises(ValueError):
        les_consistency((3, 3), (1, 1), 1, alpha=((0, 1), (2,)))
    with pytest.raises(ValueError):
        les_consistency((3, 3), (1, 1), 4)


@given(st.sampled_from([(1, 1), (1, 2), (2, 1)]), st.integers(0, 4), st.integers(0, 4), st.integers(0, 1))
def test_les_always_consistent(d, a, b, i):
    N = (max(a, d[0]), max(b, d[1]))
    assert les_consistency(N, d, i).ok


@given(st.integers(0, 1), st.integers(1, 3))
def test_observed_stabilization_within_bound(k, N2):
    m = N2
    r = stable_range_scan((1, 1), k, {1: N2}, (1,), (2 * m + 2,))
    assert r.passed
