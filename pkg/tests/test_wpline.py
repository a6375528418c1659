import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vvmf.wpline import (
    P46,
    InconsistentHilbertData,
    NegativeNumeratorCoefficient,
    SplittingType,
    WeightedLine,
    euler_line,
    euler_rr_p46,
    h0,
    h1,
    hilbert_from_splitting,
    line_bundle_rr_data,
    serre_check,
    splitting_from_hilbert,
)

PAIRS = [(1, 1), (1, 2), (2, 3), (4, 6)]


def series_h0(n1: int, n2: int, N: int) -> list[int]:
    """Coefficients of 1/((1 - x^n1)(1 - x^n2)) up to x^N."""
    c = [0] * (N + 1)
    c[0] = 1
    for n in (n1, n2):
        for k in range(n, N + 1):
            c[k] += c[k - n]
    return c


def brute_h1(n1: int, n2: int, k: int) -> int:
    return sum(1 for c in range(-abs(k) - 2, 0) for d in range(-abs(k) - 2, 0) if c * n1 + d * n2 == k)


@pytest.mark.parametrize("n1,n2", PAIRS)
def test_h0_matches_generating_function(n1, n2):
    W = WeightedLine(n1, n2)
    ref = series_h0(n1, n2, 150)
    assert [h0(W, k) for k in range(151)] == ref
    assert all(h0(W, k) == 0 for k in range(-50, 0))


@pytest.mark.parametrize("n1,n2", PAIRS)
def test_h1_matches_enumeration(n1, n2):
    W = WeightedLine(n1, n2)
    for k in range(-80, 20):
        assert h1(W, k) == brute_h1(n1, n2, k)


@pytest.mark.parametrize("n1,n2", PAIRS)
def test_serre_duality(n1, n2):
    W = WeightedLine(n1, n2)
    assert all(serre_check(W, k) for k in range(-500, 501))


def test_known_values_on_p46():
    assert h0(P46, 12) == 2
    assert [h0(P46, k) for k in range(0, 14)] == [1, 0, 0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 2, 0]
    assert h1(P46, -10) == 1
    assert h1(P46, -11) == 0


def test_riemann_roch_agrees_with_counting():
    for k in range(-200, 201):
        assert euler_rr_p46(**line_bundle_rr_data(k)) == euler_line(P46, k)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-30, 10), min_size=1, max_size=8))
def test_splitting_round_trip(twists):
    split = SplittingType(tuple(twists))
    lo = min(-a for a in split.summands)
    h = hilbert_from_splitting(P46, split, lo - 3, lo + 40 + max(twists) - min(twists))
    assert splitting_from_hilbert(P46, h, split.rank) == split


def test_splitting_refusals():
    with pytest.raises(InconsistentHilbertData):
        splitting_from_hilbert(P46, {0: 1, 1: 0}, 2)
    with pytest.raises(NegativeNumeratorCoefficient):
        splitting_from_hilbert(P46, {0: 2, 1: 0, 2: 0, 3: 0, 4: 0}, 2)
    with pytest.raises(InconsistentHilbertData):
        splitting_from_hilbert(P46, {0: 1, 2: 1}, 1)


def test_splitting_type_ops():
    s = SplittingType((-4, -2, -4))
    assert s.summands == (-2, -4, -4)
    assert str(s) == "O(-2) + 2O(-4)"
    assert s.twist(4).summands == (2, 0, 0)
    assert s.dual().summands == (4, 4, 2)
    assert s.h0(P46) == 0 and s.h1(P46) == 0
