import cmath
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vvmf.catalog import TWO_DIM_ROWS, gamma2_cosets, s7_rep, two_dim_row
from vvmf.exact import CycMatrix
from vvmf.exponents import (
    CUSP,
    STANDARD,
    Interval,
    NotQuasiUnipotentWithinCap,
    SpectrumMismatch,
    TSpectrum,
    choose_exponents,
    cusp_exponents,
    eta_shifted,
    standard_exponents,
    t_spectrum,
    validate_spectrum,
)
from vvmf.rep import Repn, character, direct_sum, dual, standard_rep, tensor_char

from test_rep import BASES, small_reps

fractions = st.builds(Fraction, st.integers(-60, 60), st.integers(1, 24))


def numeric_rotations(rep: Repn) -> list[Fraction]:
    ev = np.linalg.eigvals(np.array(rep.T.to_complex()))
    out = []
    for z in ev:
        x = (cmath.phase(z) / (2 * cmath.pi)) % 1
        out.append(Fraction(x).limit_denominator(240) % 1)
    return sorted(out)


@settings(max_examples=40, deadline=None)
@given(small_reps())
def test_rotations_match_numeric_eigenvalues(rep):
    if rep.is_virtual:
        return
    assert t_spectrum(rep).rotations() == numeric_rotations(rep)


@settings(max_examples=30, deadline=None)
@given(small_reps())
def test_spectrum_routes_agree(rep):
    routes = {"dft": t_spectrum(rep, method="dft"), "ranks": t_spectrum(rep, method="ranks")}
    try:
        routes["diagonal"] = t_spectrum(rep, method="diagonal")
    except ValueError:
        pass
    first = routes.pop("dft")
    for name, spec in routes.items():
        assert spec == first, name


@settings(max_examples=30, deadline=None)
@given(small_reps(), st.integers(0, 11))
def test_spectrum_twist_and_dual(rep, a):
    spec = t_spectrum(rep)
    assert t_spectrum(tensor_char(rep, a)) == spec.twist(a)
    assert t_spectrum(dual(rep)) == spec.dual()


def test_unipotent_block_found_by_ranks():
    spec = t_spectrum(standard_rep())
    assert [(e.rotation, e.block, e.parity, e.mult) for e in spec.entries] == [(0, 2, -1, 1)]
    assert not spec.is_semisimple
    with pytest.raises(ValueError):
        t_spectrum(standard_rep(), method="dft")


def test_mixed_jordan_and_semisimple():
    rep = direct_sum(standard_rep(), character(1), two_dim_row(Fraction(1, 2)))
    spec = t_spectrum(rep)
    assert spec.dim == 5
    assert spec.trace_T(1) == rep.trace_T(1)
    assert sorted((e.rotation, e.block) for e in spec.entries) == [
        (0, 1), (0, 2), (Fraction(1, 12), 1), (Fraction(1, 2), 1)
    ]


def test_hyperbolic_T_is_reported():
    S = CycMatrix([[0, -1], [1, 0]])
    R = CycMatrix([[0, -1], [1, 1]])
    h = CycMatrix([[2, 1], [1, 1]])
    rep = Repn(S, S.inverse() @ h @ R @ h.inverse())
    with pytest.raises(NotQuasiUnipotentWithinCap):
        t_spectrum(rep, cap=60)


def test_virtual_spectrum_drops_removed_character():
    spec = t_spectrum(s7_rep())
    assert spec.dim == 6
    assert [e.rotation for e in spec.entries] == [0, Fraction(1, 5), Fraction(2, 5), Fraction(1, 2),
                                                  Fraction(3, 5), Fraction(4, 5)]


def test_override_is_validated():
    rep = two_dim_row(Fraction(1, 3))
    good = t_spectrum(rep)
    assert rep.with_spectrum(good).spectrum_override == good
    wrong = TSpectrum.from_items([(0, 1, -1, 1), (Fraction(1, 2), 1, -1, 1)])
    with pytest.raises(SpectrumMismatch):
        rep.with_spectrum(wrong)
    with pytest.raises(SpectrumMismatch):
        validate_spectrum(rep, TSpectrum.from_items([(0, 1, -1, 1)]))


@given(fractions, fractions, st.booleans())
def test_interval_placement(rot, c, closed):
    iv = Interval(c, closed)
    x = iv.place(rot)
    assert x in iv
    assert (x - rot).denominator == 1


def test_interval_endpoints():
    assert STANDARD.place(Fraction(0)) == 0
    assert CUSP.place(Fraction(0)) == 1
    assert Interval(Fraction(1, 12)).place(Fraction(0)) == 1
    assert Interval(Fraction(1, 12), False).place(Fraction(1, 12)) == Fraction(13, 12)
    assert str(Interval(Fraction(1, 12))) == "[1/12, 13/12)"


@pytest.mark.parametrize("trl", list(TWO_DIM_ROWS))
def test_standard_trace_of_two_dim_rows(trl):
    assert standard_exponents(two_dim_row(trl)).trL == trl


def test_cusp_trace_counts_zero_rotations():
    for rep in BASES + [gamma2_cosets()]:
        spec = t_spectrum(rep)
        zeros = sum(e.block * e.mult for e in spec.entries if e.rotation == 0)
        assert cusp_exponents(rep).trL == standard_exponents(rep).trL + zeros


def test_eta_shift_moves_interval():
    rep = two_dim_row(1)
    for a in range(12):
        ch = eta_shifted(rep, a)
        assert all(Fraction(a, 12) <= x < Fraction(a, 12) + 1 for x in ch.exponents())
    assert eta_shifted(rep, 0) == choose_exponents(t_spectrum(rep), STANDARD)


def test_parity_split_of_traces():
    ch = standard_exponents(direct_sum(two_dim_row(1), character(2)))
    assert ch.trL_plus == Fraction(1, 6)
    assert ch.trL_minus == 1
    assert ch.trL == ch.trL_plus + ch.trL_minus
