import cmath
import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy.combinatorics import Permutation, PermutationGroup

from vvmf.catalog import TWO_DIM_ROWS, gamma2_cosets, gamma_n_cosets, s7_rep, two_dim_row
from vvmf.exact import CycMatrix, zeta
from vvmf.rep import (
    EigMultiplicities,
    MalformedCycles,
    RelationViolation,
    Repn,
    certify_finite_image,
    character,
    direct_sum,
    dual,
    from_permutations,
    standard_rep,
    tensor_char,
    two_dim_irrep,
)


def numeric_mults(rep: Repn):
    """alpha, beta counted from numpy eigenvalues of S and R."""
    S = np.array(rep.S.to_complex())
    R = np.array(rep.R.to_complex())
    alpha = [0] * 4
    for ev in np.linalg.eigvals(S):
        s = round(cmath.phase(ev) / (cmath.pi / 2)) % 4
        assert abs(ev - 1j**s) < 1e-6
        alpha[s] += 1
    beta = [0] * 6
    xi = cmath.exp(2j * cmath.pi / 6)
    for ev in np.linalg.eigvals(R):
        r = round(cmath.phase(ev) / (cmath.pi / 3)) % 6
        assert abs(ev - xi**r) < 1e-6
        beta[r] += 1
    return tuple(alpha), tuple(beta)


def numeric_isotypic(rep: Repn, a: int) -> int:
    cS = complex(zeta(12, 9 * a))
    cT = complex(zeta(12, a))
    S = np.array(rep.S.to_complex())
    T = np.array(rep.T.to_complex())
    eye = np.eye(rep.full_dim)
    M = np.vstack([S - cS * eye, T - cT * eye])
    return rep.full_dim - np.linalg.matrix_rank(M, tol=1e-8)


def base_reps():
    reps = [two_dim_row(t) for t in TWO_DIM_ROWS]
    reps += [from_permutations(7, [(1, 4), (2, 7), (3, 5)], [(1, 7, 2, 5, 6), (3, 4)]), gamma2_cosets()]
    reps += [gamma_n_cosets(n) for n in (2, 3, 4)]
    reps += [character(a) for a in (0, 1, 5, 7)]
    return reps


BASES = base_reps()


@st.composite
def small_reps(draw):
    r = draw(st.sampled_from(BASES))
    if draw(st.booleans()):
        r = tensor_char(r, draw(st.integers(0, 11)))
    if draw(st.booleans()):
        r = dual(r)
    if draw(st.booleans()):
        r = direct_sum(r, draw(st.sampled_from(BASES[:9])))
    return r


def test_character_data():
    for a in range(12):
        c = character(a)
        assert c.mults == EigMultiplicities.of_character(a)
        assert c.T[0, 0] == zeta(12, a)
        assert c.S[0, 0] == zeta(4, -a)
    assert character(12) == character(0)


def test_relation_violations_name_the_relation():
    with pytest.raises(RelationViolation) as e:
        Repn(CycMatrix([[zeta(8)]]), CycMatrix([[1]]))
    assert e.value.relation == "S^4 = I"
    with pytest.raises(RelationViolation) as e:
        Repn(CycMatrix([[1]]), CycMatrix([[2]]))
    assert e.value.relation == "S^2 = R^3"
    # the remaining two relations follow from these, so they are never the first to fail


def test_malformed_cycles():
    with pytest.raises(MalformedCycles):
        from_permutations(3, [(1, 2), (2, 3)], [])
    with pytest.raises(MalformedCycles):
        from_permutations(3, [(1, 4)], [])


def test_permutation_convention():
    # e_i -> e_{p(i)}: the matrix of (1 2 3) sends e_1 to e_2
    rep = from_permutations(3, [], [(1, 2, 3)])
    assert rep.T[1, 0] == 1 and rep.T[0, 1] == 0


@settings(max_examples=40, deadline=None)
@given(small_reps())
def test_multiplicities_match_numeric_eigenvalues(rep):
    if rep.is_virtual:
        return
    assert (rep.mults.alpha, rep.mults.beta) == numeric_mults(rep)


@settings(max_examples=25, deadline=None)
@given(small_reps(), st.integers(0, 11))
def test_isotypic_dims_match_numeric_rank(rep, a):
    if rep.is_virtual:
        return
    assert rep.isotypic_dim(a) == numeric_isotypic(rep, a)
    assert rep.coisotypic_dim(a) == numeric_isotypic(dual(rep), -a)


@settings(max_examples=40, deadline=None)
@given(small_reps(), st.integers(0, 11))
def test_twist_and_dual_scalar_routes_agree_with_matrices(rep, a):
    assert tensor_char(rep, a).mults == rep.mults.twist(a)
    assert dual(rep).mults == rep.mults.dual()
    assert dual(dual(rep)) == rep


def test_trace_zero_part_of_s7():
    rep = s7_rep()
    assert rep.dim == 6 and rep.is_virtual
    full = s7_rep(subtract_trivial=False)
    assert full.mults - EigMultiplicities.of_character(0) == rep.mults
    assert rep.isotypic_dim(0) == 0


def _sympy_order(rep_cycles, degree):
    gens = [Permutation([[x - 1 for x in c] for c in cyc], size=degree) for cyc in rep_cycles]
    return PermutationGroup(gens).order()


def test_image_orders_of_permutation_reps_match_sympy():
    s = [(1, 4), (2, 7), (3, 5)]
    t = [(1, 7, 2, 5, 6), (3, 4)]
    assert certify_finite_image(from_permutations(7, s, t)) == _sympy_order([s, t], 7) == 5040
    # the regular action of S_3 = SL_2(F_2) on itself
    assert certify_finite_image(gamma2_cosets()) == 6
    for n in (1, 2, 3, 4, 6, 12):
        assert certify_finite_image(gamma_n_cosets(n)) == n


def test_two_dim_row_images_are_finite():
    # frozen from enumeration; each is a finite central extension of a small group
    orders = {t: certify_finite_image(two_dim_row(t)) for t in TWO_DIM_ROWS}
    assert sorted(orders.values()) == [6, 12, 18, 18, 24, 24, 24, 48, 144]


def test_infinite_image_is_not_certified():
    assert certify_finite_image(standard_rep(), cap=500) is None


def test_two_dim_irrep_constraints():
    with pytest.raises(ValueError):
        two_dim_irrep(0, 0)
    with pytest.raises(ValueError):
        two_dim_irrep(0, "1/7")
    rep = two_dim_irrep(0, "1/3")
    assert rep.T == CycMatrix.diagonal([1, zeta(3)])


def test_removed_character_must_be_a_summand():
    with pytest.raises(ValueError):
        Repn(CycMatrix([[1]]), CycMatrix([[1]]), removed=[1])


def test_random_direct_sums_add_multiplicities():
    rng = random.Random(7)
    for _ in range(20):
        a, b = rng.choice(BASES), rng.choice(BASES)
        assert direct_sum(a, b).mults == a.mults + b.mults
