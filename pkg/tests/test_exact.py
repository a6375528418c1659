import cmath
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from vvmf.exact import (
    CycMatrix,
    Cyclotomic,
    SingularMatrixError,
    parse_rational,
    phi_poly,
    totient,
    zeta,
)

ORDERS = [1, 2, 3, 4, 5, 6, 8, 9, 10, 12, 15, 24]

rationals = st.builds(Fraction, st.integers(-30, 30), st.integers(1, 12))


@st.composite
def cyclotomics(draw, order=None):
    n = order or draw(st.sampled_from(ORDERS))
    coeffs = draw(st.lists(rationals, min_size=1, max_size=2 * n))
    return Cyclotomic.from_powers(n, coeffs)


def close(a: complex, b: complex) -> bool:
    return abs(a - b) < 1e-7 * (1 + abs(a) + abs(b))


@pytest.mark.parametrize("n", range(1, 40))
def test_cyclotomic_polynomial_matches_sympy(n):
    x = sympy.symbols("x")
    expected = sympy.Poly(sympy.cyclotomic_poly(n, x), x).all_coeffs()[::-1]
    assert list(phi_poly(n)) == [int(c) for c in expected]
    assert totient(n) == sympy.totient(n)


@pytest.mark.parametrize("text,value", [("3", 3), ("-2/6", Fraction(-1, 3)), (" 7 / 14 ", Fraction(1, 2)), (5, 5)])
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("bad", ["0.5", "1e3", "1/0", "", "x", 0.5, True])
def test_parse_rational_rejects(bad):
    with pytest.raises(ValueError):
        parse_rational(bad)


def test_roots_of_unity():
    assert zeta(12, 3) ** 2 == -1
    assert zeta(12, 4) ** 3 == 1
    assert zeta(12, 4) + zeta(12, 8) == -1
    assert zeta(5) ** 5 == 1 and zeta(5) != 1
    # 1 + z + ... + z^{n-1} = 0
    for n in ORDERS[1:]:
        assert sum((zeta(n, k) for k in range(n)), zeta(1, 0) * 0).is_zero()


def test_mixed_orders_promote():
    x = zeta(4) + zeta(3)
    assert x.order == 12
    assert close(complex(x), 1j + cmath.exp(2j * cmath.pi / 3))


@settings(max_examples=60, deadline=None)
@given(cyclotomics(), cyclotomics())
def test_arithmetic_matches_complex_embedding(a, b):
    assert close(complex(a + b), complex(a) + complex(b))
    assert close(complex(a - b), complex(a) - complex(b))
    assert close(complex(a * b), complex(a) * complex(b))


@settings(max_examples=60, deadline=None)
@given(cyclotomics(), cyclotomics(), cyclotomics())
def test_field_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a


@settings(max_examples=60, deadline=None)
@given(cyclotomics())
def test_inverse(a):
    if a.is_zero():
        with pytest.raises(ZeroDivisionError):
            a.inverse()
    else:
        assert a * a.inverse() == 1
        assert a / a == 1


@settings(max_examples=40, deadline=None)
@given(cyclotomics())
def test_conjugate_is_complex_conjugate(a):
    assert close(complex(a.conjugate()), complex(a).conjugate())


def test_normalized_trace_independent_of_embedding():
    x = zeta(3) * 2 + Fraction(1, 3)
    assert x.normalized_trace() == x.embed(12).normalized_trace() == Fraction(1, 3) - 1


@st.composite
def rational_matrices(draw):
    r = draw(st.integers(1, 5))
    c = draw(st.integers(1, 5))
    vals = st.integers(-3, 3)
    return [[draw(vals) for _ in range(c)] for _ in range(r)]


@settings(max_examples=60, deadline=None)
@given(rational_matrices())
def test_rank_matches_sympy(rows):
    M = CycMatrix(rows)
    assert M.rank() == sympy.Matrix(rows).rank()
    assert M.kernel_dim() == len(rows[0]) - M.rank()


def test_rank_over_cyclotomic_field():
    i = zeta(4)
    # rows proportional over Q(i) but not over Q
    M = CycMatrix([[1, i], [i, -1]])
    assert M.rank() == 1
    N = CycMatrix([[1, i], [i, 1]])
    assert N.rank() == 2


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 4), st.data())
def test_inverse_matrix(n, data):
    entries = [[data.draw(cyclotomics(order=12)) for _ in range(n)] for _ in range(n)]
    M = CycMatrix(entries)
    if M.rank() < n:
        with pytest.raises(SingularMatrixError):
            M.inverse()
    else:
        assert (M @ M.inverse()).is_identity()


def test_matrix_basics():
    A = CycMatrix([[1, 2], [3, 4]])
    B = CycMatrix([[0, 1], [1, 0]])
    assert (A @ B) == CycMatrix([[2, 1], [4, 3]])
    assert A.transpose() == CycMatrix([[1, 3], [2, 4]])
    assert A.trace() == 5
    assert (B @ B).is_identity()
    assert (A - A).is_zero()
    assert CycMatrix.block_diag(A, B).rank() == 4
    with pytest.raises(ValueError):
        CycMatrix([[1, 2], [3]])
