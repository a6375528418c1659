"""Representations used as worked examples: coset actions, 2-dimensional irreducibles, S_7."""
from __future__ import annotations

from fractions import Fraction
from itertools import product

from .rep import Repn, direct_sum, from_permutations, two_dim_irrep

__all__ = [
    "S7_S_CYCLES",
    "S7_T_CYCLES",
    "s7_rep",
    "gamma2_cosets",
    "gamma_n_cosets",
    "TWO_DIM_ROWS",
    "two_dim_row",
    "weight_one_ambiguous",
]

S7_S_CYCLES = [(1, 4), (2, 7), (3, 5)]
S7_T_CYCLES = [(1, 7, 2, 5, 6), (3, 4)]


def s7_rep(subtract_trivial: bool = True) -> Repn:
    """SL_2(Z) -> S_7 via T -> (17256)(34), S -> (14)(27)(35), on the trace-zero part."""
    return from_permutations(7, S7_S_CYCLES, S7_T_CYCLES, subtract_trivial)


def _cycles(perm: dict) -> list[tuple[int, ...]]:
    seen, out = set(), []
    for start in sorted(perm):
        if start in seen or perm[start] == start:
            continue
        cyc, x = [], start
        while x not in seen:
            seen.add(x)
            cyc.append(x)
            x = perm[x]
        out.append(tuple(cyc))
    return out


def _coset_action(elements: list, act_S, act_T) -> tuple[list, list]:
    index = {e: i + 1 for i, e in enumerate(elements)}
    s = {index[e]: index[act_S(e)] for e in elements}
    t = {index[e]: index[act_T(e)] for e in elements}
    return _cycles(s), _cycles(t)


def gamma2_cosets() -> Repn:
    """Permutation action of SL_2(Z) on SL_2(Z)/Gamma(2) = SL_2(F_2) by left multiplication."""

    def mul(a, b):
        return tuple(
            sum(a[2 * i + k] * b[2 * k + j] for k in range(2)) % 2 for i in range(2) for j in range(2)
        )

    elements = [m for m in product((0, 1), repeat=4) if (m[0] * m[3] - m[1] * m[2]) % 2 == 1]
    S, T = (0, 1, 1, 0), (1, 1, 0, 1)
    s_cyc, t_cyc = _coset_action(elements, lambda e: mul(S, e), lambda e: mul(T, e))
    rep = from_permutations(len(elements), s_cyc, t_cyc)
    rep.label = "cosets of Gamma(2)"
    return rep


def gamma_n_cosets(n: int) -> Repn:
    """Regular action on Z/n through SL_2(Z) -> Z/12 -> Z/n (T -> 1, S -> 9)."""
    if 12 % n:
        raise ValueError("n must divide 12")
    elements = list(range(n))
    s_cyc, t_cyc = _coset_action(elements, lambda x: (x + 9) % n, lambda x: (x + 1) % n)
    rep = from_permutations(n, s_cyc, t_cyc)
    rep.label = f"cosets of Gamma_{n}"
    return rep


# Tr L -> T-rotations of a finite-image irreducible 2-dimensional representation,
# and the weights (k1, k2) of its free generators.
TWO_DIM_ROWS = {
    Fraction(1, 3): ((Fraction(0), Fraction(1, 3)), (1, 3)),
    Fraction(1, 2): ((Fraction(0), Fraction(1, 2)), (2, 4)),
    Fraction(2, 3): ((Fraction(1, 6), Fraction(1, 2)), (3, 5)),
    Fraction(5, 6): ((Fraction(1, 6), Fraction(2, 3)), (4, 6)),
    Fraction(1): ((Fraction(1, 4), Fraction(3, 4)), (5, 7)),
    Fraction(7, 6): ((Fraction(1, 3), Fraction(5, 6)), (6, 8)),
    Fraction(4, 3): ((Fraction(1, 2), Fraction(5, 6)), (7, 9)),
    Fraction(3, 2): ((Fraction(7, 12), Fraction(11, 12)), (8, 10)),
    Fraction(5, 3): ((Fraction(17, 24), Fraction(23, 24)), (9, 11)),
}


def two_dim_row(trL) -> Repn:
    rots, _ = TWO_DIM_ROWS[Fraction(trL)]
    return two_dim_irrep(*rots)


def weight_one_ambiguous() -> Repn:
    """An odd representation for which table positivity leaves y = dim S_1(dual) in {0, 1}.

    It is the sum of the rows with Tr L = 1/3 and Tr L = 1: the rotation 0 blocks
    the weight-2 cusp form route and the pinning bounds do not meet.
    """
    return direct_sum(two_dim_row(Fraction(1, 3)), two_dim_row(1))
