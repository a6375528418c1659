"""Line bundle cohomology on weighted projective lines P(n1, n2).

Vector bundles on P(n1, n2) split as sums of O(a), so everything here is
computed from the two counting functions h0 and h1 and from Hilbert series
numerators.  The Riemann-Roch formula is given only for P(4, 6), whose
stacky points carry the actions of +-i, zeta^{+-1}, xi^{+-1}.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .exact import Cyclotomic, zeta

__all__ = [
    "WeightedLine",
    "SplittingType",
    "P46",
    "InconsistentHilbertData",
    "NegativeNumeratorCoefficient",
    "h0",
    "h1",
    "euler_line",
    "euler_rr_p46",
    "line_bundle_rr_data",
    "splitting_from_hilbert",
    "hilbert_from_splitting",
    "serre_check",
]


@dataclass(frozen=True)
class WeightedLine:
    n1: int
    n2: int

    def __post_init__(self):
        if self.n1 < 1 or self.n2 < 1:
            raise ValueError("weights must be positive")

    def h0(self, k: int) -> int:
        return h0(self, k)

    def h1(self, k: int) -> int:
        return h1(self, k)

    def euler(self, k: int) -> int:
        return euler_line(self, k)


P46 = WeightedLine(4, 6)


@dataclass(frozen=True)
class SplittingType:
    """Twists a_1 >= ... >= a_r of a bundle isomorphic to the sum of O(a_i)."""

    summands: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "summands", tuple(sorted(self.summands, reverse=True)))

    @property
    def rank(self) -> int:
        return len(self.summands)

    def twist(self, k: int) -> "SplittingType":
        return SplittingType(tuple(a + k for a in self.summands))

    def dual(self) -> "SplittingType":
        return SplittingType(tuple(-a for a in self.summands))

    def h0(self, W: WeightedLine) -> int:
        return sum(h0(W, a) for a in self.summands)

    def h1(self, W: WeightedLine) -> int:
        return sum(h1(W, a) for a in self.summands)

    def grouped(self) -> list[tuple[int, int]]:
        """(twist, multiplicity) pairs, twists descending."""
        c = Counter(self.summands)
        return sorted(c.items(), reverse=True)

    def __str__(self):
        parts = []
        for a, m in self.grouped():
            parts.append(f"{m}O({a})" if m > 1 else f"O({a})")
        return " + ".join(parts) if parts else "0"


class InconsistentHilbertData(ValueError):
    pass


class NegativeNumeratorCoefficient(InconsistentHilbertData):
    pass


def h0(W: WeightedLine, k: int) -> int:
    """Number of (a, b) >= 0 with a n1 + b n2 = k."""
    if k < 0:
        return 0
    return sum(1 for a in range(k // W.n1 + 1) if (k - a * W.n1) % W.n2 == 0)


def h1(W: WeightedLine, k: int) -> int:
    """Number of (c, d) < 0 with c n1 + d n2 = k."""
    m = -k
    return sum(
        1 for a in range(1, m // W.n1 + 1) if (m - a * W.n1) > 0 and (m - a * W.n1) % W.n2 == 0
    )


def euler_line(W: WeightedLine, k: int) -> int:
    return h0(W, k) - h1(W, k)


def serre_check(W: WeightedLine, k: int) -> bool:
    return h0(W, k) == h1(W, -k - W.n1 - W.n2)


def euler_rr_p46(
    rank: int,
    d: int,
    rank_plus: int,
    rank_minus: int,
    d_plus: int,
    d_minus: int,
    tr_i: Cyclotomic,
    tr_neg_i: Cyclotomic,
    tr_zeta: Cyclotomic,
    tr_zeta_inv: Cyclotomic,
    tr_xi: Cyclotomic,
    tr_xi_inv: Cyclotomic,
) -> Fraction:
    """Riemann-Roch for a bundle on P(4, 6) from its fixed-point data.

    ``d`` is the degree of the determinant, the ``_plus``/``_minus`` values
    refer to the +-1 eigenbundles of the generic stabilizer, and the traces
    are those of +-i, zeta^{+-1}, xi^{+-1} on the fibers at the stacky points.
    """
    z = zeta(12, 4)  # e^{2 pi i / 3}
    zi = zeta(12, 8)
    one = zeta(12, 0)
    val = (
        Fraction(5 * rank + d, 24)
        + Fraction(5 * rank_plus - 5 * rank_minus + d_plus - d_minus, 24)
        + (tr_i + tr_neg_i) * Fraction(1, 8)
        + tr_zeta / ((one - zi) * 6)
        + tr_zeta_inv / ((one - z) * 6)
        + tr_xi / ((one - z) * 6)
        + tr_xi_inv / ((one - zi) * 6)
    )
    if not val.is_rational():
        raise ArithmeticError(f"Riemann-Roch produced an irrational value {val}; inconsistent data")
    return val.to_rational()


def line_bundle_rr_data(k: int) -> dict:
    """Fixed-point data of O(k) on P(4, 6), in the keyword form of :func:`euler_rr_p46`."""
    even = k % 2 == 0
    return dict(
        rank=1,
        d=k,
        rank_plus=1 if even else 0,
        rank_minus=0 if even else 1,
        d_plus=k if even else 0,
        d_minus=0 if even else k,
        tr_i=zeta(4, k),
        tr_neg_i=zeta(4, -k),
        tr_zeta=zeta(3, k),
        tr_zeta_inv=zeta(3, -k),
        tr_xi=zeta(6, k),
        tr_xi_inv=zeta(6, -k),
    )


def hilbert_from_splitting(W: WeightedLine, split: SplittingType, lo: int, hi: int) -> dict[int, int]:
    return {k: sum(h0(W, k + a) for a in split.summands) for k in range(lo, hi + 1)}


def splitting_from_hilbert(W: WeightedLine, h, rank: int) -> SplittingType:
    """Recover the twists of V from k -> h0(V(k)) on a contiguous window.

    ``h`` maps a contiguous range of integers to dimensions and is taken to
    vanish below that range.  The numerator of the Hilbert series must be
    nonnegative and of total mass ``rank`` inside the window; otherwise the
    window is too short or the data is inconsistent, and we refuse.
    """
    h = dict(h)
    if not h:
        raise InconsistentHilbertData("empty Hilbert data")
    lo, hi = min(h), max(h)
    if set(h) != set(range(lo, hi + 1)):
        raise InconsistentHilbertData("Hilbert data must cover a contiguous window")
    n1, n2 = W.n1, W.n2

    def get(k):
        return h.get(k, 0) if k <= hi else None

    weights = []
    for k in range(lo, hi + 1):
        c = get(k) - get(k - n1) - get(k - n2) + get(k - n1 - n2)
        if c < 0:
            raise NegativeNumeratorCoefficient(f"numerator coefficient {c} at X^{k}")
        weights += [k] * c
        if len(weights) > rank:
            raise InconsistentHilbertData(f"numerator mass exceeds rank {rank}")
    if len(weights) != rank:
        raise InconsistentHilbertData(
            f"numerator mass {len(weights)} in window [{lo}, {hi}] does not reach rank {rank};"
            " widen the window"
        )
    return SplittingType(tuple(-k for k in weights))
