"""Spectra of rho(T) and choices of exponents L with rho(T) = exp(2 pi i L).

L is never materialized as a matrix.  Everything downstream consumes only its
eigenvalues, Jordan block sizes and the parity (sign of rho(S^2)) of each
eigenvector, so a choice of exponents is stored at that level.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .exact import CycMatrix, Cyclotomic, zeta
from .rep import Repn

__all__ = [
    "NotQuasiUnipotentWithinCap",
    "SpectrumMismatch",
    "SpecEntry",
    "TSpectrum",
    "Interval",
    "ExponentEntry",
    "ExponentChoice",
    "t_spectrum",
    "validate_spectrum",
    "choose_exponents",
    "standard_exponents",
    "cusp_exponents",
    "eta_shifted",
    "STANDARD",
    "CUSP",
    "DEFAULT_ORDER_CAP",
]

DEFAULT_ORDER_CAP = 1000


class NotQuasiUnipotentWithinCap(ArithmeticError):
    """No power T^n with n <= cap is unipotent; supply the spectrum explicitly."""


class SpectrumMismatch(ValueError):
    pass


@dataclass(frozen=True, order=True)
class SpecEntry:
    rotation: Fraction
    block: int
    parity: int
    mult: int

    def __post_init__(self):
        if not 0 <= self.rotation < 1:
            raise ValueError(f"rotation {self.rotation} outside [0, 1)")
        if self.block < 1 or self.mult < 1 or self.parity not in (1, -1):
            raise ValueError(f"malformed spectrum entry {self}")


def _collect(items) -> tuple:
    """Merge (rotation, block, parity) -> multiplicity; drop zeros; sort."""
    acc: dict[tuple, int] = {}
    for rot, block, par, mult in items:
        key = (Fraction(rot) % 1, block, par)
        acc[key] = acc.get(key, 0) + mult
    if any(m < 0 for m in acc.values()):
        raise SpectrumMismatch("negative multiplicity after removing virtual summands")
    return tuple(SpecEntry(r, b, p, m) for (r, b, p), m in sorted(acc.items()) if m)


@dataclass(frozen=True)
class TSpectrum:
    entries: tuple[SpecEntry, ...]
    semisimple_order: int | None = field(default=None, compare=False)

    @classmethod
    def from_items(cls, items, semisimple_order=None) -> "TSpectrum":
        return cls(_collect(items), semisimple_order)

    @property
    def dim(self) -> int:
        return sum(e.block * e.mult for e in self.entries)

    def parity_dim(self, parity: int) -> int:
        return sum(e.block * e.mult for e in self.entries if e.parity == parity)

    @property
    def is_semisimple(self) -> bool:
        return all(e.block == 1 for e in self.entries)

    def rotations(self) -> list[Fraction]:
        """Eigenvalue rotations with algebraic multiplicity, sorted."""
        return sorted(e.rotation for e in self.entries for _ in range(e.block * e.mult))

    def twist(self, a: int) -> "TSpectrum":
        """Spectrum of rho tensor chi^a."""
        sign = -1 if a % 2 else 1
        return TSpectrum.from_items(
            (e.rotation + Fraction(a, 12), e.block, e.parity * sign, e.mult) for e in self.entries
        )

    def dual(self) -> "TSpectrum":
        return TSpectrum.from_items((-e.rotation, e.block, e.parity, e.mult) for e in self.entries)

    def __add__(self, other: "TSpectrum") -> "TSpectrum":
        return TSpectrum.from_items(
            (e.rotation, e.block, e.parity, e.mult) for e in self.entries + other.entries
        )

    def trace_T(self, j: int) -> Cyclotomic:
        total = zeta(1, 0) * 0
        for e in self.entries:
            r = e.rotation
            total = total + zeta(r.denominator, r.numerator * j) * (e.block * e.mult)
        return total


def _root_index(x: Cyclotomic, n: int) -> int | None:
    """k with x = zeta_n^k, or None."""
    for k in range(n):
        if x == zeta(n, k):
            return k
    return None


def _diagonal_spectrum(rep: Repn) -> TSpectrum | None:
    """Read the spectrum directly off a diagonal T with diagonal S^2."""
    T, S2 = rep.T, rep._S_pows[2]
    n = rep.order
    items = []
    for i in range(rep.full_dim):
        for j in range(rep.full_dim):
            if i != j and not (T[i, j].is_zero() and S2[i, j].is_zero()):
                return None
        k = _root_index(T[i, i], n)
        if k is None:
            return None
        par = 1 if S2[i, i] == 1 else -1
        items.append((Fraction(k, n), 1, par, 1))
    items += [(Fraction(a, 12), 1, -1 if a % 2 else 1, -1) for a in rep.removed]
    spec = TSpectrum.from_items(items)
    return TSpectrum(spec.entries, _lcm_denominators(spec))


def _lcm_denominators(spec: TSpectrum) -> int:
    from math import lcm

    return lcm(1, *(e.rotation.denominator for e in spec.entries))


def _is_nilpotent(M: CycMatrix) -> bool:
    P = M
    steps = 1
    while steps < M.rows:
        P = P @ P
        steps *= 2
    return P.is_zero()


def _semisimple_by_dft(rep: Repn, n: int) -> TSpectrum:
    tr = [rep.trace_T(j) for j in range(n)]
    trc = [rep.trace_T(j, central=True) for j in range(n)]
    items = []
    zero = zeta(n, 0) * 0
    for m in range(n):
        plus = sum((zeta(n, -m * j) * (t + c) for j, (t, c) in enumerate(zip(tr, trc))), zero)
        minus = sum((zeta(n, -m * j) * (t - c) for j, (t, c) in enumerate(zip(tr, trc))), zero)
        for par, val in ((1, plus / (2 * n)), (-1, minus / (2 * n))):
            if not val.is_rational() or val.to_rational().denominator != 1:
                raise ArithmeticError(f"non-integral T-multiplicity at rotation {m}/{n}: {val}")
            if val.to_int():
                items.append((Fraction(m, n), 1, par, val.to_int()))
    return TSpectrum.from_items(items, n)


def _jordan_by_ranks(rep: Repn, n: int) -> TSpectrum:
    d = rep.full_dim
    eye = CycMatrix.identity(d, rep.order)
    S2 = rep._S_pows[2]
    items = []
    for par in (1, -1):
        P = (eye + S2 * par) * Fraction(1, 2)
        rank_p = P.rank()
        if rank_p == 0:
            continue
        for m in range(n):
            lam = zeta(n, m)
            N = rep.T - eye * lam
            ranks = [rank_p]
            M = P
            while True:
                M = N @ M
                ranks.append(M.rank())
                if ranks[-1] == ranks[-2]:
                    break
            if ranks[1] == rank_p:
                continue
            ranks.append(ranks[-1])
            for j in range(1, len(ranks) - 1):
                exact = ranks[j - 1] - 2 * ranks[j] + ranks[j + 1]
                if exact:
                    items.append((Fraction(m, n), j, par, exact))
    items += [(Fraction(a, 12), 1, -1 if a % 2 else 1, -1) for a in rep.removed]
    return TSpectrum.from_items(items)


def t_spectrum(rep: Repn, cap: int = DEFAULT_ORDER_CAP, *, method: str = "auto") -> TSpectrum:
    """Jordan data of rho(T) with parity, for quasi-unipotent rho(T).

    ``method`` selects the route: "diagonal" (read off a diagonal T),
    "dft" (trace DFT, semisimple only), "ranks" (nilpotency ranks), or "auto".
    An explicit spectrum attached to ``rep`` always wins.
    """
    if rep.spectrum_override is not None and method == "auto":
        return rep.spectrum_override
    if method in ("auto", "diagonal"):
        spec = _diagonal_spectrum(rep)
        if spec is not None:
            return spec
        if method == "diagonal":
            raise ValueError("rho(T) is not diagonal")
    d = rep.full_dim
    eye = CycMatrix.identity(d, rep.order)
    for n in range(1, cap + 1):
        P = rep.T_power(n)
        if P.is_identity():
            if method == "ranks":
                return _jordan_by_ranks(rep, n)
            return _semisimple_by_dft(rep, n)
        if _is_nilpotent(P - eye):
            if method == "dft":
                raise ValueError("rho(T) is not semisimple")
            return _jordan_by_ranks(rep, n)
    raise NotQuasiUnipotentWithinCap(f"no unipotent power of rho(T) up to exponent {cap}")


def validate_spectrum(rep: Repn, spectrum: TSpectrum) -> None:
    """Check an externally supplied spectrum against the representation."""
    if spectrum.dim != rep.dim:
        raise SpectrumMismatch(f"spectrum has dimension {spectrum.dim}, representation {rep.dim}")
    par = rep.mults.parity()
    if spectrum.parity_dim(1) != par.d_plus or spectrum.parity_dim(-1) != par.d_minus:
        raise SpectrumMismatch("spectrum parity dimensions disagree with rho(S^2)")
    for j in range(1, rep.dim + 1):
        if spectrum.trace_T(j) != rep.trace_T(j):
            raise SpectrumMismatch(f"spectrum disagrees with Tr rho(T^{j})")


@dataclass(frozen=True)
class Interval:
    """[lower, lower+1) when left_closed, else (lower, lower+1]."""

    lower: Fraction
    left_closed: bool = True

    def __post_init__(self):
        object.__setattr__(self, "lower", Fraction(self.lower))

    def place(self, rotation: Fraction) -> Fraction:
        """The unique number congruent to ``rotation`` mod 1 inside the interval."""
        c = self.lower
        if self.left_closed:
            return c + (rotation - c) % 1
        return c + 1 - (c - rotation) % 1

    def __contains__(self, x) -> bool:
        c = self.lower
        return c <= x < c + 1 if self.left_closed else c < x <= c + 1

    def shift(self, t) -> "Interval":
        return Interval(self.lower + t, self.left_closed)

    def __str__(self):
        c = self.lower
        return f"[{c}, {c + 1})" if self.left_closed else f"({c}, {c + 1}]"


STANDARD = Interval(Fraction(0), True)
CUSP = Interval(Fraction(0), False)


@dataclass(frozen=True, order=True)
class ExponentEntry:
    exponent: Fraction
    block: int
    parity: int
    mult: int


@dataclass(frozen=True)
class ExponentChoice:
    interval: Interval
    entries: tuple[ExponentEntry, ...]

    @property
    def trL(self) -> Fraction:
        return sum((e.exponent * e.block * e.mult for e in self.entries), Fraction(0))

    def trL_parity(self, parity: int) -> Fraction:
        return sum(
            (e.exponent * e.block * e.mult for e in self.entries if e.parity == parity), Fraction(0)
        )

    @property
    def trL_plus(self) -> Fraction:
        return self.trL_parity(1)

    @property
    def trL_minus(self) -> Fraction:
        return self.trL_parity(-1)

    @property
    def dim(self) -> int:
        return sum(e.block * e.mult for e in self.entries)

    def exponents(self, parity: int | None = None) -> list[Fraction]:
        """Eigenvalues of L with algebraic multiplicity, sorted."""
        return sorted(
            e.exponent
            for e in self.entries
            if parity is None or e.parity == parity
            for _ in range(e.block * e.mult)
        )


def choose_exponents(spec: TSpectrum, interval: Interval) -> ExponentChoice:
    entries = tuple(
        sorted(ExponentEntry(interval.place(e.rotation), e.block, e.parity, e.mult) for e in spec.entries)
    )
    return ExponentChoice(interval, entries)


def _spec(rep_or_spec) -> TSpectrum:
    return rep_or_spec if isinstance(rep_or_spec, TSpectrum) else t_spectrum(rep_or_spec)


def standard_exponents(rep) -> ExponentChoice:
    return choose_exponents(_spec(rep), STANDARD)


def cusp_exponents(rep) -> ExponentChoice:
    return choose_exponents(_spec(rep), CUSP)


def eta_shifted(rep, a: int) -> ExponentChoice:
    """Exponents relative to [a/12, a/12 + 1): the image of multiplication by eta^(2a)."""
    return choose_exponents(_spec(rep), Interval(Fraction(a, 12), True))
