"""Euler characteristics, dimensions and free-generator weights of vector valued modular forms.

A bundle of weight-k forms for rho is described completely by the scalar data
of rho (S/R eigenvalue multiplicities, T-spectrum with parity, invariant
dimensions) together with a choice of exponents.  :class:`RepData` packages that
scalar data so that twists by chi^a and duals can be formed without touching
matrices.
"""
from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .exact import Cyclotomic, zeta
from .exponents import (
    CUSP,
    DEFAULT_ORDER_CAP,
    STANDARD,
    ExponentChoice,
    Interval,
    TSpectrum,
    choose_exponents,
    t_spectrum,
)
from .rep import DEFAULT_IMAGE_CAP, EigMultiplicities, Repn, certify_finite_image
from .wpline import P46, SplittingType, euler_rr_p46, h0, splitting_from_hilbert

__all__ = [
    "Cert",
    "Status",
    "ClassFlags",
    "RepData",
    "BundleSpec",
    "IntRange",
    "GeneratorWeights",
    "DimEntry",
    "DimReport",
    "IntegralityFailure",
    "NonIntegralMultiplicity",
    "NegativeMultiplicity",
    "YUndetermined",
    "InconsistentOverride",
    "classify",
    "rep_data",
    "bundle",
    "euler_char",
    "euler_char_rr",
    "det_twist",
    "dual_spec",
    "min_weight_bound",
    "table_rows",
    "resolve_y",
    "resolve_x",
    "generator_weights",
    "dims",
    "hilbert",
    "splitting",
    "bundle_splitting",
    "cusp_generator_weights",
    "subgroup_generators",
]


class IntegralityFailure(ArithmeticError):
    pass


class NonIntegralMultiplicity(ArithmeticError):
    pass


class NegativeMultiplicity(ArithmeticError):
    pass


class YUndetermined(LookupError):
    pass


class InconsistentOverride(ValueError):
    pass


class Cert(enum.Enum):
    CERTIFIED = "Certified"
    ASSERTED = "Asserted"
    UNKNOWN = "Unknown"

    def __bool__(self):
        return self is not Cert.UNKNOWN


class Status(enum.Enum):
    EXACT = "Exact"
    CONDITIONAL = "ConditionalOnPositivity"
    UNDETERMINED = "Undetermined"


@dataclass(frozen=True)
class ClassFlags:
    """What is known about finiteness, goodness and positivity, and how.

    ``finite_image`` is the image order when the closure was enumerated, 0 when
    finiteness is known from the construction only, None when unknown.
    """

    finite_image: int | None = None
    good: Cert = Cert.UNKNOWN
    positive: Cert = Cert.UNKNOWN
    unitarizable: Cert = Cert.UNKNOWN

    @classmethod
    def build(cls, finite_image=None, good=Cert.UNKNOWN, positive=Cert.UNKNOWN, unitarizable=Cert.UNKNOWN):
        if finite_image is not None:
            good = unitarizable = Cert.CERTIFIED
        if unitarizable is Cert.CERTIFIED or good is Cert.CERTIFIED:
            positive = Cert.CERTIFIED
        elif positive is Cert.UNKNOWN and (good or unitarizable):
            positive = Cert.ASSERTED
        return cls(finite_image, good, positive, unitarizable)

    @property
    def is_finite(self) -> bool:
        return self.finite_image is not None

    def dual(self) -> "ClassFlags":
        # certificates survive dualizing; bare assertions about rho say nothing about its dual
        # except unitarizability, which is preserved (the dual of a unitary rep is unitary)
        return ClassFlags.build(
            self.finite_image,
            good=self.good if self.good is Cert.CERTIFIED else Cert.UNKNOWN,
            positive=self.positive if self.positive is Cert.CERTIFIED else Cert.UNKNOWN,
            unitarizable=self.unitarizable,
        )

    def combine(self, other: "ClassFlags") -> "ClassFlags":
        """Flags of a direct sum."""

        def weakest(a: Cert, b: Cert) -> Cert:
            order = [Cert.UNKNOWN, Cert.ASSERTED, Cert.CERTIFIED]
            return order[min(order.index(a), order.index(b))]

        fin = None
        if self.is_finite and other.is_finite:
            fin = 0
        return ClassFlags.build(
            fin,
            weakest(self.good, other.good),
            weakest(self.positive, other.positive),
            weakest(self.unitarizable, other.unitarizable),
        )

    def as_dict(self) -> dict:
        return {
            "finite_image": (
                "Unknown" if self.finite_image is None
                else "Certified(by construction)" if self.finite_image == 0
                else f"Certified({self.finite_image})"
            ),
            "good": self.good.value,
            "positive": self.positive.value,
            "unitarizable": self.unitarizable.value,
        }


def classify(rep: Repn, cap: int = DEFAULT_IMAGE_CAP, assertions: dict | None = None,
             enumerate_image: bool = True) -> ClassFlags:
    """Certificates for rho from its image, plus recorded user assertions.

    With ``enumerate_image`` the closure of the image is enumerated up to
    ``cap`` elements; otherwise only finiteness known from the construction
    (permutations, characters) is used.
    """
    assertions = assertions or {}
    fin = certify_finite_image(rep, cap) if enumerate_image else None
    if fin is None and rep.image_bound is not None:
        fin = 0
    asserted = {k: Cert.ASSERTED if assertions.get(k) else Cert.UNKNOWN for k in ("good", "positive", "unitarizable")}
    return ClassFlags.build(fin, **asserted)


def _lazy(fn: Callable[[int], int]) -> Callable[[int], int]:
    cache: dict[int, int] = {}

    def get(a: int) -> int:
        a %= 12
        if a not in cache:
            cache[a] = fn(a)
        return cache[a]

    return get


@dataclass(frozen=True)
class RepData:
    """Scalar invariants of a representation, closed under twists and duals.

    ``iso(a)`` is dim Hom(chi^a, rho) and ``co(a)`` is dim Hom(rho, chi^a).
    """

    mults: EigMultiplicities
    spectrum: TSpectrum
    iso: Callable[[int], int] = field(compare=False, repr=False)
    co: Callable[[int], int] = field(compare=False, repr=False)
    flags: ClassFlags = ClassFlags()
    label: str = ""
    # derived tables, filled on first use
    memo: dict = field(default_factory=dict, compare=False, repr=False)

    @classmethod
    def from_repn(cls, rep: Repn, flags: ClassFlags | None = None, cap: int = DEFAULT_ORDER_CAP) -> "RepData":
        if flags is None:
            flags = classify(rep, enumerate_image=False)
        return cls(rep.mults, t_spectrum(rep, cap), _lazy(rep.isotypic_dim), _lazy(rep.coisotypic_dim),
                   flags, rep.label or "")

    @property
    def dim(self) -> int:
        return self.mults.dim

    def twist(self, a: int) -> "RepData":
        a %= 12
        if a == 0:
            return self
        iso, co = self.iso, self.co
        return RepData(self.mults.twist(a), self.spectrum.twist(a), _lazy(lambda b: iso(b - a)),
                       _lazy(lambda b: co(b - a)), self.flags, f"({self.label}) x chi^{a}")

    def dual(self) -> "RepData":
        iso, co = self.iso, self.co
        return RepData(self.mults.dual(), self.spectrum.dual(), _lazy(lambda b: co(-b)),
                       _lazy(lambda b: iso(-b)), self.flags.dual(), f"dual({self.label})")

    def __add__(self, other: "RepData") -> "RepData":
        a_iso, a_co, b_iso, b_co = self.iso, self.co, other.iso, other.co
        return RepData(self.mults + other.mults, self.spectrum + other.spectrum,
                       _lazy(lambda c: a_iso(c) + b_iso(c)), _lazy(lambda c: a_co(c) + b_co(c)),
                       self.flags.combine(other.flags), f"{self.label} + {other.label}")

    @property
    def is_even(self) -> bool:
        return self.mults.alpha[1] + self.mults.alpha[3] == 0

    def fixed_space_dim(self) -> int:
        return self.iso(0)

    def standard(self) -> ExponentChoice:
        return choose_exponents(self.spectrum, STANDARD)

    def cusp(self) -> ExponentChoice:
        return choose_exponents(self.spectrum, CUSP)


def rep_data(rep, flags: ClassFlags | None = None) -> RepData:
    if isinstance(rep, RepData):
        return rep
    return RepData.from_repn(rep, flags)


@dataclass(frozen=True)
class BundleSpec:
    """The extension of the weight-k bundle for rho with exponents ``exps``."""

    data: RepData
    k: int
    exps: ExponentChoice

    @property
    def interval(self) -> Interval:
        return self.exps.interval


def bundle(rep, k: int, interval: Interval = STANDARD) -> BundleSpec:
    data = rep_data(rep)
    return BundleSpec(data, k, choose_exponents(data.spectrum, interval))


# constants in Q(zeta_12)
_ONE = zeta(12, 0)
_I = zeta(12, 3)
_ZETA = zeta(12, 4)   # e^{2 pi i / 3}
_XI = zeta(12, 2)     # e^{2 pi i / 6}


def _require_int(val: Cyclotomic, what: str, exc=IntegralityFailure) -> int:
    if not val.is_rational() or val.to_rational().denominator != 1:
        raise exc(f"{what} is not an integer: {val}")
    return val.to_int()


def euler_char(b: BundleSpec, cross_check: bool = True) -> int:
    """chi of the bundle from the parity-selected closed formula, checked against Riemann-Roch."""
    k = b.k
    par = 1 if k % 2 == 0 else -1
    d, s, r1, r2 = b.data.mults.parity().select(par)
    val = (
        _ONE * Fraction((5 + k) * d, 12)
        + zeta(12, 3 * k) * s * Fraction(1, 4)
        + zeta(12, 2 * k) * r1 / ((_ONE - _ZETA) * 3)
        + zeta(12, 4 * k) * r2 / ((_ONE - zeta(12, -4)) * 3)
        - b.exps.trL_parity(par)
    )
    out = _require_int(val, f"Euler characteristic at weight {k}")
    if cross_check:
        rr = euler_char_rr(b)
        if rr != out:
            raise IntegralityFailure(f"closed form {out} disagrees with Riemann-Roch {rr} at weight {k}")
    return out


def euler_char_rr(b: BundleSpec) -> Fraction:
    """chi of the bundle through the general Riemann-Roch formula on P(4, 6)."""
    k, m, L = b.k, b.data.mults, b.exps
    par = b.data.mults.parity()
    # the +1 eigenbundle of -1 in weight k is the (-1)^k part of rho
    plus, minus = (1, -1) if k % 2 == 0 else (-1, 1)
    rank = {1: par.d_plus, -1: par.d_minus}
    deg = {p: k * rank[p] - 12 * L.trL_parity(p) for p in (1, -1)}
    d_total = k * m.dim - 12 * L.trL
    for v in (d_total, deg[1], deg[-1]):
        if v.denominator != 1:
            raise IntegralityFailure(f"12 Tr L is not integral: {L.trL}")
    return euler_rr_p46(
        rank=m.dim,
        d=int(d_total),
        rank_plus=rank[plus],
        rank_minus=rank[minus],
        d_plus=int(deg[plus]),
        d_minus=int(deg[minus]),
        tr_i=zeta(12, 3 * k) * m.trace_S(1),
        tr_neg_i=zeta(12, -3 * k) * m.trace_S(3),
        tr_zeta=zeta(12, 4 * k) * m.trace_R(2),
        tr_zeta_inv=zeta(12, -4 * k) * m.trace_R(4),
        tr_xi=zeta(12, 2 * k) * m.trace_R(1),
        tr_xi_inv=zeta(12, -2 * k) * m.trace_R(5),
    )


def det_twist(b: BundleSpec) -> int:
    """Degree of the determinant line bundle: d k - 12 Tr L."""
    v = b.data.dim * b.k - 12 * b.exps.trL
    if v.denominator != 1:
        raise IntegralityFailure(f"12 Tr L = {12 * b.exps.trL} is not an integer")
    return int(v)


def dual_spec(b: BundleSpec, a: int) -> BundleSpec:
    """The dual bundle, realized as forms for dual(rho) x chi^a in weight a + 12 - k.

    Exponents taken relative to [a/12, a/12 + 1) dualize to cusp forms and
    exponents relative to (a/12, a/12 + 1] dualize to holomorphic forms.
    """
    if b.interval.lower != Fraction(a, 12):
        raise ValueError(f"interval {b.interval} does not start at {a}/12")
    data = b.data.dual().twist(a)
    target = CUSP if b.interval.left_closed else STANDARD
    return BundleSpec(data, a + 12 - b.k, choose_exponents(data.spectrum, target))


def min_weight_bound(rep, exps: ExponentChoice | None = None) -> Fraction:
    """Lower bound 12 Tr L / d + 1 - d on weights with linearly independent components."""
    data = rep_data(rep)
    L = exps if exps is not None else data.standard()
    return 12 * L.trL / data.dim + 1 - data.dim


# ---------------------------------------------------------------------------
# multiplicity tables

@dataclass(frozen=True)
class IntRange:
    lo: int
    hi: int

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    @property
    def value(self) -> int:
        if not self.is_exact:
            raise YUndetermined(f"value only known to lie in [{self.lo}, {self.hi}]")
        return self.lo

    def __contains__(self, v) -> bool:
        return self.lo <= v <= self.hi

    def __str__(self):
        return str(self.lo) if self.is_exact else f"[{self.lo}, {self.hi}]"


def _q(x) -> Cyclotomic:
    return _ONE * Fraction(x)


# (d, s, r1, r2, Tr L, unknown) coefficients; the unknown is x for even weights, y for odd
_EVEN_ROWS = {
    0: (0, 0, 0, 0, 0, 1),
    2: ("7/12", "-1/4", (_ZETA - 1) / 9, -(_ZETA + 2) / 9, -1, 0),
    4: ("3/4", "1/4", -(_ZETA * 2 + 1) / 9, (_ZETA * 2 + 1) / 9, -1, -1),
    6: ("1/3", 0, _q("1/3"), _q("1/3"), 0, -1),
    8: ("-1/4", "1/4", (_ZETA * 2 + 1) / 9, -(_ZETA * 2 + 1) / 9, 1, 0),
    10: ("-5/12", "-1/4", -(_ZETA + 2) / 9, (_ZETA - 1) / 9, 1, 1),
}
_ODD_ROWS = {
    1: ("1/2", _I / 4, (_ZETA * 2 + 1) / 9, (_ZETA * 2 + 1) / 9, -1, 1),
    3: ("2/3", -_I / 4, -(_ZETA + 2) / 9, -(_ZETA - 1) / 9, -1, 0),
    5: ("1/3", 0, -_ZETA / 3, -(_ZETA + 1) / 3, 0, -1),
    7: ("-1/6", -_I / 4, (_ZETA + 2) / 9, (_ZETA - 1) / 9, 1, -1),
    9: ("-1/3", _I / 4, (_ZETA - 1) / 9, (_ZETA + 2) / 9, 1, 0),
    11: (0, 0, 0, 0, 0, 1),
}


def table_rows(data: RepData, exps: ExponentChoice | None = None) -> dict[int, tuple[int, int]]:
    """Weight w -> (A_w, c_w): the generator multiplicity in weight w is A_w + c_w u,
    where u = x for even w and u = y for odd w."""
    if exps is None:
        if "rows" not in data.memo:
            data.memo["rows"] = table_rows(data, data.standard())
        return data.memo["rows"]
    L = exps
    par = data.mults.parity()
    out = {}
    for rows, p in ((_EVEN_ROWS, 1), (_ODD_ROWS, -1)):
        d, s, r1, r2 = par.select(p)
        trl = L.trL_parity(p)
        for w, (cd, cs, c1, c2, cl, cu) in rows.items():
            val = (
                _q(cd) * d + as_cyc(cs) * s + as_cyc(c1) * r1 + as_cyc(c2) * r2 + _q(cl) * trl
            )
            out[w] = (_require_int(val, f"weight-{w} multiplicity", NonIntegralMultiplicity), cu)
    return out


def as_cyc(x) -> Cyclotomic:
    return x if isinstance(x, Cyclotomic) else _q(x)


def _pin(rows: dict, weights) -> IntRange:
    """Range of the unknown u keeping A_w + c_w u >= 0 on the given weights."""
    lo, hi = 0, None
    for w in weights:
        a, c = rows[w]
        if c > 0:
            lo = max(lo, -a)
        elif c < 0:
            hi = a if hi is None else min(hi, a)
        elif a < 0:
            raise NegativeMultiplicity(f"weight-{w} multiplicity is {a}")
    if hi is None:
        raise NegativeMultiplicity("unknown is unbounded; table inconsistent")
    if lo > hi:
        raise NegativeMultiplicity(f"no nonnegative solution: need {lo} <= u <= {hi}")
    return IntRange(lo, hi)


def _y_by_eta_square(data: RepData) -> int | None:
    """y = dim S_1(dual rho) via multiplication by eta^2, when that map is onto S_2.

    Writing sigma = dual(rho) x chi, multiplication by eta^2 identifies S_1(dual rho)
    with the forms in S_2(sigma) whose exponents lie in (1/12, 13/12]; this is all
    of S_2(sigma) exactly when the even part of sigma has no rotation in (0, 1/12].
    The dimension of S_2(sigma) is chi(S_2) + dim Hom(sigma, 1) = chi + dim Hom(chi, rho),
    valid when rho is good.
    """
    if not data.flags.good:
        return None
    sigma = data.dual().twist(1)
    if any(0 < e.rotation <= Fraction(1, 12) for e in sigma.spectrum.entries if e.parity == 1):
        return None
    chi = euler_char(BundleSpec(sigma, 2, sigma.cusp()))
    return chi + data.iso(1)


def resolve_y(rep, override: int | None = None) -> IntRange:
    """y = dim S_1(dual rho): Exact when one of the known routes pins it, else a range.

    Routes in order: evenness; the eta^2 isomorphism with weight-2 cusp forms;
    nonnegativity of the odd table rows; finally a user-supplied value, which
    must be consistent with whatever was derived.
    """
    data = rep_data(rep)
    if data.is_even:
        derived = IntRange(0, 0)
    else:
        rows = table_rows(data)
        pinned = _pin(rows, (1, 3, 5, 7, 9, 11))
        direct = _y_by_eta_square(data)
        if direct is not None:
            if direct not in pinned:
                raise NegativeMultiplicity(f"y = {direct} from weight 2 contradicts table range {pinned}")
            derived = IntRange(direct, direct)
        else:
            derived = pinned
    if override is not None:
        if override not in derived:
            raise InconsistentOverride(f"asserted y = {override} is outside the derived range {derived}")
        return IntRange(override, override)
    return derived


def resolve_x(rep) -> IntRange:
    """x = dim M_0(rho): the invariants when rho is good, otherwise pinned by the even rows."""
    data = rep_data(rep)
    inv = data.fixed_space_dim()
    if data.flags.good:
        return IntRange(inv, inv)
    pinned = _pin(table_rows(data), (0, 2, 4, 6, 8, 10))
    lo = max(pinned.lo, inv)
    if lo > pinned.hi:
        raise NegativeMultiplicity(f"invariants {inv} exceed the table bound {pinned.hi}")
    return IntRange(lo, pinned.hi)


@dataclass(frozen=True)
class GeneratorWeights:
    """Weights of free generators of M(rho) over C[E4, E6].

    ``multiplicity[w]`` is the (possibly ranged) count of generators of weight w;
    ``weights`` is the sorted multiset when everything is pinned, else None.
    """

    multiplicity: dict
    x: IntRange
    y: IntRange
    parity: dict
    conditional: bool

    @property
    def weights(self) -> tuple[int, ...] | None:
        if not all(r.is_exact for r in self.multiplicity.values()):
            return None
        return tuple(w for w in sorted(self.multiplicity) for _ in range(self.multiplicity[w].lo))

    @property
    def roots(self) -> tuple[int, ...] | None:
        ws = self.weights
        return None if ws is None else tuple(sorted((-w for w in ws), reverse=True))

    @property
    def is_exact(self) -> bool:
        return self.weights is not None

    def numerator(self) -> dict[int, int]:
        ws = self.weights
        if ws is None:
            raise YUndetermined("generator weights are not determined")
        return dict(Counter(ws))


def generator_weights(rep, y_override: int | None = None) -> GeneratorWeights:
    """Free generator weights from the multiplicity tables (requires positivity)."""
    data = rep_data(rep)
    key = ("weights", y_override)
    if key not in data.memo:
        data.memo[key] = _generator_weights(data, y_override)
    return data.memo[key]


def _generator_weights(data: RepData, y_override: int | None) -> GeneratorWeights:
    rows = table_rows(data)
    x = resolve_x(data)
    y = resolve_y(data, y_override)
    mult = {}
    for w, (a, c) in rows.items():
        u = x if w % 2 == 0 else y
        lo, hi = sorted((a + c * u.lo, a + c * u.hi))
        if lo < 0:
            raise NegativeMultiplicity(f"weight-{w} multiplicity can be {lo}")
        if hi > 0:
            mult[w] = IntRange(lo, hi)
    gw = GeneratorWeights(
        mult, x, y,
        parity={w: (1 if w % 2 == 0 else -1) for w in mult},
        conditional=data.flags.positive is not Cert.CERTIFIED,
    )
    if gw.is_exact:
        _check_weights(data, gw.weights)
    return gw


def _check_weights(data: RepData, weights) -> None:
    if len(weights) != data.dim:
        raise IntegralityFailure(f"{len(weights)} generators for a rank-{data.dim} module")
    if sum(weights) != 12 * data.standard().trL:
        raise IntegralityFailure("generator weights violate the sum rule")
    m = data.mults
    if tuple(sum(1 for w in weights if (-w) % 4 == s) for s in range(4)) != m.alpha:
        raise IntegralityFailure("generator weights violate the mod-4 congruences")
    if tuple(sum(1 for w in weights if (-w) % 6 == r) for r in range(6)) != m.beta:
        raise IntegralityFailure("generator weights violate the mod-6 congruences")


# ---------------------------------------------------------------------------
# dimensions

@dataclass(frozen=True)
class DimEntry:
    k: int
    dim: int | None
    status: Status
    bounds: IntRange | None = None


@dataclass(frozen=True)
class DimReport:
    cusp: bool
    entries: tuple[DimEntry, ...]

    def values(self) -> list[int | None]:
        return [e.dim for e in self.entries]

    @property
    def complete(self) -> bool:
        return all(e.status is not Status.UNDETERMINED for e in self.entries)


def _base_status(data: RepData) -> Status:
    if data.flags.positive is Cert.CERTIFIED:
        return Status.EXACT
    return Status.CONDITIONAL


def _safe(fn, *args) -> IntRange | None:
    try:
        return fn(*args)
    except (NegativeMultiplicity, NonIntegralMultiplicity):
        return None


def _checked(k: int, val: int, status: Status) -> DimEntry:
    # a negative Euler characteristic means H^1 survives, so the representation is not positive
    if val < 0:
        return DimEntry(k, None, Status.UNDETERMINED)
    return DimEntry(k, val, status)


def dims(rep, k_lo: int, k_hi: int, cusp: bool = False, y_override: int | None = None) -> DimReport:
    """dim M_k (or S_k) for k_lo <= k <= k_hi with a status for each entry."""
    data = rep_data(rep)
    base = _base_status(data)
    std = data.standard()
    exps = data.cusp() if cusp else std
    unconditional = data.dim + 1 + 12 * std.trL / data.dim
    entries = []
    y = x = y_dual = None
    for k in range(k_lo, k_hi + 1):
        status = base
        if not cusp and k > unconditional:
            status = Status.EXACT
        if cusp and k >= 3 or not cusp and k >= 2:
            val = euler_char(BundleSpec(data, k, exps))
            entries.append(_checked(k, val, status))
            continue
        if cusp and k == 2:
            val = euler_char(BundleSpec(data, 2, exps)) + data.co(0)
            entries.append(_checked(k, val, status))
        elif k == 1:
            if data.is_even:
                entries.append(DimEntry(k, 0, Status.EXACT))
                continue
            if cusp:
                if y_dual is None:
                    y_dual = _safe(resolve_y, data.dual())
                rng = y_dual
                base_val = 0
            else:
                if y is None:
                    y = _safe(resolve_y, data, y_override)
                rng = y
                base_val = euler_char(BundleSpec(data, 1, exps))
            if rng is None:
                entries.append(DimEntry(k, None, Status.UNDETERMINED))
            elif rng.is_exact:
                entries.append(DimEntry(k, base_val + rng.lo, status))
            else:
                entries.append(DimEntry(k, None, Status.UNDETERMINED,
                                        IntRange(base_val + rng.lo, base_val + rng.hi)))
        elif k == 0:
            if cusp:
                if data.flags.good:
                    entries.append(DimEntry(k, 0, status))
                else:
                    entries.append(DimEntry(k, None, Status.UNDETERMINED))
                continue
            if x is None:
                x = _safe(resolve_x, data)
            if x is not None and x.is_exact:
                entries.append(DimEntry(k, x.lo, status))
            else:
                entries.append(DimEntry(k, None, Status.UNDETERMINED, x))
        else:
            entries.append(DimEntry(k, 0, status))
    return DimReport(cusp, tuple(entries))


def _series_from_weights(weights, k_lo: int, k_hi: int) -> dict[int, int]:
    return {k: sum(h0(P46, k - w) for w in weights) for k in range(k_lo, k_hi + 1)}


def hilbert(rep, K: int, y_override: int | None = None) -> tuple[dict[int, int], list[int]]:
    """Numerator {weight: count} and the dimension series dim M_k for 0 <= k < K.

    The series is cross-checked against :func:`dims` on the overlap.
    """
    data = rep_data(rep)
    gw = generator_weights(data, y_override)
    num = gw.numerator()
    series = _series_from_weights(gw.weights, 0, K - 1)
    report = dims(data, 0, K - 1, y_override=y_override)
    for e in report.entries:
        if e.dim is not None and e.dim != series[e.k]:
            raise IntegralityFailure(f"Hilbert series gives {series[e.k]} at weight {e.k}, dims gives {e.dim}")
    return num, [series[k] for k in range(K)]


def splitting(rep, k: int, y_override: int | None = None) -> SplittingType:
    """Splitting type of the standard weight-k bundle: O(k - k_j) over the generator weights."""
    gw = generator_weights(rep, y_override)
    if gw.weights is None:
        raise YUndetermined(f"weight-1 data undetermined (y in {gw.y})")
    return SplittingType(tuple(k - w for w in gw.weights))


def cusp_generator_weights(rep, window: int = 40) -> tuple[int, ...]:
    """Generator weights of the cusp forms S(rho), recovered from dim S_k via the Hilbert numerator."""
    data = rep_data(rep)
    report = dims(data, 0, window, cusp=True)
    if not report.complete:
        raise YUndetermined("cusp dimensions undetermined in low weight")
    split = splitting_from_hilbert(P46, {e.k: e.dim for e in report.entries}, data.dim)
    return tuple(sorted(-a for a in split.summands))


def bundle_splitting(b: BundleSpec) -> SplittingType:
    """Splitting type of the bundle for exponents relative to [m/12, m/12 + 1) or (m/12, m/12 + 1].

    Writing m = n + 12 t with 0 <= n < 12, the bundle is the weight k - n bundle of
    rho x chi^-n for the standard (resp. cusp) interval, twisted by O(-12 t).
    """
    c = b.interval.lower
    if (12 * c).denominator != 1:
        raise ValueError("interval endpoint must lie in (1/12)Z")
    m = int(12 * c)
    n, t = m % 12, m // 12
    data = b.data.twist(-n)
    if b.interval.left_closed:
        weights = generator_weights(data).weights
        if weights is None:
            raise YUndetermined("weight-1 data undetermined")
    else:
        weights = cusp_generator_weights(data)
    return SplittingType(tuple(b.k - n - w - 12 * t for w in weights))


def subgroup_generators(rep: Repn) -> tuple[int, ...]:
    """Weights of generators of M(Gamma) over C[E4, E6], from the coset permutation action."""
    if rep.is_virtual:
        raise ValueError("use the full permutation representation on the cosets")
    flags = classify(rep, enumerate_image=False)
    ws = generator_weights(RepData.from_repn(rep, flags)).weights
    if ws is None:
        raise YUndetermined("generator weights undetermined")
    return ws
