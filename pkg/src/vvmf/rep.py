"""Representations of SL_2(Z) given by the images of S and T.

Conventions: T = [[1, 1], [0, 1]], S = [[0, -1], [1, 0]], R = S T, so that
S^4 = R^6 = 1 and S^2 = R^3 = -I is central.  chi is the character of eta^2:
chi(T) = exp(2 pi i / 12), chi(S) = -i, chi(R) = exp(2 pi i 5/6).

A :class:`Repn` may be *virtual*: a list of characters chi^a can be marked as
removed, in which case every scalar invariant (traces, multiplicities,
exponents, invariant dimensions) is reported with those summands subtracted.
This is how the trace-zero part of a permutation representation is handled
without building a complement basis.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .exact import CycMatrix, Cyclotomic, zeta

__all__ = [
    "RelationViolation",
    "MalformedCycles",
    "EigMultiplicities",
    "ParityData",
    "Repn",
    "build_rep",
    "character",
    "trivial",
    "from_permutations",
    "direct_sum",
    "tensor_char",
    "dual",
    "parity_split",
    "eig_mults",
    "fixed_space_dim",
    "isotypic_dim",
    "coisotypic_dim",
    "certify_finite_image",
    "two_dim_irrep",
    "standard_rep",
    "DEFAULT_IMAGE_CAP",
]

DEFAULT_IMAGE_CAP = 20000


class RelationViolation(ValueError):
    """The given matrices do not satisfy a defining relation of SL_2(Z)."""

    def __init__(self, relation: str):
        super().__init__(f"relation violated: {relation}")
        self.relation = relation


class MalformedCycles(ValueError):
    pass


def _z12(k: int) -> Cyclotomic:
    return zeta(12, k)


def _chi_S(a: int) -> Cyclotomic:
    # (-i)^a = z12^(9a)
    return _z12(9 * a)


def _chi_T(a: int) -> Cyclotomic:
    return _z12(a)


@dataclass(frozen=True)
class ParityData:
    """Dimensions and S, R, R^2 traces of the even and odd parts of a representation."""

    d_plus: int
    d_minus: int
    s_plus: Cyclotomic
    s_minus: Cyclotomic
    r1_plus: Cyclotomic
    r1_minus: Cyclotomic
    r2_plus: Cyclotomic
    r2_minus: Cyclotomic

    def select(self, parity: int) -> tuple[int, Cyclotomic, Cyclotomic, Cyclotomic]:
        if parity > 0:
            return self.d_plus, self.s_plus, self.r1_plus, self.r2_plus
        return self.d_minus, self.s_minus, self.r1_minus, self.r2_minus


@dataclass(frozen=True)
class EigMultiplicities:
    """alpha[s]: multiplicity of i^s in rho(S); beta[r]: of xi^r in rho(R), xi = exp(2 pi i/6).

    Because S and R have finite order these integers determine every trace
    Tr rho(S^j), Tr rho(R^j), and hence the parity decomposition.
    """

    alpha: tuple[int, int, int, int]
    beta: tuple[int, int, int, int, int, int]

    def __post_init__(self):
        if len(self.alpha) != 4 or len(self.beta) != 6:
            raise ValueError("need 4 S-multiplicities and 6 R-multiplicities")
        if min(self.alpha) < 0 or min(self.beta) < 0:
            raise ValueError(f"negative multiplicity in {self}")
        if sum(self.alpha) != sum(self.beta):
            raise ValueError("S and R multiplicities describe different dimensions")
        if self.alpha[0] + self.alpha[2] != self.beta[0] + self.beta[2] + self.beta[4]:
            raise ValueError("S^2 = R^3 fails on the multiplicity level")

    @property
    def dim(self) -> int:
        return sum(self.alpha)

    @classmethod
    def of_character(cls, a: int) -> "EigMultiplicities":
        alpha = [0] * 4
        beta = [0] * 6
        alpha[(3 * a) % 4] = 1
        beta[(5 * a) % 6] = 1
        return cls(tuple(alpha), tuple(beta))

    def __add__(self, other: "EigMultiplicities") -> "EigMultiplicities":
        return EigMultiplicities(
            tuple(x + y for x, y in zip(self.alpha, other.alpha)),
            tuple(x + y for x, y in zip(self.beta, other.beta)),
        )

    def __sub__(self, other: "EigMultiplicities") -> "EigMultiplicities":
        return EigMultiplicities(
            tuple(x - y for x, y in zip(self.alpha, other.alpha)),
            tuple(x - y for x, y in zip(self.beta, other.beta)),
        )

    def twist(self, a: int) -> "EigMultiplicities":
        """Multiplicities of rho tensor chi^a."""
        return EigMultiplicities(
            tuple(self.alpha[(s - 3 * a) % 4] for s in range(4)),
            tuple(self.beta[(r - 5 * a) % 6] for r in range(6)),
        )

    def dual(self) -> "EigMultiplicities":
        return EigMultiplicities(
            tuple(self.alpha[-s % 4] for s in range(4)),
            tuple(self.beta[-r % 6] for r in range(6)),
        )

    def trace_S(self, j: int = 1) -> Cyclotomic:
        return sum((m * _z12(3 * s * j) for s, m in enumerate(self.alpha) if m), _z12(0) * 0)

    def trace_R(self, j: int = 1) -> Cyclotomic:
        return sum((m * _z12(2 * r * j) for r, m in enumerate(self.beta) if m), _z12(0) * 0)

    def parity(self) -> ParityData:
        zero = _z12(0) * 0
        a, b = self.alpha, self.beta
        return ParityData(
            d_plus=a[0] + a[2],
            d_minus=a[1] + a[3],
            s_plus=zero + (a[0] - a[2]),
            s_minus=_z12(3) * (a[1] - a[3]),
            r1_plus=sum((b[r] * _z12(2 * r) for r in (0, 2, 4)), zero),
            r1_minus=sum((b[r] * _z12(2 * r) for r in (1, 3, 5)), zero),
            r2_plus=sum((b[r] * _z12(4 * r) for r in (0, 2, 4)), zero),
            r2_minus=sum((b[r] * _z12(4 * r) for r in (1, 3, 5)), zero),
        )


def _dft_multiplicities(traces: list[Cyclotomic], what: str) -> tuple[int, ...]:
    m = len(traces)
    out = []
    for s in range(m):
        total = sum((zeta(m, -s * j) * t for j, t in enumerate(traces)), zeta(m, 0) * 0)
        val = total / m
        if not val.is_rational() or val.to_rational().denominator != 1 or val.to_rational() < 0:
            raise ArithmeticError(f"non-integral eigenvalue multiplicity for {what}: {val}")
        out.append(val.to_int())
    return tuple(out)


class Repn:
    """A finite-dimensional representation of SL_2(Z), validated at construction.

    Parameters
    ----------
    S, T : CycMatrix
        Images of the standard generators.
    removed : iterable of int
        Characters chi^a (a mod 12) subtracted virtually from the scalar data.
    image_bound : int, optional
        A known upper bound on the image order (finite image by construction).
    label : str, optional
        Free-form name used in reports.
    """

    def __init__(self, S: CycMatrix, T: CycMatrix, *, removed=(), image_bound=None, label=None):
        if not (S.is_square() and T.is_square()) or S.rows != T.rows:
            raise ValueError("S and T must be square matrices of equal size")
        n = math.lcm(S.order, T.order)
        S, T = S.embed(n), T.embed(n)
        R = S @ T
        S2 = S @ S
        if not (S2 @ S2).is_identity():
            raise RelationViolation("S^4 = I")
        R3 = R @ R @ R
        if R3 != S2:
            raise RelationViolation("S^2 = R^3")
        if not (R3 @ R3).is_identity():
            raise RelationViolation("R^6 = I")
        if S2 @ T != T @ S2:
            raise RelationViolation("S^2 commutes with T")
        self.S, self.T, self.R = S, T, R
        self.order = n
        self.full_dim = S.rows
        self.removed = tuple(sorted(a % 12 for a in removed))
        self.dim = self.full_dim - len(self.removed)
        if self.dim < 1:
            raise ValueError("virtual representation has non-positive dimension")
        self.image_bound = image_bound
        self.label = label
        self.spectrum_override = None

        s_pows = [CycMatrix.identity(self.full_dim, n), S, S2, S2 @ S]
        r_pows = [CycMatrix.identity(self.full_dim, n), R]
        for _ in range(4):
            r_pows.append(r_pows[-1] @ R)
        self._S_pows = s_pows
        self._R_pows = r_pows
        full = EigMultiplicities(
            _dft_multiplicities([P.trace() for P in s_pows], "S"),
            _dft_multiplicities([P.trace() for P in r_pows], "R"),
        )
        self.full_mults = full
        removed_mults = EigMultiplicities((0,) * 4, (0,) * 6)
        for a in self.removed:
            removed_mults = removed_mults + EigMultiplicities.of_character(a)
        try:
            self.mults = full - removed_mults
        except ValueError:
            raise ValueError("removed characters are not summands of the representation") from None
        self._T_pows = [CycMatrix.identity(self.full_dim, n), T]
        self._iso: dict[int, int] = {}
        self._coiso: dict[int, int] = {}
        for a in set(self.removed):
            if self._kernel_dim_for(a, transpose=False) < self.removed.count(a):
                raise ValueError(f"chi^{a} is not a summand and cannot be removed")

    # scalar data ---------------------------------------------------------
    @property
    def is_virtual(self) -> bool:
        return bool(self.removed)

    def trace(self, g: str, j: int = 1) -> Cyclotomic:
        """Trace of rho(g^j) for g in 'S', 'R', after removing virtual summands."""
        if g == "S":
            return self.mults.trace_S(j)
        if g == "R":
            return self.mults.trace_R(j)
        if g == "T":
            return self.trace_T(j)
        raise ValueError(f"unknown generator {g!r}")

    def T_power(self, j: int) -> CycMatrix:
        while len(self._T_pows) <= j:
            self._T_pows.append(self._T_pows[-1] @ self.T)
        return self._T_pows[j]

    def trace_T(self, j: int, central: bool = False) -> Cyclotomic:
        """Tr rho(T^j), or Tr rho(S^2 T^j) when ``central`` is set; virtual-adjusted."""
        P = self.T_power(j)
        if central:
            P = self._S_pows[2] @ P
        tr = P.trace()
        for a in self.removed:
            c = _chi_T(a * j)
            tr = tr - (c * (-1) ** a if central else c)
        return tr

    def _kernel_dim_for(self, a: int, transpose: bool) -> int:
        cS, cT = _chi_S(a), _chi_T(a)
        S, T = (self.S.T, self.T.T) if transpose else (self.S, self.T)
        eye = CycMatrix.identity(self.full_dim, self.order)
        stacked = (S - eye * cS).vstack(T - eye * cT)
        return stacked.kernel_dim()

    def isotypic_dim(self, a: int) -> int:
        """dim Hom(chi^a, rho): vectors on which S and T act through chi^a."""
        a %= 12
        if a not in self._iso:
            if self.full_mults.alpha[(3 * a) % 4] == 0 or self.full_mults.beta[(5 * a) % 6] == 0:
                val = 0
            else:
                val = self._kernel_dim_for(a, transpose=False)
            self._iso[a] = val - self.removed.count(a)
        return self._iso[a]

    def coisotypic_dim(self, a: int) -> int:
        """dim Hom(rho, chi^a), i.e. the chi^-a isotypic part of the dual."""
        a %= 12
        if a not in self._coiso:
            if self.full_mults.alpha[(3 * a) % 4] == 0 or self.full_mults.beta[(5 * a) % 6] == 0:
                val = 0
            else:
                val = self._kernel_dim_for(a, transpose=True)
            self._coiso[a] = val - self.removed.count(a)
        return self._coiso[a]

    def with_spectrum(self, spectrum) -> "Repn":
        """Copy of this representation carrying an explicit T-spectrum."""
        from .exponents import validate_spectrum

        validate_spectrum(self, spectrum)
        clone = object.__new__(Repn)
        clone.__dict__.update(self.__dict__)
        clone.spectrum_override = spectrum
        return clone

    def __eq__(self, other):
        if not isinstance(other, Repn):
            return NotImplemented
        return self.S == other.S and self.T == other.T and self.removed == other.removed

    def __hash__(self):
        return hash((self.S.key(), self.T.key(), self.removed))

    def __repr__(self):
        name = f" {self.label}" if self.label else ""
        virt = f", minus chi^{list(self.removed)}" if self.removed else ""
        return f"<Repn{name} dim={self.dim}{virt} over Q(zeta_{self.order})>"


def build_rep(S, T, **kwargs) -> Repn:
    if not isinstance(S, CycMatrix):
        S = CycMatrix(S)
    if not isinstance(T, CycMatrix):
        T = CycMatrix(T)
    return Repn(S, T, **kwargs)


def character(a: int) -> Repn:
    """The one-dimensional representation chi^a."""
    a %= 12
    return Repn(CycMatrix([[_chi_S(a)]]), CycMatrix([[_chi_T(a)]]), image_bound=12, label=f"chi^{a}")


def trivial() -> Repn:
    return character(0)


def _perm_from_cycles(degree: int, cycles) -> list[int]:
    perm = list(range(degree))
    seen = set()
    for cyc in cycles:
        cyc = list(cyc)
        for x in cyc:
            if not isinstance(x, int) or isinstance(x, bool) or not 1 <= x <= degree:
                raise MalformedCycles(f"cycle entry {x!r} outside 1..{degree}")
            if x in seen:
                raise MalformedCycles(f"point {x} appears in more than one cycle")
            seen.add(x)
        for i, x in enumerate(cyc):
            perm[x - 1] = cyc[(i + 1) % len(cyc)] - 1
    return perm


def _perm_matrix(perm: list[int]) -> CycMatrix:
    n = len(perm)
    rows = [[0] * n for _ in range(n)]
    for i, j in enumerate(perm):
        rows[j][i] = 1  # e_i -> e_perm(i)
    return CycMatrix(rows)


def from_permutations(degree: int, S_cycles, T_cycles, subtract_trivial: bool = False) -> Repn:
    """Permutation representation from disjoint cycles on the points 1..degree.

    The matrix of a permutation p sends basis vector e_i to e_p(i), so that
    rho(S) rho(T) is the matrix of "first T, then S".
    """
    if degree < 1:
        raise MalformedCycles("degree must be positive")
    S = _perm_matrix(_perm_from_cycles(degree, S_cycles))
    T = _perm_matrix(_perm_from_cycles(degree, T_cycles))
    return Repn(
        S, T,
        removed=(0,) if subtract_trivial else (),
        image_bound=math.factorial(degree),
        label=f"permutation({degree})" + (" minus trivial" if subtract_trivial else ""),
    )


def _bound_product(*bounds):
    if any(b is None for b in bounds):
        return None
    return math.prod(bounds)


def direct_sum(*reps: Repn) -> Repn:
    if not reps:
        raise ValueError("empty direct sum")
    if len(reps) == 1:
        return reps[0]
    out = Repn(
        CycMatrix.block_diag(*(r.S for r in reps)),
        CycMatrix.block_diag(*(r.T for r in reps)),
        removed=[a for r in reps for a in r.removed],
        image_bound=_bound_product(*(r.image_bound for r in reps)),
        label=" + ".join(r.label or "?" for r in reps),
    )
    return out


def tensor_char(rep: Repn, a: int) -> Repn:
    """rho tensor chi^a."""
    a %= 12
    if a == 0:
        return rep
    return Repn(
        rep.S * _chi_S(a),
        rep.T * _chi_T(a),
        removed=[b + a for b in rep.removed],
        image_bound=None if rep.image_bound is None else rep.image_bound * 12,
        label=f"({rep.label or '?'}) x chi^{a}",
    )


def dual(rep: Repn) -> Repn:
    """The contragredient: g acts by the transpose of rho(g)^-1."""
    S_inv = rep._S_pows[3]
    return Repn(
        S_inv.transpose(),
        rep.T.inverse().transpose(),
        removed=[-b for b in rep.removed],
        image_bound=rep.image_bound,
        label=f"dual({rep.label or '?'})",
    )


def parity_split(rep: Repn) -> ParityData:
    return rep.mults.parity()


def eig_mults(rep: Repn, g: str = "S") -> tuple[int, ...]:
    """Eigenvalue multiplicities of rho(S) (indexed by s for i^s) or rho(R) (r for xi^r)."""
    if g == "S":
        return rep.mults.alpha
    if g == "R":
        return rep.mults.beta
    raise ValueError("g must be 'S' or 'R'")


def fixed_space_dim(rep: Repn) -> int:
    return rep.isotypic_dim(0)


def isotypic_dim(rep: Repn, a: int) -> int:
    return rep.isotypic_dim(a)


def coisotypic_dim(rep: Repn, a: int) -> int:
    return rep.coisotypic_dim(a)


def certify_finite_image(rep: Repn, cap: int = DEFAULT_IMAGE_CAP) -> int | None:
    """Order of the group generated by rho(S), rho(T), or None if it exceeds ``cap``.

    Breadth-first closure under right multiplication by the generators; for a
    finite group the generated monoid is the group.  For a virtual
    representation the closure is taken on the full matrices, whose image
    surjects onto the image of the virtual part.
    """
    gens = (rep.S, rep.T)
    start = CycMatrix.identity(rep.full_dim, rep.order)
    seen = {start.key()}
    frontier = [start]
    while frontier:
        nxt = []
        for g in frontier:
            for h in gens:
                p = g @ h
                k = p.key()
                if k not in seen:
                    seen.add(k)
                    if len(seen) > cap:
                        return None
                    nxt.append(p)
        frontier = nxt
    return len(seen)


def _rotation_root(rot) -> Cyclotomic:
    rot = Fraction(rot)
    return zeta(rot.denominator, rot.numerator)


def two_dim_irrep(rot1, rot2) -> Repn:
    """An irreducible 2-dimensional representation with rho(T) = diag(e(rot1), e(rot2)).

    Such a representation exists when rot1 + rot2 lies in (1/6)Z and the
    rotations differ mod 1.  S is taken as [[a, 1], [eps - a^2, -a]] with
    a = 1 / (det T (l1 - l2)) and eps = -(det T)^3, the value of S^2.
    """
    r1, r2 = Fraction(rot1) % 1, Fraction(rot2) % 1
    if r1 == r2:
        raise ValueError("T-eigenvalues must be distinct")
    if (6 * (r1 + r2)).denominator != 1:
        raise ValueError("rot1 + rot2 must lie in (1/6)Z")
    l1, l2 = _rotation_root(r1), _rotation_root(r2)
    D = l1 * l2
    eps = -(D**3)
    a = (D * (l1 - l2)).inverse()
    S = CycMatrix([[a, 1], [eps - a * a, -a]])
    if (eps - a * a).is_zero():
        raise ValueError("these rotations give a reducible representation")
    T = CycMatrix.diagonal([l1, l2])
    return Repn(S, T, label=f"phi({r1}, {r2})")


def standard_rep() -> Repn:
    """The defining inclusion SL_2(Z) -> GL_2(C); T is unipotent, image infinite."""
    return Repn(CycMatrix([[0, -1], [1, 0]]), CycMatrix([[1, 1], [0, 1]]), label="standard")
