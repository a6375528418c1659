"""Truncated q-expansions with rational coefficients and fractional leading exponent.

A :class:`QExp` stands for sum_{m < K} c_m q^(e + m), known modulo q^(e + K).
Products are computed by exact integer convolution (Kronecker substitution
over a common denominator), so series of a few hundred terms with large
rational coefficients stay cheap.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

try:  # GMP multiplication is much faster on the huge packed integers
    from gmpy2 import mpz as _big
except ImportError:  # pragma: no cover
    _big = int

__all__ = [
    "QExp",
    "TruncationMismatch",
    "LEAD_DENOMINATOR",
    "DEFAULT_ORDER",
    "convolve",
    "eta",
    "eta_product",
    "delta",
    "eisenstein",
    "theta_derivative",
    "modular_derivative",
    "modular_derivative_iter",
    "wronskian",
    "j_inverse",
    "hyp2f1",
    "gamma2_basis",
    "pin_wronskian_constant",
    "WRONSKIAN_CONSTANT",
    "run_identity_suite",
]

LEAD_DENOMINATOR = 24
DEFAULT_ORDER = 128


class TruncationMismatch(ValueError):
    pass


def _frac(x) -> Fraction:
    if isinstance(x, float):
        raise TypeError("floats are not allowed in exact series")
    return Fraction(x)


def _to_ints(coeffs) -> tuple[list[int], int]:
    den = 1
    for c in coeffs:
        den = math.lcm(den, c.denominator)
    return [c.numerator * (den // c.denominator) for c in coeffs], den


def _pack(values: list[int], nbytes: int) -> int:
    pos = b"".join((v if v > 0 else 0).to_bytes(nbytes, "little") for v in values)
    neg = b"".join((-v if v < 0 else 0).to_bytes(nbytes, "little") for v in values)
    return int.from_bytes(pos, "little") - int.from_bytes(neg, "little")


def _unpack(value: int, nbytes: int, count: int) -> list[int]:
    sign = -1 if value < 0 else 1
    raw = abs(value).to_bytes(max(1, (abs(value).bit_length() + 7) // 8), "little")
    base = 1 << (8 * nbytes)
    half = base >> 1
    out, carry = [], 0
    for i in range(count):
        d = int.from_bytes(raw[i * nbytes:(i + 1) * nbytes], "little") + carry
        if d >= half:
            d -= base
            carry = 1
        else:
            carry = 0
        out.append(sign * d)
    return out


def convolve(a: list[int], b: list[int], n: int) -> list[int]:
    """First n coefficients of the product of two integer polynomials."""
    a, b = a[:n], b[:n]
    if not a or not b:
        return [0] * n
    ma = max(abs(x) for x in a)
    mb = max(abs(x) for x in b)
    if ma == 0 or mb == 0:
        return [0] * n
    bound = ma * mb * min(len(a), len(b))
    nbytes = (bound.bit_length() + 2) // 8 + 1
    prod = int(_big(_pack(a, nbytes)) * _big(_pack(b, nbytes)))
    return _unpack(prod, nbytes, n)


@dataclass(frozen=True)
class QExp:
    lead: Fraction
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        lead = _frac(self.lead)
        if (lead * LEAD_DENOMINATOR).denominator != 1:
            raise ValueError(f"lead exponent {lead} has denominator not dividing {LEAD_DENOMINATOR}")
        if not self.coeffs:
            raise ValueError("a series needs at least one coefficient")
        object.__setattr__(self, "lead", lead)
        object.__setattr__(self, "coeffs", tuple(_frac(c) for c in self.coeffs))

    @classmethod
    def _raw(cls, lead: Fraction, coeffs) -> "QExp":
        obj = object.__new__(cls)
        object.__setattr__(obj, "lead", lead)
        object.__setattr__(obj, "coeffs", tuple(coeffs))
        return obj

    @classmethod
    def constant(cls, c, K: int) -> "QExp":
        return cls._raw(Fraction(0), (_frac(c),) + (Fraction(0),) * (K - 1))

    @classmethod
    def monomial(cls, e, K: int, c=1) -> "QExp":
        return cls(_frac(e), (_frac(c),) + (Fraction(0),) * (K - 1))

    @property
    def K(self) -> int:
        return len(self.coeffs)

    @property
    def precision(self) -> Fraction:
        """Absolute precision: the series is known modulo q^precision."""
        return self.lead + self.K

    def __getitem__(self, m: int) -> Fraction:
        return self.coeffs[m]

    def coefficient(self, exponent) -> Fraction:
        m = _frac(exponent) - self.lead
        if m.denominator != 1 or m < 0:
            return Fraction(0)
        if m >= self.K:
            raise IndexError(f"q^{exponent} is beyond the truncation")
        return self.coeffs[int(m)]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def normalize(self) -> "QExp":
        """Strip leading zero coefficients, moving the lead exponent accordingly."""
        for i, c in enumerate(self.coeffs):
            if c:
                return QExp._raw(self.lead + i, self.coeffs[i:]) if i else self
        raise ZeroDivisionError("series vanishes to the working precision")

    def truncate(self, K: int) -> "QExp":
        if K > self.K:
            raise TruncationMismatch("cannot extend a truncated series")
        return QExp._raw(self.lead, self.coeffs[:K])

    def _align(self, other: "QExp") -> tuple[Fraction, list, list, int]:
        shift = other.lead - self.lead
        if shift.denominator != 1:
            raise ValueError(f"cannot add series with exponents {self.lead} and {other.lead}")
        lead = min(self.lead, other.lead)
        K = int(min(self.precision, other.precision) - lead)
        if K < 1:
            raise TruncationMismatch("no overlapping precision")

        def pad(f):
            off = int(f.lead - lead)
            c = [Fraction(0)] * off + list(f.coeffs)
            return c[:K] + [Fraction(0)] * (K - len(c))

        return lead, pad(self), pad(other), K

    def __add__(self, other):
        if not isinstance(other, QExp):
            other = QExp.constant(other, max(1, int(self.precision)))
        lead, a, b, _ = self._align(other)
        return QExp._raw(lead, [x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return QExp._raw(self.lead, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other if isinstance(other, QExp) else -_frac(other))

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "QExp":
        c = _frac(c)
        return QExp._raw(self.lead, [c * x for x in self.coeffs])

    def __mul__(self, other):
        if not isinstance(other, QExp):
            return self.scale(other)
        K = min(self.K, other.K)
        a, da = _to_ints(self.coeffs[:K])
        b, db = _to_ints(other.coeffs[:K])
        prod = convolve(a, b, K)
        den = da * db
        return QExp._raw(self.lead + other.lead, [Fraction(x, den) for x in prod])

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "QExp":
        if n < 0:
            return self.invert() ** (-n)
        result = QExp._raw(Fraction(0), (Fraction(1),) + (Fraction(0),) * (self.K - 1))
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def invert(self) -> "QExp":
        f = self.normalize()
        c0 = f.coeffs[0]
        inv0 = 1 / c0
        K = f.K
        g = [inv0]
        for n in range(1, K):
            s = sum(f.coeffs[k] * g[n - k] for k in range(1, n + 1))
            g.append(-s * inv0)
        return QExp._raw(-f.lead, g)

    def __truediv__(self, other):
        if isinstance(other, QExp):
            return self * other.invert()
        return self.scale(1 / _frac(other))

    def frac_pow(self, alpha) -> tuple["QExp", tuple[Fraction, Fraction]]:
        """(q^(alpha e) (1 + h)^alpha, (c0, alpha)) for self = c0 q^e (1 + h).

        The scalar c0^alpha is usually irrational and is returned as a tag
        instead of being multiplied in.
        """
        alpha = _frac(alpha)
        f = self.normalize()
        c0 = f.coeffs[0]
        g = [c / c0 for c in f.coeffs]
        K = f.K
        p = [Fraction(1)]
        for n in range(1, K):
            s = sum(((alpha + 1) * k - n) * g[k] * p[n - k] for k in range(1, n + 1) if g[k])
            p.append(Fraction(s) / n)
        return QExp(alpha * f.lead, p), (c0, alpha)

    def __eq__(self, other):
        if not isinstance(other, QExp):
            return NotImplemented
        return self.lead == other.lead and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.lead, self.coeffs))

    def __repr__(self):
        terms = []
        for m, c in enumerate(self.coeffs[:6]):
            if c:
                terms.append(f"{c}*q^({self.lead + m})")
        tail = " + ..." if self.K > 6 else ""
        return f"QExp({' + '.join(terms) or '0'}{tail}; O(q^{self.precision}))"


def eta_product(K: int) -> QExp:
    """q^(1/24) prod (1 - q^n), expanded factor by factor."""
    c = [0] * K
    c[0] = 1
    for n in range(1, K):
        for m in range(K - 1, n - 1, -1):
            c[m] -= c[m - n]
    return QExp(Fraction(1, 24), c)


def eta(K: int = DEFAULT_ORDER) -> QExp:
    """Dedekind eta via the pentagonal number theorem."""
    c = [0] * K
    j = 0
    while True:
        hit = False
        for m in (j * (3 * j - 1) // 2, j * (3 * j + 1) // 2):
            if m < K:
                c[m] = (-1) ** j
                hit = True
        if not hit:
            break
        j += 1
    return QExp(Fraction(1, 24), c)


def delta(K: int = DEFAULT_ORDER) -> QExp:
    return eta(K) ** 24


def _sigma(n: int, r: int) -> int:
    total = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            total += d**r
            if d * d != n:
                total += (n // d) ** r
        d += 1
    return total


_EIS = {2: -24, 4: 240, 6: -504}


def eisenstein(w: int, K: int = DEFAULT_ORDER) -> QExp:
    """E_w = 1 + c_w sum sigma_{w-1}(n) q^n for w in {2, 4, 6}."""
    if w not in _EIS:
        raise ValueError("weight must be 2, 4 or 6")
    return QExp(0, [1] + [_EIS[w] * _sigma(n, w - 1) for n in range(1, K)])


def theta_derivative(f: QExp) -> QExp:
    """q d/dq, with the fractional lead exponent included."""
    return QExp._raw(f.lead, [(f.lead + m) * c for m, c in enumerate(f.coeffs)])


def modular_derivative(f: QExp, k: int) -> QExp:
    """D_k f = q df/dq - (k/12) E_2 f."""
    out = theta_derivative(f)
    if k:
        out = out - (eisenstein(2, f.K) * f).scale(Fraction(k, 12))
    return out


def modular_derivative_iter(f: QExp, k: int, r: int) -> QExp:
    """D_{k+2(r-1)} o ... o D_k applied to f."""
    for i in range(r):
        f = modular_derivative(f, k + 2 * i)
    return f


def _det(matrix: list[list[QExp]]) -> QExp:
    n = len(matrix)
    total = None
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = matrix[0][perm[0]]
        for i in range(1, n):
            term = term * matrix[i][perm[i]]
        if inv % 2:
            term = -term
        total = term if total is None else total + term
    return total


def wronskian(fs, k: int) -> QExp:
    """det(D_k^r f_i), rows indexed by i and columns by r = 0..d-1."""
    fs = list(fs)
    if not fs:
        raise ValueError("need at least one series")
    if len({f.K for f in fs}) != 1:
        raise TruncationMismatch("all series must share one truncation order")
    d = len(fs)
    matrix = [[modular_derivative_iter(f, k, r) for r in range(d)] for f in fs]
    return _det(matrix)


def j_inverse(K: int = DEFAULT_ORDER) -> QExp:
    """u = 1728 / j = 1728 Delta / E_4^3."""
    return (delta(K) * (eisenstein(4, K) ** 3).invert()).scale(1728)


def _pochhammer_ratio(a: Fraction, b: Fraction, c: Fraction, n: int) -> Fraction:
    """(a)_n (b)_n / ((c)_n n!) from the previous term, built up iteratively by the caller."""
    den = (c + n) * (n + 1)
    if den == 0:
        raise ZeroDivisionError(f"Pochhammer pole: c = {c}")
    return (a + n) * (b + n) / den


def _content(coeffs) -> Fraction:
    """Positive rational s with coeffs / s integral and primitive."""
    ints, den = _to_ints(coeffs)
    g = 0
    for x in ints:
        g = math.gcd(g, x)
    return Fraction(g or 1, den)


def hyp2f1(a, b, c, z: QExp, K: int | None = None) -> QExp:
    """2F1(a, b; c; z) for a series z with lead exponent >= 1.

    Horner's rule in z = s w, where s is the content of z so that w has
    primitive integer coefficients; at depth n only K - n terms are kept,
    since that partial sum is multiplied by z^n afterwards.
    """
    a, b, c = _frac(a), _frac(b), _frac(c)
    K = K or z.K
    if z.is_zero():
        return QExp.constant(1, K)
    z = z.normalize()
    if z.lead < 1 or z.lead.denominator != 1:
        raise ValueError("z must be divisible by q")
    step = int(z.lead)
    N = (K - 1) // step  # z^n is O(q^(n lead)), so n <= N suffices
    if z.K < K - step:
        raise TruncationMismatch("z is not known to the requested order")
    s = _content(z.coeffs)
    w = z.scale(1 / s)
    terms = [Fraction(1)]
    for n in range(N):
        terms.append(terms[-1] * _pochhammer_ratio(a, b, c, n) * s)
    acc = [terms[N]]
    for n in range(N - 1, -1, -1):
        width = K - n * step
        prod = (QExp._raw(Fraction(0), acc) * w.truncate(min(w.K, len(acc)))).coeffs if len(acc) else []
        out = [Fraction(0)] * width
        out[0] = terms[n]
        for i, x in enumerate(prod):
            if i + step < width:
                out[i + step] += x
        acc = out
    return QExp._raw(Fraction(0), acc)


def gamma2_basis(K: int = DEFAULT_ORDER) -> tuple[QExp, QExp]:
    """Normalized f1, f2 spanning the weight-2 forms for the 2-dimensional rep of S_3.

    f1 = eta^4 u^(-1/6) 2F1(-1/6, 1/6; 1/2; u), f2 = eta^4 u^(1/3) 2F1(1/3, 2/3; 3/2; u),
    with u = 1728/j and the scalar factors 1728^(...) dropped.
    """
    u = j_inverse(K)
    e4 = eta(K) ** 4
    p1, _ = u.frac_pow(Fraction(-1, 6))
    p2, _ = u.frac_pow(Fraction(1, 3))
    f1 = e4 * p1 * hyp2f1(Fraction(-1, 6), Fraction(1, 6), Fraction(1, 2), u, K)
    f2 = e4 * p2 * hyp2f1(Fraction(1, 3), Fraction(2, 3), Fraction(3, 2), u, K)
    if f1.lead != 0 or f2.lead != Fraction(1, 2):
        raise ArithmeticError(f"unexpected lead exponents {f1.lead}, {f2.lead}")
    return f1, f2


def pin_wronskian_constant(K: int = DEFAULT_ORDER) -> tuple[Fraction, QExp]:
    """(c, residual) with W(f1, f2) = c eta^12 + residual in weight 2."""
    f1, f2 = gamma2_basis(K)
    W = wronskian([f1, f2], 2)
    ratio = W * (eta(K) ** 12).invert()
    c = ratio.coeffs[0]
    residual = ratio - c
    return c, residual


# Value found by the first computation of pin_wronskian_constant; regression-tested.
WRONSKIAN_CONSTANT = Fraction(1, 2)


def _first_mismatch(f: QExp, g: QExp) -> int | None:
    diff = f - g
    for m, c in enumerate(diff.coeffs):
        if c:
            return m
    return None


def run_identity_suite(K: int = 200) -> list[tuple[str, int | None]]:
    """Identity checks; each entry is (name, first failing coefficient index or None)."""
    E2, E4, E6 = (eisenstein(w, K) for w in (2, 4, 6))
    D = delta(K)
    out = []
    out.append(("eta^24 = Delta", _first_mismatch(eta_product(K) ** 24, D)))
    out.append(("Delta = (E4^3 - E6^2)/1728", _first_mismatch(D, ((E4**3) - (E6**2)).normalize().scale(Fraction(1, 1728)))))
    out.append(("D_4 E_4 = -E_6/3", _first_mismatch(modular_derivative(E4, 4), E6.scale(Fraction(-1, 3)))))
    out.append(("D_6 E_6 = -E_4^2/2", _first_mismatch(modular_derivative(E6, 6), (E4 * E4).scale(Fraction(-1, 2)))))
    f, g = E4 * D, eta(K) ** 4
    lhs = modular_derivative(f * g, 16 + 2)
    rhs = modular_derivative(f, 16) * g + f * modular_derivative(g, 2)
    out.append(("Leibniz for D", _first_mismatch(lhs, rhs)))
    u = j_inverse(K)
    out.append(("u E_4^3 = 1728 Delta", _first_mismatch(u * E4**3, D.scale(1728))))
    f1, f2 = gamma2_basis(K)
    leads = 0 if (f1.lead, f2.lead) == (0, Fraction(1, 2)) else None
    out.append(("Gamma(2) basis lead exponents {0, 1/2}", None if leads == 0 else 0))
    c, residual = pin_wronskian_constant(K)
    bad = next((m for m, x in enumerate(residual.coeffs) if x), None)
    if c == 0:
        bad = 0
    out.append((f"W(f1, f2) = {c} eta^12", bad))
    return out
