"""Exact arithmetic over Q and the cyclotomic fields Q(zeta_N).

Elements of Q(zeta_N) are stored as residues modulo the cyclotomic polynomial
Phi_N, i.e. as coefficient vectors in the power basis 1, z, ..., z^(phi(N)-1)
with z = exp(2*pi*i/N).  This representation is unique, so equality and zero
tests are exact.  Operands of different orders are promoted to the least
common multiple of their orders.

Coefficients are Python ints or :class:`fractions.Fraction`; both are exact.
"""
from __future__ import annotations

import cmath
import math
import re
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

__all__ = [
    "parse_rational",
    "phi_poly",
    "totient",
    "Cyclotomic",
    "CycMatrix",
    "SingularMatrixError",
    "embed",
    "kernel_dim",
    "zeta",
]


class SingularMatrixError(ArithmeticError):
    pass


_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def parse_rational(value) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` (or an int) into a Fraction.

    Decimal and float inputs are rejected: every quantity in this package
    is exact.
    """
    if isinstance(value, bool):
        raise ValueError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        m = _RATIONAL_RE.match(value)
        if m:
            den = int(m.group(2)) if m.group(2) is not None else 1
            if den == 0:
                raise ValueError(f"zero denominator in {value!r}")
            return Fraction(int(m.group(1)), den)
    raise ValueError(f"not a rational in 'p/q' form: {value!r}")


def _lcm(a: int, b: int) -> int:
    return a * b // math.gcd(a, b)


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _poly_divexact(num: list[int], den: tuple[int, ...]) -> list[int]:
    # den is monic; coefficients are stored low degree first
    num = list(num)
    dn = len(den) - 1
    out = [0] * (len(num) - dn)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + dn]
        out[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    if any(num[:dn]):
        raise ArithmeticError("polynomial division is not exact")
    return out


@lru_cache(maxsize=None)
def phi_poly(n: int) -> tuple[int, ...]:
    """Integer coefficients of the n-th cyclotomic polynomial, constant term first."""
    if n < 1:
        raise ValueError("cyclotomic order must be positive")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in _divisors(n)[:-1]:
        poly = _poly_divexact(poly, phi_poly(d))
    return tuple(poly)


def totient(n: int) -> int:
    return len(phi_poly(n)) - 1


def _mobius(n: int) -> int:
    result, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    return -result if n > 1 else result


class _Field:
    """Reduction data for Q(zeta_N): the residue of z^k mod Phi_N for 0 <= k < N."""

    __slots__ = ("order", "degree", "powers", "trace_weights")

    def __init__(self, n: int):
        poly = phi_poly(n)
        deg = len(poly) - 1
        powers = []
        cur = [1] + [0] * (deg - 1) if deg else []
        for _ in range(n):
            powers.append(tuple(cur))
            # multiply by z and reduce with z^deg = -(poly[0] + ... )
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                for j in range(deg):
                    cur[j] -= top * poly[j]
        self.order = n
        self.degree = deg
        self.powers = powers
        # trace(z^j) / degree: Ramanujan sum divided by phi(n)
        weights = []
        for j in range(deg):
            m = n // math.gcd(n, j)
            weights.append(Fraction(_mobius(m), totient(m)))
        self.trace_weights = tuple(weights)


@lru_cache(maxsize=None)
def _field(n: int) -> _Field:
    return _Field(n)


def _reduce_powers(n: int, terms) -> tuple:
    """Residue of sum c * z^k for (k, c) pairs; k may be any integer."""
    F = _field(n)
    out = [0] * F.degree
    for k, c in terms:
        if c:
            row = F.powers[k % n]
            for j, r in enumerate(row):
                if r:
                    out[j] += c * r
    return tuple(out)


class Cyclotomic:
    """An element of Q(zeta_N) in the power basis modulo Phi_N."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs):
        self.order = order
        self.coeffs = tuple(coeffs)
        if len(self.coeffs) != totient(order):
            raise ValueError(f"order {order} needs {totient(order)} coefficients")

    @classmethod
    def _raw(cls, order: int, coeffs: tuple) -> "Cyclotomic":
        obj = object.__new__(cls)
        obj.order = order
        obj.coeffs = coeffs
        return obj

    # constructors
    @classmethod
    def rational(cls, q) -> "Cyclotomic":
        if isinstance(q, Cyclotomic):
            return q
        if not isinstance(q, Rational):
            raise TypeError(f"cannot make a cyclotomic number from {q!r}")
        return cls._raw(1, (q,))

    @classmethod
    def from_powers(cls, order: int, coeffs) -> "Cyclotomic":
        """sum_j coeffs[j] * zeta_order^j, for a sequence of any length or a dict."""
        items = coeffs.items() if isinstance(coeffs, dict) else enumerate(coeffs)
        return cls._raw(order, _reduce_powers(order, items))

    # predicates and conversions
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self.coeffs[0])

    def to_int(self) -> int:
        q = self.to_rational()
        if q.denominator != 1:
            raise ValueError(f"{self} is not an integer")
        return q.numerator

    def __complex__(self) -> complex:
        w = cmath.exp(2j * cmath.pi / self.order)
        return sum((float(c) * w**j for j, c in enumerate(self.coeffs) if c), 0j)

    def embed(self, m: int) -> "Cyclotomic":
        if m % self.order:
            raise ValueError(f"order {self.order} does not divide {m}")
        if m == self.order:
            return self
        step = m // self.order
        return Cyclotomic._raw(
            m, _reduce_powers(m, ((j * step, c) for j, c in enumerate(self.coeffs)))
        )

    def conjugate(self) -> "Cyclotomic":
        """Complex conjugate, i.e. the Galois automorphism z -> z^-1."""
        n = self.order
        return Cyclotomic._raw(n, _reduce_powers(n, ((-j, c) for j, c in enumerate(self.coeffs))))

    def normalized_trace(self) -> Fraction:
        """Tr_{Q(zeta_N)/Q}(x) / phi(N); independent of the embedding order."""
        w = _field(self.order).trace_weights
        return sum((c * t for c, t in zip(self.coeffs, w) if c), Fraction(0))

    # arithmetic
    @staticmethod
    def _lift(a, b) -> tuple[int, tuple, tuple]:
        if not isinstance(b, Cyclotomic):
            if isinstance(b, Rational):
                b = Cyclotomic._raw(1, (b,))
            else:
                return None
        if a.order == b.order:
            return a.order, a.coeffs, b.coeffs
        n = _lcm(a.order, b.order)
        return n, a.embed(n).coeffs, b.embed(n).coeffs

    def __add__(self, other):
        lifted = Cyclotomic._lift(self, other)
        if lifted is None:
            return NotImplemented
        n, a, b = lifted
        return Cyclotomic._raw(n, tuple(x + y for x, y in zip(a, b)))

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic._raw(self.order, tuple(-x for x in self.coeffs))

    def __sub__(self, other):
        lifted = Cyclotomic._lift(self, other)
        if lifted is None:
            return NotImplemented
        n, a, b = lifted
        return Cyclotomic._raw(n, tuple(x - y for x, y in zip(a, b)))

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, Rational) and not isinstance(other, Cyclotomic):
            return Cyclotomic._raw(self.order, tuple(x * other for x in self.coeffs))
        lifted = Cyclotomic._lift(self, other)
        if lifted is None:
            return NotImplemented
        n, a, b = lifted
        if n == 1:
            return Cyclotomic._raw(1, (a[0] * b[0],))
        return Cyclotomic._raw(n, _mul_coeffs(n, a, b))

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        n = self.order
        if n == 1:
            return Cyclotomic._raw(1, (Fraction(1) / self.coeffs[0],))
        return Cyclotomic._raw(n, _inverse_coeffs(n, self.coeffs))

    def __truediv__(self, other):
        if isinstance(other, Rational) and not isinstance(other, Cyclotomic):
            return Cyclotomic._raw(self.order, tuple(Fraction(x) / other for x in self.coeffs))
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return Cyclotomic.rational(other) * self.inverse()

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        base = self if e >= 0 else self.inverse()
        e = abs(e)
        result = Cyclotomic._raw(1, (1,))
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        lifted = Cyclotomic._lift(self, other)
        if lifted is None:
            return NotImplemented
        _, a, b = lifted
        return a == b

    def __hash__(self):
        return hash(self.normalized_trace())

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"Cyclotomic({self.order}, {tuple(str(c) for c in self.coeffs)})"

    def __str__(self):
        if self.is_rational():
            return str(Fraction(self.coeffs[0]))
        parts = []
        for j, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if j == 0 else (f"z{self.order}" if j == 1 else f"z{self.order}^{j}")
            if not mono:
                parts.append(str(Fraction(c)))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{Fraction(c)}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def _mul_coeffs(n: int, a: tuple, b: tuple) -> tuple:
    F = _field(n)
    deg = F.degree
    prod = [0] * (2 * deg - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    prod[i + j] += x * y
    out = prod[:deg]
    powers = F.powers
    for k in range(deg, 2 * deg - 1):
        c = prod[k]
        if c:
            for j, r in enumerate(powers[k % n]):
                if r:
                    out[j] += c * r
    return tuple(out)


@lru_cache(maxsize=4096)
def _inverse_coeffs(n: int, coeffs: tuple) -> tuple:
    deg = len(coeffs)
    # columns of the multiplication-by-x map in the power basis
    cols = [_mul_coeffs(n, coeffs, _field(n).powers[j]) for j in range(deg)]
    mat = [[Fraction(cols[j][i]) for j in range(deg)] + [Fraction(int(i == 0))] for i in range(deg)]
    return tuple(_solve_rational(mat, deg))


def _solve_rational(aug: list[list[Fraction]], n: int) -> list[Fraction]:
    """Solve an n x n system given as an augmented matrix; raises if singular."""
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise SingularMatrixError("singular rational system")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [aug[r][n] for r in range(n)]


def zeta(n: int, k: int = 1) -> Cyclotomic:
    """The root of unity exp(2*pi*i*k/n) as an element of Q(zeta_n)."""
    return Cyclotomic._raw(n, _field(n).powers[k % n])


def embed(x: Cyclotomic, m: int) -> Cyclotomic:
    return x.embed(m)


def as_cyclotomic(x) -> Cyclotomic:
    if isinstance(x, Cyclotomic):
        return x
    if isinstance(x, str):
        return Cyclotomic.rational(parse_rational(x))
    return Cyclotomic.rational(x)


class CycMatrix:
    """Dense matrix whose entries all live in one cyclotomic field Q(zeta_order)."""

    __slots__ = ("rows", "cols", "order", "entries")

    def __init__(self, entries, order: int | None = None):
        rows = [[as_cyclotomic(x) for x in row] for row in entries]
        if not rows or not rows[0]:
            raise ValueError("matrix must be non-empty")
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged matrix")
        n = order or 1
        for row in rows:
            for x in row:
                n = _lcm(n, x.order)
        if order is not None and n != order:
            raise ValueError(f"entries need order {n}, got {order}")
        self.rows = len(rows)
        self.cols = ncols
        self.order = n
        self.entries = tuple(tuple(x.embed(n) for x in row) for row in rows)

    @classmethod
    def _raw(cls, order: int, entries) -> "CycMatrix":
        obj = object.__new__(cls)
        obj.entries = tuple(tuple(r) for r in entries)
        obj.rows = len(obj.entries)
        obj.cols = len(obj.entries[0])
        obj.order = order
        return obj

    @classmethod
    def identity(cls, n: int, order: int = 1) -> "CycMatrix":
        one, zero = zeta(order, 0), Cyclotomic._raw(order, (0,) * totient(order))
        return cls._raw(order, [[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int, order: int = 1) -> "CycMatrix":
        zero = Cyclotomic._raw(order, (0,) * totient(order))
        return cls._raw(order, [[zero] * cols for _ in range(rows)])

    @classmethod
    def diagonal(cls, values) -> "CycMatrix":
        values = [as_cyclotomic(v) for v in values]
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def block_diag(cls, *blocks: "CycMatrix") -> "CycMatrix":
        n = 1
        for b in blocks:
            n = _lcm(n, b.order)
        blocks = [b.embed(n) for b in blocks]
        size = sum(b.rows for b in blocks)
        zero = Cyclotomic._raw(n, (0,) * totient(n))
        out = [[zero] * size for _ in range(size)]
        off = 0
        for b in blocks:
            for i in range(b.rows):
                for j in range(b.cols):
                    out[off + i][off + j] = b.entries[i][j]
            off += b.rows
        return cls._raw(n, out)

    def embed(self, m: int) -> "CycMatrix":
        if m == self.order:
            return self
        return CycMatrix._raw(m, [[x.embed(m) for x in row] for row in self.entries])

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def is_square(self) -> bool:
        return self.rows == self.cols

    def _require_square(self):
        if not self.is_square():
            raise ValueError(f"square matrix required, got {self.rows}x{self.cols}")

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def _pair(self, other: "CycMatrix"):
        if self.order == other.order:
            return self, other
        n = _lcm(self.order, other.order)
        return self.embed(n), other.embed(n)

    def __matmul__(self, other: "CycMatrix") -> "CycMatrix":
        if not isinstance(other, CycMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        a, b = self._pair(other)
        n = a.order
        zero = Cyclotomic._raw(n, (0,) * totient(n))
        # sparse rows of b: skip zero entries (permutation and block matrices)
        b_rows = [[(j, x) for j, x in enumerate(row) if not x.is_zero()] for row in b.entries]
        out = []
        for row in a.entries:
            acc = {}
            for k, x in enumerate(row):
                if x.is_zero():
                    continue
                for j, y in b_rows[k]:
                    p = x * y
                    acc[j] = acc[j] + p if j in acc else p
            out.append([acc.get(j, zero) for j in range(b.cols)])
        return CycMatrix._raw(n, out)

    def __mul__(self, other):
        if isinstance(other, CycMatrix):
            return self @ other
        s = as_cyclotomic(other)
        n = _lcm(self.order, s.order)
        s = s.embed(n)
        return CycMatrix._raw(n, [[x.embed(n) * s for x in row] for row in self.entries])

    __rmul__ = __mul__

    def __add__(self, other: "CycMatrix") -> "CycMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        a, b = self._pair(other)
        return CycMatrix._raw(a.order, [[x + y for x, y in zip(r, s)] for r, s in zip(a.entries, b.entries)])

    def __sub__(self, other: "CycMatrix") -> "CycMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        a, b = self._pair(other)
        return CycMatrix._raw(a.order, [[x - y for x, y in zip(r, s)] for r, s in zip(a.entries, b.entries)])

    def __neg__(self):
        return CycMatrix._raw(self.order, [[-x for x in row] for row in self.entries])

    def __pow__(self, e: int) -> "CycMatrix":
        self._require_square()
        base = self if e >= 0 else self.inverse()
        e = abs(e)
        result = CycMatrix.identity(self.rows, self.order)
        while e:
            if e & 1:
                result = result @ base
            e >>= 1
            if e:
                base = base @ base
        return result

    def __eq__(self, other):
        if not isinstance(other, CycMatrix):
            return NotImplemented
        if self.shape != other.shape:
            return False
        a, b = self._pair(other)
        return a.entries == b.entries

    def __hash__(self):
        return hash(self.key())

    def key(self) -> tuple:
        """Hashable exact key; equal keys iff equal matrices of the same order."""
        return (self.order, tuple(tuple(x.coeffs for x in row) for row in self.entries))

    def transpose(self) -> "CycMatrix":
        return CycMatrix._raw(self.order, list(zip(*self.entries)))

    T = property(transpose)

    def trace(self) -> Cyclotomic:
        self._require_square()
        total = Cyclotomic._raw(self.order, (0,) * totient(self.order))
        for i in range(self.rows):
            total = total + self.entries[i][i]
        return total

    def is_identity(self) -> bool:
        if not self.is_square():
            return False
        for i, row in enumerate(self.entries):
            for j, x in enumerate(row):
                if i == j:
                    if x.coeffs[0] != 1 or any(x.coeffs[1:]):
                        return False
                elif not x.is_zero():
                    return False
        return True

    def is_zero(self) -> bool:
        return all(x.is_zero() for row in self.entries for x in row)

    def vstack(self, other: "CycMatrix") -> "CycMatrix":
        if self.cols != other.cols:
            raise ValueError("column mismatch")
        a, b = self._pair(other)
        return CycMatrix._raw(a.order, a.entries + b.entries)

    def _echelon(self, augment: "CycMatrix | None" = None):
        """Gauss-Jordan elimination over Q(zeta_order); returns (rows, pivot columns)."""
        rows = [list(r) for r in self.entries]
        if augment is not None:
            rows = [r + list(s) for r, s in zip(rows, augment.entries)]
        ncols = self.cols
        pivots = []
        r = 0
        for c in range(ncols):
            piv = next((i for i in range(r, len(rows)) if not rows[i][c].is_zero()), None)
            if piv is None:
                continue
            rows[r], rows[piv] = rows[piv], rows[r]
            inv = rows[r][c].inverse()
            rows[r] = [x * inv if not x.is_zero() else x for x in rows[r]]
            for i in range(len(rows)):
                if i != r and not rows[i][c].is_zero():
                    f = rows[i][c]
                    rows[i] = [x - f * y if not y.is_zero() else x for x, y in zip(rows[i], rows[r])]
            pivots.append(c)
            r += 1
            if r == len(rows):
                break
        return rows, pivots

    def rank(self) -> int:
        return len(self._echelon()[1])

    def kernel_dim(self) -> int:
        return self.cols - self.rank()

    def inverse(self) -> "CycMatrix":
        self._require_square()
        n = self.rows
        rows, pivots = self._echelon(CycMatrix.identity(n, self.order))
        if len(pivots) < n:
            raise SingularMatrixError("matrix is singular")
        return CycMatrix._raw(self.order, [r[n:] for r in rows])

    def to_complex(self) -> list[list[complex]]:
        return [[complex(x) for x in row] for row in self.entries]

    def __repr__(self):
        body = "; ".join(", ".join(str(x) for x in row) for row in self.entries)
        return f"CycMatrix[{self.order}]([{body}])"


def kernel_dim(m: CycMatrix) -> int:
    return m.kernel_dim()
