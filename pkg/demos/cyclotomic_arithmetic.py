"""
Exact arithmetic in cyclotomic fields
=====================================

Elements of Q(zeta_N) are stored as rational residues modulo the N-th
cyclotomic polynomial, so equality tests are exact.
"""
from fractions import Fraction

from vvmf.exact import CycMatrix, Cyclotomic, zeta

z = zeta(12)
print("zeta_12^12 == 1:", z**12 == 1)
print("zeta_12^3 is i; i^2 =", z**3 * z**3)

# 1 + w + w^2 = 0 for a primitive cube root of unity
w = zeta(3)
print("1 + w + w^2 =", 1 + w + w * w)

# mixing orders lifts both sides to a common field
x = zeta(4) + zeta(3)
print("i + w lives in order", x.order, "with inverse", x.inverse())
print("x * x^-1 =", x * x.inverse())

# complex embedding for a sanity look
print("numeric value:", complex(x))

# matrices: rank, inverse, trace
S = CycMatrix([[0, -1], [1, 0]])
T = CycMatrix([[1, 1], [0, 1]])
R = S @ T
print("R^6 is the identity:", (R**6).is_identity())
print("trace of R:", R.trace(), "rank of R - I:", (R - CycMatrix.identity(2)).rank())
print("a rational element:", Cyclotomic.rational(Fraction(3, 7)))
