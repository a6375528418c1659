"""
Line bundles on the weighted projective line P(4, 6)
====================================================

h0(O(k)) counts monomials E4^a E6^b of weight k; h1 counts pairs of
negative exponents.  Every vector bundle splits into line bundles, and the
splitting can be read off a Hilbert function.
"""
from vvmf.wpline import (
    P46,
    SplittingType,
    euler_line,
    h0,
    h1,
    hilbert_from_splitting,
    serre_check,
    splitting_from_hilbert,
)

print("h0(O(k)) for k = 0..24:", [h0(P46, k) for k in range(25)])
print("h1(O(-10)) =", h1(P46, -10), " h1(O(-22)) =", h1(P46, -22))
print("Euler characteristics around zero:", {k: euler_line(P46, k) for k in range(-14, 3)})
print("Serre duality on |k| <= 500:", all(serre_check(P46, k) for k in range(-500, 501)))

# round trip a splitting through its Hilbert function
split = SplittingType((-2, -4, -4, -6, -6, -8))
h = hilbert_from_splitting(P46, split, 0, 60)
print("\nHilbert function of", split, ":", [h[k] for k in range(0, 20)])
print("recovered:", splitting_from_hilbert(P46, h, split.rank))
