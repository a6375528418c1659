"""
q-expansions and the modular Wronskian
======================================

Exact rational power series for eta, Delta and Eisenstein series, the modular
derivative, and a weight-0 basis for Gamma(2) whose Wronskian is a constant
multiple of eta^12.
"""
from fractions import Fraction

from vvmf.qseries import (
    delta,
    eisenstein,
    eta_product,
    gamma2_basis,
    j_inverse,
    modular_derivative,
    pin_wronskian_constant,
    run_identity_suite,
)

K = 12
print("Delta:", list(delta(K).coeffs))
print("E4:   ", list(eisenstein(4, K).coeffs))
print("E6:   ", list(eisenstein(6, K).coeffs))
print("eta^24 == Delta:", eta_product(K) ** 24 == delta(K))
print("D_4 E_4 == -E_6 / 3:", modular_derivative(eisenstein(4, K), 4) == eisenstein(6, K).scale(Fraction(-1, 3)))

u = j_inverse(K)
print("\n1/j starts at q^%s:" % u.lead, list(u.coeffs[:5]))

f1, f2 = gamma2_basis(40)
print("Gamma(2) basis lead exponents:", f1.lead, f2.lead)
c, residual = pin_wronskian_constant(40)
print("W(f1, f2) = c eta^12 with c =", c, "; residual vanishes:", residual.is_zero())

print("\nidentity suite at order 200:")
for name, bad in run_identity_suite(200):
    print("  PASS" if bad is None else f"  FAIL at {bad}", name)
