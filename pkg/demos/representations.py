"""
Representations of SL_2(Z) and their T-spectra
==============================================

A representation is given by the images of S and T.  The relations
S^4 = 1 and S^2 = (ST)^3 are checked on construction; the eigenvalue
multiplicities of S and R = ST and the T-spectrum (rotations in [0, 1),
Jordan blocks, parity) drive everything else.
"""
from vvmf.catalog import gamma2_cosets, s7_rep, two_dim_row
from vvmf.exponents import CUSP, STANDARD, choose_exponents, t_spectrum
from vvmf.rep import RelationViolation, build_rep, character, direct_sum, dual, standard_rep, tensor_char

# S_7 acting on the trace-zero part of the permutation module
rho = s7_rep()
print(rho, "dimension", rho.dim)
print("S-eigenvalue multiplicities (i^s):", rho.mults.alpha)
print("R-eigenvalue multiplicities (xi^r):", rho.mults.beta)
spec = t_spectrum(rho)
print("T-rotations:", [str(r) for r in spec.rotations()])
print("Tr L, standard exponents:", choose_exponents(spec, STANDARD).trL)
print("Tr L, cusp exponents:    ", choose_exponents(spec, CUSP).trL)

# building new representations
sigma = direct_sum(two_dim_row(1), character(3), dual(gamma2_cosets()))
print("\nsum of three pieces has dimension", sigma.dim)
print("twisting by chi^5 shifts rotations by 5/12:",
      t_spectrum(tensor_char(two_dim_row(1), 5)) == t_spectrum(two_dim_row(1)).twist(5))

# a non-semisimple T: the standard representation has one 2x2 unipotent block
print("\nstandard representation:", t_spectrum(standard_rep()).entries)

# relations are enforced
try:
    build_rep([[1]], [[2]])
except RelationViolation as exc:
    print("\nrejected:", exc)
