"""
Free generators and bundle splittings
=====================================

For a positive representation the module of holomorphic forms is free over
C[E4, E6].  The generator weights come from the multiplicity tables, which
need only the S- and R-traces, the parity split and the trace of the exponents.
"""
from vvmf import classify, generator_weights, splitting
from vvmf.bundles import RepData, min_weight_bound
from vvmf.catalog import TWO_DIM_ROWS, gamma_n_cosets, s7_rep, two_dim_row


def data_of(rep):
    return RepData.from_repn(rep, classify(rep))


print("two-dimensional irreducibles:")
for trl in TWO_DIM_ROWS:
    data = data_of(two_dim_row(trl))
    ws = generator_weights(data).weights
    print(f"  Tr L = {str(trl):>4}  weights {ws}  bound {min_weight_bound(data)}  "
          f"weight-12 bundle {splitting(data, 12)}")

s7 = data_of(s7_rep())
print("\nS_7: weights", generator_weights(s7).weights)
print("S_7 bundle in weight k = 10:", splitting(s7, 10))

print("\nregular representations of Z/n:")
for n in (1, 2, 3, 4, 6, 12):
    print(f"  n = {n:>2}: {generator_weights(data_of(gamma_n_cosets(n))).weights}")

# sum rule
print("\nsum of weights:", sum(generator_weights(s7).weights), "= 12 Tr L =", 12 * s7.standard().trL)
