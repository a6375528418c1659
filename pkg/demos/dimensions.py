"""
Dimensions, Hilbert series and weight one
=========================================

Dimensions follow from the Euler characteristic once positivity kills H^1.
In weight one the tables can leave y = dim S_1(dual) undetermined, and the
library reports a range instead of guessing.
"""
from vvmf import classify, dims, generator_weights, hilbert, resolve_y
from vvmf.bundles import RepData, Status
from vvmf.catalog import gamma2_cosets, s7_rep, two_dim_row, weight_one_ambiguous
from vvmf.rep import character


def data_of(rep):
    return RepData.from_repn(rep, classify(rep))


print("level one, k = 0..26:", dims(character(0), 0, 26).values())
print("cusp forms, k = 0..26:", dims(character(0), 0, 26, cusp=True).values())

g2 = data_of(gamma2_cosets())
print("\nGamma(2), even k = 0..20:", dims(g2, 0, 20).values()[::2])

num, series = hilbert(data_of(s7_rep()), 20)
print("S_7 Hilbert numerator:", num)
print("S_7 dims k = 0..19:", series)

# weight one
for trl in ("1/3", "1", "5/3"):
    print(f"\ny for the Tr L = {trl} row:", resolve_y(data_of(two_dim_row(trl))))

amb = data_of(weight_one_ambiguous())
print("\nambiguous case: y in", resolve_y(amb))
entry = dims(amb, 1, 1).entries[0]
print("dim M_1 is", entry.status.value, "with bounds", entry.bounds)
assert entry.status is Status.UNDETERMINED
for y in (0, 1):
    print(f"  if y = {y}: weights {generator_weights(amb, y).weights}")
