"""A seeded corpus of representations built from the worked examples by sums, twists and duals."""
import random
from fractions import Fraction

from vvmf.bundles import RepData, classify
from vvmf.catalog import TWO_DIM_ROWS, gamma2_cosets, gamma_n_cosets, s7_rep, two_dim_row
from vvmf.rep import character

_BASES = None


def bases() -> list[RepData]:
    global _BASES
    if _BASES is None:
        reps = [two_dim_row(t) for t in TWO_DIM_ROWS]
        reps += [s7_rep(), gamma2_cosets()]
        reps += [gamma_n_cosets(n) for n in (1, 2, 3, 4, 6, 12)]
        reps += [character(a) for a in range(12)]
        _BASES = [RepData.from_repn(r, classify(r)) for r in reps]
    return _BASES


def random_rep(rng: random.Random, depth: int = 2) -> RepData:
    b = bases()
    if depth == 0:
        return rng.choice(b)
    op = rng.random()
    if op < 0.4:
        return random_rep(rng, depth - 1).twist(rng.randrange(12))
    if op < 0.6:
        return random_rep(rng, depth - 1).dual()
    if op < 0.9:
        return random_rep(rng, depth - 1) + random_rep(rng, depth - 1)
    return rng.choice(b)


def corpus(n: int = 240, seed: int = 20261019) -> list[RepData]:
    rng = random.Random(seed)
    return [random_rep(rng, rng.randrange(1, 4)) for _ in range(n)]


def trl(data: RepData) -> Fraction:
    return data.standard().trL
