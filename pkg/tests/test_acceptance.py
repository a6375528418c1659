"""End-to-end acceptance checks; each criterion reports one PASS/FAIL line.

The lines are collected in ``RESULTS`` and printed by the terminal-summary hook
in conftest.py.  Running this file directly also prints them.
"""
import cmath
import random
import sys
import time
from fractions import Fraction

import numpy as np
import pytest

from vvmf.bundles import (
    BundleSpec,
    RepData,
    _pin,
    bundle_splitting,
    classify,
    cusp_generator_weights,
    dims,
    dual_spec,
    euler_char,
    euler_char_rr,
    generator_weights,
    resolve_y,
    splitting,
    table_rows,
)
from vvmf.catalog import TWO_DIM_ROWS, gamma2_cosets, gamma_n_cosets, s7_rep, weight_one_ambiguous
from vvmf.cli import main, rep_to_descriptor
from vvmf.exact import zeta
from vvmf.exponents import Interval, choose_exponents
from vvmf.qseries import QExp, modular_derivative, run_identity_suite
from vvmf.rep import character, dual, two_dim_irrep
from vvmf.wpline import P46, euler_line, h0, serre_check

from corpus import corpus

RESULTS = {}


def report(n, ok, detail):
    RESULTS[n] = f"ACCEPTANCE {n}: {'PASS' if ok else 'FAIL'} - {detail}"
    print(RESULTS[n])


def checked(n, detail):
    """Run a criterion body; record PASS with ``detail`` or FAIL with the assertion."""
    def wrap(fn):
        def run(*args, **kwargs):
            try:
                extra = fn(*args, **kwargs)
            except AssertionError as exc:
                report(n, False, f"{detail}: {exc}")
                raise
            report(n, True, detail + (f" ({extra})" if extra else ""))
        run.__name__ = fn.__name__
        return run
    return wrap


def data_of(rep):
    return RepData.from_repn(rep, classify(rep))


# the 2-dimensional table, transcribed: Tr L -> (Tr R, Tr R^2, k1, k2), with z a primitive cube root of 1
Z = zeta(3)
TABLE = {
    Fraction(1, 3): (-Z - 1, -Z, 1, 3),
    Fraction(1, 2): (-1, -1, 2, 4),
    Fraction(2, 3): (Z, Z + 1, 3, 5),
    Fraction(5, 6): (Z + 1, -Z, 4, 6),
    Fraction(1): (1, -1, 5, 7),
    Fraction(7, 6): (-Z, Z + 1, 6, 8),
    Fraction(4, 3): (-Z - 1, -Z, 7, 9),
    Fraction(3, 2): (-1, -1, 8, 10),
    Fraction(5, 3): (Z, Z + 1, 9, 11),
}


@checked(1, "nine 2-dim rows: weights, splittings and R-traces exact")
def test_criterion_1_two_dimensional_table():
    start = time.perf_counter()
    for trl, (tr_r, tr_r2, k1, k2) in TABLE.items():
        rep = two_dim_irrep(*TWO_DIM_ROWS[trl][0])
        R = rep.S @ rep.T
        assert R.trace() == tr_r and (R @ R).trace() == tr_r2, f"traces of row {trl}"
        data = data_of(rep)
        assert data.standard().trL == trl
        assert generator_weights(data).weights == (k1, k2), f"weights of row {trl}"
        for k in range(-5, 30):
            want = sorted((int(k - 6 * trl + 1), int(k - 6 * trl - 1)), reverse=True)
            assert list(splitting(data, k).summands) == want, f"splitting of row {trl} at k={k}"
    elapsed = time.perf_counter() - start
    assert elapsed < 1, f"took {elapsed:.2f}s"
    return f"{elapsed:.2f}s"


@checked(2, "S_7: Tr L = 5/2, weights {2,4,4,6,6,8}, splitting O(k-2)+2O(k-4)+2O(k-6)+O(k-8)")
def test_criterion_2_s7():
    data = data_of(s7_rep())
    assert data.standard().trL == Fraction(5, 2)
    assert generator_weights(data).weights == (2, 4, 4, 6, 6, 8)
    for k in range(-20, 40):
        assert splitting(data, k).summands == (k - 2, k - 4, k - 4, k - 6, k - 6, k - 8)


def monomials(k):
    return sum(1 for a in range(k // 4 + 1) for b in range(k // 6 + 1) if 4 * a + 6 * b == k)


@checked(3, "Gamma(2): weights {0,2,2,4,4,6}; dims k/2+1 for even 2..40 by two routes")
def test_criterion_3_gamma2():
    data = data_of(gamma2_cosets())
    ws = generator_weights(data).weights
    assert ws == (0, 2, 2, 4, 4, 6)
    values = dims(data, 0, 40).values()
    for k in range(2, 41, 2):
        oracle = sum(monomials(k - w) for w in (0, 2, 2, 4, 4, 6) if k >= w)
        assert values[k] == k // 2 + 1 == oracle, f"k={k}"


@checked(4, "Gamma_n: weights {12i/n} for every n dividing 12")
def test_criterion_4_gamma_n():
    for n in (1, 2, 3, 4, 6, 12):
        ws = generator_weights(data_of(gamma_n_cosets(n))).weights
        assert ws == tuple(12 * i // n for i in range(n)), f"n={n}"


@checked(5, "characters: dim M_k(chi^a) = h0(O(k-a-12t)), a in 0..11, t in {0,1}, -10 <= k <= 100")
def test_criterion_5_characters():
    for a in range(12):
        data = data_of(character(a))
        plain = dims(data, -22, 100).values()
        assert None not in plain, f"a={a} has undetermined dims"
        for k in range(-10, 101):
            assert plain[k + 22] == h0(P46, k - a), f"a={a}, t=0, k={k}"
            # forms with exponent a/12 + 1 are Delta times forms of weight k - 12
            assert plain[k - 12 + 22] == h0(P46, k - a - 12), f"a={a}, t=1, k={k}"
            b = BundleSpec(data, k, choose_exponents(data.spectrum, Interval(Fraction(a, 12) + 1)))
            assert euler_char(b) == euler_line(P46, k - a - 12)
            assert bundle_splitting(b).summands == (k - a - 12,)


@checked(6, "corpus: integrality, sum rule, congruences, Euler = sum of lines, Serre, cusp duality")
def test_criterion_6_corpus():
    start = time.perf_counter()
    items = corpus(240)
    exact = ambiguous = 0
    for i, data in enumerate(items):
        std = data.standard()
        for k in (-7, 0, 1, 5, 13):
            b = BundleSpec(data, k, std)
            assert Fraction(euler_char(b)) == euler_char_rr(b), f"item {i}: Riemann-Roch at k={k}"
        gw = generator_weights(data)
        if not gw.is_exact:
            ambiguous += 1
            continue
        exact += 1
        ws = gw.weights
        assert len(ws) == data.dim and sum(ws) == 12 * std.trL, f"item {i}: sum rule"
        m = data.mults
        assert tuple(sum(1 for w in ws if (-w) % 4 == s) for s in range(4)) == m.alpha, f"item {i}: mod 4"
        assert tuple(sum(1 for w in ws if (-w) % 6 == r) for r in range(6)) == m.beta, f"item {i}: mod 6"
        for k in range(2, 61):
            assert euler_char(BundleSpec(data, k, std), cross_check=False) == sum(
                euler_line(P46, k - w) for w in ws), f"item {i}: k={k}"
        for k in (-30, -3, 4, 17):
            b = BundleSpec(data, k, std)
            d = dual_spec(b, 0)
            assert euler_char(BundleSpec(d.data, d.k - 10, d.exps)) == -euler_char(b), f"item {i}: Serre"
        assert cusp_generator_weights(data.dual()) == tuple(sorted(12 - w for w in ws)), f"item {i}: cusp"
    assert all(serre_check(P46, k) for k in range(-200, 201)), "line-bundle Serre"
    elapsed = time.perf_counter() - start
    assert exact >= 200, f"only {exact} exact items"
    assert elapsed < 60, f"took {elapsed:.1f}s"
    return f"{exact} exact, {ambiguous} with undetermined weight 1, {elapsed:.1f}s"


@checked(7, "q-series identities to order 200 with nonzero Wronskian constant")
def test_criterion_7_qseries():
    start = time.perf_counter()
    results = run_identity_suite(200)
    bad = [(name, idx) for name, idx in results if idx is not None]
    assert not bad, f"failures {bad}"
    rng = random.Random(7)
    for _ in range(3):
        f = QExp(Fraction(0), [Fraction(rng.randint(-50, 50), rng.randint(1, 9)) for _ in range(200)])
        g = QExp(Fraction(0), [Fraction(rng.randint(-50, 50), rng.randint(1, 9)) for _ in range(200)])
        k, l = rng.randint(0, 12), rng.randint(0, 12)
        assert modular_derivative(f * g, k + l) == modular_derivative(f, k) * g + f * modular_derivative(g, l)
    elapsed = time.perf_counter() - start
    assert elapsed < 10, f"took {elapsed:.1f}s"
    return f"{len(results)} identities, {results[-1][0]}, {elapsed:.1f}s"


ODD_ROWS = [t for t in TWO_DIM_ROWS if t.denominator in (1, 3)]


def dual_weight_one_oracle(rep):
    """dim S_1 of the dual from numeric T-eigenvalues and the cyclic-generator weights 6 Tr L -+ 1."""
    ev = np.linalg.eigvals(np.array(dual(rep).T.to_complex()))
    rots = [Fraction((cmath.phase(z) / (2 * cmath.pi)) % 1).limit_denominator(48) % 1 for z in ev]
    trl = sum(rots)
    weights = (6 * trl - 1, 6 * trl + 1)
    count = sum(1 for w in weights if w == 1)
    # with a zero rotation some weight-1 form might fail to be cuspidal; that never happens for count 0
    assert count == 0 or 0 not in rots
    return count


def odd_row_values():
    out = {}
    for trl in ODD_ROWS:
        data = data_of(two_dim_irrep(*TWO_DIM_ROWS[trl][0]))
        out[trl] = (_pin(table_rows(data), (1, 3, 5, 7, 9, 11)), resolve_y(data))
    return out


def test_criterion_8_weight_one_honesty(tmp_path, capsys):
    import json

    values = odd_row_values()
    problems = []
    for trl, (pinned, y) in values.items():
        oracle = dual_weight_one_oracle(two_dim_irrep(*TWO_DIM_ROWS[trl][0]))
        if not (y.is_exact and y.value == oracle and oracle in pinned):
            problems.append(f"row {trl}: pinned {pinned}, resolve_y {y}, oracle {oracle}")
    path = tmp_path / "ambiguous.json"
    path.write_text(json.dumps(rep_to_descriptor(weight_one_ambiguous())), encoding="utf-8")
    code = main(["weights", str(path)])
    capsys.readouterr()
    if code != 3:
        problems.append(f"CLI exit {code} on the ambiguous case")
    nonzero = {str(t): y.value for t, (_, y) in values.items() if y.is_exact and y.value != 0}
    # rows where the table bounds alone leave a range and the weight-2 route decides
    by_eta = [str(t) for t, (pinned, _) in values.items() if not pinned.is_exact]
    if problems:
        report(8, False, "; ".join(problems))
    elif nonzero:
        report(8, False, f"resolve_y is exact on all odd rows and matches the oracle (weight-2 route "
                         f"needed for rows {by_eta}), CLI exits 3 when pinning fails; but Exact(0) "
                         f"does not hold for {nonzero} (the dual has a weight-1 generator)")
    else:
        report(8, True, "odd rows resolve to Exact(0); CLI exits 3 when pinning fails")
    assert not problems


@pytest.mark.xfail(strict=True, reason="the dual of the Tr L = 5/3 row has weights (1, 3), so y = 1")
def test_criterion_8_literal_zero_on_every_odd_row():
    assert all(y.is_exact and y.value == 0 for _, y in odd_row_values().values())


if __name__ == "__main__":
    code = pytest.main([__file__, "-q", "-p", "no:cacheprovider"])
    sys.exit(code)
