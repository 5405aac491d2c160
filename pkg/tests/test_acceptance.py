"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Tolerances are absolute per T-coefficient and pinned here; every numeric
comparison must also sit inside the evaluator's own summed error bounds
(enforced inside the identity verifiers).  Run with `pytest -s` to see the
per-criterion lines, or `mzvstar suite` for the service-side equivalent.
"""

import math
import time
from collections import Counter
from fractions import Fraction

import mpmath
import pytest

from mzvstar.combinatorics import (
    bell_partial,
    bell_partial_by_shapes,
    enum_restricted_partitions,
    enum_set_partitions,
    partition_shape_count,
    partition_shapes,
    stirling_second,
)
from mzvstar.identities import example1_rows, indices_by_weight, verify
from mzvstar.indices import Index

from helpers import mp_diff

mpmath.mp.dps = 60

TOL_EXAMPLE1 = 1e-8
TOL_THEOREM1 = 1e-7
TOL_COROLLARY1 = 1e-8
TOL_PROP3_NUMERIC = 1e-10
TOL_REMARK_STAR = 1e-10
TOL_REG_CROSS = 1e-7
TOL_FLOOR = 1e-9

_passed_lines = []


def criterion(number: int, description: str, ok: bool, seconds: float):
    line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {description} [{seconds:.1f}s]"
    print(line)
    assert ok, line


def test_criterion_01_example1_first_display(evaluator):
    started = time.perf_counter()
    rows = example1_rows([2, 3, 4], [], evaluator, tolerance=TOL_EXAMPLE1)
    rows = [r for r in rows if r.params["display"] == 1]
    elapsed = time.perf_counter() - started
    ok = len(rows) == 3 and all(r.passed for r in rows) and elapsed < 10.0
    criterion(1, "Example 1 display 1 for k in {2,3,4} at 1e-8, under 10s", ok, elapsed)


def test_criterion_02_example1_remaining_displays(evaluator):
    started = time.perf_counter()
    rows = example1_rows([2, 3], [2, 3], evaluator, tolerance=TOL_EXAMPLE1)
    rows = [r for r in rows if r.params["display"] in (2, 3)]
    elapsed = time.perf_counter() - started
    ok = len(rows) == 6 and all(r.passed for r in rows) and elapsed < 30.0
    criterion(2, "Example 1 displays 2-3 for k,l in {2,3} at 1e-8, under 30s", ok, elapsed)


def test_criterion_03_theorem1_sweep(evaluator):
    started = time.perf_counter()
    failures = []
    for index in indices_by_weight(7, 4):
        report = verify(
            "theorem1", {"index": str(index), "tolerance": TOL_THEOREM1}, evaluator
        )
        if not report.passed:
            failures.append(str(index))
    elapsed = time.perf_counter() - started
    ok = not failures and elapsed < 300.0
    criterion(
        3,
        f"Theorem 1 on all 98 indices of weight<=7, depth<=4 at 1e-7 ({failures or 'none failed'})",
        ok,
        elapsed,
    )


def test_criterion_04_corollary1(evaluator):
    started = time.perf_counter()
    ok = True
    for k in range(2, 6):
        for r in range(1, 6):
            report = verify(
                "corollary1", {"k": k, "r": r, "tolerance": TOL_COROLLARY1}, evaluator
            )
            ok = ok and report.passed
    for r in range(1, 9):
        ok = ok and verify("cor1-count", {"r": r}, evaluator).passed
    elapsed = time.perf_counter() - started
    criterion(4, "Corollary 1 for k in 2..5, r in 1..5 at 1e-8 plus exact block counts r<=8", ok, elapsed)


def test_criterion_05_prop3(evaluator):
    started = time.perf_counter()
    ok = True
    for r in range(1, 7):
        ok = ok and verify("prop3-1", {"r": r, "tolerance": TOL_PROP3_NUMERIC}, evaluator).passed
    for r in range(1, 9):
        report = verify("prop3-2", {"r": r}, evaluator)
        ok = ok and report.passed and report.exact
    elapsed = time.perf_counter() - started
    criterion(5, "Prop 3: eq 1 numerically at 1e-10 for r<=6, eq 2 exactly for r<=8", ok, elapsed)


def test_criterion_06_lemma1(evaluator):
    started = time.perf_counter()
    ok = True
    for r in range(1, 8):
        report = verify("lemma1", {"r": r}, evaluator)
        ok = ok and report.passed and report.exact
    elapsed = time.perf_counter() - started
    criterion(6, "Lemma 1 as an exact symbol-level identity for r<=7", ok, elapsed)


def test_criterion_07_remark(evaluator):
    started = time.perf_counter()
    ok = True
    for r in range(1, 13):
        report = verify("remark-bell", {"r": r}, evaluator)
        ok = ok and report.passed and report.exact
    for r in range(1, 7):
        ok = ok and verify("remark-star", {"r": r, "tolerance": TOL_REMARK_STAR}, evaluator).passed
    elapsed = time.perf_counter() - started
    criterion(7, "Remark: r! Bell identity exactly to r=12; star variant at 1e-10 to r=6", ok, elapsed)


def test_criterion_08_props_1_and_2(evaluator):
    started = time.perf_counter()
    ok = True
    for r in range(1, 8):
        ok = ok and verify("prop1", {"r": r}, evaluator).passed
        ok = ok and verify("prop2", {"r": r}, evaluator).passed
    # the worked restricted-partition case (r, A, B) = (4, {1,2,3}, {3,4})
    full = {str(p) for p in enum_set_partitions({1, 2, 3})}
    restricted = {str(p) for p in enum_restricted_partitions({1, 2, 3}, {3, 4})}
    ok = ok and full == {"1|2|3", "12|3", "13|2", "1|23", "123"}
    ok = ok and restricted == {"13|2", "1|23", "123"}
    # the factorization statement on mixed indices
    for text in ("2,1", "1,2,1", "2,1,1,3"):
        ok = ok and verify("prop2", {"index": text}, evaluator).passed
    elapsed = time.perf_counter() - started
    criterion(8, "Props 1-2 exactly for all r<=7 and all proper subsets, incl. worked case", ok, elapsed)


def test_criterion_09_regularization_cross_check(evaluator):
    started = time.perf_counter()
    failures = []
    for index in indices_by_weight(6, 3):
        report = verify(
            "reg-theorem", {"index": str(index), "tolerance": TOL_REG_CROSS}, evaluator
        )
        if not report.passed:
            failures.append(str(index))
    elapsed = time.perf_counter() - started
    ok = not failures
    criterion(
        9,
        f"shuffle recursion equals the converted harmonic route at 1e-7, weight<=6 depth<=3 ({failures or 'none failed'})",
        ok,
        elapsed,
    )


def test_criterion_10_numerics_floor(evaluator):
    started = time.perf_counter()
    z2 = evaluator.zeta_single(2)
    z3 = evaluator.zeta_single(3)
    z12 = evaluator.mzv(Index([1, 2]))
    z13 = evaluator.mzv(Index([1, 3]))
    z22 = evaluator.mzv(Index([2, 2]))
    references = [
        (z2.value, mpmath.pi**2 / 6),
        (z3.value, mpmath.zeta(3)),
        (z12.value, mpmath.zeta(3)),
        (z13.value, mpmath.zeta(4) / 4),
        (z22.value, (mpmath.zeta(2) ** 2 - mpmath.zeta(4)) / 2),
    ]
    ok = all(
        mp_diff(value, mpmath.nstr(reference, 50)) <= TOL_FLOOR
        for value, reference in references
    )
    elapsed = time.perf_counter() - started
    criterion(10, "zeta(2), zeta(3), zeta(1,2), zeta(1,3), zeta(2,2) match closed forms at 1e-9", ok, elapsed)


def test_criterion_11_bell_stirling_layer(evaluator):
    started = time.perf_counter()
    # B_{4,2} = 4 x1 x3 + 3 x2^2 as an exact polynomial identity: the shape
    # decomposition is exactly those two monomials, and random rational
    # substitutions agree on both routes
    shapes = {s: partition_shape_count(4, 2, s) for s in partition_shapes(4, 2)}
    ok = shapes == {(1, 0, 1): 4, (0, 2, 0): 3}
    for xs in [(1, 1, 1), (2, 3, 5), (Fraction(1, 3), Fraction(2, 7), Fraction(5, 2))]:
        expected = 4 * xs[0] * xs[2] + 3 * xs[1] * xs[1]
        ok = ok and bell_partial(4, 2, xs) == expected
        ok = ok and bell_partial_by_shapes(4, 2, xs) == expected
    # Stirling tables against brute-force partition enumeration
    for r in range(1, 11):
        by_blocks = Counter(p.num_blocks for p in enum_set_partitions(range(1, r + 1)))
        for k in range(1, r + 1):
            ok = ok and stirling_second(r, k) == by_blocks.get(k, 0)
    elapsed = time.perf_counter() - started
    criterion(11, "Bell/Stirling layer: worked polynomial exactly; tables match enumeration r<=10", ok, elapsed)
