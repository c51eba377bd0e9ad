"""Acceptance suite: one test per criterion, each printing a PASS line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines; every tolerance here is exact (integer equality) except the wall-clock
budgets, which are generous compared to observed runtimes.
"""

import time
from collections import Counter

from freycert.arith import divisors
from freycert.certify import INCONCLUSIVE, NO_SOLUTIONS, FamilySpec, certify
from freycert.dimensions import NEWFORM_FREE_LEVELS, DimensionTable
from freycert.frey import Case, TernaryInstance, analyze
from freycert.search import SearchConfig, search_family, search_lebesgue
from freycert.weierstrass import (
    ADDITIVE,
    MULTIPLICATIVE,
    compute_invariants,
    reduction_type,
    reduction_type_at_2,
)

WORKED_INSTANCES = {
    576: TernaryInstance(1, 3, 1, 1, 1, 2, 7),     # case I
    6912: TernaryInstance(1, 2, 3, 1, 1, 1, 7),    # case II
    388: TernaryInstance(97, 1, 1, 1, 2, -15, 7),  # case V
}


def _odd_primes_dividing(m):
    m = abs(m)
    while m % 2 == 0:
        m //= 2
    primes = []
    d = 3
    while d * d <= m:
        if m % d == 0:
            primes.append(d)
            while m % d == 0:
                m //= d
        d += 2
    if m > 1:
        primes.append(m)
    return primes


def test_criterion_1_newform_free_levels():
    start = time.monotonic()
    table = DimensionTable()
    for level in NEWFORM_FREE_LEVELS:
        recursive = table.dim_s2_new(level)
        inverted = table.dim_s2_new_by_inversion(level)
        assert recursive == inverted == 0, level
    controls = {11: 1, 14: 1, 26: 2, 15: 1, 20: 1}
    for level, expected in controls.items():
        assert table.dim_s2_new(level) == expected, level
        assert table.dim_s2_new_by_inversion(level) == expected, level
    elapsed = time.monotonic() - start
    assert elapsed < 1.0
    print(f"PASS criterion 1: 17 newform-free levels verified, controls "
          f"{controls} by both methods, in {elapsed:.3f}s")


def test_criterion_2_certificates():
    start = time.monotonic()
    for sign in ("+", "-"):
        for alpha in (1, 2):  # one odd, one even
            cert = certify(FamilySpec(sign=sign, q=5, alpha=alpha))
            assert cert.level == 10 and cert.conclusion == NO_SOLUTIONS
    degenerate = certify(FamilySpec(sign="+", q=5, alpha=7, n=7))
    assert degenerate.level == 2 and degenerate.conclusion == NO_SOLUTIONS
    contrast = certify(FamilySpec(sign="+", q=7, alpha=1))
    assert contrast.level == 14 and contrast.conclusion == INCONCLUSIVE
    elapsed = time.monotonic() - start
    assert elapsed < 1.0
    print(f"PASS criterion 2: level 10 for all four sign/parity combinations, "
          f"level 2 degenerate, level 14 contrast inconclusive, in {elapsed:.3f}s")


def test_criterion_3_discriminant_identity(corpus):
    cases = Counter()
    for inst in corpus:
        result = analyze(inst)
        direct = compute_invariants(result.curve).disc
        assert direct == result.disc_closed_form, inst
        cases[result.case] += 1
    assert len(corpus) >= 1000
    assert all(cases[c] >= 100 for c in Case), cases
    for expected_disc, inst in WORKED_INSTANCES.items():
        assert analyze(inst).disc_closed_form == expected_disc
    print(f"PASS criterion 3: discriminant identity exact on {len(corpus)} "
          f"instances, case counts {dict((c.value, k) for c, k in cases.items())}, "
          f"worked values 576/6912/388 included")


def test_criterion_4_conductor_cross_check(corpus):
    checked_odd = checked_additive = checked_two = 0
    for inst in corpus:
        result = analyze(inst)
        norm = result.instance
        for s in _odd_primes_dividing(norm.a * norm.b):
            red = reduction_type(result.curve, s)
            assert (red.kind, red.conductor_exponent) == (MULTIPLICATIVE, 1), (inst, s)
            checked_odd += 1
        for s in _odd_primes_dividing(norm.C):
            red = reduction_type(result.curve, s)
            assert red.kind == ADDITIVE, (inst, s)
            if s >= 5:
                assert red.conductor_exponent == 2, (inst, s)
                checked_additive += 1
        if result.case is Case.V:
            red2 = reduction_type_at_2(result.curve)
            assert red2.conductor_exponent == result.conductor_2_exponent, inst
            checked_two += 1
    assert checked_odd > 400 and checked_additive > 400 and checked_two > 300
    print(f"PASS criterion 4: multiplicative at {checked_odd} odd s | ab, "
          f"additive exponent 2 at {checked_additive} s | C (s >= 5), "
          f"2-adic exponent matched on {checked_two} case V instances")


def test_criterion_5_two_torsion(corpus):
    for inst in corpus:
        curve = analyze(inst).curve
        assert curve.contains(0, 0), inst
        assert curve.a3 == 0, inst  # 2y + a1*x + a3 = 0 at the origin
    print(f"PASS criterion 5: (0,0) is 2-torsion on all {len(corpus)} curves")


def test_criterion_6_family_search():
    start = time.monotonic()
    strict_reports = {}
    for sign in ("+", "-"):
        report = search_family(SearchConfig(sign=sign))
        assert report.complete
        assert report.witnesses == [], f"unexpected witnesses for sign {sign}"
        strict_reports[sign] = report
    relaxed_tagged = 0
    for sign in ("+", "-"):
        relaxed = search_family(
            SearchConfig(sign=sign, require_x_odd=False, require_coprime=False)
        )
        for w in relaxed.witnesses:
            assert w.violated, f"FATAL witness {w} would falsify the theorem"
        relaxed_tagged += len(relaxed.witnesses)
    serial_elapsed = time.monotonic() - start
    assert serial_elapsed < 300.0
    parallel = search_family(SearchConfig(sign="+"), threads=2)
    assert parallel.canonical_json() == strict_reports["+"].canonical_json()
    print(f"PASS criterion 6: zero witnesses with filters on, "
          f"{relaxed_tagged} tagged hits with filters off, parallel report "
          f"byte-identical, serial boxes in {serial_elapsed:.1f}s")


def test_criterion_7_dimension_consistency():
    start = time.monotonic()
    table = DimensionTable()
    for N in range(1, 10001):
        rec = table.record(N)
        assert rec.genus >= 0 and rec.dim_s2_new >= 0, N
        assert rec.dim_s2_new == table.dim_s2_new_by_inversion(N), N
        trace = sum(
            len(divisors(N // M)) * table.dim_s2_new(M) for M in divisors(N)
        )
        assert trace == rec.genus, N
    elapsed = time.monotonic() - start
    assert elapsed < 30.0
    print(f"PASS criterion 7: genus/dim-new consistency for N <= 10000 "
          f"in {elapsed:.1f}s")


def test_criterion_8_lebesgue_boxes():
    assert search_lebesgue(4, 3, 7, 10) == [(2, 2, 3), (11, 5, 3)]
    assert search_lebesgue(1, 3, 10, 100) == []
    print("PASS criterion 8: x^2+4=y^n box gives exactly {(2,2,3),(11,5,3)}; "
          "x^2+1=y^n box is empty")
