import math

import pytest

from freycert.arith import is_perfect_square
from freycert.errors import ValidationError
from freycert.search import (
    TAG_ALPHA_ZERO,
    TAG_GCD,
    TAG_SMALL_N,
    TAG_X_EVEN,
    SearchConfig,
    search_family,
    search_lebesgue,
)

# contains the square hits (81, 6, a=3, p=3) and (46176050, 155, a=4, p=31)
SMALL_BOX = SearchConfig(
    sign="+",
    q=5,
    alpha_min=0,
    alpha_max=4,
    p_set=(3, 31),
    n_set=(7,),
    y_max=160,
    require_x_odd=False,
    require_coprime=False,
)


def _recount_permuted(cfg):
    """Independent oracle: same box, permuted loop order, no pruning."""
    hits = set()
    candidates = 0
    for alpha in range(cfg.alpha_min, cfg.alpha_max + 1):
        for p in cfg.p_set:
            for n in cfg.n_set:
                for y in range(1, cfg.y_max + 1):
                    term = cfg.q**alpha * p**n
                    t = y**n - term if cfg.sign == "+" else y**n + term
                    if t < 1:
                        continue
                    candidates += 1
                    x = is_perfect_square(t)
                    if x is not None:
                        hits.add((x, y, alpha, p, n))
    return hits, candidates


def test_config_validation():
    assert SearchConfig(sign="+").violations() == []
    assert SearchConfig(sign="?").violations()
    assert SearchConfig(sign="+", p_set=(4,)).violations()
    assert SearchConfig(sign="+", p_set=(5,)).violations()  # p = q excluded
    assert SearchConfig(sign="+", n_set=(6,)).violations()
    assert SearchConfig(sign="+", y_max=0).violations()
    with pytest.raises(ValidationError):
        search_family(SearchConfig(sign="+", y_max=0))


def test_small_box_matches_permuted_recount():
    report = search_family(SMALL_BOX)
    expected_hits, expected_candidates = _recount_permuted(SMALL_BOX)
    got = {(w.x, w.y, w.alpha, w.p, w.n) for w in report.witnesses}
    assert got == expected_hits
    assert report.candidates == expected_candidates
    assert report.square_hits == len(expected_hits)
    assert report.complete and report.covered_y_max == SMALL_BOX.y_max


def test_witnesses_reverify_and_tag():
    report = search_family(SMALL_BOX)
    assert len(report.witnesses) == 2, "the relaxed box should contain two hits"
    for w in report.witnesses:
        term = SMALL_BOX.q**w.alpha * w.p**w.n
        assert w.x**2 == w.y**w.n - term  # sign +: x^2 = y^n - q^a p^n
        expected_tags = []
        if w.x % 2 == 0:
            expected_tags.append(TAG_X_EVEN)
        if math.gcd(w.x, w.y) > 1:
            expected_tags.append(TAG_GCD)
        if w.alpha == 0:
            expected_tags.append(TAG_ALPHA_ZERO)
        assert list(w.violated) == expected_tags
    first, second = report.witnesses
    assert (first.x, first.y, first.alpha, first.p) == (81, 6, 3, 3)
    assert first.violated == (TAG_GCD,)
    assert second.violated == (TAG_X_EVEN, TAG_GCD)


def test_filters_drop_tagged_hits():
    relaxed = search_family(SMALL_BOX)
    strict = search_family(
        SearchConfig(sign="+", q=5, alpha_min=0, alpha_max=4,
                     p_set=(3, 31), n_set=(7,), y_max=160)
    )
    kept = {(w.x, w.y, w.alpha, w.p, w.n) for w in strict.witnesses}
    for w in relaxed.witnesses:
        violates_filter = TAG_X_EVEN in w.violated or TAG_GCD in w.violated
        assert ((w.x, w.y, w.alpha, w.p, w.n) in kept) == (not violates_filter)
    assert strict.candidates == relaxed.candidates


def test_alpha_zero_and_small_exponents_are_tagged():
    # 13^2 = 8^3 - 7^3 sits in the alpha = 0, n = 3 corner of this box
    cfg = SearchConfig(
        sign="+", q=5, alpha_min=0, alpha_max=1, p_set=(7,), n_set=(3,),
        y_max=25,
    )
    report = search_family(cfg)
    hit = next(w for w in report.witnesses if (w.x, w.y) == (13, 8))
    assert hit.violated == (TAG_ALPHA_ZERO, TAG_SMALL_N)
    assert not hit.fatal  # tagged hits never count as counterexamples
    for w in report.witnesses:
        assert w.violated


def test_parallel_report_is_byte_identical():
    serial = search_family(SMALL_BOX)
    parallel = search_family(SMALL_BOX, threads=3)
    assert serial.canonical_json() == parallel.canonical_json()


def test_time_budget_yields_incomplete_prefix():
    cfg = SearchConfig(sign="-", y_max=2000, time_budget=0.0)
    report = search_family(cfg)
    assert not report.complete
    assert report.covered_y_max < 2000
    assert report.box_description()["y"] == f"1..{report.covered_y_max}"


def test_lebesgue_worked_box():
    assert search_lebesgue(4, 3, 7, 10) == [(2, 2, 3), (11, 5, 3)]
    assert search_lebesgue(1, 3, 10, 100) == []


def test_lebesgue_against_double_loop():
    B, n_lo, n_hi, y_max = 17, 3, 6, 40
    expected = sorted(
        (x, y, n)
        for y in range(1, y_max + 1)
        for n in range(n_lo, n_hi + 1)
        for x in [is_perfect_square(y**n - B)]
        if y**n - B >= 1 and x is not None and x >= 1
    )
    got = sorted(search_lebesgue(B, n_lo, n_hi, y_max))
    assert got == expected


def test_lebesgue_rejects_bad_input():
    with pytest.raises(ValidationError):
        search_lebesgue(0)
    with pytest.raises(ValidationError):
        search_lebesgue(4, 5, 3, 10)


def test_report_document_shape():
    doc = search_family(SMALL_BOX).to_document()
    assert doc["schema"] == 1
    assert doc["kind"] == "search_report"
    assert set(doc["counts"]) == {"candidates", "square_hits", "candidates_by_exponent"}
    assert isinstance(doc["fatal_count"], int)
