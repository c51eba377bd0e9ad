import pytest
from hypothesis import given, strategies as st

from freycert.errors import BadReductionError, NonMinimalModelError, SingularModelError
from freycert.frey import TernaryInstance, analyze
from freycert.weierstrass import (
    ADDITIVE,
    GOOD,
    MULTIPLICATIVE,
    WeierstrassCurve,
    ap_trace,
    compute_invariants,
    count_points,
    is_minimal_at,
    reduction_type,
    reduction_type_at_2,
)

CASE_I_CURVE = WeierstrassCurve(0, 4, 0, 3, 0)  # y^2 = x^3 + 4x^2 + 3x
CASE_V_CURVE = WeierstrassCurve(1, -4, 0, 2, 0)  # y^2 + xy = x^3 - 4x^2 + 2x


def test_invariants_worked_values():
    inv = compute_invariants(CASE_I_CURVE)
    assert inv.disc == 576
    assert inv.c4 == 112
    inv = compute_invariants(CASE_V_CURVE)
    assert inv.disc == 388
    assert inv.c4 == 129


def test_singular_model():
    inv = compute_invariants(WeierstrassCurve(0, 0, 0, 0, 0))
    assert inv.disc == 0
    with pytest.raises(SingularModelError):
        inv.j_invariant()


def test_j_invariant_reduced():
    inv = compute_invariants(CASE_I_CURVE)
    # 112**3 / 576 in lowest terms
    assert (inv.j_num, inv.j_den) == (21952, 9)


coeffs = st.integers(min_value=-10**6, max_value=10**6)


@given(coeffs, coeffs, coeffs, coeffs, coeffs)
def test_b_invariant_identities(a1, a2, a3, a4, a6):
    inv = compute_invariants(WeierstrassCurve(a1, a2, a3, a4, a6))
    assert 4 * inv.b8 == inv.b2 * inv.b6 - inv.b4**2
    assert 1728 * inv.disc == inv.c4**3 - inv.c6**2


def test_is_minimal_at_examples():
    assert is_minimal_at(CASE_V_CURVE, 97)  # v97(388) = 1
    assert is_minimal_at(CASE_I_CURVE, 3)  # v3(576) = 2
    power_of_two_disc = WeierstrassCurve(0, 0, 0, -1, 0)  # y^2 = x^3 - x
    assert compute_invariants(power_of_two_disc).disc == 64
    for s in (3, 5, 7, 11):  # odd primes never divide the discriminant here
        assert is_minimal_at(power_of_two_disc, s)


def test_reduction_type_examples():
    red = reduction_type(CASE_I_CURVE, 3)
    assert (red.kind, red.conductor_exponent) == (MULTIPLICATIVE, 1)
    red = reduction_type(WeierstrassCurve(0, 0, 0, 0, 5), 5)  # y^2 = x^3 + 5
    assert compute_invariants(WeierstrassCurve(0, 0, 0, 0, 5)).disc == -10800
    assert (red.kind, red.conductor_exponent) == (ADDITIVE, 2)
    red = reduction_type(CASE_V_CURVE, 7)
    assert (red.kind, red.conductor_exponent) == (GOOD, 0)


def test_reduction_type_additive_at_3_unknown():
    red = reduction_type(WeierstrassCurve(0, 0, 0, 0, 9), 3)  # disc = -2^4 3^7
    assert red.kind == ADDITIVE
    assert red.conductor_exponent is None


def test_reduction_type_requires_minimal_model():
    # rescale y^2 = x^3 + 1 by u = 3: v3(c4) = 4, v3(disc) = 12
    blown_up = WeierstrassCurve(0, 0, 0, 0, 3**6)
    with pytest.raises(NonMinimalModelError):
        reduction_type(blown_up, 3)


def test_reduction_at_2_examples():
    red = reduction_type_at_2(CASE_V_CURVE)  # disc = 2^2 * 97, c4 odd
    assert (red.kind, red.conductor_exponent) == (MULTIPLICATIVE, 1)
    odd_disc = WeierstrassCurve(1, 0, 0, 1, 0)  # disc = -79
    assert compute_invariants(odd_disc).disc % 2 != 0
    assert reduction_type_at_2(odd_disc).kind == GOOD
    fallback = reduction_type_at_2(WeierstrassCurve(0, 4, 0, 3, 0))  # c4 even
    assert fallback.conductor_exponent is None
    assert not fallback.minimal_model_checked


def test_reduction_at_2_good_when_2adic_valuation_is_six():
    # 1 + 64 = 65: ord_2(B*b^n) = 6 exactly, so the attached curve is good at 2
    analysis = analyze(TernaryInstance(1, 64, 65, 1, 1, 1, 7))
    red = reduction_type_at_2(analysis.curve)
    assert (red.kind, red.conductor_exponent) == (GOOD, 0)
    assert analysis.conductor_2_exponent == 0


def _count_points_brute(curve, p):
    # literal (x, y) enumeration oracle
    total = 1
    for x in range(p):
        for y in range(p):
            lhs = (y * y + curve.a1 * x * y + curve.a3 * y) % p
            rhs = (x**3 + curve.a2 * x * x + curve.a4 * x + curve.a6) % p
            if lhs == rhs:
                total += 1
    return total


def test_ap_trace_example():
    curve = WeierstrassCurve(0, 0, 0, 1, 0)  # y^2 = x^3 + x
    assert _count_points_brute(curve, 3) == 4
    assert ap_trace(curve, 3) == 0


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13, 17, 101])
def test_point_count_matches_enumeration(p):
    for curve in (CASE_V_CURVE, WeierstrassCurve(1, 2, 3, 4, 5)):
        inv = compute_invariants(curve)
        if inv.disc % p == 0:
            continue
        assert count_points(curve, p) == _count_points_brute(curve, p)
        assert abs(ap_trace(curve, p)) ** 2 <= 4 * p


def test_ap_trace_errors():
    with pytest.raises(BadReductionError):
        ap_trace(CASE_V_CURVE, 97)  # 97 | 388
    with pytest.raises(ValueError):
        ap_trace(CASE_V_CURVE, 10007)  # prime, but beyond the counting budget


def test_hasse_bound_over_corpus(corpus):
    for inst in corpus[:40]:
        analysis = analyze(inst)
        inv = compute_invariants(analysis.curve)
        for p in (3, 5, 7, 11, 13):
            if inv.disc % p != 0:
                assert ap_trace(analysis.curve, p) ** 2 <= 4 * p
