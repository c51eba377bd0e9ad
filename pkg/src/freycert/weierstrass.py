"""Integral long Weierstrass models: invariants, local reduction, traces.

This is the independent side of every cross-check: the closed discriminant,
conductor and level formulas produced by the classifier are re-derived here
from nothing but the standard b/c-invariant polynomials and cheap local
criteria.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import is_prime, padic_valuation
from .errors import (
    BadReductionError,
    NonMinimalModelError,
    NotPrimeError,
    SingularModelError,
)

GOOD = "good"
MULTIPLICATIVE = "multiplicative"
ADDITIVE = "additive"

AP_TRACE_PRIME_LIMIT = 10**4


@dataclass(frozen=True)
class WeierstrassCurve:
    """y^2 + a1*x*y + a3*y = x^3 + a2*x^2 + a4*x + a6 with integer ai."""

    a1: int
    a2: int
    a3: int
    a4: int
    a6: int

    def contains(self, x: int, y: int) -> bool:
        lhs = y * y + self.a1 * x * y + self.a3 * y
        rhs = x**3 + self.a2 * x * x + self.a4 * x + self.a6
        return lhs == rhs

    def coefficients(self) -> tuple[int, int, int, int, int]:
        return (self.a1, self.a2, self.a3, self.a4, self.a6)


@dataclass(frozen=True)
class CurveInvariants:
    b2: int
    b4: int
    b6: int
    b8: int
    c4: int
    c6: int
    disc: int
    j_num: int | None
    j_den: int | None

    def j_invariant(self) -> Fraction:
        if self.disc == 0:
            raise SingularModelError("j undefined: discriminant is zero")
        return Fraction(self.j_num, self.j_den)


@dataclass(frozen=True)
class LocalReduction:
    prime: int
    kind: str  # good | multiplicative | additive
    conductor_exponent: int | None  # None means "unknown"
    minimal_model_checked: bool


def compute_invariants(curve: WeierstrassCurve) -> CurveInvariants:
    """b-, c-invariants, discriminant and reduced j of an integral model."""
    a1, a2, a3, a4, a6 = curve.coefficients()
    b2 = a1 * a1 + 4 * a2
    b4 = 2 * a4 + a1 * a3
    b6 = a3 * a3 + 4 * a6
    b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
    c4 = b2 * b2 - 24 * b4
    c6 = -(b2**3) + 36 * b2 * b4 - 216 * b6
    disc = -b2 * b2 * b8 - 8 * b4**3 - 27 * b6 * b6 + 9 * b2 * b4 * b6
    if disc != 0:
        j = Fraction(c4**3, disc)
        j_num, j_den = j.numerator, j.denominator
    else:
        j_num = j_den = None
    return CurveInvariants(b2, b4, b6, b8, c4, c6, disc, j_num, j_den)


def _require_odd_prime(s: int) -> None:
    if s == 2 or not is_prime(s):
        raise NotPrimeError(f"{s} is not an odd prime")


def is_minimal_at(curve: WeierstrassCurve, s: int) -> bool:
    """True when no s-rescaling can shrink the model (odd prime s).

    The criterion v_s(c4) < 4 or v_s(disc) < 12 is sufficient: a rescaling
    by u = s would divide c4 by s^4 and disc by s^12.
    """
    _require_odd_prime(s)
    inv = compute_invariants(curve)
    if inv.disc == 0:
        raise SingularModelError("minimality undefined for singular model")
    if inv.c4 != 0 and padic_valuation(inv.c4, s) < 4:
        return True
    return padic_valuation(inv.disc, s) < 12


def reduction_type(curve: WeierstrassCurve, s: int) -> LocalReduction:
    """Good/multiplicative/additive trichotomy at an odd prime s.

    Exponents: 0 for good, 1 for multiplicative, 2 for additive when s >= 5.
    Additive reduction at s = 3 can have a larger exponent, so it is reported
    as unknown rather than guessed.  The model must already be minimal at s.
    """
    _require_odd_prime(s)
    inv = compute_invariants(curve)
    if inv.disc == 0:
        raise SingularModelError("reduction type undefined for singular model")
    if not is_minimal_at(curve, s):
        raise NonMinimalModelError(
            f"model may be non-minimal at {s}: minimize before asking"
        )
    if inv.disc % s != 0:
        return LocalReduction(s, GOOD, 0, True)
    if inv.c4 != 0 and inv.c4 % s != 0:
        return LocalReduction(s, MULTIPLICATIVE, 1, True)
    exponent = 2 if s >= 5 else None
    return LocalReduction(s, ADDITIVE, exponent, True)


def reduction_type_at_2(curve: WeierstrassCurve) -> LocalReduction:
    """Reduction at 2 for models with odd c4; otherwise reports unknown."""
    inv = compute_invariants(curve)
    if inv.disc == 0:
        raise SingularModelError("reduction type undefined for singular model")
    if inv.disc % 2 != 0:
        return LocalReduction(2, GOOD, 0, True)
    if inv.c4 % 2 != 0:
        # odd c4 also rules out any 2-rescaling, so the model is minimal at 2
        return LocalReduction(2, MULTIPLICATIVE, 1, True)
    return LocalReduction(2, ADDITIVE, None, False)


def count_points(curve: WeierstrassCurve, p: int) -> int:
    """#E(F_p) including the point at infinity, for a good prime p.

    For odd p the count runs over x-residues: the y-quadratic
    y^2 + (a1*x + a3)*y - f(x) has 1 + chi(D) roots where D is its
    discriminant and chi the quadratic character mod p.
    """
    if not is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    if p > AP_TRACE_PRIME_LIMIT:
        raise ValueError(f"point counting budget is p <= {AP_TRACE_PRIME_LIMIT}")
    inv = compute_invariants(curve)
    if inv.disc == 0 or inv.disc % p == 0:
        raise BadReductionError(f"bad reduction at {p}")
    a1, a2, a3, a4, a6 = curve.coefficients()
    if p == 2:
        count = 1
        for x in (0, 1):
            for y in (0, 1):
                lhs = (y * y + a1 * x * y + a3 * y) % 2
                rhs = (x**3 + a2 * x * x + a4 * x + a6) % 2
                if lhs == rhs:
                    count += 1
        return count
    half = (p - 1) // 2
    total = p + 1
    for x in range(p):
        fx = (x * x * x + a2 * x * x + a4 * x + a6) % p
        lin = (a1 * x + a3) % p
        d = (lin * lin + 4 * fx) % p
        if d == 0:
            continue
        chi = pow(d, half, p)
        total += 1 if chi == 1 else -1
    return total


def ap_trace(curve: WeierstrassCurve, p: int) -> int:
    """Frobenius trace a_p = p + 1 - #E(F_p) at a small good prime."""
    a_p = p + 1 - count_points(curve, p)
    assert a_p * a_p <= 4 * p, "Hasse bound violated: counting bug"
    return a_p
