"""Ternary instances of signature (n, n, 2) and their attached curves.

An instance is a witness (A, B, C, a, b, c, n) of A*a^n + B*b^n = C*c^2 with
A*a, B*b, C*c pairwise coprime, ord_r(A) < n and ord_r(B) < n at every prime
r, and C squarefree.  Such a witness can always be relabeled, by swapping the
(A, a) and (B, b) roles and/or flipping the sign of c, into exactly one of
five admissible shapes; each shape carries one of three attached curves whose
discriminant is, up to a fixed power of 2, C^3*B^2*A*(a*b^2)^n.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .arith import factorize, is_prime, padic_valuation
from .errors import IntegralityError, UnclassifiableError, ValidationError
from .weierstrass import WeierstrassCurve, compute_invariants


class Case(enum.Enum):
    """The five admissible presentations, in priority order."""

    I = "I"
    II = "II"
    III = "III"
    IV = "IV"
    V = "V"


@dataclass(frozen=True)
class TernaryInstance:
    A: int
    B: int
    C: int
    a: int
    b: int
    c: int
    n: int

    def as_tuple(self) -> tuple[int, int, int, int, int, int, int]:
        return (self.A, self.B, self.C, self.a, self.b, self.c, self.n)

    def swapped(self) -> "TernaryInstance":
        return TernaryInstance(self.B, self.A, self.C, self.b, self.a, self.c, self.n)

    def c_negated(self) -> "TernaryInstance":
        return TernaryInstance(self.A, self.B, self.C, self.a, self.b, -self.c, self.n)


# move order tried by normalize; each entry is a sequence of atomic moves
MOVES: tuple[tuple[str, ...], ...] = (
    (),
    ("negate_c",),
    ("swap",),
    ("swap", "negate_c"),
)


def validate(instance: TernaryInstance) -> list[str]:
    """Every invariant violation of the instance; empty list means valid."""
    A, B, C, a, b, c, n = instance.as_tuple()
    violations = []
    for name, value in (("A", A), ("B", B), ("C", C), ("a", a), ("b", b), ("c", c)):
        if value == 0:
            violations.append(f"{name} is zero")
    if n < 7 or not is_prime(n):
        violations.append(f"n = {n} is not a prime >= 7")
    if violations:
        return violations
    if A * a**n + B * b**n != C * c * c:
        violations.append("A*a^n + B*b^n != C*c^2")
    if math.gcd(A * a, B * b) != 1:
        violations.append("A*a and B*b are not coprime")
    if math.gcd(A * a, C * c) != 1:
        violations.append("A*a and C*c are not coprime")
    if math.gcd(B * b, C * c) != 1:
        violations.append("B*b and C*c are not coprime")
    for name, value in (("A", A), ("B", B)):
        for p, e in factorize(abs(value)).factors:
            if e >= n:
                violations.append(f"ord_{p}({name}) = {e} is not < n = {n}")
    if any(e >= 2 for _, e in factorize(abs(C)).factors):
        violations.append("C is not squarefree")
    return violations


def _v2(m: int) -> int:
    return padic_valuation(m, 2)


def _matches(inst: TernaryInstance, case: Case) -> bool:
    A, B, C, a, b, c, n = inst.as_tuple()
    ab_odd = a % 2 != 0 and b % 2 != 0
    if case is Case.I:
        all_odd = ab_odd and A % 2 != 0 and B % 2 != 0 and C % 2 != 0
        return all_odd and (b + B * C) % 4 == 0  # b = -B*C (mod 4)
    if case is Case.II:
        return ab_odd and (_v2(B) == 1 or _v2(C) == 1)
    if case is Case.III:
        # c = -b*(B/4) (mod 4); B/4 is odd here
        return ab_odd and _v2(B) == 2 and (c + b * (B // 4)) % 4 == 0
    if case is Case.IV:
        return ab_odd and _v2(B) in (3, 4, 5) and (c - C) % 4 == 0
    if case is Case.V:
        return _v2(B) + n * _v2(b) >= 6 and (c - C) % 4 == 0
    raise AssertionError(case)


def classify(instance: TernaryInstance) -> Case:
    """The first matching case, I through V, of the instance as presented.

    Callers normally classify the output of normalize(); raw witnesses often
    match no case until relabeled.
    """
    for case in Case:
        if _matches(instance, case):
            return case
    raise UnclassifiableError(
        f"instance {instance.as_tuple()} matches no case as presented"
    )


def _apply(inst: TernaryInstance, moves: tuple[str, ...]) -> TernaryInstance:
    for move in moves:
        inst = inst.swapped() if move == "swap" else inst.c_negated()
    return inst


def normalize(instance: TernaryInstance) -> tuple[TernaryInstance, list[str]]:
    """Relabel the instance into an admissible presentation.

    Only equation-preserving moves are used: swapping the (A, a) and (B, b)
    roles, and negating c.  The four presentations are tried in the fixed
    order identity, negate_c, swap, swap+negate_c, and for each one the cases
    are tried in order I..V; the first hit wins, which makes normalization
    deterministic and idempotent.

    Returns the relabeled instance and the transcript of moves applied.
    """
    violations = validate(instance)
    if violations:
        raise ValidationError(violations)
    for moves in MOVES:
        candidate = _apply(instance, moves)
        for case in Case:
            if _matches(candidate, case):
                return candidate, list(moves)
    raise UnclassifiableError(
        f"no presentation of {instance.as_tuple()} matches any case"
    )


_CURVE_INDEX = {Case.I: 1, Case.II: 1, Case.III: 2, Case.IV: 2, Case.V: 3}
_DELTA = {1: 6, 2: 0, 3: -12}


def _exact_div(num: int, den: int, what: str) -> int:
    q, r = divmod(num, den)
    if r != 0:
        raise IntegralityError(f"{what} = {num}/{den} is not an integer")
    return q


def build_frey(instance: TernaryInstance, case: Case) -> WeierstrassCurve:
    """The attached curve for a classified instance, with exact coefficients.

    Index 1 (cases I, II):   y^2 = x^3 + 2cC*x^2 + BCb^n*x
    Index 2 (cases III, IV): y^2 = x^3 + cC*x^2 + (BCb^n/4)*x
    Index 3 (case V):        y^2 + xy = x^3 + ((cC-1)/4)*x^2 + (BCb^n/64)*x

    The divisions are consequences of the case conditions; a failed division
    signals a classification bug and raises instead of truncating.
    """
    A, B, C, a, b, c, n = instance.as_tuple()
    bcbn = B * C * b**n
    index = _CURVE_INDEX[case]
    if index == 1:
        return WeierstrassCurve(0, 2 * c * C, 0, bcbn, 0)
    if index == 2:
        return WeierstrassCurve(0, c * C, 0, _exact_div(bcbn, 4, "B*C*b^n/4"), 0)
    a2 = _exact_div(c * C - 1, 4, "(c*C - 1)/4")
    a4 = _exact_div(bcbn, 64, "B*C*b^n/64")
    return WeierstrassCurve(1, a2, 0, a4, 0)


@dataclass(frozen=True)
class FreyAnalysis:
    """Evaluated discriminant/conductor/level data for one instance.

    conductor_2_exponent and level_2_exponent record the powers of 2 carried
    alongside the odd-prime radicals; level_lowering_applicable is False when
    |a*b| = 1, the usual proxy for possible complex multiplication, in which
    case the predicted level is reported but must not be relied on.
    """

    instance: TernaryInstance  # normalized presentation
    case: Case
    curve_index: int
    curve: WeierstrassCurve
    delta_exp: int
    disc_closed_form: int
    conductor: int
    conductor_2_exponent: int
    level: int
    level_2_exponent: int
    level_lowering_applicable: bool


def _odd_prime_radical(*values: int) -> list[int]:
    primes: set[int] = set()
    for v in values:
        for p, _ in factorize(abs(v)).factors:
            if p != 2:
                primes.add(p)
    return sorted(primes)


def _conductor_2_exponent(inst: TernaryInstance, case: Case) -> int:
    A, B, C, a, b, c, n = inst.as_tuple()
    if case is Case.I:
        return 5
    if case is Case.II:
        return 6
    if case is Case.III:
        # split on b = -(B/4)*C versus b = +(B/4)*C (mod 4)
        if (b + (B // 4) * C) % 4 == 0:
            return 1
        if (b - (B // 4) * C) % 4 != 0:
            raise AssertionError("odd b must match one congruence")
        return 2
    if case is Case.IV:
        return 4 if _v2(B) == 3 else 2
    # case V: exponent 0 when ord_2(B*b^n) = 6, else 1
    return 0 if _v2(B) + n * _v2(b) == 6 else 1


def _level_2_exponent(inst: TernaryInstance, case: Case, e2: int) -> int:
    if case is not Case.V:
        return e2
    v2b = _v2(inst.B)
    if v2b == 0:
        return 1
    return 0 if v2b == 6 else 1


def analyze(instance: TernaryInstance) -> FreyAnalysis:
    """Validate, normalize, classify, build the curve, and evaluate tables.

    The closed-form discriminant 2^delta * C^3 * B^2 * A * (a*b^2)^n is
    cross-checked on the spot against the direct invariants of the built
    curve; a mismatch would be an internal bug and raises immediately.
    """
    normalized, _ = normalize(instance)
    case = classify(normalized)
    curve = build_frey(normalized, case)
    index = _CURVE_INDEX[case]
    delta = _DELTA[index]
    A, B, C, a, b, c, n = normalized.as_tuple()
    core = C**3 * B**2 * A * (a * b * b) ** n
    if delta >= 0:
        disc = core * (1 << delta)
    else:
        disc = _exact_div(core, 1 << -delta, "2^-12 * C^3*B^2*A*(a*b^2)^n")
    direct = compute_invariants(curve).disc
    if direct != disc:
        raise AssertionError(
            f"discriminant mismatch: closed form {disc} vs direct {direct}"
        )
    e2 = _conductor_2_exponent(normalized, case)
    conductor = (1 << e2) * C * C
    for s in _odd_prime_radical(a, b, A, B):
        conductor *= s
    f2 = _level_2_exponent(normalized, case, e2)
    level = (1 << f2) * C * C
    for t in _odd_prime_radical(A, B):
        level *= t
    return FreyAnalysis(
        instance=normalized,
        case=case,
        curve_index=index,
        curve=curve,
        delta_exp=delta,
        disc_closed_form=disc,
        conductor=conductor,
        conductor_2_exponent=e2,
        level=level,
        level_2_exponent=f2,
        level_lowering_applicable=abs(a * b) != 1,
    )
