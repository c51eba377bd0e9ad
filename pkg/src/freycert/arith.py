"""Exact integer arithmetic: valuations, factoring, roots, totients.

Everything runs on Python ints, so there is no precision ceiling anywhere.
Factoring is trial division up to a configurable budget; when the budget is
not enough the functions raise FactorBudgetError instead of ever returning a
wrong or partial answer.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from functools import lru_cache

from .errors import FactorBudgetError, NotPrimeError

DEFAULT_TRIAL_BOUND = 10**6
BUDGET_ENV_VAR = "FREY_FACTOR_BUDGET"

# Strong-probable-prime witnesses; this fixed set is a primality proof for
# every integer below 3.3 * 10**24, comfortably past 2**64.
_SPRP_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_DETERMINISTIC_LIMIT = 1 << 64

# Extra bases used above the deterministic range (result flagged as probable).
_EXTRA_WITNESSES = (41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97)

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


def trial_bound() -> int:
    """Trial-division budget, overridable through FREY_FACTOR_BUDGET."""
    raw = os.environ.get(BUDGET_ENV_VAR)
    if raw is None:
        return DEFAULT_TRIAL_BOUND
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{BUDGET_ENV_VAR} must be an integer, got {raw!r}") from None
    if value < 2:
        raise ValueError(f"{BUDGET_ENV_VAR} must be at least 2")
    return value


@dataclass(frozen=True)
class Primality:
    is_prime: bool
    proven: bool


def _strong_probable_prime(m: int, base: int) -> bool:
    if base % m == 0:
        return True
    d = m - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    x = pow(base, d, m)
    if x in (1, m - 1):
        return True
    for _ in range(r - 1):
        x = x * x % m
        if x == m - 1:
            return True
    return False


@lru_cache(maxsize=1 << 16)
def _primality_below_limit(m: int) -> bool:
    # m is odd, > 47, < 2**64 here
    return all(_strong_probable_prime(m, b) for b in _SPRP_WITNESSES)


def primality(m: int) -> Primality:
    """Primality verdict for m, with a flag telling whether it is proven.

    Below 2**64 the verdict is always proven (fixed-witness strong test).
    Above, trial division up to the budget runs first; a surviving m gets a
    probabilistic verdict with proven=False.
    """
    if m < 2:
        return Primality(False, True)
    for p in _SMALL_PRIMES:
        if m == p:
            return Primality(True, True)
        if m % p == 0:
            return Primality(False, True)
    if m < _DETERMINISTIC_LIMIT:
        return Primality(_primality_below_limit(m), True)
    bound = min(trial_bound(), math.isqrt(m))
    d = _SMALL_PRIMES[-1] + 2
    while d <= bound:
        if m % d == 0:
            return Primality(False, True)
        d += 2
    if bound == math.isqrt(m):
        return Primality(True, True)
    witnesses = _SPRP_WITNESSES + _EXTRA_WITNESSES
    verdict = all(_strong_probable_prime(m, b) for b in witnesses)
    # a composite verdict found an explicit witness, so it is proven
    return Primality(verdict, not verdict)


def is_prime(m: int) -> bool:
    return primality(m).is_prime


def padic_valuation(m: int, p: int) -> int:
    """Largest k with p**k dividing m (sign of m ignored)."""
    if m == 0:
        raise ValueError("p-adic valuation of 0 is undefined")
    if not is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    m = abs(m)
    v = 0
    while m % p == 0:
        m //= p
        v += 1
    return v


@dataclass(frozen=True)
class Factorization:
    """Prime factorization of a positive integer.

    factors is an ordered tuple of (prime, exponent) pairs with strictly
    increasing primes and exponents >= 1.  proven is False when some listed
    prime only passed a probabilistic test.
    """

    factors: tuple[tuple[int, int], ...]
    proven: bool = True

    def value(self) -> int:
        out = 1
        for p, e in self.factors:
            out *= p**e
        return out

    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def exponent_of(self, p: int) -> int:
        for q, e in self.factors:
            if q == p:
                return e
        return 0

    def as_dict(self) -> dict[int, int]:
        return dict(self.factors)


def factorize(m: int, bound: int | None = None) -> Factorization:
    """Factor |m| by trial division up to the budget.

    Args:
        m: nonzero integer; the sign is the caller's business.
        bound: trial-division limit; defaults to trial_bound().

    Raises:
        FactorBudgetError: a composite cofactor survived the budget.  The
            error is loud on purpose; no wrong factorization is ever returned.
    """
    if m == 0:
        raise ValueError("cannot factor 0")
    if bound is None:
        bound = trial_bound()
    x = abs(m)
    factors: list[tuple[int, int]] = []
    proven = True
    for p in (2, 3, 5):
        if x % p == 0:
            e = 0
            while x % p == 0:
                x //= p
                e += 1
            factors.append((p, e))
    d = 7
    while d <= bound and d * d <= x:
        if x % d == 0:
            e = 0
            while x % d == 0:
                x //= d
                e += 1
            factors.append((d, e))
        d += 2
    if x > 1:
        if d * d > x:
            factors.append((x, 1))  # no factor up to sqrt(x): prime
        else:
            verdict = primality(x)
            if not verdict.is_prime:
                raise FactorBudgetError(m, x, bound)
            factors.append((x, 1))
            proven = proven and verdict.proven
    factors.sort()
    return Factorization(tuple(factors), proven)


def is_perfect_square(m: int):
    """The nonnegative root when m is a perfect square, else None."""
    if m < 0:
        return None
    r = math.isqrt(m)
    return r if r * r == m else None


def integer_nth_root(m: int, k: int) -> int:
    """floor(m ** (1/k)) for m >= 0, k >= 1, computed exactly."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    if k < 1:
        raise ValueError("k must be positive")
    if k == 1 or m < 2:
        return m
    if k == 2:
        return math.isqrt(m)
    # Newton iteration from a power-of-two overestimate
    x = 1 << -(-m.bit_length() // k)
    while True:
        y = ((k - 1) * x + m // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    while x**k > m:
        x -= 1
    while (x + 1) ** k <= m:
        x += 1
    return x


def euler_phi(m: int) -> int:
    """Euler totient of m >= 1, via the factorization."""
    if m < 1:
        raise ValueError("totient needs m >= 1")
    out = 1
    for p, e in factorize(m).factors:
        out *= p ** (e - 1) * (p - 1)
    return out


def divisors(m: int) -> list[int]:
    """All positive divisors of m >= 1, in increasing order."""
    if m < 1:
        raise ValueError("divisors need m >= 1")
    divs = [1]
    for p, e in factorize(m).factors:
        pk = 1
        block = list(divs)
        for _ in range(e):
            pk *= p
            divs.extend(d * pk for d in block)
    divs.sort()
    return divs


def square_decomposition(m: int) -> tuple[int, int]:
    """Write m = s * c**2 with s squarefree carrying the sign; returns (s, c)."""
    if m == 0:
        raise ValueError("cannot decompose 0")
    s, c = 1, 1
    for p, e in factorize(abs(m)).factors:
        c *= p ** (e // 2)
        if e % 2:
            s *= p
    return (s if m > 0 else -s), c
