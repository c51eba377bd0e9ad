"""Genus of X0(N) and dimensions of weight-2 cusp form spaces.

The genus comes from the index and elliptic-point/cusp counts:

    genus = 1 + mu/12 - nu2/4 - nu3/3 - nu_inf/2

with mu = N * prod_{p|N} (1 + 1/p), cusp count nu_inf = sum over d|N of
phi(gcd(d, N/d)), and elliptic point counts given by residue rules:
nu2 = 0 if 4|N else a product over odd p|N of (2 if p = 1 mod 4 else 0);
nu3 = 0 if 9|N else a product over p|N, p != 3 of (2 if p = 1 mod 3 else 0).

dim S2(Gamma0(N)) equals the genus.  The new subspace dimension is computed
recursively from dim S2(N) = sum over M|N of sigma0(N/M) * dim-new(M), and is
cross-checkable against a direct divisor-sum inversion.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from functools import lru_cache

from . import arith
from .errors import VerificationError

# Levels that must carry no newforms at weight 2.
NEWFORM_FREE_LEVELS = (1, 2, 3, 4, 5, 7, 8, 9, 10, 12, 13, 16, 18, 22, 25, 28, 60)


@dataclass(frozen=True)
class DimensionRecord:
    level: int
    mu: int
    nu2: int
    nu3: int
    nu_inf: int
    genus: int
    dim_s2: int
    dim_s2_new: int


@lru_cache(maxsize=1 << 15)
def _divisors(n: int) -> tuple[int, ...]:
    return tuple(arith.divisors(n))


@lru_cache(maxsize=1 << 15)
def _sigma0(n: int) -> int:
    return len(_divisors(n))


@lru_cache(maxsize=1 << 15)
def _lambda(d: int) -> int:
    """Multiplicative inversion weight: p -> -2, p^2 -> 1, p^k -> 0 (k >= 3)."""
    out = 1
    for _, e in arith.factorize(d).factors:
        if e == 1:
            out *= -2
        elif e != 2:
            return 0
    return out


class DimensionTable:
    """Memoized map N -> DimensionRecord with thread-tolerant lazy fill.

    Concurrent callers may recompute the same level; the results are
    identical, and dict assignment keeps the table consistent.
    """

    def __init__(self) -> None:
        self._genus: dict[int, tuple[int, int, int, int, int]] = {}
        self._new: dict[int, int] = {}
        self._lock = threading.Lock()

    def _genus_data(self, N: int) -> tuple[int, int, int, int, int]:
        cached = self._genus.get(N)
        if cached is not None:
            return cached
        fac = arith.factorize(N).factors if N > 1 else ()
        mu = 1
        for p, e in fac:
            mu *= p ** (e - 1) * (p + 1)
        if N % 4 == 0:
            nu2 = 0
        else:
            nu2 = 1
            for p, _ in fac:
                if p == 2:
                    continue
                nu2 *= 2 if p % 4 == 1 else 0
        if N % 9 == 0:
            nu3 = 0
        else:
            nu3 = 1
            for p, _ in fac:
                if p == 3:
                    continue
                nu3 *= 2 if p % 3 == 1 else 0
        nu_inf = sum(arith.euler_phi(math.gcd(d, N // d)) for d in _divisors(N))
        twelve_g = 12 + mu - 3 * nu2 - 4 * nu3 - 6 * nu_inf
        assert twelve_g % 12 == 0 and twelve_g >= 0, f"genus formula broke at {N}"
        data = (mu, nu2, nu3, nu_inf, twelve_g // 12)
        with self._lock:
            self._genus[N] = data
        return data

    def genus(self, N: int) -> int:
        if N < 1:
            raise ValueError("level must be positive")
        return self._genus_data(N)[4]

    def dim_s2(self, N: int) -> int:
        return self.genus(N)

    def dim_s2_new(self, N: int) -> int:
        if N < 1:
            raise ValueError("level must be positive")
        if N in self._new:
            return self._new[N]
        for d in _divisors(N):
            if d in self._new:
                continue
            old = sum(
                _sigma0(d // m) * self._new[m] for m in _divisors(d) if m < d
            )
            value = self.genus(d) - old
            with self._lock:
                self._new[d] = value
        return self._new[N]

    def dim_s2_new_by_inversion(self, N: int) -> int:
        """Independent divisor-sum inversion of the genus values."""
        total = 0
        for d in _divisors(N):
            lam = _lambda(d)
            if lam:
                total += lam * self.genus(N // d)
        return total

    def record(self, N: int) -> DimensionRecord:
        mu, nu2, nu3, nu_inf, genus = self._genus_data(N)
        return DimensionRecord(
            level=N,
            mu=mu,
            nu2=nu2,
            nu3=nu3,
            nu_inf=nu_inf,
            genus=genus,
            dim_s2=genus,
            dim_s2_new=self.dim_s2_new(N),
        )


DEFAULT_TABLE = DimensionTable()


def genus_X0(N: int, table: DimensionTable | None = None) -> DimensionRecord:
    """Full dimension record of level N (genus part computed directly)."""
    return (table or DEFAULT_TABLE).record(N)


def dim_s2_new(N: int, table: DimensionTable | None = None) -> int:
    return (table or DEFAULT_TABLE).dim_s2_new(N)


def verify_no_newform_levels(
    table: DimensionTable | None = None,
) -> tuple[DimensionRecord, ...]:
    """Check dim-new = 0 at every listed level; raise naming any failure."""
    table = table or DEFAULT_TABLE
    records = []
    for N in NEWFORM_FREE_LEVELS:
        rec = table.record(N)
        if rec.dim_s2_new != 0:
            raise VerificationError(
                f"level {N} has dim-new = {rec.dim_s2_new}, expected 0"
            )
        records.append(rec)
    return tuple(records)
