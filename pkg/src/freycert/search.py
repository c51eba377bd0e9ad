"""Exhaustive desk-scale searches for witnesses of the certified families.

The family search enumerates the full lattice box (y, n, p, alpha), tests
y^n -+ q^alpha * p^n for being a positive perfect square, and keeps every hit
as a first-class record tagged with whichever hypotheses it violates.  An
untagged hit would be an actual counterexample and is marked FATAL.  Work is
chunked over contiguous y-intervals with boundaries that do not depend on the
worker count, so parallel runs merge to the byte-identical report.
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .arith import is_perfect_square, is_prime
from .docformat import SCHEMA_VERSION, canonical_json
from .errors import ValidationError

TAG_X_EVEN = "x even"
TAG_GCD = "gcd(x,y) > 1"
TAG_ALPHA_ZERO = "alpha = 0"
TAG_SMALL_N = "n < 7"

_CHUNK = 128


@dataclass(frozen=True)
class SearchConfig:
    sign: str  # "+" for x^2 + q^a p^n = y^n, "-" for x^2 - q^a p^n = y^n
    q: int = 5
    alpha_min: int = 1
    alpha_max: int = 4
    p_set: tuple[int, ...] = (3, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)
    n_set: tuple[int, ...] = (7, 11, 13)
    y_max: int = 2000
    require_x_odd: bool = True
    require_coprime: bool = True
    time_budget: float | None = None

    def violations(self) -> list[str]:
        out = []
        if self.sign not in ("+", "-"):
            out.append(f"sign must be '+' or '-', got {self.sign!r}")
        if not is_prime(self.q):
            out.append(f"q = {self.q} is not prime")
        if not (0 <= self.alpha_min <= self.alpha_max):
            out.append("alpha range must satisfy 0 <= alpha_min <= alpha_max")
        if not self.p_set:
            out.append("p_set is empty")
        for p in self.p_set:
            if not is_prime(p):
                out.append(f"p = {p} is not prime")
            elif p in (2, self.q):
                out.append(f"p = {p} must avoid {{2, {self.q}}}")
        if not self.n_set:
            out.append("n_set is empty")
        for n in self.n_set:
            if n < 3 or not is_prime(n):
                out.append(f"n = {n} is not a prime >= 3")
        if self.y_max < 1:
            out.append("y_max must be >= 1")
        return out

    def echo(self) -> dict:
        return {
            "sign": self.sign,
            "q": self.q,
            "alpha_min": self.alpha_min,
            "alpha_max": self.alpha_max,
            "p_set": list(self.p_set),
            "n_set": list(self.n_set),
            "y_max": self.y_max,
            "require_x_odd": self.require_x_odd,
            "require_coprime": self.require_coprime,
        }


@dataclass(frozen=True)
class Witness:
    x: int
    y: int
    alpha: int
    p: int
    n: int
    violated: tuple[str, ...]

    @property
    def fatal(self) -> bool:
        return not self.violated

    def echo(self) -> dict:
        return {
            "x": self.x,
            "y": self.y,
            "alpha": self.alpha,
            "p": self.p,
            "n": self.n,
            "violated_hypotheses": list(self.violated),
            "fatal": self.fatal,
        }


@dataclass
class SearchReport:
    config: SearchConfig
    witnesses: list[Witness]
    candidates: int
    square_hits: int
    candidates_by_n: dict[int, int]
    complete: bool
    covered_y_max: int

    def fatal_witnesses(self) -> list[Witness]:
        return [w for w in self.witnesses if w.fatal]

    def box_description(self) -> dict:
        cfg = self.config
        return {
            "y": f"1..{self.covered_y_max}",
            "n": ",".join(str(n) for n in sorted(cfg.n_set)),
            "p": ",".join(str(p) for p in sorted(cfg.p_set)),
            "alpha": f"{cfg.alpha_min}..{cfg.alpha_max}",
        }

    def to_document(self) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "kind": "search_report",
            "config": self.config.echo(),
            "box_covered": self.box_description(),
            "complete": self.complete,
            "counts": {
                "candidates": self.candidates,
                "square_hits": self.square_hits,
                "candidates_by_exponent": {
                    str(n): self.candidates_by_n[n]
                    for n in sorted(self.candidates_by_n)
                },
            },
            "witnesses": [w.echo() for w in self.witnesses],
            "fatal_count": len(self.fatal_witnesses()),
        }

    def canonical_json(self) -> str:
        return canonical_json(self.to_document())


def _scan_chunk(args):
    """Enumerate y in [y_lo, y_hi]; loop order y, n, p, alpha."""
    cfg, y_lo, y_hi = args
    plus = cfg.sign == "+"
    n_sorted = tuple(sorted(cfg.n_set))
    p_sorted = tuple(sorted(cfg.p_set))
    alphas = tuple(
        (a, cfg.q**a) for a in range(cfg.alpha_min, cfg.alpha_max + 1)
    )
    witnesses: list[Witness] = []
    candidates = 0
    hits = 0
    by_n = {n: 0 for n in n_sorted}
    for y in range(y_lo, y_hi + 1):
        for n in n_sorted:
            yn = y**n
            for p in p_sorted:
                pn = p**n
                if plus and alphas[0][1] * pn >= yn:
                    break  # larger p only grows the subtrahend
                for alpha, qa in alphas:
                    term = qa * pn
                    if plus:
                        t = yn - term
                        if t < 1:
                            break
                    else:
                        t = yn + term
                    candidates += 1
                    by_n[n] += 1
                    x = is_perfect_square(t)
                    if x is None:
                        continue
                    hits += 1
                    # re-verify before recording; a false hit is a bug
                    assert x * x == t and x >= 1
                    tags = []
                    if x % 2 == 0:
                        tags.append(TAG_X_EVEN)
                    if math.gcd(x, y) > 1:
                        tags.append(TAG_GCD)
                    if alpha == 0:
                        tags.append(TAG_ALPHA_ZERO)
                    if n < 7:
                        tags.append(TAG_SMALL_N)
                    if cfg.require_x_odd and TAG_X_EVEN in tags:
                        continue
                    if cfg.require_coprime and TAG_GCD in tags:
                        continue
                    witnesses.append(Witness(x, y, alpha, p, n, tuple(tags)))
    return witnesses, candidates, hits, by_n


def _chunks(y_max: int) -> list[tuple[int, int]]:
    return [(lo, min(lo + _CHUNK - 1, y_max)) for lo in range(1, y_max + 1, _CHUNK)]


def search_family(config: SearchConfig, threads: int = 1) -> SearchReport:
    """Exhaustive scan of the configured box.

    With threads > 1 the fixed y-chunks are distributed over worker
    processes; chunk boundaries are independent of the thread count, so the
    merged report is byte-identical to the serial one.  A time budget, if
    set, stops the scan at a chunk boundary and flags the report incomplete
    with the exact covered prefix.
    """
    violations = config.violations()
    if violations:
        raise ValidationError(violations)
    deadline = None
    if config.time_budget is not None:
        deadline = time.monotonic() + config.time_budget
    chunks = _chunks(config.y_max)
    witnesses: list[Witness] = []
    candidates = 0
    hits = 0
    by_n = {n: 0 for n in sorted(config.n_set)}
    covered = 0
    complete = True

    def absorb(result, hi):
        nonlocal candidates, hits, covered
        chunk_witnesses, chunk_candidates, chunk_hits, chunk_by_n = result
        witnesses.extend(chunk_witnesses)
        candidates += chunk_candidates
        hits += chunk_hits
        for n, c in chunk_by_n.items():
            by_n[n] += c
        covered = hi

    if threads <= 1:
        for lo, hi in chunks:
            if deadline is not None and time.monotonic() > deadline:
                complete = False
                break
            absorb(_scan_chunk((config, lo, hi)), hi)
    else:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            futures = [
                (hi, pool.submit(_scan_chunk, (config, lo, hi)))
                for lo, hi in chunks
            ]
            for hi, future in futures:
                if deadline is not None and time.monotonic() > deadline:
                    complete = False
                    future.cancel()
                    continue
                absorb(future.result(), hi)
    return SearchReport(
        config=config,
        witnesses=witnesses,
        candidates=candidates,
        square_hits=hits,
        candidates_by_n=by_n,
        complete=complete,
        covered_y_max=covered,
    )


def search_lebesgue(
    B: int, n_min: int = 3, n_max: int = 7, y_max: int = 10
) -> list[tuple[int, int, int]]:
    """All (x, y, n) with x^2 + B = y^n, x, y >= 1, n_min <= n <= n_max."""
    if B < 1:
        raise ValidationError([f"B must be >= 1, got {B}"])
    if not (2 <= n_min <= n_max):
        raise ValidationError(["exponent range must satisfy 2 <= n_min <= n_max"])
    if y_max < 1:
        raise ValidationError(["y_max must be >= 1"])
    solutions = []
    for y in range(1, y_max + 1):
        for n in range(n_min, n_max + 1):
            t = y**n - B
            if t < 1:
                continue
            x = is_perfect_square(t)
            if x is not None and x >= 1:
                solutions.append((x, y, n))
    return solutions
