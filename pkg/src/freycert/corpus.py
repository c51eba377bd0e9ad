"""Seeded generation of valid ternary instances for tests and exploration.

Witnesses are built backwards: pick small A, B, a, b and a prime exponent n,
set S = A*a^n + B*b^n, and split S = C*c^2 with C squarefree.  Six targeting
modes steer the 2-adic shape of (B, b) so that all five cases appear in
quantity after normalization.
"""

from __future__ import annotations

import random

from .arith import square_decomposition
from .frey import TernaryInstance, validate

_MODES = ("all_odd", "b_2", "b_4", "b_8_32", "big_B", "even_b")


def _odd(rng: random.Random, limit: int) -> int:
    v = rng.randrange(1, limit + 1, 2)
    return v if rng.random() < 0.5 else -v


def _draw(rng: random.Random, mode: str) -> TernaryInstance | None:
    n = rng.choice((7, 7, 7, 11, 13))
    lim = 5 if n == 7 else 1  # keep |S| small enough for instant factoring
    a = _odd(rng, lim)
    b = _odd(rng, lim)
    A = _odd(rng, 49)
    B = _odd(rng, 49)
    if mode == "b_2":
        B = 2 * _odd(rng, 23)
    elif mode == "b_4":
        B = 4 * _odd(rng, 11)
    elif mode == "b_8_32":
        B = rng.choice((8, 16, 32)) * _odd(rng, 3)
    elif mode == "big_B":
        B = rng.choice((64,) if n == 7 else (64, 128)) * _odd(rng, 1)
    elif mode == "even_b":
        b = rng.choice((2, 4) if n == 7 else (2,)) * (1 if rng.random() < 0.5 else -1)
    S = A * a**n + B * b**n
    if S == 0:
        return None
    if mode == "all_odd" and S % 4 != 0:
        return None  # steer towards case I (odd C, even c)
    C, c = square_decomposition(S)
    inst = TernaryInstance(A, B, C, a, b, c, n)
    if validate(inst):
        return None
    return inst


def random_instances(count: int = 1200, seed: int = 0) -> list[TernaryInstance]:
    """count distinct valid instances, deterministically from the seed."""
    rng = random.Random(seed)
    quota = -(-count // len(_MODES))
    picked: dict[str, int] = {mode: 0 for mode in _MODES}
    seen: set[tuple] = set()
    out: list[TernaryInstance] = []
    attempts = 0
    limit = 2000 * count
    while len(out) < count and attempts < limit:
        attempts += 1
        open_modes = [m for m in _MODES if picked[m] < quota]
        if not open_modes:
            open_modes = list(_MODES)
        mode = open_modes[attempts % len(open_modes)]
        inst = _draw(rng, mode)
        if inst is None or inst.as_tuple() in seen:
            continue
        seen.add(inst.as_tuple())
        picked[mode] += 1
        out.append(inst)
    if len(out) < count:
        raise RuntimeError(f"corpus generation stalled at {len(out)}/{count}")
    return out
