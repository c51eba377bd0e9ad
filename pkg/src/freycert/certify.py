"""Symbolic non-existence certificates for x^2 +- q^alpha * p^n = y^n.

The argument is replayed over a whole family at once: every admissible
(x, y, alpha, p, n) would give a ternary witness with A = -+q^alpha', B = 1,
C = 1 that lands in case V; its predicted newform level depends only on q and
on whether alpha' = alpha mod n vanishes, so a zero newform-space dimension
at that level rules out the entire family.  Each derivation step is recorded
with its one-line justification, and the two modularity-side theorems the
conclusion leans on are listed explicitly rather than silently assumed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import factorize, is_prime
from .dimensions import DimensionTable, dim_s2_new
from .docformat import SCHEMA_VERSION, canonical_json
from .errors import ValidationError

SIGN_PLUS = "+"
SIGN_MINUS = "-"

HYP_X_ODD = "x odd"
HYP_COPRIME = "gcd(x,y)=1"
HYP_POSITIVE = "x,y >= 1"
DEFAULT_HYPOTHESES = (HYP_X_ODD, HYP_COPRIME, HYP_POSITIVE)

NO_SOLUTIONS = "NoSolutions"
INCONCLUSIVE = "Inconclusive"

ASSUMED_THEOREMS = (
    "Level lowering: absent complex multiplication (here |a*b| > 1), the "
    "mod-n representation of the attached curve arises from a weight-2 "
    "newform of the predicted level.",
    "Modularity of elliptic curves over the rationals.",
)


@dataclass(frozen=True)
class FamilySpec:
    """x^2 sign q^alpha p^n = y^n with p prime outside {2, q}.

    alpha, p and n may each be the string "any": alpha ranges over integers
    >= 1, p over primes not in {2, q}, n over primes >= 7.
    """

    sign: str
    q: int = 5
    alpha: int | str = "any"
    p: int | str = "any"
    n: int | str = "any"

    def violations(self) -> list[str]:
        out = []
        if self.sign not in (SIGN_PLUS, SIGN_MINUS):
            out.append(f"sign must be '+' or '-', got {self.sign!r}")
        if not is_prime(self.q):
            out.append(f"q = {self.q} is not prime")
        if self.alpha != "any" and (not isinstance(self.alpha, int) or self.alpha < 1):
            out.append(f"alpha must be a positive integer or 'any', got {self.alpha!r}")
        if self.p != "any":
            if not isinstance(self.p, int) or not is_prime(self.p):
                out.append(f"p = {self.p!r} is not prime")
            elif self.p in (2, self.q):
                out.append(f"p = {self.p} is excluded (p not in {{2, {self.q}}})")
        if self.n != "any":
            if not isinstance(self.n, int) or self.n < 7 or not is_prime(self.n):
                out.append(f"n = {self.n!r} is not a prime >= 7")
        return out

    def echo(self) -> dict:
        return {
            "sign": self.sign,
            "q": self.q,
            "alpha": self.alpha if isinstance(self.alpha, str) else self.alpha,
            "p": self.p if isinstance(self.p, str) else self.p,
            "n": self.n if isinstance(self.n, str) else self.n,
        }


@dataclass(frozen=True)
class ParityFact:
    statement: str
    because: str

    def echo(self) -> dict:
        return {"statement": self.statement, "because": self.because}


@dataclass(frozen=True)
class LevelBranch:
    """One reduced-exponent class alpha' = alpha mod n with its level."""

    label: str
    alpha_reduced_zero: bool
    level: int
    dim_new: int


@dataclass(frozen=True)
class Certificate:
    family: FamilySpec
    hypotheses: tuple[str, ...]
    ternary_template: dict
    parity_facts: tuple[ParityFact, ...]
    case: str  # "V" or "unresolved"
    level: int
    dim_new_at_level: int
    conclusion: str
    assumed_theorems: tuple[str, ...]
    footnotes: tuple[str, ...]

    def to_document(self) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "family": self.family.echo(),
            "hypotheses": list(self.hypotheses),
            "ternary_template": dict(self.ternary_template),
            "parity_facts": [f.echo() for f in self.parity_facts],
            "case": self.case,
            "level": self.level,
            "dim_new_at_level": self.dim_new_at_level,
            "conclusion": self.conclusion,
            "assumed_theorems": list(self.assumed_theorems),
            "footnotes": list(self.footnotes),
        }

    def canonical_json(self) -> str:
        return canonical_json(self.to_document())


def _alpha_branch_plan(family: FamilySpec) -> tuple[bool, bool, list[str]]:
    """Which alpha' classes are reachable: (generic alpha'>=1, alpha'=0)."""
    footnotes: list[str] = []
    alpha, n = family.alpha, family.n
    if alpha == "any":
        if n == "any":
            footnotes.append(
                "alpha ranges over all integers >= 1: both the generic class "
                "alpha mod n >= 1 and the degenerate class alpha = 0 (mod n) "
                "are reachable and are checked separately."
            )
            return True, True, footnotes
        footnotes.append(
            f"alpha unrestricted with n = {n}: the degenerate class "
            f"alpha = 0 (mod {n}) is reachable and checked separately."
        )
        return True, True, footnotes
    if n != "any":
        r = alpha % n
        if r == 0:
            footnotes.append(
                f"alpha = {alpha} is divisible by n = {n}: after moving the "
                f"full power of {family.q} into a, the coefficient A is a "
                "unit and the level radical is empty."
            )
            return False, True, footnotes
        return True, False, footnotes
    # concrete alpha, symbolic n >= 7
    if alpha < 7:
        return True, False, footnotes
    big_prime_divisors = [
        p for p, _ in factorize(alpha).factors if p >= 7
    ]
    if big_prime_divisors:
        footnotes.append(
            f"alpha = {alpha} is divisible by admissible exponents "
            f"{big_prime_divisors}: for those n the degenerate class "
            "alpha = 0 (mod n) applies and is checked separately."
        )
        return True, True, footnotes
    return True, False, footnotes


def derive_ternary(family: FamilySpec) -> tuple[dict, list[str]]:
    """Symbolic ternary template for the family, plus reduction footnotes.

    Writing the equation as A*a^n + B*b^n = C*c^2 forces, for sign +,
    y^n - q^alpha p^n = x^2 so A = -q^alpha'; for sign -, y^n + q^alpha p^n
    = x^2 so A = +q^alpha'.  Any excess power q^(n*floor(alpha/n)) moves into
    a, keeping ord_q(A) < n.
    """
    violations = family.violations()
    if violations:
        raise ValidationError(violations)
    q = family.q
    neg = family.sign == SIGN_PLUS
    footnotes: list[str] = []
    if family.alpha != "any" and family.n != "any":
        reduced = family.alpha % family.n
        quotient = family.alpha // family.n
        a_sym = "p" if quotient == 0 else f"{q}^{quotient} * p"
        A_sym = f"{'-' if neg else ''}{q ** reduced}"
        if quotient > 0 and reduced > 0:
            footnotes.append(
                f"alpha = {family.alpha} >= n = {family.n}: valuation "
                f"reduced to alpha' = {reduced} with the excess "
                f"{q}^{quotient * family.n} absorbed into a^n, restoring "
                f"ord_{q}(A) < n."
            )
    else:
        A_sym = f"{'-' if neg else '+'}{q}^alpha'  (alpha' = alpha mod n)"
        a_sym = f"{q}^floor(alpha/n) * p"
    parity = (
        "even" if isinstance(family.alpha, int) and family.alpha % 2 == 0 else
        "odd" if isinstance(family.alpha, int) else "any"
    )
    if family.sign == SIGN_PLUS and parity in ("odd", "any"):
        footnotes.append(
            f"sign {family.sign} with alpha odd: A equals (-{q})^alpha "
            "literally."
        )
    if family.sign == SIGN_MINUS and parity in ("even", "any"):
        footnotes.append(
            f"sign {family.sign} with alpha even: A equals (-{q})^alpha "
            "literally."
        )
    template = {
        "A": A_sym,
        "B": "1",
        "C": "1",
        "a": a_sym,
        "b": "y",
        "c": "x, sign chosen so that c = 1 (mod 4)",
        "n": str(family.n) if family.n != "any" else "n",
    }
    return template, footnotes


def derive_parity_facts(
    family: FamilySpec, hypotheses: tuple[str, ...]
) -> tuple[list[ParityFact], list[str]]:
    """The five derivable facts, or the reasons they cannot be derived."""
    q = family.q
    facts: list[ParityFact] = []
    problems: list[str] = []
    if q == 2:
        problems.append("q = 2 breaks the parity argument (q^alpha * p^n is even)")
    if HYP_X_ODD not in hypotheses:
        problems.append("without 'x odd' the parity of y is underdetermined")
    if HYP_COPRIME not in hypotheses:
        problems.append("without gcd(x,y)=1 the pairwise coprimality fails")
    if HYP_POSITIVE not in hypotheses:
        problems.append("without x,y >= 1 the witness entries may vanish")
    if problems:
        return facts, problems
    facts.append(
        ParityFact(
            "y is even",
            f"x odd makes x^2 odd, and {q}^alpha * p^n is odd, so "
            "y^n = x^2 -+ odd is even",
        )
    )
    facts.append(
        ParityFact(
            f"p and {q} divide neither x nor y",
            f"a common factor of p (or {q}) with x forces the same factor "
            "into y through the equation, contradicting gcd(x,y)=1",
        )
    )
    facts.append(
        ParityFact(
            "c = 1 (mod 4) = C after replacing x by -x if needed",
            "x is odd, so one of x, -x is 1 mod 4; the equation sees only x^2",
        )
    )
    facts.append(
        ParityFact(
            "ord_2(B*b^n) = n * ord_2(y) >= 7, so the case V shape applies",
            "B = 1, b = y is even and n >= 7",
        )
    )
    facts.append(
        ParityFact(
            "|a*b| >= 2p > 1, ruling out the complex multiplication proxy",
            "y even with y >= 1 means |y| >= 2, and p >= 3 divides a",
        )
    )
    return facts, problems


def certify(
    family: FamilySpec,
    hypotheses: tuple[str, ...] = DEFAULT_HYPOTHESES,
    table: DimensionTable | None = None,
) -> Certificate:
    """End-to-end certificate for the family; deterministic field by field.

    NoSolutions requires every reachable reduced-exponent class to have a
    zero newform-space dimension at its predicted level, the case V placement
    to be derivable from the hypotheses, and the CM proxy to hold.  Anything
    else is reported Inconclusive with the blocking reasons footnoted.
    """
    template, footnotes = derive_ternary(family)
    generic, degenerate, branch_notes = _alpha_branch_plan(family)
    footnotes.extend(branch_notes)
    q = family.q
    branches: list[LevelBranch] = []
    if generic:
        level = 2 * q  # 2^1 * C^2 * (odd primes dividing A*B) = 2q
        branches.append(
            LevelBranch("alpha' >= 1", False, level, dim_s2_new(level, table))
        )
    if degenerate:
        branches.append(LevelBranch("alpha' = 0", True, 2, dim_s2_new(2, table)))
    facts, problems = derive_parity_facts(family, hypotheses)
    blocked = list(problems)
    for branch in branches:
        if branch.dim_new != 0:
            blocked.append(
                f"newform space at level {branch.level} has dimension "
                f"{branch.dim_new} ({branch.label})"
            )
    for branch in branches[1:]:
        footnotes.append(
            f"class {branch.label}: level {branch.level}, "
            f"dim-new {branch.dim_new}."
        )
    footnotes.append(
        "conventions: the case V test uses ord_2(B*b^n); conductor and level "
        "radicals run over odd primes with the 2-exponent carried separately."
    )
    footnotes.append(
        "y even together with y >= 1 forces y >= 2, so degenerate witnesses "
        "with y = 1 cannot occur."
    )
    if blocked:
        footnotes.extend(f"blocked: {reason}" for reason in blocked)
    conclusion = NO_SOLUTIONS if not blocked else INCONCLUSIVE
    primary = branches[0]
    return Certificate(
        family=family,
        hypotheses=tuple(hypotheses),
        ternary_template=template,
        parity_facts=tuple(facts),
        case="V" if not problems else "unresolved",
        level=primary.level,
        dim_new_at_level=primary.dim_new,
        conclusion=conclusion,
        assumed_theorems=ASSUMED_THEOREMS,
        footnotes=tuple(footnotes),
    )
