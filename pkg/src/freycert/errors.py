"""Exception types shared across the toolkit."""


class FreyToolError(Exception):
    """Base class for all toolkit errors."""


class NotPrimeError(FreyToolError):
    """An argument that must be prime is not."""


class FactorBudgetError(FreyToolError):
    """Trial division exhausted its budget with a composite cofactor left."""

    def __init__(self, value, cofactor, bound):
        super().__init__(
            f"unfactored cofactor {cofactor} of {value} (trial bound {bound})"
        )
        self.value = value
        self.cofactor = cofactor
        self.bound = bound


class SingularModelError(FreyToolError):
    """The Weierstrass model has discriminant zero."""


class NonMinimalModelError(FreyToolError):
    """Local data was requested at a prime where the model may not be minimal."""


class BadReductionError(FreyToolError):
    """Point counting was requested at a prime of bad reduction."""


class ValidationError(FreyToolError):
    """An instance or configuration violates its invariants."""

    def __init__(self, violations):
        super().__init__("; ".join(violations))
        self.violations = list(violations)


class UnclassifiableError(FreyToolError):
    """No admissible presentation of the instance matches any case."""


class IntegralityError(FreyToolError):
    """A coefficient that must be integral is not (classification bug)."""


class VerificationError(FreyToolError):
    """A verification pass that must succeed did not."""
