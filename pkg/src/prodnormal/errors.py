"""Exception hierarchy.

Every error carries a short machine-readable ``category`` so callers (the CLI,
the table harness) can branch on it without parsing messages.
"""


class ProductNormalError(Exception):
    category = "error"


class DomainError(ProductNormalError, ValueError):
    """Argument outside the region where a formula is defined."""

    category = "domain-error"


class SingularPointError(DomainError):
    """Evaluation requested exactly at a singularity of the density."""


class ParameterError(ProductNormalError, ValueError):
    category = "parameter-error"


class RegimeError(ProductNormalError, ValueError):
    """An asymptotic formula was asked to work far outside its regime."""

    category = "regime-error"


class ConvergenceError(ProductNormalError, ArithmeticError):
    category = "nonconvergence"


class SeriesTruncationError(ConvergenceError):
    """A series did not meet its stopping rule before the term cap."""


class BracketError(ConvergenceError):
    """Root bracketing failed (target probability too extreme)."""
