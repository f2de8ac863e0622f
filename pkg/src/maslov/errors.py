"""Exception types shared across the package.

Every error carries a machine-readable ``code`` so the CLI can map failures
to exit codes without string matching.
"""


class MaslovError(Exception):
    """Base class for all package errors."""

    code = "ERROR"


class BadInput(MaslovError):
    """Input violates a structural precondition (shape, symmetry, schema)."""

    code = "BAD_INPUT"


class Undersampled(MaslovError):
    """A sampled path is too coarse to lift reliably and cannot be refined."""

    code = "UNDERSAMPLED"


class IllConditioned(MaslovError):
    """A rank or signature decision fell inside the tolerance ambiguity band."""

    code = "ILL_CONDITIONED"
