"""Shared exception types."""

from __future__ import annotations


class EsdecError(Exception):
    """Base class for all package errors."""


class ParseError(EsdecError):
    """Syntax error in predicate, sentence, or sequence text."""

    def __init__(self, message: str, line: int = 0, column: int = 0):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class ResourceLimitError(EsdecError):
    """A configured budget (cells, candidate types, conjuncts) was exceeded.

    Carries enough context to report the decision as undecided rather
    than wrong.
    """

    def __init__(self, message: str, **stats):
        super().__init__(message)
        self.stats = dict(stats)


class ExtractionFailure(EsdecError):
    """A constructive extraction could not produce a verified result.

    The message names the pipeline stage that came up short; this is a
    reported outcome, never a fabricated success.
    """

    def __init__(self, message: str, stage: str = ""):
        super().__init__(message)
        self.stage = stage


class InconsistentTypeError(EsdecError):
    """A candidate type admits no pairwise-dominant coefficient.

    Only reachable for candidate types that are not realizable; callers
    treat it as a skip.
    """


class OrderInvarianceError(EsdecError):
    """A predicate set failed the order-invariance sampling check."""


class DegenerateCrossRatioError(EsdecError):
    """Cross-ratio undefined: z2 = z3 or z1 = z4."""
