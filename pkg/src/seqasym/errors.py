"""Exception hierarchy shared by all seqasym modules.

Every error that user input can trigger derives from :class:`SeqasymError`,
so the CLI can map the whole family onto its exit-code discipline
(0 success, 1 verification failure, 2 usage error, 3 budget exceeded)
while still printing a distinct error token per exception class.
"""

from __future__ import annotations

__all__ = [
    "SeqasymError",
    "ZeroConstantTerm",
    "BadConstantTerm",
    "NonIntegerCount",
    "NegativeCount",
    "PeriodMismatch",
    "NegativeIrreducibleCount",
    "UnsupportedF",
    "LeadingTermUndefined",
    "UnknownClass",
    "RangeError",
    "BudgetExceeded",
]


class SeqasymError(Exception):
    """Base class; ``token`` is the stable machine-readable identifier."""

    #: printed on stderr by the CLI, stable across releases
    token = "error"

    #: CLI exit code family: 2 = usage error, 3 = budget exceeded
    exit_code = 2


class ZeroConstantTerm(SeqasymError):
    """Series inversion requires a nonzero constant term."""

    token = "ZeroConstantTerm"


class BadConstantTerm(SeqasymError):
    """Constant term violates the operation's contract (exp needs 0, log and
    counting sequences need 1)."""

    token = "BadConstantTerm"


class NonIntegerCount(SeqasymError):
    """A labeled reconstruction n! * f_n failed to be an integer, so the series
    is not the exponential generating function of any counting sequence."""

    token = "NonIntegerCount"


class NegativeCount(SeqasymError):
    """User-supplied counting values must be nonnegative."""

    token = "NegativeCount"


class PeriodMismatch(SeqasymError):
    """Declared period is inconsistent with the value pattern, or a reindexing
    was requested for an aperiodic sequence."""

    token = "PeriodMismatch"


class NegativeIrreducibleCount(SeqasymError):
    """Sequence inversion produced a negative part count: the input class is
    not decomposable as a sequence of a genuine subclass."""

    token = "NegativeIrreducibleCount"


class UnsupportedF(SeqasymError):
    """The composition engine only knows the closed analytic families it
    actually needs (sequence and cycle kernels)."""

    token = "UnsupportedF"


class LeadingTermUndefined(SeqasymError):
    """No size-1 object and no declared period: the dominant term has no
    well-defined shape."""

    token = "LeadingTermUndefined"


class UnknownClass(SeqasymError):
    """Class name not in the catalog and no custom file given."""

    token = "UnknownClass"


class RangeError(SeqasymError):
    """Requested indices are malformed or outside what the inputs define."""

    token = "RangeError"


class BudgetExceeded(SeqasymError):
    """Enumeration space larger than the allowed object budget."""

    token = "BudgetExceeded"
    exit_code = 3
