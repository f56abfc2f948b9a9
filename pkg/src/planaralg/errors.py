"""Shared exception types."""


class NotSemisimple(ValueError):
    """A required Chebyshev-type denominator vanished at this loop parameter."""


class NotHadamard(ValueError):
    """Matrix failed the generalized-Hadamard validity check."""


class HypothesisNotMet(ValueError):
    """A structural hypothesis of a checked statement fails for this input."""


class SizeGuardExceeded(RuntimeError):
    """Requested enumeration is larger than the configured guard."""
