"""Shared exception types."""


class ConsistencyError(RuntimeError):
    """An enumerated structure contradicts a counted expectation.

    Raised when exhaustive enumeration disagrees with a closed-form count or
    with a structural property the rest of the pipeline relies on (orbit size
    mismatch, non-tactical submatrix, chords meeting off the curve, covering
    radius != 3, ...).  Carries a human-readable witness in the message.
    """
