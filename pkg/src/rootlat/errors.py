"""Exception hierarchy shared by all rootlat modules."""

from __future__ import annotations


class RootLatticeError(ValueError):
    """Base class for domain errors (bad input, out-of-range requests)."""


class InvalidRankError(RootLatticeError):
    pass


class LatticeSpecError(RootLatticeError):
    """A lattice spec or vector literal could not be parsed."""

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class DimensionMismatchError(RootLatticeError):
    pass


class IndexOutOfRangeError(RootLatticeError, IndexError):
    pass


class NotInDualError(RootLatticeError):
    pass


class InLatticeError(RootLatticeError):
    pass


class OutOfScopeNormError(RootLatticeError):
    pass


class RankCapError(RootLatticeError):
    pass


class InvalidTargetError(RootLatticeError):
    pass


class OrbitCapExceeded(RootLatticeError):
    def __init__(self, cap: int, partial_size: int):
        super().__init__(
            f"orbit exploration exceeded cap {cap} (explored {partial_size} elements)"
        )
        self.cap = cap
        self.partial_size = partial_size


class InvariantViolation(AssertionError):
    """An internal consistency check failed; this signals a bug, not bad input."""


class CertificationFailure(InvariantViolation):
    """A candidate vector could not be certified.

    ``counterexample`` is a JSON-serialisable dump sufficient to reproduce the run.
    """

    def __init__(self, message: str, counterexample: dict):
        super().__init__(message)
        self.counterexample = counterexample
