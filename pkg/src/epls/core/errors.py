"""
Exception hierarchy shared by every epls module.
"""
from typing import Optional, Sequence


class EplsError(Exception):
    """Base class for all epls errors."""


class ParameterError(EplsError, ValueError):
    """Invalid parameters for a constructor or predicate."""


class DegreeMismatchError(EplsError, ValueError):
    """Permutations, groups or spaces of different degrees were combined."""


class PointRangeError(EplsError, ValueError):
    """A point index lies outside {0..degree-1}."""


class EmptyGeneratorsError(EplsError, ValueError):
    """A group was requested from an empty generator list."""


class IntransitiveError(EplsError, ValueError):
    """An operation requiring a transitive group received an intransitive one."""


class NotInvariantError(EplsError, ValueError):
    """A point set expected to be group-invariant is not."""


class FieldError(EplsError, ValueError):
    """Finite field construction or arithmetic failure."""


class FormatError(EplsError, ValueError):
    """A group or space file could not be parsed."""

    def __init__(self, message: str, line_number: Optional[int] = None):
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)
        self.line_number = line_number


class BoundExceededError(EplsError, RuntimeError):
    """A configured size bound was exceeded; the instance is beyond desk scale."""

    def __init__(self, message: str, bound: Optional[int] = None):
        super().__init__(message)
        self.bound = bound


class LinearSpaceError(EplsError, ValueError):
    """The pair-coverage axiom of a linear space fails."""

    def __init__(self, message: str, uncovered: Sequence = (), repeated: Sequence = ()):
        super().__init__(message)
        self.uncovered = list(uncovered)
        self.repeated = list(repeated)


class PropertyStarError(EplsError, ValueError):
    """The group does not have Property (*); carries the violating triple."""

    def __init__(self, message: str, triple: Optional[tuple] = None):
        super().__init__(message)
        self.triple = triple


class PreconditionError(EplsError, ValueError):
    """A hypothesis of the refinement construction fails.

    Attributes:
        code: stable identifier of the failed precondition
    """

    def __init__(self, code: str, message: str):
        super().__init__(f"[{code}] {message}")
        self.code = code


class SearchFailedError(EplsError, RuntimeError):
    """A seeded random search gave up; retry with another EPLS_SEED."""
