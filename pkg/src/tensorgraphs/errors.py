"""Exception types shared across the package.

Builders raise on the first offending element; validators report all
violations as data instead (see :class:`tensorgraphs.core.ValidationReport`).
"""


class TensorGraphError(Exception):
    """Base class for every error raised by this package."""


class BadParameters(TensorGraphError):
    """An argument is outside its allowed range or malformed."""


# -- colored graph construction -------------------------------------------

class UnequalParts(TensorGraphError):
    """White and black vertex classes differ in size."""


class DuplicateColorAtVertex(TensorGraphError):
    """A vertex carries two edges of the same color."""


class MissingColorAtVertex(TensorGraphError):
    """A vertex lacks an edge of some color."""


class UnknownNode(TensorGraphError):
    """An edge references a vertex that was never declared."""


class ColorOutOfRange(TensorGraphError):
    """A color index exceeds the graph rank."""


# -- stranded graph construction ------------------------------------------

class DanglingHalfEdge(TensorGraphError):
    """A half-edge belongs to no edge (open legs are rejected)."""


class HalfEdgeReused(TensorGraphError):
    """A half-edge appears in more than one edge end."""


class BadPermutation(TensorGraphError):
    """A strand permutation is not a bijection of the slot indices."""


class WrongValence(TensorGraphError):
    """A vertex does not carry exactly rank+1 half-edges."""


# -- topology ---------------------------------------------------------------

class OddEuler(TensorGraphError):
    """Euler characteristic is odd: non-orientable or corrupted ribbon data."""


class NegativeGenus(TensorGraphError):
    """Euler characteristic exceeds 2: disconnected input passed as connected."""


class Disconnected(TensorGraphError):
    """Connectivity evidence absent or negative."""


# -- bubbles ---------------------------------------------------------------

class BadCardinal(TensorGraphError):
    """Color subset cardinality outside 1..rank+1."""


# -- structural checks ------------------------------------------------------

class TwistedInput(TensorGraphError):
    """Operation requires untwisted edges but a twist is present."""


class WrongRank(TensorGraphError):
    """Operation is only defined for a specific rank."""


# -- sampling ---------------------------------------------------------------

class AttemptsExhausted(TensorGraphError):
    """Rejection sampling hit its attempt budget."""

    def __init__(self, message: str, attempts: int):
        super().__init__(message)
        self.attempts = attempts


# -- documents --------------------------------------------------------------

class ParseError(TensorGraphError):
    """Malformed document; ``location`` points at the offending element."""

    def __init__(self, message: str, location: str | None = None):
        self.location = location
        super().__init__(message if location is None else f"{location}: {message}")


class UnknownFormat(TensorGraphError):
    """Document format tag is not recognized."""


class VersionUnsupported(TensorGraphError):
    """Document version is not supported by this build."""


class InvariantViolation(TensorGraphError):
    """An internal invariant failed; indicates a bug, not bad input."""
