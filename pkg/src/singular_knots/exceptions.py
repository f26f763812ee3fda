"""
Exceptions raised by the singular knot library.

Every error is a KauffmanError (and therefore a ValueError), so callers that
only care about "bad input" can catch one type.
"""
from typing import Optional


class KauffmanError(ValueError):
    """Base class for all library errors."""


class DiagramSyntaxError(KauffmanError):
    """A .skd source could not be tokenized or parsed."""

    def __init__(self, message: str, line: int, column: int = 1):
        self.message = message
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


class DiagramValidationError(KauffmanError):
    """A diagram violates one of its structural invariants."""


class NonPlanarDiagramError(DiagramValidationError):
    """The rotation system does not describe a sphere (V - E + F != 2)."""


class InvalidBraidError(DiagramValidationError):
    """A braid word, strand count or singular mask is out of range."""


class SplitClosureError(DiagramValidationError):
    """A braid closes up to a split (disconnected) diagram."""


class DegenerateMarkingError(KauffmanError):
    """Both sides of the marked edge lie in the same face."""


class NotPlanarSingularError(KauffmanError):
    """Operation needs a diagram whose vertices are all singular."""


class NoSingularVertexError(KauffmanError):
    """Operation needs at least one singular vertex."""


class CertificateViolationError(KauffmanError):
    """A planar state failed M = 2S."""


class InstanceTooLargeError(KauffmanError):
    """Brute-force oracle refused an instance above its size guard."""

    def __init__(self, vertices: int, limit: int):
        self.vertices = vertices
        self.limit = limit
        super().__init__(
            f"Oracle limited to {limit} vertices, diagram has {vertices}\n"
            f"Use enumerate_states() for larger diagrams"
        )


class RecursionGuardError(KauffmanError):
    """Skein recursion went deeper than the number of singular vertices."""

    def __init__(self, depth: int, limit: Optional[int] = None):
        self.depth = depth
        self.limit = limit
        super().__init__(f"Skein recursion depth {depth} exceeds guard {limit}")
