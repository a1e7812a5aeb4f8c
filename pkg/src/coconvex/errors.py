"""Exception types raised by geometric validation.

All domain failures subclass CoconvexError, which subclasses ValueError so
callers that do not care about the distinction can catch one thing.
"""


class CoconvexError(ValueError):
    """Base class for all validation failures in this package."""


class DimensionMismatch(CoconvexError):
    """Operands live in different ambient dimensions."""


class EmptyInput(CoconvexError):
    """An operation that needs at least one point received none."""


class UnboundedPolyhedron(CoconvexError):
    """A bounded polytope was required but the input has recession rays."""


class NotPointed(CoconvexError):
    """The polyhedron contains a whole line, so it has no vertex form."""


class NotStrictlyConvex(CoconvexError):
    """The cone contains a line; no linear functional is positive on it."""


class NotFullDimensional(CoconvexError):
    """The cone's rays do not span the ambient space."""


class ComplementNotInCone(CoconvexError):
    """The convex complement sticks out of the cone."""


class ComplementNotCompact(CoconvexError):
    """The region between cone and complement is unbounded."""


class EmptyInterior(CoconvexError):
    """The region between cone and complement has volume zero."""


class ConeMismatch(CoconvexError):
    """Coconvex operands must share one cone."""


class InvalidTruncation(CoconvexError):
    """The truncation level does not clear the complement's vertices."""
