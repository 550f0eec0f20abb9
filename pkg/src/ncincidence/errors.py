"""Exception types shared across the package."""


class IncidenceError(Exception):
    """Base class for all errors raised by this package."""


class NotAUnit(IncidenceError, ArithmeticError):
    """An element that was required to be invertible is not."""


class DescriptorMismatch(IncidenceError, TypeError):
    """Two ring values from different rings were combined."""


class NotDivisionRing(IncidenceError):
    """A division-ring-only routine was called on a general ring."""


class NoSolution(IncidenceError):
    """A linear system has no solution."""


class DependentVertices(IncidenceError, ValueError):
    """Vertex lifts that were required to be independent are dependent."""


class NotOnLine(IncidenceError):
    """An edge point is not a combination of its two endpoint lifts."""


class DegenerateEdge(IncidenceError):
    """An edge point coincides with one of its endpoints."""


class MapError(IncidenceError, ValueError):
    """Malformed combinatorial map data."""


class FaceTooLarge(IncidenceError):
    """A face has more vertices than the ambient dimension can hold independently."""


class SupplyExhausted(IncidenceError):
    """Not enough points in general position exist over the requested ring."""


class NoneFound(IncidenceError):
    """No connection with a nontrivial defect was found within the search budget."""


class CannotRefute(IncidenceError):
    """The refuter could not produce a counterexample."""


class RealizationError(IncidenceError):
    """A realization violates its defining constraints."""
