"""Exception hierarchy for phasegain."""


class PhasegainError(Exception):
    """Base class for all phasegain errors."""


class EmptyInput(PhasegainError):
    """A point list that must be non-empty was empty."""


class EmptyPolygon(PhasegainError):
    """Operation requires a polygon with at least one vertex."""


class BadParameter(PhasegainError):
    """Invalid feasible-set parameter or malformed descriptor."""


class DegenerateSet(PhasegainError):
    """The feasible set collapses to a single point (zero perimeter)."""


class NotPolygon(PhasegainError):
    """A polygonal hull was required but the set's hull is not one."""


class Unsupported(PhasegainError):
    """Requested a constant outside the cases that are known."""


class ContinuousSetNotSupported(PhasegainError):
    """Exact solver needs a finite set or an explicit approximation resolution."""


class BudgetExceeded(PhasegainError):
    """Minkowski vertex budget exceeded."""


class TooLarge(PhasegainError):
    """Exhaustive enumeration would exceed the configured cap."""


class NotAGroup(PhasegainError):
    """The RIS reduction requires the feasible set to be a regular M-gon."""
