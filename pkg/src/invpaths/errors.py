"""Exception hierarchy shared by all invpaths modules."""


class InvpathsError(Exception):
    """Base class for all library-specific errors."""


class EmptyWord(InvpathsError):
    """A pattern word must contain at least one letter."""


class GuardExceeded(InvpathsError):
    """An exhaustive enumeration was requested beyond its size guard."""


class RankUndefined(InvpathsError):
    """Strict rank requested for a sequence whose rank is not meaningful."""


class DomainError(InvpathsError):
    """Arguments outside the domain of a counting formula."""


class PathError(InvpathsError):
    """Base class for lattice-path validation failures."""


class BelowAxis(PathError):
    """The path dips below its bounding line."""


class ForbiddenFactor(PathError):
    """The step word contains a forbidden two-letter factor."""


class BadTerminal(PathError):
    """The path does not end with the required step."""


class BadEndpoint(PathError):
    """The path does not end at the required lattice point."""


class StepNotInF(InvpathsError):
    """A step displacement lies outside the allowed step set."""


class BadLabel(InvpathsError):
    """A step label violates the rise/down labelling rules."""


class BelowDiagonal(InvpathsError):
    """A labeled path point falls below the line y = x."""


class PatternViolation(InvpathsError):
    """An input sequence contains a pattern the operation requires it to avoid."""


class BadBoardLength(InvpathsError):
    """A tiling does not fit the required board."""


class NonInvertibleConstantTerm(InvpathsError):
    """Series division or inversion requires a nonzero constant term."""


class BadComposition(InvpathsError):
    """Series composition requires the inner series to have zero constant term."""
