"""Exception types shared across the engine."""


class ChronologError(Exception):
    """Base class for every error this package raises deliberately."""


class DuplicateIntervalId(ChronologError):
    """Two timeline intervals were declared with the same id."""


class EmptyInterval(ChronologError):
    """An interval's start does not strictly precede its end."""


class OverlappingIntervals(ChronologError):
    """Two timeline intervals overlap in time."""


class UnknownInterval(ChronologError):
    """An interval id is not part of the timeline."""


class TimelineMismatch(ChronologError):
    """Two values that must share a timeline do not."""


class UndefinedIntersection(ChronologError):
    """Intersection of events whose supports are disjoint is undefined."""


class SubsetNotInSupport(ChronologError):
    """A requested interval subset reaches outside an event's support."""


class EmptyGoalSupport(ChronologError):
    """Temporal unification needs a goal annotation with nonempty support."""


class UnboundEventExpr(ChronologError):
    """An event expression still contains variables after substitution."""


class NoSuchFact(ChronologError):
    """An event expression references a predicate with no annotated fact."""


class DepthLimitExceeded(ChronologError):
    """Resolution exceeded the configured step budget."""
