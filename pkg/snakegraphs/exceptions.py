"""Error hierarchy shared by every app of the engine."""


class SnakeCalculusError(Exception):
    """Base class for all domain errors."""


class InvalidSteps(SnakeCalculusError):
    pass


class EmptySteps(SnakeCalculusError):
    pass


class AliasLabelConflict(SnakeCalculusError):
    pass


class UnknownEdge(SnakeCalculusError):
    pass


class TileRangeError(SnakeCalculusError):
    pass


class InvalidOverlap(SnakeCalculusError):
    pass


class NotCrossing(SnakeCalculusError):
    pass


class MalformedGlue(SnakeCalculusError):
    pass


class BadGraftSite(SnakeCalculusError):
    pass


class BadEdgeChoice(SnakeCalculusError):
    pass


class NotAMatching(SnakeCalculusError):
    pass


class NoCompletion(SnakeCalculusError):
    pass


class AmbiguousCompletion(SnakeCalculusError):
    pass


class InternalBranchFailure(SnakeCalculusError):
    """A matching map produced an edge set that is not a perfect matching."""


class InexactDivision(SnakeCalculusError):
    pass


class UnlabeledGraph(SnakeCalculusError):
    pass


class InvalidArc(SnakeCalculusError):
    pass


class InvalidTriangulation(SnakeCalculusError):
    pass


class ArcInTriangulation(SnakeCalculusError):
    pass


class NoPath(SnakeCalculusError):
    pass


class ReservedLabel(SnakeCalculusError):
    """A label that would clash with a generated coefficient variable."""
