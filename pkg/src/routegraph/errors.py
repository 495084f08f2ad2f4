"""Exception types shared across the routing engine."""


class RouteGraphError(Exception):
    """Base class for every error raised by this package."""


class UnknownNode(RouteGraphError):
    """A node id does not exist in the graph."""


class UnknownEdge(RouteGraphError):
    """An edge id does not exist in the graph."""


class SelfLoopRejected(RouteGraphError):
    """Attempted to create an edge whose endpoints coincide."""


class NegativeWeight(RouteGraphError):
    """Edge weight is negative or not a finite number."""


class InvalidCoordinate(RouteGraphError):
    """Node coordinate is not finite or lies outside the attached overlay."""


class GraphInvalid(RouteGraphError):
    """A graph document could not be parsed into a valid graph."""


class Unreachable(RouteGraphError):
    """No path exists between the requested nodes."""


class Disconnected(RouteGraphError):
    """The graph (or the requested node set) is not connected."""


class EmptyGraph(RouteGraphError):
    """The operation needs at least one node."""


class OddCardinality(RouteGraphError):
    """Perfect matching requires an even number of nodes."""


class CardinalityTooLarge(RouteGraphError):
    """Node set exceeds the exact matcher's hard size cap."""


class OddDegreePresent(RouteGraphError):
    """Euler circuit requested on a graph with odd-degree nodes."""


class TooFewNodes(RouteGraphError):
    """Tour construction needs at least three nodes."""


class TooLarge(RouteGraphError):
    """Instance exceeds the exact solver's hard size cap."""
