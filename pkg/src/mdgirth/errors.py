class GraphError(Exception):
    """Base class for errors raised by mdgirth."""


class GraphFormatError(GraphError, ValueError):
    """Malformed graph6 or edge-list input."""


class DisconnectedGraphError(GraphError, ValueError):
    pass


class UnreachableDistanceError(GraphError, ArithmeticError):
    pass


class AcyclicGraphError(GraphError, ValueError):
    pass


class NotTwoConnectedError(GraphError, ValueError):
    pass


class PreconditionError(GraphError, ValueError):
    """A reduction rule was applied to a set or vertex that does not qualify."""
