class IdCodeError(Exception):
    """Base class for every error raised by this package."""


class GraphError(IdCodeError):
    pass


class VertexOutOfRange(GraphError):
    pass


class SelfLoop(GraphError):
    pass


class TooFewVertices(GraphError):
    pass


class WidthMismatch(GraphError):
    pass


class SameVertex(GraphError):
    pass


class GNotConnected(GraphError):
    pass


class ParseError(IdCodeError):
    pass


class SolverError(IdCodeError):
    pass


class NotIdentifiable(SolverError):
    pass


class UndefinedParameter(SolverError):
    pass


class TooLargeForExactSearch(SolverError):
    pass


class ClosedFormMismatch(SolverError):
    """A closed-form value disagreed with exhaustive search."""


class NotIdentifiableProduct(SolverError):
    pass


class NotAnIdentifyingCode(SolverError):
    pass


class OutOfCorollaryRange(SolverError):
    pass
