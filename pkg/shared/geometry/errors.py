"""Exceptions raised by the Riemannian backend."""


class GeometryError(Exception):
    """Base class for geometry failures."""


class DomainError(GeometryError, ValueError):
    """A point (or a finite-difference stencil around it) leaves the chart domain."""


class DepthError(GeometryError, ValueError):
    """Requested derivative order exceeds the supported depth."""


class NotClosedError(GeometryError, ValueError):
    """A loop does not end where it starts."""


class NotParallelError(GeometryError):
    """A tensor required to be parallel failed certification."""


class ExpressionError(GeometryError, ValueError):
    """Parse or binding failure in a function expression."""

    def __init__(self, message: str, position: int | None = None, text: str = ""):
        self.reason = message
        self.position = position
        self.text = text
        where = f" at position {position}" if position is not None else ""
        super().__init__(f"{message}{where}")


class UnknownManifoldError(GeometryError, ValueError):
    """No preset is registered under the requested name."""
