"""Exceptions raised by the mode algebra."""


class AlgebraError(Exception):
    """Base class for errors in the exact mode algebra."""


class SingularMatrixError(AlgebraError, ValueError):
    """A matrix that must be invertible is singular."""
