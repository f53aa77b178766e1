"""Exceptions raised by the induced module."""


class ModuleError(Exception):
    """Base class for failures in the induced module."""


class InvarianceError(ModuleError):
    """An algebra element is not fixed by the sampled holonomy."""


class UnreducedElementError(ModuleError, ValueError):
    """Evaluation was asked for a term that still carries Fock or bottom-word data."""
