"""
Restriction of invariant words to smaller loop families.

A smaller neighbourhood has fewer loops, hence a smaller holonomy group and
more fixed tensors: a word fixed by a family stays fixed by every subfamily.
"""

from dataclasses import dataclass

from shared.geometry.holonomy import HolonomySample, holonomy_residual
from shared.geometry.tensors import TensorElement
from shared.runtime.engine_config import get_engine_config


@dataclass(frozen=True)
class RestrictionResult:
    invariant_large: bool
    invariant_small: bool
    residual_large: float
    residual_small: float

    @property
    def consistent(self) -> bool:
        return self.invariant_small or not self.invariant_large


def restrict_check(sample_large: HolonomySample, sample_small: HolonomySample,
                   tensor: TensorElement, tol: float | None = None) -> RestrictionResult:
    if sample_large.dim != sample_small.dim:
        raise ValueError("samples act on frames of different dimension")
    tol = tol if tol is not None else get_engine_config().cert_tol
    large = holonomy_residual(tensor, sample_large)
    small = holonomy_residual(tensor, sample_small)
    return RestrictionResult(large <= tol, small <= tol, large, small)
