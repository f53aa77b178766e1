"""
The Laplacian as a mode: the x^-2 coefficient of Y_W(-sum_i e_i(-1)e_i(-1)1, x)
on 1 (x) (1 (x) f), reduced through psi, is the rough Laplacian of f.
"""

from dataclasses import dataclass

from shared.algebra.fock import metric_inverse_element
from shared.algebra.space import FrameSpace
from shared.geometry.charts import Chart
from shared.geometry.covariant import Method, laplacian
from shared.geometry.functions import SmoothFunction
from shared.geometry.holonomy import HolonomySample
from shared.module_w.actions import check_mode_identity, vertex_operator_W
from shared.module_w.elements import WElement
from shared.module_w.reduction import Reduction, evaluate_W, reduce_bottom_report

LAPLACIAN_POWER = -2


@dataclass(frozen=True)
class LaplacianModeResult:
    lhs: complex
    rhs: complex
    error: float
    mode_identity: bool
    irreducible: int = 0

    def to_dict(self) -> dict:
        return {
            "lhs": [self.lhs.real, self.lhs.imag],
            "rhs": [self.rhs.real, self.rhs.imag],
            "error": self.error,
            "mode_identity": self.mode_identity,
            "irreducible": self.irreducible,
        }


def laplacian_mode_element(f: SmoothFunction, chart: Chart, sample: HolonomySample,
                           method: Method = "auto") -> tuple[Reduction, bool]:
    """Reduced x^-2 coefficient, plus the exact mode-identity verdict on the generator."""
    space = FrameSpace.orthonormal(chart.dim)
    u = metric_inverse_element(1, 1, space).scale(-1)
    w = WElement.generator(f)
    coefficient = vertex_operator_W(u, w, LAPLACIAN_POWER, LAPLACIAN_POWER, space, sample)[LAPLACIAN_POWER]
    identity = check_mode_identity(w, space).passed
    return reduce_bottom_report(coefficient, sample, chart, method), identity


def laplacian_mode_check(f: SmoothFunction, x, chart: Chart, sample: HolonomySample,
                         method: Method = "auto") -> LaplacianModeResult:
    reduction, identity = laplacian_mode_element(f, chart, sample, method)
    lhs = evaluate_W(reduction.element, x, chart)
    rhs = laplacian(f, chart, x, method=method)
    return LaplacianModeResult(lhs, rhs, abs(lhs - rhs), identity, len(reduction.irreducible))
