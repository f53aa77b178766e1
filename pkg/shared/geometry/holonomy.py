"""
Sampled holonomy groups, their invariant tensors, and parallel certification.

The holonomy group at the base point is approximated by the transports
around a finite loop family: coordinate rectangles at three scales plus two
geodesic triangles, all starting at the chart's base point.
"""

from dataclasses import dataclass
from functools import reduce

import numpy as np

from shared.geometry.charts import Chart
from shared.geometry.covariant import covariant_derivative_tensor
from shared.geometry.errors import DepthError
from shared.geometry.tensors import TensorElement
from shared.geometry.transport import (
    Loop,
    coordinate_rectangle,
    half_plane_geodesic,
    holonomy_loop,
    orthogonality_defect,
    polygon,
    sphere_triangle,
)
from shared.runtime.engine_config import get_engine_config

DEFAULT_SCALES = (0.1, 0.2, 0.4)


@dataclass(frozen=True)
class HolonomySample:
    base_point: tuple[float, ...]
    matrices: tuple[np.ndarray, ...]
    descriptions: tuple[str, ...] = ()
    chart_name: str = ""

    def __post_init__(self):
        if not self.matrices:
            raise ValueError("a holonomy sample needs at least one matrix")

    @property
    def dim(self) -> int:
        return self.matrices[0].shape[0]

    def prefix(self, count: int) -> "HolonomySample":
        """The first ``count`` loops: a nested subfamily."""
        return HolonomySample(self.base_point, self.matrices[:count], self.descriptions[:count], self.chart_name)

    def max_orthogonality_defect(self) -> float:
        return max(orthogonality_defect(a) for a in self.matrices)


def default_loops(chart: Chart, scales=DEFAULT_SCALES) -> list[tuple[str, Loop]]:
    p = np.asarray(chart.base_point, dtype=float)
    loops = [(f"rectangle@{s:g}", coordinate_rectangle(p, s, s)) for s in scales]
    for s in (scales[1], scales[-1]):
        a, b = p + (s, 0.0), p + (0.0, 1.5 * s)
        if chart.name == "s2":
            loop = sphere_triangle([p, a, b])
        elif chart.name == "hyperbolic":
            loop = polygon([p, a, b], edge=half_plane_geodesic)
        else:
            loop = polygon([p, a, b])
        loops.append((f"triangle@{s:g}", loop))
    return loops


def holonomy_sample(chart: Chart, scales=DEFAULT_SCALES, steps: int | None = None) -> HolonomySample:
    loops = default_loops(chart, scales)
    matrices = tuple(holonomy_loop(chart, loop, steps) for _, loop in loops)
    return HolonomySample(tuple(chart.base_point), matrices, tuple(name for name, _ in loops), chart.name)


def tensor_power(a: np.ndarray, m: int) -> np.ndarray:
    """rho^{(x)m}(A) on row-major flattened order-m tensors."""
    if m == 0:
        return np.eye(1)
    return reduce(np.kron, [a] * m)


def invariant_tensors(sample: HolonomySample, m: int, threshold: float | None = None) -> list[TensorElement]:
    """Orthonormal basis of the order-m tensors fixed by every sampled matrix."""
    if m < 0:
        raise ValueError("order must be nonnegative")
    if m > 4:
        raise DepthError(f"tensor order {m} exceeds the supported depth 4")
    threshold = threshold if threshold is not None else get_engine_config().svd_threshold
    d = sample.dim
    if m == 0:
        return [TensorElement.unit()]
    size = d ** m
    system = np.vstack([tensor_power(a, m) - np.eye(size) for a in sample.matrices])
    _, s, vh = np.linalg.svd(system)
    rank = int(np.sum(s > threshold))
    return [TensorElement.from_array(vh[k].reshape((d,) * m)) for k in range(rank, size)]


def holonomy_residual(tensor: TensorElement, sample: HolonomySample) -> float:
    worst = 0.0
    d = sample.dim
    for order, comp in tensor.homogeneous_components().items():
        if order == 0:
            continue
        vec = comp.to_array(d).reshape(-1)
        for a in sample.matrices:
            worst = max(worst, float(np.max(np.abs(tensor_power(a, order) @ vec - vec))))
    return worst


def derivative_residual(tensor: TensorElement, chart: Chart, points: int = 5, seed: int = 0) -> float:
    """max |nabla_{E_i} T| over random points, T with the given constant frame components."""
    worst = 0.0
    for order, comp in tensor.homogeneous_components().items():
        if order == 0:
            continue
        arr = comp.to_array(chart.dim)
        for x in chart.sample_points(points, seed):
            e = chart.frame(x)
            for i in range(chart.dim):
                nab = covariant_derivative_tensor(lambda _p: arr, e[:, i], chart, x)
                worst = max(worst, float(np.max(np.abs(nab))))
    return worst


@dataclass(frozen=True)
class Certification:
    parallel: bool
    holonomy_residual: float
    derivative_residual: float


def certify_parallel(tensor: TensorElement, chart: Chart, sample: HolonomySample,
                     tol: float | None = None, deriv_tol: float | None = None,
                     points: int = 5) -> Certification:
    """Fixed by every sampled holonomy matrix AND covariantly constant at random points."""
    cfg = get_engine_config()
    tol = tol if tol is not None else cfg.cert_tol
    deriv_tol = deriv_tol if deriv_tol is not None else cfg.cert_deriv_tol
    hol = holonomy_residual(tensor, sample)
    der = derivative_residual(tensor, chart, points) if hol <= tol else float("inf")
    return Certification(hol <= tol and der <= deriv_tol, hol, der)
