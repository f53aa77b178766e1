from shared.geometry.errors import (
    DepthError,
    DomainError,
    ExpressionError,
    GeometryError,
    NotClosedError,
    NotParallelError,
    UnknownManifoldError,
)
from shared.geometry.expressions import parse_expression
from shared.geometry.functions import SmoothFunction
from shared.geometry.charts import Chart, coordinate_symbols
from shared.geometry.presets import PRESET_NAMES, get_preset
from shared.geometry.tensors import TensorElement, TensorWord, basis_words
from shared.geometry.covariant import (
    covariant_derivative_tensor,
    laplacian,
    laplacian_coordinate,
    nabla_m_f,
)
from shared.geometry.transport import (
    Curve,
    colatitude_circle,
    coordinate_rectangle,
    holonomy_angle,
    holonomy_loop,
    octant_triangle,
    parallel_transport,
)
from shared.geometry.holonomy import (
    HolonomySample,
    certify_parallel,
    holonomy_sample,
    invariant_tensors,
)
from shared.geometry.psi import check_psi_homomorphism, psi_apply

__all__ = [
    "DepthError", "DomainError", "ExpressionError", "GeometryError", "NotClosedError",
    "NotParallelError", "UnknownManifoldError",
    "parse_expression", "SmoothFunction", "Chart", "coordinate_symbols",
    "PRESET_NAMES", "get_preset",
    "TensorElement", "TensorWord", "basis_words",
    "covariant_derivative_tensor", "laplacian", "laplacian_coordinate", "nabla_m_f",
    "Curve", "colatitude_circle", "coordinate_rectangle", "holonomy_angle", "holonomy_loop",
    "octant_triangle", "parallel_transport",
    "HolonomySample", "certify_parallel", "holonomy_sample", "invariant_tensors",
    "check_psi_homomorphism", "psi_apply",
]
