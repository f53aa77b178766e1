"""
The representation psi of tensor words on smooth functions:

    (psi(e_{i1} (x) ... (x) e_{im}) f) = (sqrt(-1))^m (nabla^m f)(E_{i1}, ..., E_{im})

extended linearly over TensorElements.
"""

import numpy as np
import sympy

from shared.geometry.charts import Chart
from shared.geometry.covariant import MAX_DEPTH, Method, _use_symbolic, nabla_expressions, nabla_m_f
from shared.geometry.errors import DepthError, NotParallelError
from shared.geometry.functions import SmoothFunction
from shared.geometry.holonomy import HolonomySample, certify_parallel
from shared.geometry.tensors import TensorElement


def _sympy_coeff(c: complex):
    re = sympy.Integer(int(c.real)) if float(c.real).is_integer() else sympy.Float(c.real)
    im = sympy.Integer(int(c.imag)) if float(c.imag).is_integer() else sympy.Float(c.imag)
    return re + sympy.I * im


def psi_apply(word: TensorElement, f: SmoothFunction, chart: Chart, method: Method = "auto",
              step: float | None = None) -> SmoothFunction:
    if word == TensorElement.unit():
        return f
    top = max(word.orders(), default=0)
    if top > MAX_DEPTH:
        raise DepthError(f"tensor order {top} exceeds the supported depth {MAX_DEPTH}")
    label = f"psi({word!r}){f.name}"

    if _use_symbolic(f, chart, method):
        total = sympy.Integer(0)
        for w, c in word:
            comps = nabla_expressions(f.expr, len(w), chart)
            total += _sympy_coeff(c) * sympy.I ** len(w) * comps[w]
        return SmoothFunction.from_sympy(total, chart.coords, name=label)

    terms = list(word)

    def evaluate(x: np.ndarray) -> complex:
        acc = 0j
        for w, c in terms:
            acc += c * (1j ** len(w)) * nabla_m_f(f, len(w), chart, x, method="numeric", step=step)[w]
        return acc

    return SmoothFunction.from_callable(evaluate, chart.dim, name=label)


def check_psi_homomorphism(x_word: TensorElement, y_word: TensorElement, f: SmoothFunction,
                           chart: Chart, grid, sample: HolonomySample, method: Method = "auto",
                           step: float | None = None) -> float:
    """max over grid of |psi(X (x) Y) f - psi(X)(psi(Y) f)|; Y must certify as parallel."""
    cert = certify_parallel(y_word, chart, sample)
    if not cert.parallel:
        raise NotParallelError(
            f"{y_word!r} is not parallel (holonomy residual {cert.holonomy_residual:.3g}, "
            f"derivative residual {cert.derivative_residual:.3g})"
        )
    combined = max(x_word.orders(), default=0) + max(y_word.orders(), default=0)
    if combined > MAX_DEPTH:
        raise DepthError(f"combined order {combined} exceeds the supported depth {MAX_DEPTH}")

    lhs = psi_apply(x_word.tensor(y_word), f, chart, method, step)
    rhs = psi_apply(x_word, psi_apply(y_word, f, chart, method, step), chart, method, step)
    return max(abs(lhs(p) - rhs(p)) for p in grid)
