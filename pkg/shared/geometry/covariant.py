"""
Covariant derivatives, iterated covariant derivatives of functions, and the
Laplacian.

nabla^m f is built by the recursion

    nabla^{k+1} f(X, Y_1..Y_k) = X(nabla^k f(Y_1..Y_k))
                                 - sum_s nabla^k f(Y_1..nabla_X Y_s..Y_k)

in the chart's orthonormal frame. When both the chart and the function are
symbolic every step is exact (sympy) and only the final evaluation is
numeric; otherwise X(.) is a 4th-order central difference.
"""

from functools import lru_cache
from typing import Callable, Literal

import numpy as np
import sympy

from shared.geometry.charts import Chart, _strip_abs
from shared.geometry.errors import DepthError
from shared.geometry.functions import SmoothFunction
from shared.runtime.engine_config import get_engine_config

MAX_DEPTH = 4

Method = Literal["auto", "symbolic", "numeric"]


def _use_symbolic(f: SmoothFunction, chart: Chart, method: Method) -> bool:
    if method == "numeric":
        return False
    ok = f.is_symbolic and chart.is_symbolic and tuple(f.coords) == tuple(chart.coords)
    if method == "symbolic" and not ok:
        raise ValueError("symbolic evaluation needs a symbolic function on a symbolic chart")
    return ok


def _check_depth(m: int):
    if m < 0:
        raise ValueError("derivative order must be nonnegative")
    if m > MAX_DEPTH:
        raise DepthError(f"derivative order {m} exceeds the supported depth {MAX_DEPTH}")


# -- symbolic path ------------------------------------------------------------

@lru_cache(maxsize=256)
def nabla_expressions(expr: sympy.Expr, m: int, chart: Chart) -> dict[tuple[int, ...], sympy.Expr]:
    """Frame components of nabla^m f as sympy expressions."""
    if m == 0:
        return {(): expr}
    lower = nabla_expressions(expr, m - 1, chart)
    e, omega, x, d = chart.frame_matrix_expr, chart.connection_expr, chart.coords, chart.dim
    out: dict[tuple[int, ...], sympy.Expr] = {}
    for i in range(d):
        for word, comp in lower.items():
            val = sum(e[a, i] * sympy.diff(comp, x[a]) for a in range(d))
            for s, js in enumerate(word):
                for b in range(d):
                    if omega[i][js][b] != 0:
                        val -= omega[i][js][b] * lower[word[:s] + (b,) + word[s + 1:]]
            out[(i,) + word] = val
    return out


@lru_cache(maxsize=256)
def _compiled_nabla(expr: sympy.Expr, m: int, chart: Chart) -> tuple[list, Callable]:
    comps = nabla_expressions(expr, m, chart)
    words = sorted(comps)
    return words, sympy.lambdify(chart.coords, [comps[w] for w in words], "numpy")


# -- numeric path -------------------------------------------------------------

def _numeric_nabla(f: SmoothFunction, m: int, chart: Chart, x: np.ndarray, h: float) -> np.ndarray:
    d = chart.dim
    if m == 0:
        return np.array(f(x), dtype=complex)
    grad = np.empty((d,) + (d,) * (m - 1), dtype=complex)
    for a in range(d):
        s = np.zeros(d)
        s[a] = h
        grad[a] = (-_numeric_nabla(f, m - 1, chart, x + 2 * s, h)
                   + 8 * _numeric_nabla(f, m - 1, chart, x + s, h)
                   - 8 * _numeric_nabla(f, m - 1, chart, x - s, h)
                   + _numeric_nabla(f, m - 1, chart, x - 2 * s, h)) / (12 * h)
    lower = _numeric_nabla(f, m - 1, chart, x, h)
    e = chart.frame(x)
    omega = chart.connection(x)
    out = np.einsum("ai,a...->i...", e, grad)
    for slot in range(m - 1):
        # correction[i, ..., c at slot, ...] = sum_b omega[i, c, b] lower[..., b at slot, ...]
        moved = np.moveaxis(lower, slot, -1)
        corr = np.einsum("icb,...b->i...c", omega, moved)
        out -= np.moveaxis(corr, -1, slot + 1)
    return out


# -- public operations --------------------------------------------------------

def nabla_m_f(f: SmoothFunction, m: int, chart: Chart, x, method: Method = "auto",
              step: float | None = None) -> np.ndarray:
    """Frame components of nabla^m f at x, shape (d,)*m, complex."""
    _check_depth(m)
    x = np.asarray(x, dtype=float)
    if _use_symbolic(f, chart, method):
        chart.check_point(x)
        words, fn = _compiled_nabla(f.expr, m, chart)
        values = fn(*x)
        out = np.zeros((chart.dim,) * m, dtype=complex)
        for w, v in zip(words, values):
            out[w] = complex(v)
        return out
    h = step if step is not None else get_engine_config().fd_step
    chart.check_point(x, extent=2 * m * h)
    return _numeric_nabla(f, m, chart, x, h)


def covariant_derivative_tensor(field: Callable[[np.ndarray], np.ndarray], vector, chart: Chart, x,
                                basis: Literal["frame", "coordinate"] = "frame",
                                step: float | None = None) -> np.ndarray:
    """nabla_X T at x for a contravariant tensor field T.

    ``field`` maps a point to the components of T (shape (d,)*m) in the
    chosen basis; ``vector`` is X in coordinates, either an array or a
    callable of the point. Order-0 fields give the directional derivative.
    """
    x = np.asarray(x, dtype=float)
    h = step if step is not None else get_engine_config().fd_step
    chart.check_point(x, extent=2 * h)
    d = chart.dim
    xv = np.asarray(vector(x) if callable(vector) else vector, dtype=float)
    t = np.asarray(field(x), dtype=complex)

    out = np.zeros_like(t)
    for a in range(d):
        if xv[a] == 0.0:
            continue
        s = np.zeros(d)
        s[a] = h
        deriv = (-np.asarray(field(x + 2 * s)) + 8 * np.asarray(field(x + s))
                 - 8 * np.asarray(field(x - s)) + np.asarray(field(x - 2 * s))) / (12 * h)
        out = out + xv[a] * deriv

    if basis == "frame":
        xf = np.linalg.solve(chart.frame(x), xv)
        conn = np.einsum("i,ibc->bc", xf, chart.connection(x))
    else:
        conn = np.einsum("a,cab->bc", xv, chart.christoffel(x))
    # conn[b, c]: component c of nabla_X of basis vector b
    for slot in range(t.ndim):
        moved = np.moveaxis(t, slot, -1)
        out = out + np.moveaxis(np.einsum("...b,bc->...c", moved, conn), -1, slot)
    return out


def laplacian(f: SmoothFunction, chart: Chart, x, method: Method = "auto",
              step: float | None = None) -> complex:
    """Trace of nabla^2 f over the orthonormal frame."""
    hess = nabla_m_f(f, 2, chart, x, method=method, step=step)
    return complex(np.trace(hess))


@lru_cache(maxsize=256)
def _coordinate_laplacian_expr(expr: sympy.Expr, chart: Chart) -> sympy.Expr:
    g, xs, d = chart.metric_expr, chart.coords, chart.dim
    ginv = g.inv()
    vol = _strip_abs(sympy.sqrt(g.det()))
    total = sum(
        sympy.diff(vol * sum(ginv[i, j] * sympy.diff(expr, xs[j]) for j in range(d)), xs[i])
        for i in range(d)
    )
    return total / vol


def laplacian_coordinate(f: SmoothFunction, chart: Chart, x, method: Method = "auto",
                         step: float | None = None) -> complex:
    """(1/sqrt|g|) d_i (sqrt|g| g^ij d_j f), independent of the frame machinery."""
    x = np.asarray(x, dtype=float)
    if _use_symbolic(f, chart, method):
        chart.check_point(x)
        expr = _coordinate_laplacian_expr(f.expr, chart)
        return complex(sympy.lambdify(chart.coords, expr, "numpy")(*x))

    h = step if step is not None else get_engine_config().fd_step
    chart.check_point(x, extent=4 * h)
    d = chart.dim

    def flux(p: np.ndarray) -> np.ndarray:
        g = chart.metric(p)
        vol = np.sqrt(abs(np.linalg.det(g)))
        grad = np.array([f.partial(j, p, h) for j in range(d)])
        return vol * (np.linalg.inv(g) @ grad)

    div = 0j
    for i in range(d):
        s = np.zeros(d)
        s[i] = h
        div += (-flux(x + 2 * s)[i] + 8 * flux(x + s)[i]
                - 8 * flux(x - s)[i] + flux(x - 2 * s)[i]) / (12 * h)
    return complex(div / np.sqrt(abs(np.linalg.det(chart.metric(x)))))
