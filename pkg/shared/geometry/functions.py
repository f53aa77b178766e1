"""
Smooth complex functions on a chart.

A SmoothFunction is either symbolic (a sympy expression in the chart
coordinates, evaluated through a cached lambdify) or a native callback.
Symbolic functions are differentiated exactly; callbacks by 4th-order
central differences.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Sequence

import numpy as np
import sympy

from shared.geometry.expressions import parse_expression


@lru_cache(maxsize=1024)
def _compiled(expr: sympy.Expr, coords: tuple[sympy.Symbol, ...]) -> Callable:
    return sympy.lambdify(coords, expr, modules="numpy")


def central_difference(g: Callable[[np.ndarray], complex], x: np.ndarray, axis: int,
                       h: float) -> complex:
    """4th-order central first derivative of ``g`` along ``axis``."""
    e = np.zeros_like(x)
    e[axis] = h
    return (-g(x + 2 * e) + 8 * g(x + e) - 8 * g(x - e) + g(x - 2 * e)) / (12 * h)


@dataclass(frozen=True)
class SmoothFunction:
    name: str
    dim: int
    expr: sympy.Expr | None = None
    coords: tuple[sympy.Symbol, ...] | None = None
    callback: Callable[[np.ndarray], complex] | None = None

    def __post_init__(self):
        if (self.expr is None) == (self.callback is None):
            raise ValueError("exactly one of expr or callback must be given")
        if self.expr is not None and (self.coords is None or len(self.coords) != self.dim):
            raise ValueError("symbolic functions need one coordinate symbol per dimension")

    @classmethod
    def from_expression(cls, text: str, coords: Sequence[sympy.Symbol]) -> "SmoothFunction":
        coords = tuple(coords)
        expr = parse_expression(text, {str(c): c for c in coords})
        return cls(name=text, dim=len(coords), expr=expr, coords=coords)

    @classmethod
    def from_sympy(cls, expr, coords: Sequence[sympy.Symbol], name: str | None = None) -> "SmoothFunction":
        coords = tuple(coords)
        expr = sympy.sympify(expr)
        return cls(name=name or str(expr), dim=len(coords), expr=expr, coords=coords)

    @classmethod
    def from_callable(cls, fn: Callable[[np.ndarray], complex], dim: int,
                      name: str = "callback") -> "SmoothFunction":
        return cls(name=name, dim=dim, callback=fn)

    @property
    def is_symbolic(self) -> bool:
        return self.expr is not None

    def __call__(self, x) -> complex:
        x = np.asarray(x, dtype=float)
        if self.expr is not None:
            return complex(_compiled(self.expr, self.coords)(*x))
        return complex(self.callback(x))

    def partial(self, axis: int, x, h: float) -> complex:
        """First partial derivative along a coordinate axis at ``x``."""
        if self.expr is not None:
            d = sympy.diff(self.expr, self.coords[axis])
            return complex(_compiled(d, self.coords)(*np.asarray(x, dtype=float)))
        return central_difference(self, np.asarray(x, dtype=float), axis, h)

    def __repr__(self):
        return f"SmoothFunction({self.name!r})"
