"""
Single-chart Riemannian manifolds.

A Chart carries its metric either symbolically (sympy, in which case
Christoffel symbols, the Gram–Schmidt frame and its connection coefficients
are derived once and lambdified) or as a numeric callback (derivatives of the
metric and of the frame are then taken by 4th-order central differences).

Index conventions, all numpy arrays:
    christoffel(x)[k, i, j] = Gamma^k_{ij}
    frame(x)[:, i]          = coordinate components of E_i
    connection(x)[i, j, b]  = frame component b of nabla_{E_i} E_j
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Sequence

import numpy as np
import sympy

from shared.geometry.errors import DomainError
from shared.runtime.engine_config import get_engine_config

SymMatrix = sympy.ImmutableMatrix


def _numeric(fn: Callable, x: np.ndarray, shape: tuple[int, ...]) -> np.ndarray:
    return np.array(fn(*x), dtype=float).reshape(shape)


def _strip_abs(expr):
    # Gram–Schmidt norms are positive on the chart domain
    return expr.replace(sympy.Abs, lambda a: a)


@dataclass(frozen=True, eq=False)
class Chart:
    """Coordinate box with a metric; hashed by identity."""

    name: str
    dim: int
    lower: tuple[float, ...]
    upper: tuple[float, ...]
    periodic: tuple[bool, ...]
    base_point: tuple[float, ...]
    coords: tuple[sympy.Symbol, ...] | None = None
    metric_expr: SymMatrix | None = None
    frame_expr: SymMatrix | None = None
    metric_fn: Callable[[np.ndarray], np.ndarray] | None = None
    margin: float | None = None

    def __post_init__(self):
        if (self.metric_expr is None) == (self.metric_fn is None):
            raise ValueError("a chart needs exactly one of metric_expr or metric_fn")
        for seq in (self.lower, self.upper, self.periodic, self.base_point):
            if len(seq) != self.dim:
                raise ValueError("box, periodicity and base point must match the dimension")
        if self.metric_expr is not None:
            if self.coords is None or len(self.coords) != self.dim:
                raise ValueError("symbolic charts need one coordinate symbol per dimension")
            if self.metric_expr != self.metric_expr.T:
                raise ValueError("metric must be symmetric")

    # -- domain --------------------------------------------------------------

    @property
    def is_symbolic(self) -> bool:
        return self.metric_expr is not None

    @property
    def effective_margin(self) -> float:
        return self.margin if self.margin is not None else get_engine_config().domain_margin

    def contains(self, x, extent: float = 0.0) -> bool:
        x = np.asarray(x, dtype=float)
        m = self.effective_margin + extent
        for k in range(self.dim):
            if self.periodic[k]:
                continue
            if not self.lower[k] + m <= x[k] <= self.upper[k] - m:
                return False
        return True

    def check_point(self, x, extent: float = 0.0):
        if not self.contains(x, extent):
            raise DomainError(
                f"point {tuple(float(c) for c in np.asarray(x))} outside {self.name} domain "
                f"(margin {self.effective_margin + extent:g})"
            )

    def displacement(self, a, b) -> np.ndarray:
        """b - a with periodic axes wrapped into half a period."""
        d = np.asarray(b, dtype=float) - np.asarray(a, dtype=float)
        for k in range(self.dim):
            if self.periodic[k]:
                period = self.upper[k] - self.lower[k]
                d[k] = (d[k] + period / 2) % period - period / 2
        return d

    def sample_points(self, count: int, seed: int = 0) -> list[np.ndarray]:
        """Deterministic pseudo-random interior points."""
        rng = np.random.default_rng(seed)
        m = self.effective_margin
        lo = np.array(self.lower) + m
        hi = np.array(self.upper) - m
        return [lo + (hi - lo) * rng.random(self.dim) for _ in range(count)]

    # -- symbolic derivations ------------------------------------------------

    @cached_property
    def christoffel_expr(self) -> list | None:
        if not self.is_symbolic:
            return None
        g, x, d = self.metric_expr, self.coords, self.dim
        ginv = g.inv()
        gamma = [[[sympy.Integer(0)] * d for _ in range(d)] for _ in range(d)]
        for k in range(d):
            for i in range(d):
                for j in range(i, d):
                    val = sum(
                        ginv[k, l] * (sympy.diff(g[j, l], x[i]) + sympy.diff(g[i, l], x[j])
                                      - sympy.diff(g[i, j], x[l]))
                        for l in range(d)
                    ) / 2
                    val = sympy.simplify(val)
                    gamma[k][i][j] = gamma[k][j][i] = val
        return gamma

    @cached_property
    def frame_matrix_expr(self) -> SymMatrix | None:
        """Columns are E_i; Gram–Schmidt on coordinate vectors in index order."""
        if not self.is_symbolic:
            return None
        if self.frame_expr is not None:
            return self.frame_expr
        g, d = self.metric_expr, self.dim
        columns = []
        for i in range(d):
            v = sympy.Matrix([1 if a == i else 0 for a in range(d)])
            for e in columns:
                v = v - (v.T * g * e)[0, 0] * e
            norm = sympy.sqrt(sympy.simplify((v.T * g * v)[0, 0]))
            columns.append((v / norm).applyfunc(lambda c: _strip_abs(sympy.simplify(c))))
        return SymMatrix(sympy.Matrix.hstack(*columns))

    @cached_property
    def connection_expr(self) -> list | None:
        if not self.is_symbolic:
            return None
        e, x, d = self.frame_matrix_expr, self.coords, self.dim
        gamma = self.christoffel_expr
        theta = e.inv()
        omega = [[[sympy.Integer(0)] * d for _ in range(d)] for _ in range(d)]
        for i in range(d):
            for j in range(d):
                coord = [
                    sum(e[a, i] * sympy.diff(e[c, j], x[a]) for a in range(d))
                    + sum(gamma[c][a][b] * e[a, i] * e[b, j] for a in range(d) for b in range(d))
                    for c in range(d)
                ]
                for b in range(d):
                    omega[i][j][b] = sympy.simplify(sum(theta[b, c] * coord[c] for c in range(d)))
        return omega

    @cached_property
    def _compiled(self) -> dict[str, Callable]:
        x = self.coords
        return {
            "metric": sympy.lambdify(x, self.metric_expr, "numpy"),
            "christoffel": sympy.lambdify(x, self.christoffel_expr, "numpy"),
            "frame": sympy.lambdify(x, self.frame_matrix_expr, "numpy"),
            "connection": sympy.lambdify(x, self.connection_expr, "numpy"),
        }

    # -- numeric evaluation ---------------------------------------------------

    def _step(self) -> float:
        return get_engine_config().fd_step

    def metric(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        d = self.dim
        if self.is_symbolic:
            return _numeric(self._compiled["metric"], x, (d, d))
        return np.asarray(self.metric_fn(x), dtype=float).reshape(d, d)

    def _metric_jacobian(self, x: np.ndarray) -> np.ndarray:
        """dg[l, i, j] = d_l g_ij by central differences."""
        h = self._step()
        d = self.dim
        out = np.empty((d, d, d))
        for l in range(d):
            e = np.zeros(d)
            e[l] = h
            out[l] = (-self.metric(x + 2 * e) + 8 * self.metric(x + e)
                      - 8 * self.metric(x - e) + self.metric(x - 2 * e)) / (12 * h)
        return out

    def christoffel(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        self.check_point(x)
        d = self.dim
        if self.is_symbolic:
            return _numeric(self._compiled["christoffel"], x, (d, d, d))
        dg = self._metric_jacobian(x)
        ginv = np.linalg.inv(self.metric(x))
        # lowered[l, i, j] = d_i g_jl + d_j g_il - d_l g_ij
        lowered = np.einsum("ijl->lij", dg) + np.einsum("jil->lij", dg) - dg
        return 0.5 * np.einsum("kl,lij->kij", ginv, lowered)

    def frame(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        d = self.dim
        if self.is_symbolic:
            return _numeric(self._compiled["frame"], x, (d, d))
        g = self.metric(x)
        columns: list[np.ndarray] = []
        for i in range(d):
            v = np.eye(d)[i]
            for e in columns:
                v = v - (v @ g @ e) * e
            columns.append(v / np.sqrt(v @ g @ v))
        return np.column_stack(columns)

    def connection(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        d = self.dim
        if self.is_symbolic:
            return _numeric(self._compiled["connection"], x, (d, d, d))
        h = self._step()
        e = self.frame(x)
        de = np.empty((d, d, d))  # de[a, c, j] = d_a E_j^c
        for a in range(d):
            s = np.zeros(d)
            s[a] = h
            de[a] = (-self.frame(x + 2 * s) + 8 * self.frame(x + s)
                     - 8 * self.frame(x - s) + self.frame(x - 2 * s)) / (12 * h)
        gamma = self.christoffel(x)
        coord = np.einsum("ai,acj->ijc", e, de) + np.einsum("cab,ai,bj->ijc", gamma, e, e)
        return np.einsum("bc,ijc->ijb", np.linalg.inv(e), coord)

    def metric_compatibility(self, x) -> np.ndarray:
        """(nabla_c g)_{ab}; vanishes for the Levi-Civita connection."""
        x = np.asarray(x, dtype=float)
        dg = self._metric_jacobian(x)
        g = self.metric(x)
        gamma = self.christoffel(x)
        return dg - np.einsum("dca,db->cab", gamma, g) - np.einsum("dcb,ad->cab", gamma, g)


def coordinate_symbols(names: Sequence[str]) -> tuple[sympy.Symbol, ...]:
    return tuple(sympy.Symbol(n, real=True) for n in names)
