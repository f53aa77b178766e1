"""
Curves, loops, parallel transport and holonomy.

Transport solves dv^k/dt + Gamma^k_ij x'^i v^j = 0 with classical RK4. Loops
are tuples of curves traversed in order; a holonomy matrix is expressed in
the orthonormal frame at the loop's starting point.
"""

from dataclasses import dataclass
from math import atan2
from typing import Callable, Sequence

import numpy as np

from shared.geometry.charts import Chart
from shared.geometry.errors import NotClosedError
from shared.runtime.engine_config import get_engine_config

CLOSURE_TOL = 1e-9


@dataclass(frozen=True)
class Curve:
    """t in [0, 1] -> chart point, with an optional analytic velocity."""

    point: Callable[[float], np.ndarray]
    velocity: Callable[[float], np.ndarray] | None = None
    label: str = "curve"

    def position(self, t: float) -> np.ndarray:
        return np.asarray(self.point(t), dtype=float)

    def tangent(self, t: float) -> np.ndarray:
        if self.velocity is not None:
            return np.asarray(self.velocity(t), dtype=float)
        h = 1e-6
        lo, hi = max(t - h, 0.0), min(t + h, 1.0)
        return (self.position(hi) - self.position(lo)) / (hi - lo)


Loop = tuple[Curve, ...]


# -- curve constructors ---------------------------------------------------------

def segment(a: Sequence[float], b: Sequence[float]) -> Curve:
    a, b = np.asarray(a, dtype=float), np.asarray(b, dtype=float)
    return Curve(lambda t: a + t * (b - a), lambda t: b - a, f"segment{tuple(a)}->{tuple(b)}")


def constant(p: Sequence[float]) -> Curve:
    p = np.asarray(p, dtype=float)
    return Curve(lambda t: p, lambda t: np.zeros_like(p), f"constant{tuple(p)}")


def colatitude_circle(theta0: float, phi0: float = 0.0) -> Curve:
    """theta = theta0 on the sphere chart, phi running once around."""
    return Curve(
        lambda t: np.array([theta0, phi0 + 2 * np.pi * t]),
        lambda t: np.array([0.0, 2 * np.pi]),
        f"colatitude({theta0:g})",
    )


def sphere_coordinates(v: np.ndarray) -> np.ndarray:
    v = np.asarray(v, dtype=float) / np.linalg.norm(v)
    return np.array([np.arccos(np.clip(v[2], -1.0, 1.0)), atan2(v[1], v[0]) % (2 * np.pi)])


def sphere_vector(p: Sequence[float]) -> np.ndarray:
    theta, phi = p
    return np.array([np.sin(theta) * np.cos(phi), np.sin(theta) * np.sin(phi), np.cos(theta)])


def great_arc(u: Sequence[float], v: Sequence[float]) -> Curve:
    """Shortest great-circle arc between unit vectors u and v, in (theta, phi)."""
    u = np.asarray(u, dtype=float) / np.linalg.norm(u)
    v = np.asarray(v, dtype=float) / np.linalg.norm(v)
    omega = float(np.arccos(np.clip(u @ v, -1.0, 1.0)))
    if omega < 1e-15:
        return constant(sphere_coordinates(u))
    s = np.sin(omega)

    def emb(t):
        return (np.sin((1 - t) * omega) * u + np.sin(t * omega) * v) / s

    def emb_dot(t):
        return omega * (-np.cos((1 - t) * omega) * u + np.cos(t * omega) * v) / s

    def velocity(t):
        x, y, z = emb(t)
        dx, dy, dz = emb_dot(t)
        return np.array([-dz / np.sqrt(1 - z * z), (x * dy - y * dx) / (x * x + y * y)])

    return Curve(lambda t: sphere_coordinates(emb(t)), velocity, "great-arc")


def half_plane_geodesic(p: Sequence[float], q: Sequence[float]) -> Curve:
    """Geodesic of the upper half-plane from p to q (vertical line or semicircle)."""
    (x1, y1), (x2, y2) = p, q
    if abs(x2 - x1) < 1e-12:
        ratio = y2 / y1
        return Curve(
            lambda t: np.array([x1, y1 * ratio ** t]),
            lambda t: np.array([0.0, y1 * ratio ** t * np.log(ratio)]),
            "vertical-geodesic",
        )
    c = ((x2 * x2 + y2 * y2) - (x1 * x1 + y1 * y1)) / (2 * (x2 - x1))
    r = float(np.hypot(x1 - c, y1))
    a1, a2 = atan2(y1, x1 - c), atan2(y2, x2 - c)
    return Curve(
        lambda t: np.array([c + r * np.cos(a1 + t * (a2 - a1)), r * np.sin(a1 + t * (a2 - a1))]),
        lambda t: (a2 - a1) * np.array([-r * np.sin(a1 + t * (a2 - a1)), r * np.cos(a1 + t * (a2 - a1))]),
        "semicircle-geodesic",
    )


def polygon(vertices: Sequence[Sequence[float]], edge: Callable = segment) -> Loop:
    pts = [np.asarray(v, dtype=float) for v in vertices]
    return tuple(edge(pts[k], pts[(k + 1) % len(pts)]) for k in range(len(pts)))


def coordinate_rectangle(p: Sequence[float], width: float, height: float) -> Loop:
    p = np.asarray(p, dtype=float)
    return polygon([p, p + (width, 0.0), p + (width, height), p + (0.0, height)])


def sphere_triangle(vertices: Sequence[Sequence[float]]) -> Loop:
    """Geodesic triangle through three (theta, phi) points."""
    vecs = [sphere_vector(v) for v in vertices]
    return tuple(great_arc(vecs[k], vecs[(k + 1) % 3]) for k in range(3))


def octant_triangle() -> Loop:
    """Geodesic triangle with three right angles, rotated away from the poles."""
    axes = [np.array([2.0, -1.0, 2.0]) / 3, np.array([2.0, 2.0, -1.0]) / 3, np.array([-1.0, 2.0, 2.0]) / 3]
    return tuple(great_arc(axes[k], axes[(k + 1) % 3]) for k in range(3))


# -- transport ------------------------------------------------------------------

def _rhs(chart: Chart, curve: Curve, t: float, v: np.ndarray) -> np.ndarray:
    gamma = chart.christoffel(curve.position(t))
    return -np.einsum("kij,i,j->k", gamma, curve.tangent(t), v)


def parallel_transport(chart: Chart, curve: Curve | Loop, v0: Sequence[float],
                       steps: int | None = None) -> np.ndarray:
    """Transport coordinate vector v0 from curve(0) to curve(1); N RK4 steps per curve."""
    n = steps if steps is not None else get_engine_config().rk4_steps
    pieces = (curve,) if isinstance(curve, Curve) else tuple(curve)
    v = np.asarray(v0, dtype=float).copy()
    for piece in pieces:
        dt = 1.0 / n
        for k in range(n):
            t = k * dt
            k1 = _rhs(chart, piece, t, v)
            k2 = _rhs(chart, piece, t + dt / 2, v + dt / 2 * k1)
            k3 = _rhs(chart, piece, t + dt / 2, v + dt / 2 * k2)
            k4 = _rhs(chart, piece, t + dt, v + dt * k3)
            v = v + dt / 6 * (k1 + 2 * k2 + 2 * k3 + k4)
    return v


def _check_closed(chart: Chart, loop: Loop):
    for k, piece in enumerate(loop):
        nxt = loop[(k + 1) % len(loop)]
        gap = np.linalg.norm(chart.displacement(piece.position(1.0), nxt.position(0.0)))
        if gap > CLOSURE_TOL * max(1.0, len(loop)):
            raise NotClosedError(f"loop piece {k} ends {gap:.3g} away from the next piece")


def _is_degenerate(chart: Chart, loop: Loop) -> bool:
    start = loop[0].position(0.0)
    return all(
        np.linalg.norm(chart.displacement(start, piece.position(t))) < CLOSURE_TOL
        for piece in loop for t in (0.0, 0.25, 0.5, 0.75, 1.0)
    )


def holonomy_loop(chart: Chart, loop: Curve | Loop, steps: int | None = None) -> np.ndarray:
    """Holonomy matrix of a closed loop in the frame at its starting point."""
    loop = (loop,) if isinstance(loop, Curve) else tuple(loop)
    if not loop:
        raise NotClosedError("empty loop")
    _check_closed(chart, loop)
    if _is_degenerate(chart, loop):
        return np.eye(chart.dim)
    p = loop[0].position(0.0)
    e = chart.frame(p)
    transported = np.column_stack([parallel_transport(chart, loop, e[:, i], steps) for i in range(chart.dim)])
    return np.linalg.solve(e, transported)


def holonomy_angle(a: np.ndarray) -> float:
    """Rotation angle of a 2x2 orthogonal matrix, in (-pi, pi]."""
    return atan2(a[1, 0], a[0, 0])


def orthogonality_defect(a: np.ndarray) -> float:
    return float(np.max(np.abs(a.T @ a - np.eye(a.shape[0]))))


def corner_angles(loop: Loop) -> list[float]:
    """Interior angles of a closed polygonal loop, measured in coordinates.

    Equal to the Riemannian angles only for conformally flat charts.
    """
    out = []
    for k, piece in enumerate(loop):
        a = piece.tangent(0.0)
        b = -loop[k - 1].tangent(1.0)
        c = a @ b / (np.linalg.norm(a) * np.linalg.norm(b))
        out.append(float(np.arccos(np.clip(c, -1.0, 1.0))))
    return out
