"""Manifold presets selectable by name; each ships its metric and frame symbolically."""

from functools import lru_cache
from math import pi

import sympy

from shared.geometry.charts import Chart, SymMatrix, coordinate_symbols
from shared.geometry.errors import UnknownManifoldError


def _flat() -> Chart:
    x, y = coordinate_symbols(("x", "y"))
    return Chart(
        name="flat", dim=2,
        lower=(-2.0, -2.0), upper=(2.0, 2.0), periodic=(False, False),
        base_point=(0.3, 0.2),
        coords=(x, y), metric_expr=SymMatrix.eye(2), frame_expr=SymMatrix.eye(2),
    )


def _torus() -> Chart:
    x, y = coordinate_symbols(("x", "y"))
    return Chart(
        name="torus", dim=2,
        lower=(0.0, 0.0), upper=(1.0, 1.0), periodic=(True, True),
        base_point=(0.5, 0.5),
        coords=(x, y), metric_expr=SymMatrix.eye(2), frame_expr=SymMatrix.eye(2),
    )


def _sphere() -> Chart:
    theta, phi = coordinate_symbols(("theta", "phi"))
    return Chart(
        name="s2", dim=2,
        lower=(0.0, 0.0), upper=(pi, 2 * pi), periodic=(False, True),
        base_point=(1.0, 0.5),
        coords=(theta, phi),
        metric_expr=SymMatrix([[1, 0], [0, sympy.sin(theta) ** 2]]),
        frame_expr=SymMatrix([[1, 0], [0, 1 / sympy.sin(theta)]]),
    )


def _hyperbolic() -> Chart:
    x, y = coordinate_symbols(("x", "y"))
    return Chart(
        name="hyperbolic", dim=2,
        lower=(-3.0, 0.0), upper=(3.0, 4.0), periodic=(False, False),
        base_point=(0.0, 1.0),
        coords=(x, y),
        metric_expr=SymMatrix([[1 / y ** 2, 0], [0, 1 / y ** 2]]),
        frame_expr=SymMatrix([[y, 0], [0, y]]),
    )


_BUILDERS = {
    "flat": _flat,
    "torus": _torus,
    "s2": _sphere,
    "hyperbolic": _hyperbolic,
}

PRESET_NAMES = tuple(_BUILDERS)


@lru_cache(maxsize=None)
def get_preset(name: str) -> Chart:
    builder = _BUILDERS.get(name)
    if builder is None:
        raise UnknownManifoldError(f"unknown manifold {name!r} (expected one of {', '.join(PRESET_NAMES)})")
    return builder()
