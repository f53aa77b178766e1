"""
Holonomy battery. Without --manifold every preset is exercised.

For a coordinate rectangle on a constant-curvature chart the holonomy
rotation angle equals |K| times the enclosed area:
    sphere:     area = h (cos t0 - cos(t0 + w))    (w along theta, h along phi)
    half-plane: area = w (1/y0 - 1/(y0 + h))
A geodesic triangle in the half-plane turns by its area, pi minus its angle sum.
"""

import json
from math import cos, pi
from pathlib import Path

import numpy as np

from shared.events import EventBus
from shared.geometry import (
    PRESET_NAMES,
    coordinate_rectangle,
    get_preset,
    holonomy_angle,
    holonomy_loop,
    octant_triangle,
)
from shared.geometry.holonomy import holonomy_sample
from shared.geometry.transport import corner_angles, half_plane_geodesic, polygon
from shared.runtime.case_wrapper import outcome
from shared.runtime.orchestrations import run_cases
from shared.runtime.suite_config import SuiteConfig

MANIFEST = json.loads((Path(__file__).parent / "suite.json").read_text())
NAME = MANIFEST["name"]
IDENTITY_TOL = 1e-9
ISOMETRY_TOL = 1e-8
AREA_TOL = 1e-6
RECTANGLES = ((0.2, 0.3), (0.4, 0.2))


def _enclosed_area(chart_name: str, corner, w: float, h: float) -> float | None:
    # w runs along the first chart axis, h along the second
    if chart_name == "s2":
        t0 = corner[0]
        return h * (cos(t0) - cos(t0 + w))
    if chart_name == "hyperbolic":
        y0 = corner[1]
        return w * (1.0 / y0 - 1.0 / (y0 + h))
    if chart_name in ("flat", "torus"):
        return 0.0
    return None


def build_cases(config: SuiteConfig):
    names = [config.manifold] if config.manifold else list(PRESET_NAMES)
    cases = []

    for name in names:
        chart = get_preset(name)

        def isometry(chart=chart):
            sample = holonomy_sample(chart, steps=config.steps)
            defect = sample.max_orthogonality_defect()
            return outcome(defect < ISOMETRY_TOL, defect, loops=list(sample.descriptions))

        cases.append((f"{name}/isometry", isometry))

        for w, h in RECTANGLES:
            # rectangle sides are taken along the coordinate axes of the chart
            def area(chart=chart, w=w, h=h):
                corner = np.asarray(chart.base_point, dtype=float)
                a = holonomy_loop(chart, coordinate_rectangle(corner, w, h), config.steps)
                angle = abs(holonomy_angle(a))
                expected = _enclosed_area(chart.name, corner, w, h)
                err = abs(angle - expected)
                return outcome(err < AREA_TOL, err, angle=angle, expected=expected)

            cases.append((f"{name}/rectangle-{w:g}x{h:g}", area))

        if name == "torus":
            def identity(chart=chart):
                sample = holonomy_sample(chart, steps=config.steps)
                err = max(float(np.max(np.abs(a - np.eye(chart.dim)))) for a in sample.matrices)
                return outcome(err < IDENTITY_TOL, err)

            cases.append(("torus/identity", identity))

        if name == "s2":
            def octant(chart=chart):
                angle = abs(holonomy_angle(holonomy_loop(chart, octant_triangle(), config.steps)))
                err = abs(angle - pi / 2)
                return outcome(err < config.tol, err, angle=angle)

            cases.append(("s2/octant-triangle", octant))

        if name == "hyperbolic":
            def triangle(chart=chart):
                p = np.asarray(chart.base_point, dtype=float)
                loop = polygon([p, p + (0.4, 0.0), p + (0.0, 0.6)], edge=half_plane_geodesic)
                angle = abs(holonomy_angle(holonomy_loop(chart, loop, config.steps)))
                area = pi - sum(corner_angles(loop))
                err = abs(angle - area)
                return outcome(err < AREA_TOL, err, angle=angle, expected=area)

            cases.append(("hyperbolic/geodesic-triangle", triangle))
    return cases


def run_suite(config: SuiteConfig, event_bus: EventBus | None = None) -> dict:
    return run_cases(NAME, build_cases(config), event_bus)
