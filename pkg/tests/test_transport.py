"""
Unit tests for parallel transport and loop holonomy.

Run:
    python -m pytest tests/test_transport.py -v
"""

import math
import sys
import unittest
from pathlib import Path

import numpy as np

REPO_ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(REPO_ROOT))

from shared.geometry import (  # noqa: E402
    NotClosedError,
    colatitude_circle,
    coordinate_rectangle,
    get_preset,
    holonomy_angle,
    holonomy_loop,
    octant_triangle,
    parallel_transport,
)
from shared.geometry.transport import (  # noqa: E402
    constant,
    corner_angles,
    half_plane_geodesic,
    orthogonality_defect,
    polygon,
    segment,
)


def angle_gap(a: float, b: float) -> float:
    """Distance between two angles modulo 2*pi."""
    return abs((a - b + math.pi) % (2 * math.pi) - math.pi)


class TestParallelTransport(unittest.TestCase):

    def test_flat_transport_is_trivial(self):
        v = parallel_transport(get_preset("flat"), segment((-1.0, 0.5), (1.2, -0.3)), (0.6, -0.8), steps=50)
        np.testing.assert_allclose(v, [0.6, -0.8], atol=1e-14)

    def test_transport_preserves_length(self):
        chart = get_preset("s2")
        curve = segment((0.6, 0.2), (1.9, 2.4))
        v0 = np.array([0.3, 1.1])
        v1 = parallel_transport(chart, curve, v0, steps=1000)
        before = v0 @ chart.metric(curve.position(0.0)) @ v0
        after = v1 @ chart.metric(curve.position(1.0)) @ v1
        self.assertLess(abs(after - before), 1e-8)


class TestHolonomyLoop(unittest.TestCase):

    def test_colatitude_circle(self):
        chart = get_preset("s2")
        for theta0 in (0.5, 1.0, 2.0):
            a = holonomy_loop(chart, colatitude_circle(theta0), steps=1000)
            expected = 2 * math.pi * (1 - math.cos(theta0))
            angle = holonomy_angle(a)
            with self.subTest(theta0=theta0):
                self.assertLess(min(angle_gap(angle, expected), angle_gap(angle, -expected)), 1e-6)

    def test_octant_triangle(self):
        a = holonomy_loop(get_preset("s2"), octant_triangle(), steps=1000)
        self.assertLess(abs(abs(holonomy_angle(a)) - math.pi / 2), 1e-3)
        self.assertLess(orthogonality_defect(a), 1e-6)

    def test_torus_loops_are_trivial(self):
        chart = get_preset("torus")
        for w, h in ((0.2, 0.3), (0.9, 0.9)):
            with self.subTest(w=w, h=h):
                a = holonomy_loop(chart, coordinate_rectangle((0.5, 0.5), w, h), steps=200)
                np.testing.assert_allclose(a, np.eye(2), atol=1e-9)

    def test_hyperbolic_rectangle_matches_area(self):
        w, h, y0 = 0.4, 0.2, 1.0
        a = holonomy_loop(get_preset("hyperbolic"), coordinate_rectangle((0.0, y0), w, h), steps=1000)
        area = w * (1 / y0 - 1 / (y0 + h))
        self.assertLess(abs(abs(holonomy_angle(a)) - area), 1e-6)
        self.assertLess(orthogonality_defect(a), 1e-8)

    def test_sphere_rectangle_matches_area(self):
        # width runs along theta, height along phi
        t0, w, h = 1.0, 0.2, 0.3
        a = holonomy_loop(get_preset("s2"), coordinate_rectangle((t0, 0.5), w, h), steps=1000)
        area = h * (math.cos(t0) - math.cos(t0 + w))
        swapped = w * (math.cos(t0) - math.cos(t0 + h))
        self.assertLess(abs(abs(holonomy_angle(a)) - area), 1e-6)
        self.assertGreater(abs(abs(holonomy_angle(a)) - swapped), 1e-4)

    def test_hyperbolic_geodesic_triangle_matches_area(self):
        loop = polygon([(0.0, 1.0), (0.4, 1.0), (0.0, 1.6)], edge=half_plane_geodesic)
        a = holonomy_loop(get_preset("hyperbolic"), loop, steps=1000)
        area = math.pi - sum(corner_angles(loop))
        self.assertGreater(area, 0.0)
        self.assertLess(abs(abs(holonomy_angle(a)) - area), 1e-6)

    def test_corner_angles_of_a_flat_rectangle(self):
        angles = corner_angles(coordinate_rectangle((0.0, 0.0), 0.3, 0.5))
        np.testing.assert_allclose(angles, [math.pi / 2] * 4, atol=1e-12)

    def test_degenerate_loop_is_identity(self):
        a = holonomy_loop(get_preset("s2"), constant((1.0, 1.0)))
        np.testing.assert_array_equal(a, np.eye(2))

    def test_open_curve_is_rejected(self):
        with self.assertRaises(NotClosedError):
            holonomy_loop(get_preset("flat"), segment((0.2, 0.2), (0.5, 0.5)))

    def test_empty_loop_is_rejected(self):
        with self.assertRaises(NotClosedError):
            holonomy_loop(get_preset("flat"), ())


if __name__ == "__main__":
    unittest.main(verbosity=2)
