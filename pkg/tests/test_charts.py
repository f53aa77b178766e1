"""
Unit tests for charts: Christoffel symbols, frames, connection coefficients
and domain handling.

Run:
    python -m pytest tests/test_charts.py -v
"""

import math
import sys
import unittest
from pathlib import Path

import numpy as np

REPO_ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(REPO_ROOT))

from shared.geometry import Chart, DomainError, UnknownManifoldError, get_preset, PRESET_NAMES  # noqa: E402


def numeric_sphere() -> Chart:
    return Chart(
        name="s2-numeric", dim=2,
        lower=(0.0, 0.0), upper=(math.pi, 2 * math.pi), periodic=(False, True),
        base_point=(1.0, 0.5),
        metric_fn=lambda x: np.diag([1.0, math.sin(x[0]) ** 2]),
    )


class TestPresets(unittest.TestCase):

    def test_all_presets_build(self):
        for name in PRESET_NAMES:
            with self.subTest(name=name):
                chart = get_preset(name)
                self.assertEqual(chart.name, name)
                self.assertTrue(chart.contains(chart.base_point))

    def test_unknown_manifold(self):
        with self.assertRaises(UnknownManifoldError) as ctx:
            get_preset("banana")
        self.assertIn("unknown manifold", str(ctx.exception))

    def test_presets_are_cached(self):
        self.assertIs(get_preset("s2"), get_preset("s2"))


class TestChristoffel(unittest.TestCase):

    def test_sphere_symbols(self):
        theta = 1.1
        gamma = get_preset("s2").christoffel((theta, 0.3))
        self.assertAlmostEqual(gamma[0, 1, 1], -math.sin(theta) * math.cos(theta), places=12)
        self.assertAlmostEqual(gamma[1, 0, 1], math.cos(theta) / math.sin(theta), places=12)
        self.assertAlmostEqual(gamma[0, 0, 0], 0.0, places=12)

    def test_flat_vanishes(self):
        for name in ("flat", "torus"):
            with self.subTest(name=name):
                chart = get_preset(name)
                np.testing.assert_array_equal(chart.christoffel(chart.base_point), np.zeros((2, 2, 2)))

    def test_torsion_free(self):
        for name in PRESET_NAMES:
            chart = get_preset(name)
            for x in chart.sample_points(4, seed=1):
                gamma = chart.christoffel(x)
                with self.subTest(name=name, x=tuple(x)):
                    np.testing.assert_allclose(gamma, np.swapaxes(gamma, 1, 2), atol=1e-12)

    def test_metric_compatibility(self):
        for name in PRESET_NAMES:
            chart = get_preset(name)
            for x in chart.sample_points(3, seed=2):
                with self.subTest(name=name, x=tuple(x)):
                    self.assertLess(np.max(np.abs(chart.metric_compatibility(x))), 1e-6)

    def test_numeric_metric_matches_symbolic(self):
        sym, num = get_preset("s2"), numeric_sphere()
        x = (0.9, 1.7)
        self.assertFalse(num.is_symbolic)
        np.testing.assert_allclose(num.christoffel(x), sym.christoffel(x), atol=1e-6)
        np.testing.assert_allclose(num.frame(x), sym.frame(x), atol=1e-12)
        np.testing.assert_allclose(num.connection(x), sym.connection(x), atol=1e-6)


class TestFrame(unittest.TestCase):

    def test_frames_are_orthonormal(self):
        for name in PRESET_NAMES:
            chart = get_preset(name)
            x = chart.base_point
            e = chart.frame(x)
            with self.subTest(name=name):
                np.testing.assert_allclose(e.T @ chart.metric(x) @ e, np.eye(2), atol=1e-12)

    def test_connection_is_skew(self):
        # omega[i, j, b] = g(nabla_{E_i} E_j, E_b) is antisymmetric in (j, b)
        for name in PRESET_NAMES:
            chart = get_preset(name)
            omega = chart.connection(chart.base_point)
            with self.subTest(name=name):
                np.testing.assert_allclose(omega, -np.swapaxes(omega, 1, 2), atol=1e-12)


class TestDomain(unittest.TestCase):

    def test_pole_is_outside_margin(self):
        with self.assertRaises(DomainError):
            get_preset("s2").christoffel((0.0, 1.0))

    def test_domain_error_is_value_error(self):
        with self.assertRaises(ValueError):
            get_preset("hyperbolic").check_point((0.0, 0.05))

    def test_periodic_axes_are_unbounded(self):
        self.assertTrue(get_preset("torus").contains((5.3, -2.0)))

    def test_displacement_wraps(self):
        d = get_preset("s2").displacement((1.0, 0.1), (1.0, 0.1 + 2 * math.pi))
        np.testing.assert_allclose(d, [0.0, 0.0], atol=1e-12)

    def test_sample_points_are_deterministic(self):
        chart = get_preset("hyperbolic")
        a = chart.sample_points(3, seed=7)
        b = chart.sample_points(3, seed=7)
        for p, q in zip(a, b):
            np.testing.assert_array_equal(p, q)
            self.assertTrue(chart.contains(p))


if __name__ == "__main__":
    unittest.main(verbosity=2)
