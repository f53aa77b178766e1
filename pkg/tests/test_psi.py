"""
Unit tests for the representation of tensor words on smooth functions.

Run:
    python -m pytest tests/test_psi.py -v
"""

import math
import sys
import unittest
from pathlib import Path

import numpy as np

REPO_ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(REPO_ROOT))

from shared.geometry import (  # noqa: E402
    DepthError,
    NotParallelError,
    SmoothFunction,
    TensorElement,
    check_psi_homomorphism,
    get_preset,
    holonomy_sample,
    psi_apply,
)


def fn(text: str, chart_name: str) -> SmoothFunction:
    return SmoothFunction.from_expression(text, get_preset(chart_name).coords)


def grid(lo: float, hi: float, n: int = 5) -> list[tuple[float, float]]:
    axis = np.linspace(lo, hi, n)
    return [(a, b) for a in axis for b in axis]


class TestPsiApply(unittest.TestCase):

    def test_unit_word_is_identity(self):
        f = fn("x*y", "flat")
        self.assertIs(psi_apply(TensorElement.unit(), f, get_preset("flat")), f)

    def test_single_word_is_imaginary_derivative(self):
        g = psi_apply(TensorElement.word(0), fn("x^2", "flat"), get_preset("flat"))
        self.assertAlmostEqual(g((0.5, 0.3)), 1j)

    def test_second_order_flat(self):
        g = psi_apply(TensorElement.word(0, 0), fn("x^2", "flat"), get_preset("flat"))
        for p in ((0.1, 0.2), (-1.0, 1.5)):
            self.assertAlmostEqual(g(p), -2 + 0j)

    def test_metric_word_is_minus_laplacian(self):
        theta = 1.1
        g = psi_apply(TensorElement.metric(2), fn("cos(theta)", "s2"), get_preset("s2"))
        self.assertAlmostEqual(g((theta, 0.2)), 2 * math.cos(theta) + 0j, places=10)

    def test_linear_in_the_word(self):
        chart, f = get_preset("flat"), fn("x^2*y", "flat")
        word = TensorElement({(0,): 2.0, (1, 1): -1.0})
        combined = psi_apply(word, f, chart)
        a = psi_apply(TensorElement.word(0), f, chart)
        b = psi_apply(TensorElement.word(1, 1), f, chart)
        p = (0.7, -0.4)
        self.assertAlmostEqual(combined(p), 2 * a(p) - b(p))

    def test_numeric_path_converges(self):
        chart, f = get_preset("s2"), fn("cos(theta)*cos(phi)", "s2")
        word = TensorElement.metric(2)
        p = (1.0, 0.5)
        exact = psi_apply(word, f, chart, method="symbolic")(p)
        coarse = abs(psi_apply(word, f, chart, method="numeric", step=0.02)(p) - exact)
        fine = abs(psi_apply(word, f, chart, method="numeric", step=0.01)(p) - exact)
        self.assertGreaterEqual(coarse, 4 * fine)

    def test_depth_limit(self):
        with self.assertRaises(DepthError):
            psi_apply(TensorElement.word(0, 0, 0, 0, 0), fn("x", "flat"), get_preset("flat"))


class TestPsiHomomorphism(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.torus_sample = holonomy_sample(get_preset("torus"), steps=100)
        cls.sphere_sample = holonomy_sample(get_preset("s2"))

    def test_torus_third_order(self):
        err = check_psi_homomorphism(TensorElement.word(0), TensorElement.word(0, 0),
                                     fn("sin(2*pi*x)", "torus"), get_preset("torus"),
                                     grid(0.1, 0.9), self.torus_sample)
        self.assertLess(err, 1e-5)

    def test_torus_numeric_callback(self):
        f = SmoothFunction.from_callable(lambda p: math.sin(2 * math.pi * p[0]), 2)
        err = check_psi_homomorphism(TensorElement.word(0), TensorElement.word(0, 0), f,
                                     get_preset("torus"), grid(0.2, 0.8, 3), self.torus_sample)
        self.assertLess(err, 1e-5)

    def test_unit_right_factor(self):
        f = fn("cos(theta)", "s2")
        err = check_psi_homomorphism(TensorElement.word(1), TensorElement.unit(), f,
                                     get_preset("s2"), grid(0.5, 2.5, 3), self.sphere_sample)
        self.assertEqual(err, 0.0)

    def test_sphere_metric(self):
        err = check_psi_homomorphism(TensorElement.word(0), TensorElement.metric(2),
                                     fn("cos(theta)", "s2"), get_preset("s2"),
                                     grid(0.5, 2.5), self.sphere_sample)
        self.assertLess(err, 1e-4)

    def test_non_parallel_right_factor_is_refused(self):
        with self.assertRaises(NotParallelError):
            check_psi_homomorphism(TensorElement.word(0), TensorElement.word(0),
                                   fn("cos(theta)", "s2"), get_preset("s2"),
                                   grid(0.5, 2.5, 2), self.sphere_sample)

    def test_combined_order_limit(self):
        with self.assertRaises(DepthError):
            check_psi_homomorphism(TensorElement.word(0, 0, 0), TensorElement.word(0, 0),
                                   fn("sin(2*pi*x)", "torus"), get_preset("torus"),
                                   grid(0.2, 0.8, 2), self.torus_sample)


if __name__ == "__main__":
    unittest.main(verbosity=2)
