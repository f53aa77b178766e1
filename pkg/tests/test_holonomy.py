"""
Unit tests for sampled holonomy groups, invariant tensors and parallel
certification.

Run:
    python -m pytest tests/test_holonomy.py -v
"""

import sys
import unittest
from pathlib import Path

import numpy as np

REPO_ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(REPO_ROOT))

from shared.geometry import (  # noqa: E402
    DepthError,
    HolonomySample,
    TensorElement,
    certify_parallel,
    get_preset,
    holonomy_sample,
    invariant_tensors,
)
from shared.geometry.holonomy import holonomy_residual  # noqa: E402


def rotation(angle: float) -> np.ndarray:
    c, s = np.cos(angle), np.sin(angle)
    return np.array([[c, -s], [s, c]])


def in_span(tensor: TensorElement, basis: list[TensorElement], dim: int) -> float:
    """Distance from ``tensor`` to the span of an orthonormal ``basis``."""
    vec = tensor.to_array(dim).reshape(-1)
    vec = vec / np.linalg.norm(vec)
    residual = vec.copy()
    for b in basis:
        bv = b.to_array(dim).reshape(-1)
        residual = residual - np.vdot(bv, vec) * bv
    return float(np.linalg.norm(residual))


class TestInvariantTensors(unittest.TestCase):

    def test_identity_sample_fixes_everything(self):
        sample = HolonomySample((0.0, 0.0), (np.eye(2),))
        for m in range(4):
            with self.subTest(m=m):
                self.assertEqual(len(invariant_tensors(sample, m)), 2 ** m)

    def test_generic_rotations(self):
        sample = HolonomySample((0.0, 0.0), (rotation(0.37), rotation(1.91)))
        self.assertEqual([len(invariant_tensors(sample, m)) for m in range(1, 5)], [0, 2, 0, 6])

    def test_metric_in_order_two(self):
        sample = HolonomySample((0.0, 0.0), (rotation(0.37),))
        basis = invariant_tensors(sample, 2)
        self.assertLess(in_span(TensorElement.metric(2), basis, 2), 1e-6)

    def test_returned_tensors_are_fixed(self):
        sample = HolonomySample((0.0, 0.0), (rotation(0.37), rotation(1.91)))
        for t in invariant_tensors(sample, 4):
            self.assertLess(holonomy_residual(t, sample), 1e-6)

    def test_order_zero_is_the_unit(self):
        sample = HolonomySample((0.0, 0.0), (rotation(0.5),))
        self.assertEqual(invariant_tensors(sample, 0), [TensorElement.unit()])

    def test_order_limits(self):
        sample = HolonomySample((0.0, 0.0), (np.eye(2),))
        with self.assertRaises(DepthError):
            invariant_tensors(sample, 5)
        with self.assertRaises(ValueError):
            invariant_tensors(sample, -1)

    def test_empty_sample_is_rejected(self):
        with self.assertRaises(ValueError):
            HolonomySample((0.0, 0.0), ())


class TestPresetSamples(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.sphere = holonomy_sample(get_preset("s2"))
        cls.torus = holonomy_sample(get_preset("torus"), steps=100)

    def test_sample_is_orthogonal(self):
        self.assertLess(self.sphere.max_orthogonality_defect(), 1e-6)
        self.assertEqual(len(self.sphere.matrices), len(self.sphere.descriptions))

    def test_sphere_dimensions(self):
        dims = [len(invariant_tensors(self.sphere, m)) for m in range(1, 5)]
        self.assertEqual(dims, [0, 2, 0, 6])

    def test_torus_fixes_everything(self):
        self.assertEqual(len(invariant_tensors(self.torus, 2)), 4)

    def test_nested_families_are_monotone(self):
        for m in range(1, 5):
            small = len(invariant_tensors(self.sphere.prefix(1), m))
            large = len(invariant_tensors(self.sphere, m))
            with self.subTest(m=m):
                self.assertGreaterEqual(small, large)

    def test_certify_metric_on_sphere(self):
        cert = certify_parallel(TensorElement.metric(2), get_preset("s2"), self.sphere)
        self.assertTrue(cert.parallel)
        self.assertLess(cert.derivative_residual, 1e-5)

    def test_frame_vector_fails_on_sphere(self):
        cert = certify_parallel(TensorElement.word(0), get_preset("s2"), self.sphere)
        self.assertFalse(cert.parallel)
        self.assertGreater(cert.holonomy_residual, 1e-6)

    def test_frame_vector_passes_on_torus(self):
        cert = certify_parallel(TensorElement.word(0), get_preset("torus"), self.torus)
        self.assertTrue(cert.parallel)


if __name__ == "__main__":
    unittest.main(verbosity=2)
