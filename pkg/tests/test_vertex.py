"""
Unit tests for vertex operators on T(h^-) and the structural checks.

Run:
    python -m pytest tests/test_vertex.py -v
or:
    python tests/test_vertex.py
"""

import sys
import unittest
from fractions import Fraction
from pathlib import Path

from hypothesis import given, settings
from hypothesis import strategies as st

REPO_ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(REPO_ROOT))

from shared.algebra import (  # noqa: E402
    FockElement,
    FrameSpace,
    basis_elements,
    check_creation,
    check_d_derivative,
    check_equivariance,
    check_vacuum,
    check_weak_associativity,
    commutativity_witness,
    mode_coefficient,
    sym_mode_coefficient,
    symmetrize,
    vertex_operator,
)

SPACE2 = FrameSpace.orthonormal(2)
ROTATION = [[Fraction(3, 5), Fraction(-4, 5)], [Fraction(4, 5), Fraction(3, 5)]]
VAC = FockElement.vacuum()
E1 = FockElement.monomial((0, 1))
E2 = FockElement.monomial((1, 1))
BASIS2 = basis_elements(2, 2)


class TestVertexOperator(unittest.TestCase):

    def test_vacuum_is_identity(self):
        v = FockElement.monomial((0, 2), (1, 1))
        series = vertex_operator(VAC, v, -4, 4, SPACE2)
        self.assertEqual(series.nonzero_powers(), [0])
        self.assertEqual(series[0], v)

    def test_creation_on_vacuum(self):
        series = vertex_operator(E1, VAC, -3, 4, SPACE2)
        for n in range(0, 5):
            self.assertEqual(series[n], FockElement.monomial((0, n + 1)))
        for n in range(-3, 0):
            self.assertFalse(series[n])

    def test_double_pole(self):
        self.assertEqual(mode_coefficient(E1, E1, -2, SPACE2), VAC)

    def test_no_negative_powers_on_vacuum(self):
        self.assertFalse(mode_coefficient(E1, VAC, -1, SPACE2))

    def test_first_order_pole_vanishes(self):
        self.assertFalse(mode_coefficient(E1, E1, -1, SPACE2))

    def test_declared_range_enforced(self):
        series = vertex_operator(E1, VAC, 0, 2, SPACE2)
        with self.assertRaises(KeyError):
            series[3]

    def test_empty_window_rejected(self):
        with self.assertRaises(ValueError):
            vertex_operator(E1, VAC, 2, 1, SPACE2)

    @settings(max_examples=60, deadline=None)
    @given(st.sampled_from(BASIS2), st.sampled_from(BASIS2), st.integers(-5, 3))
    def test_grading_and_truncation(self, u, v, p):
        c = mode_coefficient(u, v, p, SPACE2)
        if p < -(u.weight + v.weight):
            self.assertFalse(c)
        elif c:
            self.assertEqual(c.weight, u.weight + v.weight + p)

    @settings(max_examples=30, deadline=None)
    @given(st.sampled_from(BASIS2), st.sampled_from(BASIS2), st.sampled_from(BASIS2), st.integers(-3, 3))
    def test_linear_in_u(self, u1, u2, v, p):
        lhs = mode_coefficient(u1 + u2.scale(3), v, p, SPACE2)
        rhs = mode_coefficient(u1, v, p, SPACE2) + mode_coefficient(u2, v, p, SPACE2).scale(3)
        self.assertEqual(lhs, rhs)


class TestAxiomChecks(unittest.TestCase):

    def test_vacuum_and_creation_on_basis(self):
        for u in basis_elements(2, 3):
            with self.subTest(u=u):
                self.assertTrue(check_vacuum(u, -5, 5, SPACE2).passed)
                self.assertTrue(check_creation(u, -5, SPACE2).passed)

    def test_d_derivative(self):
        for u in basis_elements(2, 2):
            for v in basis_elements(2, 1):
                with self.subTest(u=u, v=v):
                    self.assertTrue(check_d_derivative(u, v, -5, 3, SPACE2).passed)

    def test_report_records_first_mismatch(self):
        report = check_vacuum(E1, 0, 0, SPACE2)
        self.assertTrue(report.passed)
        self.assertEqual(report.compared, 1)
        self.assertIsNone(report.to_dict()["first_mismatch"])

    def test_noncommutativity_witness(self):
        forward, backward = commutativity_witness(E1, E2, SPACE2)
        self.assertEqual(forward, FockElement.monomial((0, 1), (1, 1)))
        self.assertEqual(backward, FockElement.monomial((1, 1), (0, 1)))
        self.assertNotEqual(forward, backward)


class TestEquivariance(unittest.TestCase):

    def test_rotation_intertwines(self):
        report = check_equivariance(ROTATION, E1, E1, -2, 2, SPACE2)
        self.assertTrue(report.passed)
        self.assertEqual(report.compared, 5)

    def test_rotation_on_weight_two(self):
        for u in basis_elements(2, 2):
            for v in basis_elements(2, 1):
                with self.subTest(u=u, v=v):
                    self.assertTrue(check_equivariance(ROTATION, u, v, -4, 2, SPACE2).passed)

    def test_non_isometry_rejected(self):
        with self.assertRaises(ValueError):
            check_equivariance([[2, 0], [0, 1]], E1, E1, -2, 2, SPACE2)


class TestWeakAssociativity(unittest.TestCase):

    def test_double_pole_triple(self):
        report = check_weak_associativity(E1, E1, VAC, 4, SPACE2)
        self.assertTrue(report.passed, report.to_dict())
        self.assertGreater(report.compared, 0)

    def test_vacuum_first_argument(self):
        v = FockElement.monomial((1, 2))
        self.assertTrue(check_weak_associativity(VAC, v, E1, 3, SPACE2).passed)

    def test_mixed_triple(self):
        u = FockElement.monomial((0, 1), (1, 1))
        report = check_weak_associativity(u, E2, E1, 3, SPACE2)
        self.assertTrue(report.passed, report.to_dict())

    def test_inhomogeneous_inputs_split(self):
        u = E1 + FockElement.monomial((1, 2))
        self.assertTrue(check_weak_associativity(u, E1, E2, 2, SPACE2).passed)

    def test_negative_order_rejected(self):
        with self.assertRaises(ValueError):
            check_weak_associativity(E1, E1, VAC, -1, SPACE2)


class TestSymmetrization(unittest.TestCase):

    def test_reordered_words_identified(self):
        a = symmetrize(FockElement.monomial((0, 1), (1, 1)))
        b = symmetrize(FockElement.monomial((1, 1), (0, 1)))
        self.assertEqual(a, b)

    def test_vacuum_maps_to_vacuum(self):
        self.assertEqual(symmetrize(VAC), symmetrize(FockElement.vacuum()))
        self.assertTrue(symmetrize(VAC))

    def test_double_pole_both_sides(self):
        lhs = symmetrize(mode_coefficient(E1, E1, -2, SPACE2))
        rhs = sym_mode_coefficient(symmetrize(E1), symmetrize(E1), -2, SPACE2)
        self.assertEqual(lhs, rhs)
        self.assertEqual(lhs, symmetrize(VAC))

    def test_intertwines_on_low_weight(self):
        for u in basis_elements(2, 2):
            for v in basis_elements(2, 1):
                for p in range(-3, 2):
                    with self.subTest(u=u, v=v, p=p):
                        lhs = symmetrize(mode_coefficient(u, v, p, SPACE2))
                        rhs = sym_mode_coefficient(symmetrize(u), symmetrize(v), p, SPACE2)
                        self.assertEqual(lhs, rhs)


if __name__ == "__main__":
    unittest.main(verbosity=2)
