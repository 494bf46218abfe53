import unittest
from unittest import mock
from fractions import Fraction
import numpy as np
import sys
import os

sys.path.insert(0, os.getcwd())
import pygoldie as pg
from pygoldie import onedim
from pygoldie import verify


class TestOnedim(unittest.TestCase):
    def setUp(self):
        self.pyr = pg.Pyramid([1, 2, 3], [[0, 0, 1], [1, 0, 1], [1, 0, 0]])
        self.A = pg.Tableau.from_rows(self.pyr, [[2], [6, 1], [5, 0, "1/2"]], bottom_up=False)

    def test_Linear(self):
        sol = pg.stup_solve(pg.StupInput([1], [[5]]))
        np.testing.assert_allclose(sol.rows[0], [5])
        self.assertLessEqual(max(sol.residuals), 1e-9)

    def test_Quadratic(self):
        # e_1 = 3, e_2 = 2
        sol = pg.stup_solve(pg.StupInput([2], [[3, 2]]))
        np.testing.assert_allclose(sol.rows[0], [1, 2], atol=1e-12)

    def test_RandomComplex(self):
        rng = np.random.default_rng(7)
        for _ in range(20):
            values = [list(rng.uniform(-1, 1, size=k) + 1j * rng.uniform(-1, 1, size=k)) for k in (1, 1)]
            sol = pg.stup_solve(pg.StupInput([1, 2], values))
            self.assertLessEqual(max(sol.residuals), 1e-8)
            np.testing.assert_array_equal(sol.rows[1][1:], sol.rows[0])

        result = verify.suite_stup(None, 3, n_cases=20)
        self.assertTrue(result["passed"], result["failures"])

    def test_RepeatedRoots(self):
        # e_r of (2, 2, 2)
        sol = pg.stup_solve(pg.StupInput([3], [[6, 12, 8]]))
        np.testing.assert_allclose(sol.rows[0], [2, 2, 2], atol=1e-12)
        T = pg.connected_tableau_of(sol)
        self.assertEqual(T.rows(), [[1, 1, 1]])

    def test_HighestWeightData(self):
        data = onedim.highest_weight_data(self.A)
        self.assertEqual(data, [[3], [11, 24], [Fraction(29, 2), Fraction(125, 2), 84]])
        inp = pg.theorem_pt_coordinates(self.A)
        self.assertEqual(inp.row_lengths, [1, 2, 3])
        self.assertEqual([len(v) for v in inp.values], [1, 1, 1])
        np.testing.assert_allclose(inp.values[2], [14.5])
        with self.assertRaises(pg.DomainError):
            onedim.highest_weight_data(pg.Tableau.left_justified([[1, 2], [3]]))

    def test_RoundTrip(self):
        sol = pg.stup_solve(pg.theorem_pt_coordinates(self.A))
        np.testing.assert_allclose(sol.rows[2], [3.5, 8, 3], atol=1e-12)
        B = pg.connected_tableau_of(sol)
        self.assertTrue(B.is_column_connected())
        self.assertEqual(B.rows(), self.A.rows())

        rng = np.random.default_rng(5)
        for _ in range(20):
            pyr = verify.random_pyramid(rng, int(rng.integers(1, 4)), 4)
            A = verify.random_connected_tableau(rng, pyr)
            B = pg.connected_tableau_of(pg.stup_solve(pg.theorem_pt_coordinates(A), tol=1e-6))
            self.assertTrue(B.row_equivalent(A), (A, B))
            self.assertTrue(B.is_column_connected())

    def test_SingleRow(self):
        A = pg.Tableau.left_justified([[0, "1/2"]])
        B = pg.connected_tableau_of(pg.stup_solve(pg.theorem_pt_coordinates(A)))
        self.assertTrue(B.row_equivalent(A))
        self.assertEqual(B.pyramid.row_lengths, (2,))

    def test_Emission(self):
        with self.assertRaises(pg.TableauEmissionError):
            pg.connected_tableau_of(pg.stup_solve(pg.StupInput([1], [[1j]])))
        with self.assertRaises(pg.TableauEmissionError):
            pg.connected_tableau_of(pg.stup_solve(pg.StupInput([1], [[np.sqrt(2)]])), max_den=10)
        T = pg.connected_tableau_of(pg.stup_solve(pg.StupInput([1], [[2.5]])))
        self.assertEqual(T.rows(), [[Fraction(3, 2)]])

    def test_Errors(self):
        inp = pg.StupInput([3], [[1, 2, 3]])
        with mock.patch.object(onedim, "_roots", side_effect=lambda coeffs, *a, **kw: np.zeros(len(coeffs) - 1, dtype=complex)):
            with self.assertRaises(pg.NumericFailure) as ctx:
                pg.stup_solve(inp)
        # e_r of the zero row against the values 1, 2, 3
        self.assertAlmostEqual(ctx.exception.residual, 3.0)
        self.assertLessEqual(max(pg.stup_solve(inp).residuals), 1e-9)
        with self.assertRaises(ValueError):
            pg.StupInput([2, 1], [[1, 2], []])
        with self.assertRaises(ValueError):
            pg.StupInput([1, 2], [[1], [1, 2]])

    def test_Json(self):
        inp = pg.theorem_pt_coordinates(self.A)
        again = pg.StupInput.from_json(inp.to_json())
        self.assertEqual(again.row_lengths, inp.row_lengths)
        self.assertEqual(again.shift_matrix, inp.shift_matrix)
        doc = pg.stup_solve(again).to_json()
        self.assertEqual(doc["a"][0], [[3.0, 0.0]])


if __name__ == "__main__":
    print(f"pygoldie loaded from {pg.__path__}")
    unittest.main()
