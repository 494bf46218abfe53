import unittest
import math
from fractions import Fraction
import sys
import os

sys.path.insert(0, os.getcwd())
import pygoldie as pg
from pygoldie import rs
from pygoldie import verify


class TestRs(unittest.TestCase):
    def test_Insert(self):
        pair = pg.rs_pair(pg.Permutation([3, 1, 2]))
        self.assertEqual(pair.P, pg.Tableau.left_justified([[1, 2], [3]]))
        self.assertEqual(pair.Q, pg.Tableau.left_justified([[1, 3], [2]]))
        self.assertEqual(pair.shape, pg.Partition([2, 1]))

        T = pg.schensted_insert(None, 2)
        T = pg.schensted_insert(T, 1)
        self.assertEqual(T.rows_bottom_up(), [[1], [2]])

    def test_PartialOrderBumping(self):
        Q = pg.q_of_weight(pg.Weight(["1/2", 1, "3/2"]))
        self.assertEqual(Q.pyramid.partition, pg.Partition([3]))
        Q = pg.q_of_weight(pg.Weight([3, 1, 2]))
        self.assertEqual(Q.rows_bottom_up(), [[1, 2], [3]])
        Q = pg.q_of_weight(pg.Weight([1, 1, 1]))
        self.assertEqual(Q.rows_bottom_up(), [[1, 1, 1]])

    def test_Bijection(self):
        for n in range(1, 6):
            perms = pg.all_permutations(n)
            pairs = {(pg.rs_pair(w).P, pg.rs_pair(w).Q) for w in perms}
            self.assertEqual(len(pairs), math.factorial(n))
            f2 = sum(len(pg.standard_tableaux(lam)) ** 2 for lam in pg.partitions(n))
            self.assertEqual(f2, math.factorial(n))
        for w in pg.all_permutations(4):
            pair = pg.rs_pair(w)
            self.assertEqual(pg.inverse_rs(pair.P, pair.Q), w)

    def test_Recording(self):
        for w in pg.all_permutations(4):
            Q = pg.rs_pair(w).Q
            self.assertEqual(Q, pg.rs_pair(w.inverse()).P)
            self.assertEqual(pg.q_of_weight(rs.negated_rho_action(w)), Q)

    def test_Cells(self):
        self.assertEqual(len(pg.left_cells(3)), 4)
        self.assertEqual(len(pg.left_cells(4)), 10)
        for cell in pg.left_cells(4):
            self.assertTrue(rs.is_minimal_in_cell(cell.minimal))
            self.assertIn(cell.minimal, cell.members)
            self.assertEqual(sum(rs.is_minimal_in_cell(w) for w in cell.members), 1)
            for w in cell.members:
                self.assertEqual(pg.minimal_cell_rep(w), cell.minimal)

        self.assertEqual(pg.minimal_cell_rep(pg.Permutation([3, 1, 2])), pg.Permutation([2, 1, 3]))
        self.assertEqual(
            rs.column_superstandard(pg.Partition([2, 1])), pg.Tableau.left_justified([[1, 3], [2]])
        )
        self.assertTrue(rs.is_minimal_in_cell(pg.Permutation([1, 2, 3])))
        self.assertTrue(rs.is_minimal_in_cell(pg.longest_element(3)))
        self.assertEqual(
            pg.cell_rep_of_tableau(pg.Tableau.left_justified([[1, 3], [2], [4]])), pg.Permutation([3, 2, 4, 1])
        )

    def test_SameLeftCell(self):
        w = pg.Permutation([3, 1, 2])
        self.assertTrue(pg.same_left_cell(w, w))
        self.assertFalse(pg.same_left_cell(pg.Permutation([1, 2]), pg.longest_element(2)))
        self.assertFalse(pg.same_left_cell(pg.Permutation([2, 1, 3]), pg.Permutation([2, 3, 1])))
        self.assertTrue(pg.same_left_cell(pg.Permutation([2, 1, 3]), w))
        for v in pg.all_permutations(4):
            self.assertTrue(pg.same_left_cell(v, pg.minimal_cell_rep(v)))
        with self.assertRaises(pg.SizeError):
            pg.same_left_cell(w, pg.Permutation([2, 1]))

    def test_RecordingTableau(self):
        self.assertEqual(pg.recording_tableau(pg.Permutation([3, 1, 2])), pg.Tableau.left_justified([[1, 3], [2]]))
        for w in pg.all_permutations(3):
            self.assertEqual(pg.recording_tableau(w), pg.rs_pair(w).Q)

    def test_StandardTableaux(self):
        tabs = pg.standard_tableaux(pg.Partition([3, 2]))
        self.assertEqual(len(tabs), 5)
        self.assertTrue(all(T.is_standard() for T in tabs))
        with self.assertRaises(pg.SizeError):
            pg.standard_tableaux(pg.Partition([11]))

    def test_InverseRsErrors(self):
        P = pg.Tableau.left_justified([[1, 2], [3]])
        with self.assertRaises(pg.DomainError):
            pg.inverse_rs(P, pg.Tableau.left_justified([[1, 2, 3]]))

    def test_VerifySuite(self):
        result = verify.suite_rs(None, 3)
        self.assertTrue(result["passed"], result["failures"])
        self.assertGreater(result["checked"], 6)


if __name__ == "__main__":
    print(f"pygoldie loaded from {pg.__path__}")
    unittest.main()
