import unittest
import itertools
from fractions import Fraction
import numpy as np
import sys
import os

sys.path.insert(0, os.getcwd())
import pygoldie as pg
from pygoldie import verify


def brute_force(A, predicate):
    rows = A.rows()
    for perms in itertools.product(*(itertools.permutations(r) for r in rows)):
        B = A.with_rows([list(p) for p in perms])
        if B.check(predicate):
            return True
    return False


class TestTableaux(unittest.TestCase):
    def setUp(self):
        self.pyr = pg.Pyramid([1, 2, 3], [[0, 0, 1], [1, 0, 1], [1, 0, 0]])

    def test_Partition(self):
        lam = pg.Partition([3, 1])
        self.assertEqual(lam.transpose(), pg.Partition([2, 1, 1]))
        self.assertEqual(len(list(pg.partitions(5))), 7)
        self.assertEqual([p.parts for p in pg.partitions(3)], [(3,), (2, 1), (1, 1, 1)])
        with self.assertRaises(ValueError):
            pg.Partition([1, 2])

    def test_Pyramid(self):
        pyr = self.pyr
        self.assertEqual(pyr.col_heights, (2, 3, 1))
        self.assertEqual(pyr.row_range, ((2, 2), (1, 2), (1, 3)))
        self.assertEqual(pyr.partition, pg.Partition([3, 2, 1]))
        self.assertFalse(pyr.is_left_justified())
        self.assertEqual(pyr.col_boxes(2), [3, 4, 5])
        self.assertEqual(pyr.box_at(3, 3), 6)
        self.assertIsNone(pyr.box_at(1, 1))

        lj = pg.Pyramid.left_justified([3, 1])
        self.assertEqual(lj.col_heights, (2, 1, 1))
        self.assertTrue(lj.is_left_justified())

        with self.assertRaises(ValueError):
            pg.Pyramid([2, 1])
        with self.assertRaises(ValueError):
            pg.Pyramid([1, 3], [[0, 2], [1, 0]])

    def test_FromColumnHeights(self):
        self.assertEqual(pg.Pyramid.from_column_heights((2, 3, 1)), self.pyr)
        with self.assertRaises(ValueError):
            pg.Pyramid.from_column_heights((2, 1, 2))

    def test_Transpose(self):
        tr = self.pyr.transpose()
        self.assertEqual(tr.col_heights, (1, 3, 2))
        self.assertEqual(tr.shift_matrix.to_json(), [[0, 1, 1], [0, 0, 0], [1, 1, 0]])
        self.assertEqual(self.pyr.transpose_box_map(), {1: 5, 2: 6, 3: 2, 4: 3, 5: 4, 6: 1})
        self.assertEqual(tr.transpose(), self.pyr)

        A = pg.Tableau.from_rows(self.pyr, [[2, 1, 4], [3, 3], [4]])
        At = A.transpose_pyramid()
        self.assertEqual(At.rows(), [[4], [3, 3], [4, 1, 2]])

    def test_Gamma(self):
        A = pg.Tableau.from_rows(self.pyr, [[2, 1, 4], [3, 3], [4]])
        self.assertEqual(A.gamma(), pg.Weight([3, 2, 4, 3, 1, 4]))
        self.assertEqual(A.column(2), [1, 3, 4])
        self.assertTrue(A.is_column_strict())
        self.assertFalse(A.is_column_connected())

    def test_Predicates(self):
        A = pg.Tableau.left_justified([[5, 7], [6]])
        self.assertTrue(A.is_column_connected())
        self.assertTrue(A.is_column_strict())

        Q = pg.Tableau.left_justified([[1, 3], [2]])
        self.assertTrue(Q.is_standard())
        self.assertTrue(Q.is_column_separated())
        Q = pg.Tableau.left_justified([[1, 2], [3]])
        self.assertFalse(Q.is_column_separated())
        self.assertEqual(Q.find_row_equivalent("column_separated"), pg.Tableau.left_justified([[2, 1], [3]]))

        with self.assertRaises(ValueError):
            Q.check("row_connected")

    def test_RowStandardize(self):
        A = pg.Tableau.left_justified([["3/2", 1, "1/2"]])
        self.assertEqual(A.row_standardize().rows(), [[Fraction(1, 2), 1, Fraction(3, 2)]])
        B = pg.Tableau.left_justified([[3, "1/2", 1, "-1/2"]])
        self.assertEqual(B.row_standardize().rows(), [[1, Fraction(-1, 2), 3, Fraction(1, 2)]])
        self.assertTrue(B.row_standardize().is_row_standard())

        # any order of transposing out-of-order pairs reaches the same row
        rng = np.random.default_rng(13)
        values = [Fraction(k, 2) for k in range(-3, 4)]
        for _ in range(30):
            row = [values[int(k)] for k in rng.integers(len(values), size=5)]
            expected = pg.Tableau.left_justified([row]).row_standardize().rows()[0]
            while True:
                bad = [(i, j) for i, j in itertools.combinations(range(5), 2) if pg.weights.gt(row[i], row[j])]
                if not bad:
                    break
                i, j = bad[int(rng.integers(len(bad)))]
                row[i], row[j] = row[j], row[i]
            self.assertEqual(row, expected)

    def test_CanonicalRowForm(self):
        A = pg.Tableau.from_rows(self.pyr, [[2], [6, 1], [5, 0, "1/2"]], bottom_up=False)
        B = pg.Tableau.from_rows(self.pyr, [[2], [1, 6], ["1/2", 5, 0]], bottom_up=False)
        C = pg.Tableau.from_rows(self.pyr, [[2], [6, 1], [5, 1, "1/2"]], bottom_up=False)
        self.assertTrue(A.row_equivalent(B))
        self.assertEqual(A.canonical_row_form(), B.canonical_row_form())
        self.assertFalse(A.row_equivalent(C))
        self.assertNotEqual(A.canonical_row_form(), C.canonical_row_form())
        self.assertTrue(A.canonical_row_form().row_equivalent(A))

    def test_LeftJustify(self):
        A = pg.Tableau.from_rows(self.pyr, [[2], [6, 1], [5, 0, "1/2"]], bottom_up=False)
        L = A.left_justify()
        self.assertTrue(L.pyramid.is_left_justified())
        self.assertEqual(L.pyramid.partition, A.pyramid.partition)
        for a, b in zip(A.rows(), L.rows()):
            self.assertEqual(sorted(a), sorted(b))
        T = pg.Tableau.left_justified([[1, 2, 4], [3, 5]])
        self.assertEqual(T.left_justify(), T)

    def test_RowEquivalentSearch(self):
        rng = np.random.default_rng(7)
        for _ in range(40):
            pyr = verify.random_pyramid(rng, int(rng.integers(1, 4)), 3)
            entries = [Fraction(int(v), 2) for v in rng.integers(0, 6, size=pyr.n_boxes)]
            A = pg.Tableau(pyr, entries)
            for predicate in pg.Tableau.PREDICATES:
                found = A.find_row_equivalent(predicate)
                self.assertEqual(found is not None, brute_force(A, predicate))
                if found is not None:
                    self.assertTrue(found.check(predicate))
                    self.assertTrue(found.row_equivalent(A))

    def test_SemiStandard(self):
        self.assertTrue(pg.Tableau.left_justified([[1, 2], [3]]).is_semi_standard())
        self.assertFalse(pg.Tableau.left_justified([[2, 1], [3]]).is_semi_standard())

        A = pg.Tableau.from_rows(self.pyr, [[2, 1, 4], [3, 3], [4]])
        self.assertTrue(A.is_semi_standard())
        Q = pg.q_of_weight(A.gamma())
        self.assertEqual(Q.rows_bottom_up(), [[1, 3, 4], [2, 4], [3]])
        B = A.rect_map()
        self.assertTrue(B.is_column_strict())
        self.assertTrue(B.row_equivalent(pg.q_pi(A.gamma(), self.pyr)))

        read = A.rho_read()
        self.assertEqual(read, pg.Weight([4, 3, 3, 1, 2, 4]))
        self.assertTrue(A.row_equivalent(pg.q_pi(read, self.pyr)))

        with self.assertRaises(pg.DomainError):
            pg.Tableau.left_justified([[2, 1], [3]]).rect_map()

    def test_Parallel(self):
        A = pg.Tableau.left_justified([["1/2", 1]])
        self.assertTrue(A.is_parallel(pg.Tableau.left_justified([[1, "1/2"]])))
        self.assertFalse(pg.Tableau.left_justified([[1, 2]]).is_parallel(pg.Tableau.left_justified([[2, 1]])))

    def test_DimredSplit(self):
        A = pg.Tableau.left_justified([["1/2", 1], ["3/2"]])
        parts = A.dimred_split()
        self.assertEqual(len(parts), 2)
        self.assertEqual(parts[0].entries, (Fraction(1),))
        self.assertEqual(parts[1].pyramid.col_heights, (2,))
        self.assertEqual(parts[1].column(1), [Fraction(1, 2), Fraction(3, 2)])

    def test_Json(self):
        A = pg.Tableau.from_rows(self.pyr, [[2, 1, 4], [3, 3], ["4/3"]])
        self.assertEqual(pg.Tableau.from_json(A.to_json()), A)
        B = pg.Tableau.left_justified([[1, 3], [2]])
        self.assertEqual(B.to_json(), {"partition": [2, 1], "rows_bottom_up": [["1", "3"], ["2"]]})
        self.assertEqual(pg.Tableau.from_json(B.to_json()), B)


if __name__ == "__main__":
    print(f"pygoldie loaded from {pg.__path__}")
    unittest.main()
