import unittest
import itertools
from fractions import Fraction
import sys
import os

sys.path.insert(0, os.getcwd())
import pygoldie as pg
from pygoldie import weights as wt


class TestWeights(unittest.TestCase):
    def test_PartialOrder(self):
        self.assertTrue(wt.gt(Fraction(3), Fraction(1)))
        self.assertFalse(wt.gt(Fraction(3, 2), Fraction(1)))
        self.assertFalse(wt.gt(Fraction(1), Fraction(1)))
        self.assertTrue(wt.geq(Fraction(1), Fraction(1)))
        self.assertTrue(wt.comparable(Fraction(-1, 2), Fraction(5, 2)))
        self.assertEqual(wt.coset_rep(Fraction(-1, 3)), Fraction(2, 3))

    def test_Exact(self):
        self.assertEqual(pg.Weight(["1/2", 2]).to_json(), ["1/2", "2"])
        with self.assertRaises(TypeError):
            pg.Weight([0.5, 1])
        self.assertEqual(pg.rho(3).to_json(), ["-1", "-2", "-3"])

    def test_Act(self):
        w, alpha = pg.Permutation([2, 3, 1]), pg.Weight([5, 6, 7])
        beta = pg.act(w, alpha)
        for i in range(1, 4):
            self.assertEqual(beta[w(i) - 1], alpha[i - 1])
        u = pg.Permutation([3, 1, 2])
        self.assertEqual(pg.act(u, pg.act(w, alpha)), pg.act(u.compose(w), alpha))

    def test_AntidominantConjugate(self):
        delta, d = pg.antidominant_conjugate(pg.Weight([3, 1, 2]))
        self.assertEqual(delta, pg.Weight([1, 2, 3]))
        self.assertEqual(d, pg.Permutation([2, 3, 1]))

        # singular weights pick the shortest conjugator
        for coords in itertools.product([1, 2, 3], repeat=4):
            alpha = pg.Weight(coords)
            delta, d = pg.antidominant_conjugate(alpha)
            self.assertTrue(delta.is_antidominant())
            self.assertEqual(pg.act(d, delta), alpha)
            others = [w for w in pg.all_permutations(4) if pg.act(w, delta) == alpha]
            self.assertEqual(d.length(), min(w.length() for w in others))

        with self.assertRaises(pg.DomainError):
            pg.antidominant_conjugate(pg.Weight(["1/2", 1]))

    def test_UpperClosure(self):
        e, s = pg.Permutation([1, 2]), pg.Permutation([2, 1])
        self.assertTrue(wt.upper_closure_contains(e, pg.Weight([1, 1])))
        self.assertFalse(wt.upper_closure_contains(s, pg.Weight([1, 1])))
        for w in pg.all_permutations(3):
            self.assertTrue(wt.upper_closure_contains(w, pg.act(w, pg.Weight([1, 2, 3]))))

    def test_Stabilizer(self):
        self.assertEqual(wt.stabilizer_shape(pg.Weight([1, 1, 2])), pg.ParabolicShape([2, 1]))
        self.assertEqual(wt.stabilizer_shape(pg.Weight([0, 0, 0])), pg.ParabolicShape([3]))

    def test_CosetSplit(self):
        alpha = pg.Weight(["1/2", 2, "3/2", 1])
        split = pg.coset_split(alpha)
        self.assertEqual([p.rep for p in split.parts], [Fraction(0), Fraction(1, 2)])
        self.assertEqual(split.parts[0].positions, (2, 4))
        self.assertEqual(split.parts[0].weight, pg.Weight([2, 1]))
        self.assertEqual(split.parts[1].positions, (1, 3))
        self.assertEqual(split.parts[1].weight, pg.Weight([0, 1]))
        self.assertEqual(split.assemble(), alpha)
        self.assertEqual(len(pg.coset_split(pg.Weight([1, 2, 3])).parts), 1)

    def test_Beta(self):
        pyr = pg.Pyramid([1, 2, 3], [[0, 0, 1], [1, 0, 1], [1, 0, 0]])
        self.assertEqual(pg.beta(pyr), pg.Weight([-4, -4, 1, 1, 1, 5]))
        self.assertEqual(pg.beta(pg.Pyramid([2, 2])), pg.Weight([-2, -2, 2, 2]))


if __name__ == "__main__":
    print(f"pygoldie loaded from {pg.__path__}")
    unittest.main()
