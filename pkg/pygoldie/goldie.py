"""
Goldie rank polynomials and Goldie ranks of primitive quotients of U(gl_N).
"""

import collections
import dataclasses
import functools
from fractions import Fraction

from . import rs
from . import symgroup as sg
from . import weights as wt
from . import polynomials as poly
from .kl import KLStore, tableau_inv_mult
from .tableaux import Partition, Tableau, canonical_key
from .errors import DomainError, ConsistencyError


def enumerate_column_strict(pyramid, content):
    """
    All column-strict tableaux on a pyramid with the given content.

    Columns are filled left to right, each from the bottom up, trying values
    in canonical order, so the output order is deterministic.

    Args:
        pyramid: Pyramid
        content: multiset of rationals with pyramid.n_boxes elements

    Returns:
        list of Tableau
    """
    content = [wt.to_fraction(x) for x in content]
    if len(content) != pyramid.n_boxes:
        raise DomainError(f"{len(content)} entries for a pyramid with {pyramid.n_boxes} boxes")
    order = [k for c in range(1, pyramid.level + 1) for k in reversed(pyramid.col_boxes(c))]
    pool = collections.Counter(content)
    filled = [None] * pyramid.n_boxes
    out = []

    def search(pos):
        if pos == len(order):
            out.append(Tableau(pyramid, filled))
            return
        k = order[pos]
        i, c = pyramid.box_row(k), pyramid.box_col(k)
        below = pyramid.box_at(i + 1, c)
        for x in sorted((v for v, m in pool.items() if m > 0), key=canonical_key):
            if below is not None and not wt.gt(x, filled[below - 1]):
                continue
            pool[x] -= 1
            filled[k - 1] = x
            search(pos + 1)
            pool[x] += 1
            filled[k - 1] = None

    search(0)
    return out


def goldie_poly_product(A):
    """
    Product formula prod (x_i - x_j)/d(i,j) over entries i above j in the same
    column, d(i,j) the number of rows between them.

    Args:
        A: column-separated tableau with entries 1..N

    Returns:
        MultiPoly
    """
    n = A.n
    if sorted(A.entries) != list(range(1, n + 1)):
        raise DomainError(f"Entries must be 1..{n}: {A}")
    if not A.is_column_separated():
        raise DomainError(f"Tableau is not column-separated: {A}")
    p = poly.MultiPoly.constant(n, 1)
    for col in A.columns():
        for lo, j in enumerate(col):
            for hi in range(lo + 1, len(col)):
                i = int(col[hi])
                factor = poly.MultiPoly.variable(n, i) - poly.MultiPoly.variable(n, int(j))
                p = p * factor.scale(Fraction(1, hi - lo))
    return p


def standard_module_dim(A):
    """
    dim V(A) = h_pi(gamma(A)).
    """
    return poly.h_pi(A.pyramid).evaluate(A.gamma())


def is_finite_dimensional_type(A):
    return A.find_row_equivalent("column_strict") is not None


def is_one_dimensional_type(A):
    return A.find_row_equivalent("column_connected") is not None


@dataclasses.dataclass
class CosetFactor:
    rep: Fraction
    positions: tuple
    weight: wt.Weight
    q: Tableau
    shape: Partition
    w: sg.Permutation
    polynomial: poly.MultiPoly
    delta: wt.Weight
    rank: int

    def to_json(self):
        return {
            "rep": str(self.rep),
            "positions": list(self.positions),
            "weight": self.weight.to_json(),
            "Q": self.q.to_json(),
            "shape": self.shape.to_json(),
            "w": self.w.to_json(),
            "poly": self.polynomial.render(),
            "delta": self.delta.to_json(),
            "rank": self.rank,
        }


@dataclasses.dataclass
class GoldieReport:
    alpha: wt.Weight
    factors: list
    total: int
    completely_prime: bool
    induced: dict = None

    def to_json(self):
        return {
            "alpha": self.alpha.to_json(),
            "factors": [f.to_json() for f in self.factors],
            "total": self.total,
            "completely_prime": self.completely_prime,
            "induced": self.induced,
        }


class Goldie:
    """
    Goldie rank polynomials p_w of U(gl_N) computed from Kazhdan-Lusztig data:

        p_w = sum over z in D^lambda of (L(w):M(z)) z^{-1}(h_lambda)

    for w minimal in its left cell, lambda the shape of Q(w), and D^lambda the
    maximal length W^lambda \\ W coset representatives.

    Examples:
        >>> import pygoldie as pg
        >>> m = pg.Goldie()
        >>> m.goldie_poly_bform(pg.Permutation([2, 1])).render()
        'x2 - x1'
        >>> m.goldie_rank(pg.Weight([3, 1])).total
        2
    """

    strict = False
    cache_size = 4096

    def __init__(self, store=None, strict=False, cache_dir=None, n_guard=None, n_workers=1, cache_size=None):
        """
        Args:
            store: KLStore providing the KL tables. Built from the other arguments if None.
            strict: if True, non-minimal permutations are rejected instead of
                replaced by the minimal member of their left cell
            cache_dir: directory of the KL cache files
            n_guard: largest N for which KL tables are built
            n_workers: worker threads for building KL tables
            cache_size: number of polynomials kept per cache
        """
        self.store = store if store is not None else KLStore(cache_dir, n_guard, n_workers)
        self.strict = strict
        if cache_size is not None:
            self.cache_size = cache_size
        # keyed by image tuples so cached entries hold no Permutation
        self._bform = functools.lru_cache(maxsize=self.cache_size)(self._bform_of_images)
        self._pi = functools.lru_cache(maxsize=self.cache_size)(self._pi_of_images)

    def params_kw(self):
        params = {"strict": self.strict, "cache_size": self.cache_size}
        params.update(self.store.params_kw())
        return params

    def kl_table(self, n):
        return self.store.table(n)

    def _minimal(self, w):
        if rs.is_minimal_in_cell(w):
            return w
        rep = rs.minimal_cell_rep(w)
        if self.strict:
            raise DomainError(f"{w} is not minimal in its left cell; the minimal representative is {rep}")
        return rep

    def _coset_sum(self, w, h, shape):
        table = self.kl_table(w.n)
        p = poly.MultiPoly(w.n)
        for z in sg.max_coset_reps(shape):
            c = table.inv_mult(w, z)
            if c:
                p = p + h.act(z.inverse()).scale(c)
        return p

    def goldie_poly_bform(self, w):
        """
        Goldie rank polynomial of the left cell of w.

        Args:
            w: Permutation (replaced by its minimal cell representative unless strict)

        Returns:
            MultiPoly
        """
        return self._bform(self._minimal(w).images)

    def _bform_of_images(self, images):
        w = sg.Permutation(images)
        shape = rs.rs_pair(w).shape
        h = poly.h_lambda(shape, w.n)
        return self._coset_sum(w, h, sg.ParabolicShape(shape.transpose().parts))

    def goldie_poly_pi(self, w, pyramid):
        """
        Dimension polynomial p^pi_w = sum over z in D^pi of (L(w):M(z)) z^{-1}(h_pi),
        D^pi the maximal length representatives for the column stabilizer of pi.
        """
        if pyramid.n_boxes != w.n:
            raise DomainError(f"Pyramid with {pyramid.n_boxes} boxes for a permutation of size {w.n}")
        return self._pi(w.images, pyramid)

    def _pi_of_images(self, images, pyramid):
        shape = sg.ParabolicShape(pyramid.col_heights)
        return self._coset_sum(sg.Permutation(images), poly.h_pi(pyramid), shape)

    def goldie_poly_of_tableau(self, Q):
        """
        Goldie rank polynomial of the left cell indexed by a standard tableau.
        """
        if not Q.is_standard() or not Q.pyramid.is_left_justified():
            raise DomainError(f"Left cells are indexed by standard tableaux: {Q}")
        return self.goldie_poly_bform(rs.cell_rep_of_tableau(Q))

    goldie_poly_product = staticmethod(goldie_poly_product)

    def _factor(self, part):
        alpha = part.weight
        q = rs.q_of_weight(alpha)
        delta, d = wt.antidominant_conjugate(alpha)
        w = rs.minimal_cell_rep(d)
        p = self.goldie_poly_bform(w)
        value = p.evaluate(delta)
        if value.denominator != 1 or value <= 0:
            raise ConsistencyError(f"Goldie rank {value} of {alpha.to_json()} is not a positive integer")
        return CosetFactor(
            part.rep, part.positions, alpha, q, q.pyramid.partition, w, p, delta, int(value)
        )

    def goldie_rank(self, alpha):
        """
        Goldie rank of U(gl_N)/I(alpha), as a product over the integral cosets of alpha.

        Args:
            alpha: Weight

        Returns:
            GoldieReport
        """
        factors = [self._factor(part) for part in wt.coset_split(alpha).parts]
        total = functools.reduce(lambda a, b: a * b, (f.rank for f in factors), 1)
        q = rs.q_of_weight(alpha)
        completely_prime = q.find_row_equivalent("column_connected") is not None
        if completely_prime != (total == 1):
            raise ConsistencyError(
                f"Completely prime test ({completely_prime}) disagrees with Goldie rank {total} for {alpha.to_json()}"
            )
        induced = None
        A = q.find_row_equivalent("column_separated")
        if A is not None:
            shape = A.pyramid.partition
            dim_f = poly.h_lambda(shape, A.n).evaluate(A.gamma())
            if dim_f != total:
                raise ConsistencyError(f"dim F = {dim_f} differs from Goldie rank {total} for {alpha.to_json()}")
            induced = {
                "levi": shape.transpose().to_json(),
                "gamma": A.gamma().to_json(),
                "dim_F": int(dim_f),
            }
        return GoldieReport(alpha, factors, total, completely_prime, induced)

    def theorem_one_witness(self, w):
        """
        Weight alpha = w^{-1} gamma(C) at which p_w takes the value one, C the
        tableau of the shape of Q(w) with every entry of the r-th row from the
        bottom equal to r.

        Returns:
            (alpha, value)
        """
        if not rs.is_minimal_in_cell(w):
            raise DomainError(f"{w} is not minimal in its left cell")
        shape = rs.rs_pair(w).shape
        C = Tableau.left_justified([[r] * part for r, part in enumerate(shape.parts, start=1)])
        alpha = wt.act(w.inverse(), C.gamma())
        return alpha, self.goldie_poly_bform(w).evaluate(alpha)

    def dimension_sum(self, A):
        """
        Sum over column-strict B with the content of A of (L(A):M(B)) h_pi(gamma(B)).
        Vanishes unless A is semi-standard.
        """
        if not A.is_column_strict():
            raise DomainError(f"dimension_sum needs a column-strict tableau: {A}")
        if not A.is_integral():
            raise DomainError(f"dimension_sum needs integer entries: {A}")
        table = self.kl_table(A.n)
        h = poly.h_pi(A.pyramid)
        total = Fraction(0)
        for B in enumerate_column_strict(A.pyramid, A.entries):
            c = tableau_inv_mult(table, A, B)
            if c:
                total += c * h.evaluate(B.gamma())
        if total.denominator != 1 or total < 0:
            raise ConsistencyError(f"dimension sum {total} of {A} is not a nonnegative integer")
        return int(total)
