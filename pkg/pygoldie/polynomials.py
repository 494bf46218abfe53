"""
Exact polynomials in x_1, ..., x_N over the rationals, with the action of S_N.
"""

from fractions import Fraction

import sympy as sp

from .errors import SizeError


def variables(n):
    return tuple(sp.symbols(f"x1:{n + 1}"))


def _to_rational(x):
    x = Fraction(x)
    return sp.Rational(x.numerator, x.denominator)


def _to_fraction(r):
    r = sp.Rational(r)
    return Fraction(int(r.p), int(r.q))


class MultiPoly:
    """
    Polynomial in x_1..x_N with rational coefficients, backed by ``sympy.Poly`` over QQ.

    The symmetric group acts by w . x_i = x_{w(i)}, so that
    (w . p)(alpha) = p(w^{-1} alpha).

    Examples:
        >>> import pygoldie as pg
        >>> x1, x2 = pg.MultiPoly.gens(2)
        >>> ((x2 - x1) * (x2 + x1)).render()
        'x2^2 - x1^2'
    """

    def __init__(self, n, poly=None):
        self.n = n
        self._gens = variables(n)
        if poly is None:
            poly = sp.Poly(0, *self._gens, domain=sp.QQ)
        self.poly = poly

    @classmethod
    def from_dict(cls, n, terms):
        """
        Args:
            n: number of variables
            terms: dict exponent tuple -> rational coefficient
        """
        gens = variables(n)
        data = {tuple(e): _to_rational(c) for e, c in terms.items() if c != 0}
        if not data:
            return cls(n)
        return cls(n, sp.Poly.from_dict(data, *gens, domain=sp.QQ))

    @classmethod
    def constant(cls, n, c):
        return cls.from_dict(n, {(0,) * n: c})

    @classmethod
    def variable(cls, n, i):
        e = [0] * n
        e[i - 1] = 1
        return cls.from_dict(n, {tuple(e): 1})

    @classmethod
    def gens(cls, n):
        return tuple(cls.variable(n, i) for i in range(1, n + 1))

    @classmethod
    def from_expr(cls, n, text):
        """
        Parse text such as "1/2*x1^2*x3 - 2*x2".
        """
        gens = variables(n)
        expr = sp.sympify(text.replace("^", "**"), locals={str(g): g for g in gens})
        return cls(n, sp.Poly(expr, *gens, domain=sp.QQ))

    def terms(self):
        """
        Dict exponent tuple -> Fraction, zero coefficients dropped.
        """
        return {tuple(e): _to_fraction(c) for e, c in self.poly.as_dict().items() if c != 0}

    def _check(self, other):
        if self.n != other.n:
            raise SizeError(f"Polynomials in {self.n} and {other.n} variables")

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            self._check(other)
            return other
        return MultiPoly.constant(self.n, other)

    def __add__(self, other):
        other = self._coerce(other)
        return MultiPoly(self.n, self.poly + other.poly)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        return MultiPoly(self.n, self.poly - other.poly)

    def __neg__(self):
        return MultiPoly(self.n, -self.poly)

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            return self.scale(other)
        self._check(other)
        return MultiPoly(self.n, self.poly * other.poly)

    __rmul__ = __mul__

    def scale(self, c):
        return MultiPoly(self.n, self.poly.mul_ground(_to_rational(c)))

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.n == other.n and self.terms() == other.terms()
        return self.terms() == MultiPoly.constant(self.n, other).terms()

    def __hash__(self):
        return hash((self.n, tuple(sorted(self.terms().items()))))

    def __repr__(self):
        return f"MultiPoly({self.n}, '{self.render()}')"

    def is_zero(self):
        return self.poly.is_zero

    def degree(self):
        return self.poly.total_degree()

    def evaluate(self, alpha):
        """
        Exact value at x_i = alpha_i.

        Args:
            alpha: Weight or sequence of rationals

        Returns:
            Fraction
        """
        values = [_to_rational(a) for a in alpha]
        if len(values) != self.n:
            raise SizeError(f"Evaluating a polynomial in {self.n} variables at {len(values)} values")
        if self.is_zero():
            return Fraction(0)
        return _to_fraction(self.poly(*values))

    def act(self, w):
        """
        Substitution x_i -> x_{w(i)}.
        """
        if w.n != self.n:
            raise SizeError(f"Permutation of size {w.n} acting on {self.n} variables")
        moved = {}
        for e, c in self.terms().items():
            f = [0] * self.n
            for i, ei in enumerate(e, start=1):
                f[w(i) - 1] = ei
            moved[tuple(f)] = c
        return MultiPoly.from_dict(self.n, moved)

    def render(self):
        """
        Stable text form in graded-lex order for the variable order
        x_N > x_{N-1} > ... > x_1: total degree first, then the exponent of
        x_N, then of x_{N-1}, and so on, largest first. A difference of
        adjacent variables therefore renders as "x2 - x1".
        """
        items = sorted(self.terms().items(), key=lambda t: (sum(t[0]), t[0][::-1]), reverse=True)
        if not items:
            return "0"
        out = []
        for k, (e, c) in enumerate(items):
            mono = "*".join(
                f"x{i}" if ei == 1 else f"x{i}^{ei}" for i, ei in enumerate(e, start=1) if ei > 0
            )
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if k == 0:
                out.append(f"-{body}" if c < 0 else body)
            else:
                out.append(f" - {body}" if c < 0 else f" + {body}")
        return "".join(out)

    def to_json(self):
        return self.render()


def act(w, p):
    return p.act(w)


def _pair_factor(n, i, j):
    # (x_i - x_j) / (j - i)
    xi, xj = MultiPoly.variable(n, i), MultiPoly.variable(n, j)
    return (xi - xj).scale(Fraction(1, j - i))


def h_blocks(blocks, n):
    """
    Product of (x_i - x_j)/(j - i) over pairs i < j inside each block.
    """
    p = MultiPoly.constant(n, 1)
    for block in blocks:
        for a, i in enumerate(block):
            for j in block[a + 1 :]:
                p = p * _pair_factor(n, i, j)
    return p


def h_lambda(partition, n):
    """
    h_lambda = prod over transpositions (i j) of W^lambda of (x_i - x_j)/(j - i),
    where W^lambda = S_{lambda'_1} x S_{lambda'_2} x ... on consecutive blocks.

    Args:
        partition: Partition lambda with |lambda| = n
        n: number of variables
    """
    if partition.size != n:
        raise SizeError(f"{partition} is not a partition of {n}")
    blocks, start = [], 1
    for h in partition.transpose().parts:
        blocks.append(list(range(start, start + h)))
        start += h
    return h_blocks(blocks, n)


def h_pi(pyramid):
    """
    h_pi = prod over boxes i < j in the same column of (x_i - x_j)/(j - i).
    """
    blocks = [pyramid.col_boxes(c) for c in range(1, pyramid.level + 1)]
    return h_blocks(blocks, pyramid.n_boxes)


def weyl_dimension(mu):
    """
    Dimension of the irreducible gl_n-module of highest weight mu
    (mu_1 >= mu_2 >= ... with integral differences), by Weyl's formula.
    """
    mu = [Fraction(m) for m in mu]
    dim = Fraction(1)
    for i in range(len(mu)):
        for j in range(i + 1, len(mu)):
            dim *= Fraction(mu[i] - mu[j] + j - i, j - i)
    return dim
