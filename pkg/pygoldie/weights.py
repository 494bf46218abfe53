"""
Weights of gl_N as vectors of exact rational coordinates x_i(alpha).

Coordinates a, b are compared with the partial order a >= b iff a - b is a
nonnegative integer; coordinates in different cosets of Q / Z are incomparable.
"""

import math
from fractions import Fraction

from .symgroup import Permutation, ParabolicShape
from .errors import SizeError, DomainError


def to_fraction(value):
    """
    Exact rational from int, Fraction or a string such as "3/2" or "-1".
    """
    if isinstance(value, float):
        raise TypeError(f"Floating point coordinates are not exact: {value}")
    return Fraction(value)


def coset_rep(x):
    """
    Canonical representative of x + Z in [0, 1).
    """
    return x - math.floor(x)


def gt(a, b):
    """
    a > b in the partial order: a - b is a positive integer.
    """
    d = a - b
    return d.denominator == 1 and d > 0


def geq(a, b):
    d = a - b
    return d.denominator == 1 and d >= 0


def comparable(a, b):
    return (a - b).denominator == 1


class Weight:
    """
    Weight alpha with coordinates x_1(alpha), ..., x_N(alpha).

    Examples:
        >>> import pygoldie as pg
        >>> pg.Weight(["3/2", 2, 1]).to_json()
        ['3/2', '2', '1']
    """

    def __init__(self, coords):
        self._coords = tuple(to_fraction(c) for c in coords)
        if not self._coords:
            raise SizeError("Weight needs at least one coordinate")

    @property
    def coords(self):
        return self._coords

    @property
    def n(self):
        return len(self._coords)

    def __getitem__(self, i):
        return self._coords[i]

    def __iter__(self):
        return iter(self._coords)

    def __len__(self):
        return len(self._coords)

    def __eq__(self, other):
        return isinstance(other, Weight) and self._coords == other._coords

    def __hash__(self):
        return hash(self._coords)

    def __repr__(self):
        return f"Weight({[str(c) for c in self._coords]})"

    def __add__(self, other):
        _check_size(self, other)
        return Weight(a + b for a, b in zip(self, other))

    def __sub__(self, other):
        _check_size(self, other)
        return Weight(a - b for a, b in zip(self, other))

    def is_integral(self):
        return all(c.denominator == 1 for c in self._coords)

    def is_single_coset(self):
        return all(comparable(c, self._coords[0]) for c in self._coords)

    def is_antidominant(self):
        return all(a <= b for a, b in zip(self._coords, self._coords[1:]))

    def to_json(self):
        return [str(c) for c in self._coords]

    @classmethod
    def from_json(cls, data):
        return cls(data)


def _check_size(a, b):
    if a.n != b.n:
        raise SizeError(f"Size mismatch: {a.n} vs {b.n}")


def rho(n):
    """
    The normalized rho = (-1, -2, ..., -N).
    """
    return Weight(range(-1, -n - 1, -1))


def act(w, alpha):
    """
    Action of W on weights: the result beta satisfies beta_{w(i)} = alpha_i.

    Args:
        w: Permutation
        alpha: Weight

    Returns:
        Weight
    """
    _check_size(w, alpha)
    beta = [None] * alpha.n
    for i, a in enumerate(alpha):
        beta[w(i + 1) - 1] = a
    return Weight(beta)


def antidominant_conjugate(alpha):
    """
    Anti-dominant conjugate delta of alpha and the minimal length d = d(alpha)
    with alpha = d(delta).

    A stable sort keeps equal coordinates in their original order, which
    picks the minimal length conjugator.

    Args:
        alpha: Weight whose coordinates lie in a single coset of Q / Z

    Returns:
        (delta, d)
    """
    if not alpha.is_single_coset():
        raise DomainError(
            f"Coordinates of {alpha.to_json()} lie in several cosets mod Z; split them with coset_split first"
        )
    order = sorted(range(alpha.n), key=lambda i: alpha[i])
    delta = Weight(alpha[i] for i in order)
    d = Permutation(i + 1 for i in order)
    return delta, d


def upper_closure_contains(w, alpha):
    """
    True if alpha lies in the upper closure of the chamber of w: for i < j,
    w^{-1}(i) < w^{-1}(j) forces x_i <= x_j and w^{-1}(i) > w^{-1}(j) forces x_i > x_j.
    """
    _check_size(w, alpha)
    if not alpha.is_single_coset():
        raise DomainError(f"Weight {alpha.to_json()} is not in a single coset")
    pos = w.inverse()
    for i in range(1, alpha.n + 1):
        for j in range(i + 1, alpha.n + 1):
            if pos(i) < pos(j):
                if alpha[i - 1] > alpha[j - 1]:
                    return False
            elif alpha[i - 1] <= alpha[j - 1]:
                return False
    return True


def stabilizer_shape(delta):
    """
    Block structure of the stabilizer W_delta of an anti-dominant weight.
    """
    if not delta.is_antidominant():
        raise DomainError(f"{delta.to_json()} is not anti-dominant")
    blocks, run = [], 1
    for a, b in zip(delta.coords, delta.coords[1:]):
        if a == b:
            run += 1
        else:
            blocks.append(run)
            run = 1
    blocks.append(run)
    return ParabolicShape(blocks)


class CosetPart:
    def __init__(self, rep, positions, weight):
        self.rep = rep
        self.positions = tuple(positions)
        self.weight = weight

    def to_json(self):
        return {"rep": str(self.rep), "positions": list(self.positions), "weight": self.weight.to_json()}


class CosetSplit:
    """
    Decomposition of a weight by the cosets of its coordinates mod Z.

    Each part records the representative z in [0, 1), the ascending 1-based
    positions holding coordinates in z + Z, and the integral sub-weight of the
    shifted coordinates a_i - z.
    """

    def __init__(self, n, parts):
        self.n = n
        self.parts = list(parts)

    def assemble(self):
        coords = [None] * self.n
        for part in self.parts:
            for pos, c in zip(part.positions, part.weight):
                coords[pos - 1] = c + part.rep
        return Weight(coords)

    def to_json(self):
        return [part.to_json() for part in self.parts]


def coset_split(alpha):
    groups = {}
    for i, c in enumerate(alpha, start=1):
        groups.setdefault(coset_rep(c), []).append(i)
    parts = [
        CosetPart(z, positions, Weight(alpha[i - 1] - z for i in positions))
        for z, positions in sorted(groups.items())
    ]
    return CosetSplit(alpha.n, parts)


def beta(pyramid):
    """
    The weight beta of a pyramid: coordinate i is
    (q_1 + ... + q_{col(i)-1}) - (q_{col(i)+1} + ... + q_l).

    Args:
        pyramid: Pyramid

    Returns:
        Weight
    """
    q = pyramid.col_heights
    coords = []
    for k in range(1, pyramid.n_boxes + 1):
        c = pyramid.box_col(k)
        coords.append(sum(q[: c - 1]) - sum(q[c:]))
    return Weight(coords)
