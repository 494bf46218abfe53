import itertools
import functools
import numpy as np
import scipy.special as spsp

from .errors import SizeError


@functools.lru_cache(maxsize=65536)
def _inversions(w):
    return sum(1 for i, j in itertools.combinations(range(len(w)), 2) if w[i] > w[j])


class Permutation:
    """
    Element of the symmetric group S_N in one-line notation, w(i) = images[i-1].

    Permutations are immutable and hashable. Composition follows the usual
    convention (u * v)(i) = u(v(i)).

    Examples:
        >>> import pygoldie as pg
        >>> w = pg.Permutation([2, 3, 1])
        >>> w.compose(w)
        Permutation([3, 1, 2])
        >>> w.length()
        2
    """

    N_MAX = 12

    def __init__(self, images):
        """
        Args:
            images: sequence of the N distinct integers 1..N
        """
        images = tuple(int(k) for k in images)
        n = len(images)
        if n < 1 or n > self.N_MAX:
            raise SizeError(f"Permutation size must be in 1..{self.N_MAX}: {n}")
        if sorted(images) != list(range(1, n + 1)):
            raise ValueError(f"Not a permutation of 1..{n}: {list(images)}")
        self._images = images

    @classmethod
    def identity(cls, n):
        return cls(range(1, n + 1))

    @classmethod
    def simple_reflection(cls, i, n):
        """
        The transposition s_i = (i, i+1) in S_n.
        """
        if not 1 <= i < n:
            raise ValueError(f"Simple reflection index out of range: {i}")
        images = list(range(1, n + 1))
        images[i - 1], images[i] = images[i], images[i - 1]
        return cls(images)

    @property
    def images(self):
        return self._images

    @property
    def n(self):
        return len(self._images)

    def __call__(self, i):
        return self._images[i - 1]

    def __eq__(self, other):
        return isinstance(other, Permutation) and self._images == other._images

    def __lt__(self, other):
        return self._images < other._images

    def __hash__(self):
        return hash(self._images)

    def __repr__(self):
        return f"Permutation({list(self._images)})"

    def __mul__(self, other):
        return self.compose(other)

    def _check_size(self, other):
        if self.n != other.n:
            raise SizeError(f"Permutations of different size: {self.n} vs {other.n}")

    def compose(self, other):
        """
        Composition self * other, i.e. i -> self(other(i)).

        Args:
            other: Permutation of the same size

        Returns:
            Permutation
        """
        self._check_size(other)
        return Permutation(self._images[k - 1] for k in other._images)

    def inverse(self):
        inv = [0] * self.n
        for i, k in enumerate(self._images):
            inv[k - 1] = i + 1
        return Permutation(inv)

    def length(self):
        """
        Coxeter length, equal to the number of inversions.
        """
        return _inversions(self._images)

    def is_left_descent(self, i):
        """
        True if s_i * self < self, i.e. i+1 appears before i in one-line notation.
        """
        pos = self.inverse().images
        return pos[i - 1] > pos[i]

    def left_descents(self):
        return [i for i in range(1, self.n) if self.is_left_descent(i)]

    def rank_matrix(self):
        """
        Rank matrix r[i, j] = #{a <= i : w(a) >= j} used by the dot criterion.

        Returns:
            (N, N) integer array, 0-based indices standing for i, j = 1..N
        """
        n = self.n
        perm = np.zeros((n, n), dtype=int)
        perm[np.arange(n), np.array(self._images) - 1] = 1
        # reverse cumulative sum over values, then cumulative over positions
        tail = np.cumsum(perm[:, ::-1], axis=1)[:, ::-1]
        return np.cumsum(tail, axis=0)

    def bruhat_leq(self, other):
        """
        Bruhat order test by comparing rank matrices entrywise.

        Args:
            other: Permutation of the same size

        Returns:
            True if self <= other
        """
        self._check_size(other)
        if self.length() > other.length():
            return False
        return bool(np.all(self.rank_matrix() <= other.rank_matrix()))

    def to_json(self):
        return list(self._images)

    @classmethod
    def from_json(cls, data):
        return cls(data)


def length(w):
    return w.length()


def compose(u, v):
    return u.compose(v)


def bruhat_leq(x, y):
    return x.bruhat_leq(y)


def longest_element(n):
    """
    Longest element w0 of S_n, w0(i) = n + 1 - i.
    """
    if n < 1:
        raise ValueError(f"n must be positive: {n}")
    return Permutation(range(n, 0, -1))


def all_permutations(n):
    """
    All elements of S_n in lexicographic order of their one-line notation.
    """
    return [Permutation(p) for p in itertools.permutations(range(1, n + 1))]


class ParabolicShape:
    """
    Composition of N describing the parabolic subgroup S_{b_1} x S_{b_2} x ...
    acting on consecutive blocks of indices.
    """

    def __init__(self, block_sizes):
        block_sizes = tuple(int(b) for b in block_sizes)
        if any(b <= 0 for b in block_sizes):
            raise ValueError(f"Block sizes must be positive: {block_sizes}")
        self.block_sizes = block_sizes

    @property
    def n(self):
        return sum(self.block_sizes)

    def blocks(self):
        """
        Index blocks as lists of 1-based positions.
        """
        out, start = [], 1
        for b in self.block_sizes:
            out.append(list(range(start, start + b)))
            start += b
        return out

    def n_cosets(self):
        """
        Number of cosets N! / prod(b_i!).
        """
        count = spsp.factorial(self.n, exact=True)
        for b in self.block_sizes:
            count //= spsp.factorial(b, exact=True)
        return count

    def __eq__(self, other):
        return isinstance(other, ParabolicShape) and self.block_sizes == other.block_sizes

    def __hash__(self):
        return hash(self.block_sizes)

    def __repr__(self):
        return f"ParabolicShape({list(self.block_sizes)})"


def _check_shape(shape, n):
    if n is not None and shape.n != n:
        raise SizeError(f"{shape} is not a composition of {n}")


def _ordered_set_partitions(values, sizes):
    # values assigned block by block, each block as a sorted tuple
    if not sizes:
        yield ()
        return
    for first in itertools.combinations(values, sizes[0]):
        rest = [v for v in values if v not in first]
        for tail in _ordered_set_partitions(rest, sizes[1:]):
            yield (first,) + tail


def min_coset_reps(shape, n=None):
    """
    Minimal length representatives of the left cosets W / W_J, i.e. the
    permutations increasing on every block.

    Args:
        shape: ParabolicShape
        n: optional size check

    Returns:
        sorted list of Permutation
    """
    _check_shape(shape, n)
    reps = []
    for parts in _ordered_set_partitions(list(range(1, shape.n + 1)), shape.block_sizes):
        reps.append(Permutation(itertools.chain.from_iterable(parts)))
    return sorted(reps)


def max_coset_reps(shape, n=None):
    """
    Maximal length representatives of the right cosets W_J \\ W: the
    permutations z whose inverse is decreasing on every block.

    Args:
        shape: ParabolicShape
        n: optional size check

    Returns:
        sorted list of Permutation
    """
    _check_shape(shape, n)
    reps = []
    for parts in _ordered_set_partitions(list(range(1, shape.n + 1)), shape.block_sizes):
        z_inv = itertools.chain.from_iterable(sorted(p, reverse=True) for p in parts)
        reps.append(Permutation(z_inv).inverse())
    return sorted(reps)


def parabolic_subgroup(shape):
    """
    All elements of W_J for J given by the block structure.
    """
    factors = [itertools.permutations(block) for block in shape.blocks()]
    return [Permutation(itertools.chain.from_iterable(parts)) for parts in itertools.product(*factors)]


def parabolic_longest(shape):
    """
    Longest element of W_J (reverses every block).
    """
    return Permutation(itertools.chain.from_iterable(reversed(block) for block in shape.blocks()))
