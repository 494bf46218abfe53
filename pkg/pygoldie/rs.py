"""
Robinson-Schensted insertion, Duflo labels Q(alpha) and left cells of S_N.

Insertion tableaux are kept as lists of rows from the bottom row up. The
bumping rule uses the partial order of the weights module: a value a bumps the
leftmost b with b > a, and entries incomparable with a are passed over.
"""

from __future__ import annotations

import itertools
import functools

from . import tableaux as tab
from .symgroup import Permutation
from .weights import Weight, act, rho, to_fraction, gt
from .errors import SizeError, DomainError


def _bump(rows, value):
    """
    Insert value into rows (bottom row first) in place.

    Returns:
        index of the row that received a new box
    """
    r = 0
    while True:
        if r == len(rows):
            rows.append([value])
            return r
        row = rows[r]
        for c, b in enumerate(row):
            if gt(b, value):
                row[c], value = value, b
                break
        else:
            row.append(value)
            return r
        r += 1


def _rows_of(state):
    if state is None:
        return []
    if not state.pyramid.is_left_justified():
        raise DomainError("Insertion tableaux are left-justified")
    return [list(row) for row in state.rows_bottom_up()]


def schensted_insert(state, value):
    """
    Insert a value into the bottom row of an insertion tableau.

    Args:
        state: left-justified Tableau, or None for the empty tableau
        value: rational

    Returns:
        Tableau
    """
    rows = _rows_of(state)
    _bump(rows, to_fraction(value))
    return tab.Tableau.left_justified(rows)


def _insert_all(values):
    rows, record = [], []
    for k, a in enumerate(values, start=1):
        r = _bump(rows, a)
        if r == len(record):
            record.append([])
        record[r].append(k)
    return rows, record


def q_of_weight(alpha):
    """
    Duflo label Q(alpha): insertion tableau of the coordinates of alpha.

    Examples:
        >>> import pygoldie as pg
        >>> pg.q_of_weight(pg.Weight([3, 1, 2])).rows_bottom_up()
        [[Fraction(1, 1), Fraction(2, 1)], [Fraction(3, 1)]]
    """
    rows, _ = _insert_all(alpha.coords)
    return tab.Tableau.left_justified(rows)


class RSPair:
    """
    Insertion tableau P(w) and recording tableau Q(w) of a permutation.
    """

    def __init__(self, P, Q):
        self.P = P
        self.Q = Q

    @property
    def shape(self):
        return self.P.pyramid.partition

    def to_json(self):
        return {"P": self.P.to_json(), "Q": self.Q.to_json(), "shape": self.shape.to_json()}


def rs_pair(w):
    """
    Robinson-Schensted pair (P(w), Q(w)) from inserting w(1), ..., w(N).
    """
    return _rs_pair_of_images(w.images)


# covers all of S_7
@functools.lru_cache(maxsize=8192)
def _rs_pair_of_images(images):
    rows, record = _insert_all(images)
    return RSPair(tab.Tableau.left_justified(rows), tab.Tableau.left_justified(record))


def recording_tableau(w):
    return rs_pair(w).Q


def inverse_rs(P, Q):
    """
    Permutation with the given insertion and recording tableaux.

    Args:
        P, Q: standard left-justified tableaux of the same shape

    Returns:
        Permutation
    """
    if not (P.is_standard() and Q.is_standard()) or P.pyramid != Q.pyramid:
        raise DomainError("inverse_rs needs two standard tableaux of the same shape")
    p_rows = [[int(x) for x in row] for row in P.rows_bottom_up()]
    q_rows = [[int(x) for x in row] for row in Q.rows_bottom_up()]
    n = P.n
    images = [0] * n
    for k in range(n, 0, -1):
        r = next(i for i, row in enumerate(q_rows) if row and row[-1] == k)
        q_rows[r].pop()
        x = p_rows[r].pop()
        for below in range(r - 1, -1, -1):
            row = p_rows[below]
            c = max(c for c, y in enumerate(row) if y < x)
            row[c], x = x, row[c]
        images[k - 1] = x
    return Permutation(images)


def column_superstandard(partition):
    """
    Standard tableau with 1..N placed in order up the columns, leftmost first.
    """
    if not isinstance(partition, tab.Partition):
        partition = tab.Partition(partition)
    heights = partition.transpose().parts
    rows = [[None] * part for part in partition.parts]
    k = 1
    for c, h in enumerate(heights):
        for r in range(h):
            rows[r][c] = k
            k += 1
    return tab.Tableau.left_justified(rows)


def same_left_cell(x, y):
    if x.n != y.n:
        raise SizeError(f"Permutations of different size: {x.n} vs {y.n}")
    return rs_pair(x).Q == rs_pair(y).Q


def is_minimal_in_cell(w):
    pair = rs_pair(w)
    return pair.P == column_superstandard(pair.shape)


def minimal_cell_rep(w):
    """
    The unique member of the left cell of w whose P tableau is column superstandard.
    """
    pair = rs_pair(w)
    return inverse_rs(column_superstandard(pair.shape), pair.Q)


def cell_rep_of_tableau(Q):
    """
    Minimal representative of the left cell indexed by the standard tableau Q.
    """
    return inverse_rs(column_superstandard(Q.pyramid.partition), Q)


def standard_tableaux(partition):
    """
    All standard tableaux of a shape, in a deterministic order.

    Args:
        partition: Partition with at most 10 boxes

    Returns:
        list of Tableau
    """
    if not isinstance(partition, tab.Partition):
        partition = tab.Partition(partition)
    n = partition.size
    if n > 10:
        raise SizeError(f"Standard tableau enumeration is limited to 10 boxes: {n}")
    shape = list(partition.parts)
    out = []

    def place(rows, k):
        if k > n:
            out.append(tab.Tableau.left_justified([list(r) for r in rows]))
            return
        for r in range(len(shape)):
            c = len(rows[r])
            if c < shape[r] and (r == 0 or len(rows[r - 1]) > c):
                rows[r].append(k)
                place(rows, k + 1)
                rows[r].pop()

    place([[] for _ in shape], 1)
    return out


class LeftCell:
    """
    Left cell of S_N: all w sharing the recording tableau Q.
    """

    def __init__(self, Q, members):
        self.Q = Q
        self.members = sorted(members)
        self.minimal = cell_rep_of_tableau(Q)

    @property
    def shape(self):
        return self.Q.pyramid.partition


def left_cells(n):
    """
    Left cells of S_n keyed by their recording tableau.
    """
    cells = {}
    for images in itertools.permutations(range(1, n + 1)):
        w = Permutation(images)
        cells.setdefault(rs_pair(w).Q, []).append(w)
    return [LeftCell(Q, members) for Q, members in cells.items()]


def negated_rho_action(w):
    """
    The weight w(-rho), whose Duflo label equals Q(w).
    """
    minus_rho = Weight(-c for c in rho(w.n))
    return act(w, minus_rho)
