"""
Partitions, shift matrices, pyramids and tableaux.

Pyramid rows are indexed as in a matrix: row 1 is the top (shortest) row and
row n is the bottom row. Boxes are numbered 1..N down columns, leftmost column
first, so the entries of a tableau stored in box order are exactly its column
reading gamma(A).
"""

import collections
import itertools
from fractions import Fraction

from . import rs
from .weights import Weight, to_fraction, coset_rep, gt, comparable
from .errors import SizeError, DomainError, ConsistencyError


class Partition:
    """
    Partition lambda = (lambda_1 >= lambda_2 >= ... > 0).
    """

    def __init__(self, parts):
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"Not a partition: {list(parts)}")
        self.parts = parts

    @property
    def size(self):
        return sum(self.parts)

    def transpose(self):
        if not self.parts:
            return Partition(())
        return Partition(sum(1 for p in self.parts if p > k) for k in range(self.parts[0]))

    def __eq__(self, other):
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return f"Partition({list(self.parts)})"

    def to_json(self):
        return list(self.parts)


def partitions(n, max_part=None):
    """
    All partitions of n, in reverse lexicographic order.
    """
    max_part = n if max_part is None else max_part
    if n == 0:
        yield Partition(())
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield Partition((first,) + rest.parts)


class ShiftMatrix:
    """
    Shift matrix sigma = (s_{i,j}) with s_{i,j} = s_{i,i+1} + ... + s_{j-1,j} and
    s_{j,i} = s_{j,j-1} + ... + s_{i+1,i} for i <= j.
    """

    def __init__(self, entries):
        s = [[int(x) for x in row] for row in entries]
        n = len(s)
        if any(len(row) != n for row in s):
            raise ValueError(f"Shift matrix must be square: {entries}")
        for i in range(n):
            if s[i][i] != 0:
                raise ValueError(f"Shift matrix diagonal must vanish: {entries}")
            for j in range(i + 1, n):
                if s[i][j] != sum(s[k][k + 1] for k in range(i, j)) or s[j][i] != sum(
                    s[k + 1][k] for k in range(i, j)
                ):
                    raise ValueError(f"Shift matrix is not additive: {entries}")
        if any(x < 0 for row in s for x in row):
            raise ValueError(f"Shift matrix entries must be nonnegative: {entries}")
        self.entries = tuple(tuple(row) for row in s)

    @classmethod
    def left_justified(cls, row_lengths):
        """
        Upper triangular shift matrix s_{i,j} = p_j - p_i (i < j).
        """
        p = list(row_lengths)
        n = len(p)
        return cls([[p[j] - p[i] if j > i else 0 for j in range(n)] for i in range(n)])

    def __call__(self, i, j):
        return self.entries[i - 1][j - 1]

    @property
    def n(self):
        return len(self.entries)

    def is_upper_triangular(self):
        return all(self.entries[j][i] == 0 for i in range(self.n) for j in range(i + 1, self.n))

    def __eq__(self, other):
        return isinstance(other, ShiftMatrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def to_json(self):
        return [list(row) for row in self.entries]


class Pyramid:
    """
    Pyramid attached to row lengths p_1 <= ... <= p_n and a shift matrix.

    Row i holds the boxes in columns 1 + s_{n,i} .. l - s_{i,n} where l = p_n.

    Examples:
        >>> import pygoldie as pg
        >>> pi = pg.Pyramid([1, 2, 3], [[0, 0, 1], [1, 0, 1], [1, 0, 0]])
        >>> pi.col_heights
        (2, 3, 1)
    """

    def __init__(self, row_lengths, shift_matrix=None):
        """
        Args:
            row_lengths: p_1 <= ... <= p_n, top row first
            shift_matrix: ShiftMatrix or nested list. Left-justified if None.
        """
        p = tuple(int(x) for x in row_lengths)
        if not p or p[0] <= 0 or any(a > b for a, b in zip(p, p[1:])):
            raise ValueError(f"Row lengths must be positive and nondecreasing: {list(p)}")
        if shift_matrix is None:
            sigma = ShiftMatrix.left_justified(p)
        elif isinstance(shift_matrix, ShiftMatrix):
            sigma = shift_matrix
        else:
            sigma = ShiftMatrix(shift_matrix)
        n = len(p)
        if sigma.n != n:
            raise SizeError(f"Shift matrix of size {sigma.n} for {n} rows")
        for i in range(1, n):
            if sigma(i, i + 1) + sigma(i + 1, i) != p[i] - p[i - 1]:
                raise ValueError(f"Shift matrix {sigma.to_json()} does not fit row lengths {list(p)}")

        self.row_lengths = p
        self.shift_matrix = sigma
        self.level = p[-1]
        self.row_range = tuple((1 + sigma(n, i), self.level - sigma(i, n)) for i in range(1, n + 1))

        heights = [0] * self.level
        for a, b in self.row_range:
            for c in range(a, b + 1):
                heights[c - 1] += 1
        self.col_heights = tuple(heights)

        boxes = []
        for c in range(1, self.level + 1):
            for i in range(1, n + 1):
                a, b = self.row_range[i - 1]
                if a <= c <= b:
                    boxes.append((i, c))
        self._boxes = tuple(boxes)
        self._box_at = {rc: k for k, rc in enumerate(boxes, start=1)}

    @classmethod
    def left_justified(cls, partition):
        if not isinstance(partition, Partition):
            partition = Partition(partition)
        return cls(tuple(reversed(partition.parts)))

    @classmethod
    def from_column_heights(cls, heights):
        """
        Pyramid with the given column heights, which must rise and then fall.
        """
        q = [int(h) for h in heights]
        if not q or min(q) <= 0:
            raise ValueError(f"Column heights must be positive: {q}")
        n, l = max(q), len(q)
        intervals = []
        for i in range(1, n + 1):
            cols = [c for c in range(1, l + 1) if q[c - 1] >= n - i + 1]
            if cols != list(range(cols[0], cols[-1] + 1)):
                raise ValueError(f"Column heights do not form a pyramid: {q}")
            intervals.append((cols[0], cols[-1]))
        s = [[0] * n for _ in range(n)]
        for i in range(n - 1):
            s[i][i + 1] = intervals[i + 1][1] - intervals[i][1]
            s[i + 1][i] = intervals[i][0] - intervals[i + 1][0]
        for i in range(n):
            for j in range(i + 2, n):
                s[i][j] = s[i][j - 1] + s[j - 1][j]
                s[j][i] = s[j - 1][i] + s[j][j - 1]
        return cls([b - a + 1 for a, b in intervals], s)

    @property
    def n_rows(self):
        return len(self.row_lengths)

    @property
    def n_boxes(self):
        return len(self._boxes)

    @property
    def partition(self):
        return Partition(sorted(self.row_lengths, reverse=True))

    def is_left_justified(self):
        return self.shift_matrix.is_upper_triangular()

    def box_row(self, k):
        return self._boxes[k - 1][0]

    def box_col(self, k):
        return self._boxes[k - 1][1]

    def box_at(self, i, c):
        """
        Box number at row i, column c, or None.
        """
        return self._box_at.get((i, c))

    def row_boxes(self, i):
        a, b = self.row_range[i - 1]
        return [self._box_at[(i, c)] for c in range(a, b + 1)]

    def col_boxes(self, c):
        """
        Box numbers of column c, top to bottom.
        """
        return [k for k, (_, col) in enumerate(self._boxes, start=1) if col == c]

    def transpose(self):
        """
        The pyramid pi^t obtained by reversing the order of the columns.
        """
        return Pyramid.from_column_heights(tuple(reversed(self.col_heights)))

    def transpose_box_map(self):
        """
        Box k of pi goes to box k' of pi^t sitting in the mirrored column.
        """
        tr = self.transpose()
        return {k: tr.box_at(i, self.level + 1 - c) for k, (i, c) in enumerate(self._boxes, start=1)}

    def __eq__(self, other):
        return (
            isinstance(other, Pyramid)
            and self.row_lengths == other.row_lengths
            and self.shift_matrix == other.shift_matrix
        )

    def __hash__(self):
        return hash((self.row_lengths, self.shift_matrix))

    def __repr__(self):
        return f"Pyramid({list(self.row_lengths)}, {self.shift_matrix.to_json()})"

    def to_json(self):
        return {"row_lengths": list(self.row_lengths), "shift_matrix": self.shift_matrix.to_json()}


def canonical_key(x):
    return coset_rep(x), x


def _linked(col_i, col_j):
    a = [x for x in col_i if x not in col_j]
    b = [y for y in col_j if y not in col_i]
    if len(col_i) > len(col_j):
        return any(gt(i, j) and gt(j, i2) for i, j, i2 in itertools.product(a, b, a))
    if len(col_i) < len(col_j):
        return any(gt(i, j2) and gt(j, i) for j2, i, j in itertools.product(b, a, b))
    for i, j, i2, j2 in itertools.product(a, b, a, b):
        if gt(i, j) and gt(j, i2) and gt(i2, j2):
            return True
        if gt(j, i) and gt(i, j2) and gt(j2, i2):
            return True
    return False


class Tableau:
    """
    pi-tableau: one exact rational entry per box of a pyramid.

    Entries are stored in box order, i.e. in the column reading order.

    Examples:
        >>> import pygoldie as pg
        >>> A = pg.Tableau.left_justified([[5, 7], [6]])
        >>> A.gamma().to_json()
        ['6', '5', '7']
    """

    PREDICATES = ("column_strict", "column_connected", "column_separated")

    def __init__(self, pyramid, entries):
        entries = tuple(to_fraction(x) for x in entries)
        if len(entries) != pyramid.n_boxes:
            raise SizeError(f"{len(entries)} entries for a pyramid with {pyramid.n_boxes} boxes")
        self.pyramid = pyramid
        self.entries = entries

    @classmethod
    def from_rows(cls, pyramid, rows, bottom_up=True):
        """
        Args:
            pyramid: Pyramid
            rows: entries of each row from left to right
            bottom_up: rows listed from the bottom row up if True, else top row first
        """
        rows = list(rows)
        if bottom_up:
            rows = rows[::-1]
        if [len(r) for r in rows] != list(pyramid.row_lengths):
            raise SizeError(f"Row sizes {[len(r) for r in rows]} do not fit {pyramid}")
        entries = [None] * pyramid.n_boxes
        for i, row in enumerate(rows, start=1):
            for k, x in zip(pyramid.row_boxes(i), row):
                entries[k - 1] = x
        return cls(pyramid, entries)

    @classmethod
    def left_justified(cls, rows_bottom_up):
        pyramid = Pyramid(tuple(len(r) for r in reversed(rows_bottom_up)))
        return cls.from_rows(pyramid, rows_bottom_up)

    @property
    def n(self):
        return len(self.entries)

    def entry(self, k):
        return self.entries[k - 1]

    def row(self, i):
        return [self.entries[k - 1] for k in self.pyramid.row_boxes(i)]

    def rows(self):
        """
        Rows from the top row down.
        """
        return [self.row(i) for i in range(1, self.pyramid.n_rows + 1)]

    def rows_bottom_up(self):
        return self.rows()[::-1]

    def column(self, c):
        """
        Entries of column c from the bottom up.
        """
        return [self.entries[k - 1] for k in reversed(self.pyramid.col_boxes(c))]

    def columns(self):
        return [self.column(c) for c in range(1, self.pyramid.level + 1)]

    def content(self):
        return tuple(sorted(self.entries))

    def with_rows(self, rows_top_down):
        return Tableau.from_rows(self.pyramid, rows_top_down, bottom_up=False)

    def __eq__(self, other):
        return isinstance(other, Tableau) and self.pyramid == other.pyramid and self.entries == other.entries

    def __hash__(self):
        return hash((self.pyramid, self.entries))

    def __repr__(self):
        rows = [[str(x) for x in r] for r in self.rows_bottom_up()]
        return f"Tableau({rows})"

    def gamma(self):
        """
        Column reading: coordinate k is the entry of box k.
        """
        return Weight(self.entries)

    def is_integral(self):
        return all(x.denominator == 1 for x in self.entries)

    def is_column_strict(self):
        for col in self.columns():
            if not all(gt(upper, lower) for lower, upper in zip(col, col[1:])):
                return False
        return True

    def is_column_connected(self):
        for col in self.columns():
            if not all(upper - lower == 1 for lower, upper in zip(col, col[1:])):
                return False
        return True

    def is_row_standard(self):
        for row in self.rows():
            if any(gt(a, b) for a, b in itertools.combinations(row, 2)):
                return False
        return True

    def is_standard(self):
        if sorted(self.entries) != list(range(1, self.n + 1)):
            return False
        rows_ok = all(a < b for row in self.rows() for a, b in zip(row, row[1:]))
        return rows_ok and self.is_column_strict()

    def is_column_separated(self):
        if not self.is_column_strict():
            return False
        cols = self.columns()
        return not any(_linked(cols[a], cols[b]) for a, b in itertools.combinations(range(len(cols)), 2))

    def check(self, predicate):
        if predicate not in self.PREDICATES:
            raise ValueError(f"Unknown predicate: {predicate}")
        return getattr(self, f"is_{predicate}")()

    def row_standardize(self):
        """
        Row-standard tableau obtained by transposing pairs a > b with a left of b.

        Within each row, entries of one coset are sorted into the positions that
        coset occupies; entries of different cosets never move past each other.
        """
        new_rows = []
        for row in self.rows():
            row = list(row)
            by_coset = collections.defaultdict(list)
            for pos, x in enumerate(row):
                by_coset[coset_rep(x)].append(pos)
            for positions in by_coset.values():
                for pos, x in zip(positions, sorted(row[p] for p in positions)):
                    row[pos] = x
            new_rows.append(row)
        return self.with_rows(new_rows)

    def rho_read(self):
        """
        Row reading of the row-standardized tableau, top row first.
        """
        return Weight(itertools.chain.from_iterable(self.row_standardize().rows()))

    def _check_pyramid(self, other):
        if self.pyramid != other.pyramid:
            raise SizeError(f"Different pyramids: {self.pyramid} vs {other.pyramid}")

    def row_equivalent(self, other):
        self._check_pyramid(other)
        return all(sorted(a) == sorted(b) for a, b in zip(self.rows(), other.rows()))

    def canonical_row_form(self):
        return self.with_rows([sorted(row, key=canonical_key) for row in self.rows()])

    def row_arrangements(self, predicate):
        """
        Generate the row-equivalent tableaux satisfying a predicate, filling
        rows from the bottom up and trying candidate values in canonical order.

        Args:
            predicate: "column_strict", "column_connected" or "column_separated"
        """
        if predicate not in self.PREDICATES:
            raise ValueError(f"Unknown predicate: {predicate}")
        pyr = self.pyramid
        order = [k for i in range(pyr.n_rows, 0, -1) for k in pyr.row_boxes(i)]
        pools = {i: collections.Counter(self.row(i)) for i in range(1, pyr.n_rows + 1)}
        filled = [None] * pyr.n_boxes

        def fits(k, x):
            i, c = pyr.box_row(k), pyr.box_col(k)
            below = pyr.box_at(i + 1, c)
            if below is None:
                return True
            y = filled[below - 1]
            if predicate == "column_connected":
                return x - y == 1
            return gt(x, y)

        def search(pos):
            if pos == len(order):
                candidate = Tableau(pyr, filled)
                if predicate != "column_separated" or candidate.is_column_separated():
                    yield candidate
                return
            k = order[pos]
            pool = pools[pyr.box_row(k)]
            for x in sorted((v for v, m in pool.items() if m > 0), key=canonical_key):
                if not fits(k, x):
                    continue
                pool[x] -= 1
                filled[k - 1] = x
                yield from search(pos + 1)
                pool[x] += 1
                filled[k - 1] = None

        return search(0)

    def find_row_equivalent(self, predicate):
        """
        First row-equivalent tableau satisfying the predicate, or None.
        """
        return next(self.row_arrangements(predicate), None)

    def left_justify(self):
        pyr = Pyramid.left_justified(self.pyramid.partition)
        return Tableau.from_rows(pyr, self.rows(), bottom_up=False)

    def transpose_pyramid(self):
        """
        Same rows on pi^t, i.e. with the column order reversed.
        """
        return Tableau.from_rows(self.pyramid.transpose(), [row[::-1] for row in self.rows()], bottom_up=False)

    def is_semi_standard(self):
        if not self.is_column_strict():
            return False
        return rs.q_of_weight(self.gamma()).pyramid.partition == self.pyramid.partition

    def _columns_by_height(self):
        groups = collections.defaultdict(list)
        for c, h in enumerate(self.pyramid.col_heights, start=1):
            groups[h].append(c)
        return groups

    def is_parallel(self, other):
        """
        True if other arises from self by swapping pairs of columns of the same
        height whose entries lie in different cosets.
        """
        if self.pyramid != other.pyramid:
            return False
        mine, theirs = self.columns(), other.columns()
        for cols in self._columns_by_height().values():
            start = tuple(tuple(mine[c - 1]) for c in cols)
            target = tuple(tuple(theirs[c - 1]) for c in cols)
            if start == target:
                continue
            if sorted(start) != sorted(target):
                return False
            seen, frontier = {start}, collections.deque([start])
            while frontier and target not in seen:
                state = frontier.popleft()
                for a, b in itertools.combinations(range(len(state)), 2):
                    if comparable(state[a][0], state[b][0]):
                        continue
                    nxt = list(state)
                    nxt[a], nxt[b] = nxt[b], nxt[a]
                    nxt = tuple(nxt)
                    if nxt not in seen:
                        seen.add(nxt)
                        frontier.append(nxt)
            if target not in seen:
                return False
        return True

    def rect_map(self):
        """
        Column-strict B row-equivalent to Q_pi(gamma(A)) for semi-standard A.
        """
        if not self.is_semi_standard():
            raise DomainError(f"rect_map needs a semi-standard tableau: {self}")
        target = q_pi(self.gamma(), self.pyramid).find_row_equivalent("column_strict")
        if target is None:
            raise ConsistencyError(f"Q_pi of {self} has no column-strict rearrangement")
        return target

    def dimred_split(self):
        """
        Split a column-strict tableau into one tableau per coset of its columns,
        keeping the column order within each part.

        Returns:
            list of Tableau, ordered by coset representative
        """
        if not self.is_column_strict():
            raise DomainError(f"dimred_split needs a column-strict tableau: {self}")
        groups = collections.defaultdict(list)
        for col in self.columns():
            z = coset_rep(col[0])
            if any(coset_rep(x) != z for x in col):
                raise ConsistencyError(f"Column {col} mixes cosets")
            groups[z].append(col)
        parts = []
        for z in sorted(groups):
            cols = groups[z]
            pyr = Pyramid.from_column_heights([len(col) for col in cols])
            parts.append(Tableau(pyr, itertools.chain.from_iterable(col[::-1] for col in cols)))
        return parts

    def to_json(self):
        rows = [[str(x) for x in row] for row in self.rows_bottom_up()]
        if self.pyramid.is_left_justified():
            return {"partition": self.pyramid.partition.to_json(), "rows_bottom_up": rows}
        return {"shape": self.pyramid.to_json(), "rows_bottom_up": rows}

    @classmethod
    def from_json(cls, data):
        rows = [[Fraction(x) for x in row] for row in data["rows_bottom_up"]]
        if "shape" in data:
            shape = data["shape"]
            pyramid = Pyramid(shape["row_lengths"], shape.get("shift_matrix"))
        elif "partition" in data:
            pyramid = Pyramid.left_justified(data["partition"])
        else:
            pyramid = Pyramid(tuple(len(r) for r in reversed(rows)))
        return cls.from_rows(pyramid, rows)


def q_pi(alpha, pyramid):
    """
    Duflo label Q(alpha) with its rows slid onto the pyramid.

    Args:
        alpha: Weight
        pyramid: Pyramid whose partition is the shape of Q(alpha)

    Returns:
        Tableau on pyramid
    """
    q = rs.q_of_weight(alpha)
    if q.pyramid.partition != pyramid.partition:
        raise DomainError(
            f"Shape of Q(alpha) {q.pyramid.partition.to_json()} differs from the pyramid's {pyramid.partition.to_json()}"
        )
    return Tableau.from_rows(pyramid, q.rows(), bottom_up=False)
