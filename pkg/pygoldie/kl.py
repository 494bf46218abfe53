"""
Kazhdan-Lusztig polynomials of S_N and the decomposition numbers built on them.

Conventions: L(w) = L(w(-rho)) and M(w) = M(w(-rho)), so that

    [M(x):L(y)] = P_{x w0, y w0}(1),
    (L(x):M(y)) = (-1)^{l(x)+l(y)} P_{y,x}(1).
"""

import os
import json
import threading
import warnings
import concurrent.futures as cf

import numpy as np

from . import symgroup as sg
from .weights import antidominant_conjugate, stabilizer_shape
from .errors import SizeError, DomainError


class UniPoly(tuple):
    """
    Integer polynomial in t stored as ascending coefficients, trailing zeros stripped.
    The zero polynomial is the empty tuple.
    """

    def __new__(cls, coeffs=()):
        coeffs = [int(c) for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        return super().__new__(cls, coeffs)

    def __call__(self, t):
        return sum(c * t**k for k, c in enumerate(self))

    def render(self):
        if not self:
            return "0"
        terms = []
        for k, c in enumerate(self):
            if c == 0:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(terms)


ZERO = UniPoly()
ONE = UniPoly([1])


def _combine(*pairs):
    """
    Sum of coefficient * t^shift * poly for (coefficient, shift, poly) triples.
    """
    size = max((shift + len(p) for _, shift, p in pairs), default=0)
    out = [0] * size
    for coef, shift, p in pairs:
        for k, c in enumerate(p):
            out[shift + k] += coef * c
    return UniPoly(out)


class KLTable:
    """
    Full table of Kazhdan-Lusztig polynomials P_{x,y} for S_N.

    The table is filled column by column, y by increasing length, with the
    recursion for a left descent s of y and v = s y:

        P_{x,y} = t^{1-c} P_{sx,v} + t^c P_{x,v}
                  - sum_{z < v, sz < z} mu(z,v) t^{(l(y)-l(z))/2} P_{x,z},

    where c = 1 if sx < x and c = 0 otherwise. Columns of equal length are
    independent, so a stratum may be computed by several worker threads; the
    result does not depend on the number of workers.

    Examples:
        >>> import pygoldie as pg
        >>> table = pg.KLTable(4)
        >>> table.poly(pg.Permutation([1, 2, 3, 4]), pg.Permutation([3, 4, 1, 2]))
        (1, 1)
    """

    VERSION = "GOLDIE-KL v1"
    N_MAX = 7

    def __init__(self, n, n_workers=1, columns=None, provenance=None):
        """
        Args:
            n: rank of the symmetric group, at most N_MAX
            n_workers: worker threads used per length stratum
            columns: prebuilt data {y: {x: UniPoly}} (loading from a cache file)
            provenance: free-form dict describing where the data came from
        """
        if not 1 <= n <= self.N_MAX:
            raise SizeError(f"KL tables are limited to 1 <= N <= {self.N_MAX}: {n}")
        self.n = n
        self.n_workers = n_workers
        self.perms = sorted(sg.all_permutations(n), key=lambda w: (w.length(), w.images))
        self.index = {w: k for k, w in enumerate(self.perms)}
        self._lengths = [w.length() for w in self.perms]
        self.w0 = sg.longest_element(n)
        if columns is None:
            self._columns = self._build()
            self.provenance = {"format": self.VERSION, "source": "built", "workers": n_workers}
        else:
            self._columns = columns
            self.provenance = provenance or {"format": self.VERSION, "source": "loaded"}

    def _build(self):
        perms, lengths = self.perms, self._lengths
        m = len(perms)
        ranks = np.array([w.rank_matrix().ravel() for w in perms])
        reflections = [sg.Permutation.simple_reflection(i, self.n) for i in range(1, self.n)]
        lmul = [[self.index[s.compose(w)] for w in perms] for s in reflections]

        columns = {0: {0: ONE}}
        mu = {0: []}

        def column(y):
            w = perms[y]
            i = w.left_descents()[0] - 1
            v = lmul[i][y]
            ly = lengths[y]
            below = np.nonzero(np.all(ranks <= ranks[y], axis=1))[0]
            col_v = columns[v]
            mu_terms = [(z, c) for z, c in mu[v] if lengths[lmul[i][z]] < lengths[z]]
            out = {}
            for x in below.tolist():
                sx = lmul[i][x]
                p_sx, p_x = col_v.get(sx, ZERO), col_v.get(x, ZERO)
                if lengths[sx] < lengths[x]:
                    pairs = [(1, 0, p_sx), (1, 1, p_x)]
                else:
                    pairs = [(1, 1, p_sx), (1, 0, p_x)]
                for z, c in mu_terms:
                    p_xz = columns[z].get(x)
                    if p_xz:
                        pairs.append((-c, (ly - lengths[z]) // 2, p_xz))
                p = _combine(*pairs)
                if p:
                    out[x] = p
            return out

        strata = {}
        for y in range(1, m):
            strata.setdefault(lengths[y], []).append(y)

        with cf.ThreadPoolExecutor(max_workers=max(1, self.n_workers)) as pool:
            for length in sorted(strata):
                ys = strata[length]
                results = list(pool.map(column, ys))
                for y, col in zip(ys, results):
                    columns[y] = col
                for y in ys:
                    mu[y] = self._mu_list(y, columns[y])
        return columns

    def _mu_list(self, y, col):
        ly = self._lengths[y]
        out = []
        for x, p in sorted(col.items()):
            gap = ly - self._lengths[x]
            if gap % 2 == 1 and len(p) > (gap - 1) // 2:
                c = p[(gap - 1) // 2]
                if c:
                    out.append((x, c))
        return out

    def _check(self, *perms):
        for w in perms:
            if w.n != self.n:
                raise SizeError(f"Permutation of size {w.n} for a KL table of S_{self.n}")

    def poly(self, x, y):
        """
        P_{x,y}(t) as ascending integer coefficients (empty tuple for zero).
        """
        self._check(x, y)
        return self._columns[self.index[y]].get(self.index[x], ZERO)

    def mult(self, x, y):
        """
        Decomposition number [M(x):L(y)] = P_{x w0, y w0}(1).
        """
        self._check(x, y)
        return self.poly(x.compose(self.w0), y.compose(self.w0))(1)

    def inv_mult(self, x, y):
        """
        Inverse decomposition number (L(x):M(y)) = (-1)^{l(x)+l(y)} P_{y,x}(1).
        """
        self._check(x, y)
        value = self.poly(y, x)(1)
        return -value if (x.length() + y.length()) % 2 else value

    def items(self):
        """
        Nonzero entries ((x, y), P_{x,y}) in table order.
        """
        for y in range(len(self.perms)):
            col = self._columns[y]
            for x in sorted(col):
                yield (self.perms[x], self.perms[y]), col[x]

    def header(self):
        return f"{self.VERSION} N={self.n}"

    def save(self, path):
        """
        Write the table atomically: a temporary file in the same directory is
        renamed over the target.
        """
        path = os.fspath(path)
        tmp = f"{path}.{os.getpid()}.{threading.get_ident()}.tmp"
        with open(tmp, "w", encoding="utf-8") as fh:
            fh.write(self.header() + "\n")
            for (x, y), p in self.items():
                fh.write(json.dumps({"x": x.to_json(), "y": y.to_json(), "p": list(p)}) + "\n")
        os.replace(tmp, path)

    @classmethod
    def load(cls, path, n):
        """
        Read a table written by `save`.

        Raises:
            ValueError: header mismatch or malformed record
        """
        with open(path, "r", encoding="utf-8") as fh:
            header = fh.readline().rstrip("\n")
            expected = f"{cls.VERSION} N={n}"
            if header != expected:
                raise ValueError(f"Cache header {header!r} does not match {expected!r}")
            perms = sorted(sg.all_permutations(n), key=lambda w: (w.length(), w.images))
            index = {w: k for k, w in enumerate(perms)}
            columns = {k: {} for k in range(len(perms))}
            for line in fh:
                if not line.strip():
                    continue
                rec = json.loads(line)
                x, y = sg.Permutation(rec["x"]), sg.Permutation(rec["y"])
                if x.n != n or y.n != n:
                    raise ValueError(f"Record of wrong size in {path}: {line.strip()}")
                columns[index[y]][index[x]] = UniPoly(rec["p"])
        if any(columns[k].get(k) != ONE for k in columns):
            raise ValueError(f"Cache {path} is incomplete: missing diagonal entries")
        return cls(n, columns=columns, provenance={"format": cls.VERSION, "source": os.fspath(path)})


class KLStore:
    """
    Provider of KL tables per N with an in-memory memo and an optional disk cache.

    A cache file whose header does not match, or which fails to parse, is
    rebuilt after a warning.
    """

    N_GUARD = 7

    def __init__(self, cache_dir=None, n_guard=None, n_workers=1):
        self.cache_dir = cache_dir
        self.n_guard = self.N_GUARD if n_guard is None else n_guard
        self.n_workers = n_workers
        self._tables = {}
        self._lock = threading.Lock()

    def params_kw(self):
        return {"cache_dir": self.cache_dir, "n_guard": self.n_guard, "n_workers": self.n_workers}

    def cache_path(self, n):
        if self.cache_dir is None:
            return None
        return os.path.join(os.fspath(self.cache_dir), f"kl_N{n}.jsonl")

    def table(self, n):
        if n > self.n_guard:
            raise SizeError(f"N={n} exceeds the KL guard {self.n_guard}")
        with self._lock:
            if n not in self._tables:
                self._tables[n] = self._load_or_build(n)
            return self._tables[n]

    def _load_or_build(self, n):
        path = self.cache_path(n)
        if path is not None and os.path.exists(path):
            try:
                return KLTable.load(path, n)
            except (ValueError, KeyError, TypeError) as e:
                warnings.warn(f"Rebuilding KL cache {path}: {e}", Warning)
        table = KLTable(n, n_workers=self.n_workers)
        if path is not None:
            os.makedirs(os.path.dirname(path), exist_ok=True)
            table.save(path)
        return table


def kl_polynomial(table, x, y):
    return table.poly(x, y)


def mult(table, x, y):
    return table.mult(x, y)


def inv_mult(table, x, y):
    return table.inv_mult(x, y)


def singular_inv_mult(table, alpha, beta):
    """
    (L(alpha):M(beta)) = sum over z in W_delta of (L(x):M(yz)) with
    x = d(alpha), y = d(beta), for integral alpha, beta with the same
    anti-dominant conjugate delta.
    """
    if not (alpha.is_integral() and beta.is_integral()):
        raise DomainError(f"Integral weights required: {alpha.to_json()}, {beta.to_json()}")
    delta, x = antidominant_conjugate(alpha)
    delta_b, y = antidominant_conjugate(beta)
    if delta != delta_b:
        raise DomainError(f"Weights {alpha.to_json()} and {beta.to_json()} are not W-conjugate")
    return sum(table.inv_mult(x, y.compose(z)) for z in sg.parabolic_subgroup(stabilizer_shape(delta)))


def tableau_inv_mult(table, A, B):
    """
    (L(A):M(B)) = (L(gamma(A)):M(gamma(B))) for column-strict tableaux on the
    same pyramid; zero unless A and B have the same content.
    """
    if A.pyramid != B.pyramid:
        raise SizeError("Tableaux on different pyramids")
    if not (A.is_column_strict() and B.is_column_strict()):
        raise DomainError("Column-strict tableaux required")
    if not (A.is_integral() and B.is_integral()):
        raise DomainError("Tableaux with integer entries required")
    if A.content() != B.content():
        return 0
    return singular_inv_mult(table, A.gamma(), B.gamma())
