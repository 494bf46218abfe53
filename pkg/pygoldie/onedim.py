"""
One-dimensional modules: the triangular solver producing the numbers a_{i,j}
from highest weight data, and the column-connected tableau they define.

Given row lengths p_1 <= ... <= p_n and values a_i^{(r)} for
1 <= r <= p_i - p_{i-1}, the solver finds a_{i,j} with

    a_{i, p_i - p_{i-1} + r} = a_{i-1, r},
    e_r(a_{i,1}, ..., a_{i,p_i}) = a_i^{(r)}   for r <= p_i - p_{i-1},

e_r the elementary symmetric polynomials. This is the only floating point
part of the package.
"""

from fractions import Fraction

import numpy as np
import scipy.linalg as spla
import sympy as sp

from .tableaux import Pyramid, Tableau
from .errors import DomainError, NumericFailure, TableauEmissionError


class StupInput:
    """
    Row lengths and the values a_i^{(r)}, r = 1..p_i - p_{i-1}, for each row i.
    """

    def __init__(self, row_lengths, values, shift_matrix=None):
        """
        Args:
            row_lengths: p_1 <= ... <= p_n
            values: list over rows of lists of complex numbers
            shift_matrix: optional shift matrix used when emitting the tableau
        """
        p = [int(x) for x in row_lengths]
        if not p or p[0] <= 0 or any(a > b for a, b in zip(p, p[1:])):
            raise ValueError(f"Row lengths must be positive and nondecreasing: {p}")
        if len(values) != len(p):
            raise ValueError(f"{len(values)} value rows for {len(p)} rows")
        prev = 0
        for i, (pi, vals) in enumerate(zip(p, values), start=1):
            if len(vals) != pi - prev:
                raise ValueError(f"Row {i} needs {pi - prev} values, got {len(vals)}")
            prev = pi
        self.row_lengths = p
        self.values = [np.array(vals, dtype=complex) for vals in values]
        self.shift_matrix = shift_matrix

    @classmethod
    def from_json(cls, data):
        values = [[complex(re, im) for re, im in row] for row in data["values"]]
        return cls(data["row_lengths"], values, data.get("shift_matrix"))

    def to_json(self):
        out = {
            "row_lengths": self.row_lengths,
            "values": [[[v.real, v.imag] for v in row] for row in self.values],
        }
        if self.shift_matrix is not None:
            out["shift_matrix"] = self.shift_matrix
        return out


class StupSolution:
    def __init__(self, row_lengths, rows, residuals, shift_matrix=None):
        self.row_lengths = row_lengths
        self.rows = rows
        self.residuals = residuals
        self.shift_matrix = shift_matrix

    def to_json(self):
        return {
            "row_lengths": self.row_lengths,
            "a": [[[v.real, v.imag] for v in row] for row in self.rows],
            "residuals": [float(r) for r in self.residuals],
        }


def _elementary(a):
    """
    [e_0, e_1, ..., e_m] of the numbers a, as the coefficients of prod (u + a_j).
    """
    if len(a) == 0:
        return np.ones(1, dtype=complex)
    return np.poly(-np.asarray(a, dtype=complex)).astype(complex)


def _polish(coeffs, root, n_iter=1):
    deriv = np.polyder(coeffs)
    for _ in range(n_iter):
        val = np.polyval(coeffs, root)
        slope = np.polyval(deriv, root)
        if slope == 0:
            break
        new = root - val / slope
        if abs(np.polyval(coeffs, new)) >= abs(val):
            break
        root = new
    return root


def _merge_clusters(roots, radius):
    """
    Replace each cluster of nearly equal roots by its mean; a root of
    multiplicity k is only resolved to about eps^(1/k) by the eigenvalues,
    while the mean of its cluster is accurate to about eps.
    """
    groups = []
    for r in sorted(roots, key=lambda z: (z.real, z.imag)):
        for g in groups:
            if abs(np.mean(g) - r) < radius * max(1.0, abs(r)):
                g.append(r)
                break
        else:
            groups.append([r])
    return groups


def _roots(coeffs, n_iter, merge=True, radius=1e-4):
    """
    Roots of a monic polynomial (descending coefficients) from the companion
    matrix. Simple roots are refined by Newton steps.
    """
    if len(coeffs) == 2:
        return np.array([-coeffs[1]], dtype=complex)
    eig = spla.eigvals(spla.companion(coeffs))
    groups = _merge_clusters(eig, radius) if merge else [[r] for r in eig]
    out = []
    for g in groups:
        if len(g) == 1:
            out.append(_polish(coeffs, g[0], n_iter))
        else:
            out.extend([np.mean(g)] * len(g))
    return np.array(out, dtype=complex)


def _solve_row(vals, prev, n_iter, merge):
    k = len(vals)
    e_prev = _elementary(prev)

    def e(s):
        return e_prev[s] if s < len(e_prev) else 0

    b = [1.0 + 0j]
    for r in range(1, k + 1):
        b.append(vals[r - 1] - sum(b[s] * e(r - s) for s in range(r)))
    if k == 0:
        new = np.zeros(0, dtype=complex)
    else:
        new = -_roots(np.array(b, dtype=complex), n_iter, merge=merge)
        new = np.array(sorted(new, key=lambda z: (z.real, z.imag)), dtype=complex)
    row = np.concatenate([new, prev])
    e_row = _elementary(row)
    residual = max((abs(e_row[r] - vals[r - 1]) for r in range(1, k + 1)), default=0.0)
    return row, residual


def stup_solve(inp, tol=1e-9, max_iter=20):
    """
    Solve for the a_{i,j} row by row.

    Args:
        inp: StupInput
        tol: largest accepted residual |e_r(a_{i,.}) - a_i^{(r)}|
        max_iter: Newton steps tried before giving up on a row

    Returns:
        StupSolution
    """
    prev = np.zeros(0, dtype=complex)
    rows, residuals = [], []
    for i, vals in enumerate(inp.values, start=1):
        # merged clusters first, then plain Newton for close but distinct roots
        for n_iter, merge in ((1, True), (max_iter, False)):
            row, residual = _solve_row(vals, prev, n_iter, merge)
            if residual <= tol:
                break
        else:
            raise NumericFailure(f"Row {i}: residual {residual:.3e} exceeds tolerance {tol:.1e}", residual)
        rows.append(row)
        residuals.append(residual)
        prev = row
    return StupSolution(inp.row_lengths, rows, residuals, inp.shift_matrix)


def _rational(z, tol, max_den):
    if abs(z.imag) > tol:
        raise TableauEmissionError(f"Entry {z} is not real")
    frac = Fraction(z.real).limit_denominator(max_den)
    if abs(float(frac) - z.real) > tol:
        raise TableauEmissionError(f"Entry {z.real} is not a rational with denominator <= {max_den}")
    return frac


def connected_tableau_of(solution, shift_matrix=None, tol=1e-6, max_den=1000):
    """
    Column-connected tableau whose row i holds a_{i,1} - i, ..., a_{i,p_i} - i.

    The copied entries a_{i, k+r} = a_{i-1,r} go directly below the box of
    a_{i-1,r}; the remaining ones fill the uncovered boxes left to right.

    Args:
        solution: StupSolution
        shift_matrix: shift matrix of the pyramid. Taken from the solution, else left-justified.
        tol: distance allowed between an entry and its rational value
        max_den: largest denominator accepted

    Returns:
        Tableau
    """
    sigma = shift_matrix if shift_matrix is not None else solution.shift_matrix
    pyramid = Pyramid(solution.row_lengths, sigma)
    rows, index_above = [], {}
    for i, a_row in enumerate(solution.rows, start=1):
        first, last = pyramid.row_range[i - 1]
        k = len(a_row) - len(index_above)
        index, free = {}, 0
        for c in range(first, last + 1):
            if c in index_above:
                index[c] = k + index_above[c]
            else:
                index[c] = free
                free += 1
        rows.append([_rational(a_row[index[c]], tol, max_den) - i for c in range(first, last + 1)])
        index_above = index
    return Tableau.from_rows(pyramid, rows, bottom_up=False)


def highest_weight_data(A):
    """
    e_r(a_{i,1}, ..., a_{i,p_i}) for r = 1..p_i, with a_{i,j} the entries of row i shifted by i.

    Returns:
        list over rows (top first) of lists of Fraction
    """
    if not A.is_column_connected():
        raise DomainError(f"highest_weight_data needs a column-connected tableau: {A}")
    u = sp.Symbol("u")
    out = []
    for i, row in enumerate(A.rows(), start=1):
        factors = [u + sp.Rational((x + i).numerator, (x + i).denominator) for x in row]
        coeffs = sp.Poly(sp.prod(factors), u).all_coeffs()
        out.append([Fraction(int(c.p), int(c.q)) for c in coeffs[1:]])
    return out


def theorem_pt_coordinates(A):
    """
    Solver input read off a column-connected tableau: the first p_i - p_{i-1}
    elementary symmetric values of each row.
    """
    data = highest_weight_data(A)
    p = A.pyramid.row_lengths
    values, prev = [], 0
    for pi, e in zip(p, data):
        values.append([complex(float(x)) for x in e[: pi - prev]])
        prev = pi
    return StupInput(p, values, A.pyramid.shift_matrix.to_json())
