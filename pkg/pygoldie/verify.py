"""
Verification suites: each suite checks one theorem on every case of a given
size and returns a result dict with the number of checked cases and the
serialized counterexamples.
"""

import itertools
from fractions import Fraction

import numpy as np
import scipy.special as spsp

from . import rs
from . import symgroup as sg
from . import weights as wt
from . import polynomials as poly
from . import onedim
from .goldie import enumerate_column_strict
from .kl import singular_inv_mult
from .tableaux import Pyramid, Tableau, partitions, q_pi
from .errors import GoldieError


def _result(suite, n, checked, failures, **info):
    return {"suite": suite, "n": n, "checked": checked, "failures": failures, "passed": not failures, "info": info}


def pyramids(partition):
    """
    All pyramids whose rows have the lengths of a partition.
    """
    p = tuple(reversed(partition.parts))
    n = len(p)
    out = []
    for ups in itertools.product(*(range(p[i + 1] - p[i] + 1) for i in range(n - 1))):
        s = [[0] * n for _ in range(n)]
        for i, up in enumerate(ups):
            s[i][i + 1] = up
            s[i + 1][i] = p[i + 1] - p[i] - up
        for i in range(n):
            for j in range(i + 2, n):
                s[i][j] = s[i][j - 1] + s[j - 1][j]
                s[j][i] = s[j - 1][i] + s[j][j - 1]
        out.append(Pyramid(p, s))
    return out


def random_pyramid(rng, n_rows, max_len):
    p = sorted(int(x) for x in rng.integers(1, max_len + 1, size=n_rows))
    candidates = pyramids(Pyramid(p).partition)
    return candidates[int(rng.integers(len(candidates)))]


def random_connected_tableau(rng, pyramid, denominators=(1, 2)):
    """
    Column-connected tableau on a pyramid with random rational column bottoms.
    """
    entries = []
    for c, h in enumerate(pyramid.col_heights, start=1):
        bottom = Fraction(int(rng.integers(-4, 5)), int(rng.choice(denominators)))
        entries.extend(bottom + h - 1 - r for r in range(h))
    return Tableau(pyramid, entries)


def column_strict_tableaux(pyramid, values):
    """
    Column-strict tableaux on a pyramid with entries drawn from values.
    """
    for content in itertools.combinations_with_replacement(values, pyramid.n_boxes):
        yield from enumerate_column_strict(pyramid, content)


def suite_moeglin(model, n):
    failures, checked = [], 0
    for coords in itertools.product((1, 2, 3), repeat=n):
        alpha = wt.Weight(coords)
        checked += 1
        try:
            report = model.goldie_rank(alpha)
        except GoldieError as e:
            failures.append({"alpha": alpha.to_json(), "error": str(e)})
            continue
        if report.completely_prime and (report.induced is None or report.induced["dim_F"] != 1):
            failures.append({"alpha": alpha.to_json(), "report": report.to_json()})
    return _result("moeglin", n, checked, failures)


def suite_one(model, n):
    failures, checked = [], 0
    for cell in rs.left_cells(n):
        alpha, value = model.theorem_one_witness(cell.minimal)
        checked += 1
        if value != 1:
            failures.append({"w": cell.minimal.to_json(), "alpha": alpha.to_json(), "value": str(value)})
    return _result("one", n, checked, failures)


def suite_myg(model, n):
    failures, checked, skipped = [], 0, []
    for cell in rs.left_cells(n):
        A = cell.Q.find_row_equivalent("column_separated")
        if A is None:
            skipped.append(cell.Q.to_json())
            continue
        checked += 1
        lhs = model.goldie_poly_bform(cell.minimal)
        rhs = model.goldie_poly_product(A)
        if lhs != rhs:
            failures.append({"w": cell.minimal.to_json(), "bform": lhs.render(), "product": rhs.render()})
    return _result("myg", n, checked, failures, not_separated=skipped)


def suite_maing(model, n):
    failures, checked = [], 0
    for lam in partitions(n):
        pyr = Pyramid.left_justified(lam)
        for A in column_strict_tableaux(pyr, range(1, n + 1)):
            checked += 1
            delta, d = wt.antidominant_conjugate(A.gamma())
            lhs = model.goldie_poly_pi(d, pyr).evaluate(delta)
            rhs = model.dimension_sum(A)
            if lhs != rhs or (rhs != 0 and not A.is_semi_standard()):
                failures.append({"A": A.to_json(), "poly_pi": str(lhs), "dimension_sum": rhs})
    return _result("maing", n, checked, failures)


def suite_inverse(model, n):
    table = model.kl_table(n)
    failures, checked = [], 0
    perms = table.perms
    M = np.array([[table.mult(x, y) for y in perms] for x in perms], dtype=np.int64)
    L = np.array([[table.inv_mult(x, y) for y in perms] for x in perms], dtype=np.int64)
    checked += 1
    if not np.array_equal(M @ L, np.eye(len(perms), dtype=np.int64)):
        failures.append({"block": "regular"})
    for size in range(1, n + 1):
        for blocks in _compositions(n, size):
            shape = sg.ParabolicShape(blocks)
            delta = wt.Weight(itertools.chain.from_iterable([k] * b for k, b in enumerate(blocks, start=1)))
            reps = sg.min_coset_reps(shape)
            orbit = [wt.act(d, delta) for d in reps]
            Ms = np.array([[table.mult(x, y) for y in reps] for x in reps], dtype=np.int64)
            Ls = np.array([[singular_inv_mult(table, a, b) for b in orbit] for a in orbit], dtype=np.int64)
            checked += 1
            if not np.array_equal(Ls @ Ms, np.eye(len(reps), dtype=np.int64)):
                failures.append({"block": delta.to_json()})
    return _result("inverse", n, checked, failures)


def _compositions(n, size):
    for cuts in itertools.combinations(range(1, n), size - 1):
        bounds = (0,) + cuts + (n,)
        yield tuple(b - a for a, b in zip(bounds, bounds[1:]))


def suite_rs(model, n, values=(1, 2, 3, 4)):
    failures, checked = [], 0
    perms = sg.all_permutations(n)
    pairs = {(rs.rs_pair(w).P, rs.rs_pair(w).Q) for w in perms}
    f_squares = sum(len(rs.standard_tableaux(lam)) ** 2 for lam in partitions(n))
    checked += 1
    if len(pairs) != len(perms) or f_squares != spsp.factorial(n, exact=True):
        failures.append({"check": "bijection", "pairs": len(pairs), "sum_f2": f_squares})
    for w in perms:
        checked += 1
        pair = rs.rs_pair(w)
        if pair.Q != rs.rs_pair(w.inverse()).P or rs.q_of_weight(rs.negated_rho_action(w)) != pair.Q:
            failures.append({"check": "recording", "w": w.to_json()})
    deltas = sorted({tuple(sorted(c)) for c in itertools.product((1, 2, 3), repeat=n)})
    for w in perms:
        if not rs.is_minimal_in_cell(w):
            continue
        for delta in deltas:
            alpha = wt.act(w, wt.Weight(delta))
            if not wt.upper_closure_contains(w, alpha):
                continue
            checked += 1
            if rs.q_of_weight(alpha).gamma() != alpha:
                failures.append({"check": "minimal", "w": w.to_json(), "alpha": alpha.to_json()})
    for lam in partitions(n):
        for pyr in pyramids(lam):
            for A in column_strict_tableaux(pyr, values):
                checked += 1
                read = A.rho_read()
                q = rs.q_of_weight(read)
                if q.pyramid.partition != lam:
                    failures.append({"check": "tr-shape", "A": A.to_json()})
                    continue
                if not A.row_equivalent(q_pi(read, pyr)):
                    failures.append({"check": "tr", "A": A.to_json()})
                if pyr.is_left_justified() and A.is_semi_standard() != A.is_row_standard():
                    failures.append({"check": "semi-standard", "A": A.to_json()})
    return _result("rs", n, checked, failures)


def suite_red(model, n):
    failures, checked = [], 0
    values = (Fraction(0), Fraction(1), Fraction(2), Fraction(1, 2), Fraction(3, 2))
    for coords in itertools.product(values, repeat=n):
        alpha = wt.Weight(coords)
        split = wt.coset_split(alpha)
        if len(split.parts) < 2:
            continue
        dims = []
        for part in split.parts:
            A = rs.q_of_weight(part.weight).find_row_equivalent("column_separated")
            if A is None:
                break
            dims.append(poly.h_lambda(A.pyramid.partition, A.n).evaluate(A.gamma()))
        else:
            checked += 1
            try:
                total = model.goldie_rank(alpha).total
            except GoldieError as e:
                failures.append({"alpha": alpha.to_json(), "error": str(e)})
                continue
            expected = 1
            for d in dims:
                expected *= d
            if total != expected:
                failures.append({"alpha": alpha.to_json(), "total": total, "sep": str(expected)})
    return _result("red", n, checked, failures)


def suite_stup(model, n, n_cases=100, seed=12345, tol=1e-8):
    rng = np.random.default_rng(seed)
    failures, checked = [], 0
    for _ in range(n_cases):
        n_rows = int(rng.integers(1, min(n, 4) + 1))
        p = sorted(int(x) for x in rng.integers(1, 6, size=n_rows))
        values, prev = [], 0
        for pi in p:
            k = pi - prev
            radius, angle = rng.uniform(0, 1, size=k), rng.uniform(0, 2 * np.pi, size=k)
            values.append(list(radius * np.exp(1j * angle)))
            prev = pi
        inp = onedim.StupInput(p, values)
        checked += 1
        try:
            sol = onedim.stup_solve(inp, tol=tol)
        except GoldieError as e:
            failures.append({"input": inp.to_json(), "error": str(e)})
            continue
        for i in range(1, len(p)):
            k = p[i] - p[i - 1]
            if not np.array_equal(sol.rows[i][k:], sol.rows[i - 1]):
                failures.append({"input": inp.to_json(), "error": f"copied entries differ in row {i + 1}"})
    for _ in range(n_cases):
        pyr = random_pyramid(rng, int(rng.integers(1, min(n, 4) + 1)), 5)
        A = random_connected_tableau(rng, pyr)
        checked += 1
        try:
            sol = onedim.stup_solve(onedim.theorem_pt_coordinates(A), tol=1e-6)
            B = onedim.connected_tableau_of(sol)
        except GoldieError as e:
            failures.append({"A": A.to_json(), "error": str(e)})
            continue
        if not B.row_equivalent(A) or not B.is_column_connected():
            failures.append({"A": A.to_json(), "B": B.to_json()})
    return _result("stup", n, checked, failures)


def suite_cells(model, n, n_samples=50, seed=2024):
    """
    Cell constancy of the dimension polynomials: within a left cell of shape
    lambda, every member lying in D^lambda has p^pi_w equal to the cell's
    Goldie rank polynomial (pi left-justified of shape lambda). Members
    outside D^lambda are counted but not compared. For N > 4 a seeded
    sample of n_samples eligible members is compared, or all of them if
    there are fewer.
    """
    rng = np.random.default_rng(seed)
    failures, outside, pairs = [], 0, []
    for cell in rs.left_cells(n):
        pyr = Pyramid.left_justified(cell.shape)
        reps = set(sg.max_coset_reps(sg.ParabolicShape(pyr.col_heights)))
        members = [w for w in cell.members if w in reps]
        outside += len(cell.members) - len(members)
        pairs.extend((cell, pyr, w) for w in members)
    if n > 4 and len(pairs) > n_samples:
        picks = sorted(int(k) for k in rng.choice(len(pairs), size=n_samples, replace=False))
        pairs = [pairs[k] for k in picks]
    for cell, pyr, w in pairs:
        p = model.goldie_poly_pi(w, pyr)
        target = model.goldie_poly_bform(cell.minimal)
        if p != target:
            failures.append({"w": w.to_json(), "poly_pi": p.render(), "goldie": target.render()})
    checked = len(pairs)
    return _result("cells", n, checked, failures, members_outside_max_reps=outside)


SUITES = {
    "moeglin": suite_moeglin,
    "one": suite_one,
    "myg": suite_myg,
    "maing": suite_maing,
    "inverse": suite_inverse,
    "rs": suite_rs,
    "red": suite_red,
    "stup": suite_stup,
    "cells": suite_cells,
}


def run_suite(model, suite, n):
    if suite not in SUITES:
        raise ValueError(f"Unknown suite: {suite}")
    return SUITES[suite](model, n)
