"""Brute-force LP reference: exhaustive basic-solution enumeration.

Independent of the simplex engine on purpose.  The problem is put in
standard form (slacks appended), every column subset of size at most the
row count is solved exactly by Gaussian elimination, and nonnegative
consistent solutions are collected.  Feasibility, the optimum (attained at
some basic feasible point when not unbounded) and unboundedness (a
normalized recession direction with negative cost, itself found by the
same enumeration on the homogeneous system) are all decided by
enumeration alone.
"""

from fractions import Fraction
from itertools import combinations


def _standardize(lp):
    n = lp.num_vars
    num_le = len(lp.le_rhs)
    rows = []
    rhs = []
    for row, b in zip(lp.eq_matrix, lp.eq_rhs):
        rows.append(list(row) + [Fraction(0)] * num_le)
        rhs.append(b)
    for k, (row, b) in enumerate(zip(lp.le_matrix, lp.le_rhs)):
        slack = [Fraction(0)] * num_le
        slack[k] = Fraction(1)
        rows.append(list(row) + slack)
        rhs.append(b)
    cost = list(lp.objective) + [Fraction(0)] * num_le
    return rows, rhs, cost


def _solve_exact(rows, rhs, cols):
    """Solve the overdetermined system A[:, cols] x = rhs exactly.

    Returns the unique solution when the chosen columns are independent
    and the system is consistent, else None.
    """
    m = len(rows)
    k = len(cols)
    aug = [[rows[i][j] for j in cols] + [rhs[i]] for i in range(m)]
    pivots = []
    r = 0
    for c in range(k):
        pivot = next((i for i in range(r, m) if aug[i][c] != 0), -1)
        if pivot < 0:
            return None  # dependent columns; covered by a smaller subset
        aug[r], aug[pivot] = aug[pivot], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [a * inv for a in aug[r]]
        for i in range(m):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    for i in range(r, m):
        if aug[i][k] != 0:
            return None  # inconsistent
    return [aug[i][k] for i in range(k)]


def _basic_feasible_points(rows, rhs, ncols):
    m = len(rows)
    points = []
    for size in range(min(m, ncols) + 1):
        for cols in combinations(range(ncols), size):
            sol = _solve_exact(rows, rhs, cols)
            if sol is None or any(v < 0 for v in sol):
                continue
            full = [Fraction(0)] * ncols
            for j, v in zip(cols, sol):
                full[j] = v
            points.append(full)
    return points


def brute_force_solve(lp):
    """Return ("infeasible", None), ("unbounded", None) or ("optimal", value)."""
    rows, rhs, cost = _standardize(lp)
    ncols = len(cost)
    points = _basic_feasible_points(rows, rhs, ncols)
    if not points:
        return "infeasible", None
    hom_rows = rows + [[Fraction(1)] * ncols]
    hom_rhs = [Fraction(0)] * len(rows) + [Fraction(1)]
    rays = _basic_feasible_points(hom_rows, hom_rhs, ncols)
    if any(sum(c * d for c, d in zip(cost, ray)) < 0 for ray in rays):
        return "unbounded", None
    return "optimal", min(sum(c * x for c, x in zip(cost, pt)) for pt in points)
