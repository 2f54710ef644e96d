"""Exact linear programming over rationals.

A dense two-phase simplex with Bland's anti-cycling pivot rule.  Problems
are stated as ``min c.x`` subject to ``A_eq x = b_eq``, ``A_le x <= b_le``
and ``x >= 0``, with every number a :class:`fractions.Fraction`, so
optimality, infeasibility and unboundedness are decided exactly.
Infeasible problems carry a Farkas certificate that
:func:`check_solution` re-verifies by direct multiplication.

The problems solved here are small (a few dozen variables), so a dense
tableau is the right trade: simple, exact, and fast enough.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)

# Bland's rule guarantees termination; the cap only turns an implementation
# bug into a loud failure instead of a hang.
_MAX_PIVOTS = 100_000


class LpStatus(Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


def _matrix(rows, num_vars, what):
    out = []
    for i, row in enumerate(rows):
        row = tuple(Fraction(a) for a in row)
        if len(row) != num_vars:
            raise ValueError(f"{what} row {i} has {len(row)} entries, expected {num_vars}")
        out.append(row)
    return tuple(out)


@dataclass(frozen=True)
class LinearProgram:
    """min objective . x  s.t.  eq_matrix x = eq_rhs, le_matrix x <= le_rhs, x >= 0."""

    objective: tuple
    eq_matrix: tuple = ()
    eq_rhs: tuple = ()
    le_matrix: tuple = ()
    le_rhs: tuple = ()
    num_vars: int = 0

    def __post_init__(self):
        object.__setattr__(self, "objective", tuple(Fraction(c) for c in self.objective))
        n = self.num_vars or len(self.objective)
        object.__setattr__(self, "num_vars", n)
        if len(self.objective) != n:
            raise ValueError(f"objective has {len(self.objective)} entries, expected {n}")
        object.__setattr__(self, "eq_matrix", _matrix(self.eq_matrix, n, "equality"))
        object.__setattr__(self, "le_matrix", _matrix(self.le_matrix, n, "inequality"))
        object.__setattr__(self, "eq_rhs", tuple(Fraction(b) for b in self.eq_rhs))
        object.__setattr__(self, "le_rhs", tuple(Fraction(b) for b in self.le_rhs))
        if len(self.eq_matrix) != len(self.eq_rhs):
            raise ValueError("equality matrix and rhs sizes differ")
        if len(self.le_matrix) != len(self.le_rhs):
            raise ValueError("inequality matrix and rhs sizes differ")


@dataclass(frozen=True)
class LpSolution:
    """Solver verdict: exact optimum and point, or a Farkas certificate.

    The certificate y is indexed like the problem rows (equalities first),
    is nonnegative on inequality rows, and satisfies y.A >= 0 componentwise
    with y.b < 0, which is impossible for a feasible problem.
    """

    status: LpStatus
    optimum: Fraction | None = None
    point: tuple | None = None
    certificate: tuple | None = None


def _pivot(tableau, basis, row, col):
    prow = tableau[row]
    piv = prow[col]
    if piv != 1:
        inv = _ONE / piv
        prow = [a * inv for a in prow]
        tableau[row] = prow
    for i, other in enumerate(tableau):
        if i == row:
            continue
        f = other[col]
        if f:
            tableau[i] = [a - f * b for a, b in zip(other, prow)]
    basis[row] = col


def _bland_min(tableau, basis, num_candidates):
    """Run simplex minimization; entering columns restricted to the first
    ``num_candidates`` columns.  Returns "optimal" or "unbounded"."""
    m = len(tableau) - 1
    rhs = len(tableau[0]) - 1
    for _ in range(_MAX_PIVOTS):
        obj = tableau[m]
        enter = -1
        for j in range(num_candidates):
            if obj[j] < 0:
                enter = j
                break
        if enter < 0:
            return "optimal"
        leave = -1
        best = None
        for i in range(m):
            a = tableau[i][enter]
            if a > 0:
                ratio = tableau[i][rhs] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave < 0:
            return "unbounded"
        _pivot(tableau, basis, leave, enter)
    raise RuntimeError("simplex failed to terminate; this is a bug")


def solve(lp: LinearProgram) -> LpSolution:
    """Solve an exact LP by two-phase simplex with Bland's rule.

    Returns an optimal basic solution, an exact Farkas infeasibility
    certificate, or an unbounded verdict.
    """
    n = lp.num_vars
    num_eq = len(lp.eq_rhs)
    num_le = len(lp.le_rhs)
    m = num_eq + num_le
    n_struct = n + num_le  # original variables plus one slack per <= row

    rows = []
    rhs = []
    for i in range(num_eq):
        rows.append(list(lp.eq_matrix[i]) + [_ZERO] * num_le)
        rhs.append(lp.eq_rhs[i])
    for k in range(num_le):
        row = list(lp.le_matrix[k]) + [_ZERO] * num_le
        row[n + k] = _ONE
        rows.append(row)
        rhs.append(lp.le_rhs[k])
    flip = [_ONE] * m
    for i in range(m):
        if rhs[i] < 0:
            rows[i] = [-a for a in rows[i]]
            rhs[i] = -rhs[i]
            flip[i] = -_ONE

    # Phase 1: minimize the sum of one artificial per row.  Columns are
    # [structural | slack | artificial | rhs]; artificials never re-enter.
    width = n_struct + m + 1
    tableau = []
    for i in range(m):
        row = rows[i] + [_ZERO] * m + [rhs[i]]
        row[n_struct + i] = _ONE
        tableau.append(row)
    basis = [n_struct + i for i in range(m)]
    obj = [_ZERO] * width
    for j in range(n_struct):
        obj[j] = -sum(tableau[i][j] for i in range(m))
    obj[width - 1] = -sum(rhs)
    tableau.append(obj)

    _bland_min(tableau, basis, n_struct)
    residual = -tableau[m][width - 1]
    if residual > 0:
        # Farkas certificate from the phase-1 duals, read off the reduced
        # costs of the artificial columns and mapped back through row flips.
        cert = tuple(
            -(flip[i] * (_ONE - tableau[m][n_struct + i])) for i in range(m)
        )
        return LpSolution(LpStatus.INFEASIBLE, certificate=cert)

    # Pivot leftover artificials out of the basis (their value is zero);
    # rows with no structural pivot available are redundant and dropped.
    keep = []
    for i in range(m):
        if basis[i] >= n_struct:
            col = next((j for j in range(n_struct) if tableau[i][j] != 0), -1)
            if col < 0:
                continue
            _pivot(tableau, basis, i, col)
        keep.append(i)

    # Phase 2 on structural and slack columns only.
    tableau2 = [[tableau[i][j] for j in range(n_struct)] + [tableau[i][width - 1]] for i in keep]
    basis2 = [basis[i] for i in keep]
    cost = list(lp.objective) + [_ZERO] * num_le
    obj2 = [_ZERO] * (n_struct + 1)
    for j in range(n_struct):
        obj2[j] = cost[j] - sum(cost[basis2[i]] * tableau2[i][j] for i in range(len(keep)))
    obj2[n_struct] = -sum(cost[basis2[i]] * tableau2[i][n_struct] for i in range(len(keep)))
    tableau2.append(obj2)

    if _bland_min(tableau2, basis2, n_struct) == "unbounded":
        return LpSolution(LpStatus.UNBOUNDED)

    values = [_ZERO] * n_struct
    for i, b in enumerate(basis2):
        values[b] = tableau2[i][n_struct]
    point = tuple(values[:n])
    optimum = sum(c * x for c, x in zip(lp.objective, point))
    return LpSolution(LpStatus.OPTIMAL, optimum=optimum, point=point)


def _dot(row, x):
    return sum(a * b for a, b in zip(row, x))


def check_solution(lp: LinearProgram, sol: LpSolution) -> bool:
    """Re-verify an optimal point or an infeasibility certificate exactly.

    Any violation, however small, fails: the arithmetic is exact, so there
    is nothing to tolerate.
    """
    if sol.status is LpStatus.OPTIMAL:
        x = sol.point
        if x is None or sol.optimum is None or len(x) != lp.num_vars:
            return False
        if any(xi < 0 for xi in x):
            return False
        for row, b in zip(lp.eq_matrix, lp.eq_rhs):
            if _dot(row, x) != b:
                return False
        for row, b in zip(lp.le_matrix, lp.le_rhs):
            if _dot(row, x) > b:
                return False
        return _dot(lp.objective, x) == sol.optimum
    if sol.status is LpStatus.INFEASIBLE:
        y = sol.certificate
        num_eq = len(lp.eq_rhs)
        if y is None or len(y) != num_eq + len(lp.le_rhs):
            return False
        if any(yi < 0 for yi in y[num_eq:]):
            return False
        for j in range(lp.num_vars):
            col = sum(y[i] * lp.eq_matrix[i][j] for i in range(num_eq))
            col += sum(y[num_eq + k] * lp.le_matrix[k][j] for k in range(len(lp.le_rhs)))
            if col < 0:
                return False
        total = sum(yi * bi for yi, bi in zip(y, tuple(lp.eq_rhs) + tuple(lp.le_rhs)))
        return total < 0
    raise ValueError(f"nothing to check for a solution with status {sol.status}")
