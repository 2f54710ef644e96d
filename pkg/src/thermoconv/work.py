"""Work gain and cost of resource transformations.

The optimal ratio x* of a transformation is the exact optimum of a small
linear program; the work itself, -(1/beta) ln x*, is transcendental and is
reported as a high-precision real alongside the exact x*.  Closed forms
cover extraction from a resource, creation of a resource, and erasure; a
constructive lift turns any LP witness into a full Gibbs-preserving
stochastic matrix on the system-plus-weight space, re-verified exactly.
"""

from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .core import ResourceState, trivial_resource
from .ordering import convertible_lp
from .simplex import LinearProgram, LpStatus, solve

_ZERO = Fraction(0)
_ONE = Fraction(1)

_WORK_DPS = 50


def _work_from_ratio(x_star: Fraction, beta: float):
    """-(1/beta) ln(x*) as a high-precision real."""
    if not beta > 0:
        raise ValueError(f"beta must be positive, got {beta}")
    with mpmath.workdps(_WORK_DPS):
        value = -mpmath.log(mpmath.mpf(x_star.numerator) / x_star.denominator) / mpmath.mpf(beta)
    return value


def _column_sums(matrix, ncols):
    return tuple(sum(row[j] for row in matrix) for j in range(ncols))


def _apply(matrix, vec):
    return tuple(sum(a * x for a, x in zip(row, vec)) for row in matrix)


def _validate_witness(x_star, matrix, source, target):
    if x_star <= 0:
        raise ValueError("the optimal ratio must be positive")
    rows = tuple(tuple(Fraction(a) for a in row) for row in matrix)
    if len(rows) != target.n or any(len(r) != source.n for r in rows):
        raise ValueError("witness has the wrong shape")
    if any(a < 0 for row in rows for a in row):
        raise ValueError("witness has a negative entry")
    if _apply(rows, source.p) != target.p:
        raise ValueError("witness does not map p to the target")
    mapped_g = _apply(rows, source.g)
    if any(m > x_star * g2 for m, g2 in zip(mapped_g, target.g)):
        raise ValueError("witness exceeds the ratio bound on the Gibbs vector")
    if any(s > 1 for s in _column_sums(rows, source.n)):
        raise ValueError("witness has a column sum above 1")
    return rows


@dataclass(frozen=True)
class WorkResult:
    """Exact optimal ratio x* with its work equivalent -(1/beta) ln x*.

    ``work_gain`` is nonnegative exactly when x* <= 1; negative values are
    work costs.  ``witness_F`` is a substochastic matrix achieving x*.
    """

    x_star: Fraction
    work_gain: mpmath.mpf
    witness_F: tuple
    beta: float


def _result(x_star, matrix, source, target, beta):
    rows = _validate_witness(x_star, matrix, source, target)
    return WorkResult(
        x_star=Fraction(x_star),
        work_gain=_work_from_ratio(Fraction(x_star), beta),
        witness_F=rows,
        beta=float(beta),
    )


def work_gain_lp(source: ResourceState, target: ResourceState, beta: float = 1.0) -> WorkResult:
    """Optimal transformation ratio via the work linear program.

    Minimizes x over substochastic F >= 0 with F p = p' and F g <= x g'.
    The program is always feasible (F = p' 1^T works at x = max p'_i/g'_i)
    and bounded below by zero, so an optimum always exists.
    """
    n, n2 = source.n, target.n
    nv = 1 + n2 * n  # x first, then F in row-major order
    objective = [_ONE] + [_ZERO] * (n2 * n)

    eq_rows, eq_rhs = [], []
    for i in range(n2):
        row = [_ZERO] * nv
        for j in range(n):
            row[1 + i * n + j] = source.p[j]
        eq_rows.append(row)
        eq_rhs.append(target.p[i])

    le_rows, le_rhs = [], []
    for i in range(n2):
        row = [_ZERO] * nv
        row[0] = -target.g[i]
        for j in range(n):
            row[1 + i * n + j] = source.g[j]
        le_rows.append(row)
        le_rhs.append(_ZERO)
    for j in range(n):
        row = [_ZERO] * nv
        for i in range(n2):
            row[1 + i * n + j] = _ONE
        le_rows.append(row)
        le_rhs.append(_ONE)

    sol = solve(LinearProgram(objective, eq_rows, eq_rhs, le_rows, le_rhs))
    if sol.status is not LpStatus.OPTIMAL:
        raise RuntimeError(f"the work program cannot be {sol.status.value}; this is a bug")
    matrix = tuple(tuple(sol.point[1 + i * n + j] for j in range(n)) for i in range(n2))
    return _result(sol.point[0], matrix, source, target, beta)


def work_value(state: ResourceState, beta: float = 1.0) -> WorkResult:
    """Extractable work of a state: x* = sum of g over the support of p.

    Closed form of the work program against the trivial one-level target;
    the witness is the indicator row of the support.
    """
    support = [p != 0 for p in state.p]
    x_star = sum((g for g, s in zip(state.g, support) if s), _ZERO)
    row = tuple(_ONE if s else _ZERO for s in support)
    return _result(x_star, (row,), state, trivial_resource(), beta)


def work_cost(state: ResourceState, beta: float = 1.0) -> WorkResult:
    """Work needed to create a state: x* = max_i p_i/g_i.

    Closed form of the work program from the trivial one-level source; the
    witness is the column p.  The cost is -work_gain.
    """
    x_star = max(state.ratios())
    column = tuple((p,) for p in state.p)
    return _result(x_star, column, trivial_resource(), state, beta)


def landauer_cost(n_levels: int) -> Fraction:
    """Worst-case erasure ratio on n degenerate levels: x* = n.

    Erasing an arbitrary, unknown distribution to a point mass forces the
    map to send every level to the target, so the target row of F is all
    ones and x >= n against the uniform Gibbs vector.  Per-instance ratios
    for known inputs can be smaller (the support size of the input).
    """
    if not isinstance(n_levels, int) or n_levels < 2:
        raise ValueError(f"erasure needs at least two levels, got {n_levels!r}")
    return Fraction(n_levels)


class LiftThresholdError(ValueError):
    """The requested weight coupling is too strong for a nonnegative lift."""

    def __init__(self, epsilon, threshold):
        self.epsilon = Fraction(epsilon)
        self.threshold = Fraction(threshold)
        super().__init__(
            f"epsilon {self.epsilon} is at or above the lift threshold {self.threshold}"
        )


@dataclass(frozen=True)
class LiftedMap:
    """Block stochastic matrix on the joint system-plus-weight space.

    Rows and columns are ordered weight-ground block first, then
    weight-excited; ``epsilon`` is the weight's Boltzmann factor, ``y`` the
    effective ratio at this finite coupling and ``t`` the scalar filling the
    ground-to-ground block.  Entries are nonnegative with exact unit column
    sums; the action identities are re-verified by the constructor in
    :func:`lift_to_thermal_map`.
    """

    matrix: tuple
    epsilon: Fraction
    y: Fraction
    t: Fraction
    n_in: int
    n_out: int

    def __post_init__(self):
        rows = tuple(tuple(Fraction(a) for a in row) for row in self.matrix)
        object.__setattr__(self, "matrix", rows)
        object.__setattr__(self, "epsilon", Fraction(self.epsilon))
        object.__setattr__(self, "y", Fraction(self.y))
        object.__setattr__(self, "t", Fraction(self.t))
        if len(rows) != 2 * self.n_out or any(len(r) != 2 * self.n_in for r in rows):
            raise ValueError("lift has the wrong shape")
        if any(a < 0 for row in rows for a in row):
            raise ValueError("lift has a negative entry")
        for j in range(2 * self.n_in):
            if sum(row[j] for row in rows) != 1:
                raise ValueError(f"lift column {j} does not sum to 1")

    def block(self, row_excited: bool, col_excited: bool) -> tuple:
        """One of the four weight blocks of the matrix."""
        r0 = self.n_out if row_excited else 0
        c0 = self.n_in if col_excited else 0
        return tuple(row[c0:c0 + self.n_in] for row in self.matrix[r0:r0 + self.n_out])


def lift_is_valid(lifted: LiftedMap, result: WorkResult,
                  source: ResourceState, target: ResourceState) -> bool:
    """Exact re-verification of a lifted map against its work result.

    Checks shape, nonnegativity, unit column sums, the exact action on the
    excited-weight resource vector, the partition-ratio identity
    t + eps * u.g = (1+eps)/(1+eps*y), and the exact action on the joint
    Gibbs vector.
    """
    n, n2 = source.n, target.n
    if lifted.n_in != n or lifted.n_out != n2:
        return False
    eps, y, t = lifted.epsilon, lifted.y, lifted.t
    rows = lifted.matrix
    if any(a < 0 for row in rows for a in row):
        return False
    if any(sum(row[j] for row in rows) != 1 for j in range(2 * n)):
        return False

    resource_in = tuple([_ZERO] * n) + tuple(source.p)
    resource_out = tuple([_ZERO] * n2) + tuple(target.p)
    if _apply(rows, resource_in) != resource_out:
        return False

    u = tuple(1 - s for s in _column_sums(result.witness_F, n))
    z_ratio = (1 + eps) / (1 + eps * y)
    if t + eps * sum(ui * gi for ui, gi in zip(u, source.g)) != z_ratio:
        return False

    gibbs_in = tuple(source.g) + tuple(e * eps for e in source.g)
    gibbs_out = tuple(z_ratio * e for e in target.g) + tuple(
        z_ratio * eps * y * e for e in target.g
    )
    return _apply(rows, gibbs_in) == gibbs_out


def lift_to_thermal_map(result: WorkResult, source: ResourceState,
                        target: ResourceState, epsilon) -> LiftedMap:
    """Lift a work-program witness to a stochastic map on system + weight.

    With x = x*, F the witness, v = x g' - F g and u = 1 - column sums of
    F, the blocks are G11 = t g' 1^T, G12 = g' u^T, G21 = eps v 1^T and
    G22 = F, where t = 1 - eps * sum(v) and y = x / (1 + eps (1 - x)).
    Nonnegativity of t requires eps below 1/sum(v); the error names that
    threshold exactly.  Values of eps at or above 1 correspond to a
    nonpositive weight gap and are accepted whenever the threshold allows,
    since the construction stays valid.
    """
    eps = Fraction(epsilon)
    if eps <= 0:
        raise ValueError(f"epsilon must be positive, got {eps}")
    x = result.x_star
    f_rows = result.witness_F
    n, n2 = source.n, target.n
    if len(f_rows) != n2 or any(len(r) != n for r in f_rows):
        raise ValueError("work result does not match the given states")

    f_on_g = _apply(f_rows, source.g)
    v = tuple(x * g2 - fg for g2, fg in zip(target.g, f_on_g))
    v_total = sum(v)
    if v_total > 0 and eps >= 1 / v_total:
        raise LiftThresholdError(eps, 1 / v_total)
    u = tuple(1 - s for s in _column_sums(f_rows, n))
    t = 1 - eps * v_total
    y = x / (1 + eps * (1 - x))

    top = [
        tuple(t * target.g[i] for _ in range(n)) + tuple(target.g[i] * uj for uj in u)
        for i in range(n2)
    ]
    bottom = [
        tuple(eps * v[i] for _ in range(n)) + tuple(f_rows[i])
        for i in range(n2)
    ]
    lifted = LiftedMap(
        matrix=tuple(top + bottom), epsilon=eps, y=y, t=t, n_in=n, n_out=n2,
    )
    if not lift_is_valid(lifted, result, source, target):
        raise RuntimeError("lift construction failed its own identities; this is a bug")
    return lifted


def work_gain_consistency(source: ResourceState, target: ResourceState) -> bool:
    """Cross-check the work program against convertibility and closed forms.

    True iff convertibility coincides with x* <= 1 and the LP against the
    trivial resource reproduces the work value and work cost exactly.
    """
    result = work_gain_lp(source, target)
    convertible, _ = convertible_lp(source, target)
    if convertible != (result.x_star <= 1):
        return False
    trivial = trivial_resource()
    if work_gain_lp(source, trivial).x_star != work_value(source).x_star:
        return False
    return work_gain_lp(trivial, target).x_star == work_cost(target).x_star
