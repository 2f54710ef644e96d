"""Convertibility of thermal resources.

Whether one quasiclassical resource can reach another under
Gibbs-preserving stochastic maps is decided four equivalent ways: by exact
LP feasibility of the defining linear system, by nesting of relative
Lorenz curves, and by two families of hinge inequalities evaluated at
their finitely many breakpoints.  The four deciders are implemented
independently; the test suite and the CLI treat any disagreement between
them as an internal error.
"""

from dataclasses import dataclass
from fractions import Fraction

from .core import ResourceState, decreasing_rearrangement, make_resource
from .simplex import LinearProgram, LpStatus, solve

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class LorenzCurve:
    """Piecewise-linear relative Lorenz curve as breakpoints (t, L).

    Breakpoints run from (0,0) to (1,1) with strictly increasing t,
    non-decreasing L and non-increasing slopes; interior collinear points
    are merged on construction.
    """

    points: tuple

    def __post_init__(self):
        pts = tuple((Fraction(t), Fraction(v)) for t, v in self.points)
        object.__setattr__(self, "points", pts)
        if len(pts) < 2 or pts[0] != (0, 0) or pts[-1] != (1, 1):
            raise ValueError("curve must run from (0,0) to (1,1)")
        prev_slope = None
        for (t0, v0), (t1, v1) in zip(pts, pts[1:]):
            if t1 <= t0:
                raise ValueError("breakpoint abscissae must be strictly increasing")
            if v1 < v0:
                raise ValueError("curve values must be non-decreasing")
            slope = (v1 - v0) / (t1 - t0)
            if prev_slope is not None and slope > prev_slope:
                raise ValueError("curve must be concave")
            prev_slope = slope

    @property
    def kink_count(self) -> int:
        return len(self.points) - 2

    def value_at(self, t) -> Fraction:
        """Exact curve value at abscissa t in [0, 1]."""
        t = Fraction(t)
        if not 0 <= t <= 1:
            raise ValueError(f"abscissa {t} outside [0, 1]")
        for (t0, v0), (t1, v1) in zip(self.points, self.points[1:]):
            if t <= t1:
                return v0 + (v1 - v0) * (t - t0) / (t1 - t0)
        return self.points[-1][1]


@dataclass(frozen=True)
class GibbsStochasticMap:
    """A column-stochastic rational matrix (every column sums to one).

    Witnesses returned by :func:`convertible_lp` additionally map the source
    p to the target p and the source Gibbs vector to the target one, which
    :meth:`transforms` re-checks exactly.
    """

    matrix: tuple

    def __post_init__(self):
        rows = tuple(tuple(Fraction(a) for a in row) for row in self.matrix)
        object.__setattr__(self, "matrix", rows)
        if not rows or not rows[0]:
            raise ValueError("empty matrix")
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged matrix")
        if any(a < 0 for row in rows for a in row):
            raise ValueError("negative entry")
        for j in range(ncols):
            if sum(row[j] for row in rows) != 1:
                raise ValueError(f"column {j} does not sum to 1")

    @property
    def shape(self) -> tuple:
        return (len(self.matrix), len(self.matrix[0]))

    def apply(self, vec) -> tuple:
        if len(vec) != self.shape[1]:
            raise ValueError("dimension mismatch")
        return tuple(sum(a * x for a, x in zip(row, vec)) for row in self.matrix)

    def compose(self, inner: "GibbsStochasticMap") -> "GibbsStochasticMap":
        """Matrix product self @ inner; stochasticity is preserved."""
        if self.shape[1] != inner.shape[0]:
            raise ValueError("dimension mismatch")
        cols = list(zip(*inner.matrix))
        product = tuple(
            tuple(sum(a * b for a, b in zip(row, col)) for col in cols)
            for row in self.matrix
        )
        return GibbsStochasticMap(product)

    def transforms(self, source: ResourceState, target: ResourceState) -> bool:
        """True iff the map sends (source.p, source.g) to (target.p, target.g)."""
        if self.shape != (target.n, source.n):
            return False
        return self.apply(source.p) == target.p and self.apply(source.g) == target.g


def lorenz_curve(state: ResourceState) -> LorenzCurve:
    """Relative Lorenz curve: partial sums of (g, p) in ratio-sorted order.

    Equal-ratio levels produce collinear partial sums; the step merge in
    the rearrangement already collapses them, so the curve is independent
    of how ties are ordered and carries no collinear interior breakpoints.
    """
    points = [(_ZERO, _ZERO)]
    t = v = _ZERO
    for width, value in decreasing_rearrangement(state):
        t += width
        v += width * value
        points.append((t, v))
    return LorenzCurve(tuple(points))


def lorenz_dominates(a: LorenzCurve, b: LorenzCurve) -> bool:
    """True iff a(t) >= b(t) on all of [0, 1].

    Both curves are piecewise linear, so checking the union of their
    breakpoint abscissae is exact.
    """
    grid = sorted({t for t, _ in a.points} | {t for t, _ in b.points})
    return all(a.value_at(t) >= b.value_at(t) for t in grid)


def convertible_lp(source: ResourceState, target: ResourceState):
    """Decide convertibility by exact feasibility of the defining system.

    Searches for a column-stochastic G >= 0 with G p = p' and G g = g'
    (dimensions may differ).  Returns ``(True, witness)`` or
    ``(False, None)``.
    """
    n, n2 = source.n, target.n
    nv = n2 * n
    eq_rows = []
    eq_rhs = []
    for i in range(n2):
        row = [_ZERO] * nv
        for j in range(n):
            row[i * n + j] = source.p[j]
        eq_rows.append(row)
        eq_rhs.append(target.p[i])
    for i in range(n2):
        row = [_ZERO] * nv
        for j in range(n):
            row[i * n + j] = source.g[j]
        eq_rows.append(row)
        eq_rhs.append(target.g[i])
    for j in range(n):
        row = [_ZERO] * nv
        for i in range(n2):
            row[i * n + j] = _ONE
        eq_rows.append(row)
        eq_rhs.append(_ONE)

    lp = LinearProgram(objective=[_ZERO] * nv, eq_matrix=eq_rows, eq_rhs=eq_rhs)
    sol = solve(lp)
    if sol.status is not LpStatus.OPTIMAL:
        return False, None
    matrix = tuple(tuple(sol.point[i * n + j] for j in range(n)) for i in range(n2))
    return True, GibbsStochasticMap(matrix)


def hinge_plus_sum(state: ResourceState, t) -> Fraction:
    """sum_i g_i * max(r_i - t, 0) at hinge position t, exactly."""
    t = Fraction(t)
    return sum((g * (r - t) for g, r in zip(state.g, state.ratios()) if r > t), _ZERO)


def hinge_abs_sum(state: ResourceState, t) -> Fraction:
    """sum_i g_i * |r_i - t| at hinge position t, exactly."""
    t = Fraction(t)
    return sum((g * abs(r - t) for g, r in zip(state.g, state.ratios())), _ZERO)


def _hinge_breakpoints(source: ResourceState, target: ResourceState):
    return sorted({_ZERO} | set(source.ratios()) | set(target.ratios()))


def hinge_condition_d(source: ResourceState, target: ResourceState) -> bool:
    """Hinge criterion with (.)_+: target sums never exceed source sums.

    Both sides are piecewise-linear convex in t and agree for t <= 0 and
    t beyond the largest ratio, so the finite set of ratio breakpoints
    decides the inequality for every real t.
    """
    return all(
        hinge_plus_sum(target, t) <= hinge_plus_sum(source, t)
        for t in _hinge_breakpoints(source, target)
    )


def hinge_condition_e(source: ResourceState, target: ResourceState) -> bool:
    """Hinge criterion with |.|; same breakpoint argument as hinge_condition_d."""
    return all(
        hinge_abs_sum(target, t) <= hinge_abs_sum(source, t)
        for t in _hinge_breakpoints(source, target)
    )


def two_level_state(gibbs_ratio, state_ratio) -> ResourceState:
    """Two-level resource from excited/ground population ratios.

    ``gibbs_ratio`` is the Boltzmann factor e^(-beta*E) of the background;
    ``state_ratio`` plays the same role for the state itself, which for two
    levels can always be read as a Gibbs state at some other (possibly
    negative or infinite) temperature.  ``state_ratio`` 0 is the ground
    state; values above 1 are population inversions.
    """
    a = Fraction(gibbs_ratio)
    b = Fraction(state_ratio)
    if a <= 0:
        raise ValueError("the background Boltzmann factor must be positive")
    if b < 0:
        raise ValueError("the state population ratio cannot be negative")
    return make_resource(
        (1 / (1 + b), b / (1 + b)),
        (1 / (1 + a), a / (1 + a)),
    )


def two_level_kink(gibbs_ratio, state_ratio) -> tuple:
    """Closed-form kink of the two-level Lorenz curve.

    For a state colder than the background (``state_ratio < gibbs_ratio``,
    including the ground state at ratio 0) the kink is at
    ``(1/(1+a), 1/(1+b))``; the hotter and population-inverted cases use the
    reflected form with both ratios inverted.  A state equal to the Gibbs
    state has a flat curve and no kink, which is an error here.
    """
    a = Fraction(gibbs_ratio)
    b = Fraction(state_ratio)
    if a <= 0:
        raise ValueError("the background Boltzmann factor must be positive")
    if b < 0:
        raise ValueError("the state population ratio cannot be negative")
    if a == b:
        raise ValueError("the state is the Gibbs state; its Lorenz curve has no kink")
    if b < a:
        return (1 / (1 + a), 1 / (1 + b))
    return (1 / (1 + 1 / a), 1 / (1 + 1 / b))
