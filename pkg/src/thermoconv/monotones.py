"""Divergence-style monotones of the thermal order.

Every function of the form sum_i g_i f(p_i/g_i) with convex f is
non-increasing along the convertibility order, which makes the family a
cheap screen: a single increasing monotone rules a transformation out.
Hinge and polynomial choices of f keep the value an exact rational;
logarithmic ones (relative entropy, Renyi) are computed as high-precision
reals.  The reversed relative entropy is +inf when p has a zero entry, and
+inf <= +inf counts as monotone.

Convexity of a caller-supplied f is not verified; the monotonicity
guarantee evaporates for non-convex f.
"""

from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .core import ResourceState

_ZERO = Fraction(0)

_DPS = 50


@dataclass(frozen=True)
class MonotoneValue:
    """A named monotone evaluation; ``value`` is a Fraction, a real, or +inf."""

    name: str
    value: object

    @property
    def is_exact(self) -> bool:
        return isinstance(self.value, Fraction)


def _to_mpf(q: Fraction):
    return mpmath.mpf(q.numerator) / q.denominator


def relative_entropy(state: ResourceState, reversed: bool = False) -> MonotoneValue:
    """D(p||g), or D(g||p) when reversed, in natural log.

    Terms with p_i = 0 contribute 0 to D(p||g); D(g||p) is +inf whenever p
    has a zero entry.
    """
    if reversed:
        if any(p == 0 for p in state.p):
            return MonotoneValue("reversed_relative_entropy", mpmath.inf)
        with mpmath.workdps(_DPS):
            total = mpmath.fsum(
                _to_mpf(g) * mpmath.log(_to_mpf(g / p))
                for p, g in zip(state.p, state.g)
            )
        return MonotoneValue("reversed_relative_entropy", total)
    with mpmath.workdps(_DPS):
        total = mpmath.fsum(
            _to_mpf(p) * mpmath.log(_to_mpf(p / g))
            for p, g in zip(state.p, state.g)
            if p != 0
        )
    return MonotoneValue("relative_entropy", total)


def renyi_divergence(state: ResourceState, alpha) -> MonotoneValue:
    """Renyi divergence of order alpha >= 0, alpha != 1, in natural log.

    D_alpha = ln(sum_i p_i^alpha g_i^(1-alpha)) / (alpha - 1), with terms at
    p_i = 0 dropped (0^0 := 0, so the alpha = 0 sum is the Gibbs mass of the
    support of p).  The 1/(alpha-1) normalization keeps the divergence
    nonnegative and non-increasing along the order for every alpha.
    """
    alpha = Fraction(alpha)
    if alpha < 0 or alpha == 1:
        raise ValueError(f"alpha must be >= 0 and != 1, got {alpha}")
    with mpmath.workdps(_DPS):
        a = _to_mpf(alpha)
        total = mpmath.fsum(
            _to_mpf(p) ** a * _to_mpf(g) ** (1 - a)
            for p, g in zip(state.p, state.g)
            if p != 0
        )
        value = mpmath.log(total) / _to_mpf(alpha - 1)
    return MonotoneValue(f"renyi_{alpha}", value)


def f_divergence(state: ResourceState, f, name: str = "f_divergence",
                 at_zero=None) -> MonotoneValue:
    """sum_i g_i f(p_i/g_i) for a caller-declared convex f.

    ``at_zero`` overrides f at ratio 0 for functions with a pole there
    (pass ``mpmath.inf`` for f like -ln).  Fraction-valued f keeps the
    result exact; an infinite term makes the whole value +inf since every
    g_i is positive.
    """
    total = _ZERO
    for p, g in zip(state.p, state.g):
        ratio = p / g
        fv = at_zero if (ratio == 0 and at_zero is not None) else f(ratio)
        if fv == mpmath.inf:
            return MonotoneValue(name, mpmath.inf)
        total = total + g * fv
    return MonotoneValue(name, total)


def total_variation(state: ResourceState) -> MonotoneValue:
    """Exact total variation distance monotone, f(x) = |x - 1|."""
    return f_divergence(state, lambda x: abs(x - 1), name="total_variation")


def chi_square(state: ResourceState) -> MonotoneValue:
    """Exact chi-square divergence monotone, f(x) = x^2 - 1."""
    return f_divergence(state, lambda x: x * x - 1, name="chi_square")


def standard_monotones(state: ResourceState) -> tuple:
    """The implemented divergence family, in a fixed reporting order."""
    return (
        relative_entropy(state),
        relative_entropy(state, reversed=True),
        renyi_divergence(state, 0),
        renyi_divergence(state, Fraction(1, 2)),
        renyi_divergence(state, 2),
        total_variation(state),
        chi_square(state),
    )
