"""Exact resource states and Gibbs distributions.

All probabilities are :class:`fractions.Fraction` values, so the order and
feasibility questions asked downstream (curve nesting, LP feasibility) are
decided exactly rather than up to floating-point noise.  Hamiltonians carry
real-valued energies; their Gibbs weights are rationalized once, at a
declared precision, and treated as exact data from then on.

Energies and inverse temperature enter only through the dimensionless
products ``beta * E_i``; no unit system is imposed.
"""

import re
from dataclasses import dataclass
from fractions import Fraction

import mpmath

Rational = Fraction

_RATIONAL_RE = re.compile(r"^[+-]?[0-9]+(/[0-9]+)?$")


def parse_rational(text: str) -> Fraction:
    """Parse ``"a/b"`` or ``"a"`` (optional leading sign) into a Fraction.

    Only plain integer/fraction literals are accepted; decimal or scientific
    notation is rejected so that every accepted literal is exact by
    construction.
    """
    s = text.strip()
    if not _RATIONAL_RE.match(s):
        raise ValueError(f"invalid rational literal {text!r}")
    try:
        return Fraction(s)
    except ZeroDivisionError:
        raise ValueError(f"invalid rational literal {text!r}: zero denominator") from None


def format_rational(value) -> str:
    """Render a rational as ``a/b`` (or ``a`` for integers); re-parses exactly."""
    return str(Fraction(value))


def _as_rational_vector(values, what: str) -> tuple:
    out = []
    for i, v in enumerate(values):
        if isinstance(v, str):
            v = parse_rational(v)
        elif isinstance(v, float):
            raise TypeError(f"{what}[{i}]: floats are not exact; pass a Fraction or a string")
        out.append(Fraction(v))
    return tuple(out)


@dataclass(frozen=True)
class ResourceState:
    """A quasiclassical thermal resource.

    ``p`` holds the occupation probabilities of the system's levels and
    ``g`` the Gibbs probabilities of the same levels at the background
    temperature.  Entries of ``p`` may be zero, entries of ``g`` may not:
    everything downstream divides by them.
    """

    p: tuple
    g: tuple
    label: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "p", _as_rational_vector(self.p, "p"))
        object.__setattr__(self, "g", _as_rational_vector(self.g, "g"))
        if len(self.p) != len(self.g):
            raise ValueError(f"p has {len(self.p)} entries but g has {len(self.g)}")
        if len(self.p) == 0:
            raise ValueError("a resource needs at least one level")
        if any(x < 0 for x in self.p):
            raise ValueError("p has a negative entry")
        if sum(self.p) != 1:
            raise ValueError(f"p sums to {sum(self.p)}, not 1")
        if any(x <= 0 for x in self.g):
            raise ValueError("g must be strictly positive (zero Gibbs weight)")
        if sum(self.g) != 1:
            raise ValueError(f"g sums to {sum(self.g)}, not 1")

    @property
    def n(self) -> int:
        return len(self.p)

    def ratios(self) -> tuple:
        """The level-wise ratios p_i / g_i, in original index order."""
        return tuple(pi / gi for pi, gi in zip(self.p, self.g))


def make_resource(p, g, label: str | None = None) -> ResourceState:
    """Validate and build a :class:`ResourceState` from rational vectors."""
    return ResourceState(tuple(p), tuple(g), label)


def trivial_resource() -> ResourceState:
    """The one-level resource p = g = (1); the unit for work value/cost."""
    return ResourceState((Fraction(1),), (Fraction(1),), label="trivial")


@dataclass(frozen=True)
class Hamiltonian:
    """Energy levels with an inverse temperature.

    ``precision`` bounds the denominator (``10**precision``) used when the
    Gibbs weights are rationalized; after that single rounding step the
    weights are exact data.
    """

    levels: tuple
    beta: float
    precision: int = 12

    def __post_init__(self):
        object.__setattr__(self, "levels", tuple(float(e) for e in self.levels))
        if len(self.levels) == 0:
            raise ValueError("a Hamiltonian needs at least one level")
        if not self.beta > 0:
            raise ValueError(f"beta must be positive, got {self.beta}")
        if self.precision < 1:
            raise ValueError(f"precision must be a positive integer, got {self.precision}")


def gibbs_from_hamiltonian(h: Hamiltonian) -> tuple:
    """Rationalized Gibbs weights e^(-beta*E_i) / Z for a Hamiltonian.

    Weights are evaluated in high-precision real arithmetic, converted to
    the best rational approximation with denominator at most
    ``10**h.precision``, then renormalized exactly to sum 1 by adjusting the
    largest entry (first one on ties).  Raises if the requested precision is
    so low that a weight collapses to zero.
    """
    bound = 10 ** h.precision
    scale = 10 ** (h.precision + 6)
    with mpmath.workdps(h.precision + 25):
        raw = [mpmath.exp(-mpmath.mpf(h.beta) * mpmath.mpf(e)) for e in h.levels]
        z = mpmath.fsum(raw)
        weights = [
            Fraction(int(mpmath.nint(w / z * scale)), scale).limit_denominator(bound)
            for w in raw
        ]
    if any(w <= 0 for w in weights):
        raise ValueError(
            f"precision {h.precision} is too low: a Gibbs weight rationalized to zero"
        )
    deficit = 1 - sum(weights)
    if deficit:
        k = weights.index(max(weights))
        weights[k] += deficit
        if weights[k] <= 0:
            raise ValueError(
                f"precision {h.precision} is too low: renormalization emptied a weight"
            )
    return tuple(weights)


@dataclass(frozen=True)
class RatioProfile:
    """Level ratios r_i = p_i / g_i with the permutation sorting them.

    ``permutation[k]`` is the index of the k-th largest ratio; ties keep
    ascending original index, a canonical choice that leaves every derived
    curve unchanged.
    """

    ratios: tuple
    weights: tuple
    permutation: tuple

    def sorted_pairs(self) -> tuple:
        """(weight, ratio) pairs in non-increasing ratio order."""
        return tuple((self.weights[i], self.ratios[i]) for i in self.permutation)


def ratio_profile(state: ResourceState) -> RatioProfile:
    """Exact ratios p_i/g_i and the permutation sorting them non-increasingly."""
    ratios = state.ratios()
    order = sorted(range(state.n), key=lambda i: (-ratios[i], i))
    return RatioProfile(ratios=ratios, weights=state.g, permutation=tuple(order))


def decreasing_rearrangement(state: ResourceState) -> tuple:
    """The ratio step function of a state as (width, value) steps.

    Steps carry the Gibbs weights as widths and the ratios as values, sorted
    non-increasingly; adjacent equal-value steps are merged.  Widths sum to
    1 and the integral sum(width * value) reconstructs sum(p) = 1.
    """
    steps = []
    for width, value in ratio_profile(state).sorted_pairs():
        if steps and steps[-1][1] == value:
            steps[-1] = (steps[-1][0] + width, value)
        else:
            steps.append((width, value))
    return tuple(steps)
