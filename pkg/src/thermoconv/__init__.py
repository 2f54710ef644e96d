"""Exact convertibility and work cost of quasiclassical thermal resources.

States are pairs of rational probability vectors (occupations and Gibbs
weights); convertibility is decided exactly by four equivalent criteria,
and the work gain or cost of a transformation comes out of an exact
rational linear program with verifiable witnesses.
"""

from .core import (
    Hamiltonian,
    Rational,
    RatioProfile,
    ResourceState,
    decreasing_rearrangement,
    format_rational,
    gibbs_from_hamiltonian,
    make_resource,
    parse_rational,
    ratio_profile,
    trivial_resource,
)
from .monotones import (
    MonotoneValue,
    chi_square,
    f_divergence,
    relative_entropy,
    renyi_divergence,
    standard_monotones,
    total_variation,
)
from .ordering import (
    GibbsStochasticMap,
    LorenzCurve,
    convertible_lp,
    hinge_abs_sum,
    hinge_condition_d,
    hinge_condition_e,
    hinge_plus_sum,
    lorenz_curve,
    lorenz_dominates,
    two_level_kink,
    two_level_state,
)
from .simplex import LinearProgram, LpSolution, LpStatus, check_solution, solve
from .statefile import StateFileError, load_states, parse_states
from .work import (
    LiftedMap,
    LiftThresholdError,
    WorkResult,
    landauer_cost,
    lift_is_valid,
    lift_to_thermal_map,
    work_cost,
    work_gain_consistency,
    work_gain_lp,
    work_value,
)

__version__ = "0.1.0"

__all__ = [
    "Hamiltonian",
    "Rational",
    "RatioProfile",
    "ResourceState",
    "decreasing_rearrangement",
    "format_rational",
    "gibbs_from_hamiltonian",
    "make_resource",
    "parse_rational",
    "ratio_profile",
    "trivial_resource",
    "MonotoneValue",
    "chi_square",
    "f_divergence",
    "relative_entropy",
    "renyi_divergence",
    "standard_monotones",
    "total_variation",
    "GibbsStochasticMap",
    "LorenzCurve",
    "convertible_lp",
    "hinge_abs_sum",
    "hinge_condition_d",
    "hinge_condition_e",
    "hinge_plus_sum",
    "lorenz_curve",
    "lorenz_dominates",
    "two_level_kink",
    "two_level_state",
    "LinearProgram",
    "LpSolution",
    "LpStatus",
    "check_solution",
    "solve",
    "StateFileError",
    "load_states",
    "parse_states",
    "LiftedMap",
    "LiftThresholdError",
    "WorkResult",
    "landauer_cost",
    "lift_is_valid",
    "lift_to_thermal_map",
    "work_cost",
    "work_gain_consistency",
    "work_gain_lp",
    "work_value",
    "__version__",
]
