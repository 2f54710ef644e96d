"""Command-line surface for convertibility, work and curve reports.

Exit codes: 0 on success (and "convertible" for ``check``), 2 on input
errors, 3 when ``check`` finds the transformation impossible, 4 if the
independent convertibility criteria ever disagree (a bug trap).  All
output is deterministic: the same inputs and flags produce byte-identical
text, and every exact rational printed parses back to the same value.
"""

import sys
from fractions import Fraction

import click

from .core import Hamiltonian, gibbs_from_hamiltonian, parse_rational
from .monotones import standard_monotones
from .ordering import (
    convertible_lp,
    hinge_condition_d,
    hinge_condition_e,
    lorenz_curve,
    lorenz_dominates,
)
from .statefile import StateFileError, load_states
from .work import LiftThresholdError, lift_is_valid, lift_to_thermal_map, work_gain_lp

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_NOT_CONVERTIBLE = 3
EXIT_DISAGREEMENT = 4


def _fail(message: str) -> "SystemExit":
    click.echo(f"error: {message}", err=True)
    return SystemExit(EXIT_INPUT)


def _load(path) -> dict:
    try:
        return load_states(path)
    except StateFileError as exc:
        raise _fail(str(exc)) from None


def _pick(states: dict, name: str):
    if name not in states:
        known = ", ".join(sorted(states)) or "none"
        raise _fail(f"no state named {name!r} in the file (known: {known})")
    return states[name]


def _decimal(value) -> str:
    return f"{float(value):.12f}"


def _matrix_lines(rows):
    return ["\t".join(str(a) for a in row) for row in rows]


def _parse_epsilon(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise _fail(f"--epsilon: {exc}") from None


@click.group()
def main():
    """Exact convertibility and work cost of thermal resources."""


@main.command()
@click.argument("file", type=click.Path(exists=False))
@click.argument("name_a")
@click.argument("name_b")
@click.option("--witness", is_flag=True, help="Print a stochastic witness when convertible.")
def check(file, name_a, name_b, witness):
    """Decide whether state NAME_A can be transformed into NAME_B.

    Runs all four order criteria and reports each verdict; they must
    agree, or the command exits with code 4.
    """
    states = _load(file)
    a = _pick(states, name_a)
    b = _pick(states, name_b)

    feasible, witness_map = convertible_lp(a, b)
    verdicts = {
        "lp_feasibility": feasible,
        "lorenz_dominance": lorenz_dominates(lorenz_curve(a), lorenz_curve(b)),
        "hinge_plus": hinge_condition_d(a, b),
        "hinge_abs": hinge_condition_e(a, b),
    }
    for key, value in verdicts.items():
        click.echo(f"{key}: {str(value).lower()}")
    if len(set(verdicts.values())) != 1:
        click.echo("error: the order criteria disagree; this is a bug", err=True)
        raise SystemExit(EXIT_DISAGREEMENT)
    click.echo(f"convertible: {str(feasible).lower()}")
    if witness and witness_map is not None:
        click.echo("witness_G:")
        for line in _matrix_lines(witness_map.matrix):
            click.echo(line)
    raise SystemExit(EXIT_OK if feasible else EXIT_NOT_CONVERTIBLE)


@main.command()
@click.argument("file", type=click.Path(exists=False))
@click.argument("name_a")
@click.argument("name_b")
@click.option("--beta", type=click.FloatRange(min=0, min_open=True), default=1.0,
              show_default=True, help="Inverse temperature for the work conversion.")
@click.option("--witness", is_flag=True, help="Print the optimal transformation matrix.")
@click.option("--epsilon", default=None,
              help="Weight Boltzmann factor (a rational); prints the lifted map.")
def work(file, name_a, name_b, beta, witness, epsilon):
    """Exact optimal ratio x* and work of transforming NAME_A into NAME_B."""
    states = _load(file)
    a = _pick(states, name_a)
    b = _pick(states, name_b)

    result = work_gain_lp(a, b, beta=beta)
    click.echo(f"x* = {result.x_star}")
    click.echo(f"W = {_decimal(result.work_gain)}")
    if witness:
        click.echo("witness_F:")
        for line in _matrix_lines(result.witness_F):
            click.echo(line)
    if epsilon is not None:
        eps = _parse_epsilon(epsilon)
        try:
            lifted = lift_to_thermal_map(result, a, b, eps)
        except LiftThresholdError as exc:
            click.echo(f"error: {exc}", err=True)
            raise SystemExit(EXIT_INPUT) from None
        except ValueError as exc:
            raise _fail(f"--epsilon: {exc}") from None
        click.echo(f"lift_epsilon = {lifted.epsilon}")
        click.echo(f"lift_t = {lifted.t}")
        click.echo(f"lift_y = {lifted.y}")
        click.echo("lift_G:")
        for line in _matrix_lines(lifted.matrix):
            click.echo(line)
        verdict = "PASS" if lift_is_valid(lifted, result, a, b) else "FAIL"
        click.echo(f"lift_verification: {verdict}")
    raise SystemExit(EXIT_OK)


@main.command()
@click.argument("file", type=click.Path(exists=False))
@click.argument("names", nargs=-1, required=True)
@click.option("--out", type=click.Path(), default=None,
              help="Write the TSV here instead of stdout.")
@click.option("--plot", "plot_path", type=click.Path(), default=None,
              help="Also render the curves to this PNG file.")
def lorenz(file, names, out, plot_path):
    """Emit Lorenz-curve breakpoints for the NAMES as plot-ready TSV.

    Rows carry the exact rational breakpoints and decimal renderings;
    curves appear in sorted name order.  A kink-count summary goes to
    stdout (stderr when the TSV itself goes to stdout).
    """
    states = _load(file)
    ordered = sorted(dict.fromkeys(names))
    curves = [(name, lorenz_curve(_pick(states, name))) for name in ordered]

    lines = ["name\tt_exact\tL_exact\tt_decimal\tL_decimal"]
    for name, curve in curves:
        for t, value in curve.points:
            lines.append(
                f"{name}\t{t}\t{value}\t{float(t):.12g}\t{float(value):.12g}"
            )
    body = "\n".join(lines) + "\n"

    if out is not None:
        try:
            with open(out, "w", encoding="utf-8") as fh:
                fh.write(body)
        except OSError as exc:
            raise _fail(f"cannot write {out}: {exc.strerror}") from None
        summary_err = False
    else:
        click.echo(body, nl=False)
        summary_err = True
    for name, curve in curves:
        click.echo(f"{name}: {curve.kink_count} kink(s)", err=summary_err)

    if plot_path is not None:
        from .plotting import save_lorenz_plot

        try:
            save_lorenz_plot(curves, plot_path)
        except OSError as exc:
            raise _fail(f"cannot write {plot_path}: {exc.strerror}") from None
    raise SystemExit(EXIT_OK)


@main.command()
@click.argument("file", type=click.Path(exists=False))
@click.argument("name")
def monotone(file, name):
    """Print the implemented divergence family for one state.

    Exact monotones are printed as rationals, logarithmic ones as
    12-decimal reals, infinities as "inf".
    """
    states = _load(file)
    state = _pick(states, name)
    for mono in standard_monotones(state):
        if mono.is_exact:
            rendered = str(mono.value)
        elif mono.value == float("inf"):
            rendered = "inf"
        else:
            rendered = _decimal(mono.value)
        click.echo(f"{mono.name}\t{rendered}")
    raise SystemExit(EXIT_OK)


@main.command()
@click.argument("levels", nargs=-1, required=True, type=float)
@click.option("--beta", type=click.FloatRange(min=0, min_open=True), required=True,
              help="Inverse temperature.")
@click.option("--precision", type=click.IntRange(min=1), default=12, show_default=True,
              help="Decimal digits kept when rationalizing the weights.")
def gibbs(levels, beta, precision):
    """Print the rationalized Gibbs vector for energy LEVELS at --beta."""
    try:
        weights = gibbs_from_hamiltonian(Hamiltonian(tuple(levels), beta, precision))
    except ValueError as exc:
        raise _fail(str(exc)) from None
    for i, w in enumerate(weights):
        click.echo(f"{i}\t{w}\t{float(w):.12g}")
    raise SystemExit(EXIT_OK)


if __name__ == "__main__":
    main()
