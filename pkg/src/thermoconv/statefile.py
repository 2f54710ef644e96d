"""Named resource states from a YAML document.

The file is one top-level mapping of state names to entries.  An entry
gives ``p`` as a list of rational strings plus either ``g`` (rational
strings) or a Hamiltonian block ``levels``/``beta``/``precision`` from
which the Gibbs vector is rationalized.  Rationals travel as strings so
the file stays exact; reals appear only in Hamiltonian mode.

Example::

    hot:
      p: ["9/10", "1/10"]
      g: ["2/3", "1/3"]
    qubit:
      p: ["1/2", "1/2"]
      levels: [0.0, 1.0]
      beta: 1.0
      precision: 12
"""

import yaml

from .core import Hamiltonian, ResourceState, gibbs_from_hamiltonian, parse_rational

_KNOWN_KEYS = {"p", "g", "levels", "beta", "precision"}


class StateFileError(ValueError):
    """A state file could not be parsed; the message names the bad field."""


def _rational_list(values, where):
    if not isinstance(values, list) or not values:
        raise StateFileError(f"{where}: expected a non-empty list of rational strings")
    out = []
    for i, v in enumerate(values):
        if not isinstance(v, str):
            raise StateFileError(
                f"{where}[{i}]: rationals must be strings (got {type(v).__name__})"
            )
        try:
            out.append(parse_rational(v))
        except ValueError as exc:
            raise StateFileError(f"{where}[{i}]: {exc}") from None
    return tuple(out)


def _entry_to_state(name, entry):
    if not isinstance(entry, dict):
        raise StateFileError(f"state {name!r}: expected a mapping")
    unknown = set(entry) - _KNOWN_KEYS
    if unknown:
        raise StateFileError(f"state {name!r}: unknown field {sorted(unknown)[0]!r}")
    if "p" not in entry:
        raise StateFileError(f"state {name!r}: missing field 'p'")
    p = _rational_list(entry["p"], f"state {name!r}: p")

    if "g" in entry:
        if "levels" in entry or "beta" in entry:
            raise StateFileError(f"state {name!r}: give either 'g' or a Hamiltonian, not both")
        g = _rational_list(entry["g"], f"state {name!r}: g")
    else:
        if "levels" not in entry or "beta" not in entry:
            raise StateFileError(f"state {name!r}: needs 'g' or both 'levels' and 'beta'")
        levels = entry["levels"]
        if not isinstance(levels, list) or not all(isinstance(e, (int, float)) for e in levels):
            raise StateFileError(f"state {name!r}: levels: expected a list of numbers")
        beta = entry["beta"]
        if not isinstance(beta, (int, float)):
            raise StateFileError(f"state {name!r}: beta: expected a number")
        precision = entry.get("precision", 12)
        if not isinstance(precision, int):
            raise StateFileError(f"state {name!r}: precision: expected an integer")
        try:
            g = gibbs_from_hamiltonian(Hamiltonian(tuple(levels), float(beta), precision))
        except ValueError as exc:
            raise StateFileError(f"state {name!r}: {exc}") from None

    try:
        return ResourceState(p, g, label=name)
    except (ValueError, TypeError) as exc:
        raise StateFileError(f"state {name!r}: {exc}") from None


def parse_states(text: str) -> dict:
    """Parse a YAML document of named states into ResourceState values."""
    try:
        doc = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        raise StateFileError(f"not valid YAML: {exc}") from None
    if doc is None:
        raise StateFileError("the document is empty")
    if not isinstance(doc, dict):
        raise StateFileError("the top level must be a mapping of state names")
    states = {}
    for name, entry in doc.items():
        states[str(name)] = _entry_to_state(str(name), entry)
    return states


def load_states(path) -> dict:
    """Read and parse a state file from disk."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise StateFileError(f"cannot read {path}: {exc.strerror}") from None
    return parse_states(text)
