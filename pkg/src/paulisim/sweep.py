"""One-at-a-time noise parameter sweeps over a fixed circuit.

The circuit is compiled once; each row re-executes the same schedule under a
noise model with one parameter (or parameter group) replaced.  Two metrics:

- ``success:PATTERN``: probability mass of the final ensemble distribution
  on outcomes matching PATTERN (most significant bit first, ``x`` = don't
  care), marginalizing the ``x`` positions.
- ``fidelity`` (or ``fidelity:FILE``): overlap Tr(rho1 rho2) of the final
  state with the noiseless final state, or with a saved reference state.

The grouped pseudo-parameters ``r`` and ``alpha`` set all four axis values
(x, y, z, cx) at once.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass

from .circuit import NOISE_KEYS, NoiseModel, parse_circuit
from .engine import Record, execute_schedule, make_initial_state
from .state import PauliState, load_state, overlap
from .transpile import compile_circuit

GROUP_KEYS = {
    "r": ("r_x", "r_y", "r_z", "r_cx"),
    "alpha": ("alpha_x", "alpha_y", "alpha_z", "alpha_cx"),
}


def build_noise(base: NoiseModel, param: str, value: float) -> NoiseModel:
    """Replace one parameter (or a grouped set) in a noise model."""
    if param in GROUP_KEYS:
        return dataclasses.replace(base, **{k: value for k in GROUP_KEYS[param]})
    if param not in NOISE_KEYS:
        raise ValueError(f"unknown sweep parameter {param!r}")
    return dataclasses.replace(base, **{param: value})


def pattern_mass(dist: dict[str, float], pattern: str) -> float:
    """Probability of outcomes matching a 0/1/x pattern (x marginalized)."""
    return sum(
        p
        for label, p in dist.items()
        if all(pc in ("x", lc) for lc, pc in zip(label, pattern))
    )


def _last_ensemble(records: list[Record]) -> dict[str, float]:
    for rec in reversed(records):
        if rec.kind == "ensemble":
            return rec.dist
    raise ValueError("success metric needs an ensemble instruction in the circuit")


@dataclass
class SweepRow:
    value: float
    metric: float
    partitions: int


def sweep(
    circuit_text: str,
    param: str,
    values: list[float],
    metric: str,
    base_noise: NoiseModel | None = None,
    init: str = "zero",
) -> list[SweepRow]:
    base = base_noise or NoiseModel()
    n, instructions = parse_circuit(circuit_text)
    _, schedule = compile_circuit(n, instructions)

    pattern = None
    reference: PauliState | None = None
    if metric.startswith("success:"):
        pattern = metric.partition(":")[2]
        if len(pattern) != n or set(pattern) - {"0", "1", "x"}:
            raise ValueError(f"success pattern must be {n} characters over 0/1/x")
    elif metric == "fidelity" or metric.startswith("fidelity:"):
        path = metric.partition(":")[2]
        if path:
            reference = load_state(path)
            if reference.n != n:
                raise ValueError(f"reference state has {reference.n} qubits, circuit {n}")
        else:
            reference = make_initial_state(n, init, base)
            execute_schedule(reference, schedule, NoiseModel())
    else:
        raise ValueError(f"unknown metric {metric!r}")

    rows = []
    for value in values:
        noise = build_noise(base, param, value)
        state = make_initial_state(n, init, noise)
        records = execute_schedule(state, schedule, noise)
        if pattern is not None:
            m = pattern_mass(_last_ensemble(records), pattern)
        else:
            m = overlap(state, reference)
        rows.append(SweepRow(value, m, len(schedule)))
    return rows


def format_table(param: str, metric_name: str, rows: list[SweepRow]) -> str:
    """Tab-separated table: header line, then one row per swept value."""
    lines = [f"{param}\t{metric_name}\tpartitions"]
    lines.extend(f"{r.value!r}\t{r.metric!r}\t{r.partitions}" for r in rows)
    return "\n".join(lines) + "\n"
