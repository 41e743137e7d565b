"""End-to-end pipeline: parse, compile, execute with noise, report.

Execution walks the compiled schedule partition by partition, applying gate
members in the order the partitioner emitted them (ascending qubit index;
members of one partition commute, so the order is a convention, not a
semantic choice) and one memory-noise step after every partition.  All
randomness is confined to optional shot sampling of the recorded
distributions; the evolution itself is deterministic.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from . import gates, measurement, memory, oracle
from .circuit import Instruction, NoiseModel, parse_circuit
from .errors import StateFormatError
from .state import (
    DEFAULT_QUBIT_CAP,
    PauliState,
    init_bitstring,
    init_thermal,
    init_uniform,
    init_zero,
    load_state,
    overlap,
    purity,
)
from .transpile import Schedule, compile_circuit, format_schedule

_AXES = {
    "measure": (0.0, 0.0, 1.0),
    "measure_x": (1.0, 0.0, 0.0),
    "measure_y": (0.0, 1.0, 0.0),
}


@dataclass
class Record:
    """One measurement-type event in execution order."""

    kind: str  # measure | expect | ensemble | bell
    qubits: tuple[int, ...] = ()
    label: str = ""  # measure mnemonic or expect string
    values: tuple[float, ...] = ()
    dist: dict[str, float] | None = None
    counts: dict[str, int] | None = None


@dataclass
class RunReport:
    n: int
    instructions_before: int
    instructions_after: int
    partitions: int
    records: list[Record]
    final_state: PauliState
    fidelity: float | None = None
    saved_state: str | None = None
    wall_time_s: float = 0.0

    def to_text(self, timing: bool = True) -> str:
        lines = [
            f"qubits {self.n}",
            f"instructions {self.instructions_before} -> {self.instructions_after}",
            f"partitions {self.partitions}",
        ]
        for rec in self.records:
            if rec.kind == "expect":
                lines.append(f"expect {rec.label} = {rec.values[0]!r}")
            elif rec.kind == "measure":
                lines.append(
                    f"{rec.label} q[{rec.qubits[0]}]: p+ {rec.values[0]!r} p- {rec.values[1]!r}"
                )
            elif rec.kind == "ensemble":
                lines.append("ensemble:")
                for lab, p in rec.dist.items():
                    if p > 1e-12:
                        lines.append(f"  {lab} {p!r}")
            elif rec.kind == "bell":
                pairs = " ".join(f"{lab} {p!r}" for lab, p in rec.dist.items())
                lines.append(f"bell q[{rec.qubits[0]}],q[{rec.qubits[1]}]: {pairs}")
            if rec.counts is not None:
                body = " ".join(f"{lab} {c}" for lab, c in rec.counts.items() if c > 0)
                lines.append(f"  counts: {body}")
        lines.append(f"purity {purity(self.final_state)!r}")
        if self.fidelity is not None:
            lines.append(f"fidelity {self.fidelity!r}")
        if self.saved_state is not None:
            lines.append(f"state saved to {self.saved_state}")
        if timing:
            lines.append(f"wall_time_s {self.wall_time_s:.3f}")
        return "\n".join(lines) + "\n"


def make_initial_state(
    n: int, init: str, noise: NoiseModel, max_qubits: int = DEFAULT_QUBIT_CAP
) -> PauliState:
    """Build the starting state from an option string.

    Options: ``zero``, ``uniform``, ``thermal`` (population = noise p),
    ``bitstring:S`` and ``file:PATH``.
    """
    if init == "zero":
        return init_zero(n, max_qubits)
    if init == "uniform":
        return init_uniform(n, max_qubits)
    if init == "thermal":
        return init_thermal(n, noise.p, max_qubits)
    if init.startswith("bitstring:"):
        bits = init.partition(":")[2]
        if len(bits) != n:
            raise ValueError(f"bitstring length {len(bits)} does not match {n} qubits")
        return init_bitstring(bits, max_qubits)
    if init.startswith("file:"):
        state = load_state(init.partition(":")[2], max_qubits)
        if state.n != n:
            raise StateFormatError(f"state file holds {state.n} qubits, circuit needs {n}")
        return state
    raise ValueError(f"unknown init option {init!r}")


def execute_schedule(
    state: PauliState, schedule: Schedule, noise: NoiseModel
) -> list[Record]:
    """Run a compiled schedule in place, returning measurement records."""
    rot = noise.rotation()
    meas = noise.measurement()
    mem = noise.memory()
    records: list[Record] = []
    for part in schedule.partitions:
        for ins in part.members:
            k = ins.kind
            if k == "u1":
                gates.apply_u1(state, ins.qubits[0], ins.angles[0], rot)
            elif k == "u3":
                gates.apply_u3(state, ins.qubits[0], *ins.angles, rot)
            elif k == "cx":
                gates.apply_cnot(state, ins.qubits[0], ins.qubits[1], rot)
            elif k == "reset":
                measurement.reset_qubit(state, ins.qubits[0])
            elif k in _AXES:
                probs = measurement.measure_qubit(state, ins.qubits[0], _AXES[k], meas)
                records.append(Record("measure", ins.qubits, k, probs))
            elif k == "expect":
                value = measurement.expect_pauli_string(state, ins.string, meas)
                records.append(Record("expect", (), ins.string, (value,)))
            elif k == "ensemble":
                dist = measurement.ensemble_distribution(state, meas)
                records.append(Record("ensemble", (), "", (), dist))
            elif k == "bell":
                dist = measurement.bell_measure(state, *ins.qubits, meas)
                records.append(Record("bell", ins.qubits, "", (), dist))
            else:  # only select-set kinds reach a schedule
                raise ValueError(f"unexpected kind {k!r} in schedule")
        memory.end_of_partition(state, mem, part.category)
    return records


def _sample_counts(records: list[Record], shots: int, seed: int | None) -> None:
    rng = np.random.default_rng(seed)
    for rec in records:
        if rec.dist is not None:
            labels, probs = list(rec.dist.keys()), list(rec.dist.values())
        elif rec.kind == "measure":
            labels, probs = ["+", "-"], list(rec.values)
        else:
            continue
        draws = rng.multinomial(shots, np.array(probs))
        rec.counts = dict(zip(labels, (int(c) for c in draws)))


def run_circuit(
    circuit_text: str,
    noise: NoiseModel | None = None,
    init: str = "zero",
    shots: int = 0,
    seed: int | None = None,
    reference: PauliState | None = None,
    max_qubits: int = DEFAULT_QUBIT_CAP,
) -> RunReport:
    """Full pipeline on circuit text; returns the report with final state."""
    noise = noise or NoiseModel()
    start = time.perf_counter()
    n, instructions = parse_circuit(circuit_text)
    merged, schedule = compile_circuit(n, instructions)
    state = make_initial_state(n, init, noise, max_qubits)
    records = execute_schedule(state, schedule, noise)
    if shots > 0:
        _sample_counts(records, shots, seed)
    fidelity = None if reference is None else overlap(state, reference)
    return RunReport(
        n=n,
        instructions_before=len(instructions),
        instructions_after=len(merged),
        partitions=len(schedule),
        records=records,
        final_state=state,
        fidelity=fidelity,
        wall_time_s=time.perf_counter() - start,
    )


def dump_schedule(circuit_text: str) -> str:
    """Compile only, returning the partition-per-line schedule text."""
    n, instructions = parse_circuit(circuit_text)
    _, schedule = compile_circuit(n, instructions)
    return format_schedule(schedule)


# ---------------------------------------------------------------------------
# Dual-path verification against the dense oracle


@dataclass
class VerifyResult:
    n: int
    partitions: int
    state_divergence: float
    record_divergence: float
    records_checked: int = 0
    details: list[str] = field(default_factory=list)

    def to_text(self) -> str:
        lines = [
            f"qubits {self.n}",
            f"partitions {self.partitions}",
            f"records checked {self.records_checked}",
            f"max state divergence {self.state_divergence:.3e}",
            f"max record divergence {self.record_divergence:.3e}",
        ]
        lines.extend(self.details)
        return "\n".join(lines) + "\n"


def _dense_initial(n: int, init: str, noise: NoiseModel) -> oracle.DenseState:
    if init == "zero":
        return oracle.dense_zero(n)
    if init == "uniform":
        return oracle.dense_uniform(n)
    if init == "thermal":
        return oracle.dense_thermal(n, noise.p)
    if init.startswith("bitstring:"):
        return oracle.dense_bitstring(init.partition(":")[2])
    if init.startswith("file:"):
        return oracle.to_dense(load_state(init.partition(":")[2]))
    raise ValueError(f"unknown init option {init!r}")


def _record_divergence(rec: Record, ref: tuple) -> float:
    if rec.kind == "expect":
        return abs(rec.values[0] - ref[2])
    if rec.kind == "measure":
        return max(abs(a - b) for a, b in zip(rec.values, ref[3]))
    dist_ref = ref[1] if rec.kind == "ensemble" else ref[2]
    return max(abs(rec.dist[lab] - dist_ref[lab]) for lab in rec.dist)


def verify_circuit(
    circuit_text: str, noise: NoiseModel | None = None, init: str = "zero"
) -> VerifyResult:
    """Run the coefficient engine and the dense oracle on the same schedule.

    Both paths share the compiled schedule and the noise model but nothing
    else: the oracle evolves a full density matrix through unitary mixtures
    and Kraus sums.  Reports the largest coefficient and record divergence.
    """
    noise = noise or NoiseModel()
    n, instructions = parse_circuit(circuit_text)
    _, schedule = compile_circuit(n, instructions)

    state = make_initial_state(n, init, noise, max_qubits=DEFAULT_QUBIT_CAP)
    records = execute_schedule(state, schedule, noise)

    dense = _dense_initial(n, init, noise)
    dense_records = oracle.run_schedule_dense(dense, schedule, noise)

    state_div = float(np.max(np.abs(state.coeffs - oracle.from_dense(dense).coeffs)))
    rec_div = 0.0
    if len(records) != len(dense_records):
        raise ValueError("record streams diverged in length")
    for rec, ref in zip(records, dense_records):
        rec_div = max(rec_div, _record_divergence(rec, ref))
    return VerifyResult(
        n=n,
        partitions=len(schedule),
        state_divergence=state_div,
        record_divergence=rec_div,
        records_checked=len(records),
    )
