"""Compiler front-half: decomposition, single-qubit fusion, partitioning.

Circuits are lowered to the select set {u1, u3, cx}, maximal runs of
consecutive one-qubit gates are fused per qubit, and the result is split
into clock-step partitions via per-qubit FIFO columns: every instruction is
appended to the columns of the qubits it touches, single-qubit measurements
additionally park a dummy on every other column, and whole-register
operations (expect, ensemble, bell) occupy all columns at once.  A round
pops from the column bottoms, one instruction per qubit, admitting a
two-qubit gate only when it heads both of its columns.  Barrier markers,
inserted by the user or automatically between gate and measurement phases,
must align across all columns before they dissolve.

Idle time between partitions is where memory noise elapses, so partition
count is the circuit's effective clock depth.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field

import numpy as np

from .circuit import (
    GATE_KINDS,
    MEASURE_KINDS,
    NAMED_GATE_KINDS,
    SOLO_KINDS,
    Instruction,
    format_instruction,
)
from .errors import CompileError, InternalError

_PI = math.pi
_ZERO_TOL = 1e-12


def category_of(kind: str) -> str | None:
    """Partition category of an instruction kind; None for barriers."""
    if kind in GATE_KINDS:
        return "gate"
    if kind in MEASURE_KINDS:
        return "measurement"
    if kind in SOLO_KINDS:
        return "solo"
    if kind == "barrier":
        return None
    raise CompileError(f"unsupported instruction kind {kind!r}")


def _touched(ins: Instruction, n: int) -> tuple[int, ...]:
    if ins.kind in ("expect", "ensemble", "barrier"):
        return tuple(range(n))
    return ins.qubits


# ---------------------------------------------------------------------------
# Decomposition to the select set

_NAMED_SELECT: dict[str, tuple[str, tuple[float, ...]]] = {
    "z": ("u1", (_PI,)),
    "s": ("u1", (_PI / 2,)),
    "sdg": ("u1", (-_PI / 2,)),
    "t": ("u1", (_PI / 4,)),
    "tdg": ("u1", (-_PI / 4,)),
    "x": ("u3", (_PI, 0.0, _PI)),
    "y": ("u3", (_PI, _PI / 2, _PI / 2)),
    "h": ("u3", (_PI / 2, 0.0, _PI)),
}


def _toffoli_sequence(a: int, b: int, t: int) -> list[Instruction]:
    """Toffoli as 6 controlled-NOTs plus one-qubit gates (exact, phase-free)."""
    seq = [
        ("h", (t,)),
        ("cx", (b, t)),
        ("tdg", (t,)),
        ("cx", (a, t)),
        ("t", (t,)),
        ("cx", (b, t)),
        ("tdg", (t,)),
        ("cx", (a, t)),
        ("t", (b,)),
        ("t", (t,)),
        ("h", (t,)),
        ("cx", (a, b)),
        ("t", (a,)),
        ("tdg", (b,)),
        ("cx", (a, b)),
    ]
    return [Instruction(kind, qubits) for kind, qubits in seq]


def decompose(instructions: list[Instruction]) -> list[Instruction]:
    """Rewrite every gate into the select set {u1, u3, cx}.

    Measurements, reset and barriers pass through untouched.
    """
    out: list[Instruction] = []
    for ins in instructions:
        k = ins.kind
        if k in ("u1", "u3", "cx") or k in MEASURE_KINDS or k in SOLO_KINDS or k == "barrier":
            out.append(ins)
        elif k == "u2":
            out.append(Instruction("u3", ins.qubits, (_PI / 2, ins.angles[0], ins.angles[1])))
        elif k in _NAMED_SELECT:
            kind, angles = _NAMED_SELECT[k]
            out.append(Instruction(kind, ins.qubits, angles))
        elif k == "ccx":
            for sub in _toffoli_sequence(*ins.qubits):
                if sub.kind in _NAMED_SELECT:
                    kind, angles = _NAMED_SELECT[sub.kind]
                    out.append(Instruction(kind, sub.qubits, angles))
                else:
                    out.append(sub)
        else:
            raise CompileError(f"cannot decompose instruction: {format_instruction(ins)}")
    return out


# ---------------------------------------------------------------------------
# Single-qubit fusion


def _wrap_angle(a: float) -> float:
    """Reduce to the canonical branch (-pi, pi]."""
    r = math.remainder(a, 2.0 * _PI)
    return r + 2.0 * _PI if r <= -_PI else r


def _su2_ry(t: float) -> np.ndarray:
    c, s = math.cos(t / 2), math.sin(t / 2)
    return np.array([[c, -s], [s, c]], dtype=np.complex128)


def _su2_rz(l: float) -> np.ndarray:
    return np.diag([np.exp(-0.5j * l), np.exp(0.5j * l)])


def _zyz(theta2: float, lam: float, theta1: float) -> tuple[float, float, float]:
    """Angles (alpha, beta, gamma) with Rz(a)Ry(b)Rz(g) = Ry(t2)Rz(lam)Ry(t1).

    The product is SU(2), [[a, -conj(b)], [b, conj(a)]]; beta comes from the
    moduli via atan2, the z angles from the phases, with the degenerate
    branches (|a| or |b| ~ 0) pinned to 0.
    """
    m = _su2_ry(theta2) @ _su2_rz(lam) @ _su2_ry(theta1)
    a, b = m[0, 0], m[1, 0]
    beta = 2.0 * math.atan2(abs(b), abs(a))
    ssum = -2.0 * np.angle(a) if abs(a) > _ZERO_TOL else 0.0
    sdiff = 2.0 * np.angle(b) if abs(b) > _ZERO_TOL else 0.0
    return (ssum + sdiff) / 2.0, beta, (ssum - sdiff) / 2.0


@dataclass
class _Run:
    """Accumulated fusion of consecutive one-qubit gates on one qubit."""

    first: Instruction
    count: int
    kind: str  # "u1" or "u3"
    angles: tuple[float, ...]

    def absorb(self, ins: Instruction) -> None:
        self.count += 1
        if self.kind == "u1" and ins.kind == "u1":
            self.angles = (self.angles[0] + ins.angles[0],)
        elif self.kind == "u1" and ins.kind == "u3":
            t, f, l = ins.angles
            self.kind, self.angles = "u3", (t, f, l + self.angles[0])
        elif self.kind == "u3" and ins.kind == "u1":
            t, f, l = self.angles
            self.angles = (t, f + ins.angles[0], l)
        else:
            t1, f1, l1 = self.angles
            t2, f2, l2 = ins.angles
            alpha, beta, gamma = _zyz(t2, l2 + f1, t1)
            self.angles = (beta, f2 + alpha, gamma + l1)

    def emit(self) -> Instruction:
        if self.count == 1:
            return self.first  # untouched gates keep their source form
        q = self.first.qubits
        if self.kind == "u1":
            return Instruction("u1", q, (_wrap_angle(self.angles[0]),))
        t, f, l = self.angles
        if abs(_wrap_angle(t)) < _ZERO_TOL:
            return Instruction("u1", q, (_wrap_angle(f + l),))
        return Instruction("u3", q, (_wrap_angle(t), _wrap_angle(f), _wrap_angle(l)))


def merge(n: int, instructions: list[Instruction]) -> list[Instruction]:
    """Fuse every maximal per-qubit run of consecutive u1/u3 into one gate.

    The fused gate takes the flat position of the run's first member, so the
    output's gate/measurement phase structure matches the source circuit's.
    A fused identity still emits (as u1(0)); gate count never increases.
    """
    out: list[Instruction | _Run] = []
    open_runs: dict[int, _Run] = {}
    for ins in instructions:
        if ins.kind in ("u1", "u3"):
            q = ins.qubits[0]
            if q in open_runs:
                open_runs[q].absorb(ins)
            else:
                run = _Run(ins, 1, ins.kind, ins.angles)
                open_runs[q] = run
                out.append(run)
            continue
        for q in _touched(ins, n):
            open_runs.pop(q, None)  # run stays in out at its start position
        out.append(ins)
    return [x.emit() if isinstance(x, _Run) else x for x in out]


# ---------------------------------------------------------------------------
# Qubit stack and partitioner


class _Dummy:
    """Column placeholder pinning cross-qubit order around a measurement."""

    __slots__ = ("parent",)

    def __init__(self, parent: Instruction) -> None:
        self.parent = parent


@dataclass
class QubitStack:
    """One FIFO column per qubit; bottoms sit at the left end."""

    columns: list[deque]


def _with_phase_barriers(instructions: list[Instruction]) -> list[Instruction]:
    """Insert barriers at gate/measurement category changes and around solos."""
    out: list[Instruction] = []
    prev: str | None = None
    for ins in instructions:
        cat = category_of(ins.kind)
        if cat is None:
            out.append(ins)
            prev = None
            continue
        if prev is not None and (cat != prev or cat == "solo"):
            out.append(Instruction("barrier"))
        out.append(ins)
        prev = cat
    return out


def build_stack(n: int, instructions: list[Instruction]) -> QubitStack:
    """Distribute instructions onto per-qubit columns in source order."""
    cols: list[deque] = [deque() for _ in range(n)]
    for ins in _with_phase_barriers(instructions):
        k = ins.kind
        if k == "barrier" or k in SOLO_KINDS:
            for c in cols:
                c.append(ins)
        elif k in MEASURE_KINDS:
            q = ins.qubits[0]
            for i, c in enumerate(cols):
                c.append(ins if i == q else _Dummy(ins))
        else:
            for q in ins.qubits:
                cols[q].append(ins)
    return QubitStack(cols)


@dataclass
class Partition:
    category: str
    members: list[Instruction]


@dataclass
class Schedule:
    partitions: list[Partition] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.partitions)


def _is_barrier(obj) -> bool:
    return isinstance(obj, Instruction) and obj.kind == "barrier"


def partition(stack: QubitStack) -> Schedule:
    """Pop the qubit stack into clock-step partitions (consumes a copy)."""
    cols = [deque(c) for c in stack.columns]
    scheduled: set[int] = set()  # id() of every instruction already placed
    parts: list[Partition] = []

    def drop_dead_dummies() -> None:
        for c in cols:
            while c and isinstance(c[0], _Dummy) and id(c[0].parent) in scheduled:
                c.popleft()

    while True:
        drop_dead_dummies()
        if all(not c for c in cols):
            break
        bottoms = [c[0] if c else None for c in cols]
        if all(b is not None and _is_barrier(b) for b in bottoms):
            if len({id(b) for b in bottoms}) != 1:
                raise InternalError("misaligned barriers in qubit stack")
            for c in cols:
                c.popleft()
            continue
        real = [b for b in bottoms if b is not None and not isinstance(b, _Dummy) and not _is_barrier(b)]
        if not real:
            raise InternalError("scheduler deadlock: every column is blocked")
        cat = category_of(real[0].kind)

        if cat == "solo":
            solo = real[0]
            for c in cols:
                if not c or c[0] is not solo:
                    raise InternalError("whole-register instruction misaligned across columns")
                c.popleft()
            scheduled.add(id(solo))
            parts.append(Partition("solo", [solo]))
            continue

        if cat == "gate":
            members: list[Instruction] = []
            used: set[int] = set()
            for q in range(len(cols)):
                c = cols[q]
                if not c or q in used:
                    continue
                b = c[0]
                if isinstance(b, _Dummy) or _is_barrier(b):
                    continue
                if category_of(b.kind) != "gate":
                    raise InternalError("measurement reached a gate round without a barrier")
                if any(qq in used for qq in b.qubits):
                    continue
                if len(b.qubits) == 1:
                    c.popleft()
                elif all(cols[qq] and cols[qq][0] is b for qq in b.qubits):
                    for qq in b.qubits:
                        cols[qq].popleft()
                else:
                    continue  # two-qubit gate not yet at both bottoms
                members.append(b)
                used.update(b.qubits)
                scheduled.add(id(b))
            if not members:
                raise InternalError("scheduler deadlock in gate round")
            parts.append(Partition("gate", members))
            continue

        # measurement round: multi-pass so freshly dead dummies unblock columns
        members = []
        used = set()
        progress = True
        while progress:
            progress = False
            for q in range(len(cols)):
                c = cols[q]
                if not c:
                    continue
                b = c[0]
                if isinstance(b, _Dummy):
                    if id(b.parent) in scheduled:
                        c.popleft()
                        progress = True
                    continue
                if _is_barrier(b) or q in used:
                    continue
                if category_of(b.kind) != "measurement":
                    raise InternalError("gate reached a measurement round without a barrier")
                c.popleft()
                members.append(b)
                used.add(q)
                scheduled.add(id(b))
                progress = True
        if not members:
            raise InternalError("scheduler deadlock in measurement round")
        parts.append(Partition("measurement", members))

    return Schedule(parts)


# ---------------------------------------------------------------------------
# Structural validation and formatting


def check_schedule(schedule: Schedule, n: int, instructions: list[Instruction]) -> None:
    """Assert every Schedule invariant against the source instruction list.

    Raises InternalError on violation; cheap enough to run on every compile.
    """
    for part in schedule.partitions:
        cats = {category_of(m.kind) for m in part.members}
        if cats != {part.category}:
            raise InternalError(f"partition tagged {part.category} holds {sorted(cats)}")
        if part.category == "gate":
            seen: set[int] = set()
            for m in part.members:
                for q in m.qubits:
                    if q in seen:
                        raise InternalError(f"qubit {q} used twice in one gate partition")
                    seen.add(q)
        if part.category == "solo" and len(part.members) != 1:
            raise InternalError("expect/ensemble/bell must be alone in a partition")
    flat = [m for part in schedule.partitions for m in part.members]
    for q in range(n):
        source = [ins for ins in instructions if ins.kind != "barrier" and q in _touched(ins, n)]
        placed = [ins for ins in flat if q in _touched(ins, n)]
        if len(source) != len(placed) or any(a is not b for a, b in zip(source, placed)):
            raise InternalError(f"schedule reorders the instructions of qubit {q}")


def format_schedule(schedule: Schedule) -> str:
    """One partition per line: index, category, members."""
    lines = [
        f"{i} {part.category} | " + " ; ".join(format_instruction(m) for m in part.members)
        for i, part in enumerate(schedule.partitions)
    ]
    return "\n".join(lines) + "\n"


def compile_circuit(
    n: int, instructions: list[Instruction]
) -> tuple[list[Instruction], Schedule]:
    """decompose + merge + partition, with the schedule checked structurally."""
    merged = merge(n, decompose(instructions))
    schedule = partition(build_stack(n, merged))
    check_schedule(schedule, n, merged)
    return merged, schedule
