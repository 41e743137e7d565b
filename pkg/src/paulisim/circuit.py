"""Text formats for circuits and noise parameters.

Circuit grammar, one instruction per line, comments from ``#`` to end of
line, header ``qubits N`` first:

    x|y|z|h|s|sdg|t|tdg q[i]      named one-qubit gates
    u1(l) q[i]                    phase gate
    u2(f,l) q[i]                  shorthand for u3(pi/2,f,l)
    u3(t,f,l) q[i]                general one-qubit gate
    cx q[i],q[j]                  controlled-NOT (control first)
    ccx q[i],q[j],q[k]            Toffoli (controls first)
    measure q[i]                  z-basis binary measurement
    measure_x q[i] | measure_y q[i]
    expect STRING                 Pauli-string expectation, e.g. expect ZIZ
    ensemble                      all-qubit bitstring distribution
    bell q[i],q[j]                Bell-basis measurement of a pair
    reset q[i]
    barrier

Angles are decimal literals or ``pi``/``pi/INT``, optionally signed.  In
``expect`` strings and in all printed bitstrings the RIGHTMOST character is
qubit 0; reports print the most significant bit first.

Noise configuration files hold ``key = value`` lines (same comment rule,
repeated keys: last one wins).  Omitted keys default to the noiseless value.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

from .errors import CircuitSyntaxError
from .gates import RotationNoise
from .measurement import MeasurementNoise
from .memory import MemoryNoise

NAMED_GATE_KINDS = ("x", "y", "z", "h", "s", "sdg", "t", "tdg")
GATE_KINDS = NAMED_GATE_KINDS + ("u1", "u2", "u3", "cx", "ccx")
MEASURE_KINDS = ("measure", "measure_x", "measure_y", "reset")
SOLO_KINDS = ("expect", "ensemble", "bell")

# mnemonic -> (angle count, qubit count)
_ARITY = {
    **{k: (0, 1) for k in NAMED_GATE_KINDS},
    "u1": (1, 1),
    "u2": (2, 1),
    "u3": (3, 1),
    "cx": (0, 2),
    "ccx": (0, 3),
    "measure": (0, 1),
    "measure_x": (0, 1),
    "measure_y": (0, 1),
    "reset": (0, 1),
    "bell": (0, 2),
}


@dataclass(frozen=True)
class Instruction:
    """One circuit operation; ``string`` carries the Pauli labels of expect."""

    kind: str
    qubits: tuple[int, ...] = ()
    angles: tuple[float, ...] = ()
    string: str = ""


def _parse_angle(token: str, lineno: int) -> float:
    t = token.strip()
    if not t:
        raise CircuitSyntaxError("empty angle", lineno)
    sign = 1.0
    if t[:1] in "+-":
        sign = -1.0 if t[0] == "-" else 1.0
        t = t[1:]
    if t == "pi":
        return sign * math.pi
    m = re.fullmatch(r"pi/(\d+)", t)
    if m:
        div = int(m.group(1))
        if div == 0:
            raise CircuitSyntaxError(f"malformed angle {token.strip()!r}", lineno)
        return sign * math.pi / div
    try:
        v = float(t)
    except ValueError:
        raise CircuitSyntaxError(f"malformed angle {token.strip()!r}", lineno) from None
    if not math.isfinite(v):
        raise CircuitSyntaxError(f"angle {token.strip()!r} is not finite", lineno)
    return sign * v


def _parse_operands(rest: str, count: int, n: int, lineno: int) -> tuple[int, ...]:
    parts = [p.strip() for p in rest.split(",")] if rest else []
    if len(parts) != count:
        raise CircuitSyntaxError(f"expected {count} qubit operand(s), got {len(parts)}", lineno)
    qubits = []
    for p in parts:
        m = re.fullmatch(r"q\[(\d+)\]", p)
        if not m:
            raise CircuitSyntaxError(f"malformed operand {p!r}, expected q[INDEX]", lineno)
        q = int(m.group(1))
        if q >= n:
            raise CircuitSyntaxError(f"qubit index {q} out of range for {n} qubits", lineno)
        qubits.append(q)
    if len(set(qubits)) != len(qubits):
        raise CircuitSyntaxError("duplicate operand", lineno)
    return tuple(qubits)


def _parse_instruction(line: str, n: int, lineno: int) -> Instruction:
    m = re.fullmatch(r"([a-z_][a-z_0-9]*)(?:\s*\(([^)]*)\))?(?:\s+(.*))?", line)
    if not m:
        raise CircuitSyntaxError(f"cannot parse {line!r}", lineno)
    name, angle_src, rest = m.group(1), m.group(2), (m.group(3) or "").strip()

    if name == "barrier" or name == "ensemble":
        if angle_src is not None or rest:
            raise CircuitSyntaxError(f"{name} takes no operands", lineno)
        return Instruction(name)

    if name == "expect":
        if angle_src is not None:
            raise CircuitSyntaxError("expect takes no angle list", lineno)
        if len(rest) != n:
            raise CircuitSyntaxError(
                f"expect string must have one label per qubit ({n}), got {len(rest)}", lineno
            )
        bad = set(rest) - set("IXYZ")
        if bad:
            raise CircuitSyntaxError(
                f"bad Pauli label {sorted(bad)[0]!r} in expect string", lineno
            )
        return Instruction("expect", string=rest)

    if name not in _ARITY:
        raise CircuitSyntaxError(f"unknown mnemonic {name!r}", lineno)
    n_angles, n_qubits = _ARITY[name]
    if n_angles == 0:
        if angle_src is not None:
            raise CircuitSyntaxError(f"{name} takes no angle list", lineno)
        angles: tuple[float, ...] = ()
    else:
        if angle_src is None:
            raise CircuitSyntaxError(f"{name} needs {n_angles} angle(s)", lineno)
        tokens = angle_src.split(",")
        if len(tokens) != n_angles:
            raise CircuitSyntaxError(
                f"{name} needs {n_angles} angle(s), got {len(tokens)}", lineno
            )
        angles = tuple(_parse_angle(t, lineno) for t in tokens)
    qubits = _parse_operands(rest, n_qubits, n, lineno)
    return Instruction(name, qubits=qubits, angles=angles)


def parse_circuit(text: str) -> tuple[int, list[Instruction]]:
    """Parse circuit text into (qubit count, instruction list)."""
    n = None
    instructions: list[Instruction] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n is None:
            m = re.fullmatch(r"qubits\s+(\d+)", line)
            if not m:
                raise CircuitSyntaxError("expected 'qubits N' header before instructions", lineno)
            n = int(m.group(1))
            if n < 1:
                raise CircuitSyntaxError("qubit count must be at least 1", lineno)
            continue
        instructions.append(_parse_instruction(line, n, lineno))
    if n is None:
        raise CircuitSyntaxError("missing 'qubits N' header", 1)
    return n, instructions


def format_instruction(ins: Instruction) -> str:
    """One-line source form of an instruction (inverse of the parser)."""
    if ins.kind == "expect":
        return f"expect {ins.string}"
    out = ins.kind
    if ins.angles:
        out += "(" + ",".join(repr(a) for a in ins.angles) + ")"
    if ins.qubits:
        out += " " + ",".join(f"q[{q}]" for q in ins.qubits)
    return out


def print_circuit(n: int, instructions: list[Instruction]) -> str:
    """Render a circuit back to text; parse(print(c)) reproduces c."""
    lines = [f"qubits {n}"]
    lines.extend(format_instruction(ins) for ins in instructions)
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Noise configuration


@dataclass(frozen=True)
class NoiseModel:
    """Every user-tunable error parameter; defaults are all noiseless.

    Rotation angle errors (alpha_*, r_*), readout damping (d1, d2), memory
    decoherence/decay (f, g, optional f_meas/g_meas for measurement steps)
    and the thermal population p, which both seeds init_thermal and sets the
    decay fixed point.
    """

    p: float = 1.0
    alpha_x: float = 0.0
    r_x: float = 1.0
    alpha_y: float = 0.0
    r_y: float = 1.0
    alpha_z: float = 0.0
    r_z: float = 1.0
    alpha_cx: float = 0.0
    r_cx: float = 1.0
    d1: float = 1.0
    d2: float = 1.0
    f: float = 1.0
    g: float = 1.0
    f_meas: float | None = None
    g_meas: float | None = None

    def __post_init__(self) -> None:
        # sub-model constructors carry the range checks
        self.rotation()
        self.measurement()
        self.memory()

    def rotation(self) -> RotationNoise:
        return RotationNoise(
            alpha_x=self.alpha_x,
            r_x=self.r_x,
            alpha_y=self.alpha_y,
            r_y=self.r_y,
            alpha_z=self.alpha_z,
            r_z=self.r_z,
            alpha_cx=self.alpha_cx,
            r_cx=self.r_cx,
        )

    def measurement(self) -> MeasurementNoise:
        return MeasurementNoise(d1=self.d1, d2=self.d2)

    def memory(self) -> MemoryNoise:
        return MemoryNoise(
            f=self.f, g=self.g, p=self.p, f_meas=self.f_meas, g_meas=self.g_meas
        )


NOISE_KEYS = (
    "p",
    "alpha_x",
    "r_x",
    "alpha_y",
    "r_y",
    "alpha_z",
    "r_z",
    "alpha_cx",
    "r_cx",
    "d1",
    "d2",
    "f",
    "g",
    "f_meas",
    "g_meas",
)


def parse_noise_config(text: str) -> NoiseModel:
    """Parse ``key = value`` lines into a NoiseModel.

    Values accept the same literal forms as circuit angles (decimals and
    pi/INT, useful for the alpha offsets).
    """
    values: dict[str, float] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"line {lineno}: expected 'key = value', got {line!r}")
        key, _, val = line.partition("=")
        key = key.strip()
        if key not in NOISE_KEYS:
            raise ValueError(f"line {lineno}: unknown noise parameter {key!r}")
        try:
            values[key] = _parse_angle(val, lineno)
        except CircuitSyntaxError:
            raise ValueError(f"line {lineno}: malformed value for {key!r}: {val.strip()!r}") from None
    try:
        return NoiseModel(**values)
    except ValueError as exc:
        raise ValueError(f"noise configuration: {exc}") from None
