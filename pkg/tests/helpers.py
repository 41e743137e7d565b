"""Random circuit/state builders shared across test modules."""

from __future__ import annotations

import numpy as np

from paulisim import oracle
from paulisim.state import PauliState

NAMED = ("x", "y", "z", "h", "s", "sdg", "t", "tdg")


def random_circuit_text(
    rng: np.random.Generator,
    n: int,
    n_instr: int,
    select_only: bool = False,
    with_measures: bool = True,
    with_solos: bool = True,
) -> str:
    """A syntactically valid random circuit over the supported mnemonics."""
    gate_pool = ["u1", "u3", "u3", "cx"]
    if not select_only:
        gate_pool += list(NAMED) + ["u2"]
        if n >= 3:
            gate_pool.append("ccx")
    pool = list(gate_pool)
    if with_measures:
        pool += ["measure", "measure_x", "measure_y", "reset"]
    if with_solos:
        pool += ["expect", "ensemble", "barrier"]
        if n >= 2:
            pool.append("bell")

    lines = [f"qubits {n}"]
    for _ in range(n_instr):
        kind = pool[rng.integers(len(pool))]
        if kind == "cx" and n < 2:
            kind = "u3"
        if kind == "cx":
            a, b = rng.choice(n, size=2, replace=False)
            lines.append(f"cx q[{a}],q[{b}]")
        elif kind == "ccx":
            a, b, c = rng.choice(n, size=3, replace=False)
            lines.append(f"ccx q[{a}],q[{b}],q[{c}]")
        elif kind == "u1":
            lines.append(f"u1({rng.uniform(-3, 3):.6f}) q[{rng.integers(n)}]")
        elif kind == "u2":
            lines.append(f"u2({rng.uniform(-3, 3):.6f},{rng.uniform(-3, 3):.6f}) q[{rng.integers(n)}]")
        elif kind == "u3":
            t, p, l = rng.uniform(-3, 3, size=3)
            lines.append(f"u3({t:.6f},{p:.6f},{l:.6f}) q[{rng.integers(n)}]")
        elif kind in NAMED:
            lines.append(f"{kind} q[{rng.integers(n)}]")
        elif kind in ("measure", "measure_x", "measure_y", "reset"):
            lines.append(f"{kind} q[{rng.integers(n)}]")
        elif kind == "expect":
            lines.append("expect " + "".join(rng.choice(list("IXYZ"), size=n)))
        elif kind == "bell":
            a, b = rng.choice(n, size=2, replace=False)
            lines.append(f"bell q[{a}],q[{b}]")
        else:
            lines.append(kind)
    return "\n".join(lines) + "\n"


def random_pauli_state(rng: np.random.Generator, n: int) -> PauliState:
    """A valid random mixed state, built densely and converted."""
    return oracle.random_state(n, rng)


def assert_states_close(a: PauliState, b: PauliState, tol: float = 1e-12) -> None:
    assert a.n == b.n
    div = float(np.max(np.abs(a.coeffs - b.coeffs)))
    assert div < tol, f"coefficient divergence {div:.3e} exceeds {tol:.1e}"
