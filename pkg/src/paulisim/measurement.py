"""Projective measurement modes on Pauli coefficients.

All modes are non-selective: the state is replaced by the full
post-measurement mixture, never collapsed to a sampled branch.  Sampling,
when wanted, happens downstream from the returned distribution.

Readout error enters through two damping factors: d1 scales the measured
Bloch component for every single-qubit readout (and each qubit of a string
or ensemble readout), d2 scales the correlated contributions of a Bell-basis
measurement.  Both equal 1 for ideal projective measurement.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InternalError
from .state import PauliState

PAULI_LABELS = "IXYZ"

BELL_LABELS = ("phi+", "phi-", "psi+", "psi-")

# sign patterns of the Bell projectors 1/4 (II +- XX +- YY +- ZZ)
BELL_SIGNS = {
    "phi+": (1.0, -1.0, 1.0),
    "phi-": (-1.0, 1.0, 1.0),
    "psi+": (1.0, 1.0, -1.0),
    "psi-": (-1.0, -1.0, -1.0),
}

_PROB_FLOOR = -1e-9  # anything below this is a bug, not rounding
_SUM_TOL = 1e-6


@dataclass(frozen=True)
class MeasurementNoise:
    """Readout damping factors; d1 = d2 = 1 is ideal."""

    d1: float = 1.0
    d2: float = 1.0

    def __post_init__(self) -> None:
        for name in ("d1", "d2"):
            v = getattr(self, name)
            if not 0.0 <= v <= 1.0:
                raise ValueError(f"{name} must lie in [0, 1], got {v}")


IDEAL = MeasurementNoise()


def _finalize(labels: list[str], values: np.ndarray) -> dict[str, float]:
    """Clamp rounding negatives, renormalize, and package a distribution."""
    if values.min() < _PROB_FLOOR:
        raise InternalError(f"probability {values.min()} below {_PROB_FLOOR}")
    total = values.sum()
    if abs(total - 1.0) > _SUM_TOL:
        raise InternalError(f"probabilities sum to {total}, expected 1")
    values = np.where(values < 0.0, 0.0, values)
    values = values / values.sum()
    return {lab: float(v) for lab, v in zip(labels, values)}


def _digit_view(state: PauliState, k: int) -> np.ndarray:
    """Writable view of the coefficient tensor with digit k as axis 0."""
    return np.moveaxis(state.tensor(), state.axis(k), 0)


def _damp_axis_digit(state: PauliState, k: int, j: int, d1: float) -> None:
    """Zero the digit-k components perpendicular to Pauli j, scale j by d1."""
    view = _digit_view(state, k)
    for other in (1, 2, 3):
        if other != j:
            view[other] = 0.0
    view[j] *= d1


def expect_pauli_string(
    state: PauliState, string: str, noise: MeasurementNoise = IDEAL
) -> float:
    """Expectation of a Pauli string, most significant qubit first.

    Returns d1^w * 2^n * a_index with w = number of non-identity labels, and
    applies the per-qubit readout damping to every measured qubit.
    """
    if len(string) != state.n:
        raise ValueError(f"expected {state.n} labels, got {len(string)}")
    digits = []
    for ch in reversed(string):  # rightmost label is qubit 0
        try:
            digits.append(PAULI_LABELS.index(ch))
        except ValueError:
            raise ValueError(f"bad Pauli label {ch!r}, expected one of I, X, Y, Z") from None
    index = sum(d * 4**k for k, d in enumerate(digits))
    w = sum(1 for d in digits if d != 0)
    value = noise.d1**w * 2**state.n * state.coeffs[index]
    for k, d in enumerate(digits):
        if d != 0:
            _damp_axis_digit(state, k, d, noise.d1)
    return float(value)


def measure_qubit(
    state: PauliState,
    k: int,
    axis: np.ndarray | tuple[float, float, float],
    noise: MeasurementNoise = IDEAL,
) -> tuple[float, float]:
    """Binary measurement of qubit k along the Bloch unit vector ``axis``.

    Returns (p_plus, p_minus) = 1/2 (1 +- 2^n d1 axis.c) where c holds the
    three digit-k coefficients with every other digit 0.  The update projects
    each digit-k Bloch triple onto the axis and scales it by d1.
    """
    nvec = np.asarray(axis, dtype=np.float64)
    if nvec.shape != (3,):
        raise ValueError("measurement axis must be a 3-vector")
    if abs(np.linalg.norm(nvec) - 1.0) > 1e-9:
        raise ValueError("measurement axis must have unit length")
    c = np.array([state.coeffs[j * 4**k] for j in (1, 2, 3)])
    lean = 2**state.n * noise.d1 * float(nvec @ c)
    view = _digit_view(state, k)
    bloch = view[1:4]
    along = np.tensordot(nvec, bloch, axes=([0], [0]))
    view[1:4] = noise.d1 * np.multiply.outer(nvec, along)
    return ((1.0 + lean) / 2.0, (1.0 - lean) / 2.0)


def ensemble_distribution(
    state: PauliState, noise: MeasurementNoise = IDEAL
) -> dict[str, float]:
    """Probabilities of all 2^n bitstring outcomes, most significant bit first.

    prob(b) is the signed sum of coefficients whose digits all lie in {0, 3},
    each digit-3 factor contributing d1 * (+1 for bit 0, -1 for bit 1).  The
    update zeroes every coefficient with a digit in {1, 2} and scales each
    digit-3 occurrence by d1.
    """
    n = state.n
    sub = state.tensor()
    for ax in range(n):
        sub = np.take(sub, (0, 3), axis=ax)
    # per-axis map from (digit0, d1 * digit3) to the two outcome bits
    m = np.array([[1.0, noise.d1], [1.0, -noise.d1]])
    for ax in range(n):
        sub = np.moveaxis(np.tensordot(m, sub, axes=([1], [ax])), 0, ax)
    probs = sub.reshape(-1)
    labels = [format(i, f"0{n}b") for i in range(2**n)]
    for ax in range(n):
        view = np.moveaxis(state.tensor(), ax, 0)
        view[1] = 0.0
        view[2] = 0.0
        view[3] *= noise.d1
    return _finalize(labels, probs)


def bell_measure(
    state: PauliState, k: int, l: int, noise: MeasurementNoise = IDEAL
) -> dict[str, float]:
    """Bell-basis measurement of the qubit pair (k, l).

    Probabilities combine the four coefficients with digit_k = digit_l and
    all other digits 0; the three correlated terms are scaled by d2 with the
    projector sign patterns.  The update zeroes digit_k != digit_l
    coefficients and scales the matched non-identity ones by d2.
    """
    if k == l:
        raise ValueError("Bell measurement needs two distinct qubits")
    paired = [float(state.coeffs[j * 4**k + j * 4**l]) for j in range(4)]
    scale = 2**state.n / 4.0
    probs = np.array(
        [
            scale * (paired[0] + noise.d2 * sum(s * a for s, a in zip(BELL_SIGNS[lab], paired[1:])))
            for lab in BELL_LABELS
        ]
    )
    view = np.moveaxis(state.tensor(), (state.axis(k), state.axis(l)), (0, 1))
    for i in range(4):
        for j in range(4):
            if i != j:
                view[i, j] = 0.0
    for j in (1, 2, 3):
        view[j, j] *= noise.d2
    return _finalize(list(BELL_LABELS), probs)


def reset_qubit(state: PauliState, k: int) -> None:
    """Send qubit k to |0> regardless of its marginal; no noise applies.

    Digit-k components 1 and 2 vanish and component 3 is set equal to
    component 0, the Kraus action of {P0, sigma_x P1}.
    """
    view = _digit_view(state, k)
    view[1] = 0.0
    view[2] = 0.0
    view[3] = view[0]
