"""Density matrices stored as real coefficients in the tensor-product Pauli basis.

An ``n``-qubit density matrix is held as the flat array of its 4^n real
expansion coefficients ``a``:

    rho = sum_idx a[idx] * (sigma_{i_{n-1}} (x) ... (x) sigma_{i_1} (x) sigma_{i_0})

where ``idx = sum_k i_k * 4**k`` and ``i_k`` in {0, 1, 2, 3} selects
I, sigma_x, sigma_y, sigma_z acting on qubit ``k``.

Index convention (used everywhere in this package): qubit ``k`` occupies the
k-th *least significant* base-4 digit of the flat index.  Bitstrings and
Pauli strings in text form are written most-significant-qubit first, so the
rightmost character always refers to qubit 0.

Two invariants characterise a valid state:

* ``a[0] == 2**-n`` (unit trace),
* ``2**n * sum(a**2) <= 1`` (purity at most 1), up to rounding slack.
"""

from __future__ import annotations

import io
from pathlib import Path

import numpy as np

from .errors import CapacityError, StateFormatError

#: Refuse to allocate states above this many qubits unless the caller raises
#: the cap explicitly.  Coefficient storage quadruples per added qubit.
DEFAULT_QUBIT_CAP = 14

#: Slack allowed on the purity bound 2^n * sum(a^2) <= 1.
PURITY_TOL = 1e-9

_FILE_HEADER = "pauli-dm v1"


class PauliState:
    """Mutable n-qubit state: qubit count plus the 4^n Pauli coefficients.

    Gate, measurement and noise operations mutate ``coeffs`` in place.  The
    trace coefficient ``coeffs[0]`` is never written by any operation.
    """

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs: np.ndarray):
        if n < 1:
            raise ValueError(f"qubit count must be >= 1, got {n}")
        coeffs = np.asarray(coeffs, dtype=np.float64)
        if coeffs.shape != (4**n,):
            raise ValueError(f"expected {4**n} coefficients for n={n}, got shape {coeffs.shape}")
        self.n = n
        self.coeffs = coeffs

    def copy(self) -> "PauliState":
        return PauliState(self.n, self.coeffs.copy())

    def tensor(self) -> np.ndarray:
        """View of the coefficients as an n-dimensional (4, 4, ..., 4) array.

        Axis ``n - 1 - k`` of the view indexes the Pauli digit of qubit ``k``
        (C-order flattening puts qubit 0 in the least significant digit).
        """
        return self.coeffs.reshape((4,) * self.n)

    def axis(self, k: int) -> int:
        """Tensor-view axis belonging to qubit ``k``."""
        if not 0 <= k < self.n:
            raise IndexError(f"qubit index {k} out of range for n={self.n}")
        return self.n - 1 - k

    def validate(self) -> None:
        """Raise ``StateFormatError`` if a state invariant is broken."""
        trace = self.coeffs[0]
        if abs(trace - 2.0**-self.n) > 1e-12:
            raise StateFormatError(
                f"trace coefficient is {trace!r}, expected {2.0 ** -self.n!r} (index 0)"
            )
        pur = purity(self)
        if pur > 1.0 + PURITY_TOL:
            raise StateFormatError(f"purity bound violated: 2^n * sum(a^2) = {pur!r} > 1")

    def __repr__(self) -> str:
        return f"PauliState(n={self.n})"


def _check_capacity(n: int, max_qubits: int) -> None:
    if n < 1:
        raise ValueError(f"qubit count must be >= 1, got {n}")
    if n > max_qubits:
        raise CapacityError(f"n={n} exceeds the qubit cap of {max_qubits}")


def _product_state(factors: list[np.ndarray]) -> PauliState:
    """Tensor product of per-qubit coefficient 4-vectors; factors[k] is qubit k."""
    coeffs = np.array([1.0])
    for f in factors:  # qubit 0 first: later factors become more significant
        coeffs = np.kron(f, coeffs)
    return PauliState(len(factors), coeffs)


def init_zero(n: int, max_qubits: int = DEFAULT_QUBIT_CAP) -> PauliState:
    """All qubits in |0>: the product of (I + sigma_z)/2 factors."""
    _check_capacity(n, max_qubits)
    q = np.array([0.5, 0.0, 0.0, 0.5])
    return _product_state([q] * n)


def init_uniform(n: int, max_qubits: int = DEFAULT_QUBIT_CAP) -> PauliState:
    """All qubits in |+>: the product of (I + sigma_x)/2 factors."""
    _check_capacity(n, max_qubits)
    q = np.array([0.5, 0.5, 0.0, 0.0])
    return _product_state([q] * n)


def init_bitstring(bits: str, max_qubits: int = DEFAULT_QUBIT_CAP) -> PauliState:
    """Computational basis state given as a binary string.

    The string is written most-significant-qubit first: ``bits[-1]`` is
    qubit 0.  Bit 0 maps to (I + sigma_z)/2 and bit 1 to (I - sigma_z)/2.
    """
    if not bits or any(c not in "01" for c in bits):
        raise ValueError(f"bitstring must be non-empty over {{0,1}}, got {bits!r}")
    _check_capacity(len(bits), max_qubits)
    factors = []
    for c in reversed(bits):  # qubit 0 first
        sign = 1.0 if c == "0" else -1.0
        factors.append(np.array([0.5, 0.0, 0.0, 0.5 * sign]))
    return _product_state(factors)


def init_thermal(n: int, p: float, max_qubits: int = DEFAULT_QUBIT_CAP) -> PauliState:
    """Factorised equilibrium state diag(p, 1-p) on every qubit.

    ``p`` is the ground-level population; p = 1 reproduces ``init_zero``
    and p = 1/2 the maximally mixed state.
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"thermal population p must be in [0, 1], got {p}")
    _check_capacity(n, max_qubits)
    q = np.array([0.5, 0.0, 0.0, p - 0.5])
    return _product_state([q] * n)


def overlap(s1: PauliState, s2: PauliState) -> float:
    """Tr(rho1 rho2) = 2^n sum_i a_i b_i; the closeness measure for states."""
    if s1.n != s2.n:
        raise ValueError(f"qubit counts differ: {s1.n} vs {s2.n}")
    return float(2.0**s1.n * np.dot(s1.coeffs, s2.coeffs))


def purity(s: PauliState) -> float:
    """Tr(rho^2) = 2^n sum_i a_i^2; equals 1 exactly for pure states."""
    return float(2.0**s.n * np.dot(s.coeffs, s.coeffs))


def partial_trace(s: PauliState, k: int) -> PauliState:
    """Trace out qubit ``k``, returning the (n-1)-qubit reduced state.

    The surviving coefficients are twice those with digit k equal to 0;
    qubits above ``k`` shift down by one position.
    """
    if s.n < 2:
        raise ValueError("partial_trace needs at least 2 qubits")
    axis = s.axis(k)
    reduced = 2.0 * np.take(s.tensor(), 0, axis=axis)
    return PauliState(s.n - 1, reduced.reshape(-1).copy())


def save_state(s: PauliState, sink: str | Path | io.TextIOBase) -> None:
    """Write the coefficient file: a header line, then one decimal per line.

    Values are printed with full round-trip precision so save/load is
    bit-exact.
    """
    lines = [f"{_FILE_HEADER} n={s.n}"]
    lines.extend(repr(float(c)) for c in s.coeffs)
    text = "\n".join(lines) + "\n"
    if isinstance(sink, (str, Path)):
        Path(sink).write_text(text)
    else:
        sink.write(text)


def load_state(source: str | Path | io.TextIOBase, max_qubits: int = DEFAULT_QUBIT_CAP) -> PauliState:
    """Read a coefficient file and validate both state invariants."""
    if isinstance(source, (str, Path)):
        text = Path(source).read_text()
    else:
        text = source.read()
    lines = text.splitlines()
    if not lines or not lines[0].startswith(_FILE_HEADER):
        raise StateFormatError(f"missing header line {_FILE_HEADER!r} n=<n>")
    header = lines[0]
    try:
        n = int(header.split("n=", 1)[1])
    except (IndexError, ValueError):
        raise StateFormatError(f"malformed header {header!r}") from None
    if n < 1:
        raise StateFormatError(f"header declares invalid qubit count {n}")
    if n > max_qubits:
        raise CapacityError(f"file declares n={n}, above the qubit cap of {max_qubits}")

    values = []
    for i, line in enumerate(lines[1:], start=1):
        if not line.strip():
            continue
        try:
            v = float(line)
        except ValueError:
            raise StateFormatError(f"coefficient {len(values)} is not a number: {line!r}") from None
        if not np.isfinite(v):
            raise StateFormatError(f"coefficient {len(values)} is not finite: {line!r}")
        values.append(v)
    if len(values) != 4**n:
        raise StateFormatError(
            f"expected {4 ** n} coefficients for n={n}, got {len(values)}"
            f" (first missing index {min(len(values), 4 ** n)})"
        )
    state = PauliState(n, np.array(values))
    state.validate()
    return state
