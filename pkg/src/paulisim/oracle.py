"""Dense-matrix reference simulator used to cross-check the Pauli-basis engine.

Everything here works on explicit 2^n x 2^n complex density matrices,
evolved by unitary conjugation and Kraus sums.  It is deliberately slow and
simple: the point is an independent second route for every operation the
coefficient engine implements, not performance.  Intended for n <= 8.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .state import PauliState

SIGMA = np.array(
    [
        [[1, 0], [0, 1]],
        [[0, 1], [1, 0]],
        [[0, -1j], [1j, 0]],
        [[1, 0], [0, -1]],
    ],
    dtype=np.complex128,
)

_AXIS_INDEX = {"x": 1, "y": 2, "z": 3}


@dataclass
class DenseState:
    """n qubits plus the full complex density matrix.

    Row/column bit k (counted from the least significant end) belongs to
    qubit k, matching the bit convention of the coefficient representation.
    """

    n: int
    rho: np.ndarray

    def copy(self) -> "DenseState":
        return DenseState(self.n, self.rho.copy())

    def validate(self, eig_tol: float = 1e-9) -> None:
        if self.rho.shape != (2**self.n, 2**self.n):
            raise ValueError(f"expected a {2 ** self.n} x {2 ** self.n} matrix")
        if np.max(np.abs(self.rho - self.rho.conj().T)) > 1e-10:
            raise ValueError("density matrix is not Hermitian within 1e-10")
        if abs(np.trace(self.rho) - 1.0) > 1e-10:
            raise ValueError("density matrix trace differs from 1 beyond 1e-10")
        if np.linalg.eigvalsh((self.rho + self.rho.conj().T) / 2).min() < -eig_tol:
            raise ValueError("density matrix has an eigenvalue below the PSD tolerance")


# ---------------------------------------------------------------------------
# Basis conversion


def to_dense(s: PauliState) -> DenseState:
    """Reassemble the full density matrix from Pauli coefficients."""
    t = s.tensor().astype(np.complex128)
    for _ in range(s.n):
        # consume the leading digit axis, appending its (row, col) pair
        t = np.tensordot(t, SIGMA, axes=([0], [0]))
    # axes now (r_{n-1}, c_{n-1}, ..., r_0, c_0); group rows then cols
    perm = list(range(0, 2 * s.n, 2)) + list(range(1, 2 * s.n, 2))
    rho = t.transpose(perm).reshape(2**s.n, 2**s.n)
    return DenseState(s.n, rho)


def from_dense(d: DenseState, herm_tol: float = 1e-10) -> PauliState:
    """Project a density matrix onto the Pauli basis: a_i = 2^-n Tr(rho P_i)."""
    if np.max(np.abs(d.rho - d.rho.conj().T)) > herm_tol:
        raise ValueError("matrix is not Hermitian within tolerance")
    t = d.rho.reshape((2,) * (2 * d.n))
    m = d.n
    for _ in range(d.n):
        # contract the outermost (row, col) pair against sigma[i, c, r]
        t = np.tensordot(t, SIGMA, axes=([0, m], [2, 1]))
        m -= 1
    coeffs = t.real.reshape(-1) / 2**d.n
    return PauliState(d.n, coeffs)


# ---------------------------------------------------------------------------
# Dense initialisations (built directly, not via PauliState)


def dense_zero(n: int) -> DenseState:
    rho = np.zeros((2**n, 2**n), dtype=np.complex128)
    rho[0, 0] = 1.0
    return DenseState(n, rho)


def dense_uniform(n: int) -> DenseState:
    dim = 2**n
    return DenseState(n, np.full((dim, dim), 1.0 / dim, dtype=np.complex128))


def dense_bitstring(bits: str) -> DenseState:
    n = len(bits)
    idx = int(bits, 2)  # most significant qubit first matches bit k = qubit k
    rho = np.zeros((2**n, 2**n), dtype=np.complex128)
    rho[idx, idx] = 1.0
    return DenseState(n, rho)


def dense_thermal(n: int, p: float) -> DenseState:
    rho = np.array([[1.0]], dtype=np.complex128)
    single = np.diag([p, 1.0 - p]).astype(np.complex128)
    for _ in range(n):
        rho = np.kron(rho, single)
    return DenseState(n, rho)


def random_state(n: int, rng: np.random.Generator) -> PauliState:
    """Random full-rank valid state, via a random positive matrix."""
    dim = 2**n
    a = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    rho = a @ a.conj().T
    rho /= np.trace(rho).real
    return from_dense(DenseState(n, rho))


# ---------------------------------------------------------------------------
# Operator application


def _apply_on_axes(t: np.ndarray, m: np.ndarray, axes: tuple[int, ...]) -> np.ndarray:
    """Contract operator ``m`` (2^k x 2^k) into tensor ``t`` on the given axes."""
    k = len(axes)
    mt = m.reshape((2,) * (2 * k))
    out = np.tensordot(mt, t, axes=(tuple(range(k, 2 * k)), axes))
    return np.moveaxis(out, tuple(range(k)), axes)


def apply_unitary(d: DenseState, u: np.ndarray, qubits: tuple[int, ...]) -> None:
    """In-place rho <- U rho U^dagger with U acting on the listed qubits.

    ``u`` is laid out with the first listed qubit as the kron-major slot.
    """
    n = d.n
    t = d.rho.reshape((2,) * (2 * n))
    row_axes = tuple(n - 1 - q for q in qubits)
    col_axes = tuple(2 * n - 1 - q for q in qubits)
    t = _apply_on_axes(t, u, row_axes)
    t = _apply_on_axes(t, u.conj(), col_axes)
    d.rho = t.reshape(2**n, 2**n)


def apply_kraus(d: DenseState, kraus: list[np.ndarray], qubits: tuple[int, ...]) -> None:
    """In-place rho <- sum_mu M_mu rho M_mu^dagger on the listed qubits."""
    dim = 2 ** len(qubits)
    comp = sum(m.conj().T @ m for m in kraus)
    if np.max(np.abs(comp - np.eye(dim))) > 1e-10:
        raise ValueError("Kraus set does not resolve the identity within 1e-10")
    n = d.n
    row_axes = tuple(n - 1 - q for q in qubits)
    col_axes = tuple(2 * n - 1 - q for q in qubits)
    t = d.rho.reshape((2,) * (2 * n))
    acc = np.zeros_like(t)
    for m in kraus:
        term = _apply_on_axes(t, m, row_axes)
        acc += _apply_on_axes(term, m.conj(), col_axes)
    d.rho = acc.reshape(2**n, 2**n)


def _mixture(d: DenseState, unitaries: list[np.ndarray], qubits: tuple[int, ...]) -> None:
    """Equal-weight mixture of unitary conjugations."""
    acc = np.zeros_like(d.rho)
    for u in unitaries:
        branch = d.copy()
        apply_unitary(branch, u, qubits)
        acc += branch.rho
    d.rho = acc / len(unitaries)


def expectation(d: DenseState, op: np.ndarray, qubits: tuple[int, ...]) -> float:
    """Tr(rho * op) for an operator embedded on the listed qubits."""
    t = d.rho.reshape((2,) * (2 * d.n))
    row_axes = tuple(d.n - 1 - q for q in qubits)
    t = _apply_on_axes(t, op, row_axes)
    return float(np.trace(t.reshape(2**d.n, 2**d.n)).real)


# ---------------------------------------------------------------------------
# Gate unitaries (phase conventions irrelevant under conjugation)


def rotation_matrix(axis: str, theta: float) -> np.ndarray:
    """exp(-i theta sigma_axis / 2)."""
    s = SIGMA[_AXIS_INDEX[axis]]
    return np.cos(theta / 2) * SIGMA[0] - 1j * np.sin(theta / 2) * s


def u3_matrix(theta: float, phi: float, lam: float) -> np.ndarray:
    c, s = np.cos(theta / 2), np.sin(theta / 2)
    return np.array(
        [
            [c, -np.exp(1j * lam) * s],
            [np.exp(1j * phi) * s, np.exp(1j * (phi + lam)) * c],
        ],
        dtype=np.complex128,
    )


def u1_matrix(lam: float) -> np.ndarray:
    return np.diag([1.0, np.exp(1j * lam)]).astype(np.complex128)


NAMED_1Q = {
    "x": SIGMA[1],
    "y": SIGMA[2],
    "z": SIGMA[3],
    "h": np.array([[1, 1], [1, -1]], dtype=np.complex128) / np.sqrt(2),
    "s": np.diag([1, 1j]).astype(np.complex128),
    "sdg": np.diag([1, -1j]).astype(np.complex128),
    "t": np.diag([1, np.exp(1j * np.pi / 4)]).astype(np.complex128),
    "tdg": np.diag([1, np.exp(-1j * np.pi / 4)]).astype(np.complex128),
}


def cnot_matrix(alpha: float = 0.0) -> np.ndarray:
    """Controlled bit-flip, control in the kron-major slot.

    ``alpha`` is the pulse-duration error angle: the target operation becomes
    R_x(alpha) sigma_x instead of sigma_x.
    """
    v = rotation_matrix("x", alpha) @ SIGMA[1]
    u = np.zeros((4, 4), dtype=np.complex128)
    u[:2, :2] = np.eye(2)
    u[2:, 2:] = v
    return u


def toffoli_matrix() -> np.ndarray:
    u = np.eye(8, dtype=np.complex128)
    u[[6, 7], [6, 7]] = 0.0
    u[6, 7] = u[7, 6] = 1.0
    return u


# ---------------------------------------------------------------------------
# Measurement and reset channels (dense forms of the noisy updates)


def _flip_operator(axis_vec: np.ndarray) -> np.ndarray:
    """A Pauli rotation perpendicular to the measurement axis (bit flip)."""
    # any unit vector orthogonal to the axis works; pick deterministically
    trial = np.array([1.0, 0.0, 0.0])
    if abs(np.dot(trial, axis_vec)) > 0.9:
        trial = np.array([0.0, 1.0, 0.0])
    perp = trial - np.dot(trial, axis_vec) * axis_vec
    perp /= np.linalg.norm(perp)
    return sum(perp[i] * SIGMA[i + 1] for i in range(3))


def _axis_damped_projective(d: DenseState, k: int, axis_vec: np.ndarray, d1: float) -> None:
    """Projective measurement along an axis with depolarisation strength d1.

    Leaves the identity component alone, keeps the parallel Bloch component
    scaled by d1, and removes the perpendicular ones; realised as projection
    followed by a probabilistic bit flip.
    """
    op = sum(axis_vec[i] * SIGMA[i + 1] for i in range(3))
    p_plus = (SIGMA[0] + op) / 2
    p_minus = (SIGMA[0] - op) / 2
    apply_kraus(d, [p_plus, p_minus], (k,))
    if d1 != 1.0:
        flip = _flip_operator(axis_vec)
        w_keep, w_flip = (1 + d1) / 2, (1 - d1) / 2
        kept = d.copy()
        apply_unitary(d, flip, (k,))
        d.rho = w_keep * kept.rho + w_flip * d.rho


def dense_measure_qubit(
    d: DenseState, k: int, axis_vec: np.ndarray, d1: float
) -> tuple[float, float]:
    """Single-qubit measurement along an axis: (p_plus, p_minus) with damping d1."""
    op = sum(axis_vec[i] * SIGMA[i + 1] for i in range(3))
    mean = expectation(d, op, (k,))
    p_plus = (1 + d1 * mean) / 2
    _axis_damped_projective(d, k, axis_vec, d1)
    return (p_plus, 1.0 - p_plus)


def dense_expect_string(d: DenseState, labels: list[int], d1: float) -> float:
    """Expectation of a Pauli string with readout damping; updates the state."""
    n = d.n
    full = np.array([[1.0]], dtype=np.complex128)
    for k in reversed(range(n)):
        full = np.kron(full, SIGMA[labels[k]])
    w = sum(1 for v in labels if v != 0)
    value = float(np.trace(d.rho @ full).real) * d1**w
    for k in range(n):
        if labels[k] != 0:
            axis_vec = np.zeros(3)
            axis_vec[labels[k] - 1] = 1.0
            _axis_damped_projective(d, k, axis_vec, d1)
    return value


def dense_ensemble(d: DenseState, d1: float) -> np.ndarray:
    """All-qubit computational-basis outcome probabilities; updates the state."""
    z_axis = np.array([0.0, 0.0, 1.0])
    for k in range(d.n):
        _axis_damped_projective(d, k, z_axis, d1)
    return np.diag(d.rho).real.copy()


BELL_SIGNS = {
    "phi+": (1.0, -1.0, 1.0),
    "phi-": (-1.0, 1.0, 1.0),
    "psi+": (1.0, 1.0, -1.0),
    "psi-": (-1.0, -1.0, -1.0),
}


def _bell_projector(signs: tuple[float, float, float]) -> np.ndarray:
    acc = np.kron(SIGMA[0], SIGMA[0]).astype(np.complex128)
    for j, s in enumerate(signs, start=1):
        acc = acc + s * np.kron(SIGMA[j], SIGMA[j])
    return acc / 4


def dense_bell(d: DenseState, k: int, l: int, d2: float) -> dict[str, float]:
    """Bell-basis measurement of qubits (k, l) with damping d2; updates state."""
    probs = {}
    for label, signs in BELL_SIGNS.items():
        # projector is idempotent, so Tr(P rho P) = Tr(P rho)
        probs[label] = expectation(d, _bell_projector(signs), (k, l))
    # damped probabilities: non-identity contributions shrink by d2
    probs = {lab: (1 - d2) / 4 + d2 * p for lab, p in probs.items()}
    # state: project onto the Bell-diagonal algebra, then damp by pair twirl
    projected = np.zeros_like(d.rho)
    for signs in BELL_SIGNS.values():
        proj = _bell_projector(signs)
        branch = d.copy()
        t = branch.rho.reshape((2,) * (2 * d.n))
        row_axes = (d.n - 1 - k, d.n - 1 - l)
        col_axes = (2 * d.n - 1 - k, 2 * d.n - 1 - l)
        t = _apply_on_axes(t, proj, row_axes)
        t = _apply_on_axes(t, proj.conj(), col_axes)
        projected += t.reshape(d.rho.shape)
    if d2 != 1.0:
        twirled = np.zeros_like(projected)
        base = DenseState(d.n, projected)
        for i in range(4):
            for j in range(4):
                branch = base.copy()
                apply_unitary(branch, np.kron(SIGMA[i], SIGMA[j]), (k, l))
                twirled += branch.rho
        d.rho = d2 * projected + (1 - d2) * twirled / 16
    else:
        d.rho = projected
    return probs


def dense_reset(d: DenseState, k: int) -> None:
    """rho -> P0 rho P0 + X P1 rho P1 X on qubit k."""
    p0 = (SIGMA[0] + SIGMA[3]) / 2
    p1 = (SIGMA[0] - SIGMA[3]) / 2
    apply_kraus(d, [p0, SIGMA[1] @ p1], (k,))


# ---------------------------------------------------------------------------
# Memory noise channels


def decohere_kraus(f: float) -> list[np.ndarray]:
    return [
        np.sqrt((1 + f) / 2) * SIGMA[0],
        np.sqrt((1 - f) / 2) * SIGMA[3],
    ]


def decay_kraus(g: float, p: float) -> list[np.ndarray]:
    sg = np.sqrt(g)
    s1g = np.sqrt(1 - g)
    return [
        np.sqrt(p) * np.array([[1, 0], [0, sg]], dtype=np.complex128),
        np.sqrt(p) * np.array([[0, s1g], [0, 0]], dtype=np.complex128),
        np.sqrt(1 - p) * np.array([[sg, 0], [0, 1]], dtype=np.complex128),
        np.sqrt(1 - p) * np.array([[0, 0], [s1g, 0]], dtype=np.complex128),
    ]


def dense_memory_step(d: DenseState, f: float, g: float, p: float) -> None:
    """Apply one decoherence + decay step to every qubit."""
    dk = decohere_kraus(f)
    gk = decay_kraus(g, p)
    for k in range(d.n):
        apply_kraus(d, dk, (k,))
        apply_kraus(d, gk, (k,))


# ---------------------------------------------------------------------------
# Complete-positivity certification


def _pauli_products(m: int) -> list[np.ndarray]:
    """The 4^m Pauli-product basis, first operand kron-major."""
    ops = [np.array([[1.0]], dtype=np.complex128)]
    for _ in range(m):
        ops = [np.kron(a, SIGMA[i]) for a in ops for i in range(4)]
    return ops


def choi_matrix(ptm: np.ndarray) -> np.ndarray:
    """Choi matrix of a channel given by its Pauli transfer matrix.

    Uses J = (1/d) sum_{k,i} T[i,k] (P_k^T kron P_i); the channel is
    completely positive exactly when J is positive semidefinite.
    """
    size = ptm.shape[0]
    m = {4: 1, 16: 2}.get(size)
    if m is None:
        raise ValueError("expected a 4x4 or 16x16 transfer matrix")
    basis = _pauli_products(m)
    d = 2**m
    j = np.zeros((d * d, d * d), dtype=np.complex128)
    for k in range(size):
        for i in range(size):
            if ptm[i, k] != 0.0:
                j += ptm[i, k] * np.kron(basis[k].T, basis[i])
    return j / d


def choi_psd_check(ptm: np.ndarray) -> float:
    """Smallest eigenvalue of the channel's Choi matrix (>= 0 means CP)."""
    j = choi_matrix(ptm)
    return float(np.linalg.eigvalsh((j + j.conj().T) / 2).min())


# ---------------------------------------------------------------------------
# Circuit execution (dual path for the coefficient engine)

_MEASURE_AXES = {
    "measure": np.array([0.0, 0.0, 1.0]),
    "measure_x": np.array([1.0, 0.0, 0.0]),
    "measure_y": np.array([0.0, 1.0, 0.0]),
}


def _string_labels(string: str) -> list[int]:
    """Pauli digits per qubit (qubit 0 from the rightmost character)."""
    return ["IXYZ".index(ch) for ch in reversed(string)]


def _bit_label(i: int, n: int) -> str:
    return format(i, f"0{n}b")


def run_instructions_dense(d: DenseState, instructions) -> list:
    """Execute raw instructions in source order with zero noise.

    Gates act as exact unitaries, measurements as ideal projective channels
    (with their non-selective updates).  Returns the measurement records as
    plain tuples; mutates ``d``.
    """
    records: list = []
    for ins in instructions:
        k = ins.kind
        if k == "barrier":
            continue
        if k in NAMED_1Q:
            apply_unitary(d, NAMED_1Q[k], ins.qubits)
        elif k == "u1":
            apply_unitary(d, u1_matrix(ins.angles[0]), ins.qubits)
        elif k == "u2":
            apply_unitary(d, u3_matrix(np.pi / 2, ins.angles[0], ins.angles[1]), ins.qubits)
        elif k == "u3":
            apply_unitary(d, u3_matrix(*ins.angles), ins.qubits)
        elif k == "cx":
            apply_unitary(d, cnot_matrix(), ins.qubits)
        elif k == "ccx":
            apply_unitary(d, toffoli_matrix(), ins.qubits)
        elif k == "reset":
            dense_reset(d, ins.qubits[0])
        elif k in _MEASURE_AXES:
            probs = dense_measure_qubit(d, ins.qubits[0], _MEASURE_AXES[k], 1.0)
            records.append(("measure", ins.qubits[0], k, probs))
        elif k == "expect":
            value = dense_expect_string(d, _string_labels(ins.string), 1.0)
            records.append(("expect", ins.string, value))
        elif k == "ensemble":
            probs = dense_ensemble(d, 1.0)
            records.append(
                ("ensemble", {_bit_label(i, d.n): float(p) for i, p in enumerate(probs)})
            )
        elif k == "bell":
            records.append(("bell", ins.qubits, dense_bell(d, *ins.qubits, 1.0)))
        else:
            raise ValueError(f"unknown instruction kind {k!r}")
    return records


def _rotation_mixture(d: DenseState, axis: str, theta: float, alpha: float, r: float, q: int) -> None:
    delta0 = np.arccos(r)
    base = theta + alpha
    _mixture(
        d,
        [rotation_matrix(axis, base + delta0), rotation_matrix(axis, base - delta0)],
        (q,),
    )


def run_schedule_dense(d: DenseState, schedule, noise) -> list:
    """Execute a compiled schedule with the full noise model, densely.

    Mirrors the coefficient engine step for step: noisy gates as two-point
    angle mixtures, measurements with d1/d2 damping, memory noise after
    every partition.  ``noise`` is a NoiseModel; ``schedule`` a Schedule.
    """
    rot = noise.rotation()
    meas = noise.measurement()
    mem = noise.memory()
    records: list = []
    for part in schedule.partitions:
        for ins in part.members:
            k = ins.kind
            q = ins.qubits[0] if ins.qubits else 0
            if k == "u1":
                az, rz = rot.axis("z")
                _rotation_mixture(d, "z", ins.angles[0], az, rz, q)
            elif k == "u3":
                theta, phi, lam = ins.angles
                az, rz = rot.axis("z")
                ay, ry = rot.axis("y")
                _rotation_mixture(d, "z", lam, az, rz, q)
                _rotation_mixture(d, "y", theta, ay, ry, q)
                _rotation_mixture(d, "z", phi, az, rz, q)
            elif k == "cx":
                delta0 = np.arccos(rot.r_cx)
                _mixture(
                    d,
                    [
                        cnot_matrix(rot.alpha_cx + delta0),
                        cnot_matrix(rot.alpha_cx - delta0),
                    ],
                    ins.qubits,
                )
            elif k == "reset":
                dense_reset(d, q)
            elif k in _MEASURE_AXES:
                probs = dense_measure_qubit(d, q, _MEASURE_AXES[k], meas.d1)
                records.append(("measure", q, k, probs))
            elif k == "expect":
                value = dense_expect_string(d, _string_labels(ins.string), meas.d1)
                records.append(("expect", ins.string, value))
            elif k == "ensemble":
                probs = dense_ensemble(d, meas.d1)
                records.append(
                    ("ensemble", {_bit_label(i, d.n): float(p) for i, p in enumerate(probs)})
                )
            elif k == "bell":
                records.append(("bell", ins.qubits, dense_bell(d, *ins.qubits, meas.d2)))
            else:
                raise ValueError(f"unexpected instruction kind {k!r} in a schedule")
        f, g = mem.pair(part.category)
        dense_memory_step(d, f, g, mem.p)
    return records
