import numpy as np
import pytest

from helpers import random_pauli_state
from paulisim import oracle
from paulisim.errors import InternalError
from paulisim.gates import apply_cnot, apply_single, named_gate_transfer
from paulisim.measurement import (
    BELL_LABELS,
    IDEAL,
    MeasurementNoise,
    bell_measure,
    ensemble_distribution,
    expect_pauli_string,
    measure_qubit,
    reset_qubit,
)
from paulisim.state import PauliState, init_bitstring, init_uniform, init_zero

Z = np.array([0.0, 0.0, 1.0])
X = np.array([1.0, 0.0, 0.0])


def bell_pair() -> PauliState:
    s = init_zero(2)
    apply_single(s, 0, named_gate_transfer("h"))
    apply_cnot(s, 0, 1)
    return s


# --- expectation values ------------------------------------------------------


def test_expect_on_bell_pair_correlators():
    assert abs(expect_pauli_string(bell_pair(), "ZZ") - 1.0) < 1e-12
    assert abs(expect_pauli_string(bell_pair(), "XX") - 1.0) < 1e-12
    assert abs(expect_pauli_string(bell_pair(), "YY") + 1.0) < 1e-12
    assert abs(expect_pauli_string(bell_pair(), "ZI")) < 1e-12
    assert abs(expect_pauli_string(bell_pair(), "II") - 1.0) < 1e-12


def test_expect_string_is_most_significant_first():
    s = init_bitstring("10")
    assert abs(expect_pauli_string(s.copy(), "ZI") + 1.0) < 1e-12  # qubit 1 is |1>
    assert abs(expect_pauli_string(s.copy(), "IZ") - 1.0) < 1e-12


def test_expect_damping_scales_by_weight():
    noise = MeasurementNoise(d1=0.9)
    assert abs(expect_pauli_string(bell_pair(), "ZZ", noise) - 0.81) < 1e-12
    s = init_zero(1)
    assert abs(expect_pauli_string(s, "Z", noise) - 0.9) < 1e-12


def test_expect_updates_measured_components():
    s = bell_pair()
    expect_pauli_string(s, "ZZ", MeasurementNoise(d1=0.8))
    # each measured qubit damps its axis component, so ZZ picks up d1^2
    assert abs(expect_pauli_string(s, "ZZ") - 0.64) < 1e-12


def test_expect_input_validation():
    s = init_zero(2)
    with pytest.raises(ValueError):
        expect_pauli_string(s, "Z")
    with pytest.raises(ValueError):
        expect_pauli_string(s, "ZQ")


def test_expect_matches_dense_trace(rng):
    noise = MeasurementNoise(d1=0.93)
    s = random_pauli_state(rng, 3)
    d = oracle.to_dense(s)
    got = expect_pauli_string(s, "XZY", noise)
    labels = ["IXYZ".index(ch) for ch in reversed("XZY")]  # qubit 0 first
    want = oracle.dense_expect_string(d, labels, noise.d1)
    assert abs(got - want) < 1e-12
    back = oracle.from_dense(d)
    assert np.max(np.abs(s.coeffs - back.coeffs)) < 1e-12


# --- single-qubit measurement -------------------------------------------------


def test_ground_state_z_measurement_with_readout_damping():
    probs = measure_qubit(init_zero(1), 0, Z, MeasurementNoise(d1=0.9))
    assert abs(probs[0] - 0.95) < 1e-12
    assert abs(probs[1] - 0.05) < 1e-12


def test_plus_state_z_measurement_is_fair_coin():
    s = init_uniform(1)
    probs = measure_qubit(s, 0, Z)
    assert abs(probs[0] - 0.5) < 1e-12
    # non-selective update wipes the transverse components
    assert np.allclose(s.coeffs, [0.5, 0.0, 0.0, 0.0], atol=1e-15)


def test_x_basis_measurement_of_plus_state_is_deterministic():
    s = init_uniform(1)
    probs = measure_qubit(s, 0, X)
    assert abs(probs[0] - 1.0) < 1e-12
    assert np.allclose(s.coeffs, [0.5, 0.5, 0.0, 0.0], atol=1e-15)


def test_measurement_update_projects_remote_correlations():
    s = bell_pair()
    measure_qubit(s, 0, Z)
    # ZZ survives an ideal z measurement, XX does not
    assert abs(expect_pauli_string(s.copy(), "ZZ") - 1.0) < 1e-12
    assert abs(expect_pauli_string(s.copy(), "XX")) < 1e-12


def test_tilted_axis_measurement_matches_dense(rng):
    axis = np.array([1.0, 1.0, 1.0]) / np.sqrt(3)
    noise = MeasurementNoise(d1=0.9)
    s = random_pauli_state(rng, 2)
    d = oracle.to_dense(s)
    got = measure_qubit(s, 1, axis, noise)
    want = oracle.dense_measure_qubit(d, 1, axis, noise.d1)
    assert max(abs(a - b) for a, b in zip(got, want)) < 1e-12
    back = oracle.from_dense(d)
    assert np.max(np.abs(s.coeffs - back.coeffs)) < 1e-12


def test_measurement_axis_validation(rng):
    s = random_pauli_state(rng, 1)
    with pytest.raises(ValueError):
        measure_qubit(s, 0, np.array([1.0, 1.0, 0.0]))
    with pytest.raises(ValueError):
        measure_qubit(s, 0, np.array([1.0, 0.0]))


# --- ensemble measurement ------------------------------------------------------


def test_ensemble_of_ground_state_with_damping():
    dist = ensemble_distribution(init_zero(1), MeasurementNoise(d1=0.8))
    assert abs(dist["0"] - 0.9) < 1e-12
    assert abs(dist["1"] - 0.1) < 1e-12


def test_ensemble_labels_most_significant_first():
    dist = ensemble_distribution(init_bitstring("10"))
    assert abs(dist["10"] - 1.0) < 1e-12


def test_ensemble_of_bell_pair():
    dist = ensemble_distribution(bell_pair())
    assert abs(dist["00"] - 0.5) < 1e-12
    assert abs(dist["11"] - 0.5) < 1e-12
    assert abs(dist["01"]) < 1e-12 and abs(dist["10"]) < 1e-12


def test_ensemble_update_equals_per_qubit_z_measurements(rng):
    noise = MeasurementNoise(d1=0.85)
    s1 = random_pauli_state(rng, 3)
    s2 = s1.copy()
    ensemble_distribution(s1, noise)
    for q in range(3):
        measure_qubit(s2, q, Z, noise)
    assert np.max(np.abs(s1.coeffs - s2.coeffs)) < 1e-12


def test_ensemble_matches_dense_diagonal(rng):
    noise = MeasurementNoise(d1=0.9)
    s = random_pauli_state(rng, 3)
    d = oracle.to_dense(s)
    dist = ensemble_distribution(s, noise)
    probs = oracle.dense_ensemble(d, noise.d1)
    for i, p in enumerate(probs):
        assert abs(dist[format(i, "03b")] - p) < 1e-12


# --- Bell measurement -----------------------------------------------------------


def test_bell_measurement_identifies_phi_plus():
    dist = bell_measure(bell_pair(), 0, 1)
    assert abs(dist["phi+"] - 1.0) < 1e-12
    assert sum(dist.values()) == pytest.approx(1.0, abs=1e-12)


def test_bell_measurement_with_damping_worked_value():
    dist = bell_measure(bell_pair(), 0, 1, MeasurementNoise(d2=0.9))
    assert abs(dist["phi+"] - 0.925) < 1e-12
    for lab in ("phi-", "psi+", "psi-"):
        assert abs(dist[lab] - 0.025) < 1e-12


def test_bell_measurement_distinguishes_all_four_states(rng):
    # prepare each Bell state from Phi+ by local flips
    preps = {
        "phi+": [],
        "psi+": [("x", 0)],
        "phi-": [("z", 0)],
        "psi-": [("x", 0), ("z", 0)],
    }
    for label, flips in preps.items():
        s = bell_pair()
        for name, q in flips:
            apply_single(s, q, named_gate_transfer(name))
        dist = bell_measure(s, 0, 1)
        assert abs(dist[label] - 1.0) < 1e-12, label


def test_bell_measurement_matches_dense(rng):
    noise = MeasurementNoise(d2=0.88)
    s = random_pauli_state(rng, 3)
    d = oracle.to_dense(s)
    got = bell_measure(s, 2, 0, noise)
    want = oracle.dense_bell(d, 2, 0, noise.d2)
    for lab in BELL_LABELS:
        assert abs(got[lab] - want[lab]) < 1e-12
    back = oracle.from_dense(d)
    assert np.max(np.abs(s.coeffs - back.coeffs)) < 1e-12


def test_bell_measurement_needs_distinct_qubits():
    with pytest.raises(ValueError):
        bell_measure(bell_pair(), 1, 1)


# --- reset ----------------------------------------------------------------------


def test_reset_forces_ground_state(rng):
    s = random_pauli_state(rng, 2)
    reset_qubit(s, 0)
    assert abs(expect_pauli_string(s.copy(), "IZ") - 1.0) < 1e-12


def test_reset_matches_dense(rng):
    s = random_pauli_state(rng, 2)
    d = oracle.to_dense(s)
    reset_qubit(s, 1)
    oracle.dense_reset(d, 1)
    back = oracle.from_dense(d)
    assert np.max(np.abs(s.coeffs - back.coeffs)) < 1e-12


def test_reset_discards_correlations():
    s = bell_pair()
    reset_qubit(s, 0)
    dist = ensemble_distribution(s)
    assert abs(dist["00"] - 0.5) < 1e-12
    assert abs(dist["10"] - 0.5) < 1e-12


# --- distribution guards ----------------------------------------------------------


def test_distributions_reject_significantly_negative_probabilities():
    s = init_zero(1)
    s.coeffs[3] = 0.75  # not a state: p(1) = -0.25
    with pytest.raises(InternalError):
        ensemble_distribution(s)


def test_distributions_reject_bad_normalization():
    s = init_zero(1)
    s.coeffs[0] = 0.51  # trace is 1.02
    with pytest.raises(InternalError):
        ensemble_distribution(s)


def test_distributions_clamp_tiny_negatives():
    s = init_zero(1)
    s.coeffs[3] = 0.5 + 4e-11  # p(1) = -4e-11, inside the floor
    dist = ensemble_distribution(s)
    assert dist["1"] == 0.0
    assert abs(sum(dist.values()) - 1.0) < 1e-12


def test_noise_parameter_ranges():
    with pytest.raises(ValueError):
        MeasurementNoise(d1=1.3)
    with pytest.raises(ValueError):
        MeasurementNoise(d2=-0.2)
    assert IDEAL.d1 == 1.0 and IDEAL.d2 == 1.0
