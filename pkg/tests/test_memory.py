import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import random_pauli_state
from paulisim import oracle
from paulisim.memory import NOISELESS, MemoryNoise, decay, decohere, end_of_partition
from paulisim.state import PauliState, init_thermal, init_uniform, init_zero

UNIT = st.floats(0.0, 1.0)


def test_decohere_damps_every_transverse_digit():
    s = init_uniform(2)
    decohere(s, 0.8)
    # XX carries two transverse digits, XI and IX one each
    assert abs(s.coeffs[5] - 0.25 * 0.64) < 1e-15
    assert abs(s.coeffs[1] - 0.25 * 0.8) < 1e-15
    assert abs(s.coeffs[4] - 0.25 * 0.8) < 1e-15
    assert s.coeffs[0] == 0.25


def test_decay_pulls_populations_toward_thermal():
    s = init_zero(1)
    decay(s, 0.75, 0.6)
    # a3 -> g a3 + (2p-1)(1-g) a0 = 0.75*0.5 + 0.2*0.25*0.5
    assert abs(s.coeffs[3] - 0.4) < 1e-15
    assert s.coeffs[0] == 0.5


def test_decay_damps_transverse_by_sqrt_g():
    s = init_uniform(1)
    decay(s, 0.81, 0.5)
    assert abs(s.coeffs[1] - 0.5 * 0.9) < 1e-15
    assert abs(s.coeffs[3]) < 1e-15  # p = 1/2 adds no bias


def test_full_decay_reaches_thermal_state(rng):
    s = random_pauli_state(rng, 2)
    decay(s, 0.0, 0.85)
    want = init_thermal(2, 0.85)
    assert np.max(np.abs(s.coeffs - want.coeffs)) < 1e-12


def test_thermal_state_is_decay_fixed_point():
    for p in (0.0, 0.3, 0.5, 0.9, 1.0):
        s = init_thermal(2, p)
        before = s.coeffs.copy()
        decay(s, 0.7, p)
        decohere(s, 0.6)
        assert np.max(np.abs(s.coeffs - before)) < 1e-12


@settings(max_examples=30, deadline=None)
@given(f1=UNIT, f2=UNIT, seed=st.integers(0, 2**31 - 1))
def test_decohere_semigroup(f1, f2, seed):
    s1 = oracle.random_state(2, np.random.default_rng(seed))
    s2 = s1.copy()
    decohere(s1, f1)
    decohere(s1, f2)
    decohere(s2, f1 * f2)
    assert np.max(np.abs(s1.coeffs - s2.coeffs)) < 1e-12


@settings(max_examples=30, deadline=None)
@given(g1=UNIT, g2=UNIT, p=UNIT, seed=st.integers(0, 2**31 - 1))
def test_decay_semigroup_at_fixed_population(g1, g2, p, seed):
    s1 = oracle.random_state(1, np.random.default_rng(seed))
    s2 = s1.copy()
    decay(s1, g1, p)
    decay(s1, g2, p)
    decay(s2, g1 * g2, p)
    assert np.max(np.abs(s1.coeffs - s2.coeffs)) < 1e-12


def test_step_matches_dense_kraus_channel(rng):
    noise = MemoryNoise(f=0.92, g=0.85, p=0.3)
    s = random_pauli_state(rng, 3)
    d = oracle.to_dense(s)
    end_of_partition(s, noise)
    oracle.dense_memory_step(d, noise.f, noise.g, noise.p)
    back = oracle.from_dense(d)
    assert np.max(np.abs(s.coeffs - back.coeffs)) < 1e-12


def test_measurement_partitions_use_their_own_pair(rng):
    noise = MemoryNoise(f=0.9, g=0.8, p=0.7, f_meas=0.95, g_meas=0.85)
    assert noise.pair("gate") == (0.9, 0.8)
    assert noise.pair("measurement") == (0.95, 0.85)
    assert noise.pair("solo") == (0.95, 0.85)
    s1 = random_pauli_state(rng, 1)
    s2 = s1.copy()
    end_of_partition(s1, noise, "measurement")
    decay(s2, 0.85, 0.7)
    decohere(s2, 0.95)
    assert np.max(np.abs(s1.coeffs - s2.coeffs)) < 1e-15


def test_measurement_pair_defaults_to_gate_pair():
    noise = MemoryNoise(f=0.9, g=0.8, p=0.7)
    assert noise.pair("measurement") == (0.9, 0.8)
    with pytest.raises(ValueError):
        noise.pair("warmup")


def test_noiseless_step_is_identity(rng):
    s = random_pauli_state(rng, 2)
    before = s.coeffs.copy()
    end_of_partition(s, NOISELESS)
    assert np.array_equal(s.coeffs, before)


def test_step_order_is_decay_then_decohere(rng):
    # the combined step must equal decay followed by decohere, per qubit
    noise = MemoryNoise(f=0.9, g=0.7, p=0.2)
    s1 = random_pauli_state(rng, 1)
    s2 = s1.copy()
    end_of_partition(s1, noise)
    decay(s2, 0.7, 0.2)
    decohere(s2, 0.9)
    assert np.max(np.abs(s1.coeffs - s2.coeffs)) < 1e-15


def test_combined_step_is_completely_positive():
    # channel action is linear in the coefficients, so columns of the
    # transfer matrix come from pushing basis vectors through the step
    def step_ptm(f: float, g: float, p: float) -> np.ndarray:
        cols = []
        for j in range(4):
            s = PauliState(1, np.zeros(4))
            s.coeffs[j] = 1.0
            end_of_partition(s, MemoryNoise(f=f, g=g, p=p))
            cols.append(s.coeffs.copy())
        return np.column_stack(cols)

    for f in (0.7, 0.9, 1.0):
        for g in (0.5, 0.9, 1.0):
            for p in (0.0, 0.4, 1.0):
                assert oracle.choi_psd_check(step_ptm(f, g, p)) >= -1e-10


def test_purity_never_increases_under_memory_noise(rng):
    from paulisim.state import purity

    s = random_pauli_state(rng, 2)
    p0 = purity(s)
    end_of_partition(s, MemoryNoise(f=0.9, g=0.9, p=0.5))
    assert purity(s) <= p0 + 1e-12


def test_parameter_validation():
    with pytest.raises(ValueError):
        MemoryNoise(f=1.1)
    with pytest.raises(ValueError):
        MemoryNoise(g=-0.2)
    with pytest.raises(ValueError):
        MemoryNoise(p=2.0)
    with pytest.raises(ValueError):
        MemoryNoise(f_meas=-0.5)
