"""Idle-time decoherence and decay applied after every clock step.

Both channels act independently on each qubit.  Decoherence multiplies
transverse (digit 1 or 2) occurrences by f = exp(-dt/T2); decay scales them
by sqrt(g) with g = exp(-dt/T1) and relaxes the longitudinal component
toward the thermal point: a3 <- g a3 + (2p - 1)(1 - g) a0.  The thermal
product state with population p is the exact fixed point of the combination,
and the combined channel is completely positive for all f, g, p in [0, 1].
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .state import PauliState

PARTITION_CATEGORIES = ("gate", "measurement", "solo")


def _check_unit(name: str, v: float) -> None:
    if not 0.0 <= v <= 1.0:
        raise ValueError(f"{name} must lie in [0, 1], got {v}")


@dataclass(frozen=True)
class MemoryNoise:
    """Per-clock-step memory error factors.

    f and g are the decoherence and decay survival factors, p the thermal
    population of |0>.  f_meas and g_meas, when set, replace f and g after
    measurement and solo partitions, allowing those steps a different
    duration; they default to the global values.
    """

    f: float = 1.0
    g: float = 1.0
    p: float = 1.0
    f_meas: float | None = None
    g_meas: float | None = None

    def __post_init__(self) -> None:
        _check_unit("f", self.f)
        _check_unit("g", self.g)
        _check_unit("p", self.p)
        if self.f_meas is not None:
            _check_unit("f_meas", self.f_meas)
        if self.g_meas is not None:
            _check_unit("g_meas", self.g_meas)

    def pair(self, category: str) -> tuple[float, float]:
        """(f, g) in effect after a partition of the given category."""
        if category not in PARTITION_CATEGORIES:
            raise ValueError(f"unknown partition category {category!r}")
        if category == "gate":
            return (self.f, self.g)
        return (
            self.f if self.f_meas is None else self.f_meas,
            self.g if self.g_meas is None else self.g_meas,
        )


NOISELESS = MemoryNoise()


def decohere(state: PauliState, f: float) -> None:
    """Scale every coefficient by f^m, m = number of digits in {1, 2}."""
    _check_unit("f", f)
    if f == 1.0:
        return
    for ax in range(state.n):
        view = np.moveaxis(state.tensor(), ax, 0)
        view[1] *= f
        view[2] *= f


def decay(state: PauliState, g: float, p: float) -> None:
    """Relax every qubit toward the thermal point with population p.

    Transverse digit occurrences shrink by sqrt(g); each digit-3 coefficient
    moves toward (2p - 1) times its digit-0 partner.  Per-qubit channels
    commute, so the ascending sweep order is immaterial.
    """
    _check_unit("g", g)
    _check_unit("p", p)
    if g == 1.0:
        return
    sg = np.sqrt(g)
    pull = (2.0 * p - 1.0) * (1.0 - g)
    for ax in range(state.n):
        view = np.moveaxis(state.tensor(), ax, 0)
        view[1] *= sg
        view[2] *= sg
        view[3] *= g
        view[3] += pull * view[0]


def end_of_partition(state: PauliState, noise: MemoryNoise, category: str = "gate") -> None:
    """One clock step of memory noise: decohere then decay on all qubits."""
    f, g = noise.pair(category)
    decohere(state, f)
    decay(state, g, noise.p)
