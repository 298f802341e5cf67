"""Dynamical decoupling with parity-rotation pulses.

One cycle is: free evolution for tau, a P^dagger pulse, free evolution for
tau, a P pulse::

    U_cycle = P U(tau) P^dagger U(tau)

When the bath vector points along the gate's Bloch direction, P anticommutes
with the bath Hamiltonian, P U(tau) P^dagger = U(-tau), and the cycle is the
identity for every tau.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Optional

import numpy as np

from .gates import ROTATION_FAMILIES, GateFamily, gate, rotation_axis
from .linalg import I2, dag, exp_pauli, fro, pauli_components, pauli_dot, trace
from .spinors import BlochAngles, momentum_unit

SWEEP_PARAMETERS = ("tau", "bath_theta", "bath_phi", "bath_mag", "pulse_duration")


@dataclass(frozen=True)
class BathSpec:
    magnitude: float
    angles: BlochAngles

    def __post_init__(self):
        if not self.magnitude >= 0:
            raise ValueError(f"bath magnitude must be non-negative, got {self.magnitude!r}")

    @property
    def vector(self) -> np.ndarray:
        return self.magnitude * momentum_unit(self.angles)


@dataclass(frozen=True)
class PulseModel:
    """Ideal (instantaneous) pulse when ``duration`` is None, otherwise a finite pulse."""

    duration: Optional[float] = None

    def __post_init__(self):
        if self.duration is not None and not self.duration > 0:
            raise ValueError(f"pulse duration must be positive, got {self.duration!r}")

    @property
    def ideal(self) -> bool:
        return self.duration is None


IDEAL = PulseModel()


@dataclass(frozen=True)
class CycleSpec:
    family: GateFamily
    gate_angles: BlochAngles
    bath: BathSpec
    tau: float
    cycles: int = 1
    pulse: PulseModel = IDEAL

    def __post_init__(self):
        if self.family not in ROTATION_FAMILIES:
            raise ValueError(f"decoupling pulses must be one of P1..P4, got {self.family.value}")
        if not self.tau >= 0:
            raise ValueError(f"tau must be non-negative, got {self.tau!r}")
        if isinstance(self.cycles, bool) or int(self.cycles) != self.cycles or self.cycles < 1:
            raise ValueError(f"cycles must be a positive integer, got {self.cycles!r}")


@dataclass(frozen=True)
class SimResult:
    total_unitary: np.ndarray
    fidelity: float
    residual: float


def bath_hamiltonian(b: BathSpec) -> np.ndarray:
    """sigma . B."""
    return pauli_dot(b.vector)


def free_evolution(h: np.ndarray, t: float) -> np.ndarray:
    """exp(-i H t) for a Hermitian traceless 2x2 H, in closed Pauli form."""
    v = pauli_components(h)
    scale = float(np.max(np.abs(v)))
    if scale == 0.0:
        return I2.copy()
    # rescale first so the squared norm cannot underflow for tiny fields
    axis = v / scale
    axis_norm = float(np.linalg.norm(axis))
    return exp_pauli(-scale * axis_norm * t, axis / axis_norm)


def anticommutator_norm(g: np.ndarray, h: np.ndarray) -> float:
    return fro(g @ h + h @ g)


def identity_distance(u: np.ndarray) -> tuple[float, float]:
    """(fidelity, residual) of u against the identity, both phase-blind.

    fidelity = |Tr u| / 2; residual = min over alpha of ||u - e^{i alpha} I||,
    attained at alpha = arg Tr u.
    """
    tr = trace(u)
    phase = tr / abs(tr) if abs(tr) > 0 else 1.0
    return abs(tr) / 2, fro(u - phase * I2)


def finite_pulse_unitary(axis, duration: float, bath: BathSpec) -> np.ndarray:
    """Pulse of finite length applied on top of the bath.

    The drive -(pi / (2 duration)) axis.sigma is sized so that with the bath
    switched off the pulse is exactly exp(i pi/2 axis.sigma).
    """
    if not duration > 0:
        raise ValueError(f"pulse duration must be positive, got {duration!r}")
    drive = -(math.pi / (2 * duration)) * np.asarray(axis, dtype=float)
    return free_evolution(pauli_dot(drive + bath.vector), duration)


def _pulses(c: CycleSpec) -> tuple[np.ndarray, np.ndarray]:
    if c.pulse.ideal:
        p = gate(c.family, c.gate_angles)
        return p, dag(p)
    axis = rotation_axis(c.family, c.gate_angles)
    # P^dagger realized as the same rotation about the reversed axis
    return (
        finite_pulse_unitary(axis, c.pulse.duration, c.bath),
        finite_pulse_unitary(-axis, c.pulse.duration, c.bath),
    )


def cycle_unitary(c: CycleSpec) -> np.ndarray:
    """Unitary of a single cycle."""
    u = free_evolution(bath_hamiltonian(c.bath), c.tau)
    p, p_dag = _pulses(c)
    return p @ u @ p_dag @ u


def dd_cycle(c: CycleSpec) -> SimResult:
    total = np.linalg.matrix_power(cycle_unitary(c), int(c.cycles))
    fidelity, residual = identity_distance(total)
    return SimResult(total, fidelity, residual)


def pulse_deviation(family: GateFamily, gate_angles: BlochAngles, duration: float, bath: BathSpec) -> float:
    """||finite pulse - ideal gate||."""
    axis = rotation_axis(family, gate_angles)
    return fro(finite_pulse_unitary(axis, duration, bath) - exp_pauli(math.pi / 2, axis))


def with_parameter(c: CycleSpec, parameter: str, value: float) -> CycleSpec:
    """Copy of ``c`` with one sweepable parameter replaced."""
    if parameter == "tau":
        return replace(c, tau=value)
    if parameter == "bath_theta":
        return replace(c, bath=BathSpec(c.bath.magnitude, BlochAngles(value, c.bath.angles.phi)))
    if parameter == "bath_phi":
        return replace(c, bath=BathSpec(c.bath.magnitude, BlochAngles(c.bath.angles.theta, value)))
    if parameter == "bath_mag":
        return replace(c, bath=BathSpec(value, c.bath.angles))
    if parameter == "pulse_duration":
        return replace(c, pulse=PulseModel(value))
    raise ValueError(f"unknown sweep parameter {parameter!r}; expected one of {', '.join(SWEEP_PARAMETERS)}")


def sweep(c: CycleSpec, parameter: str, start: float, stop: float, steps: int) -> list[tuple[float, float, float]]:
    """Run dd_cycle on a uniform grid; rows of (value, fidelity, residual) in ascending order."""
    if parameter not in SWEEP_PARAMETERS:
        raise ValueError(f"unknown sweep parameter {parameter!r}; expected one of {', '.join(SWEEP_PARAMETERS)}")
    if steps < 2:
        raise ValueError("a sweep needs at least 2 steps")
    if not start < stop:
        raise ValueError("sweep range must satisfy start < stop")
    rows = []
    for value in np.linspace(start, stop, steps):
        res = dd_cycle(with_parameter(c, parameter, float(value)))
        rows.append((float(value), res.fidelity, res.residual))
    return rows


def aligned_cycle(family: GateFamily, angles: BlochAngles, magnitude: float, tau: float, cycles: int = 1) -> CycleSpec:
    """Cycle whose bath points along the gate's own Bloch direction."""
    return CycleSpec(family, angles, BathSpec(magnitude, angles), tau, cycles)

