"""Coordinate-dependent single-qubit NOT/parity gates, their SO(3) images,
Weyl-spinor symmetry checks and dynamical-decoupling simulation."""

from .decoupling import BathSpec, CycleSpec, PulseModel, SimResult, dd_cycle, sweep
from .gates import GateFamily, gate, gate_action, pi_matrix, rotation_axis
from .linalg import exp_pauli, pauli, pauli_dot, su2_axis_angle
from .so3 import angles_from_cartesian, induced_rotation, verify_point_inversion
from .spinors import BlochAngles, MappingPhase, QubitKind, make_qubit, momentum_unit, parity_phase
from .weyl import gamma_weyl, twistor_check, unitary_symmetry_check, wigner_flip

__all__ = [
    "BathSpec",
    "BlochAngles",
    "CycleSpec",
    "GateFamily",
    "MappingPhase",
    "PulseModel",
    "QubitKind",
    "SimResult",
    "angles_from_cartesian",
    "dd_cycle",
    "exp_pauli",
    "gamma_weyl",
    "gate",
    "gate_action",
    "induced_rotation",
    "make_qubit",
    "momentum_unit",
    "parity_phase",
    "pauli",
    "pauli_dot",
    "pi_matrix",
    "rotation_axis",
    "su2_axis_angle",
    "sweep",
    "twistor_check",
    "unitary_symmetry_check",
    "verify_point_inversion",
    "wigner_flip",
]

__version__ = "0.1.0"
