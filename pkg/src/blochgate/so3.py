"""SU(2) -> SO(3) covering map and point inversion by rotation."""

from __future__ import annotations

import math

import numpy as np

from .gates import ROTATION_FAMILIES, GateFamily, gate
from .linalg import DEFAULT_TOL, SIGMA_STACK, dag, fro, pauli_dot, unitarity_residual
from .spinors import BlochAngles, momentum_unit


def induced_rotation(m: np.ndarray, tol: float = DEFAULT_TOL) -> np.ndarray:
    """R_ij = Tr(sigma_i M sigma_j M^dagger) / 2 for a unitary M.

    The global phase of M cancels, so any unitary (determinant -1 included)
    yields a proper rotation.
    """
    if unitarity_residual(m) > tol:
        raise ValueError("matrix is not unitary")
    conj = m @ SIGMA_STACK @ dag(m)
    t = np.einsum("iab,jba->ij", SIGMA_STACK, conj) / 2
    if np.max(np.abs(t.imag)) > tol:
        raise ValueError(f"trace formula produced an imaginary part {np.max(np.abs(t.imag)):.3g}")
    return t.real


def p1_rotation_closed_form(phi: float) -> np.ndarray:
    """Rotation induced by P1 written out in terms of 2 phi."""
    c, s = math.cos(2 * phi), math.sin(2 * phi)
    return np.array([[-c, -s, 0.0], [-s, c, 0.0], [0.0, 0.0, -1.0]])


def is_rotation(r: np.ndarray, tol: float = DEFAULT_TOL) -> bool:
    return fro(r.T @ r - np.eye(3)) <= tol and abs(np.linalg.det(r) - 1.0) <= tol


def angles_from_cartesian(v) -> BlochAngles:
    """Inverse of the spherical map; phi = 0 on the z axis.

    theta comes from atan2 rather than acos, which loses half the digits
    near the poles.
    """
    x, y, z = (float(t) for t in v)
    if x == 0.0 and y == 0.0 and z == 0.0:
        raise ValueError("angles are undefined for the zero vector")
    theta = math.atan2(math.hypot(x, y), z)
    phi = math.atan2(y, x) if (x or y) else 0.0
    return BlochAngles(theta, phi)


def _require_rotation_family(f: GateFamily):
    if f not in ROTATION_FAMILIES:
        raise ValueError(f"point inversion is checked for P1..P4 only, got {f.value}")


def verify_point_inversion(f: GateFamily, a: BlochAngles) -> float:
    """||R(P) p_hat + p_hat||: how far the induced rotation is from sending p_hat to -p_hat."""
    _require_rotation_family(f)
    p = momentum_unit(a)
    return float(np.linalg.norm(induced_rotation(gate(f, a)) @ p + p))


def conjugation_residual(f: GateFamily, a: BlochAngles) -> float:
    """||P (sigma.p_hat) P^dagger + sigma.p_hat||."""
    g = gate(f, a)
    sp = pauli_dot(momentum_unit(a))
    return fro(g @ sp @ dag(g) + sp)


def cartesian_inversion_residual(f: GateFamily, x) -> float:
    """Build the gate from the angles of x itself and check R(P) x = -x."""
    _require_rotation_family(f)
    x = np.asarray(x, dtype=float)
    r = induced_rotation(gate(f, angles_from_cartesian(x)))
    return float(np.linalg.norm(r @ x + x))
