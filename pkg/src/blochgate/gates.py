"""Coordinate-dependent NOT/parity gates.

A gate is built from an orthonormal pair (psi, psi_perp) and two phases::

    Pi = d1 |psi><psi_perp| + d2 |psi_perp><psi|

With |d1| = |d2| = 1 and d1 d2 = -1 this is an SU(2) rotation that swaps
antipodal Bloch points. Six families are named:

    P1, P3, P1tilde  on the chi pair
    P2, P4, P2tilde  on the eta pair

P1..P4 square to -I; the tilde families use trivial phases and have
determinant -1. :func:`gate` evaluates closed-form matrices, while
:func:`pi_matrix` rebuilds them from outer products; the two paths are kept
independent so the test-suite can compare them.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .linalg import DEFAULT_TOL, det2, fro, inner, mat2, outer, su2_axis_angle
from .spinors import BlochAngles, MappingPhase, QubitKind, decompose, make_qubit


class GateFamily(enum.Enum):
    P1 = "P1"
    P2 = "P2"
    P3 = "P3"
    P4 = "P4"
    P1TILDE = "P1tilde"
    P2TILDE = "P2tilde"

    @property
    def is_rotation(self) -> bool:
        """True for the SU(2) families P1..P4."""
        return self in ROTATION_FAMILIES

    @classmethod
    def parse(cls, name: str) -> GateFamily:
        """Accept ``P1``..``P4``, ``P1tilde``/``P1t`` and ``P2tilde``/``P2t``, case-insensitively."""
        key = name.strip().lower()
        for fam in cls:
            if key in (fam.value.lower(), fam.value.lower().replace("tilde", "t")):
                return fam
        raise ValueError(f"unknown gate family {name!r}")


ROTATION_FAMILIES = (GateFamily.P1, GateFamily.P2, GateFamily.P3, GateFamily.P4)


@dataclass(frozen=True)
class OrthonormalPair:
    psi: np.ndarray
    psi_perp: np.ndarray

    def validate(self, tol: float = DEFAULT_TOL):
        for name, v in (("psi", self.psi), ("psi_perp", self.psi_perp)):
            if abs(np.linalg.norm(v) - 1.0) > tol:
                raise ValueError(f"{name} is not normalized")
        if abs(inner(self.psi, self.psi_perp)) > tol:
            raise ValueError("pair is not orthogonal")


@dataclass(frozen=True)
class PhasePair:
    d1: complex
    d2: complex

    def is_rotation(self, tol: float = DEFAULT_TOL) -> bool:
        """Both phases unit-modulus with d1 d2 = -1, i.e. Pi lands in SU(2)."""
        return (
            abs(abs(self.d1) - 1.0) <= tol
            and abs(abs(self.d2) - 1.0) <= tol
            and abs(self.d1 * self.d2 + 1.0) <= tol
        )


def orthogonal_complement(s: np.ndarray, tol: float = DEFAULT_TOL) -> np.ndarray:
    """(alpha, beta) -> (-beta*, alpha*)."""
    if abs(np.linalg.norm(s) - 1.0) > tol:
        raise ValueError("spinor is not normalized")
    alpha, beta = s
    return np.array([-np.conj(beta), np.conj(alpha)], dtype=complex)


def pi_matrix(pair: OrthonormalPair, phases: PhasePair, tol: float = DEFAULT_TOL) -> np.ndarray:
    pair.validate(tol)
    if abs(abs(phases.d1) - 1.0) > tol or abs(abs(phases.d2) - 1.0) > tol:
        raise ValueError("phases must have unit modulus")
    return phases.d1 * outer(pair.psi, pair.psi_perp) + phases.d2 * outer(pair.psi_perp, pair.psi)


def family_pair(f: GateFamily, a: BlochAngles) -> OrthonormalPair:
    if f in (GateFamily.P1, GateFamily.P3, GateFamily.P1TILDE):
        return OrthonormalPair(make_qubit(QubitKind.CHI_PLUS, a), make_qubit(QubitKind.CHI_MINUS, a))
    return OrthonormalPair(make_qubit(QubitKind.ETA_PLUS, a), make_qubit(QubitKind.ETA_MINUS, a))


def family_phases(f: GateFamily, a: BlochAngles) -> PhasePair:
    if f is GateFamily.P1:
        return PhasePair(complex(np.exp(-1j * a.phi)), complex(-np.exp(1j * a.phi)))
    if f is GateFamily.P2:
        return PhasePair(1j, 1j)
    if f in (GateFamily.P3, GateFamily.P4):
        return PhasePair(-1 + 0j, 1 + 0j)
    return PhasePair(1 + 0j, 1 + 0j)


def gate(f: GateFamily, a: BlochAngles) -> np.ndarray:
    """Closed-form 2x2 matrix of gate family ``f`` at angles ``a``."""
    th, ph = a.theta, a.phi
    e = np.exp(1j * ph)
    ec = np.exp(-1j * ph)
    if f is GateFamily.P1:
        return mat2(0, ec, -e, 0)
    if f is GateFamily.P4:
        return mat2(0, -ec, e, 0)
    if f is GateFamily.P2:
        st, ct = math.sin(th), math.cos(th)
        return mat2(-1j * st, 1j * ec * ct, 1j * e * ct, 1j * st)
    if f is GateFamily.P2TILDE:
        st, ct = math.sin(th), math.cos(th)
        return mat2(-st, ec * ct, e * ct, st)
    c2, s2 = math.cos(th / 2) ** 2, math.sin(th / 2) ** 2
    if f is GateFamily.P3:
        d = 1j * math.sin(th) * math.sin(ph)
        return mat2(d, -(c2 + ec * ec * s2), c2 + e * e * s2, -d)
    if f is GateFamily.P1TILDE:
        d = math.sin(th) * math.cos(ph)
        return mat2(-d, c2 - ec * ec * s2, c2 - e * e * s2, d)
    raise ValueError(f"unknown gate family {f!r}")


def rotation_axis(f: GateFamily, a: BlochAngles, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Unit axis n with gate(f, a) = exp(i pi/2 n.sigma)."""
    if f is GateFamily.P1:
        return np.array([-math.sin(a.phi), math.cos(a.phi), 0.0])
    if f is GateFamily.P2:
        ct = math.cos(a.theta)
        return np.array([ct * math.cos(a.phi), ct * math.sin(a.phi), -math.sin(a.theta)])
    if f in (GateFamily.P3, GateFamily.P4):
        return su2_axis_angle(gate(f, a), tol)[1]
    raise ValueError(f"{f.value} has determinant -1 and is not a rotation")


_CHI = frozenset({QubitKind.CHI_PLUS, QubitKind.CHI_MINUS})
_ETA = frozenset({QubitKind.ETA_PLUS, QubitKind.ETA_MINUS})

_ALLOWED = {
    GateFamily.P1: frozenset(QubitKind),
    GateFamily.P2: _ETA,
    GateFamily.P3: _CHI,
    GateFamily.P4: _ETA,
    GateFamily.P1TILDE: _CHI,
    GateFamily.P2TILDE: _ETA,
}


def allowed_kinds(f: GateFamily) -> tuple[QubitKind, ...]:
    """Qubit kinds on which the action of ``f`` is tabulated, in enum order."""
    return tuple(k for k in QubitKind if k in _ALLOWED[f])


def gate_action(f: GateFamily, kind: QubitKind, a: BlochAngles, tol: float = DEFAULT_TOL) -> MappingPhase:
    """Apply gate(f, a) to the qubit ``kind`` and read off the phase on its partner."""
    if kind not in _ALLOWED[f]:
        raise ValueError(f"action of {f.value} on {kind.value} is not defined")
    image = gate(f, a) @ make_qubit(kind, a)
    result = decompose(image, kind, kind.partner, make_qubit(kind.partner, a))
    if result.residual > tol:
        raise ValueError(f"{f.value} does not map {kind.value} onto {kind.partner.value}")
    return result


def determinant(f: GateFamily, a: BlochAngles) -> complex:
    return det2(gate(f, a))


def construction_gap(f: GateFamily, a: BlochAngles) -> float:
    """Entrywise distance between the closed form and the outer-product build."""
    return fro(gate(f, a) - pi_matrix(family_pair(f, a), family_phases(f, a)))
