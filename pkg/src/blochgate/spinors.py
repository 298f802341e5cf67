"""Helicity qubits on the Bloch sphere and their discrete-parity bookkeeping.

The four named families are the chi pair (chi+ is the textbook Bloch-sphere
qubit, chi- its antipode) and the eta pair, which differs from chi by the
half-angle phases exp(+-i phi/2). Both pairs are helicity eigenstates of
sigma.p_hat, where p_hat is the Bloch direction.

At the poles phi is kept as given. The eta spinors carry phi-dependent
phases even there, so phi is a gauge choice rather than being collapsed to 0.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .linalg import DEFAULT_TOL, I2, fro, inner, outer, pauli_dot, spinor

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class BlochAngles:
    """Polar pair (theta, phi). theta in [0, pi]; phi is reduced into [0, 2 pi)."""

    theta: float
    phi: float = 0.0

    def __post_init__(self):
        theta, phi = float(self.theta), float(self.phi)
        if not (math.isfinite(theta) and math.isfinite(phi)):
            raise ValueError("angles must be finite")
        if not 0.0 <= theta <= math.pi:
            raise ValueError(f"theta must lie in [0, pi], got {theta!r}")
        phi = math.fmod(phi, TWO_PI)
        if phi < 0.0:
            phi += TWO_PI
        if phi >= TWO_PI:  # fmod of a tiny negative can round up to 2 pi
            phi = 0.0
        object.__setattr__(self, "theta", theta)
        object.__setattr__(self, "phi", phi)


class QubitKind(enum.Enum):
    CHI_PLUS = "ChiPlus"
    CHI_MINUS = "ChiMinus"
    ETA_PLUS = "EtaPlus"
    ETA_MINUS = "EtaMinus"
    ZERO = "Zero"
    ONE = "One"

    @property
    def partner(self) -> QubitKind:
        return _PARTNER[self]

    @property
    def helicity(self) -> int:
        """+1 / -1 for the helicity families; 0 for the computational basis."""
        return _HELICITY[self]

    @property
    def is_chi(self) -> bool:
        return self in (QubitKind.CHI_PLUS, QubitKind.CHI_MINUS)

    @property
    def is_eta(self) -> bool:
        return self in (QubitKind.ETA_PLUS, QubitKind.ETA_MINUS)


_PARTNER = {
    QubitKind.CHI_PLUS: QubitKind.CHI_MINUS,
    QubitKind.CHI_MINUS: QubitKind.CHI_PLUS,
    QubitKind.ETA_PLUS: QubitKind.ETA_MINUS,
    QubitKind.ETA_MINUS: QubitKind.ETA_PLUS,
    QubitKind.ZERO: QubitKind.ONE,
    QubitKind.ONE: QubitKind.ZERO,
}

_HELICITY = {
    QubitKind.CHI_PLUS: 1,
    QubitKind.CHI_MINUS: -1,
    QubitKind.ETA_PLUS: 1,
    QubitKind.ETA_MINUS: -1,
    QubitKind.ZERO: 0,
    QubitKind.ONE: 0,
}

HELICITY_KINDS = (QubitKind.CHI_PLUS, QubitKind.CHI_MINUS, QubitKind.ETA_PLUS, QubitKind.ETA_MINUS)


@dataclass(frozen=True)
class MappingPhase:
    """Result of mapping ``source`` onto ``phase * target``.

    ``residual`` is the norm of whatever is left orthogonal to the target.
    """

    source: QubitKind
    target: QubitKind
    phase: complex
    residual: float


def momentum_unit(a: BlochAngles) -> np.ndarray:
    st = math.sin(a.theta)
    return np.array([st * math.cos(a.phi), st * math.sin(a.phi), math.cos(a.theta)])


def _components(kind: QubitKind, theta: float, phi: float) -> np.ndarray:
    # Raw (theta, phi) on purpose: eta is double-valued in phi, and the
    # parity bookkeeping below relies on evaluating at phi + pi unreduced.
    c, s = math.cos(theta / 2), math.sin(theta / 2)
    if kind is QubitKind.CHI_PLUS:
        return spinor(c, np.exp(1j * phi) * s)
    if kind is QubitKind.CHI_MINUS:
        return spinor(-np.exp(-1j * phi) * s, c)
    if kind is QubitKind.ETA_PLUS:
        return spinor(np.exp(-0.5j * phi) * c, np.exp(0.5j * phi) * s)
    if kind is QubitKind.ETA_MINUS:
        return spinor(-np.exp(-0.5j * phi) * s, np.exp(0.5j * phi) * c)
    if kind is QubitKind.ZERO:
        return spinor(1, 0)
    if kind is QubitKind.ONE:
        return spinor(0, 1)
    raise ValueError(f"unknown qubit kind {kind!r}")


def make_qubit(kind: QubitKind, a: BlochAngles) -> np.ndarray:
    """Normalized spinor of the given family at the Bloch angles ``a``."""
    return _components(kind, a.theta, a.phi)


def eta_chi_phase(a: BlochAngles, tol: float = DEFAULT_TOL) -> tuple[complex, complex]:
    """Phases (e^{i phi/2}, e^{-i phi/2}) with chi+- = phase * eta+-.

    Raises ValueError if either relation fails by more than tol.
    """
    plus, minus = np.exp(0.5j * a.phi), np.exp(-0.5j * a.phi)
    r_plus = fro(make_qubit(QubitKind.CHI_PLUS, a) - plus * make_qubit(QubitKind.ETA_PLUS, a))
    r_minus = fro(make_qubit(QubitKind.CHI_MINUS, a) - minus * make_qubit(QubitKind.ETA_MINUS, a))
    if max(r_plus, r_minus) > tol:
        raise ValueError(f"chi/eta phase relation violated (residual {max(r_plus, r_minus):.3g})")
    return complex(plus), complex(minus)


def helicity_residual(s: np.ndarray, a: BlochAngles, h: int) -> float:
    """||(sigma.p_hat) s - h s||."""
    return fro(pauli_dot(momentum_unit(a)) @ s - h * s)


def projector(h: int, a: BlochAngles) -> np.ndarray:
    """Helicity projector (I + h sigma.p_hat)/2."""
    if h not in (1, -1):
        raise ValueError(f"helicity must be +1 or -1, got {h!r}")
    return 0.5 * (I2 + h * pauli_dot(momentum_unit(a)))


def discrete_parity(a: BlochAngles) -> BlochAngles:
    """(theta, phi) -> (pi - theta, phi + pi), phi reduced mod 2 pi."""
    return BlochAngles(math.pi - a.theta, a.phi + math.pi)


def decompose(state: np.ndarray, source: QubitKind, target: QubitKind, target_state: np.ndarray) -> MappingPhase:
    """Project ``state`` onto ``target_state`` and report the leftover."""
    phase = inner(target_state, state)
    residual = fro(state - phase * target_state)
    return MappingPhase(source, target, phase, residual)


def _parity_step(kind: QubitKind, theta: float, phi: float) -> MappingPhase:
    moved = _components(kind, math.pi - theta, phi + math.pi)
    return decompose(moved, kind, kind.partner, _components(kind.partner, theta, phi))


def _require_helicity_kind(kind: QubitKind):
    if kind not in HELICITY_KINDS:
        raise ValueError(f"parity phases are defined for the helicity qubits only, got {kind.value}")


def parity_phase(kind: QubitKind, a: BlochAngles, tol: float = DEFAULT_TOL) -> MappingPhase:
    """Phase picked up by a helicity qubit under one discrete parity.

    The source formula is evaluated at (pi - theta, phi + pi) and decomposed
    on the partner qubit at the original angles.
    """
    _require_helicity_kind(kind)
    result = _parity_step(kind, a.theta, a.phi)
    if result.residual > tol:
        raise ValueError(f"parity image of {kind.value} is not parallel to {kind.partner.value}")
    return result


def double_parity_phase(kind: QubitKind, a: BlochAngles, tol: float = DEFAULT_TOL) -> MappingPhase:
    """Phase after two successive parity transformations.

    The first step gives lambda_1(a) * partner(a). Applying parity to that
    whole expression moves the angles inside lambda_1 too, so the total is
    lambda_1(P a) * lambda_2(a), with P a taken on the unreduced lift
    phi + pi. The result is +1 for chi and -1 for eta.
    """
    _require_helicity_kind(kind)
    first = _parity_step(kind, math.pi - a.theta, a.phi + math.pi)
    second = _parity_step(kind.partner, a.theta, a.phi)
    residual = max(first.residual, second.residual)
    if residual > tol:
        raise ValueError(f"double parity of {kind.value} left a residual {residual:.3g}")
    return MappingPhase(kind, kind, first.phase * second.phase, residual)


def density_matrix(s: np.ndarray) -> np.ndarray:
    return outer(s, s)
