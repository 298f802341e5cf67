"""Massless Weyl spinors: gamma matrices, plane waves, helicity symmetry, twistors.

Everything is checked at fixed momentum. Position-space plane waves are
provided only so the differential Weyl equations can be probed pointwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .gates import ROTATION_FAMILIES, GateFamily, family_pair, gate
from .linalg import I2, I4, SIGMA, dag, det2, fro, hermiticity_residual, mat2, outer, pauli_dot
from .spinors import BlochAngles, MappingPhase, QubitKind, decompose, make_qubit, momentum_unit

METRIC = np.diag([1.0, -1.0, -1.0, -1.0])


@dataclass(frozen=True)
class GammaSet:
    g0: np.ndarray
    g1: np.ndarray
    g2: np.ndarray
    g3: np.ndarray

    def __iter__(self):
        return iter((self.g0, self.g1, self.g2, self.g3))

    def __getitem__(self, mu: int) -> np.ndarray:
        return (self.g0, self.g1, self.g2, self.g3)[mu]


def _blocks(a, b, c, d) -> np.ndarray:
    return np.block([[a, b], [c, d]]).astype(complex)


def gamma_weyl() -> GammaSet:
    """Gamma matrices in the Weyl (chiral) representation."""
    z = np.zeros((2, 2), dtype=complex)
    g0 = _blocks(z, I2, I2, z)
    g1, g2, g3 = (_blocks(z, s, -s, z) for s in SIGMA)
    return GammaSet(g0, g1, g2, g3)


def clifford_table(gammas: GammaSet | None = None) -> np.ndarray:
    """4x4 array of ||{g^mu, g^nu} - 2 g^{mu nu} I4||."""
    gammas = gammas or gamma_weyl()
    out = np.empty((4, 4))
    for mu in range(4):
        for nu in range(4):
            anti = gammas[mu] @ gammas[nu] + gammas[nu] @ gammas[mu]
            out[mu, nu] = fro(anti - 2 * METRIC[mu, nu] * I4)
    return out


def dirac_operator(energy: float, p, gammas: GammaSet | None = None) -> np.ndarray:
    """gamma^mu p_mu with p_mu = (E, -p)."""
    gammas = gammas or gamma_weyl()
    op = energy * gammas.g0
    for k in range(3):
        op = op - p[k] * gammas[k + 1]
    return op


def weyl_block_residual(energy: float, p) -> float:
    """Distance of the massless Dirac operator from its chiral block form.

    The diagonal blocks must vanish and the off-diagonal blocks must be the
    two Weyl operators E - sigma.p (upper right) and E + sigma.p (lower left).
    """
    op = dirac_operator(energy, p)
    sp = pauli_dot(p)
    z = np.zeros((2, 2), dtype=complex)
    expected = _blocks(z, energy * I2 - sp, energy * I2 + sp, z)
    return fro(op - expected)


@dataclass(frozen=True)
class PlaneWave:
    spinor: np.ndarray
    helicity: int
    pmag: float
    angles: BlochAngles
    energy_sign: int = 1

    @property
    def energy(self) -> float:
        return self.pmag


def plane_wave(a: BlochAngles, pmag: float, h: int, es: int = 1) -> PlaneWave:
    if not pmag > 0:
        raise ValueError(f"momentum magnitude must be positive, got {pmag!r}")
    if h not in (1, -1) or es not in (1, -1):
        raise ValueError("helicity and energy sign must be +1 or -1")
    kind = QubitKind.CHI_PLUS if h == 1 else QubitKind.CHI_MINUS
    return PlaneWave(make_qubit(kind, a), h, float(pmag), a, es)


def weyl_residual(w: PlaneWave) -> float:
    """||(sigma.p_hat) xi - h xi||; independent of the energy sign."""
    return fro(pauli_dot(momentum_unit(w.angles)) @ w.spinor - w.helicity * w.spinor)


def plane_wave_field(w: PlaneWave, t: float, x) -> np.ndarray:
    """xi exp(-i es (E t - x.p)) at time t and position x."""
    p = w.pmag * momentum_unit(w.angles)
    arg = w.energy * t - float(np.dot(x, p))
    return w.spinor * np.exp(-1j * w.energy_sign * arg)


def wigner_flip(s: np.ndarray) -> np.ndarray:
    """Anti-unitary helicity flip -i sigma_2 s*."""
    return -1j * SIGMA[1] @ np.conj(s)


def _native_pair(f: GateFamily, a: BlochAngles):
    pair = family_pair(f, a)
    plus = QubitKind.CHI_PLUS if f in (GateFamily.P1, GateFamily.P3) else QubitKind.ETA_PLUS
    return plus, pair.psi, pair.psi_perp


def _require_rotation_family(f: GateFamily):
    if f not in ROTATION_FAMILIES:
        raise ValueError(f"expected one of P1..P4, got {f.value}")


def unitary_symmetry_check(f: GateFamily, a: BlochAngles) -> float:
    """Check that P maps a positive-helicity solution onto a negative-helicity one.

    Returns the larger of two residuals: the direct one,
    ||(sigma.p_hat) P xi+ + P xi+||, and the conjugated one,
    ||P (sigma.p_hat) P^dagger (P xi+) - P xi+||, which holds before the
    anticommutation of P with sigma.p_hat is used.
    """
    _require_rotation_family(f)
    g = gate(f, a)
    sp = pauli_dot(momentum_unit(a))
    _, xi_plus, _ = _native_pair(f, a)
    image = g @ xi_plus
    direct = fro(sp @ image + image)
    conjugated = fro(g @ sp @ dag(g) @ image - image)
    return max(direct, conjugated)


def helicity_flip_phases(f: GateFamily, a: BlochAngles) -> tuple[MappingPhase, MappingPhase]:
    """(lambda, lambda'): P xi- = lambda xi+ and P xi+ = lambda' xi-."""
    _require_rotation_family(f)
    g = gate(f, a)
    plus, xi_plus, xi_minus = _native_pair(f, a)
    minus = plus.partner
    lam = decompose(g @ xi_minus, minus, plus, xi_plus)
    lam_prime = decompose(g @ xi_plus, plus, minus, xi_minus)
    return lam, lam_prime


@dataclass(frozen=True)
class FourMomentumMatrix:
    m: np.ndarray
    energy: float
    angles: BlochAngles

    def hermiticity_residual(self) -> float:
        return hermiticity_residual(self.m)

    def det(self) -> complex:
        return det2(self.m)


def four_momentum_matrix(energy: float, a: BlochAngles) -> FourMomentumMatrix:
    """sigma^mu p_mu for a massless momentum |p| = E along the Bloch direction."""
    if not energy > 0:
        raise ValueError(f"energy must be positive, got {energy!r}")
    st, ct = math.sin(a.theta), math.cos(a.theta)
    e = np.exp(1j * a.phi)
    m = mat2(energy + energy * ct, np.conj(e) * energy * st, e * energy * st, energy - energy * ct)
    return FourMomentumMatrix(m, float(energy), a)


def reflected_four_momentum_matrix(energy: float, a: BlochAngles) -> np.ndarray:
    """Closed form of P (sigma.p) P^dagger: the spatial part changes sign."""
    st, ct = math.sin(a.theta), math.cos(a.theta)
    e = np.exp(1j * a.phi)
    return mat2(energy - energy * ct, -np.conj(e) * energy * st, -e * energy * st, energy + energy * ct)


def twistor_check(energy: float, a: BlochAngles, f: GateFamily) -> tuple[float, float]:
    """Residuals of the twistor outer-product identities.

    With the spinors rescaled to norm sqrt(2E), sigma.p is the outer product
    of the positive-helicity twistor, and P (sigma.p) P^dagger is that of the
    negative-helicity one. Returns (||sigma.p - 2E xi+ xi+^dag||,
    ||P sigma.p P^dag - 2E xi- xi-^dag||).
    """
    _require_rotation_family(f)
    sp = four_momentum_matrix(energy, a).m
    scale = math.sqrt(2 * energy)
    lam_plus = scale * make_qubit(QubitKind.CHI_PLUS, a)
    lam_minus = scale * make_qubit(QubitKind.CHI_MINUS, a)
    g = gate(f, a)
    first = fro(sp - outer(lam_plus, lam_plus))
    second = fro(g @ sp @ dag(g) - outer(lam_minus, lam_minus))
    return first, second
