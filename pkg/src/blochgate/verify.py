"""Randomized verification of every gate, spinor, SO(3), Weyl and decoupling identity.

Angles are drawn uniformly on the sphere (theta = arccos(1 - 2u),
phi = 2 pi v) from a seeded PCG64 generator, so a given (samples, seed)
always produces the same report.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Optional

import numpy as np

from . import decoupling as dd
from .gates import ROTATION_FAMILIES, GateFamily, allowed_kinds, construction_gap, gate, gate_action, rotation_axis
from .linalg import I2, dag, det2, exp_pauli, fro, inner, outer, su2_axis_angle, unitarity_residual
from .so3 import cartesian_inversion_residual, conjugation_residual, induced_rotation, p1_rotation_closed_form, verify_point_inversion
from .spinors import (
    HELICITY_KINDS,
    BlochAngles,
    QubitKind,
    double_parity_phase,
    eta_chi_phase,
    helicity_residual,
    make_qubit,
    momentum_unit,
    parity_phase,
    projector,
)
from .weyl import (
    clifford_table,
    four_momentum_matrix,
    plane_wave,
    twistor_check,
    unitary_symmetry_check,
    weyl_block_residual,
    weyl_residual,
    wigner_flip,
)

K = QubitKind


def p1_table(phi: float) -> dict[QubitKind, complex]:
    """Expected phases of P1 acting on the six named states."""
    e = complex(np.exp(1j * phi))
    return {
        K.CHI_PLUS: -e,
        K.CHI_MINUS: e.conjugate(),
        K.ETA_PLUS: -1 + 0j,
        K.ETA_MINUS: 1 + 0j,
        K.ZERO: -e,
        K.ONE: e.conjugate(),
    }


# Expected phases for the remaining families; all angle-independent.
FAMILY_TABLES = {
    GateFamily.P2: {K.ETA_PLUS: 1j, K.ETA_MINUS: 1j},
    GateFamily.P3: {K.CHI_PLUS: 1 + 0j, K.CHI_MINUS: -1 + 0j},
    GateFamily.P4: {K.ETA_PLUS: 1 + 0j, K.ETA_MINUS: -1 + 0j},
    GateFamily.P1TILDE: {K.CHI_PLUS: 1 + 0j, K.CHI_MINUS: 1 + 0j},
    GateFamily.P2TILDE: {K.ETA_PLUS: 1 + 0j, K.ETA_MINUS: 1 + 0j},
}


@dataclass
class Sample:
    angles: BlochAngles
    energy: float
    bath_mag: float
    tau: float
    cycles: int
    family: GateFamily
    radius: float

    @cached_property
    def gate_algebra(self) -> list[tuple[float, float, float, float]]:
        return [_gate_algebra(f, self.angles) for f in GateFamily]


def random_angles(rng: np.random.Generator) -> BlochAngles:
    u, v = rng.random(2)
    return BlochAngles(math.acos(1.0 - 2.0 * u), 2.0 * math.pi * v)


def draw_samples(n: int, seed: int) -> list[Sample]:
    rng = np.random.default_rng(seed)
    out = []
    for i in range(n):
        a = random_angles(rng)
        energy, bath_mag, tau, radius = rng.uniform((0.1, 0.0, 0.0, 0.1), (10.0, 10.0, 10.0, 10.0))
        out.append(Sample(a, energy, bath_mag, tau, int(rng.integers(1, 21)), ROTATION_FAMILIES[i % 4], radius))
    return out


@dataclass
class CheckResult:
    name: str
    description: str
    samples: int
    max_residual: float
    tol: float

    @property
    def passed(self) -> bool:
        return self.max_residual <= self.tol


@dataclass
class TableRow:
    source: str
    target: str
    expected: str
    max_error: float
    tol: float

    @property
    def passed(self) -> bool:
        return self.max_error <= self.tol


@dataclass
class VerifyReport:
    checks: list[CheckResult] = field(default_factory=list)
    table: list[TableRow] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks) and all(r.passed for r in self.table)


def _max(values) -> float:
    return float(max(values, default=0.0))


def _phase_errors(f: GateFamily, a: BlochAngles, expected: dict) -> list[float]:
    return [abs(gate_action(f, k, a, tol=math.inf).phase - expected[k]) for k in allowed_kinds(f)]


def _gate_algebra(f: GateFamily, a: BlochAngles) -> tuple[float, float, float, float]:
    g = gate(f, a)
    sign = -1.0 if f.is_rotation else 1.0
    return (
        unitarity_residual(g),
        abs(det2(g) - (1.0 if f.is_rotation else -1.0)),
        fro(g @ g - sign * I2),
        fro(dag(g) - sign * g),
    )


def _helicity(s: Sample) -> float:
    return _max(helicity_residual(make_qubit(k, s.angles), s.angles, k.helicity) for k in HELICITY_KINDS)


def _orthogonality(s: Sample) -> float:
    a = s.angles
    return max(
        abs(inner(make_qubit(K.CHI_PLUS, a), make_qubit(K.CHI_MINUS, a))),
        abs(inner(make_qubit(K.ETA_PLUS, a), make_qubit(K.ETA_MINUS, a))),
    )


def _eta_chi(s: Sample) -> float:
    a = s.angles
    plus, minus = eta_chi_phase(a, tol=math.inf)
    return max(
        fro(make_qubit(K.CHI_PLUS, a) - plus * make_qubit(K.ETA_PLUS, a)),
        fro(make_qubit(K.CHI_MINUS, a) - minus * make_qubit(K.ETA_MINUS, a)),
    )


def _projectors(s: Sample) -> float:
    a = s.angles
    out = []
    for h, kinds in ((1, (K.CHI_PLUS, K.ETA_PLUS)), (-1, (K.CHI_MINUS, K.ETA_MINUS))):
        rho = projector(h, a)
        out.append(fro(rho @ rho - rho))
        out.extend(fro(rho - outer(make_qubit(k, a), make_qubit(k, a))) for k in kinds)
    out.append(fro(projector(1, a) + projector(-1, a) - I2))
    return _max(out)


def _parity_single(s: Sample) -> float:
    a = s.angles
    e = complex(np.exp(1j * a.phi))
    expected = {K.CHI_PLUS: -e, K.CHI_MINUS: e.conjugate(), K.ETA_PLUS: 1j, K.ETA_MINUS: 1j}
    return _max(abs(parity_phase(k, a, tol=math.inf).phase - expected[k]) for k in HELICITY_KINDS)


def _parity_square(s: Sample) -> float:
    expected = {K.CHI_PLUS: 1, K.CHI_MINUS: 1, K.ETA_PLUS: -1, K.ETA_MINUS: -1}
    return _max(abs(double_parity_phase(k, s.angles, tol=math.inf).phase - expected[k]) for k in HELICITY_KINDS)


def _algebra(index: int) -> Callable[[Sample], float]:
    return lambda s: _max(row[index] for row in s.gate_algebra)


def _construction(s: Sample) -> float:
    return _max(construction_gap(f, s.angles) for f in GateFamily)


def _family_actions(s: Sample) -> float:
    return _max(e for f, table in FAMILY_TABLES.items() for e in _phase_errors(f, s.angles, table))


def _axes(s: Sample) -> float:
    a = s.angles
    p = momentum_unit(a)
    out = []
    for f in ROTATION_FAMILIES:
        n = rotation_axis(f, a)
        out.append(abs(float(np.dot(n, p))))
        out.append(fro(exp_pauli(math.pi / 2, n) - gate(f, a)))
    return _max(out)


def _su2_round_trip(s: Sample) -> float:
    n = momentum_unit(s.angles)
    c = 0.05 + (math.pi - 0.1) * (s.tau / 10.0)
    c_back, n_back = su2_axis_angle(exp_pauli(c, n))
    return max(abs(c_back - c), float(np.linalg.norm(n_back - n)))


def _wigner(s: Sample) -> float:
    a = s.angles
    out = []
    for f, kinds in ((GateFamily.P3, (K.CHI_PLUS, K.CHI_MINUS)), (GateFamily.P4, (K.ETA_PLUS, K.ETA_MINUS))):
        g = gate(f, a)
        out.extend(fro(wigner_flip(make_qubit(k, a)) - g @ make_qubit(k, a)) for k in kinds)
    return _max(out)


def _conjugation(s: Sample) -> float:
    return _max(conjugation_residual(f, s.angles) for f in GateFamily)


def _p1_rotation(s: Sample) -> float:
    return fro(induced_rotation(gate(GateFamily.P1, s.angles)) - p1_rotation_closed_form(s.angles.phi))


def _so3(s: Sample) -> float:
    out = []
    for f in GateFamily:
        r = induced_rotation(gate(f, s.angles))
        out.append(fro(r.T @ r - np.eye(3)))
        out.append(abs(np.linalg.det(r) - 1.0))
    return _max(out)


def _inversion(s: Sample) -> float:
    return _max(verify_point_inversion(f, s.angles) for f in ROTATION_FAMILIES)


def _cartesian(s: Sample) -> float:
    x = s.radius * momentum_unit(s.angles)
    return _max(cartesian_inversion_residual(f, x) / s.radius for f in ROTATION_FAMILIES)


def _weyl(s: Sample) -> float:
    return _max(weyl_residual(plane_wave(s.angles, s.energy, h, es)) for h in (1, -1) for es in (1, -1))


def _symmetry(s: Sample) -> float:
    return _max(unitary_symmetry_check(f, s.angles) for f in ROTATION_FAMILIES)


def _twistor(s: Sample) -> float:
    return _max(r for f in ROTATION_FAMILIES for r in twistor_check(s.energy, s.angles, f))


def _massless(s: Sample) -> float:
    m = four_momentum_matrix(s.energy, s.angles)
    return abs(m.det()) / (2 * s.energy) ** 2


def _momentum_projector(s: Sample) -> float:
    m = four_momentum_matrix(s.energy, s.angles)
    return fro(projector(1, s.angles) - m.m / (2 * s.energy))


def _block(s: Sample) -> float:
    return weyl_block_residual(s.energy, s.energy * momentum_unit(s.angles))


def _bath_anticommute(s: Sample) -> float:
    mag = max(s.bath_mag, 1e-3)
    h = dd.bath_hamiltonian(dd.BathSpec(mag, s.angles))
    return _max(dd.anticommutator_norm(gate(f, s.angles), h) / mag for f in ROTATION_FAMILIES)


def _aligned_dd(s: Sample) -> float:
    return dd.dd_cycle(dd.aligned_cycle(s.family, s.angles, s.bath_mag, s.tau, s.cycles)).residual


# (name, description, per-sample residual, tolerance)
CHECKS: list[tuple[str, str, Callable[[Sample], float], float]] = [
    ("helicity_eigenstates", "sigma.p_hat xi = h xi for chi+-, eta+-", _helicity, 1e-14),
    ("pair_orthogonality", "<chi+|chi-> = <eta+|eta-> = 0", _orthogonality, 1e-15),
    ("eta_chi_phase", "chi+- = exp(+-i phi/2) eta+-", _eta_chi, 1e-14),
    ("helicity_projectors", "rho+- = (I +- sigma.p_hat)/2 = outer products", _projectors, 1e-14),
    ("parity_single", "one parity: chi+- -> -+e^{+-i phi} chi-+, eta+- -> i eta-+", _parity_single, 1e-12),
    ("parity_square", "two parities: +1 on chi, -1 on eta", _parity_square, 1e-12),
    ("gate_unitarity", "G G^dag = I, all six families", _algebra(0), 1e-12),
    ("gate_determinant", "det = +1 for P1..P4, -1 for tilde families", _algebra(1), 1e-12),
    ("gate_square", "G^2 = -I for P1..P4, +I for tilde families", _algebra(2), 1e-12),
    ("gate_adjoint", "G^dag = -G for P1..P4, G for tilde families", _algebra(3), 1e-12),
    ("construction_equivalence", "outer-product build equals closed form", _construction, 1e-13),
    ("family_actions", "P2, P3, P4 and tilde actions on their qubits", _family_actions, 1e-12),
    ("rotation_axes", "axis orthogonal to p_hat and exp(i pi/2 n.sigma) = P", _axes, 1e-12),
    ("su2_round_trip", "su2_axis_angle inverts exp_pauli", _su2_round_trip, 1e-10),
    ("wigner_oracle", "P3, P4 reproduce the anti-unitary flip on their qubits", _wigner, 1e-14),
    ("anticommutation", "G (sigma.p_hat) G^dag = -sigma.p_hat", _conjugation, 1e-12),
    ("p1_induced_rotation", "R(P1) matches its closed form in 2 phi", _p1_rotation, 1e-12),
    ("induced_so3", "R(G) orthogonal with det 1", _so3, 1e-12),
    ("point_inversion", "R(P) p_hat = -p_hat for P1..P4", _inversion, 1e-12),
    ("cartesian_inversion", "R(P(angles(x))) x = -x, relative", _cartesian, 1e-12),
    ("weyl_plane_waves", "momentum-space Weyl residuals, both energy signs", _weyl, 1e-14),
    ("unitary_symmetry", "P xi+ solves the negative-helicity equation", _symmetry, 1e-13),
    ("twistor_identities", "sigma.p = 2E xi+ xi+^dag and P sigma.p P^dag = 2E xi- xi-^dag", _twistor, 1e-12),
    ("massless_determinant", "det(sigma.p) / (2E)^2 = 0", _massless, 1e-12),
    ("momentum_projector", "sigma.p / 2E = rho+", _momentum_projector, 1e-13),
    ("chiral_blocks", "massless Dirac operator splits into E -+ sigma.p", _block, 1e-13),
    ("bath_anticommutation", "{P, sigma.B} = 0 for aligned B, relative to |B|", _bath_anticommute, 1e-12),
    ("aligned_decoupling", "aligned ideal cycles equal the identity up to phase", _aligned_dd, 1e-10),
]


def run_verify(samples: int = 1000, seed: int = 0, tol: Optional[float] = None) -> VerifyReport:
    """Run every check over ``samples`` random points.

    ``tol`` replaces every per-check tolerance when given.
    """
    if samples < 1:
        raise ValueError("samples must be at least 1")
    pts = draw_samples(samples, seed)
    report = VerifyReport()

    clifford = float(np.max(clifford_table()))
    report.checks.append(
        CheckResult("clifford_relation", "{g^mu, g^nu} = 2 g^{mu nu} I4", 1, clifford, 1e-14 if tol is None else tol)
    )
    for name, description, fn, default_tol in CHECKS:
        worst = _max(fn(s) for s in pts)
        report.checks.append(CheckResult(name, description, samples, worst, default_tol if tol is None else tol))

    table_tol = 1e-12 if tol is None else tol
    worst = {k: 0.0 for k in QubitKind}
    for s in pts:
        expected = p1_table(s.angles.phi)
        for k in QubitKind:
            err = abs(gate_action(GateFamily.P1, k, s.angles, tol=math.inf).phase - expected[k])
            worst[k] = max(worst[k], err)
    labels = {
        K.CHI_PLUS: "-e^{i phi}",
        K.CHI_MINUS: "e^{-i phi}",
        K.ETA_PLUS: "-1",
        K.ETA_MINUS: "+1",
        K.ZERO: "-e^{i phi}",
        K.ONE: "e^{-i phi}",
    }
    for k in QubitKind:
        report.table.append(TableRow(k.value, k.partner.value, labels[k], worst[k], table_tol))
    return report
