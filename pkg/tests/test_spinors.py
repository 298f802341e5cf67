import cmath
import math

import numpy as np
import pytest
from hypothesis import given

from blochgate.linalg import I2, fro, hermiticity_residual, inner, outer, trace
from blochgate.spinors import (
    HELICITY_KINDS,
    BlochAngles,
    QubitKind,
    discrete_parity,
    double_parity_phase,
    eta_chi_phase,
    helicity_residual,
    make_qubit,
    momentum_unit,
    parity_phase,
    projector,
)
from strategies import angles

K = QubitKind
S2 = 1 / math.sqrt(2)


class TestBlochAngles:
    def test_phi_reduced(self):
        assert BlochAngles(1.0, 2 * math.pi + 0.5).phi == pytest.approx(0.5)
        assert BlochAngles(1.0, -0.5).phi == pytest.approx(2 * math.pi - 0.5)

    def test_phi_never_reaches_two_pi(self):
        assert 0 <= BlochAngles(0.0, -1e-300).phi < 2 * math.pi

    @pytest.mark.parametrize("theta", [-0.1, math.pi + 0.1, float("nan")])
    def test_theta_out_of_range(self, theta):
        with pytest.raises(ValueError):
            BlochAngles(theta, 0.0)


@pytest.mark.parametrize(
    "a, expected",
    [
        (BlochAngles(0.0, 1.234), (0, 0, 1)),
        (BlochAngles(math.pi / 2, 0.0), (1, 0, 0)),
        (BlochAngles(math.pi / 2, math.pi / 4), (S2, S2, 0)),
    ],
)
def test_momentum_unit(a, expected):
    assert np.allclose(momentum_unit(a), expected, atol=1e-15)


@pytest.mark.parametrize(
    "kind, a, expected",
    [
        (K.CHI_PLUS, BlochAngles(0, 0), (1, 0)),
        (K.CHI_MINUS, BlochAngles(0, 0), (0, 1)),
        (K.CHI_PLUS, BlochAngles(math.pi / 2, math.pi / 2), (S2, 1j * S2)),
        (K.ETA_PLUS, BlochAngles(math.pi / 2, math.pi / 2), (cmath.exp(-1j * math.pi / 4) * S2, cmath.exp(1j * math.pi / 4) * S2)),
        (K.ZERO, BlochAngles(0.7, 0.3), (1, 0)),
        (K.ONE, BlochAngles(0.7, 0.3), (0, 1)),
    ],
)
def test_make_qubit_examples(kind, a, expected):
    assert fro(make_qubit(kind, a) - np.array(expected)) <= 1e-15


@given(angles)
def test_pairs_orthonormal(a):
    for plus, minus in ((K.CHI_PLUS, K.CHI_MINUS), (K.ETA_PLUS, K.ETA_MINUS)):
        u, v = make_qubit(plus, a), make_qubit(minus, a)
        assert abs(np.linalg.norm(u) - 1) <= 1e-15
        assert abs(np.linalg.norm(v) - 1) <= 1e-15
        assert abs(inner(u, v)) <= 1e-15


@given(angles)
def test_helicity_eigenstates(a):
    for k in HELICITY_KINDS:
        assert helicity_residual(make_qubit(k, a), a, k.helicity) <= 1e-14


def test_helicity_residual_examples(angle_samples):
    for a in angle_samples:
        assert helicity_residual(make_qubit(K.CHI_PLUS, a), a, 1) <= 1e-15
        assert helicity_residual(make_qubit(K.CHI_MINUS, a), a, -1) <= 1e-15
        assert helicity_residual(make_qubit(K.CHI_MINUS, a), a, 1) == pytest.approx(2, abs=1e-12)


def test_eta_chi_phase_examples():
    assert eta_chi_phase(BlochAngles(0.5, 0.0)) == (1, 1)
    plus, minus = eta_chi_phase(BlochAngles(0.5, math.pi))
    assert abs(plus - 1j) <= 1e-15 and abs(minus + 1j) <= 1e-15


def test_eta_chi_relation_residual(angle_samples):
    for a in angle_samples:
        plus, minus = eta_chi_phase(a)
        assert fro(make_qubit(K.CHI_PLUS, a) - plus * make_qubit(K.ETA_PLUS, a)) <= 1e-15
        assert fro(make_qubit(K.CHI_MINUS, a) - minus * make_qubit(K.ETA_MINUS, a)) <= 1e-15


def test_projector_north_pole():
    assert fro(projector(1, BlochAngles(0.0, 0.9)) - np.diag([1, 0])) == 0


def test_projector_rejects_bad_sign():
    with pytest.raises(ValueError):
        projector(0, BlochAngles(0.0))


@given(angles)
def test_projector_properties(a):
    plus, minus = projector(1, a), projector(-1, a)
    assert fro(plus @ minus) <= 1e-15
    assert fro(plus + minus - I2) <= 1e-15
    for rho in (plus, minus):
        assert hermiticity_residual(rho) == 0
        assert fro(rho @ rho - rho) <= 1e-14
        assert abs(trace(rho) - 1) <= 1e-15


def test_projector_equals_outer_products(angle_samples):
    for a in angle_samples:
        for h, kinds in ((1, (K.CHI_PLUS, K.ETA_PLUS)), (-1, (K.CHI_MINUS, K.ETA_MINUS))):
            for k in kinds:
                s = make_qubit(k, a)
                assert fro(projector(h, a) - outer(s, s)) <= 1e-15


@pytest.mark.parametrize(
    "a, expected",
    [
        (BlochAngles(0, 0), (math.pi, math.pi)),
        (BlochAngles(math.pi / 2, math.pi / 2), (math.pi / 2, 3 * math.pi / 2)),
        (BlochAngles(0.3, 5.0), (math.pi - 0.3, 5.0 + math.pi - 2 * math.pi)),
    ],
)
def test_discrete_parity(a, expected):
    p = discrete_parity(a)
    assert (p.theta, p.phi) == pytest.approx(expected, abs=1e-15)


@given(angles)
def test_discrete_parity_twice_is_identity(a):
    back = discrete_parity(discrete_parity(a))
    assert back.theta == pytest.approx(a.theta, abs=1e-15)
    assert abs(cmath.exp(1j * back.phi) - cmath.exp(1j * a.phi)) <= 1e-14


@given(angles)
def test_parity_phase_single(a):
    e = cmath.exp(1j * a.phi)
    expected = {K.CHI_PLUS: -e, K.CHI_MINUS: e.conjugate(), K.ETA_PLUS: 1j, K.ETA_MINUS: 1j}
    for k in HELICITY_KINDS:
        m = parity_phase(k, a)
        assert m.target is k.partner
        assert abs(m.phase - expected[k]) <= 1e-12
        assert m.residual <= 1e-12


@given(angles)
def test_parity_square_distinguishes_families(a):
    for k in HELICITY_KINDS:
        m = double_parity_phase(k, a)
        assert m.target is k
        assert abs(m.phase - (1 if k.is_chi else -1)) <= 1e-12


def test_parity_square_matches_direct_lift(angle_samples):
    # Evaluating the formula at phi + 2 pi directly must give the same sign.
    from blochgate.spinors import _components

    for a in angle_samples:
        for k in HELICITY_KINDS:
            lifted = _components(k, a.theta, a.phi + 2 * math.pi)
            assert abs(inner(make_qubit(k, a), lifted) - double_parity_phase(k, a).phase) <= 1e-12


@pytest.mark.parametrize("kind", [K.ZERO, K.ONE])
def test_parity_phase_rejects_basis_states(kind):
    with pytest.raises(ValueError):
        parity_phase(kind, BlochAngles(0.3, 0.2))
