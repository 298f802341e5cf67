import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from blochgate.gates import GateFamily, gate
from blochgate.linalg import (
    I2,
    close,
    close_up_to_phase,
    dag,
    det2,
    exp_pauli,
    fro,
    pauli,
    pauli_components,
    pauli_dot,
    su2_axis_angle,
    trace,
    unitarity_residual,
)
from blochgate.spinors import BlochAngles, QubitKind, make_qubit
from oracles import series_expm
from strategies import unit_vectors

complex_2x2 = st.lists(st.complex_numbers(max_magnitude=10, allow_nan=False, allow_infinity=False), min_size=4, max_size=4).map(
    lambda v: np.array(v, dtype=complex).reshape(2, 2)
)


def test_pauli_matrices_as_printed():
    assert np.array_equal(pauli(1), [[0, 1], [1, 0]])
    assert np.array_equal(pauli(2), [[0, -1j], [1j, 0]])
    assert np.array_equal(pauli(3), np.diag([1, -1]))


@pytest.mark.parametrize("i", [1, 2, 3])
def test_pauli_squares_to_identity(i):
    assert np.array_equal(pauli(i) @ pauli(i), I2)


def test_pauli_product():
    assert np.array_equal(pauli(1) @ pauli(2), 1j * pauli(3))


@pytest.mark.parametrize("i", [0, 4, -1])
def test_pauli_index_out_of_range(i):
    with pytest.raises(ValueError):
        pauli(i)


@given(complex_2x2)
def test_adjoint_involution(a):
    assert np.array_equal(dag(dag(a)), a)


@given(complex_2x2, complex_2x2)
def test_det_multiplicative(a, b):
    assert abs(det2(a @ b) - det2(a) * det2(b)) <= 1e-12 * (1 + fro(a) ** 2 * fro(b) ** 2)


@given(complex_2x2, complex_2x2, complex_2x2)
def test_product_associative(a, b, c):
    assert fro((a @ b) @ c - a @ (b @ c)) <= 1e-12 * (1 + fro(a) * fro(b) * fro(c))


def test_det_identity():
    assert det2(I2) == 1


def test_det_p1_is_one(rng):
    for phi in rng.uniform(0, 2 * math.pi, 20):
        assert abs(det2(gate(GateFamily.P1, BlochAngles(1.0, phi))) - 1) <= 1e-12


def test_pauli_dot_examples():
    assert np.array_equal(pauli_dot((0, 0, 1)), np.diag([1, -1]))
    x = pauli_dot((1, 0, 0))
    assert np.array_equal(x @ x, I2)


@given(st.tuples(*[st.floats(-100, 100)] * 3))
def test_pauli_dot_spectrum(v):
    m = pauli_dot(v)
    norm = float(np.linalg.norm(v))
    assert abs(trace(m)) == 0
    assert fro(m - dag(m)) == 0
    eig = np.sort(np.linalg.eigvalsh(m))
    assert np.allclose(eig, [-norm, norm], atol=1e-12 * max(1.0, norm), rtol=0)


def test_pauli_dot_unit_momentum_eigenvalues():
    n = np.array([0.36, 0.48, 0.8])
    assert np.allclose(np.linalg.eigvalsh(pauli_dot(n)), [-1, 1], atol=1e-14)


def test_pauli_components_round_trip():
    v = np.array([0.3, -1.2, 2.5])
    assert np.allclose(pauli_components(pauli_dot(v)), v, atol=1e-15)
    with pytest.raises(ValueError):
        pauli_components(I2)
    with pytest.raises(ValueError):
        pauli_components(np.array([[0, 1], [0, 0]], dtype=complex))


def test_exp_pauli_quarter_turn_about_y():
    assert close(exp_pauli(math.pi / 2, (0, 1, 0)), [[0, 1], [-1, 0]], 1e-15)


def test_exp_pauli_zero_angle():
    assert np.array_equal(exp_pauli(0.0, (0.6, 0.0, 0.8)), I2)


def test_exp_pauli_matches_series_oracle():
    n = (0.6, 0.0, 0.8)
    assert fro(exp_pauli(0.37, n) - series_expm(1j * 0.37 * pauli_dot(n))) <= 1e-13


def test_exp_pauli_rejects_non_unit_axis():
    with pytest.raises(ValueError):
        exp_pauli(1.0, (1.0, 1.0, 0.0))


@given(st.floats(-10, 10), unit_vectors)
def test_exp_pauli_unitary_det_one_and_matches_oracle(c, n):
    m = exp_pauli(c, n)
    assert unitarity_residual(m) <= 1e-12
    assert abs(det2(m) - 1) <= 1e-12
    assert fro(m - series_expm(1j * c * pauli_dot(n))) <= 1e-12


def test_su2_axis_angle_round_trip_z():
    c, n = su2_axis_angle(exp_pauli(0.3, (0, 0, 1)))
    assert c == pytest.approx(0.3, abs=1e-15)
    assert np.allclose(n, [0, 0, 1], atol=1e-15)


def test_su2_axis_angle_of_p1(rng):
    for phi in rng.uniform(0, 2 * math.pi, 10):
        c, n = su2_axis_angle(gate(GateFamily.P1, BlochAngles(0.4, phi)))
        assert c == pytest.approx(math.pi / 2, abs=1e-14)
        assert np.allclose(n, [-math.sin(phi), math.cos(phi), 0], atol=1e-14)


@pytest.mark.parametrize("m", [I2, -I2])
def test_su2_axis_angle_degenerate(m):
    with pytest.raises(ValueError):
        su2_axis_angle(m)


def test_su2_axis_angle_rejects_non_su2():
    with pytest.raises(ValueError):
        su2_axis_angle(np.diag([1, -1]).astype(complex))
    with pytest.raises(ValueError):
        su2_axis_angle(2 * I2)


@given(st.floats(1e-6, math.pi - 1e-6), unit_vectors)
def test_su2_axis_angle_inverts_exp_pauli(c, n):
    c_back, n_back = su2_axis_angle(exp_pauli(c, n))
    assert abs(c_back - c) <= 1e-10
    assert np.linalg.norm(n_back - n) <= 1e-10


def test_close_tolerates_rounding():
    assert close(I2, I2 + 1e-15 * pauli(1), 1e-12)
    assert not close(I2, I2 + 1e-6 * pauli(1), 1e-12)


def test_close_up_to_phase():
    a = BlochAngles(1.1, 0.4)
    chi_plus = make_qubit(QubitKind.CHI_PLUS, a)
    ok, psi = close_up_to_phase(chi_plus, 1j * chi_plus)
    assert ok
    assert abs(abs(psi) - 1) <= 1e-15
    # u = psi * v  with v = i u  =>  psi = -i
    assert abs(psi + 1j) <= 1e-15
    ok, _ = close_up_to_phase(chi_plus, make_qubit(QubitKind.CHI_MINUS, a))
    assert not ok


@given(st.floats(0, 2 * math.pi))
def test_close_up_to_phase_recovers_phase(alpha):
    v = np.array([0.6, 0.8j])
    ok, psi = close_up_to_phase(np.exp(1j * alpha) * v, v)
    assert ok
    assert abs(psi - np.exp(1j * alpha)) <= 1e-14
