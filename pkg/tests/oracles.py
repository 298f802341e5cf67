"""Independent reference computations used only by the tests.

Nothing here calls into the closed-form Pauli machinery of the package.
"""

import numpy as np


def series_expm(a, terms=30):
    """Scaled-and-squared Taylor series matrix exponential."""
    a = np.asarray(a, dtype=complex)
    norm = np.linalg.norm(a, 1)
    s = max(0, int(np.ceil(np.log2(norm / 0.5))) if norm > 0.5 else 0)
    b = a / 2**s
    result = np.eye(a.shape[0], dtype=complex)
    term = np.eye(a.shape[0], dtype=complex)
    for k in range(1, terms):
        term = term @ b / k
        result = result + term
    for _ in range(s):
        result = result @ result
    return result


PAULI = [
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
]


def dot_sigma(v):
    return sum(float(c) * s for c, s in zip(v, PAULI))


def brute_rotation(m):
    """R_ij = Re Tr(s_i m s_j m^dag) / 2, by explicit index loops."""
    md = np.conj(m).T
    r = np.zeros((3, 3))
    for i in range(3):
        for j in range(3):
            prod = PAULI[i] @ m @ PAULI[j] @ md
            r[i, j] = 0.5 * sum(prod[k, k] for k in range(2)).real
    return r


def cycle_by_series(gate, bath_vector, tau, cycles):
    """P U P^dag U with U = exp(-i tau sigma.B) from the series oracle."""
    u = series_expm(-1j * tau * dot_sigma(bath_vector))
    one = gate @ u @ np.conj(gate).T @ u
    return np.linalg.matrix_power(one, cycles)
