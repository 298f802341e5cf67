"""Small dense linear algebra for 2x2 complex, 3x3 real and 4x4 complex matrices.

Matrices are plain numpy arrays of fixed shape. Spinors are complex arrays
of shape (2,). All functions are pure.
"""

from __future__ import annotations

import math

import numpy as np

DEFAULT_TOL = 1e-12

I2 = np.eye(2, dtype=complex)
I3 = np.eye(3)
I4 = np.eye(4, dtype=complex)

SIGMA = (
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)
SIGMA_STACK = np.stack(SIGMA)


def mat2(a, b, c, d) -> np.ndarray:
    """Build a complex 2x2 matrix from its entries in row-major order."""
    return np.array([[a, b], [c, d]], dtype=complex)


def spinor(c0, c1) -> np.ndarray:
    return np.array([c0, c1], dtype=complex)


def dag(a: np.ndarray) -> np.ndarray:
    return a.conj().T


def det2(a: np.ndarray) -> complex:
    return complex(a[0, 0] * a[1, 1] - a[0, 1] * a[1, 0])


def trace(a: np.ndarray) -> complex:
    return complex(np.trace(a))


def fro(a: np.ndarray) -> float:
    """Frobenius norm; the residual norm used everywhere in the package."""
    # vdot flattens; much cheaper than np.linalg.norm on tiny arrays
    return math.sqrt(np.vdot(a, a).real)


def inner(u: np.ndarray, v: np.ndarray) -> complex:
    """<u|v>, conjugate-linear in the first slot."""
    return complex(np.vdot(u, v))


def outer(u: np.ndarray, v: np.ndarray) -> np.ndarray:
    """|u><v|."""
    return np.outer(u, v.conj())


def unitarity_residual(a: np.ndarray) -> float:
    return fro(a @ dag(a) - np.eye(a.shape[0]))


def hermiticity_residual(a: np.ndarray) -> float:
    return fro(a - dag(a))


def pauli(i: int) -> np.ndarray:
    """Pauli matrix sigma_i for i in {1, 2, 3}."""
    if i not in (1, 2, 3):
        raise ValueError(f"Pauli index must be 1, 2 or 3, got {i!r}")
    return SIGMA[i - 1].copy()


def pauli_dot(v) -> np.ndarray:
    """v . sigma for a real 3-vector v (not necessarily unit)."""
    x, y, z = (float(t) for t in v)
    return mat2(z, x - 1j * y, x + 1j * y, -z)


def pauli_components(h: np.ndarray, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Real vector v with h == v . sigma.

    Raises ValueError if h is not Hermitian and traceless within tol.
    """
    scale = max(1.0, fro(h))
    if hermiticity_residual(h) > tol * scale:
        raise ValueError("matrix is not Hermitian")
    if abs(trace(h)) > tol * scale:
        raise ValueError("matrix is not traceless")
    return np.array([0.5 * trace(s @ h).real for s in SIGMA])


def _check_unit(n, tol: float) -> np.ndarray:
    n = np.asarray(n, dtype=float)
    if n.shape != (3,):
        raise ValueError(f"axis must be a 3-vector, got shape {n.shape}")
    if abs(np.linalg.norm(n) - 1.0) > tol:
        raise ValueError(f"axis is not a unit vector (norm {np.linalg.norm(n)!r})")
    return n


def exp_pauli(c: float, n, tol: float = DEFAULT_TOL) -> np.ndarray:
    """exp(i c n.sigma) = cos(c) I + i sin(c) n.sigma for a unit axis n."""
    n = _check_unit(n, tol)
    return np.cos(c) * I2 + 1j * np.sin(c) * pauli_dot(n)


def su2_axis_angle(m: np.ndarray, tol: float = DEFAULT_TOL) -> tuple[float, np.ndarray]:
    """Inverse of :func:`exp_pauli` with the angle in the open interval (0, pi).

    Raises ValueError when m is not in SU(2), or is +-I where the axis is
    undefined.
    """
    if unitarity_residual(m) > tol or abs(det2(m) - 1.0) > tol:
        raise ValueError("matrix is not special unitary")
    cos_c = 0.5 * trace(m).real
    # m = cos c I + i sin c n.sigma  =>  Tr(sigma_k m)/2 = i sin c n_k
    v = np.array([0.5 * trace(s @ m).imag for s in SIGMA])
    sin_c = float(np.linalg.norm(v))
    if sin_c <= tol:
        raise ValueError("rotation axis undefined for +-identity")
    return float(np.arctan2(sin_c, cos_c)), v / sin_c


def close(a: np.ndarray, b: np.ndarray, tol: float = DEFAULT_TOL) -> bool:
    return fro(np.asarray(a) - np.asarray(b)) <= tol


def close_up_to_phase(u: np.ndarray, v: np.ndarray, tol: float = DEFAULT_TOL) -> tuple[bool, complex]:
    """Compare two normalized spinors ignoring global phase.

    Returns ``(ok, psi)`` where psi is the unit complex number minimizing
    ``||u - psi v||``, i.e. ``u ~ psi * v``. For orthogonal inputs psi is
    undefined and 1 is returned together with ``False``.
    """
    overlap = inner(v, u)
    if abs(overlap) <= tol:
        return False, 1 + 0j
    psi = overlap / abs(overlap)
    return fro(u - psi * v) <= tol, psi
