"""Dense complex linear algebra for small Hermitian problems.

Everything here operates on plain numpy arrays with dtype complex128.
Matrices in this package stay small (at most a few dozen rows), so dense
routines are the right tool.
"""

from typing import NamedTuple

import numpy as np

from .errors import NoConvergenceError, NotHermitianError

# Entrywise tolerance for accepting a matrix as Hermitian.
HERMITIAN_ATOL = 1e-10


class EigenDecomposition(NamedTuple):
    """Eigenvalues (real, ascending) and matching orthonormal column vectors."""

    values: np.ndarray
    vectors: np.ndarray


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product with the left factor on the slow index."""
    return np.kron(np.asarray(a), np.asarray(b))


def hermitian_eig(h: np.ndarray) -> EigenDecomposition:
    """Diagonalize a Hermitian matrix.

    Parameters
    ----------
    h:
        Square matrix, Hermitian within ``HERMITIAN_ATOL`` entrywise.

    Returns
    -------
    EigenDecomposition
        Real eigenvalues in ascending order and the unitary of column
        eigenvectors, satisfying ``h @ V = V @ diag(values)``.

    Raises
    ------
    NotHermitianError
        If ``h`` is not square or not Hermitian within tolerance.
    NoConvergenceError
        If the underlying solver fails to converge.
    """
    h = np.asarray(h, dtype=complex)
    if h.ndim != 2 or h.shape[0] != h.shape[1]:
        raise NotHermitianError(f"expected a square matrix, got shape {h.shape}")
    deviation = float(np.abs(h - h.conj().T).max()) if h.size else 0.0
    if deviation > HERMITIAN_ATOL:
        raise NotHermitianError(
            f"matrix is not Hermitian: max |h - h^dagger| = {deviation:.3e}"
        )
    try:
        values, vectors = np.linalg.eigh(h)
    except np.linalg.LinAlgError as exc:
        raise NoConvergenceError(f"eigensolver did not converge: {exc}") from exc
    return EigenDecomposition(values, vectors)


def evolution_operator(h: np.ndarray, t: float) -> np.ndarray:
    """Unitary exp(-i*h*t) of a Hermitian generator, via eigendecomposition."""
    values, vectors = hermitian_eig(h)
    phases = np.exp(-1j * values * float(t))
    return (vectors * phases) @ vectors.conj().T
