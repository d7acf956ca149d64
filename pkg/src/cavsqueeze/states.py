"""Density matrices over labeled tensor factors, plus the two-atom symmetric family.

The two-atom computational basis is ordered ee, eg, ge, gg with the excited
level first and atom 1 on the left (slow) tensor factor.  The symmetric basis
used throughout is

    |1> = |ee>,  |2> = (|eg> + |ge>)/sqrt(2),  |a> = (|eg> - |ge>)/sqrt(2),
    |3> = |gg>.

Family states are X1|1><1| + X2|2><2| + X3|3><3| + Y|1><3| + conj(Y)|3><1|.
"""

import json
import math
from dataclasses import dataclass
from typing import IO, Sequence, Union

import numpy as np

from .errors import (
    BadSubsystemError,
    DimensionMismatchError,
    NotHermitianError,
    NotNormalizedError,
    NotPositiveError,
    StateFormatError,
)

TRACE_ATOL = 1e-10
PSD_ATOL = 1e-10
HERMITIAN_ATOL = 1e-10

_SQRT_HALF = math.sqrt(0.5)

# Columns are |1>, |2>, |a>, |3> expressed in the computational basis.
SYMMETRIC_BASIS = np.array(
    [
        [1.0, 0.0, 0.0, 0.0],
        [0.0, _SQRT_HALF, _SQRT_HALF, 0.0],
        [0.0, _SQRT_HALF, -_SQRT_HALF, 0.0],
        [0.0, 0.0, 0.0, 1.0],
    ],
    dtype=complex,
)
SYMMETRIC_BASIS.setflags(write=False)


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Validated density matrix with its tensor factorization.

    Construction rejects inputs that are not Hermitian within 1e-10, whose
    trace differs from 1 by more than 1e-10, or whose minimum eigenvalue is
    below -1e-10.
    """

    mat: np.ndarray
    dims: tuple

    def __post_init__(self):
        mat = np.array(self.mat, dtype=complex)
        dims = tuple(int(d) for d in self.dims)
        if not dims or any(d < 1 for d in dims):
            raise DimensionMismatchError(f"invalid factor dimensions {dims}")
        total = math.prod(dims)
        if mat.ndim != 2 or mat.shape != (total, total):
            raise DimensionMismatchError(
                f"matrix shape {mat.shape} does not match dims {dims}"
            )
        herm = float(np.abs(mat - mat.conj().T).max())
        if herm > HERMITIAN_ATOL:
            raise NotHermitianError(
                f"not Hermitian: max |rho - rho^dagger| = {herm:.3e}"
            )
        tr = mat.trace().real
        if abs(tr - 1.0) > TRACE_ATOL:
            raise NotNormalizedError(f"not unit trace: trace = {tr:.12g}")
        smallest = float(np.linalg.eigvalsh(mat)[0])
        if smallest < -PSD_ATOL:
            raise NotPositiveError(
                f"not positive semidefinite: minimum eigenvalue = {smallest:.3e}"
            )
        mat.setflags(write=False)
        object.__setattr__(self, "mat", mat)
        object.__setattr__(self, "dims", dims)

    @property
    def dim(self) -> int:
        return self.mat.shape[0]


@dataclass(frozen=True)
class FamilyCoeffs:
    """Coefficients (x1, x2, x3, y) of a symmetric-family state.

    The populations must lie in [0, 1] and sum to 1 within 1e-12; the
    coherence must satisfy |y| <= sqrt(x1*x3) within 1e-12, otherwise the
    matrix the coefficients describe would not be positive.
    """

    x1: float
    x2: float
    x3: float
    y: complex = 0j

    def __post_init__(self):
        object.__setattr__(self, "x1", float(self.x1))
        object.__setattr__(self, "x2", float(self.x2))
        object.__setattr__(self, "x3", float(self.x3))
        object.__setattr__(self, "y", complex(self.y))
        for name in ("x1", "x2", "x3"):
            value = getattr(self, name)
            if not -1e-12 <= value <= 1.0 + 1e-12:
                raise NotPositiveError(f"{name} = {value:.12g} is outside [0, 1]")
        total = self.x1 + self.x2 + self.x3
        if abs(total - 1.0) > 1e-12:
            raise NotNormalizedError(
                f"populations must sum to 1: x1 + x2 + x3 = {total:.15g}"
            )
        bound = math.sqrt(max(self.x1, 0.0) * max(self.x3, 0.0))
        if abs(self.y) > bound + 1e-12:
            raise NotPositiveError(
                f"|y| = {abs(self.y):.12g} exceeds sqrt(x1*x3) = {bound:.12g}"
            )


def density_from_pure(psi: np.ndarray, dims: Sequence[int]) -> DensityMatrix:
    """Rank-1 density matrix |psi><psi| of a normalized state vector."""
    psi = np.asarray(psi, dtype=complex).reshape(-1)
    norm = float(np.linalg.norm(psi))
    if abs(norm - 1.0) > 1e-10:
        raise NotNormalizedError(f"state vector is not normalized: norm = {norm:.12g}")
    return DensityMatrix(np.outer(psi, psi.conj()), tuple(dims))


def _keep_as_tuple(keep) -> tuple:
    if isinstance(keep, (int, np.integer)):
        return (int(keep),)
    try:
        return tuple(int(k) for k in keep)
    except TypeError:
        raise BadSubsystemError(f"invalid subsystem selection {keep!r}") from None


def partial_trace(rho: DensityMatrix, keep) -> DensityMatrix:
    """Trace out every factor except ``keep``.

    Parameters
    ----------
    rho:
        State over at least two tensor factors.
    keep:
        Index of the factor to keep, or a contiguous ascending group of
        factor indices.

    Returns
    -------
    DensityMatrix
        Reduced state over the kept factors.
    """
    dims = rho.dims
    if len(dims) < 2:
        raise BadSubsystemError("partial trace needs at least two tensor factors")
    keep_t = _keep_as_tuple(keep)
    if not keep_t or len(set(keep_t)) != len(keep_t):
        raise BadSubsystemError(f"invalid subsystem selection {keep_t}")
    if any(k < 0 or k >= len(dims) for k in keep_t):
        raise BadSubsystemError(
            f"subsystem {keep_t} out of range for {len(dims)} factors"
        )
    if list(keep_t) != list(range(keep_t[0], keep_t[-1] + 1)):
        raise BadSubsystemError(f"kept factors {keep_t} must be contiguous ascending")
    if len(keep_t) == len(dims):
        raise BadSubsystemError("keeping every factor leaves nothing to trace out")
    lo, hi = keep_t[0], keep_t[-1] + 1
    d_before = math.prod(dims[:lo]) if lo else 1
    d_keep = math.prod(dims[lo:hi])
    d_after = math.prod(dims[hi:]) if hi < len(dims) else 1
    blocks = rho.mat.reshape(d_before, d_keep, d_after, d_before, d_keep, d_after)
    reduced = np.einsum("aibajb->ij", blocks)
    return DensityMatrix(reduced, dims[lo:hi])


def partial_transpose(rho, sub: int = 1, dims=None) -> np.ndarray:
    """Transpose one factor of a bipartite operator.

    Accepts a DensityMatrix over exactly two factors, or a bare square array
    together with explicit ``dims``.  Returns a plain array because the
    result is generally not positive.
    """
    if isinstance(rho, DensityMatrix):
        mat, dims = rho.mat, rho.dims
    else:
        mat = np.asarray(rho, dtype=complex)
        if dims is None:
            raise BadSubsystemError("dims are required for a bare matrix")
    dims = tuple(int(d) for d in dims)
    if len(dims) != 2:
        raise BadSubsystemError(f"partial transpose needs exactly 2 factors, got {dims}")
    if sub not in (0, 1):
        raise BadSubsystemError(f"subsystem must be 0 or 1, got {sub}")
    d0, d1 = dims
    blocks = mat.reshape(d0, d1, d0, d1)
    axes = (2, 1, 0, 3) if sub == 0 else (0, 3, 2, 1)
    return blocks.transpose(axes).reshape(d0 * d1, d0 * d1).copy()


def family_density(c: FamilyCoeffs) -> DensityMatrix:
    """Two-atom density matrix of the symmetric family in the computational basis."""
    half = 0.5 * c.x2
    y = complex(c.y)
    mat = np.array(
        [
            [c.x1, 0.0, 0.0, y],
            [0.0, half, half, 0.0],
            [0.0, half, half, 0.0],
            [y.conjugate(), 0.0, 0.0, c.x3],
        ],
        dtype=complex,
    )
    return DensityMatrix(mat, (2, 2))


def family_coeffs_from_density(rho: DensityMatrix, atol: float = 1e-10) -> FamilyCoeffs:
    """Read family coefficients back from a two-atom state.

    Rotates into the symmetric basis and checks that every element outside
    the family pattern (including the antisymmetric population) is below
    ``atol``.
    """
    if rho.mat.shape != (4, 4):
        raise DimensionMismatchError(f"expected a 4x4 state, got {rho.mat.shape}")
    sym = SYMMETRIC_BASIS.conj().T @ rho.mat @ SYMMETRIC_BASIS
    residual = sym.copy()
    for i, j in ((0, 0), (1, 1), (3, 3), (0, 3), (3, 0)):
        residual[i, j] = 0.0
    worst = float(np.abs(residual).max())
    if worst > atol:
        raise ValueError(
            f"state lies outside the symmetric family: residual = {worst:.3e}"
        )
    return FamilyCoeffs(sym[0, 0].real, sym[1, 1].real, sym[3, 3].real, sym[0, 3])


def load_density_matrix(source: Union[str, IO[str]]) -> DensityMatrix:
    """Load a density matrix from the JSON state-file format.

    The document must carry ``dims`` (list of integers) and ``rows`` (list of
    rows, each entry a two-element [re, im] pair), row-major with exactly
    dim*dim entries.  Layout problems raise StateFormatError; a well-formed
    file describing an invalid state raises the usual validation errors.
    """
    if hasattr(source, "read"):
        text = source.read()
    else:
        with open(source, "r", encoding="utf-8") as fh:
            text = fh.read()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise StateFormatError(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict) or "dims" not in doc or "rows" not in doc:
        raise StateFormatError("document must carry 'dims' and 'rows' fields")
    dims = doc["dims"]
    if (
        not isinstance(dims, list)
        or not dims
        or not all(isinstance(d, int) and d >= 1 for d in dims)
    ):
        raise StateFormatError("'dims' must be a list of positive integers")
    total = math.prod(dims)
    rows = doc["rows"]
    if not isinstance(rows, list) or len(rows) != total:
        raise StateFormatError(f"'rows' must hold exactly {total} rows")
    mat = np.empty((total, total), dtype=complex)
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != total:
            raise StateFormatError(f"row {i} must hold exactly {total} entries")
        for j, entry in enumerate(row):
            if (
                not isinstance(entry, list)
                or len(entry) != 2
                or not all(isinstance(p, (int, float)) for p in entry)
            ):
                raise StateFormatError(f"entry ({i}, {j}) must be a [re, im] pair")
            mat[i, j] = complex(entry[0], entry[1])
    return DensityMatrix(mat, tuple(dims))
