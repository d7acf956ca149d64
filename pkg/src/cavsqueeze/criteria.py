"""Entanglement diagnostics for two-atom states.

Two independent criteria are implemented side by side:

* the partial-transpose test (necessary and sufficient for two qubits),
  with the negativity as the quantitative companion, and
* the collective-spin squeezing parameter
  xi^2 = N var(S_n1) / (<S_n2>^2 + <S_n3>^2) over orthonormal triads
  (n1, n2, n3), which witnesses entanglement only when it drops below 1.

Closed forms for the symmetric family sit next to the generic machinery so
either route can check the other.
"""

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import (
    DimensionMismatchError,
    NonDiagonalError,
    NonRealError,
    ZeroMeanSpinError,
)
from .linalg import hermitian_eig, kron
from .states import DensityMatrix, FamilyCoeffs, partial_transpose

ATOM_COUNT = 2

# |<S>| at or below this is treated as a vanishing mean spin.
MEAN_SPIN_FLOOR = 1e-8

# A partial-transpose eigenvalue below this certifies entanglement; values
# above it count as numerical noise around zero.
PPT_EIGENVALUE_FLOOR = -1e-12

PERP_OPTIMAL = "perp-optimal"
GLOBAL = "global"

_GLOBAL_GRID = 10_000
_REFINE_ROUNDS = 30
_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0

_PAULI_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
_PAULI_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
_PAULI_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)
_I2 = np.eye(2, dtype=complex)


class CollectiveSpin(NamedTuple):
    """Collective spin components S_k = (sigma_k x 1 + 1 x sigma_k)/2."""

    sx: np.ndarray
    sy: np.ndarray
    sz: np.ndarray


def _collective_component(pauli: np.ndarray) -> np.ndarray:
    op = 0.5 * (kron(pauli, _I2) + kron(_I2, pauli))
    op.setflags(write=False)
    return op


_SPIN = CollectiveSpin(
    _collective_component(_PAULI_X),
    _collective_component(_PAULI_Y),
    _collective_component(_PAULI_Z),
)

# Symmetrized second-moment operators (S_j S_k + S_k S_j)/2.
_SECOND = [
    [0.5 * (_SPIN[j] @ _SPIN[k] + _SPIN[k] @ _SPIN[j]) for k in range(3)]
    for j in range(3)
]
for _row in _SECOND:
    for _op in _row:
        _op.setflags(write=False)


def collective_spin() -> CollectiveSpin:
    """The three collective spin component matrices (read-only views)."""
    return _SPIN


@dataclass(frozen=True, eq=False)
class SpinFrame:
    """Right-handed orthonormal measurement triad (n1, n2, n3)."""

    n1: np.ndarray
    n2: np.ndarray
    n3: np.ndarray

    def __post_init__(self):
        axes = []
        for name in ("n1", "n2", "n3"):
            axis = np.asarray(getattr(self, name), dtype=float).reshape(3)
            axis.setflags(write=False)
            object.__setattr__(self, name, axis)
            axes.append(axis)
        gram = np.array([[a @ b for b in axes] for a in axes])
        if float(np.abs(gram - np.eye(3)).max()) > 1e-10:
            raise ValueError("frame axes are not orthonormal within 1e-10")

    @classmethod
    def canonical(cls) -> "SpinFrame":
        return cls(np.eye(3)[0], np.eye(3)[1], np.eye(3)[2])


@dataclass(frozen=True, eq=False)
class SpinMoments:
    """First and symmetrized second moments of the collective spin."""

    mean: np.ndarray
    second: np.ndarray

    def covariance(self) -> np.ndarray:
        return self.second - np.outer(self.mean, self.mean)


@dataclass(frozen=True, eq=False)
class XiResult:
    """Squeezing parameter value, the frame realizing it, and the verdict."""

    value: float
    frame: SpinFrame
    entangled_flag: bool


def _real_trace(rho_mat: np.ndarray, op: np.ndarray) -> float:
    value = np.trace(rho_mat @ op)
    if abs(value.imag) > 1e-10:
        raise ValueError(f"moment has imaginary residue {value.imag:.3e}")
    return float(value.real)


def spin_moments(rho: DensityMatrix) -> SpinMoments:
    """Mean vector tr(rho S_k) and symmetrized second-moment matrix."""
    if tuple(rho.dims) != (2, 2):
        raise DimensionMismatchError(f"expected a two-qubit state, got dims {rho.dims}")
    mean = np.array([_real_trace(rho.mat, _SPIN[k]) for k in range(3)])
    second = np.empty((3, 3))
    for j in range(3):
        for k in range(j, 3):
            second[j, k] = second[k, j] = _real_trace(rho.mat, _SECOND[j][k])
    return SpinMoments(mean, second)


def xi_squared_in_frame(rho: DensityMatrix, frame: SpinFrame) -> float:
    """Squeezing quotient N var(S_n1) / (<S_n2>^2 + <S_n3>^2) in a fixed triad."""
    moments = spin_moments(rho)
    variance = float(frame.n1 @ moments.second @ frame.n1) - float(
        frame.n1 @ moments.mean
    ) ** 2
    denom = float(frame.n2 @ moments.mean) ** 2 + float(frame.n3 @ moments.mean) ** 2
    if denom <= MEAN_SPIN_FLOOR**2:
        raise ZeroMeanSpinError(
            f"mean spin projection on the (n2, n3) plane is {math.sqrt(denom):.3e}"
        )
    return ATOM_COUNT * variance / denom


def _plane_basis(mhat: np.ndarray):
    seed = np.zeros(3)
    seed[int(np.argmin(np.abs(mhat)))] = 1.0
    u = seed - (seed @ mhat) * mhat
    u /= np.linalg.norm(u)
    v = np.cross(mhat, u)
    return u, v


def _frame_about(n1: np.ndarray, mean: np.ndarray) -> SpinFrame:
    proj = mean - (mean @ n1) * n1
    n2 = proj / np.linalg.norm(proj)
    return SpinFrame(n1, n2, np.cross(n1, n2))


def _golden_section(fun, a: float, b: float, iterations: int = 10) -> float:
    c = b - _GOLDEN * (b - a)
    d = a + _GOLDEN * (b - a)
    fc, fd = fun(c), fun(d)
    for _ in range(iterations):
        if fc <= fd:
            b, d, fd = d, c, fc
            c = b - _GOLDEN * (b - a)
            fc = fun(c)
        else:
            a, c, fc = c, d, fd
            d = a + _GOLDEN * (b - a)
            fd = fun(d)
    return 0.5 * (a + b)


def _fibonacci_directions(count: int) -> np.ndarray:
    i = np.arange(count, dtype=float)
    golden_ratio = (1.0 + math.sqrt(5.0)) / 2.0
    z = 1.0 - (2.0 * i + 1.0) / count
    radius = np.sqrt(np.maximum(0.0, 1.0 - z * z))
    phi = (2.0 * math.pi / golden_ratio) * i
    return np.column_stack([radius * np.cos(phi), radius * np.sin(phi), z])


def _sphere_minimum(cov: np.ndarray, mean: np.ndarray, mm: float, baseline):
    """Search the whole direction sphere for the smallest squeezing quotient.

    Deterministic: a Fibonacci lattice seeds golden-section refinement along
    two tangent axes rebuilt around the current direction each round, which
    stays well conditioned near the poles where spherical angles degenerate.
    The analytic in-plane candidate is always kept, so the result can never
    exceed it.
    """

    def quotient(n: np.ndarray) -> float:
        denom = mm - float(n @ mean) ** 2
        if denom <= mm * 1e-12:
            return math.inf
        return ATOM_COUNT * float(n @ cov @ n) / denom

    dirs = _fibonacci_directions(_GLOBAL_GRID)
    numer = ATOM_COUNT * np.einsum("id,de,ie->i", dirs, cov, dirs)
    denom = mm - (dirs @ mean) ** 2
    ok = denom > mm * 1e-12
    values = np.where(ok, numer / np.where(ok, denom, 1.0), np.inf)
    spacing = 2.0 * math.sqrt(math.pi / _GLOBAL_GRID)

    best_dir, best_val = baseline
    seeds = [dirs[i] for i in np.argsort(values)[:3]] + [best_dir]
    for seed in seeds:
        n = np.asarray(seed, dtype=float)
        n = n / np.linalg.norm(n)
        halfwidth = spacing
        for _ in range(_REFINE_ROUNDS):
            axis = np.zeros(3)
            axis[int(np.argmin(np.abs(n)))] = 1.0
            e1 = axis - (axis @ n) * n
            e1 /= np.linalg.norm(e1)
            e2 = np.cross(n, e1)
            for e in (e1, e2):
                def along(t, e=e, n=n):
                    moved = n + t * e
                    return quotient(moved / np.linalg.norm(moved))

                step = _golden_section(along, -halfwidth, halfwidth)
                n = n + step * e
                n /= np.linalg.norm(n)
            halfwidth *= 0.7
        val = quotient(n)
        if val < best_val:
            best_val, best_dir = val, n
    return best_dir, best_val


def xi_squared(rho: DensityMatrix, policy: str = PERP_OPTIMAL) -> XiResult:
    """Frame-optimized squeezing parameter of a two-atom state.

    Parameters
    ----------
    rho:
        Two-qubit state with a nonvanishing mean spin.
    policy:
        "perp-optimal" (default) minimizes the variance over directions
        orthogonal to the mean spin, the standard convention.  "global"
        additionally searches the whole direction sphere and can only be
        lower or equal.

    Returns
    -------
    XiResult
        The minimized quotient, the triad realizing it (n2 along the mean
        spin projection), and the strict value < 1 entanglement flag.

    Raises
    ------
    ZeroMeanSpinError
        If |<S>| <= 1e-8; the quotient is undefined there.
    """
    if policy not in (PERP_OPTIMAL, GLOBAL):
        raise ValueError(f"unknown policy {policy!r}")
    moments = spin_moments(rho)
    mean = moments.mean
    mm = float(mean @ mean)
    if mm <= MEAN_SPIN_FLOOR**2:
        raise ZeroMeanSpinError(
            f"|<S>| = {math.sqrt(mm):.3e} is at or below {MEAN_SPIN_FLOOR:g}"
        )
    cov = moments.covariance()
    cov = 0.5 * (cov + cov.T)

    mhat = mean / math.sqrt(mm)
    u, v = _plane_basis(mhat)
    restricted = np.array(
        [[u @ cov @ u, u @ cov @ v], [v @ cov @ u, v @ cov @ v]]
    )
    restricted = 0.5 * (restricted + restricted.T)
    w, vecs = np.linalg.eigh(restricted)
    n1 = vecs[0, 0] * u + vecs[1, 0] * v
    n1 = n1 / np.linalg.norm(n1)
    value = ATOM_COUNT * w[0] / mm

    if policy == GLOBAL:
        n1, value = _sphere_minimum(cov, mean, mm, baseline=(n1, value))

    value = max(0.0, float(value))
    frame = _frame_about(n1, mean)
    return XiResult(value, frame, bool(value < 1.0))


def xi2_closed_n1(theta: float) -> float:
    """Squeezing parameter (1 + sin^2 theta)/cos^4 theta of the one-photon scan.

    Returns math.inf at the singular points cos(theta) = 0 instead of
    raising.
    """
    c = math.cos(theta)
    if abs(c) < 1e-12:
        return math.inf
    s = math.sin(theta)
    return (1.0 + s * s) / (c * c * c * c)


def negativity(rho: DensityMatrix) -> float:
    """Sum of the magnitudes of the negative partial-transpose eigenvalues."""
    values, _ = hermitian_eig(partial_transpose(rho, sub=1))
    return float(np.sum(np.maximum(0.0, -values)))


def ppt_entangled(rho: DensityMatrix) -> bool:
    """Partial-transpose verdict; exact for a pair of qubits.

    True when the minimum partial-transpose eigenvalue falls below the
    certification floor, i.e. the state is certainly entangled.
    """
    if tuple(rho.dims) != (2, 2):
        raise DimensionMismatchError(
            f"the two-sided verdict needs a 2x2 bipartition, got dims {rho.dims}"
        )
    values, _ = hermitian_eig(partial_transpose(rho, sub=1))
    return bool(values[0] < PPT_EIGENVALUE_FLOOR)


def diagonal_family_entangled(c: FamilyCoeffs) -> bool:
    """Closed-form partial-transpose verdict for coherence-free family states.

    The partial transpose couples only the corner block
    [[x1, x2/2], [x2/2, x3]]; its smaller eigenvalue is negative exactly when
    x2 > 2*sqrt(x1*x3).  The same certification floor as ppt_entangled keeps
    the two routes aligned at machine precision.
    """
    if complex(c.y) != 0:
        raise NonDiagonalError(f"family coherence y = {c.y} must be exactly zero")
    half_sum = 0.5 * (c.x1 + c.x3)
    radius = math.hypot(0.5 * (c.x1 - c.x3), 0.5 * c.x2)
    return (half_sum - radius) < PPT_EIGENVALUE_FLOOR


def _require_real_y(c: FamilyCoeffs) -> float:
    y = complex(c.y)
    if y.imag != 0.0:
        raise NonRealError(f"coherence y = {y} must be real here")
    return y.real


def xi2_family(c: FamilyCoeffs) -> float:
    """Fixed-frame squeezing parameter (2y + 2 - <Sz^2>)/<Sz>^2 of a real-y family.

    Equals the generic quotient evaluated in the canonical (x, y, z) triad.
    """
    y = _require_real_y(c)
    mean_z = c.x1 - c.x3
    if abs(mean_z) <= MEAN_SPIN_FLOOR:
        raise ZeroMeanSpinError(f"<Sz> = {mean_z:.3e} is at or below {MEAN_SPIN_FLOOR:g}")
    second_z = c.x1 + c.x3
    return (2.0 * y + 2.0 - second_z) / (mean_z * mean_z)


def family_squeezing_condition(c: FamilyCoeffs) -> bool:
    """Strict inequality <Sz^2> + <Sz>^2 > 2 + 2y marking squeezing in a family."""
    y = _require_real_y(c)
    mean_z = c.x1 - c.x3
    second_z = c.x1 + c.x3
    return second_z + mean_z * mean_z > 2.0 + 2.0 * y
