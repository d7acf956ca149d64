"""Two-atom cavity dynamics with spin-squeezing and PPT entanglement diagnostics.

The package follows one resonant field mode exchanging excitation with a pair
of two-level atoms, evolves the atomic pair exactly, and asks two different
questions about the reduced two-atom state: does a collective-spin squeezing
parameter drop below one, and does the partial transpose go negative?  The
closed-form coefficient family makes the comparison cheap enough to sweep.
"""

from .criteria import (
    GLOBAL,
    PERP_OPTIMAL,
    CollectiveSpin,
    SpinFrame,
    SpinMoments,
    XiResult,
    collective_spin,
    diagonal_family_entangled,
    family_squeezing_condition,
    negativity,
    ppt_entangled,
    spin_moments,
    xi2_closed_n1,
    xi2_family,
    xi_squared,
    xi_squared_in_frame,
)
from .dynamics import (
    ModelConfig,
    annihilation,
    build_hamiltonian,
    closed_form_coeffs,
    evolve_exact,
    rabi_frequency,
)
from .errors import (
    BadPhotonNumberError,
    BadSubsystemError,
    DimensionMismatchError,
    NoConvergenceError,
    NonDiagonalError,
    NonRealError,
    NotHermitianError,
    NotNormalizedError,
    NotPositiveError,
    StateFormatError,
    ZeroMeanSpinError,
)
from .linalg import EigenDecomposition, evolution_operator, hermitian_eig, kron
from .states import (
    SYMMETRIC_BASIS,
    DensityMatrix,
    FamilyCoeffs,
    density_from_pure,
    family_coeffs_from_density,
    family_density,
    load_density_matrix,
    partial_trace,
    partial_transpose,
)

__version__ = "0.1.0"

__all__ = [
    "BadPhotonNumberError",
    "BadSubsystemError",
    "CollectiveSpin",
    "DensityMatrix",
    "DimensionMismatchError",
    "EigenDecomposition",
    "FamilyCoeffs",
    "GLOBAL",
    "ModelConfig",
    "NoConvergenceError",
    "NonDiagonalError",
    "NonRealError",
    "NotHermitianError",
    "NotNormalizedError",
    "NotPositiveError",
    "PERP_OPTIMAL",
    "SYMMETRIC_BASIS",
    "SpinFrame",
    "SpinMoments",
    "StateFormatError",
    "XiResult",
    "ZeroMeanSpinError",
    "annihilation",
    "build_hamiltonian",
    "closed_form_coeffs",
    "collective_spin",
    "density_from_pure",
    "diagonal_family_entangled",
    "evolution_operator",
    "evolve_exact",
    "family_coeffs_from_density",
    "family_density",
    "family_squeezing_condition",
    "hermitian_eig",
    "kron",
    "load_density_matrix",
    "negativity",
    "partial_trace",
    "partial_transpose",
    "ppt_entangled",
    "rabi_frequency",
    "spin_moments",
    "xi2_closed_n1",
    "xi2_family",
    "xi_squared",
    "xi_squared_in_frame",
    "__version__",
]
