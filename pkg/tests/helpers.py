"""Random-instance generators and shared property suites.

Unit tests run each suite at a moderate count; the acceptance gate reruns
every suite at 500+ instances.  All randomness flows through an explicit
numpy Generator so failures replay exactly.
"""

import math

import numpy as np

import cavsqueeze as cs
from cavsqueeze.criteria import spin_moments

_PAULIS = (
    np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex),
    np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex),
    np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex),
)


def random_hermitian(rng, dim, scale=1.0):
    z = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    return scale * 0.5 * (z + z.conj().T)


def random_unitary(rng, dim):
    z = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    q, r = np.linalg.qr(z)
    d = np.diagonal(r)
    return q * (d / np.abs(d))


def random_density(rng, dims=(2, 2)):
    total = math.prod(dims)
    z = rng.normal(size=(total, total)) + 1j * rng.normal(size=(total, total))
    mat = z @ z.conj().T
    mat /= mat.trace().real
    return cs.DensityMatrix(mat, tuple(dims))


def random_pure_density(rng, dims=(2, 2)):
    total = math.prod(dims)
    psi = rng.normal(size=total) + 1j * rng.normal(size=total)
    psi /= np.linalg.norm(psi)
    return cs.density_from_pure(psi, dims)


def _random_qubit(rng):
    z = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    mat = z @ z.conj().T
    return mat / mat.trace().real


def random_separable(rng, terms=4):
    """Convex mixture of product states; PPT holds exactly for these."""
    weights = rng.dirichlet(np.ones(terms))
    mat = np.zeros((4, 4), dtype=complex)
    for w in weights:
        mat += w * np.kron(_random_qubit(rng), _random_qubit(rng))
    return cs.DensityMatrix(mat, (2, 2))


def random_family_coeffs(rng, real_y=True, min_mean_gap=0.0, allow_coherence=True):
    while True:
        x1, x2, x3 = (float(v) for v in rng.dirichlet((1.0, 1.0, 1.0)))
        if abs(x1 - x3) >= min_mean_gap:
            break
    if not allow_coherence:
        return cs.FamilyCoeffs(x1, x2, x3)
    bound = math.sqrt(x1 * x3)
    if real_y:
        return cs.FamilyCoeffs(x1, x2, x3, complex(rng.uniform(-bound, bound), 0.0))
    radius = bound * math.sqrt(rng.uniform())
    angle = rng.uniform(0.0, 2.0 * math.pi)
    return cs.FamilyCoeffs(x1, x2, x3, radius * complex(math.cos(angle), math.sin(angle)))


def rotation_from_su2(u):
    """SO(3) image of a qubit unitary: u^dag sigma_j u = sum_k R[j,k] sigma_k."""
    rot = np.empty((3, 3))
    for j in range(3):
        moved = u.conj().T @ _PAULIS[j] @ u
        for k in range(3):
            rot[j, k] = 0.5 * np.trace(moved @ _PAULIS[k]).real
    return rot


def random_frame(rng):
    q, r = np.linalg.qr(rng.normal(size=(3, 3)))
    q = q * np.sign(np.diagonal(r))
    if np.linalg.det(q) < 0:
        q[:, 2] = -q[:, 2]
    return cs.SpinFrame(q[:, 0], q[:, 1], q[:, 2])


def reference_global_minimum(rho):
    """Exact whole-sphere squeezing minimum via the reduced quadratic form.

    Writing the search direction as a component along the mean spin plus an
    in-plane part and eliminating the parallel component analytically turns
    the quotient into an eigenvalue problem on the plane; no search involved,
    so this is an independent oracle for the lattice-plus-refinement route.
    """
    moments = spin_moments(rho)
    mean = moments.mean
    mm = float(mean @ mean)
    if mm <= 1e-16:
        raise cs.ZeroMeanSpinError("mean spin vanishes")
    cov = moments.covariance()
    cov = 0.5 * (cov + cov.T)
    mhat = mean / math.sqrt(mm)
    seed = np.zeros(3)
    seed[int(np.argmin(np.abs(mhat)))] = 1.0
    u = seed - (seed @ mhat) * mhat
    u /= np.linalg.norm(u)
    v = np.cross(mhat, u)
    plane = np.column_stack([u, v])
    reduced = plane.T @ cov @ plane
    coupling = plane.T @ (cov @ mhat)
    parallel = float(mhat @ cov @ mhat)
    if parallel > 1e-14:
        reduced = reduced - np.outer(coupling, coupling) / parallel
    smallest = float(np.linalg.eigvalsh(0.5 * (reduced + reduced.T))[0])
    return max(2.0 * smallest / mm, 0.0)


# ---------------------------------------------------------------------------
# Property suites.  Each asserts its invariants over `count` random instances.


def check_eigensolver_invariants(rng, count):
    for _ in range(count):
        dim = int(rng.integers(1, 13))
        h = random_hermitian(rng, dim, scale=float(rng.uniform(0.1, 10.0)))
        values, vectors = cs.hermitian_eig(h)
        assert np.all(np.diff(values) >= -1e-12), "eigenvalues not ascending"
        gram = vectors.conj().T @ vectors
        assert np.abs(gram - np.eye(dim)).max() < 1e-12, "eigenvectors not orthonormal"
        tol = 1e-12 * max(1.0, float(np.abs(h).max())) * dim
        assert np.abs(h @ vectors - vectors * values).max() < tol, "residual too large"
        rebuilt = (vectors * values) @ vectors.conj().T
        assert np.abs(rebuilt - h).max() < tol, "reconstruction failed"


def check_evolution_group_property(rng, count):
    for _ in range(count):
        dim = int(rng.integers(1, 9))
        h = random_hermitian(rng, dim)
        t1 = float(rng.uniform(-3.0, 3.0))
        t2 = float(rng.uniform(-3.0, 3.0))
        u1 = cs.evolution_operator(h, t1)
        u2 = cs.evolution_operator(h, t2)
        both = cs.evolution_operator(h, t1 + t2)
        eye = np.eye(dim)
        assert np.abs(u1.conj().T @ u1 - eye).max() < 1e-12, "not unitary"
        assert np.abs(u1 @ u2 - both).max() < 1e-11, "composition broke"
        assert np.abs(cs.evolution_operator(h, 0.0) - eye).max() < 1e-12
        assert np.abs(cs.evolution_operator(h, -t1) - u1.conj().T).max() < 1e-11


def check_pt_involution(rng, count):
    for i in range(count):
        dims = (2, 2) if i % 2 == 0 else (2, 3)
        rho = random_density(rng, dims)
        pt = cs.partial_transpose(rho)
        again = cs.partial_transpose(pt, sub=1, dims=dims)
        assert np.array_equal(again, rho.mat), "double transpose is not identity"
        assert abs(pt.trace() - 1.0) < 1e-12, "trace not preserved"
        assert np.abs(pt - pt.conj().T).max() < 1e-12, "hermiticity not preserved"
        other = cs.partial_transpose(rho, sub=0)
        assert np.array_equal(other, cs.partial_transpose(rho, sub=1).T), (
            "transposing the other factor must equal the full transpose of the first"
        )


def check_separable_psd(rng, count):
    for _ in range(count):
        rho = random_separable(rng, terms=int(rng.integers(1, 6)))
        assert not cs.ppt_entangled(rho), "separable state flagged entangled"
        assert cs.negativity(rho) <= 1e-12, "separable state has negativity"
        try:
            result = cs.xi_squared(rho)
        except cs.ZeroMeanSpinError:
            continue
        assert result.value >= 1.0 - 1e-8, (
            f"separable state squeezed: xi^2 = {result.value}"
        )
        assert not result.entangled_flag or result.value < 1.0


def check_rotation_covariance(rng, count):
    done = 0
    while done < count:
        rho = random_density(rng, (2, 2))
        u = random_unitary(rng, 2)
        rot = rotation_from_su2(u)
        collective = np.kron(u, u)
        rotated = cs.DensityMatrix(collective @ rho.mat @ collective.conj().T, (2, 2))
        before = spin_moments(rho)
        after = spin_moments(rotated)
        assert np.abs(after.mean - rot @ before.mean).max() < 1e-12
        assert np.abs(after.second - rot @ before.second @ rot.T).max() < 1e-12
        if float(before.mean @ before.mean) < 1e-6:
            continue
        v1 = cs.xi_squared(rho).value
        v2 = cs.xi_squared(rotated).value
        assert abs(v1 - v2) <= 1e-9 * max(1.0, abs(v1)), (
            f"optimized xi^2 not rotation invariant: {v1} vs {v2}"
        )
        done += 1


def check_witness_soundness(rng, count):
    """xi^2 below 1 with margin must imply the exact two-qubit verdict."""
    squeezed = 0
    for i in range(count):
        if i % 2 == 0:
            rho = cs.family_density(random_family_coeffs(rng))
        else:
            rho = random_density(rng, (2, 2))
        try:
            value = cs.xi_squared(rho).value
        except cs.ZeroMeanSpinError:
            continue
        if value < 1.0 - 1e-8:
            squeezed += 1
            assert cs.ppt_entangled(rho), (
                f"squeezed (xi^2 = {value}) but the exact verdict disagrees"
            )
    assert squeezed > 0, "no squeezed instance drawn; the check ran vacuously"
