import logging
from dataclasses import dataclass, field
from typing import List, Optional, Union

import numpy as np

from fock_entanglement.data_objects import (
    DEFAULT_TOLERANCE,
    SingleParticleVector,
    Symmetry,
    TwoParticleState,
)

logger = logging.getLogger("fock-entanglement")


def _check_unit(phi: SingleParticleVector, tol: float = DEFAULT_TOLERANCE):
    if not phi.is_unit(tol):
        raise ValueError(f"Property vector must be a unit vector, got norm {phi.norm():.6g}")


def _check_dims(t: TwoParticleState, phi: SingleParticleVector):
    if phi.dim != t.dim:
        raise ValueError(f"Single-particle dimension {phi.dim} does not match the state's {t.dim}")


def property_holds(
    t: TwoParticleState, phi: SingleParticleVector, tol: float = DEFAULT_TOLERANCE
) -> bool:
    """
    Whether the state possesses the complete set of properties {P, 1 - P} with P = |phi><phi|,
    i.e. E_P Psi = Psi. Equivalent to (Q x Q) Psi = 0 with Q = 1 - P, which in matrix form
    reads Q C Q^T = 0: every coefficient with both indices outside phi vanishes.
    :param t: normalized two-particle state
    :param phi: unit single-particle vector
    :param tol: tolerance on the Frobenius norm of Q C Q^T
    """
    _check_unit(phi)
    _check_dims(t, phi)
    q = np.eye(t.dim, dtype=complex) - phi.projector()
    return float(np.linalg.norm(q @ t.coefficients @ q.T)) <= tol


def property_projector(phi: SingleParticleVector) -> np.ndarray:
    """E_P = P x 1 + 1 x P - P x P on the two-particle space"""
    _check_unit(phi)
    p = phi.projector()
    identity = np.eye(phi.dim, dtype=complex)
    return np.kron(p, identity) + np.kron(identity, p) - np.kron(p, p)


@dataclass
class PairProjector:
    """
    P1 x P2 + P2 x P1; a projection exactly when P1 P2 = 0,
    in which case it coincides with E_{P1} E_{P2}
    """

    matrix: np.ndarray
    is_projection: bool
    equals_product: bool


def pair_property_projector(
    first: SingleParticleVector,
    second: SingleParticleVector,
    tol: float = DEFAULT_TOLERANCE,
) -> PairProjector:
    _check_unit(first)
    _check_unit(second)
    p1 = first.projector()
    p2 = second.projector()
    matrix = np.kron(p1, p2) + np.kron(p2, p1)
    is_projection = abs(first.overlap(second)) <= tol
    product = property_projector(first) @ property_projector(second)
    equals_product = bool(np.allclose(matrix, product, atol=tol, rtol=0))
    return PairProjector(matrix, is_projection, equals_product)


def two_particle_expectation(t: TwoParticleState, operator: np.ndarray) -> complex:
    """<Psi|O|Psi> for an operator on C^M (x) C^M, first tensor factor acting on particle one"""
    vector = t.as_vector()
    operator = np.asarray(operator, dtype=complex)
    if operator.shape != (vector.size, vector.size):
        raise ValueError(f"Operator has shape {operator.shape}, expected ({vector.size}, {vector.size})")
    return complex(np.vdot(vector, operator @ vector))


def cnot_operator() -> np.ndarray:
    """Controlled NOT on C^2 (x) C^2, control on the first particle"""
    return np.array(
        [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]],
        dtype=complex,
    )


def single_particle_property_holds(
    state: Union[SingleParticleVector, np.ndarray],
    phi: SingleParticleVector,
    tol: float = DEFAULT_TOLERANCE,
) -> bool:
    """
    Tr(rho P_phi) = 1 for a single-particle density matrix rho (or pure vector).
    For normalized rho this holds only when rho = P_phi.
    """
    _check_unit(phi)
    if isinstance(state, SingleParticleVector):
        rho = state.projector()
    else:
        rho = np.asarray(state, dtype=complex)
    return abs(np.trace(rho @ phi.projector()) - 1.0) <= tol


@dataclass
class PropertySolutions:
    """
    Admissible property vectors of a two-particle state.
    For antisymmetric states of Slater rank one every unit vector of a two-dimensional
    subspace qualifies; family_basis then holds an orthonormal basis of it and
    vectors holds a representative together with its orthogonal partner.
    """

    vectors: List[SingleParticleVector] = field(default_factory=list)
    family_basis: Optional[List[SingleParticleVector]] = None

    @property
    def is_empty(self) -> bool:
        return not self.vectors

    @property
    def is_family(self) -> bool:
        return self.family_basis is not None

    def __len__(self):
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)


def column_space(t: TwoParticleState, tol: float = DEFAULT_TOLERANCE) -> np.ndarray:
    """Orthonormal basis (as columns) of the range of C"""
    u, s, _ = np.linalg.svd(t.coefficients)
    if s.size == 0 or s[0] == 0:
        return u[:, :0]
    return u[:, : int(np.sum(s > tol * s[0]))]


def _same_ray(first: SingleParticleVector, second: SingleParticleVector, tol: float) -> bool:
    return abs(abs(first.overlap(second)) - 1.0) <= tol


def _symmetric_solutions(basis: np.ndarray, coefficients: np.ndarray) -> List[np.ndarray]:
    """
    Unit phi = basis @ z with Q C Q^T = 0. Writing K = basis^H C conj(basis), the condition
    becomes y^T K y = 0 for y = conj(z_perp): a quadratic in one projective parameter.
    """
    k = basis.conj().T @ coefficients @ basis.conj()
    scale = float(np.max(np.abs(k)))
    roots = []
    if abs(k[1, 1]) > 1e-12 * scale:
        for t in np.roots([k[1, 1], 2 * k[0, 1], k[0, 0]]):
            roots.append(np.array([1.0, t], dtype=complex))
    else:
        roots.append(np.array([0.0, 1.0], dtype=complex))
        if abs(k[0, 1]) > 1e-12 * scale:
            roots.append(np.array([1.0, -k[0, 0] / (2 * k[0, 1])], dtype=complex))
    solutions = []
    for y in roots:
        z_perp = y.conj() / np.linalg.norm(y)
        z = np.array([-z_perp[1].conj(), z_perp[0].conj()])
        solutions.append(basis @ z)
    return solutions


def find_properties(t: TwoParticleState, tol: float = DEFAULT_TOLERANCE) -> PropertySolutions:
    """
    All single-particle vectors phi (up to phase) for which the state possesses
    the complete set of properties {|phi><phi|, 1 - |phi><phi|}.
    Empty when C has rank 3 or more; every returned vector passes property_holds.
    :param t: normalized symmetric or antisymmetric two-particle state
    :param tol: relative rank threshold and acceptance tolerance
    """
    if t.symmetry is Symmetry.NONE:
        raise ValueError("Property attribution is defined for identical particles only")
    basis = column_space(t, tol)
    rank = basis.shape[1]
    logger.debug(f"Coefficient matrix rank {rank}")
    if rank == 0 or rank >= 3:
        return PropertySolutions()

    if rank == 1:
        candidates = [basis[:, 0]]
        family = None
    elif t.symmetry is Symmetry.ANTISYMMETRIC:
        representative = SingleParticleVector(basis[:, 0]).with_phase_convention()
        partner = -np.sqrt(2) * t.coefficients @ representative.components.conj()
        candidates = [representative.components, partner]
        family = [SingleParticleVector(basis[:, i]) for i in range(2)]
    else:
        candidates = _symmetric_solutions(basis, t.coefficients)
        family = None

    solutions: List[SingleParticleVector] = []
    for candidate in candidates:
        phi = SingleParticleVector(candidate).normalized().with_phase_convention()
        if not property_holds(t, phi, tol=tol):
            logger.debug(f"Rejected candidate property {phi}")
            continue
        if any(_same_ray(phi, known, tol) for known in solutions):
            continue
        solutions.append(phi)
    return PropertySolutions(solutions, family if solutions else None)
