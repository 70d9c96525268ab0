import math
from typing import Tuple

import numpy as np

from fock_entanglement.data_objects import (
    FockVector,
    SingleParticleVector,
    Statistics,
    Symmetry,
    TwoParticleState,
)
from fock_entanglement.errors import ModeIndexError, SectorError
from fock_entanglement.fock_space import create, vacuum
from fock_entanglement.operators import (
    Annihilate,
    Create,
    OperatorExpr,
    Product,
    Scalar,
    Sum,
    expectation,
)
from fock_entanglement.separability import ModeBipartition


class ModeRotation:
    """
    Passive change of mode basis a^dagger_i -> sum_j U[j, i] a^dagger_j.
    Column i of U holds the new single-particle vector of mode i.
    """

    def __init__(self, matrix, tol: float = 1e-12):
        matrix = np.array(matrix, dtype=complex)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise ValueError(f"Mode rotation must be a square matrix, got shape {matrix.shape}")
        deviation = float(np.max(np.abs(matrix.conj().T @ matrix - np.eye(matrix.shape[0]))))
        if deviation > tol:
            raise ValueError(f"Mode rotation is not unitary (deviation {deviation:.3g})")
        self.matrix = matrix

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @classmethod
    def identity(cls, dim: int) -> "ModeRotation":
        return cls(np.eye(dim, dtype=complex))

    def inverse(self) -> "ModeRotation":
        return ModeRotation(self.matrix.conj().T)

    def __matmul__(self, other: "ModeRotation") -> "ModeRotation":
        return ModeRotation(self.matrix @ other.matrix)

    def __repr__(self):
        return f"ModeRotation(dim={self.dim})"


def _statistics_for(symmetry: Symmetry) -> Statistics:
    if symmetry is Symmetry.SYMMETRIC:
        return Statistics.BOSE
    if symmetry is Symmetry.ANTISYMMETRIC:
        return Statistics.FERMI
    raise ValueError("Distinguishable-particle states have no second-quantized form")


def first_to_second(t: TwoParticleState) -> FockVector:
    """
    Two-particle coefficient matrix to the occupation basis:
    |Psi> = (1/sqrt 2) sum_ij C_ij ad(i) ad(j) |0>, which puts sqrt(2) C_ij on
    |1_i 1_j> (i < j) and C_ii on |2_i>
    """
    statistics = _statistics_for(t.symmetry)
    amplitudes = {}
    m = t.dim
    for i in range(m):
        for j in range(i, m):
            if i == j and statistics is Statistics.FERMI:
                continue
            occupation = [0] * m
            occupation[i] += 1
            occupation[j] += 1
            value = t.coefficients[i, j] if i == j else math.sqrt(2) * t.coefficients[i, j]
            if value != 0:
                amplitudes[tuple(occupation)] = value
    return FockVector(statistics, m, amplitudes)


def second_to_first(v: FockVector) -> TwoParticleState:
    """Inverse of first_to_second for states of exactly two particles"""
    if v.particle_numbers() != [2]:
        raise SectorError(
            f"Expected a two-particle state, got particle numbers {v.particle_numbers()}"
        )
    sign = v.statistics.exchange_sign
    coefficients = np.zeros((v.num_modes, v.num_modes), dtype=complex)
    for occupation, amplitude in v.items():
        occupied = [mode for mode, n in enumerate(occupation) for _ in range(n)]
        i, j = occupied
        if i == j:
            coefficients[i, i] = amplitude
        else:
            coefficients[i, j] = amplitude / math.sqrt(2)
            coefficients[j, i] = sign * amplitude / math.sqrt(2)
    symmetry = Symmetry.for_statistics(v.statistics)
    return TwoParticleState(coefficients, symmetry)


def rotate_modes(v: FockVector, rotation: ModeRotation) -> FockVector:
    """
    Substitute ad(i) -> sum_j U[j, i] ad(j) in every basis monomial
    prod_i ad(i)^{n_i} / sqrt(n_i!) |0>. Norm and particle number are preserved;
    on two-particle states this is C -> U C U^T.
    """
    if rotation.dim != v.num_modes:
        raise ModeIndexError(f"Rotation acts on {rotation.dim} modes, the state has {v.num_modes}")
    result = v.zero()
    for occupation, amplitude in v.items():
        state = vacuum(v.num_modes, v.statistics)
        # rightmost creator (highest mode) acts first
        for index in reversed(range(v.num_modes)):
            for _ in range(occupation[index]):
                rotated = state.zero()
                for target in range(v.num_modes):
                    weight = rotation.matrix[target, index]
                    if weight != 0:
                        rotated = rotated + create(target + 1, state) * weight
                state = rotated
        normalization = math.sqrt(math.prod(math.factorial(n) for n in occupation))
        result = result + state * (amplitude / normalization)
    return result


def rotate_state(t: TwoParticleState, rotation: ModeRotation) -> TwoParticleState:
    """First-quantized counterpart of rotate_modes: C -> U C U^T"""
    u = rotation.matrix
    return TwoParticleState(u @ t.coefficients @ u.T, t.symmetry)


def complete_basis(vectors: np.ndarray) -> np.ndarray:
    """
    Extend orthonormal columns to a unitary by Gram-Schmidt over the standard basis,
    trying the unit vectors in ascending order while skipping the largest-magnitude
    component of the first column
    """
    dim = vectors.shape[0]
    columns = [vectors[:, i] for i in range(vectors.shape[1])]
    skip = int(np.argmax(np.abs(vectors[:, 0])))
    seeds = [k for k in range(dim) if k != skip] + [skip]
    for k in seeds:
        if len(columns) == dim:
            break
        candidate = np.zeros(dim, dtype=complex)
        candidate[k] = 1.0
        for column in columns:
            candidate = candidate - np.vdot(column, candidate) * column
        norm = np.linalg.norm(candidate)
        if norm > 1e-8:
            columns.append(candidate / norm)
    return np.column_stack(columns)


def distinguished_bipartition(phi0: SingleParticleVector) -> Tuple[ModeRotation, ModeBipartition]:
    """
    Rotation whose first column is phi0 and the bipartition {1} | {2..M}.
    rotate_modes(v, rotation.inverse()) moves phi0 to mode 1.
    """
    if phi0.norm() == 0:
        raise ValueError("Cannot build a mode basis around the zero vector")
    if phi0.dim < 2:
        raise ModeIndexError("A bipartition needs at least two modes")
    first = phi0.normalized().components.reshape(-1, 1)
    rotation = ModeRotation(complete_basis(first), tol=1e-10)
    return rotation, ModeBipartition.from_block((1,), phi0.dim)


def slater_basis(t: TwoParticleState, tol: float = 1e-9) -> ModeRotation:
    """
    Unitary W whose columns pair up as (f1, f2), (f3, f4), ... with C conj(f_{2k-1})
    proportional to f_{2k}. In this basis an antisymmetric state reads
    sum_k z_k ad(2k-1) ad(2k) |0>.
    """
    if t.symmetry is not Symmetry.ANTISYMMETRIC:
        raise ValueError("Slater basis is defined for antisymmetric states")
    c = t.coefficients
    u, s, _ = np.linalg.svd(c)
    columns = []
    for index in range(len(s)):
        if s[index] <= tol * s[0]:
            break
        candidate = u[:, index]
        for column in columns:
            candidate = candidate - np.vdot(column, candidate) * column
        norm = np.linalg.norm(candidate)
        if norm < 1e-8:
            continue
        first = candidate / norm
        image = c @ first.conj()
        for column in columns:
            image = image - np.vdot(column, image) * column
        image_norm = np.linalg.norm(image)
        if image_norm <= tol * s[0]:
            continue
        columns.extend([first, image / image_norm])
    if not columns:
        return ModeRotation.identity(t.dim)
    return ModeRotation(complete_basis(np.column_stack(columns)), tol=1e-10)


def number_operator_along(phi: SingleParticleVector) -> OperatorExpr:
    """N_phi = ad(phi) a(phi) = sum_ij phi_i conj(phi_j) ad(i) a(j)"""
    terms = []
    for i, phi_i in enumerate(phi.components, start=1):
        for j, phi_j in enumerate(phi.components, start=1):
            weight = phi_i * np.conj(phi_j)
            if weight != 0:
                terms.append(Product((Scalar(weight), Create(i), Annihilate(j))))
    return Sum(tuple(terms))


def second_quantized_property_projector(phi: SingleParticleVector) -> OperatorExpr:
    """
    E_P on the two-particle sector as a mode expression: 1/2 N_phi (3 - N_phi).
    For phi = e_1 this is 0.5*ad(1)*a(1)*(3 - ad(1)*a(1)).
    """
    if not phi.is_unit():
        raise ValueError(f"Property vector must be a unit vector, got norm {phi.norm():.6g}")
    occupation = number_operator_along(phi)
    return Product(
        (Scalar(0.5), occupation, Sum((Scalar(3.0), Product((Scalar(-1.0), occupation)))))
    )


def property_expectation_second_quantized(t: TwoParticleState, phi: SingleParticleVector) -> float:
    """<Psi|E_P|Psi> evaluated on the occupation-basis form of t"""
    v = first_to_second(t.normalized())
    return float(expectation(second_quantized_property_projector(phi), v).real)
