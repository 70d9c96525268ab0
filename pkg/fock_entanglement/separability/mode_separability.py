import logging
import math
from dataclasses import dataclass
from typing import List, Union

import numpy as np

from fock_entanglement.data_objects import (
    DEFAULT_TOLERANCE,
    FockVector,
    Occupation,
    Statistics,
)
from fock_entanglement.errors import FermiParityIndefiniteError
from fock_entanglement.fock_space import apply_word, enumerate_sector
from fock_entanglement.operators import NormalForm, NormalTerm, adjoint_word
from fock_entanglement.separability.bipartition import Block, ModeBipartition
from fock_entanglement.separability.verdict import Certificate, SeparabilityVerdict

logger = logging.getLogger("fock-entanglement")


@dataclass(frozen=True)
class CoefficientMatrix:
    """
    Amplitudes of a state in the block-factorized basis:
    v = sum_{k, alpha} C[k, alpha] B1(k) B2(alpha) |0>, where B1(k) creates the
    normalized block-1 occupation k and B2(alpha) the block-2 occupation alpha.
    """

    matrix: np.ndarray
    row_labels: List[Occupation]
    column_labels: List[Occupation]
    bipartition: ModeBipartition
    statistics: Statistics

    def entry(self, row: Occupation, column: Occupation) -> complex:
        return complex(
            self.matrix[self.row_labels.index(tuple(row)), self.column_labels.index(tuple(column))]
        )

    def reconstruct(self) -> FockVector:
        """Map the matrix back to the ascending-mode occupation basis"""
        amplitudes = {}
        for i, row in enumerate(self.row_labels):
            for j, column in enumerate(self.column_labels):
                value = self.matrix[i, j]
                if value == 0:
                    continue
                occupation = self.bipartition.join(row, column)
                amplitudes[occupation] = value * _block_sign(occupation, self.bipartition, self.statistics)
        return FockVector(self.statistics, self.bipartition.num_modes, amplitudes)


def _block_sign(occupation: Occupation, bipartition: ModeBipartition, statistics: Statistics) -> int:
    if statistics is Statistics.BOSE:
        return 1
    return bipartition.reordering_sign(occupation)


def _block_labels(size: int, max_particles: int, statistics: Statistics) -> List[Occupation]:
    if statistics is Statistics.FERMI:
        max_particles = min(max_particles, size)
    labels = []
    for n in range(max_particles + 1):
        labels.extend(enumerate_sector(size, n, statistics))
    return labels


def check_block_parity(v: FockVector, bipartition: ModeBipartition):
    """Fermi states must have a definite particle-number parity on block 1"""
    if v.statistics is not Statistics.FERMI:
        return
    parities = {sum(bipartition.split(occupation)[0]) % 2 for occupation in v.amplitudes}
    if len(parities) > 1:
        raise FermiParityIndefiniteError(
            f"State mixes even and odd particle numbers on block {bipartition.block1}"
        )


def coefficient_matrix(v: FockVector, bipartition: ModeBipartition) -> CoefficientMatrix:
    """
    Coefficient matrix C[k, alpha] of v with respect to a mode bipartition.
    Rows run over block-1 occupations, columns over block-2 occupations, of every
    particle number up to the largest one present, so multi-sector states are covered.
    :param v: the state
    :param bipartition: mode split; must cover exactly the modes of v
    :return: CoefficientMatrix whose Frobenius norm equals the norm of v
    """
    bipartition.check_modes(v.num_modes)
    check_block_parity(v, bipartition)
    max_particles = max(v.particle_numbers(), default=0)
    row_labels = _block_labels(len(bipartition.block1), max_particles, v.statistics)
    column_labels = _block_labels(len(bipartition.block2), max_particles, v.statistics)
    row_index = {label: i for i, label in enumerate(row_labels)}
    column_index = {label: j for j, label in enumerate(column_labels)}

    matrix = np.zeros((len(row_labels), len(column_labels)), dtype=complex)
    for occupation, amplitude in v.items():
        first, second = bipartition.split(occupation)
        sign = _block_sign(occupation, bipartition, v.statistics)
        matrix[row_index[first], column_index[second]] = sign * amplitude
    return CoefficientMatrix(matrix, row_labels, column_labels, bipartition, v.statistics)


def block_polynomial(
    coefficients: np.ndarray, labels: List[Occupation], modes, statistics: Statistics
) -> NormalForm:
    """
    sum_k coefficients[k] B(k) as a creator polynomial, with
    B(k) = prod_i (ad(i))^{k_i} / sqrt(k_i!) over the block modes
    """
    terms = []
    for coefficient, label in zip(coefficients, labels):
        if coefficient == 0:
            continue
        creators = tuple(mode for mode, n in zip(modes, label) for _ in range(n))
        normalization = math.sqrt(math.prod(math.factorial(n) for n in label))
        terms.append(NormalTerm(complex(coefficient) / normalization, creators, ()))
    return NormalForm(statistics, terms)


def _leading_certificate(
    matrix: CoefficientMatrix, u: np.ndarray, s: np.ndarray, vh: np.ndarray
) -> Certificate:
    first = u[:, 0] * s[0]
    second = vh[0, :]
    # pivot the block-1 factor to 1 so that simple states print as bare monomials
    pivot = first[int(np.argmax(np.abs(first)))]
    first = first / pivot
    second = second * pivot
    bipartition = matrix.bipartition
    return Certificate(
        block_polynomial(first, matrix.row_labels, bipartition.block1, matrix.statistics),
        block_polynomial(second, matrix.column_labels, bipartition.block2, matrix.statistics),
    )


def leading_certificate(matrix: CoefficientMatrix) -> Certificate:
    """Certificate built from the leading singular pair of C, whatever its rank"""
    u, s, vh = np.linalg.svd(matrix.matrix)
    if s.size == 0 or s[0] == 0:
        raise ValueError("Cannot factorize the zero vector")
    return _leading_certificate(matrix, u, s, vh)


def rank_factorization(matrix: CoefficientMatrix, tol: float = DEFAULT_TOLERANCE):
    """
    Singular values of C and, when C has numerical rank one, the certificate (P, Q)
    :return: (singular values, Certificate or None)
    """
    if tol <= 0:
        raise ValueError(f"Tolerance must be positive, got {tol}")
    u, s, vh = np.linalg.svd(matrix.matrix)
    if s.size == 0 or s[0] == 0:
        raise ValueError("Cannot decide separability of the zero vector")
    logger.debug(f"Coefficient matrix singular values: {s[:4]}")
    if s.size > 1 and s[1] > tol * s[0]:
        return s, None
    return s, _leading_certificate(matrix, u, s, vh)


def mode_separability_rank(
    v: FockVector,
    bipartition: ModeBipartition,
    tol: float = DEFAULT_TOLERANCE,
    find_witness: bool = True,
) -> SeparabilityVerdict:
    """
    Decide whether v is separable with respect to the bipartition: true iff the
    coefficient matrix C[k, alpha] has numerical rank one, i.e. v = P Q |0>
    with P a block-1 creator polynomial and Q a block-2 creator polynomial.
    :param v: normalized state
    :param bipartition: the mode split
    :param tol: relative threshold on the second singular value
    :param find_witness: for entangled states, search a factorization-violating monomial pair
    :return: SeparabilityVerdict with certificate (separable) or witness (entangled)
    """
    matrix = coefficient_matrix(v, bipartition)
    singular_values, certificate = rank_factorization(matrix, tol=tol)
    if certificate is not None:
        return SeparabilityVerdict(
            True, certificate=certificate, singular_values=tuple(singular_values), decider="rank"
        )
    witness = None
    if find_witness:
        # imported here: the oracle module builds on this one
        from fock_entanglement.separability.correlation_oracle import search_witness

        witness = search_witness(v, bipartition, max_degree=max(4, 2 * max(v.particle_numbers())), tol=tol)
        if witness is None:
            logger.warning(f"No monomial witness found for an entangled state under {bipartition}")
    return SeparabilityVerdict(
        False, witness=witness, singular_values=tuple(singular_values), decider="rank"
    )


class VacuumBlockProjector:
    """
    Projector onto states with no particle in the given block: keeps the amplitudes
    whose block occupation is zero. Realizes the contour integral
    (1/2 pi i) \\oint dz / (z - N_block) around z = 0.
    """

    def __init__(self, bipartition: ModeBipartition, block: Union[Block, int] = Block.ONE):
        self.bipartition = bipartition
        self.modes = bipartition.modes(block)

    def apply(self, v: FockVector) -> FockVector:
        self.bipartition.check_modes(v.num_modes)
        kept = {
            occupation: amplitude
            for occupation, amplitude in v.items()
            if not any(occupation[mode - 1] for mode in self.modes)
        }
        return FockVector(v.statistics, v.num_modes, kept)

    __call__ = apply


def vacuum_block_projector(
    bipartition: ModeBipartition, block: Union[Block, int] = Block.ONE
) -> VacuumBlockProjector:
    return VacuumBlockProjector(bipartition, block)


class TransferOperator:
    """
    A(target, source) = C(target) Pi_0 C(source)^dagger on one block, where
    C(k) = prod_i (ad(i))^{k_i} (unnormalized) and Pi_0 is the vacuum-block projector.
    On block-factorized states it maps |source; alpha> to
    sqrt(source! target!) |target; alpha>.
    """

    def __init__(
        self,
        bipartition: ModeBipartition,
        block: Union[Block, int],
        target: Occupation,
        source: Occupation,
    ):
        self.bipartition = bipartition
        self.modes = bipartition.modes(block)
        if len(target) != len(self.modes) or len(source) != len(self.modes):
            raise ValueError(
                f"Block occupations must have {len(self.modes)} entries, got {target} and {source}"
            )
        self.target = tuple(target)
        self.source = tuple(source)
        self.projector = VacuumBlockProjector(bipartition, block)

    def _creators(self, occupation: Occupation):
        return tuple((True, mode) for mode, n in zip(self.modes, occupation) for _ in range(n))

    @property
    def weight(self) -> float:
        """prod_i sqrt(source_i! target_i!)"""
        return math.sqrt(
            math.prod(math.factorial(n) for n in self.source + self.target)
        )

    def apply(self, v: FockVector) -> FockVector:
        lowered = apply_word(adjoint_word(self._creators(self.source)), v)
        return apply_word(self._creators(self.target), self.projector.apply(lowered))

    __call__ = apply


def transfer_expectation_formula(
    matrix: CoefficientMatrix, operator: TransferOperator
) -> complex:
    """
    <v|A(target, source)|v> from the coefficient matrix, for block-1 transfer operators:
    sqrt(source! target!) * sum_alpha conj(C[target, alpha]) C[source, alpha]
    """
    target = matrix.row_labels.index(operator.target)
    source = matrix.row_labels.index(operator.source)
    return operator.weight * complex(np.vdot(matrix.matrix[target, :], matrix.matrix[source, :]))
