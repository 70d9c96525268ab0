import logging
from typing import List, Optional

import numpy as np

from fock_entanglement.data_objects import DEFAULT_TOLERANCE, FockVector
from fock_entanglement.errors import BudgetExceededError
from fock_entanglement.fock_space import apply_word
from fock_entanglement.operators import adjoint_word, monomials
from fock_entanglement.separability.base_decider import BaseDecider
from fock_entanglement.separability.bipartition import (
    ModeBipartition,
    classify_monomial,
    is_admissible_pair,
)
from fock_entanglement.separability.mode_separability import (
    check_block_parity,
    coefficient_matrix,
    leading_certificate,
    mode_separability_rank,
)
from fock_entanglement.separability.verdict import SeparabilityVerdict, Witness

logger = logging.getLogger("fock-entanglement")

DEFAULT_MAX_DEGREE = 4
DEFAULT_MAX_PAIRS = 2_000_000


def _dense(vectors: List[FockVector], index: dict) -> np.ndarray:
    columns = np.zeros((len(index), len(vectors)), dtype=complex)
    for j, vector in enumerate(vectors):
        for occupation, amplitude in vector.items():
            columns[index[occupation], j] = amplitude
    return columns


def _admissible_mask(first_monomials, second_monomials, bipartition, statistics) -> np.ndarray:
    first_classes = [classify_monomial(term, bipartition, statistics) for term in first_monomials]
    second_classes = [classify_monomial(term, bipartition, statistics) for term in second_monomials]
    mask = np.zeros((len(first_classes), len(second_classes)), dtype=bool)
    for first_class in set(first_classes):
        rows = np.array([c == first_class for c in first_classes])
        for second_class in set(second_classes):
            if is_admissible_pair(first_class, second_class, statistics):
                columns = np.array([c == second_class for c in second_classes])
                mask[np.ix_(rows, columns)] = True
    return mask


def search_witness(
    v: FockVector,
    bipartition: ModeBipartition,
    max_degree: int = DEFAULT_MAX_DEGREE,
    tol: float = DEFAULT_TOLERANCE,
    max_pairs: int = DEFAULT_MAX_PAIRS,
) -> Optional[Witness]:
    """
    First local monomial pair (A1, A2), in order of total degree then lexicographic,
    with |<A1 A2> - <A1><A2>| > tol. None if every pair factorizes.

    All pairs are evaluated at once: with X the columns A1^dagger v and Y the columns
    A2 v, the joint expectations are X^H Y and the products are outer(X^H v, v^H Y).
    """
    statistics = v.statistics
    first_monomials = monomials(bipartition.block1, statistics, max_degree)
    second_monomials = monomials(bipartition.block2, statistics, max_degree)
    first_degrees = np.array([term.degree for term in first_monomials])
    second_degrees = np.array([term.degree for term in second_monomials])

    admissible = _admissible_mask(first_monomials, second_monomials, bipartition, statistics)
    pair_count = int(admissible.sum())
    if pair_count > max_pairs:
        raise BudgetExceededError(
            f"{pair_count} monomial pairs at degree {max_degree} exceed the budget of {max_pairs}"
        )
    if pair_count > 0.8 * max_pairs:
        logger.warning(f"Correlation oracle uses {pair_count} of {max_pairs} allowed pairs")
    logger.debug(
        f"Correlation oracle: {len(first_monomials)} x {len(second_monomials)} monomials, "
        f"{pair_count} admissible pairs"
    )

    lowered = [apply_word(adjoint_word(term.word), v) for term in first_monomials]
    raised = [apply_word(term.word, v) for term in second_monomials]
    occupations = set(v.amplitudes)
    for vector in lowered + raised:
        occupations.update(vector.amplitudes)
    index = {occupation: i for i, occupation in enumerate(sorted(occupations))}

    psi = _dense([v], index)[:, 0]
    x = _dense(lowered, index)
    y = _dense(raised, index)
    joint = x.conj().T @ y
    first_expectations = x.conj().T @ psi
    second_expectations = psi.conj() @ y
    violation = np.abs(joint - np.outer(first_expectations, second_expectations))

    violating = np.argwhere((violation > tol) & admissible)
    if violating.size == 0:
        return None
    rows, columns = violating[:, 0], violating[:, 1]
    # lexsort: last key is primary
    best = np.lexsort((columns, rows, first_degrees[rows] + second_degrees[columns]))[0]
    i, j = int(rows[best]), int(columns[best])
    witness = Witness(
        first=first_monomials[i],
        second=second_monomials[j],
        joint=complex(joint[i, j]),
        first_expectation=complex(first_expectations[i]),
        second_expectation=complex(second_expectations[j]),
    )
    logger.debug(
        f"Witness {witness.first.monomial_string()}, {witness.second.monomial_string()}: "
        f"violation {witness.violation:.3g}"
    )
    return witness


def correlation_oracle(
    v: FockVector,
    bipartition: ModeBipartition,
    max_degree: int = DEFAULT_MAX_DEGREE,
    tol: float = DEFAULT_TOLERANCE,
    max_pairs: int = DEFAULT_MAX_PAIRS,
) -> SeparabilityVerdict:
    """
    Decide separability by testing <A1 A2> = <A1><A2> on every local monomial pair
    of degree up to max_degree on each side. Sound for entanglement; for N-particle
    states it is complete once max_degree >= 2N.
    :param v: normalized state
    :param bipartition: the mode split
    :param max_degree: largest degree of A1 and of A2 (at least 2)
    :param tol: absolute tolerance on the factorization defect
    :param max_pairs: raise BudgetExceededError above this many pairs
    :return: entangled verdict with the first violating pair, or separable verdict
    whose certificate is the leading factorization of the coefficient matrix (None
    when that factorization does not reproduce v, i.e. max_degree was too low)
    """
    if max_degree < 2:
        raise ValueError(f"max_degree must be at least 2, got {max_degree}")
    if tol <= 0:
        raise ValueError(f"Tolerance must be positive, got {tol}")
    bipartition.check_modes(v.num_modes)
    check_block_parity(v, bipartition)
    witness = search_witness(v, bipartition, max_degree=max_degree, tol=tol, max_pairs=max_pairs)
    if witness is not None:
        return SeparabilityVerdict(False, witness=witness, decider="oracle")
    certificate = leading_certificate(coefficient_matrix(v, bipartition))
    if abs(1 - certificate.fidelity(v)) > tol:
        logger.warning(
            f"No violating pair up to degree {max_degree}, but the coefficient matrix is not rank one; "
            f"raise max_degree to at least {2 * max(v.particle_numbers())}"
        )
        certificate = None
    return SeparabilityVerdict(True, certificate=certificate, decider="oracle")


class RankDecider(BaseDecider):
    """Coefficient-matrix rank test"""

    def decide(self, v: FockVector, bipartition: ModeBipartition) -> SeparabilityVerdict:
        return self.report(mode_separability_rank(v, bipartition, tol=self.tol), bipartition)


class CorrelationOracleDecider(BaseDecider):
    """Local-monomial factorization search"""

    def __init__(
        self,
        max_degree: int = DEFAULT_MAX_DEGREE,
        max_pairs: int = DEFAULT_MAX_PAIRS,
        tol: float = DEFAULT_TOLERANCE,
        verbose: bool = False,
    ):
        super().__init__(tol=tol, verbose=verbose)
        self.max_degree = max_degree
        self.max_pairs = max_pairs

    def decide(self, v: FockVector, bipartition: ModeBipartition) -> SeparabilityVerdict:
        verdict = correlation_oracle(
            v, bipartition, max_degree=self.max_degree, tol=self.tol, max_pairs=self.max_pairs
        )
        return self.report(verdict, bipartition)
