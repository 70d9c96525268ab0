from .bipartition import (
    Block,
    LocalityClass,
    ModeBipartition,
    Parity,
    classify_monomial,
    is_admissible_pair,
)
from .verdict import Certificate, SeparabilityVerdict, Witness
from .mode_separability import (
    CoefficientMatrix,
    TransferOperator,
    VacuumBlockProjector,
    block_polynomial,
    check_block_parity,
    coefficient_matrix,
    leading_certificate,
    mode_separability_rank,
    rank_factorization,
    transfer_expectation_formula,
    vacuum_block_projector,
)
from .base_decider import BaseDecider
from .correlation_oracle import (
    DEFAULT_MAX_DEGREE,
    DEFAULT_MAX_PAIRS,
    CorrelationOracleDecider,
    RankDecider,
    correlation_oracle,
    search_witness,
)
from .comparison import DeciderComparison, DeciderOutcome

__all__ = [
    "Block",
    "LocalityClass",
    "ModeBipartition",
    "Parity",
    "classify_monomial",
    "is_admissible_pair",
    "Certificate",
    "SeparabilityVerdict",
    "Witness",
    "CoefficientMatrix",
    "TransferOperator",
    "VacuumBlockProjector",
    "block_polynomial",
    "check_block_parity",
    "coefficient_matrix",
    "leading_certificate",
    "mode_separability_rank",
    "rank_factorization",
    "transfer_expectation_formula",
    "vacuum_block_projector",
    "BaseDecider",
    "DEFAULT_MAX_DEGREE",
    "DEFAULT_MAX_PAIRS",
    "CorrelationOracleDecider",
    "RankDecider",
    "correlation_oracle",
    "search_witness",
    "DeciderComparison",
    "DeciderOutcome",
]
