from .data_objects import (
    DEFAULT_TOLERANCE,
    PRUNE_THRESHOLD,
    FockVector,
    SingleParticleVector,
    Statistics,
    Symmetry,
    TwoParticleState,
)
from .fock_space import (
    annihilate,
    create,
    enumerate_sector,
    inner_product,
    number_operator,
    vacuum,
)
from .operators import apply, expectation, normal_order, parse
from .separability import (
    ModeBipartition,
    SeparabilityVerdict,
    classify_monomial,
    coefficient_matrix,
    correlation_oracle,
    mode_separability_rank,
    vacuum_block_projector,
)
from .gmw import (
    Classification,
    Verdict,
    classify,
    find_properties,
    pair_property_projector,
    property_holds,
)
from .bridge import (
    cross_check,
    distinguished_bipartition,
    first_to_second,
    rotate_modes,
    second_to_first,
)
from .data_generator import generate_random

__all__ = [
    "DEFAULT_TOLERANCE",
    "PRUNE_THRESHOLD",
    "FockVector",
    "SingleParticleVector",
    "Statistics",
    "Symmetry",
    "TwoParticleState",
    "annihilate",
    "create",
    "enumerate_sector",
    "inner_product",
    "number_operator",
    "vacuum",
    "apply",
    "expectation",
    "normal_order",
    "parse",
    "ModeBipartition",
    "SeparabilityVerdict",
    "classify_monomial",
    "coefficient_matrix",
    "correlation_oracle",
    "mode_separability_rank",
    "vacuum_block_projector",
    "Classification",
    "Verdict",
    "classify",
    "find_properties",
    "pair_property_projector",
    "property_holds",
    "cross_check",
    "distinguished_bipartition",
    "first_to_second",
    "rotate_modes",
    "second_to_first",
    "generate_random",
]
