from .takagi import nonzero_count, takagi
from .properties import (
    PairProjector,
    PropertySolutions,
    cnot_operator,
    column_space,
    find_properties,
    pair_property_projector,
    property_holds,
    property_projector,
    single_particle_property_holds,
    two_particle_expectation,
)
from .classification import (
    Classification,
    Verdict,
    bose_partner,
    classify,
    classify_by_properties,
    fermi_partner,
)

__all__ = [
    "nonzero_count",
    "takagi",
    "PairProjector",
    "PropertySolutions",
    "cnot_operator",
    "column_space",
    "find_properties",
    "pair_property_projector",
    "property_holds",
    "property_projector",
    "single_particle_property_holds",
    "two_particle_expectation",
    "Classification",
    "Verdict",
    "bose_partner",
    "classify",
    "classify_by_properties",
    "fermi_partner",
]
