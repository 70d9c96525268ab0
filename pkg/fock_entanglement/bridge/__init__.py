from .conversions import (
    ModeRotation,
    complete_basis,
    distinguished_bipartition,
    first_to_second,
    number_operator_along,
    property_expectation_second_quantized,
    rotate_modes,
    rotate_state,
    second_quantized_property_projector,
    second_to_first,
    slater_basis,
)
from .cross_check import CrossCheckReport, ModeCheck, cross_check, reports_to_dataframe

__all__ = [
    "ModeRotation",
    "complete_basis",
    "distinguished_bipartition",
    "first_to_second",
    "number_operator_along",
    "property_expectation_second_quantized",
    "rotate_modes",
    "rotate_state",
    "second_quantized_property_projector",
    "second_to_first",
    "slater_basis",
    "CrossCheckReport",
    "ModeCheck",
    "cross_check",
    "reports_to_dataframe",
]
