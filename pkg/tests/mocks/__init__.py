from .state_mock import (
    ConstantDecider,
    bose_case1,
    bose_case2,
    bose_case3,
    bose_pair,
    fermi_entangled,
    fermi_separable,
    polarization_pair,
    random_separability_batch,
    separable_fock_state,
    vacuum_superposition,
)

__all__ = [
    "ConstantDecider",
    "bose_case1",
    "bose_case2",
    "bose_case3",
    "bose_pair",
    "fermi_entangled",
    "fermi_separable",
    "polarization_pair",
    "random_separability_batch",
    "separable_fock_state",
    "vacuum_superposition",
]
