import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy as np
import pandas as pd

from fock_entanglement.data_objects import (
    DEFAULT_TOLERANCE,
    SingleParticleVector,
    Symmetry,
    TwoParticleState,
)
from fock_entanglement.gmw import Classification, classify, find_properties
from fock_entanglement.separability import (
    ModeBipartition,
    SeparabilityVerdict,
    mode_separability_rank,
)
from fock_entanglement.bridge.conversions import (
    ModeRotation,
    distinguished_bipartition,
    first_to_second,
    rotate_modes,
    slater_basis,
)

logger = logging.getLogger("fock-entanglement")


@dataclass
class ModeCheck:
    """One mode-separability run on the rotated second-quantized state"""

    rotation: ModeRotation
    bipartition: ModeBipartition
    verdict: SeparabilityVerdict
    property_vector: Optional[SingleParticleVector] = None

    def certificate_vectors(self) -> Optional[Tuple[SingleParticleVector, SingleParticleVector]]:
        """
        Single-particle vectors (original mode basis) of a certificate made of two
        degree-1 creator polynomials; None for any other certificate
        """
        certificate = self.verdict.certificate
        if certificate is None:
            return None
        vectors = []
        for polynomial in (certificate.first, certificate.second):
            if any(len(term.creators) != 1 or term.annihilators for term in polynomial):
                return None
            coordinates = np.zeros(self.rotation.dim, dtype=complex)
            for term in polynomial:
                coordinates[term.creators[0] - 1] = term.coefficient
            vectors.append(SingleParticleVector(self.rotation.matrix @ coordinates).normalized())
        return vectors[0], vectors[1]


@dataclass
class CrossCheckReport:
    classification: Classification
    checks: List[ModeCheck] = field(default_factory=list)

    @property
    def case(self) -> str:
        return self.classification.case

    @property
    def mode(self) -> SeparabilityVerdict:
        return self.checks[0].verdict

    @property
    def mode_separable(self) -> bool:
        return any(check.verdict.separable for check in self.checks)

    @property
    def agree(self) -> bool:
        if self.classification.separable:
            return all(check.verdict.separable for check in self.checks)
        return not self.mode_separable

    def to_dict(self) -> Dict:
        return {
            "gmw": self.classification.to_dict(),
            "mode": self.mode.to_dict(),
            "agree": self.agree,
            "case": self.case,
        }


def _check(v, rotation: ModeRotation, bipartition: ModeBipartition, tol: float, phi=None) -> ModeCheck:
    rotated = rotate_modes(v, rotation.inverse())
    verdict = mode_separability_rank(rotated, bipartition, tol=tol)
    return ModeCheck(rotation, bipartition, verdict, phi)


def _fallback_checks(t: TwoParticleState, v, tol: float) -> List[ModeCheck]:
    if t.symmetry is Symmetry.ANTISYMMETRIC:
        # leading Slater pair in modes 1 and 2; a one-mode block would break block parity
        rotation = slater_basis(t, tol)
        bipartition = ModeBipartition.from_block((1, 2), t.dim)
        return [_check(v, rotation, bipartition, tol)]
    u, _, _ = np.linalg.svd(t.coefficients)
    phi = SingleParticleVector(u[:, 0])
    rotation, bipartition = distinguished_bipartition(phi)
    return [_check(v, rotation, bipartition, tol, phi)]


def cross_check(t: TwoParticleState, tol: float = DEFAULT_TOLERANCE) -> CrossCheckReport:
    """
    Run both separability notions on one state and compare them.
    Separable by property attribution: every attributed property phi0 is rotated into
    mode 1 and the state must be mode-separable under {1} | {2..M}.
    Entangled: every admissible phi0 (or a fallback bipartition when there is none)
    must give a mode-entangled verdict.
    :param t: symmetric or antisymmetric two-particle state
    :param tol: decision tolerance for both criteria
    """
    t = t.normalized()
    classification = classify(t, tol)
    v = first_to_second(t)

    if classification.separable:
        candidates = [classification.attributes[0]]
        if abs(abs(classification.attributes[0].overlap(classification.attributes[1])) - 1) > tol:
            candidates.append(classification.attributes[1])
    else:
        candidates = list(find_properties(t, tol))

    checks = []
    for phi in candidates:
        rotation, bipartition = distinguished_bipartition(phi)
        checks.append(_check(v, rotation, bipartition, tol, phi))
    if not checks:
        checks = _fallback_checks(t, v, tol)

    report = CrossCheckReport(classification, checks)
    if not report.agree:
        logger.warning(
            f"Cross-check disagreement ({report.case}): {classification.verdict.value} "
            f"vs mode verdicts {[str(check.verdict) for check in checks]}"
        )
    return report


def reports_to_dataframe(reports: List[CrossCheckReport]) -> pd.DataFrame:
    """One row per state: case tag, verdicts of both criteria and agreement"""
    return pd.DataFrame(
        [
            {
                "case": report.case,
                "gmw_verdict": report.classification.verdict.value,
                "gmw_separable": report.classification.separable,
                "mode_separable": report.mode_separable,
                "agree": report.agree,
            }
            for report in reports
        ]
    )
