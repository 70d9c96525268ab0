import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Optional, Sequence, Tuple

import numpy as np

from fock_entanglement.data_objects import (
    DEFAULT_TOLERANCE,
    SingleParticleVector,
    Symmetry,
    TwoParticleState,
)
from fock_entanglement.gmw.properties import find_properties
from fock_entanglement.gmw.takagi import nonzero_count, takagi

logger = logging.getLogger("fock-entanglement")


class Verdict(Enum):
    FERMI_SEPARABLE = "FermiSeparable"
    BOSE_SAME_STATE = "BoseSameState"
    BOSE_ORTHOGONAL = "BoseOrthogonal"
    BOSE_ENTANGLED = "BoseEntangled"
    FERMI_NOT_APPLICABLE = "FermiNotApplicable"

    @property
    def separable(self) -> bool:
        return self in (Verdict.FERMI_SEPARABLE, Verdict.BOSE_SAME_STATE, Verdict.BOSE_ORTHOGONAL)


@dataclass
class Classification:
    """
    Outcome of the property-attribution criterion.
    attributes holds (phi0, partner): the property vectors whose (anti)symmetrized
    product is the state (separable verdicts), or the two non-orthogonal attributable
    properties of a Bose state of coefficient rank two with unequal Takagi values.
    """

    verdict: Verdict
    attributes: Optional[Tuple[SingleParticleVector, SingleParticleVector]] = None
    spectrum: Optional[Sequence[float]] = None

    @property
    def separable(self) -> bool:
        return self.verdict.separable

    @property
    def case(self) -> str:
        """Tag of the matching case: fermi, bose1, bose2 or bose3"""
        if self.verdict in (Verdict.FERMI_SEPARABLE, Verdict.FERMI_NOT_APPLICABLE):
            return "fermi"
        if self.verdict is Verdict.BOSE_SAME_STATE:
            return "bose1"
        if self.verdict is Verdict.BOSE_ORTHOGONAL:
            return "bose2"
        return "bose3"

    def reconstruct(self) -> TwoParticleState:
        """(Anti)symmetrized product of the attributes, normalized"""
        if self.attributes is None:
            raise ValueError(f"{self.verdict.value} carries no attributes")
        symmetry = Symmetry.ANTISYMMETRIC if self.verdict is Verdict.FERMI_SEPARABLE else Symmetry.SYMMETRIC
        return TwoParticleState.from_product(self.attributes[0], self.attributes[1], symmetry)

    def to_dict(self) -> Dict:
        result = {"verdict": self.verdict.value, "attributes": None}
        if self.attributes is not None:
            result["attributes"] = {
                "phi0": self.attributes[0].to_list(),
                "partner": self.attributes[1].to_list(),
            }
        return result


def bose_partner(t: TwoParticleState, phi0: SingleParticleVector) -> SingleParticleVector:
    """
    Theta with Psi proportional to sym(phi0 x Theta):
    Theta ~ C conj(phi0) - (c00 / 2) phi0 with c00 = phi0^H C conj(phi0)
    """
    c = t.coefficients
    image = c @ phi0.components.conj()
    c00 = np.vdot(phi0.components, image)
    return SingleParticleVector(image - 0.5 * c00 * phi0.components).normalized()


def fermi_partner(t: TwoParticleState, phi0: SingleParticleVector) -> SingleParticleVector:
    """Upsilon = -sqrt(2) C conj(phi0), so that Psi = antisym(phi0 x Upsilon)"""
    return SingleParticleVector(-np.sqrt(2) * t.coefficients @ phi0.components.conj()).normalized()


def _classify_fermi(t: TwoParticleState, tol: float) -> Classification:
    singular_values = np.linalg.svd(t.coefficients, compute_uv=False)
    rank = nonzero_count(singular_values, tol)
    if rank != 2:
        return Classification(Verdict.FERMI_NOT_APPLICABLE, spectrum=tuple(singular_values))
    u, _, _ = np.linalg.svd(t.coefficients)
    phi0 = SingleParticleVector(u[:, 0]).with_phase_convention()
    return Classification(
        Verdict.FERMI_SEPARABLE, (phi0, fermi_partner(t, phi0)), spectrum=tuple(singular_values)
    )


def _classify_bose(t: TwoParticleState, tol: float) -> Classification:
    values, vectors = takagi(t.coefficients, tol=tol)
    count = nonzero_count(values, tol)
    spectrum = tuple(values)
    logger.debug(f"Takagi values {values[:3]}")
    if count == 1:
        phi0 = SingleParticleVector(vectors[:, 0]).with_phase_convention()
        return Classification(Verdict.BOSE_SAME_STATE, (phi0, phi0), spectrum=spectrum)
    if count == 2 and abs(values[0] - values[1]) <= tol * values[0]:
        u1, u2 = vectors[:, 0], vectors[:, 1]
        phi = SingleParticleVector((u1 + 1j * u2) / np.sqrt(2)).with_phase_convention()
        chi = SingleParticleVector((u1 - 1j * u2) / np.sqrt(2)).with_phase_convention()
        return Classification(Verdict.BOSE_ORTHOGONAL, (phi, chi), spectrum=spectrum)
    if count == 2:
        # phi0 = (-i sqrt(l1) u1 + sqrt(l2) u2) / sqrt(l1 + l2) solves Q C Q^T = 0
        l1, l2 = values[0], values[1]
        phi0 = SingleParticleVector(
            (-1j * np.sqrt(l1) * vectors[:, 0] + np.sqrt(l2) * vectors[:, 1]) / np.sqrt(l1 + l2)
        ).with_phase_convention()
        return Classification(Verdict.BOSE_ENTANGLED, (phi0, bose_partner(t, phi0)), spectrum=spectrum)
    return Classification(Verdict.BOSE_ENTANGLED, spectrum=spectrum)


def classify(t: TwoParticleState, tol: float = DEFAULT_TOLERANCE) -> Classification:
    """
    Separability of an identical-particle two-particle state by property attribution.
    Fermions are separable iff C has matrix rank 2 (Slater rank one).
    Bosons: one nonzero Takagi value means both particles share phi0; two equal values
    mean two orthogonal properties; anything else is entangled.
    :param t: normalized symmetric or antisymmetric state
    :param tol: rank and equal-value tolerance, relative to the largest value
    """
    if t.symmetry is Symmetry.NONE:
        raise ValueError("classify needs identical particles (symmetric or antisymmetric state)")
    t = t.normalized()
    if t.symmetry is Symmetry.ANTISYMMETRIC:
        return _classify_fermi(t, tol)
    return _classify_bose(t, tol)


def classify_by_properties(t: TwoParticleState, tol: float = DEFAULT_TOLERANCE) -> Classification:
    """
    Reference classification that searches the admissible properties directly,
    without the Takagi factorization: same-state when some phi0 has Psi ~ phi0 x phi0,
    orthogonal when two admissible properties are orthogonal.
    """
    if t.symmetry is Symmetry.NONE:
        raise ValueError("classify needs identical particles (symmetric or antisymmetric state)")
    t = t.normalized()
    solutions = find_properties(t, tol)
    if t.symmetry is Symmetry.ANTISYMMETRIC:
        if solutions.is_empty:
            return Classification(Verdict.FERMI_NOT_APPLICABLE)
        phi0 = solutions.vectors[0]
        return Classification(Verdict.FERMI_SEPARABLE, (phi0, fermi_partner(t, phi0)))
    if solutions.is_empty:
        return Classification(Verdict.BOSE_ENTANGLED)
    for phi0 in solutions:
        partner = bose_partner(t, phi0)
        if abs(abs(phi0.overlap(partner)) - 1.0) <= np.sqrt(tol):
            return Classification(Verdict.BOSE_SAME_STATE, (phi0, phi0))
    for i, phi in enumerate(solutions.vectors):
        for chi in solutions.vectors[i + 1:]:
            if abs(phi.overlap(chi)) <= tol:
                return Classification(Verdict.BOSE_ORTHOGONAL, (phi, chi))
    phi0 = solutions.vectors[0]
    return Classification(Verdict.BOSE_ENTANGLED, (phi0, bose_partner(t, phi0)))
