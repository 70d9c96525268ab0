from dataclasses import dataclass
from typing import Dict, Optional, Sequence

from fock_entanglement.data_objects import FockVector, complex_to_json
from fock_entanglement.fock_space import inner_product, vacuum
from fock_entanglement.operators import NormalForm, NormalTerm, Product, apply, expectation


@dataclass(frozen=True)
class Certificate:
    """
    Creator polynomials P (block 1) and Q (block 2) with v = P Q |0>
    """

    first: NormalForm
    second: NormalForm

    def regenerate(self, num_modes: int) -> FockVector:
        state = vacuum(num_modes, self.first.statistics)
        return apply(self.first, apply(self.second, state))

    def fidelity(self, v: FockVector) -> float:
        """|<v|v'>| with v' the normalized regenerated state"""
        regenerated = self.regenerate(v.num_modes)
        if regenerated.is_zero():
            return 0.0
        return abs(inner_product(v.normalized(), regenerated.normalized()))

    def to_dict(self) -> Dict:
        return {"P": self.first.compact_string(), "Q": self.second.compact_string()}


@dataclass(frozen=True)
class Witness:
    """
    A local pair (A1, A2) whose joint expectation does not factorize
    """

    first: NormalTerm
    second: NormalTerm
    joint: complex
    first_expectation: complex
    second_expectation: complex

    @property
    def product(self) -> complex:
        return self.first_expectation * self.second_expectation

    @property
    def violation(self) -> float:
        return abs(self.joint - self.product)

    def recompute(self, v: FockVector) -> complex:
        """<A1 A2> - <A1><A2> evaluated from scratch on the operator expressions"""
        first = self.first.to_expression()
        second = self.second.to_expression()
        joint = expectation(Product((first, second)), v)
        return joint - expectation(first, v) * expectation(second, v)

    def to_dict(self) -> Dict:
        return {
            "a1": self.first.monomial_string(),
            "a2": self.second.monomial_string(),
            "lhs": complex_to_json(self.joint),
            "rhs": complex_to_json(self.product),
        }


@dataclass(frozen=True)
class SeparabilityVerdict:
    separable: bool
    certificate: Optional[Certificate] = None
    witness: Optional[Witness] = None
    singular_values: Optional[Sequence[float]] = None
    decider: str = ""

    def to_dict(self) -> Dict:
        result = {"separable": bool(self.separable)}
        if self.certificate is not None:
            result["certificate"] = self.certificate.to_dict()
        if self.witness is not None:
            result["witness"] = self.witness.to_dict()
        return result

    def __str__(self):
        kind = "separable" if self.separable else "entangled"
        if self.witness is not None:
            return (
                f"{kind} (witness {self.witness.first.monomial_string()}, "
                f"{self.witness.second.monomial_string()}, violation {self.witness.violation:.3g})"
            )
        if self.certificate is not None:
            return f"{kind} (P = {self.certificate.first.compact_string()}, Q = {self.certificate.second.compact_string()})"
        return kind
