import math
from enum import Enum
from types import MappingProxyType
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from fock_entanglement.errors import (
    ModeIndexError,
    StateFormatError,
    StatisticsMismatchError,
)

# amplitudes with a smaller magnitude are dropped after every operator application
PRUNE_THRESHOLD = 1e-14
# global decision tolerance for rank tests, factorization checks and projector tests
DEFAULT_TOLERANCE = 1e-9

Occupation = Tuple[int, ...]


class Statistics(Enum):
    BOSE = "bose"
    FERMI = "fermi"

    @property
    def exchange_sign(self) -> int:
        """Sign picked up when two creators (or two annihilators) are swapped"""
        return 1 if self is Statistics.BOSE else -1


class Symmetry(Enum):
    SYMMETRIC = "sym"
    ANTISYMMETRIC = "antisym"
    NONE = "none"

    @classmethod
    def for_statistics(cls, statistics: Statistics) -> "Symmetry":
        if statistics is Statistics.BOSE:
            return cls.SYMMETRIC
        return cls.ANTISYMMETRIC


def complex_to_json(value: complex) -> Dict[str, float]:
    value = complex(value)
    return {"re": value.real, "im": value.imag}


def complex_from_json(data) -> complex:
    if isinstance(data, dict):
        return complex(float(data.get("re", 0.0)), float(data.get("im", 0.0)))
    if isinstance(data, (list, tuple)) and len(data) == 2:
        return complex(float(data[0]), float(data[1]))
    return complex(data)


class FockVector:
    """
    Sparse vector in the Fock space of a fixed number of modes.
    Holds a map from occupation vectors (tuples of per-mode particle counts)
    to complex amplitudes. Values are immutable: every operation returns a new vector.
    """

    __slots__ = ("_statistics", "_num_modes", "_amplitudes")

    def __init__(
        self,
        statistics: Statistics,
        num_modes: int,
        amplitudes: Optional[Mapping[Sequence[int], complex]] = None,
        prune: float = PRUNE_THRESHOLD,
    ):
        """
        :param statistics: Statistics.BOSE or Statistics.FERMI
        :param num_modes: number of modes M (fixed for the lifetime of the vector)
        :param amplitudes: mapping occupation vector -> amplitude
        :param prune: amplitudes with magnitude below this value are not stored
        """
        if num_modes < 1:
            raise ModeIndexError(f"Number of modes must be at least 1, got {num_modes}")
        self._statistics = Statistics(statistics)
        self._num_modes = int(num_modes)

        cleaned = {}
        for occupation, amplitude in (amplitudes or {}).items():
            occupation = self._validate_occupation(occupation)
            amplitude = complex(amplitude)
            if not (math.isfinite(amplitude.real) and math.isfinite(amplitude.imag)):
                raise ValueError(f"Amplitude {amplitude} at {occupation} is not finite")
            if abs(amplitude) < prune or amplitude == 0:
                continue
            cleaned[occupation] = amplitude
        self._amplitudes = cleaned

    def _validate_occupation(self, occupation: Sequence[int]) -> Occupation:
        occupation = tuple(int(n) for n in occupation)
        if len(occupation) != self._num_modes:
            raise ModeIndexError(
                f"Occupation {occupation} has {len(occupation)} entries, expected {self._num_modes}"
            )
        if any(n < 0 for n in occupation):
            raise ValueError(f"Occupation {occupation} has negative entries")
        if self._statistics is Statistics.FERMI and any(n > 1 for n in occupation):
            raise StatisticsMismatchError(
                f"Fermi occupation {occupation} has a mode with more than one particle"
            )
        return occupation

    @classmethod
    def basis(
        cls, statistics: Statistics, occupation: Sequence[int], amplitude: complex = 1.0
    ) -> "FockVector":
        return cls(statistics, len(occupation), {tuple(occupation): amplitude})

    @property
    def statistics(self) -> Statistics:
        return self._statistics

    @property
    def num_modes(self) -> int:
        return self._num_modes

    @property
    def amplitudes(self) -> Mapping[Occupation, complex]:
        return MappingProxyType(self._amplitudes)

    def amplitude(self, occupation: Sequence[int]) -> complex:
        return self._amplitudes.get(tuple(occupation), 0j)

    def support(self) -> List[Occupation]:
        return sorted(self._amplitudes)

    def items(self) -> Iterable[Tuple[Occupation, complex]]:
        return self._amplitudes.items()

    def is_zero(self) -> bool:
        return not self._amplitudes

    def particle_numbers(self) -> List[int]:
        """Particle-number sectors in which the vector has weight"""
        return sorted({sum(occupation) for occupation in self._amplitudes})

    def norm(self) -> float:
        return math.sqrt(sum(abs(a) ** 2 for a in self._amplitudes.values()))

    def normalized(self) -> "FockVector":
        norm = self.norm()
        if norm == 0:
            raise ValueError("Cannot normalize the zero vector")
        return self * (1.0 / norm)

    def check_compatible(self, other: "FockVector"):
        if not isinstance(other, FockVector):
            raise TypeError(f"Expected a FockVector, got {type(other)}")
        if other.statistics is not self._statistics:
            raise StatisticsMismatchError(
                f"Statistics mismatch: {self._statistics.value} vs {other.statistics.value}"
            )
        if other.num_modes != self._num_modes:
            raise StatisticsMismatchError(
                f"Mode count mismatch: {self._num_modes} vs {other.num_modes}"
            )

    def zero(self) -> "FockVector":
        return FockVector(self._statistics, self._num_modes)

    def __add__(self, other: "FockVector") -> "FockVector":
        self.check_compatible(other)
        summed = dict(self._amplitudes)
        for occupation, amplitude in other.items():
            summed[occupation] = summed.get(occupation, 0j) + amplitude
        return FockVector(self._statistics, self._num_modes, summed)

    def __sub__(self, other: "FockVector") -> "FockVector":
        return self + (-1.0) * other

    def __neg__(self) -> "FockVector":
        return (-1.0) * self

    def __mul__(self, scalar: complex) -> "FockVector":
        scalar = complex(scalar)
        return FockVector(
            self._statistics,
            self._num_modes,
            {occ: scalar * amp for occ, amp in self._amplitudes.items()},
        )

    __rmul__ = __mul__

    def allclose(self, other: "FockVector", atol: float = 1e-12) -> bool:
        self.check_compatible(other)
        keys = set(self._amplitudes) | set(other.amplitudes)
        return all(abs(self.amplitude(k) - other.amplitude(k)) <= atol for k in keys)

    def to_dict(self) -> Dict:
        return {
            "statistics": self._statistics.value,
            "num_modes": self._num_modes,
            "amplitudes": [
                {
                    "occ": list(occupation),
                    "re": self._amplitudes[occupation].real,
                    "im": self._amplitudes[occupation].imag,
                }
                for occupation in self.support()
            ],
        }

    @classmethod
    def from_json(cls, data: Dict) -> "FockVector":
        try:
            statistics = Statistics(data["statistics"])
            num_modes = int(data["num_modes"])
            entries = data["amplitudes"]
        except (KeyError, TypeError, ValueError) as e:
            raise StateFormatError(f"Malformed Fock vector: {e}") from e

        amplitudes = {}
        try:
            for entry in entries:
                occupation = tuple(int(n) for n in entry["occ"])
                amplitude = complex(float(entry.get("re", 0.0)), float(entry.get("im", 0.0)))
                amplitudes[occupation] = amplitudes.get(occupation, 0j) + amplitude
        except (KeyError, TypeError, ValueError, AttributeError) as e:
            raise StateFormatError(f"Malformed amplitude entry: {e!r}") from e
        for occupation in amplitudes:
            if statistics is Statistics.FERMI and any(n > 1 for n in occupation):
                raise StateFormatError(
                    f"Fermi occupation {occupation} has a mode with more than one particle"
                )
        try:
            return cls(statistics, num_modes, amplitudes)
        except ValueError as e:
            raise StateFormatError(str(e)) from e

    def __repr__(self):
        terms = ", ".join(
            f"{occupation}: {self._amplitudes[occupation]:.6g}" for occupation in self.support()
        )
        return f"FockVector({self._statistics.value}, M={self._num_modes}, {{{terms}}})"


class SingleParticleVector:
    """
    Coordinates of a single-particle state in the mode basis |i> = a^dagger_i |0>
    """

    def __init__(self, components: Sequence[complex]):
        components = np.asarray(components, dtype=complex).reshape(-1)
        if not np.all(np.isfinite(components)):
            raise ValueError("Single-particle vector has non-finite components")
        self.components = components

    @property
    def dim(self) -> int:
        return self.components.shape[0]

    def norm(self) -> float:
        return float(np.linalg.norm(self.components))

    def is_unit(self, tol: float = DEFAULT_TOLERANCE) -> bool:
        return abs(self.norm() - 1.0) <= tol

    def normalized(self) -> "SingleParticleVector":
        norm = self.norm()
        if norm == 0:
            raise ValueError("Cannot normalize the zero single-particle vector")
        return SingleParticleVector(self.components / norm)

    def with_phase_convention(self) -> "SingleParticleVector":
        """Global phase chosen so that the largest-magnitude component is real positive"""
        pivot = self.components[int(np.argmax(np.abs(self.components)))]
        if pivot == 0:
            return SingleParticleVector(self.components)
        return SingleParticleVector(self.components * (abs(pivot) / pivot))

    def overlap(self, other: "SingleParticleVector") -> complex:
        """<self|other>"""
        return complex(np.vdot(self.components, other.components))

    def projector(self) -> np.ndarray:
        return np.outer(self.components, self.components.conj())

    def to_list(self) -> List[Dict[str, float]]:
        return [complex_to_json(c) for c in self.components]

    @classmethod
    def from_json(cls, data: Sequence) -> "SingleParticleVector":
        return cls([complex_from_json(c) for c in data])

    @classmethod
    def unit(cls, dim: int, mode: int) -> "SingleParticleVector":
        """Mode basis vector e_mode (1-based mode index)"""
        components = np.zeros(dim, dtype=complex)
        components[mode - 1] = 1.0
        return cls(components)

    def __repr__(self):
        return f"SingleParticleVector({np.array2string(self.components, precision=4)})"


class TwoParticleState:
    def __init__(
        self,
        coefficients,
        symmetry: Symmetry,
        tol: float = DEFAULT_TOLERANCE,
    ):
        """
        First-quantized two-particle state |Psi> = sum_ij C_ij |i> (x) |j>
        :param coefficients: complex M x M matrix C
        :param symmetry: Symmetry.SYMMETRIC (bosons), Symmetry.ANTISYMMETRIC (fermions)
        or Symmetry.NONE (distinguishable particles)
        :param tol: tolerance for the symmetry checks
        """
        coefficients = np.array(coefficients, dtype=complex)
        if coefficients.ndim != 2 or coefficients.shape[0] != coefficients.shape[1]:
            raise ValueError(f"Coefficients must be a square matrix, got shape {coefficients.shape}")
        if not np.all(np.isfinite(coefficients)):
            raise ValueError("Coefficients contain non-finite values")
        self.symmetry = Symmetry(symmetry)
        scale = max(1.0, float(np.max(np.abs(coefficients), initial=0.0)))
        if self.symmetry is Symmetry.SYMMETRIC and not np.allclose(
            coefficients, coefficients.T, atol=tol * scale, rtol=0
        ):
            raise ValueError("Symmetric state requires C = C^T")
        if self.symmetry is Symmetry.ANTISYMMETRIC:
            if not np.allclose(coefficients, -coefficients.T, atol=tol * scale, rtol=0):
                raise ValueError("Antisymmetric state requires C = -C^T")
            if np.any(np.abs(np.diag(coefficients)) > tol * scale):
                raise ValueError("Antisymmetric state requires a zero diagonal")
            # entries below tol are stored as exact zeros
            np.fill_diagonal(coefficients, 0)
        self.coefficients = coefficients

    @property
    def dim(self) -> int:
        return self.coefficients.shape[0]

    def norm(self) -> float:
        return float(np.linalg.norm(self.coefficients))

    def normalized(self) -> "TwoParticleState":
        norm = self.norm()
        if norm == 0:
            raise ValueError("Cannot normalize the zero state")
        return TwoParticleState(self.coefficients / norm, self.symmetry)

    def inner_product(self, other: "TwoParticleState") -> complex:
        return complex(np.vdot(self.coefficients, other.coefficients))

    def as_vector(self) -> np.ndarray:
        """Row-major vectorization, so that kron(A, B) acts with A on the first particle"""
        return self.coefficients.reshape(-1)

    @classmethod
    def from_product(
        cls,
        first: SingleParticleVector,
        second: SingleParticleVector,
        symmetry: Symmetry,
    ) -> "TwoParticleState":
        """
        Normalized (anti)symmetrization of first (x) second,
        or the plain tensor product for distinguishable particles
        """
        a = first.components
        b = second.components
        symmetry = Symmetry(symmetry)
        if symmetry is Symmetry.SYMMETRIC:
            coefficients = np.outer(a, b) + np.outer(b, a)
        elif symmetry is Symmetry.ANTISYMMETRIC:
            coefficients = np.outer(a, b) - np.outer(b, a)
        else:
            coefficients = np.outer(a, b)
        return cls(coefficients, symmetry).normalized()

    def to_dict(self) -> Dict:
        return {
            "symmetry": self.symmetry.value,
            "dim": self.dim,
            "coefficients": [[complex_to_json(c) for c in row] for row in self.coefficients],
        }

    @classmethod
    def from_json(cls, data: Dict) -> "TwoParticleState":
        try:
            symmetry = Symmetry(data["symmetry"])
            dim = int(data["dim"])
            rows = [[complex_from_json(c) for c in row] for row in data["coefficients"]]
            coefficients = np.array(rows, dtype=complex)
        except (KeyError, TypeError, ValueError) as e:
            raise StateFormatError(f"Malformed two-particle state: {e}") from e
        if coefficients.shape != (dim, dim):
            raise StateFormatError(
                f"Coefficient matrix has shape {coefficients.shape}, expected ({dim}, {dim})"
            )
        try:
            return cls(coefficients, symmetry)
        except ValueError as e:
            raise StateFormatError(str(e)) from e

    def __repr__(self):
        return (
            f"TwoParticleState(symmetry={self.symmetry.value}, dim={self.dim}, "
            f"norm={self.norm():.6g})"
        )
