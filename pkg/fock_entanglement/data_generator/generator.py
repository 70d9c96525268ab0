import logging
from typing import Optional

import numpy as np

from fock_entanglement.data_objects import (
    FockVector,
    SingleParticleVector,
    Statistics,
    Symmetry,
    TwoParticleState,
)
from fock_entanglement.errors import SectorError
from fock_entanglement.fock_space import enumerate_sector
from fock_entanglement.separability import ModeBipartition, Parity

logger = logging.getLogger("fock-entanglement")


class RandomStateGenerator:
    def __init__(self, seed: Optional[int] = None):
        """
        Seeded source of random states.
        Uses numpy's PCG64 bit generator, so a given seed reproduces the same
        amplitudes on every platform.
        :param seed: unsigned 64-bit seed; None draws fresh entropy
        """
        if seed is not None and not 0 <= int(seed) < 2 ** 64:
            raise ValueError(f"Seed must be an unsigned 64-bit integer, got {seed}")
        self.seed = seed
        self.rng = np.random.Generator(np.random.PCG64(seed))

    def complex_normal(self, size) -> np.ndarray:
        return self.rng.standard_normal(size) + 1j * self.rng.standard_normal(size)

    def unit_vector(self, dim: int) -> SingleParticleVector:
        return SingleParticleVector(self.complex_normal(dim)).normalized()

    def unitary(self, dim: int) -> np.ndarray:
        """Haar-random unitary (QR of a complex Gaussian matrix with phase fix)"""
        q, r = np.linalg.qr(self.complex_normal((dim, dim)))
        phases = np.diag(r) / np.abs(np.diag(r))
        return q * phases

    def fock_vector(self, num_modes: int, num_particles: int, statistics: Statistics) -> FockVector:
        """Normalized random vector of the N-particle sector, one draw per basis state"""
        sector = enumerate_sector(num_modes, num_particles, statistics)
        amplitudes = self.complex_normal(len(sector))
        return FockVector(statistics, num_modes, dict(zip(sector, amplitudes))).normalized()

    def fock_vector_with_parity(
        self,
        num_modes: int,
        num_particles: int,
        bipartition: ModeBipartition,
        parity: Parity = Parity.EVEN,
    ) -> FockVector:
        """Fermi vector supported only on occupations whose block-1 particle count has the given parity"""
        bipartition.check_modes(num_modes)
        wanted = 0 if parity is Parity.EVEN else 1
        sector = [
            occupation
            for occupation in enumerate_sector(num_modes, num_particles, Statistics.FERMI)
            if sum(bipartition.split(occupation)[0]) % 2 == wanted
        ]
        if not sector:
            raise SectorError(
                f"No {num_particles}-particle occupations with {parity.value} parity on block {bipartition.block1}"
            )
        amplitudes = self.complex_normal(len(sector))
        return FockVector(Statistics.FERMI, num_modes, dict(zip(sector, amplitudes))).normalized()

    def two_particle_state(self, num_modes: int, symmetry: Symmetry) -> TwoParticleState:
        """
        Random normalized coefficient matrix projected on the requested symmetry:
        (A + A^T) / 2, (A - A^T) / 2 or A itself
        """
        if num_modes < 1:
            raise SectorError(f"Number of modes must be at least 1, got {num_modes}")
        symmetry = Symmetry(symmetry)
        if symmetry is Symmetry.ANTISYMMETRIC and num_modes < 2:
            raise SectorError("Two fermions need at least two modes")
        a = self.complex_normal((num_modes, num_modes))
        if symmetry is Symmetry.SYMMETRIC:
            c = (a + a.T) / 2
        elif symmetry is Symmetry.ANTISYMMETRIC:
            c = (a - a.T) / 2
        else:
            c = a
        return TwoParticleState(c / np.linalg.norm(c), symmetry)

    def _pair(self, num_modes: int):
        u = self.unitary(num_modes)
        return u[:, 0], u[:, 1]

    def bose_same_state(self, num_modes: int) -> TwoParticleState:
        """Both bosons share one random property: C = phi phi^T"""
        phi = self.unit_vector(num_modes)
        return TwoParticleState.from_product(phi, phi, Symmetry.SYMMETRIC)

    def bose_orthogonal(self, num_modes: int) -> TwoParticleState:
        """Symmetrized product of two orthogonal random vectors (two equal Takagi values)"""
        first, second = self._pair(num_modes)
        return TwoParticleState.from_product(
            SingleParticleVector(first), SingleParticleVector(second), Symmetry.SYMMETRIC
        )

    def bose_entangled(self, num_modes: int, rank: int = 3) -> TwoParticleState:
        """
        Symmetric state with the given number of distinct nonzero Takagi values.
        Rank two with unequal values is the non-orthogonal product case.
        """
        if not 2 <= rank <= num_modes:
            raise SectorError(f"Rank must lie in 2..{num_modes}, got {rank}")
        u = self.unitary(num_modes)
        values = np.sort(self.rng.uniform(0.2, 1.0, rank))[::-1]
        # keep the values well separated
        values = values + np.arange(rank)[::-1] * 0.5
        c = (u[:, :rank] * values) @ u[:, :rank].T
        return TwoParticleState(c / np.linalg.norm(c), Symmetry.SYMMETRIC)

    def fermi_separable(self, num_modes: int) -> TwoParticleState:
        first, second = self._pair(num_modes)
        return TwoParticleState.from_product(
            SingleParticleVector(first), SingleParticleVector(second), Symmetry.ANTISYMMETRIC
        )

    def fermi_entangled(self, num_modes: int) -> TwoParticleState:
        """Slater rank two: a sum of two antisymmetrized pairs of orthonormal vectors"""
        if num_modes < 4:
            raise SectorError(f"Slater rank two needs at least four modes, got {num_modes}")
        u = self.unitary(num_modes)
        weights = self.rng.uniform(0.5, 1.0, 2)
        c = np.zeros((num_modes, num_modes), dtype=complex)
        for k, weight in enumerate(weights):
            f, g = u[:, 2 * k], u[:, 2 * k + 1]
            c = c + weight * (np.outer(f, g) - np.outer(g, f))
        return TwoParticleState(c / np.linalg.norm(c), Symmetry.ANTISYMMETRIC)
