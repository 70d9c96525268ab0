import itertools
import math
from typing import Iterable, List

from fock_entanglement.data_objects import FockVector, Occupation, Statistics
from fock_entanglement.errors import ModeIndexError, SectorError


def vacuum(num_modes: int, statistics: Statistics) -> FockVector:
    """
    The reference state |0> with no particles in any of the modes
    :param num_modes: number of modes M >= 1
    :param statistics: Bose or Fermi
    """
    if num_modes < 1:
        raise ModeIndexError(f"Number of modes must be at least 1, got {num_modes}")
    return FockVector(statistics, num_modes, {(0,) * num_modes: 1.0})


def _check_mode(mode: int, v: FockVector):
    if not 1 <= mode <= v.num_modes:
        raise ModeIndexError(f"Mode {mode} is outside 1..{v.num_modes}")


def _fermi_phase(occupation: Occupation, index: int) -> int:
    # Jordan-Wigner ordering: count occupied modes strictly below the target mode
    return -1 if sum(occupation[:index]) % 2 else 1


def create(mode: int, v: FockVector) -> FockVector:
    """
    Apply the creation operator a^dagger_mode
    :param mode: 1-based mode index
    :param v: the state
    """
    _check_mode(mode, v)
    index = mode - 1
    result = {}
    for occupation, amplitude in v.items():
        n = occupation[index]
        if v.statistics is Statistics.FERMI:
            if n == 1:
                continue
            factor = _fermi_phase(occupation, index)
        else:
            factor = math.sqrt(n + 1)
        target = occupation[:index] + (n + 1,) + occupation[index + 1:]
        result[target] = result.get(target, 0j) + factor * amplitude
    return FockVector(v.statistics, v.num_modes, result)


def annihilate(mode: int, v: FockVector) -> FockVector:
    """
    Apply the annihilation operator a_mode (the adjoint of create)
    :param mode: 1-based mode index
    :param v: the state
    """
    _check_mode(mode, v)
    index = mode - 1
    result = {}
    for occupation, amplitude in v.items():
        n = occupation[index]
        if n == 0:
            continue
        if v.statistics is Statistics.FERMI:
            factor = _fermi_phase(occupation, index)
        else:
            factor = math.sqrt(n)
        target = occupation[:index] + (n - 1,) + occupation[index + 1:]
        result[target] = result.get(target, 0j) + factor * amplitude
    return FockVector(v.statistics, v.num_modes, result)


def number_operator(v: FockVector, modes: Iterable[int]) -> FockVector:
    """
    Apply sum_{j in modes} a^dagger_j a_j.
    Basis states are eigenvectors, so this is a diagonal rescaling.
    """
    indices = sorted(set(modes))
    for mode in indices:
        _check_mode(mode, v)
    result = {}
    for occupation, amplitude in v.items():
        count = sum(occupation[mode - 1] for mode in indices)
        if count:
            result[occupation] = count * amplitude
    return FockVector(v.statistics, v.num_modes, result)


def inner_product(v: FockVector, w: FockVector) -> complex:
    """<v|w>, conjugate-linear in the first argument"""
    v.check_compatible(w)
    if len(v.amplitudes) > len(w.amplitudes):
        return sum((v.amplitude(occ).conjugate() * amp for occ, amp in w.items()), 0j)
    return sum((amp.conjugate() * w.amplitude(occ) for occ, amp in v.items()), 0j)


def enumerate_sector(num_modes: int, num_particles: int, statistics: Statistics) -> List[Occupation]:
    """
    All occupation vectors with the given particle number.
    Ordered with mode 1 filled first: (2,0), (1,1), (0,2) for two bosons in two modes.
    """
    if num_modes < 1:
        raise ModeIndexError(f"Number of modes must be at least 1, got {num_modes}")
    if num_particles < 0:
        raise SectorError(f"Particle number must be non-negative, got {num_particles}")
    statistics = Statistics(statistics)
    if statistics is Statistics.FERMI:
        if num_particles > num_modes:
            raise SectorError(
                f"{num_particles} fermions do not fit in {num_modes} modes"
            )
        occupations = []
        for occupied in itertools.combinations(range(num_modes), num_particles):
            occupation = [0] * num_modes
            for index in occupied:
                occupation[index] = 1
            occupations.append(tuple(occupation))
    else:
        occupations = []
        for bars in itertools.combinations_with_replacement(range(num_modes), num_particles):
            occupation = [0] * num_modes
            for index in bars:
                occupation[index] += 1
            occupations.append(tuple(occupation))
    return sorted(set(occupations), reverse=True)


def sector_dimension(num_modes: int, num_particles: int, statistics: Statistics) -> int:
    if Statistics(statistics) is Statistics.FERMI:
        return math.comb(num_modes, num_particles)
    return math.comb(num_modes + num_particles - 1, num_particles)


def apply_word(word, v: FockVector) -> FockVector:
    """
    Apply a product of ladder operators given as a sequence of (is_creator, mode),
    written left to right; the rightmost operator acts first.
    """
    for is_creator, mode in reversed(list(word)):
        v = create(mode, v) if is_creator else annihilate(mode, v)
        if v.is_zero():
            break
    return v
