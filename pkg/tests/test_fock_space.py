import itertools

import numpy as np
import pytest

from fock_entanglement import (
    FockVector,
    Statistics,
    annihilate,
    create,
    enumerate_sector,
    inner_product,
    number_operator,
    vacuum,
)
from fock_entanglement.errors import ModeIndexError, SectorError, StatisticsMismatchError
from fock_entanglement.fock_space import apply_word, sector_dimension


@pytest.mark.parametrize("statistics", [Statistics.BOSE, Statistics.FERMI])
def test_vacuum_is_normalized_basis_state(statistics):
    v = vacuum(4, statistics)
    assert v.amplitude((0, 0, 0, 0)) == 1
    assert v.norm() == pytest.approx(1)
    assert v.particle_numbers() == [0]


def test_vacuum_rejects_zero_modes():
    with pytest.raises(ModeIndexError):
        vacuum(0, Statistics.BOSE)


def test_annihilate_vacuum_is_zero():
    assert annihilate(1, vacuum(2, Statistics.BOSE)).is_zero()
    assert annihilate(2, vacuum(2, Statistics.FERMI)).is_zero()


def test_bose_double_creation_has_sqrt_two():
    v = create(1, create(1, vacuum(2, Statistics.BOSE)))
    assert v.support() == [(2, 0)]
    assert v.amplitude((2, 0)) == pytest.approx(np.sqrt(2))


def test_fermi_double_creation_vanishes():
    assert create(1, create(1, vacuum(2, Statistics.FERMI))).is_zero()


def test_fermi_creators_anticommute():
    zero = vacuum(2, Statistics.FERMI)
    first = create(2, create(1, zero))
    second = create(1, create(2, zero))
    assert first.allclose(-1 * second)
    assert second.amplitude((1, 1)) == 1


@pytest.mark.parametrize("statistics", [Statistics.BOSE, Statistics.FERMI])
def test_annihilate_single_occupation(statistics):
    v = FockVector.basis(statistics, (1, 1))
    assert annihilate(1, v).allclose(FockVector.basis(statistics, (0, 1)))


def test_fermi_annihilate_picks_up_string_sign():
    v = FockVector.basis(Statistics.FERMI, (1, 1))
    assert annihilate(2, v).amplitude((1, 0)) == -1


def test_mode_out_of_range_raises():
    with pytest.raises(ModeIndexError):
        create(3, vacuum(2, Statistics.BOSE))
    with pytest.raises(ModeIndexError):
        annihilate(0, vacuum(2, Statistics.BOSE))


def test_number_operator_counts_particles():
    v = FockVector.basis(Statistics.BOSE, (1, 1))
    assert number_operator(v, {1, 2}).allclose(2 * v)
    assert number_operator(vacuum(2, Statistics.BOSE), {1, 2}).is_zero()

    doubly = create(1, create(1, vacuum(2, Statistics.BOSE))) * (1 / np.sqrt(2))
    assert number_operator(doubly, {1}).allclose(2 * doubly)


def test_inner_product_of_basis_states():
    first = FockVector.basis(Statistics.BOSE, (1, 0))
    second = FockVector.basis(Statistics.BOSE, (0, 1))
    assert inner_product(first, second) == 0
    pair = create(1, create(2, vacuum(2, Statistics.BOSE)))
    assert inner_product(pair, pair) == pytest.approx(1)


def test_inner_product_is_conjugate_linear_in_first_argument():
    v = FockVector.basis(Statistics.BOSE, (1, 0), amplitude=1j)
    w = FockVector.basis(Statistics.BOSE, (1, 0))
    assert inner_product(v, w) == pytest.approx(-1j)


def test_inner_product_rejects_statistics_mismatch():
    with pytest.raises(StatisticsMismatchError):
        inner_product(vacuum(2, Statistics.BOSE), vacuum(2, Statistics.FERMI))


@pytest.mark.parametrize("statistics, sign", [(Statistics.BOSE, 1), (Statistics.FERMI, -1)])
def test_two_particle_overlap_is_permanent_or_determinant(statistics, sign):
    rng = np.random.default_rng(7)
    psi1 = rng.normal(size=3) + 1j * rng.normal(size=3)
    psi2 = rng.normal(size=3) + 1j * rng.normal(size=3)

    def creator(psi, v):
        result = v.zero()
        for mode, weight in enumerate(psi, start=1):
            result = result + create(mode, v) * weight
        return result

    state = creator(psi1, creator(psi2, vacuum(3, statistics)))
    for i, j in itertools.combinations(range(3), 2):
        bra = create(i + 1, create(j + 1, vacuum(3, statistics)))
        expected = psi1[i] * psi2[j] + sign * psi1[j] * psi2[i]
        assert inner_product(bra, state) == pytest.approx(expected)


def test_enumerate_sector_examples():
    assert enumerate_sector(2, 2, Statistics.BOSE) == [(2, 0), (1, 1), (0, 2)]
    assert enumerate_sector(2, 2, Statistics.FERMI) == [(1, 1)]
    assert enumerate_sector(3, 0, Statistics.BOSE) == [(0, 0, 0)]
    assert enumerate_sector(3, 0, Statistics.FERMI) == [(0, 0, 0)]


@pytest.mark.parametrize("num_modes, num_particles", [(1, 3), (3, 2), (4, 3), (5, 2)])
@pytest.mark.parametrize("statistics", [Statistics.BOSE, Statistics.FERMI])
def test_enumerate_sector_size(num_modes, num_particles, statistics):
    if statistics is Statistics.FERMI and num_particles > num_modes:
        with pytest.raises(SectorError):
            enumerate_sector(num_modes, num_particles, statistics)
        return
    sector = enumerate_sector(num_modes, num_particles, statistics)
    assert len(sector) == sector_dimension(num_modes, num_particles, statistics)
    assert all(sum(occupation) == num_particles for occupation in sector)


def test_enumerate_sector_rejects_negative_particle_number():
    with pytest.raises(SectorError):
        enumerate_sector(2, -1, Statistics.BOSE)


def test_apply_word_acts_right_to_left():
    zero = vacuum(2, Statistics.FERMI)
    word = ((True, 1), (True, 2))
    assert apply_word(word, zero).allclose(create(1, create(2, zero)))


@pytest.mark.parametrize("statistics", [Statistics.BOSE, Statistics.FERMI])
def test_creation_and_annihilation_are_adjoint(statistics):
    rng = np.random.default_rng(11)
    num_modes = 3
    for num_particles in range(3):
        lower = enumerate_sector(num_modes, num_particles, statistics)
        upper = enumerate_sector(num_modes, num_particles + 1, statistics)
        w = FockVector(statistics, num_modes, dict(zip(lower, rng.normal(size=len(lower)) + 1j)))
        v = FockVector(statistics, num_modes, dict(zip(upper, rng.normal(size=len(upper)) - 1j)))
        for mode in range(1, num_modes + 1):
            assert inner_product(v, create(mode, w)) == pytest.approx(
                inner_product(annihilate(mode, v), w)
            )
