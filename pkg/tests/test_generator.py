import os

import numpy as np
import pytest

from fock_entanglement import FockVector, Statistics, Symmetry, TwoParticleState, generate_random
from fock_entanglement.data_generator import (
    RandomStateGenerator,
    generate,
    read_state,
    read_states,
    state_from_dict,
    write_states,
)
from fock_entanglement.errors import SectorError, StateFormatError
from fock_entanglement.separability import ModeBipartition, Parity


def test_generate_random_is_deterministic():
    first = generate_random(7, 3, 2, Statistics.BOSE)
    second = generate_random(7, 3, 2, Statistics.BOSE)
    assert first.to_dict() == second.to_dict()
    assert first.norm() == pytest.approx(1)
    assert not first.allclose(generate_random(8, 3, 2, Statistics.BOSE))


def test_generate_random_covers_the_whole_sector():
    v = generate_random(0, 3, 2, Statistics.BOSE)
    assert len(v.support()) == 6
    assert v.particle_numbers() == [2]


def test_fermi_states_have_no_double_occupation():
    for seed in range(20):
        v = generate_random(seed, 4, 2, Statistics.FERMI)
        assert len(v.support()) == 6
        assert all(max(occupation) <= 1 for occupation in v.support())


@pytest.mark.parametrize("symmetry", [Symmetry.SYMMETRIC, Symmetry.ANTISYMMETRIC])
def test_generate_random_two_particle_state(symmetry):
    t = generate_random(3, 4, 2, Statistics.BOSE, symmetry=symmetry)
    assert isinstance(t, TwoParticleState)
    sign = 1 if symmetry is Symmetry.SYMMETRIC else -1
    assert np.array_equal(t.coefficients, sign * t.coefficients.T)
    assert t.norm() == pytest.approx(1)


def test_first_quantized_states_need_two_particles():
    with pytest.raises(SectorError):
        generate_random(0, 3, 3, Statistics.BOSE, symmetry=Symmetry.SYMMETRIC)


def test_seed_must_fit_in_64_bits():
    with pytest.raises(ValueError):
        RandomStateGenerator(2 ** 64)
    with pytest.raises(ValueError):
        RandomStateGenerator(-1)


def test_parity_restricted_fermi_vector():
    bipartition = ModeBipartition.parse("1,2|3,4")
    generator = RandomStateGenerator(5)
    even = generator.fock_vector_with_parity(4, 2, bipartition)
    odd = generator.fock_vector_with_parity(4, 2, bipartition, Parity.ODD)
    assert all(sum(bipartition.split(occupation)[0]) % 2 == 0 for occupation in even.support())
    assert all(sum(bipartition.split(occupation)[0]) % 2 == 1 for occupation in odd.support())
    with pytest.raises(SectorError):
        generator.fock_vector_with_parity(2, 2, ModeBipartition.parse("1|2"), Parity.EVEN)


def test_unitary_is_unitary():
    u = RandomStateGenerator(9).unitary(5)
    assert np.allclose(u.conj().T @ u, np.eye(5))


def test_bose_entangled_rank():
    t = RandomStateGenerator(2).bose_entangled(5, rank=3)
    singular_values = np.linalg.svd(t.coefficients, compute_uv=False)
    assert np.sum(singular_values > 1e-9) == 3
    with pytest.raises(SectorError):
        RandomStateGenerator(2).bose_entangled(3, rank=4)


def test_fermi_entangled_needs_four_modes():
    with pytest.raises(SectorError):
        RandomStateGenerator(0).fermi_entangled(3)


def test_generator_correct_output(tmp_path):
    output = str(tmp_path / "generated_test.json")
    states = generate(
        seed=1,
        num_modes=3,
        num_particles=2,
        statistics=Statistics.FERMI,
        num_of_examples=4,
        output_file=output,
    )
    read_back = read_states(output)
    assert len(read_back) == 4
    for original, state in zip(states, read_back):
        assert state.allclose(original)


def test_write_and_read_single_two_particle_state(tmp_path):
    output = str(tmp_path / "state.json")
    t = generate_random(4, 3, 2, Statistics.BOSE, symmetry=Symmetry.ANTISYMMETRIC)
    write_states(t, output)
    read_back = read_state(output)
    assert np.allclose(read_back.coefficients, t.coefficients)


def test_read_state_rejects_multiple_states():
    dir_path = os.path.dirname(os.path.realpath(__file__))
    with pytest.raises(StateFormatError):
        read_state(os.path.join(dir_path, "data/crosscheck_batch.json"))


def test_read_malformed_files(tmp_path):
    dir_path = os.path.dirname(os.path.realpath(__file__))
    with pytest.raises(StateFormatError):
        read_state(os.path.join(dir_path, "data/malformed_state.json"))
    broken = tmp_path / "broken.json"
    broken.write_text("{not json", encoding="utf-8")
    with pytest.raises(StateFormatError):
        read_states(str(broken))
    for amplitudes in ([{"re": 1.0, "im": 0.0}], 3, [{"occ": "x1", "re": 1.0}], [{"occ": [1, 0], "re": "one"}]):
        data = {"statistics": "bose", "num_modes": 2, "amplitudes": amplitudes}
        with pytest.raises(StateFormatError):
            state_from_dict(data)


def test_state_from_dict_normalizes(caplog):
    data = FockVector(Statistics.BOSE, 2, {(1, 0): 3.0, (0, 1): 4.0}).to_dict()
    v = state_from_dict(data)
    assert v.amplitude((1, 0)) == pytest.approx(0.6)
    assert "normalizing" in caplog.text
    assert state_from_dict(data, normalize=False).norm() == pytest.approx(5)


def test_state_from_dict_rejects_unknown_objects():
    with pytest.raises(StateFormatError):
        state_from_dict({"num_modes": 2})
    with pytest.raises(StateFormatError):
        state_from_dict([1, 2])
    with pytest.raises(StateFormatError):
        state_from_dict({"statistics": "bose", "num_modes": 2, "amplitudes": []})
