import json
import os

import numpy as np
import pytest

from fock_entanglement import (
    FockVector,
    SingleParticleVector,
    Statistics,
    Symmetry,
    TwoParticleState,
)
from fock_entanglement.errors import (
    ModeIndexError,
    StateFormatError,
    StatisticsMismatchError,
)


def test_fock_vector_prunes_tiny_amplitudes():
    v = FockVector(Statistics.BOSE, 2, {(1, 0): 1.0, (0, 1): 1e-16})
    assert v.support() == [(1, 0)]


def test_fock_vector_rejects_fermi_double_occupation():
    with pytest.raises(StatisticsMismatchError):
        FockVector(Statistics.FERMI, 2, {(2, 0): 1.0})


def test_fock_vector_rejects_wrong_occupation_length():
    with pytest.raises(ModeIndexError):
        FockVector(Statistics.BOSE, 3, {(1, 0): 1.0})


def test_fock_vector_arithmetic():
    first = FockVector.basis(Statistics.BOSE, (1, 0))
    second = FockVector.basis(Statistics.BOSE, (0, 1))
    total = (first + second).normalized()
    assert total.norm() == pytest.approx(1)
    assert total.amplitude((1, 0)) == pytest.approx(1 / np.sqrt(2))
    assert (first - first).is_zero()


def test_fock_vector_rejects_mixed_statistics():
    with pytest.raises(StatisticsMismatchError):
        FockVector.basis(Statistics.BOSE, (1, 0)) + FockVector.basis(Statistics.FERMI, (1, 0))


def test_fock_vector_json_lists_occupations_in_ascending_order():
    v = FockVector(Statistics.BOSE, 2, {(2, 0): 0.5, (0, 2): 0.5j, (1, 1): 0.5})
    data = v.to_dict()
    assert [entry["occ"] for entry in data["amplitudes"]] == [[0, 2], [1, 1], [2, 0]]
    assert FockVector.from_json(json.loads(json.dumps(data))).allclose(v)


def test_fock_vector_from_json_rejects_fermi_double_occupation():
    data = {
        "statistics": "fermi",
        "num_modes": 2,
        "amplitudes": [{"occ": [2, 0], "re": 1.0, "im": 0.0}],
    }
    with pytest.raises(StateFormatError):
        FockVector.from_json(data)


def test_fock_vector_from_json_rejects_missing_fields():
    with pytest.raises(StateFormatError):
        FockVector.from_json({"statistics": "bose"})


def test_single_particle_phase_convention():
    phi = SingleParticleVector([0.1j, -0.9j]).with_phase_convention()
    assert phi.components[1].real == pytest.approx(0.9)
    assert phi.components[1].imag == pytest.approx(0)


def test_single_particle_overlap_conjugates_first_argument():
    phi = SingleParticleVector([1j, 0])
    chi = SingleParticleVector([1, 0])
    assert phi.overlap(chi) == pytest.approx(-1j)


def test_two_particle_state_checks_symmetry():
    with pytest.raises(ValueError):
        TwoParticleState([[0, 1], [0, 0]], Symmetry.SYMMETRIC)
    with pytest.raises(ValueError):
        TwoParticleState([[1, 1], [-1, 0]], Symmetry.ANTISYMMETRIC)
    TwoParticleState([[0, 1], [0, 0]], Symmetry.NONE)


def test_two_particle_from_product_is_normalized():
    e1 = SingleParticleVector.unit(2, 1)
    e2 = SingleParticleVector.unit(2, 2)
    t = TwoParticleState.from_product(e1, e2, Symmetry.ANTISYMMETRIC)
    assert t.norm() == pytest.approx(1)
    assert t.coefficients[0, 1] == pytest.approx(1 / np.sqrt(2))
    assert t.coefficients[1, 0] == pytest.approx(-1 / np.sqrt(2))


def test_two_particle_json_round_trip_of_fixture_file():
    dir_path = os.path.dirname(os.path.realpath(__file__))
    with open(os.path.join(dir_path, "data/bose_case3.json"), encoding="utf-8") as f:
        t = TwoParticleState.from_json(json.load(f))
    assert t.symmetry is Symmetry.SYMMETRIC
    assert t.dim == 3
    restored = TwoParticleState.from_json(json.loads(json.dumps(t.to_dict())))
    np.testing.assert_allclose(restored.coefficients, t.coefficients)


def test_two_particle_from_json_rejects_shape_mismatch():
    data = {"symmetry": "sym", "dim": 3, "coefficients": [[1, 0], [0, 1]]}
    with pytest.raises(StateFormatError):
        TwoParticleState.from_json(data)
