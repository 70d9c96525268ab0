import json
import logging
from typing import Dict, List, Optional, Union

from fock_entanglement.data_objects import (
    FockVector,
    Statistics,
    Symmetry,
    TwoParticleState,
)
from fock_entanglement.errors import SectorError, StateFormatError
from fock_entanglement.data_generator.generator import RandomStateGenerator

logger = logging.getLogger("fock-entanglement")

State = Union[FockVector, TwoParticleState]


def generate_random(
    seed: int,
    num_modes: int,
    num_particles: int,
    statistics: Statistics,
    symmetry: Optional[Symmetry] = None,
) -> State:
    """
    One seeded random state. The same arguments always give the same state.
    :param seed: unsigned 64-bit seed of the PCG64 generator
    :param num_modes: number of modes M
    :param num_particles: particle number N
    :param statistics: Bose or Fermi; picks the sector of the occupation-basis state
    :param symmetry: when given, a first-quantized two-particle state with that
    symmetry is returned instead (N must be 2)
    """
    generator = RandomStateGenerator(seed)
    if symmetry is None:
        return generator.fock_vector(num_modes, num_particles, Statistics(statistics))
    if num_particles != 2:
        raise SectorError(f"First-quantized states are two-particle states, got N={num_particles}")
    return generator.two_particle_state(num_modes, Symmetry(symmetry))


def state_to_dict(state: State) -> Dict:
    return state.to_dict()


def state_from_dict(data: Dict, normalize: bool = True) -> State:
    """Dispatch on the wire format: occupation-basis vectors carry 'statistics', two-particle states 'symmetry'"""
    if not isinstance(data, dict):
        raise StateFormatError(f"Expected a JSON object, got {type(data).__name__}")
    if "statistics" in data:
        state = FockVector.from_json(data)
    elif "symmetry" in data:
        state = TwoParticleState.from_json(data)
    else:
        raise StateFormatError("State object needs a 'statistics' or a 'symmetry' field")

    if normalize:
        norm = state.norm()
        if norm == 0:
            raise StateFormatError("State file holds the zero vector")
        if abs(norm - 1.0) > 1e-9:
            logger.warning(f"Input state has norm {norm:.12g}, normalizing")
            state = state.normalized()
    return state


def read_states(filepath: str, normalize: bool = True) -> List[State]:
    """Read a state file holding one state object or a list of them"""
    try:
        with open(filepath, "r", encoding="utf-8") as f:
            data = json.load(f)
    except json.JSONDecodeError as e:
        raise StateFormatError(f"{filepath} is not valid JSON: {e}") from e
    if isinstance(data, list):
        states = [state_from_dict(row, normalize) for row in data]
    else:
        states = [state_from_dict(data, normalize)]
    logger.info(f"Read {len(states)} state(s) from {filepath}")
    return states


def read_state(filepath: str, normalize: bool = True) -> State:
    states = read_states(filepath, normalize)
    if len(states) != 1:
        raise StateFormatError(f"{filepath} holds {len(states)} states, expected one")
    return states[0]


def write_states(states: Union[State, List[State]], output_file: str):
    if isinstance(states, (FockVector, TwoParticleState)):
        payload = state_to_dict(states)
    else:
        payload = [state_to_dict(state) for state in states]
    with open(output_file, "w", encoding="utf-8") as f:
        json.dump(payload, f, ensure_ascii=False, indent=4)
    logger.info(f"Wrote states to {output_file}")


def generate(
    seed: int,
    num_modes: int,
    num_particles: int = 2,
    statistics: Statistics = Statistics.BOSE,
    symmetry: Optional[Symmetry] = None,
    num_of_examples: int = 1,
    output_file: Optional[str] = None,
) -> List[State]:
    """
    Seeded batch of random states, optionally written to a JSON file.
    All states are drawn from one generator seeded once.
    """
    generator = RandomStateGenerator(seed)
    states = []
    for _ in range(num_of_examples):
        if symmetry is None:
            states.append(generator.fock_vector(num_modes, num_particles, Statistics(statistics)))
        else:
            if num_particles != 2:
                raise SectorError(
                    f"First-quantized states are two-particle states, got N={num_particles}"
                )
            states.append(generator.two_particle_state(num_modes, Symmetry(symmetry)))

    if output_file:
        write_states(states, output_file)
    else:
        logger.warning("No output_file provided, states are only returned")
    return states
