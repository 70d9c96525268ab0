from .generator import RandomStateGenerator
from .main import (
    generate,
    generate_random,
    read_state,
    read_states,
    state_from_dict,
    state_to_dict,
    write_states,
)

__all__ = [
    "RandomStateGenerator",
    "generate",
    "generate_random",
    "read_state",
    "read_states",
    "state_from_dict",
    "state_to_dict",
    "write_states",
]
