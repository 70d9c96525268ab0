from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Tuple, Union

from fock_entanglement.data_objects import Occupation, Statistics
from fock_entanglement.errors import BipartitionSyntaxError, ModeIndexError
from fock_entanglement.operators import NormalTerm


class Block(Enum):
    ONE = "one"
    TWO = "two"
    MIXED = "mixed"


class Parity(Enum):
    EVEN = "even"
    ODD = "odd"


@dataclass(frozen=True)
class ModeBipartition:
    """
    Split of the modes 1..M into two disjoint, non-empty blocks.
    Block 1 generates the first local algebra, block 2 the second.
    """

    block1: Tuple[int, ...]
    block2: Tuple[int, ...]

    def __post_init__(self):
        block1 = tuple(sorted(set(int(mode) for mode in self.block1)))
        block2 = tuple(sorted(set(int(mode) for mode in self.block2)))
        if not block1 or not block2:
            raise ModeIndexError(f"Both blocks must be non-empty, got {block1}|{block2}")
        if set(block1) & set(block2):
            raise ModeIndexError(f"Blocks overlap on modes {sorted(set(block1) & set(block2))}")
        if min(block1 + block2) < 1:
            raise ModeIndexError("Mode indices must be positive")
        covered = set(block1) | set(block2)
        if covered != set(range(1, max(covered) + 1)):
            raise ModeIndexError(f"Blocks {block1}|{block2} do not cover 1..{max(covered)}")
        object.__setattr__(self, "block1", block1)
        object.__setattr__(self, "block2", block2)

    @property
    def num_modes(self) -> int:
        return len(self.block1) + len(self.block2)

    @classmethod
    def parse(cls, text: str) -> "ModeBipartition":
        """Parse '1,2|3,4' into blocks (1, 2) and (3, 4)"""
        if text.count("|") != 1:
            raise BipartitionSyntaxError(f"Bipartition {text!r} must contain exactly one '|'")
        first, second = text.split("|")
        try:
            block1 = [int(mode) for mode in first.split(",") if mode.strip()]
            block2 = [int(mode) for mode in second.split(",") if mode.strip()]
        except ValueError as e:
            raise BipartitionSyntaxError(f"Bipartition {text!r} has a non-integer mode: {e}") from e
        return cls(tuple(block1), tuple(block2))

    @classmethod
    def from_block(cls, block1: Iterable[int], num_modes: int) -> "ModeBipartition":
        block1 = tuple(block1)
        return cls(block1, tuple(mode for mode in range(1, num_modes + 1) if mode not in block1))

    def check_modes(self, num_modes: int):
        if self.num_modes != num_modes:
            raise ModeIndexError(
                f"Bipartition {self} covers {self.num_modes} modes, the state has {num_modes}"
            )

    def swapped(self) -> "ModeBipartition":
        return ModeBipartition(self.block2, self.block1)

    def modes(self, block: Union[Block, int]) -> Tuple[int, ...]:
        if block in (Block.ONE, 1):
            return self.block1
        if block in (Block.TWO, 2):
            return self.block2
        raise ValueError(f"Unknown block {block}")

    def split(self, occupation: Occupation) -> Tuple[Occupation, Occupation]:
        """Per-block parts of a full occupation vector"""
        return (
            tuple(occupation[mode - 1] for mode in self.block1),
            tuple(occupation[mode - 1] for mode in self.block2),
        )

    def join(self, first: Occupation, second: Occupation) -> Occupation:
        occupation = [0] * self.num_modes
        for mode, n in zip(self.block1, first):
            occupation[mode - 1] = n
        for mode, n in zip(self.block2, second):
            occupation[mode - 1] = n
        return tuple(occupation)

    def reordering_sign(self, occupation: Occupation) -> int:
        """
        Sign relating the ascending-mode basis state to the block-ordered one
        (all block-1 creators left of all block-2 creators). Counts the
        occupied (block 2, block 1) pairs that are out of block order.
        """
        block1 = set(self.block1)
        inversions = 0
        occupied_block2_below = 0
        for mode, n in enumerate(occupation, start=1):
            if not n:
                continue
            if mode in block1:
                inversions += occupied_block2_below * n
            else:
                occupied_block2_below += n
        return -1 if inversions % 2 else 1

    def __str__(self):
        return f"{','.join(map(str, self.block1))}|{','.join(map(str, self.block2))}"


@dataclass(frozen=True)
class LocalityClass:
    block: Block
    parity: Parity

    @property
    def is_local(self) -> bool:
        return self.block is not Block.MIXED


def classify_monomial(
    term: NormalTerm, bipartition: ModeBipartition, statistics: Statistics
) -> LocalityClass:
    """
    Which block a normal-ordered monomial lives in, and its degree parity
    :param term: the monomial
    :param bipartition: the mode split
    :param statistics: Bose or Fermi
    """
    # the identity counts as block 1; statistics only matter for pairing
    modes = set(term.modes)
    if modes <= set(bipartition.block1):
        block = Block.ONE
    elif modes <= set(bipartition.block2):
        block = Block.TWO
    else:
        block = Block.MIXED
    return LocalityClass(block, Parity.ODD if term.degree % 2 else Parity.EVEN)


def is_admissible_pair(
    first: LocalityClass, second: LocalityClass, statistics: Statistics
) -> bool:
    """
    Whether (A1, A2) may be multiplied into a local operator: A1 from block 1,
    A2 from block 2, and for fermions not both of odd degree
    """
    if first.block is not Block.ONE or second.block is not Block.TWO:
        return False
    if Statistics(statistics) is Statistics.FERMI:
        return not (first.parity is Parity.ODD and second.parity is Parity.ODD)
    return True
