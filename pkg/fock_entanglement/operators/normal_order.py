import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, Iterator, List, Tuple

from fock_entanglement.data_objects import PRUNE_THRESHOLD, Statistics
from fock_entanglement.errors import StatisticsMismatchError
from fock_entanglement.operators.expression import (
    OperatorExpr,
    Scalar,
    Sum,
    Word,
    expand,
    format_coefficient,
    word_expr,
)

# (creators, annihilators) of a normal-ordered monomial
MonomialKey = Tuple[Tuple[int, ...], Tuple[int, ...]]


@dataclass(frozen=True)
class NormalTerm:
    """coefficient * ad(c_1)...ad(c_k) a(a_1)...a(a_l), both mode lists ascending"""

    coefficient: complex
    creators: Tuple[int, ...]
    annihilators: Tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.creators) + len(self.annihilators)

    @property
    def modes(self) -> Tuple[int, ...]:
        return tuple(sorted(set(self.creators) | set(self.annihilators)))

    @property
    def key(self) -> MonomialKey:
        return self.creators, self.annihilators

    @property
    def word(self) -> Word:
        return tuple((True, mode) for mode in self.creators) + tuple(
            (False, mode) for mode in self.annihilators
        )

    def monomial_string(self) -> str:
        """The operator part alone, e.g. 'ad(1)*a(2)'; '1' for the identity"""
        parts = [f"ad({mode})" for mode in self.creators]
        parts += [f"a({mode})" for mode in self.annihilators]
        return "*".join(parts) if parts else "1"

    def to_expression(self) -> OperatorExpr:
        return word_expr(self.word, self.coefficient)

    def __str__(self):
        if not self.degree:
            return format_coefficient(self.coefficient)
        return f"{format_coefficient(self.coefficient)}*{self.monomial_string()}"


class NormalForm:
    """
    An operator written as a sum of normal-ordered monomials,
    creators left of annihilators, with duplicate monomials merged
    and negligible coefficients dropped.
    """

    def __init__(self, statistics: Statistics, terms: Iterable[NormalTerm] = ()):
        self.statistics = Statistics(statistics)
        merged: Dict[MonomialKey, complex] = {}
        for term in terms:
            merged[term.key] = merged.get(term.key, 0j) + complex(term.coefficient)
        self._terms = tuple(
            NormalTerm(coefficient, creators, annihilators)
            for (creators, annihilators), coefficient in sorted(merged.items())
            if abs(coefficient) > PRUNE_THRESHOLD
        )

    @classmethod
    def from_mapping(cls, statistics: Statistics, mapping: Dict[MonomialKey, complex]) -> "NormalForm":
        return cls(statistics, (NormalTerm(c, cr, an) for (cr, an), c in mapping.items()))

    @property
    def terms(self) -> Tuple[NormalTerm, ...]:
        return self._terms

    def __iter__(self) -> Iterator[NormalTerm]:
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def coefficient(self, creators: Tuple[int, ...], annihilators: Tuple[int, ...] = ()) -> complex:
        for term in self._terms:
            if term.key == (tuple(creators), tuple(annihilators)):
                return term.coefficient
        return 0j

    def max_degree(self) -> int:
        return max((term.degree for term in self._terms), default=0)

    def equals(self, other: "NormalForm", tol: float = 1e-12) -> bool:
        """Termwise comparison of two normal forms"""
        if self.statistics is not other.statistics:
            return False
        mine = {term.key: term.coefficient for term in self._terms}
        theirs = {term.key: term.coefficient for term in other._terms}
        return all(abs(mine.get(key, 0j) - theirs.get(key, 0j)) <= tol for key in set(mine) | set(theirs))

    def __eq__(self, other):
        if not isinstance(other, NormalForm):
            return NotImplemented
        return self.equals(other)

    def __hash__(self):
        return hash((self.statistics, tuple(term.key for term in self._terms)))

    def to_expression(self) -> OperatorExpr:
        if not self._terms:
            return Scalar(0.0)
        if len(self._terms) == 1:
            return self._terms[0].to_expression()
        return Sum(tuple(term.to_expression() for term in self._terms))

    def __str__(self):
        if not self._terms:
            return format_coefficient(0.0)
        return " + ".join(str(term) for term in self._terms)

    def compact_string(self) -> str:
        """Like str(), but unit coefficients are left out: 'ad(1) + (0.5,0)*ad(2)'"""
        if not self._terms:
            return format_coefficient(0.0)
        parts = []
        for term in self._terms:
            if term.degree and abs(term.coefficient - 1) <= 1e-12:
                parts.append(term.monomial_string())
            else:
                parts.append(str(term))
        return " + ".join(parts)

    def __repr__(self):
        return f"NormalForm({self.statistics.value}, {self})"


def _in_order(left, right, statistics: Statistics) -> bool:
    left_creates, left_mode = left
    right_creates, right_mode = right
    if left_creates != right_creates:
        return left_creates
    if statistics is Statistics.FERMI:
        return left_mode < right_mode
    return left_mode <= right_mode


@lru_cache(maxsize=None)
def _order_word(word: Word, statistics: Statistics) -> Tuple[Tuple[MonomialKey, complex], ...]:
    # Rewrite the first out-of-order adjacent pair, recurse on the results.
    # Every step lowers either the inversion count or the degree.
    sign = statistics.exchange_sign
    for position in range(len(word) - 1):
        left, right = word[position], word[position + 1]
        if _in_order(left, right, statistics):
            continue
        prefix, suffix = word[:position], word[position + 2:]
        if left == right:
            # Fermi only: a repeated ladder operator squares to zero
            return ()
        result: Dict[MonomialKey, complex] = {}
        for key, coefficient in _order_word(prefix + (right, left) + suffix, statistics):
            result[key] = result.get(key, 0j) + sign * coefficient
        if not left[0] and right[0] and left[1] == right[1]:
            for key, coefficient in _order_word(prefix + suffix, statistics):
                result[key] = result.get(key, 0j) + coefficient
        return tuple(result.items())
    creators = tuple(mode for creates, mode in word if creates)
    annihilators = tuple(mode for creates, mode in word if not creates)
    return (((creators, annihilators), 1.0 + 0j),)


def normal_order(expr: OperatorExpr, statistics: Statistics) -> NormalForm:
    """
    Bring an operator expression to normal order using the
    (anti)commutation relations a_i ad_j = +/- ad_j a_i + delta_ij
    :param expr: the expression tree (see parser.parse)
    :param statistics: Bose uses commutators, Fermi anticommutators
    :return: NormalForm equal to expr as an operator on every sector
    """
    statistics = Statistics(statistics)
    if isinstance(expr, NormalForm):
        if expr.statistics is not statistics:
            raise StatisticsMismatchError(
                f"Normal form is {expr.statistics.value}, requested {statistics.value}"
            )
        return expr
    accumulated: Dict[MonomialKey, complex] = {}
    for coefficient, word in expand(expr):
        for key, factor in _order_word(word, statistics):
            accumulated[key] = accumulated.get(key, 0j) + coefficient * factor
    return NormalForm.from_mapping(statistics, accumulated)


def monomials(
    modes: Iterable[int], statistics: Statistics, max_degree: int, min_degree: int = 1
) -> List[NormalTerm]:
    """
    Every normal-ordered monomial supported on `modes` with degree in
    [min_degree, max_degree], ordered by degree then lexicographically.
    """
    statistics = Statistics(statistics)
    modes = sorted(set(modes))
    generated = []
    for degree in range(min_degree, max_degree + 1):
        for creator_count in range(degree, -1, -1):
            for creators in _multisets(modes, creator_count, statistics):
                for annihilators in _multisets(modes, degree - creator_count, statistics):
                    generated.append(NormalTerm(1.0 + 0j, creators, annihilators))
    return generated


def _multisets(modes: List[int], size: int, statistics: Statistics) -> List[Tuple[int, ...]]:
    if statistics is Statistics.FERMI:
        return list(itertools.combinations(modes, size))
    return list(itertools.combinations_with_replacement(modes, size))
