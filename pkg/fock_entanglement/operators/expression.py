from dataclasses import dataclass
from typing import List, Tuple, Union

# a ladder operator inside a word: (is_creator, mode)
Ladder = Tuple[bool, int]
Word = Tuple[Ladder, ...]


@dataclass(frozen=True)
class Scalar:
    value: complex

    def __post_init__(self):
        object.__setattr__(self, "value", complex(self.value))


@dataclass(frozen=True)
class Create:
    mode: int

    def __post_init__(self):
        if self.mode < 1:
            raise ValueError(f"Mode index must be positive, got {self.mode}")


@dataclass(frozen=True)
class Annihilate:
    mode: int

    def __post_init__(self):
        if self.mode < 1:
            raise ValueError(f"Mode index must be positive, got {self.mode}")


@dataclass(frozen=True)
class Sum:
    terms: Tuple["OperatorExpr", ...]

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))


@dataclass(frozen=True)
class Product:
    factors: Tuple["OperatorExpr", ...]

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))


@dataclass(frozen=True)
class Power:
    base: "OperatorExpr"
    exponent: int

    def __post_init__(self):
        if int(self.exponent) != self.exponent or self.exponent < 0:
            raise ValueError(f"Exponent must be a non-negative integer, got {self.exponent}")


OperatorExpr = Union[Scalar, Create, Annihilate, Sum, Product, Power]


def number_operator_expr(modes) -> OperatorExpr:
    """sum_j ad(j)*a(j) over the given modes"""
    return Sum(tuple(Product((Create(j), Annihilate(j))) for j in modes))


def word_expr(word: Word, coefficient: complex = 1.0) -> OperatorExpr:
    factors: List[OperatorExpr] = []
    if coefficient != 1:
        factors.append(Scalar(coefficient))
    factors.extend(Create(mode) if is_creator else Annihilate(mode) for is_creator, mode in word)
    if not factors:
        return Scalar(1.0)
    if len(factors) == 1:
        return factors[0]
    return Product(tuple(factors))


def max_mode(expr: OperatorExpr) -> int:
    if isinstance(expr, (Create, Annihilate)):
        return expr.mode
    if isinstance(expr, Scalar):
        return 0
    if isinstance(expr, Power):
        return max_mode(expr.base)
    children = expr.terms if isinstance(expr, Sum) else expr.factors
    return max((max_mode(child) for child in children), default=0)


def expand(expr: OperatorExpr) -> List[Tuple[complex, Word]]:
    """
    Distribute products over sums: returns a list of (coefficient, word)
    whose sum equals the expression. Words are not reordered.
    """
    if isinstance(expr, Scalar):
        return [(expr.value, ())]
    if isinstance(expr, Create):
        return [(1.0 + 0j, ((True, expr.mode),))]
    if isinstance(expr, Annihilate):
        return [(1.0 + 0j, ((False, expr.mode),))]
    if isinstance(expr, Sum):
        expanded = []
        for term in expr.terms:
            expanded.extend(expand(term))
        return expanded
    if isinstance(expr, Product):
        expanded = [(1.0 + 0j, ())]
        for factor in expr.factors:
            expanded = _multiply(expanded, expand(factor))
        return expanded
    if isinstance(expr, Power):
        expanded = [(1.0 + 0j, ())]
        base = expand(expr.base)
        for _ in range(expr.exponent):
            expanded = _multiply(expanded, base)
        return expanded
    raise TypeError(f"Unhandled expression node {expr!r}")


def _multiply(left, right):
    return [
        (c1 * c2, w1 + w2)
        for c1, w1 in left
        for c2, w2 in right
        if c1 * c2 != 0
    ]


def format_coefficient(value: complex) -> str:
    """Complex literal in the expression grammar, 17 significant digits"""
    value = complex(value)
    return f"({value.real:.17g},{value.imag:.17g})"


def to_string(expr: OperatorExpr) -> str:
    """Render an expression in the parser's grammar"""
    if isinstance(expr, Scalar):
        return format_coefficient(expr.value)
    if isinstance(expr, Create):
        return f"ad({expr.mode})"
    if isinstance(expr, Annihilate):
        return f"a({expr.mode})"
    if isinstance(expr, Sum):
        if not expr.terms:
            return "(0,0)"
        return " + ".join(to_string(term) for term in expr.terms)
    if isinstance(expr, Product):
        if not expr.factors:
            return "(1,0)"
        return "*".join(_wrapped(factor) for factor in expr.factors)
    if isinstance(expr, Power):
        return f"{_wrapped(expr.base, wrap_products=True)}^{expr.exponent}"
    raise TypeError(f"Unhandled expression node {expr!r}")


def _wrapped(expr: OperatorExpr, wrap_products: bool = False) -> str:
    text = to_string(expr)
    if isinstance(expr, Sum) or (wrap_products and isinstance(expr, (Product, Power))):
        return f"({text})"
    return text


def adjoint_word(word: Word) -> Word:
    """(w_1 ... w_n)^dagger = w_n^dagger ... w_1^dagger"""
    return tuple((not is_creator, mode) for is_creator, mode in reversed(word))
