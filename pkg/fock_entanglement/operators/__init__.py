from .expression import (
    Annihilate,
    Create,
    OperatorExpr,
    Power,
    Product,
    Scalar,
    Sum,
    adjoint_word,
    expand,
    format_coefficient,
    max_mode,
    number_operator_expr,
    to_string,
)
from .parser import parse, tokenize
from .normal_order import NormalForm, NormalTerm, monomials, normal_order
from .evaluation import DEFAULT_MAX_PARTICLES, apply, expectation

__all__ = [
    "Annihilate",
    "Create",
    "OperatorExpr",
    "Power",
    "Product",
    "Scalar",
    "Sum",
    "adjoint_word",
    "expand",
    "format_coefficient",
    "max_mode",
    "number_operator_expr",
    "to_string",
    "parse",
    "tokenize",
    "NormalForm",
    "NormalTerm",
    "monomials",
    "normal_order",
    "DEFAULT_MAX_PARTICLES",
    "apply",
    "expectation",
]
