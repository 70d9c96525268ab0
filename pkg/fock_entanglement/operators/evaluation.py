from typing import Union

from fock_entanglement.data_objects import FockVector
from fock_entanglement.errors import SectorOverflowError, StatisticsMismatchError
from fock_entanglement.fock_space import annihilate, apply_word, create, inner_product
from fock_entanglement.operators.expression import (
    Annihilate,
    Create,
    OperatorExpr,
    Power,
    Product,
    Scalar,
    Sum,
)
from fock_entanglement.operators.normal_order import NormalForm

DEFAULT_MAX_PARTICLES = 16


def _check_particles(v: FockVector, max_particles: int) -> FockVector:
    if not v.is_zero():
        most = max(v.particle_numbers())
        if most > max_particles:
            raise SectorOverflowError(
                f"Operator application reached {most} particles, above the limit of {max_particles}"
            )
    return v


def _evaluate(expr: OperatorExpr, v: FockVector, max_particles: int) -> FockVector:
    if isinstance(expr, Scalar):
        return v * expr.value
    if isinstance(expr, Create):
        return _check_particles(create(expr.mode, v), max_particles)
    if isinstance(expr, Annihilate):
        return annihilate(expr.mode, v)
    if isinstance(expr, Sum):
        result = v.zero()
        for term in expr.terms:
            result = result + _evaluate(term, v, max_particles)
        return result
    if isinstance(expr, Product):
        for factor in reversed(expr.factors):
            v = _evaluate(factor, v, max_particles)
            if v.is_zero():
                break
        return v
    if isinstance(expr, Power):
        for _ in range(expr.exponent):
            v = _evaluate(expr.base, v, max_particles)
            if v.is_zero():
                break
        return v
    raise TypeError(f"Unhandled expression node {expr!r}")


def apply(
    expr: Union[OperatorExpr, NormalForm],
    v: FockVector,
    max_particles: int = DEFAULT_MAX_PARTICLES,
) -> FockVector:
    """
    Apply an operator to a state by composing creation/annihilation steps along the tree
    :param expr: expression tree or a NormalForm of matching statistics
    :param v: the state
    :param max_particles: raise SectorOverflowError beyond this particle number
    """
    if isinstance(expr, NormalForm):
        if expr.statistics is not v.statistics:
            raise StatisticsMismatchError(
                f"Operator is {expr.statistics.value} but the state is {v.statistics.value}"
            )
        result = v.zero()
        for term in expr:
            result = result + _check_particles(apply_word(term.word, v), max_particles) * term.coefficient
        return result
    return _evaluate(expr, v, max_particles)


def expectation(
    expr: Union[OperatorExpr, NormalForm],
    v: FockVector,
    max_particles: int = DEFAULT_MAX_PARTICLES,
) -> complex:
    """<v|expr|v> for a normalized state v"""
    return inner_product(v, apply(expr, v, max_particles=max_particles))
