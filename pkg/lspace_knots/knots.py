"""Expressions for positive iterated torus knots and their classical invariants"""
from functools import lru_cache
from math import gcd
from typing import Any, Dict, Union

from pydantic import BaseModel, Extra, StrictInt, root_validator

from lspace_knots.config import CACHE_MAXSIZE
from lspace_knots.exceptions import InvalidParameters, OutsideP
from lspace_knots.poly import (
    ONE,
    LaurentPoly,
    degree,
    divide_exact,
    mul,
    shift,
    substitute_power,
)


class KnotNode(BaseModel):
    """Base of the expression nodes, immutable and hashable"""

    class Config:
        frozen = True
        extra = Extra.forbid

    def __str__(self) -> str:
        return render(self)  # type: ignore


class Unknot(KnotNode):
    """The trivial knot, written U"""


class Torus(KnotNode):
    """The (p,q)-torus knot, written T(p,q), stored with p < q"""

    p: StrictInt
    q: StrictInt

    @root_validator(skip_on_failure=True)
    def _canonical_order(cls, values: Dict[str, Any]) -> Dict[str, Any]:
        # T(p,q) = T(q,p)
        p, q = values["p"], values["q"]
        if 1 < q < p:
            values["p"], values["q"] = q, p
        return values


class Cable(KnotNode):
    """The (p,q)-cable of companion, written C(p,q;companion)"""

    p: StrictInt
    q: StrictInt
    companion: "KnotExpr"


KnotExpr = Union[Unknot, Torus, Cable]

Cable.update_forward_refs()


def render(expr: KnotExpr) -> str:
    """canonical text of an expression, parse_expression reads it back"""
    if isinstance(expr, Unknot):
        return "U"
    if isinstance(expr, Torus):
        return f"T({expr.p},{expr.q})"
    if isinstance(expr, Cable):
        return f"C({expr.p},{expr.q};{render(expr.companion)})"
    raise TypeError(f"{type(expr).__name__} is not a knot expression")


def depth(expr: KnotExpr) -> int:
    """nesting depth: U is 0, a torus knot 1, each cable adds 1"""
    if isinstance(expr, Unknot):
        return 0
    if isinstance(expr, Torus):
        return 1
    return 1 + depth(expr.companion)


def _check_pair(node: Union[Torus, Cable]) -> None:
    if node.p <= 1:
        raise InvalidParameters(
            node, f"p must be greater than 1, got {node.p} (K_{{1,q}} is K itself)"
        )
    if gcd(node.p, node.q) != 1:
        raise InvalidParameters(
            node,
            f"p and q must be coprime, gcd({node.p},{node.q}) = {gcd(node.p, node.q)}",
        )


def validate(expr: KnotExpr) -> KnotExpr:
    """check every node of the expression and return it unchanged

    :raises InvalidParameters: naming the first offending node
    """
    if isinstance(expr, Unknot):
        return expr
    if isinstance(expr, Torus):
        _check_pair(expr)
        if expr.q < 2:
            raise InvalidParameters(
                expr,
                f"q must be at least 2, T(p,{expr.q}) is not a positive torus knot",
            )
        return expr
    if isinstance(expr, Cable):
        _check_pair(expr)
        if expr.q < 1:
            raise InvalidParameters(expr, f"q must be positive, got {expr.q}")
        if isinstance(expr.companion, Unknot):
            raise InvalidParameters(
                expr,
                f"a cable of the unknot is a torus knot, write T({expr.p},{expr.q})",
            )
        validate(expr.companion)
        return expr
    raise TypeError(f"{type(expr).__name__} is not a knot expression")


@lru_cache(maxsize=CACHE_MAXSIZE)
def torus_polynomial(p: int, q: int) -> LaurentPoly:
    """t^-(p-1)(q-1)/2 (t^pq - 1)(t - 1) / ((t^p - 1)(t^q - 1)) for coprime p, q >= 1"""
    minus_one = LaurentPoly.constant(-1)
    numerator = mul(
        LaurentPoly.monomial(p * q) + minus_one, LaurentPoly.monomial(1) + minus_one
    )
    denominator = mul(
        LaurentPoly.monomial(p) + minus_one, LaurentPoly.monomial(q) + minus_one
    )
    return shift(divide_exact(numerator, denominator), -(p - 1) * (q - 1) // 2)


@lru_cache(maxsize=CACHE_MAXSIZE)
def _alexander(expr: KnotExpr) -> LaurentPoly:
    if isinstance(expr, Unknot):
        return ONE
    if isinstance(expr, Torus):
        return torus_polynomial(expr.p, expr.q)
    return mul(
        substitute_power(_alexander(expr.companion), expr.p),
        torus_polynomial(expr.p, expr.q),
    )


def alexander(expr: KnotExpr) -> LaurentPoly:
    """symmetrized Alexander polynomial

    a cable's polynomial is the companion's with t -> t^p times the pattern torus knot's
    """
    return _alexander(validate(expr))


def genus(expr: KnotExpr) -> int:
    """Seifert genus, read off as the top Alexander degree (the family is fibered)"""
    return degree(alexander(expr))


def cable_genus(p: int, q: int, companion_genus: int) -> int:
    return p * companion_genus + (p - 1) * (q - 1) // 2


def tau(expr: KnotExpr) -> int:
    """Ozsvath-Szabo tau, by tau(K_{p,q}) = p tau(K) + (p-1)(q-1)/2

    :raises OutsideP: a node has a non-positive parameter, the formula does not apply
    """
    if isinstance(expr, Unknot):
        return 0
    if expr.p < 1 or expr.q < 1:
        raise OutsideP(f"{render(expr)} has a non-positive parameter")
    if isinstance(expr, Torus):
        return (expr.p - 1) * (expr.q - 1) // 2
    return cable_genus(expr.p, expr.q, tau(expr.companion))
