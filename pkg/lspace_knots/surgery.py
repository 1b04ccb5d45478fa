"""Ranks of HF-hat of positive rational surgeries on knots with g = tau.

rk HF-hat(S^3_{a/b}(K)) = a + b s_K + t_K^{a/b}, t_K^{a/b} = 2 max(0, (2g(K)-1)b - a)
"""
import logging
import re
from fractions import Fraction
from math import gcd
from typing import Any, Dict, List, Literal, Tuple, Union

from pydantic import BaseModel, Extra, StrictInt, root_validator

from lspace_knots.exceptions import (
    InvalidParameters,
    InvalidSlope,
    NonPositiveSlope,
    NotACable,
    ParseError,
)
from lspace_knots.knots import Cable, KnotExpr, Torus, genus, render, validate
from lspace_knots.lspace import s_invariant

logger = logging.getLogger("surgery")

_SLOPE = re.compile(r"\s*(-?\d+)(?:\s*/\s*(-?\d+))?\s*")


def _check_slope(a: int, b: int) -> None:
    if b < 1:
        raise InvalidSlope(f"denominator of {a}/{b} must be positive")
    divisor = gcd(a, b)
    if divisor != 1:
        raise InvalidSlope(
            f"{a}/{b} is not reduced, write {a // divisor}/{b // divisor}"
        )


class Slope(BaseModel):
    """Reduced surgery coefficient a/b with b >= 1"""

    a: StrictInt
    b: StrictInt = 1

    class Config:
        frozen = True
        extra = Extra.forbid

    @root_validator(skip_on_failure=True)
    def _reduced(cls, values: Dict[str, Any]) -> Dict[str, Any]:
        _check_slope(values["a"], values["b"])
        return values

    def as_fraction(self) -> Fraction:
        return Fraction(self.a, self.b)

    def __str__(self) -> str:
        return str(self.a) if self.b == 1 else f"{self.a}/{self.b}"


def parse_slope(text: str) -> Slope:
    """read "A/B" or "A"

    :raises ParseError: text is not a slope
    :raises InvalidSlope: the fraction is not reduced or B < 1
    """
    match = _SLOPE.match(text)
    if match is None or match.end() != len(text):
        position = match.end() if match is not None else len(text) - len(text.lstrip())
        raise ParseError(f"expected a slope A/B or A in {text!r}", position)
    a = int(match.group(1))
    b = int(match.group(2)) if match.group(2) is not None else 1
    _check_slope(a, b)
    return Slope(a=a, b=b)


def torsion_t(g: int, slope: Slope) -> int:
    """t_K^{a/b} for a knot of genus g, zero iff a/b >= 2g - 1"""
    return 2 * max(0, (2 * g - 1) * slope.b - slope.a)


def rank_surgery(expr: KnotExpr, slope: Slope) -> int:
    """rank of HF-hat of a/b surgery on expr

    :raises NonPositiveSlope: a < 1
    """
    if slope.a < 1:
        raise NonPositiveSlope(f"only positive surgeries are supported, got {slope}")
    return slope.a + slope.b * s_invariant(expr) + torsion_t(genus(expr), slope)


def is_lspace_surgery(expr: KnotExpr, slope: Slope) -> bool:
    """the a/b surgery has |H_1| = a, it is an L-space when the rank is exactly a"""
    return rank_surgery(expr, slope) == slope.a


def lspace_slopes(expr: KnotExpr, max_a: int, max_b: int) -> List[Slope]:
    """reduced positive slopes a/b, a <= max_a and b <= max_b, giving L-spaces"""
    slopes = [
        Slope(a=a, b=b)
        for a in range(1, max_a + 1)
        for b in range(1, max_b + 1)
        if gcd(a, b) == 1
    ]
    return sorted(
        (slope for slope in slopes if is_lspace_surgery(expr, slope)),
        key=Slope.as_fraction,
    )


def lens_space_slopes(expr: Torus) -> Tuple[Slope, Slope]:
    """pq - 1 and pq + 1 surgeries on T(p,q) are lens spaces"""
    if not isinstance(expr, Torus):
        raise InvalidParameters(expr, "lens space surgeries are listed for torus knots")
    validate(expr)
    pq = expr.p * expr.q
    return Slope(a=pq - 1), Slope(a=pq + 1)


class Lens(BaseModel):
    """Lens space L(p,q)"""

    kind: Literal["lens"] = "lens"
    p: StrictInt
    q: StrictInt

    class Config:
        frozen = True
        extra = Extra.forbid

    @root_validator(skip_on_failure=True)
    def _coprime(cls, values: Dict[str, Any]) -> Dict[str, Any]:
        p, q = values["p"], values["q"]
        if p < 1:
            raise ValueError(f"L({p},{q}) needs p >= 1")
        if gcd(p, q) != 1:
            raise ValueError(f"L({p},{q}) needs coprime p and q")
        return values

    @property
    def rank(self) -> int:
        # a genus 1 Heegaard diagram has p intersection points
        return self.p

    @property
    def h1_order(self) -> int:
        return self.p

    def __str__(self) -> str:
        return f"L({self.p},{self.q})"


class KnotSurgery(BaseModel):
    """S^3_{a/b}(K)"""

    kind: Literal["knot_surgery"] = "knot_surgery"
    knot: KnotExpr
    slope: Slope

    class Config:
        frozen = True
        extra = Extra.forbid

    @property
    def rank(self) -> int:
        return rank_surgery(self.knot, self.slope)

    @property
    def h1_order(self) -> int:
        return self.slope.a

    def __str__(self) -> str:
        return f"S3_{self.slope}({render(self.knot)})"


class SurgeryDescription(BaseModel):
    """Connected sum of summands with its HF-hat rank and |H_1|"""

    summands: List[Union[Lens, KnotSurgery]]
    rank: int
    h1_order: int

    class Config:
        allow_mutation = False

    @root_validator(skip_on_failure=True)
    def _rank_bound(cls, values: Dict[str, Any]) -> Dict[str, Any]:
        order = 1
        for summand in values["summands"]:
            order *= summand.h1_order
        if values["h1_order"] != order:
            raise ValueError(
                f"|H_1| of the summands is {order}, not {values['h1_order']}"
            )
        if values["rank"] < values["h1_order"]:
            raise ValueError("rank of HF-hat is bounded below by |H_1|")
        return values

    @property
    def is_lspace(self) -> bool:
        return self.rank == self.h1_order

    def __str__(self) -> str:
        return " # ".join(str(summand) for summand in self.summands)


def cable_surgery_decomposition(expr: Cable) -> SurgeryDescription:
    """pq surgery on K_{p,q} is L(p,q) # S^3_{q/p}(K), ranks multiply under #"""
    if not isinstance(expr, Cable):
        raise NotACable(f"{render(expr)} is not a cable")
    validate(expr)
    lens = Lens(p=expr.p, q=expr.q)
    companion = KnotSurgery(knot=expr.companion, slope=Slope(a=expr.q, b=expr.p))
    return SurgeryDescription(
        summands=[lens, companion],
        rank=lens.rank * companion.rank,
        h1_order=expr.p * expr.q,
    )


class IdentityReport(BaseModel):
    """Both sides of the three identities checked on a cable"""

    torsion_companion: int
    torsion_cable: int
    rank_direct: int
    rank_decomposed: int
    s_cable: int
    s_recursion: int

    class Config:
        frozen = True

    @property
    def torsion_holds(self) -> bool:
        return self.torsion_companion == self.torsion_cable

    @property
    def rank_holds(self) -> bool:
        return self.rank_direct == self.rank_decomposed

    @property
    def s_holds(self) -> bool:
        return self.s_cable == self.s_recursion

    @property
    def holds(self) -> bool:
        return self.torsion_holds and self.rank_holds and self.s_holds


def main_identity_report(expr: Cable) -> IdentityReport:
    """compare rank of pq surgery on K_{p,q} computed directly
    and through L(p,q) # S^3_{q/p}(K)

    checks t_K^{q/p} = t_{K_{p,q}}^{pq}, the two ranks, and
    s(K_{p,q}) = p^2 s(K) + (p-1) t_K^{q/p}
    """
    if not isinstance(expr, Cable):
        raise NotACable(f"{render(expr)} is not a cable")
    validate(expr)
    p, q, companion = expr.p, expr.q, expr.companion
    t_companion = torsion_t(genus(companion), Slope(a=q, b=p))
    pq = Slope(a=p * q)
    report = IdentityReport(
        torsion_companion=t_companion,
        torsion_cable=torsion_t(genus(expr), pq),
        rank_direct=rank_surgery(expr, pq),
        rank_decomposed=cable_surgery_decomposition(expr).rank,
        s_cable=s_invariant(expr),
        s_recursion=p ** 2 * s_invariant(companion) + (p - 1) * t_companion,
    )
    if not report.holds:
        logger.error("identity check failed for %s: %s", render(expr), report)
    return report


def verify_main_identity(expr: Cable) -> bool:
    return main_identity_report(expr).holds
