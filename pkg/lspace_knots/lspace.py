"""L-space knot recognition for iterated torus knots.

A cable K_{p,q} is an L-space knot iff K is one and q/p >= 2g(K) - 1. The
s-invariant of a cable follows from comparing the two ways of computing the
rank of HF-hat of pq surgery on it: s(K_{p,q}) = p^2 s(K) + (p-1) t_K^{q/p}.
"""
from functools import lru_cache
from typing import Any, Dict, Optional

from pydantic import BaseModel, root_validator

from lspace_knots.config import CACHE_MAXSIZE
from lspace_knots.exceptions import NotLSpaceKnot, ZeroPolynomial
from lspace_knots.knots import Cable, KnotExpr, alexander, genus, tau, validate
from lspace_knots.poly import LaurentPoly, abs_coefficient_sum, degree, is_symmetric


class InvariantReport(BaseModel):
    """Heegaard Floer data of one knot, ranks are only known for L-space knots"""

    alexander: LaurentPoly
    genus: int
    tau: int
    s_invariant: int
    is_lspace: bool
    hfk_ranks: Optional[Dict[int, int]] = None

    class Config:
        allow_mutation = False
        json_encoders = {LaurentPoly: str}

    @root_validator(skip_on_failure=True)
    def _consistent(cls, values: Dict[str, Any]) -> Dict[str, Any]:
        if values["genus"] != degree(values["alexander"]):
            raise ValueError("genus must be the top Alexander degree")
        if values["tau"] != values["genus"]:
            raise ValueError(
                f"tau {values['tau']} differs from genus {values['genus']}"
            )
        if values["s_invariant"] < 0:
            raise ValueError("s invariant is never negative")
        if values["is_lspace"] != (values["s_invariant"] == 0):
            raise ValueError("L-space knots are exactly the knots with s = 0")
        ranks = values["hfk_ranks"]
        if ranks is not None and sum(ranks.values()) % 2 == 0:
            raise ValueError("total rank of HFK-hat is always odd")
        return values


def _is_lspace(expr: KnotExpr) -> bool:
    if not isinstance(expr, Cable):
        return True
    companion = expr.companion
    return _is_lspace(companion) and expr.q >= expr.p * (2 * genus(companion) - 1)


def is_lspace_knot(expr: KnotExpr) -> bool:
    """decide whether some positive integer surgery on expr is an L-space"""
    return _is_lspace(validate(expr))


def lspace_form_check(f: LaurentPoly) -> bool:
    """necessary condition on the Alexander polynomial of an L-space knot

    symmetric, coefficients +-1 with alternating signs, top coefficient +1
    """
    if f.is_zero():
        raise ZeroPolynomial("the zero polynomial is not an Alexander polynomial")
    if not is_symmetric(f):
        return False
    coefficients = [c for _, c in f.items()]
    if coefficients[0] != 1 or any(abs(c) != 1 for c in coefficients):
        return False
    return all(a == -b for a, b in zip(coefficients, coefficients[1:]))


def hfk_rank_lower_bound(f: LaurentPoly) -> int:
    """total rank of HFK-hat of any knot with Alexander polynomial f is at least this"""
    return abs_coefficient_sum(f)


def hfk_ranks(expr: KnotExpr) -> Dict[int, int]:
    """rank of HFK-hat in each Alexander grading, highest grading first

    :raises NotLSpaceKnot: ranks are not determined by the Alexander polynomial
    """
    if not is_lspace_knot(expr):
        raise NotLSpaceKnot(f"{expr} is not an L-space knot")
    return {s: abs(c) for s, c in alexander(expr).items()}


def hfk_total_rank(expr: KnotExpr) -> int:
    return sum(hfk_ranks(expr).values())


@lru_cache(maxsize=CACHE_MAXSIZE)
def _s_invariant(expr: KnotExpr) -> int:
    from lspace_knots.surgery import Slope, torsion_t

    if not isinstance(expr, Cable):
        return 0
    companion = expr.companion
    slope = Slope(a=expr.q, b=expr.p)
    return expr.p ** 2 * _s_invariant(companion) + (expr.p - 1) * torsion_t(
        genus(companion), slope
    )


def s_invariant(expr: KnotExpr) -> int:
    """s_K, the total excess rank of the A-hat complexes

    zero exactly for L-space knots
    """
    return _s_invariant(validate(expr))


def nu_invariant(expr: KnotExpr) -> int:
    """nu lies between tau and g, every expression here has tau = g"""
    return genus(expr)


def minimal_lspace_slope(expr: KnotExpr) -> Optional[int]:
    """least positive integer n with S^3_n(expr) an L-space, None if there is none"""
    if not is_lspace_knot(expr):
        return None
    return max(1, 2 * genus(expr) - 1)


def invariant_report(expr: KnotExpr) -> InvariantReport:
    lspace = is_lspace_knot(expr)
    return InvariantReport(
        alexander=alexander(expr),
        genus=genus(expr),
        tau=tau(expr),
        s_invariant=s_invariant(expr),
        is_lspace=lspace,
        hfk_ranks=hfk_ranks(expr) if lspace else None,
    )
