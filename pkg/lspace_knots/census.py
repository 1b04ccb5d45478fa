import copy
import logging
from concurrent.futures import ThreadPoolExecutor
from math import gcd
from typing import Any, Dict, Iterator, List, Optional, Tuple

from pydantic import BaseModel

from lspace_knots.config import get_max_depth, get_max_workers
from lspace_knots.exceptions import ImproperlyConfigured
from lspace_knots.knots import Cable, KnotExpr, Torus, Unknot, cable_genus, render
from lspace_knots.lspace import invariant_report, is_lspace_knot, minimal_lspace_slope
from lspace_knots.surgery import IdentityReport, main_identity_report

logger = logging.getLogger("census")

Candidate = Tuple[KnotExpr, int]


class KnotRecord(BaseModel):
    """Flat JSON object per knot, hfk_ranks for L-space knots and checks for cables"""

    expr: str
    alexander: str
    genus: int
    tau: int
    s: int
    lspace: bool
    hfk_ranks: Optional[Dict[int, int]] = None
    checks: Optional[IdentityReport] = None

    class Config:
        frozen = True


class CensusRow(KnotRecord):
    min_lspace_slope: Optional[int] = None

    @property
    def identity(self) -> Optional[bool]:
        return None if self.checks is None else self.checks.holds


def _candidates(max_genus: int, max_param: int, max_depth: int) -> Iterator[Candidate]:
    """every validated expression within the bounds, paired with its genus"""
    yield Unknot(), 0
    layer: List[Candidate] = []
    for p in range(2, max_param + 1):
        for q in range(p + 1, max_param + 1):
            g = (p - 1) * (q - 1) // 2
            if gcd(p, q) == 1 and g <= max_genus:
                layer.append((Torus(p=p, q=q), g))

    for level in range(1, max_depth + 1):
        yield from layer
        if level == max_depth:
            return
        next_layer: List[Candidate] = []
        for companion, companion_genus in layer:
            for p in range(2, max_param + 1):
                if p * companion_genus > max_genus:
                    break
                for q in range(1, max_param + 1):
                    g = cable_genus(p, q, companion_genus)
                    if gcd(p, q) == 1 and g <= max_genus:
                        next_layer.append((Cable(p=p, q=q, companion=companion), g))
        layer = next_layer


class KnotQuery:
    """query over positive iterated torus knots, nothing is computed until evaluated

    KnotQuery().where(max_genus=6, max_param=8).lspace_only().all()

    results are ordered by genus, then by expression text
    """

    def __init__(self) -> None:
        self._max_genus: Optional[int] = None
        self._max_param: Optional[int] = None
        self._max_depth: Optional[int] = None
        self._lspace_only = False
        self._limit: Optional[int] = None
        self._skip: Optional[int] = None

    def _clone(self) -> "KnotQuery":
        return copy.copy(self)

    def where(
        self, max_genus: Optional[int] = None, max_param: Optional[int] = None
    ) -> "KnotQuery":
        """bound the genus and every p, q of the enumerated expressions

        :return: new query
        """
        new_query = self._clone()
        if max_genus is not None:
            new_query._max_genus = max_genus
        if max_param is not None:
            new_query._max_param = max_param
        return new_query

    def depth(self, max_depth: int) -> "KnotQuery":
        """override the configured nesting cap"""
        new_query = self._clone()
        new_query._max_depth = max_depth
        return new_query

    def lspace_only(self) -> "KnotQuery":
        new_query = self._clone()
        new_query._lspace_only = True
        return new_query

    def limit(self, count: int) -> "KnotQuery":
        new_query = self._clone()
        new_query._limit = count
        return new_query

    def skip(self, skip: int) -> "KnotQuery":
        new_query = self._clone()
        new_query._skip = skip
        return new_query

    def _bounds(self) -> Tuple[int, int, int]:
        if self._max_genus is None or self._max_param is None:
            raise ImproperlyConfigured("a census needs both max_genus and max_param")
        if self._max_genus < 1 or self._max_param < 1:
            raise ImproperlyConfigured(
                f"census bounds must be positive, got genus {self._max_genus}"
                f" and param {self._max_param}"
            )
        max_depth = self._max_depth if self._max_depth is not None else get_max_depth()
        return self._max_genus, self._max_param, max_depth

    def iterate(self) -> Iterator[KnotExpr]:
        candidates = sorted(
            _candidates(*self._bounds()), key=lambda pair: (pair[1], render(pair[0]))
        )
        exprs = (expr for expr, _ in candidates)
        if self._lspace_only:
            exprs = (expr for expr in exprs if is_lspace_knot(expr))
        start = self._skip or 0
        for index, expr in enumerate(exprs):
            if index < start:
                continue
            if self._limit is not None and index >= start + self._limit:
                return
            yield expr

    def all(self) -> List[KnotExpr]:
        return list(self.iterate())

    def first(self) -> Optional[KnotExpr]:
        return next(self.iterate(), None)

    def count(self) -> int:
        return sum(1 for _ in self.iterate())

    def debug(self) -> Dict[str, Any]:
        """log all bounds for debug purpose"""
        debug_info = {
            "max_genus": self._max_genus,
            "max_param": self._max_param,
            "max_depth": self._max_depth,
            "lspace_only": self._lspace_only,
            "skip": self._skip,
            "limit": self._limit,
        }
        logger.debug(debug_info)
        return debug_info


def _record_fields(expr: KnotExpr) -> Dict[str, Any]:
    report = invariant_report(expr)
    return {
        "expr": render(expr),
        "alexander": str(report.alexander),
        "genus": report.genus,
        "tau": report.tau,
        "s": report.s_invariant,
        "lspace": report.is_lspace,
        "hfk_ranks": report.hfk_ranks,
        "checks": main_identity_report(expr) if isinstance(expr, Cable) else None,
    }


def knot_record(expr: KnotExpr) -> KnotRecord:
    return KnotRecord(**_record_fields(expr))


def census_row(expr: KnotExpr) -> CensusRow:
    return CensusRow(
        **_record_fields(expr), min_lspace_slope=minimal_lspace_slope(expr)
    )


def census(max_genus: int, max_param: int) -> List[CensusRow]:
    """one row per knot with genus <= max_genus and every parameter <= max_param"""
    query = KnotQuery().where(max_genus=max_genus, max_param=max_param)
    query.debug()
    with ThreadPoolExecutor(max_workers=get_max_workers()) as executor:
        return list(executor.map(census_row, query.iterate()))
