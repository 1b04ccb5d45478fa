from typing import List

import pytest

from lspace_knots.census import KnotQuery
from lspace_knots.config import reset
from lspace_knots.knots import Cable, KnotExpr, genus
from lspace_knots.lspace import is_lspace_knot

# bounded family every property test sweeps over
FAMILY_MAX_GENUS = 40
FAMILY_MAX_PARAM = 12
FAMILY_MAX_DEPTH = 3
STAIRCASE_MAX_GENUS = 25


@pytest.fixture(autouse=True)
def default_config():
    reset()
    yield
    reset()


@pytest.fixture(scope="session")
def family() -> List[KnotExpr]:
    return (
        KnotQuery()
        .where(max_genus=FAMILY_MAX_GENUS, max_param=FAMILY_MAX_PARAM)
        .depth(FAMILY_MAX_DEPTH)
        .all()
    )


@pytest.fixture(scope="session")
def cables(family: List[KnotExpr]) -> List[Cable]:
    return [expr for expr in family if isinstance(expr, Cable)]


@pytest.fixture(scope="session")
def lspace_family(family: List[KnotExpr]) -> List[KnotExpr]:
    return [
        expr
        for expr in family
        if genus(expr) <= STAIRCASE_MAX_GENUS and is_lspace_knot(expr)
    ]
