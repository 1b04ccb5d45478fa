import logging

import pytest

from lspace_knots.census import KnotQuery, census, census_row, knot_record
from lspace_knots.config import configure
from lspace_knots.exceptions import ImproperlyConfigured
from lspace_knots.knots import Cable, Torus, Unknot, depth, render
from lspace_knots.surgery import main_identity_report
from tests.knots import C21_TREFOIL, C27_TREFOIL, TREFOIL

SMALL_CENSUS = {"max_genus": 6, "max_param": 8}


def test_query_is_not_mutated_by_chaining():
    query = KnotQuery()
    bounded = query.where(max_genus=3, max_param=5)
    assert query._max_genus is None
    assert bounded._max_genus == 3
    assert bounded.lspace_only()._lspace_only
    assert not bounded._lspace_only


def test_smallest_query():
    assert KnotQuery().where(max_genus=1, max_param=5).all() == [Unknot(), TREFOIL]


def test_query_ordering():
    exprs = KnotQuery().where(**SMALL_CENSUS).all()
    assert [render(expr) for expr in exprs[:5]] == [
        "U",
        "T(2,3)",
        "C(2,1;T(2,3))",
        "T(2,5)",
        "C(2,3;T(2,3))",
    ]
    assert render(exprs[-1]) == "T(4,5)"


def test_query_count():
    assert KnotQuery().where(**SMALL_CENSUS).count() == 30
    assert KnotQuery().where(**SMALL_CENSUS).lspace_only().count() == 12


def test_query_skip_and_limit():
    query = KnotQuery().where(**SMALL_CENSUS)
    assert query.first() == Unknot()
    assert query.skip(1).limit(2).all() == [TREFOIL, C21_TREFOIL]
    assert query.limit(0).all() == []


def test_query_depth():
    exprs = KnotQuery().where(**SMALL_CENSUS).depth(1).all()
    assert all(isinstance(expr, (Unknot, Torus)) for expr in exprs)
    assert len(exprs) == 8


def test_configured_depth_is_used():
    configure(max_depth=2)
    exprs = KnotQuery().where(**SMALL_CENSUS).all()
    assert max(depth(expr) for expr in exprs) == 2
    assert Cable(p=2, q=1, companion=C21_TREFOIL) not in exprs


@pytest.mark.parametrize(
    "bounds", ({}, {"max_genus": 3}, {"max_param": 3}, {"max_genus": 0, "max_param": 3})
)
def test_query_bounds_are_required(bounds: dict):
    with pytest.raises(ImproperlyConfigured):
        KnotQuery().where(**bounds).all()


def test_query_debug(caplog):
    caplog.set_level(logging.DEBUG, logger="census")
    info = KnotQuery().where(max_genus=2, max_param=4).lspace_only().debug()
    assert info["max_genus"] == 2
    assert info["lspace_only"] is True
    assert "max_param" in caplog.text


def test_census_row():
    row = census_row(C27_TREFOIL)
    assert (row.expr, row.genus, row.tau, row.s) == ("C(2,7;T(2,3))", 5, 5, 0)
    assert row.alexander == "t^5 - t^4 + t - 1 + t^-1 - t^-4 + t^-5"
    assert row.lspace and row.min_lspace_slope == 9
    assert list(row.hfk_ranks) == [5, 4, 1, 0, -1, -4, -5]  # type: ignore
    assert row.checks == main_identity_report(C27_TREFOIL)
    assert row.identity is True

    row = census_row(TREFOIL)
    assert row.checks is None
    assert row.identity is None
    assert row.min_lspace_slope == 1


def test_knot_record_of_non_lspace_cable():
    record = knot_record(C21_TREFOIL)
    assert record.hfk_ranks is None
    assert record.checks is not None and record.checks.holds
    assert set(record.dict(exclude_none=True)) == {
        "expr",
        "alexander",
        "genus",
        "tau",
        "s",
        "lspace",
        "checks",
    }


def test_census():
    rows = census(**SMALL_CENSUS)
    assert len(rows) == 30
    by_expr = {row.expr: row for row in rows}
    assert by_expr["C(2,1;T(2,3))"].s == 2
    assert not by_expr["C(2,1;T(2,3))"].lspace
    assert by_expr["C(3,1;C(2,1;T(2,3)))"].s == 50
    assert all(row.tau == row.genus for row in rows)
    assert all((row.s == 0) == row.lspace for row in rows)
    assert all(row.identity is not False for row in rows)
    assert all((row.hfk_ranks is not None) == row.lspace for row in rows)
    assert all((row.checks is not None) == ("C(" in row.expr) for row in rows)


def test_census_is_deterministic_across_workers():
    rows = census(**SMALL_CENSUS)
    configure(max_workers=4)
    assert census(**SMALL_CENSUS) == rows
