import json
from pathlib import Path
from typing import List

import pytest

from lspace_knots.cli import main
from lspace_knots.cli.parser import parse_expression
from lspace_knots.knots import render

FIXTURES = Path(__file__).parent / "fixtures"

CENSUS = ["census", "--max-genus", "6", "--max-param", "8"]
SMALL_CENSUS = ["census", "--max-genus", "2", "--max-param", "5"]


@pytest.mark.parametrize(
    ("argv", "fixture"),
    (
        (["invariants", "C(2,7;T(2,3))"], "invariants_table.txt"),
        (["--format", "json", "invariants", "C(2,7;T(2,3))"], "invariants_json.txt"),
        (["verify", "C(2,1;T(2,3))"], "verify_table.txt"),
        (["--format", "json", "verify", "C(2,1;T(2,3))"], "verify_json.txt"),
        (CENSUS, "census_table.txt"),
        (["--format", "json", *SMALL_CENSUS], "census_json.txt"),
    ),
)
def test_golden_output(argv: List[str], fixture: str, capsys):
    assert main(argv) == 0
    assert capsys.readouterr().out == (FIXTURES / fixture).read_text()


def test_census_json_matches_table():
    rows = json.loads((FIXTURES / "census_json.txt").read_text())
    table = (FIXTURES / "census_table.txt").read_text().splitlines()[2:]
    for row, line in zip(rows, table):
        expr, genus, tau, s, lspace, min_slope, identity = line.split()
        assert row["expr"] == expr
        assert (row["genus"], row["tau"], row["s"]) == (int(genus), int(tau), int(s))
        assert row["lspace"] is (lspace == "yes")
        assert str(row.get("min_lspace_slope", "-")) == min_slope
        assert ("checks" in row) is (identity != "-")
        assert ("hfk_ranks" in row) is row["lspace"]
        assert render(parse_expression(row["expr"])) == row["expr"]
