from typing import List

import numpy as np
import pytest
from pydantic import ValidationError

from lspace_knots.exceptions import NotAComplex, NotLSpaceForm, NotLSpaceKnot
from lspace_knots.knots import KnotExpr, alexander, render
from lspace_knots.lspace import hfk_total_rank, s_invariant
from lspace_knots.poly import LaurentPoly
from lspace_knots.staircase import (
    ChainComplexGF2,
    Staircase,
    a_hat_complex,
    build_staircase,
    gf2_rank,
    homology_rank_gf2,
    homology_ranks,
    render_complex,
    s_from_staircase,
)
from tests.knots import (
    C21_TREFOIL,
    C27_TREFOIL,
    T34,
    T34_POLY,
    TREFOIL,
    TREFOIL_POLY,
    UNKNOT,
)


def test_build_staircase():
    trefoil = build_staircase(TREFOIL_POLY)
    assert trefoil.alexander_gradings == (1, 0, -1)
    assert trefoil.step_lengths == (1, 1)
    assert trefoil.genus == 1

    t34 = build_staircase(T34_POLY)
    assert t34.alexander_gradings == (3, 2, 0, -2, -3)
    assert t34.step_lengths == (1, 2, 2, 1)


def test_unknot_staircase_is_a_point():
    st = build_staircase(alexander(UNKNOT))
    assert st.alexander_gradings == (0,)
    assert st.arrows == []
    assert st.vertices() == [(0, 0)]


def test_build_staircase_needs_lspace_form():
    with pytest.raises(NotLSpaceForm):
        build_staircase(LaurentPoly({1: 2, 0: -3, -1: 2}))


def test_arrows():
    arrows = build_staircase(T34_POLY).arrows
    assert [(a.source, a.target, a.kind, a.length) for a in arrows] == [
        (1, 0, "horizontal", 1),
        (1, 2, "vertical", 2),
        (3, 2, "horizontal", 2),
        (3, 4, "vertical", 1),
    ]
    assert arrows[1].displacement == (0, -2)


def test_vertices():
    assert build_staircase(TREFOIL_POLY).vertices() == [(0, 0), (1, 0), (1, -1)]
    assert build_staircase(T34_POLY).vertices() == [
        (0, 0),
        (1, 0),
        (1, -2),
        (3, -2),
        (3, -3),
    ]


@pytest.mark.parametrize(
    ("gradings", "steps"),
    (
        ((1, -1), (2,)),
        ((2, 0, -1), (2, 1)),
        ((1, 0, -1), (1, 2)),
    ),
)
def test_staircase_shape_is_validated(gradings, steps):
    with pytest.raises(ValidationError):
        Staircase(alexander_gradings=gradings, step_lengths=steps)


@pytest.mark.parametrize(
    ("s", "boundary"),
    ((0, {(1, 0), (1, 2)}), (1, {(1, 2)}), (-1, {(1, 0)}), (5, {(1, 2)})),
)
def test_trefoil_a_hat_arrows(s: int, boundary: set):
    c = a_hat_complex(build_staircase(TREFOIL_POLY), s)
    assert c.boundary == frozenset(boundary)


def test_a_hat_placements():
    c = a_hat_complex(build_staircase(TREFOIL_POLY), 0)
    assert c.placements == ((-1, 0), (0, 0), (0, -1))


def test_only_vertical_arrows_survive_above_genus():
    c = a_hat_complex(build_staircase(T34_POLY), 3)
    assert c.boundary == frozenset({(1, 2), (3, 4)})


def test_gf2_rank():
    assert gf2_rank(np.array([[1, 1], [1, 1]])) == 1
    assert gf2_rank(np.eye(3, dtype=np.uint8)) == 3
    assert gf2_rank(np.array([[1, 1, 0], [0, 1, 1], [1, 0, 1]])) == 2
    assert gf2_rank(np.zeros((2, 4), dtype=np.uint8)) == 0


def test_homology_without_arrows():
    assert homology_rank_gf2(ChainComplexGF2(generator_count=4)) == 4


def test_trefoil_homology():
    assert homology_rank_gf2(a_hat_complex(build_staircase(TREFOIL_POLY), 0)) == 1


def test_boundary_must_square_to_zero():
    c = ChainComplexGF2(generator_count=3, boundary={(0, 1), (1, 2)})
    with pytest.raises(NotAComplex):
        homology_rank_gf2(c)


def test_complex_indices_are_validated():
    with pytest.raises(ValidationError):
        ChainComplexGF2(generator_count=2, boundary={(0, 2)})


def test_t34_ranks():
    assert homology_ranks(build_staircase(T34_POLY), -5, 5) == {
        s: 1 for s in range(-5, 6)
    }


@pytest.mark.parametrize("expr", (UNKNOT, TREFOIL, T34, C27_TREFOIL))
def test_s_from_staircase(expr: KnotExpr):
    assert s_from_staircase(expr) == 0


def test_s_from_staircase_needs_an_lspace_knot():
    with pytest.raises(NotLSpaceKnot):
        s_from_staircase(C21_TREFOIL)


def test_render_complex():
    c = a_hat_complex(build_staircase(TREFOIL_POLY), 0)
    assert render_complex(c).splitlines() == [
        "x0  A=1  at (-1,0)",
        "x1  A=0  at (0,0)",
        "x2  A=-1  at (0,-1)",
        "x1 -> x0",
        "x1 -> x2",
    ]


def test_staircases_of_lspace_family(lspace_family: List[KnotExpr]):
    assert lspace_family
    for expr in lspace_family:
        st = build_staircase(alexander(expr))
        ranks = homology_ranks(st, -st.genus - 2, st.genus + 2)
        assert all(rank == 1 for rank in ranks.values()), render(expr)
        assert ranks == {-s: rank for s, rank in ranks.items()}, render(expr)
        assert len(st.alexander_gradings) == hfk_total_rank(expr), render(expr)
        assert s_from_staircase(expr) == s_invariant(expr) == 0, render(expr)
