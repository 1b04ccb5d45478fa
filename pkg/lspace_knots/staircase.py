"""Staircase model of CFK-infinity of an L-space knot and the A-hat_s complexes.

Generators x_0, ..., x_2n sit in Alexander gradings a_0 > ... > a_2n, the
exponents of the Alexander polynomial. Each odd generator x_{2i-1} has a
horizontal arrow of length a_{2i-2} - a_{2i-1} to x_{2i-2} and a vertical
arrow of length a_{2i-1} - a_{2i} to x_{2i}. Homology is taken over GF(2).
"""
from typing import Any, Dict, FrozenSet, List, Literal, Tuple

import numpy as np
from pydantic import BaseModel, Extra, root_validator

from lspace_knots.exceptions import NotAComplex, NotLSpaceForm, NotLSpaceKnot
from lspace_knots.knots import KnotExpr, alexander
from lspace_knots.lspace import is_lspace_knot, lspace_form_check
from lspace_knots.poly import LaurentPoly

Point = Tuple[int, int]


class Arrow(BaseModel):
    source: int
    target: int
    kind: Literal["horizontal", "vertical"]
    length: int

    class Config:
        frozen = True

    @property
    def displacement(self) -> Point:
        if self.kind == "horizontal":
            return -self.length, 0
        return 0, -self.length


class Staircase(BaseModel):
    """Alexander gradings of the generators, highest first, and the steps between"""

    alexander_gradings: Tuple[int, ...]
    step_lengths: Tuple[int, ...]

    class Config:
        frozen = True
        extra = Extra.forbid

    @root_validator(skip_on_failure=True)
    def _shape(cls, values: Dict[str, Any]) -> Dict[str, Any]:
        gradings, steps = values["alexander_gradings"], values["step_lengths"]
        if len(gradings) % 2 == 0:
            raise ValueError("a staircase has an odd number of generators")
        if tuple(reversed(gradings)) != tuple(-a for a in gradings):
            raise ValueError(f"gradings {gradings} are not symmetric")
        if steps != tuple(a - b for a, b in zip(gradings, gradings[1:])):
            raise ValueError("step lengths must be the gaps between gradings")
        if any(step <= 0 for step in steps):
            raise ValueError("gradings must be strictly decreasing")
        return values

    @property
    def genus(self) -> int:
        return self.alexander_gradings[0]

    @property
    def arrows(self) -> List[Arrow]:
        arrows = []
        for source in range(1, len(self.alexander_gradings), 2):
            arrows.append(
                Arrow(
                    source=source,
                    target=source - 1,
                    kind="horizontal",
                    length=self.step_lengths[source - 1],
                )
            )
            arrows.append(
                Arrow(
                    source=source,
                    target=source + 1,
                    kind="vertical",
                    length=self.step_lengths[source],
                )
            )
        return arrows

    def vertices(self) -> List[Point]:
        """plane coordinates of the walk starting at (0, 0)"""
        points = [(0, 0)]
        for k, step in enumerate(self.step_lengths, start=1):
            i, j = points[-1]
            points.append((i + step, j) if k % 2 else (i, j - step))
        return points


class ChainComplexGF2(BaseModel):
    """Finite complex over GF(2)

    boundary holds (source, target) pairs of the differential
    """

    generator_count: int
    boundary: FrozenSet[Tuple[int, int]] = frozenset()
    gradings: Tuple[int, ...] = ()
    placements: Tuple[Point, ...] = ()

    class Config:
        frozen = True
        extra = Extra.forbid

    @root_validator(skip_on_failure=True)
    def _indices(cls, values: Dict[str, Any]) -> Dict[str, Any]:
        n = values["generator_count"]
        if n < 0:
            raise ValueError("generator_count can't be negative")
        for source, target in values["boundary"]:
            if not (0 <= source < n and 0 <= target < n):
                raise ValueError(f"arrow {source} -> {target} leaves the complex")
        return values

    def boundary_matrix(self) -> np.ndarray:
        """column j is the boundary of generator j"""
        matrix = np.zeros((self.generator_count, self.generator_count), dtype=np.uint8)
        for source, target in self.boundary:
            matrix[target, source] = 1
        return matrix


def build_staircase(f: LaurentPoly) -> Staircase:
    """staircase of a polynomial in L-space form

    :raises NotLSpaceForm: f is not symmetric with alternating +-1 coefficients
    """
    if not lspace_form_check(f):
        raise NotLSpaceForm(f"{f} is not the Alexander polynomial of an L-space knot")
    gradings = tuple(f.exponents())
    return Staircase(
        alexander_gradings=gradings,
        step_lengths=tuple(a - b for a, b in zip(gradings, gradings[1:])),
    )


def placement(grading: int, s: int) -> Point:
    """the translate (i, j) of a generator with max(i, j - s) = 0"""
    if grading <= s:
        return 0, grading
    return s - grading, s


def a_hat_complex(st: Staircase, s: int) -> ChainComplexGF2:
    """the A-hat_s slice C{max(i, j - s) = 0} of the staircase"""
    placements = tuple(placement(a, s) for a in st.alexander_gradings)
    surviving = set()
    for arrow in st.arrows:
        (i, j), (di, dj) = placements[arrow.source], arrow.displacement
        if (i + di, j + dj) == placements[arrow.target]:
            surviving.add((arrow.source, arrow.target))
    return ChainComplexGF2(
        generator_count=len(st.alexander_gradings),
        boundary=frozenset(surviving),
        gradings=st.alexander_gradings,
        placements=placements,
    )


def gf2_rank(matrix: np.ndarray) -> int:
    """rank over GF(2) by row reduction with XOR"""
    reduced = (np.asarray(matrix, dtype=np.uint8) % 2).copy()
    rows, cols = reduced.shape
    pivot_row = 0
    for col in range(cols):
        if pivot_row == rows:
            break
        candidates = np.nonzero(reduced[pivot_row:, col])[0]
        if candidates.size == 0:
            continue
        found = pivot_row + int(candidates[0])
        if found != pivot_row:
            reduced[[pivot_row, found]] = reduced[[found, pivot_row]]
        below = np.nonzero(reduced[pivot_row + 1 :, col])[0] + pivot_row + 1
        reduced[below] ^= reduced[pivot_row]
        pivot_row += 1
    return pivot_row


def homology_rank_gf2(c: ChainComplexGF2) -> int:
    """dim H_* = generators - 2 rank(d)

    :raises NotAComplex: d o d != 0
    """
    matrix = c.boundary_matrix()
    square = matrix.astype(np.int64) @ matrix.astype(np.int64)
    if np.any(square % 2):
        raise NotAComplex("boundary map does not square to zero")
    return c.generator_count - 2 * gf2_rank(matrix)


def homology_ranks(st: Staircase, s_min: int, s_max: int) -> Dict[int, int]:
    return {s: homology_rank_gf2(a_hat_complex(st, s)) for s in range(s_min, s_max + 1)}


def s_from_staircase(expr: KnotExpr) -> int:
    """s_K as the sum of rk H_*(A-hat_s) - 1, only |s| < g can contribute

    :raises NotLSpaceKnot: the complex of expr is not a staircase
    """
    if not is_lspace_knot(expr):
        raise NotLSpaceKnot(f"{expr} is not an L-space knot")
    st = build_staircase(alexander(expr))
    return sum(rank - 1 for rank in homology_ranks(st, -st.genus, st.genus).values())


def render_complex(c: ChainComplexGF2) -> str:
    """one line per generator with its grading and placement, then one per arrow"""
    lines = [
        f"x{k}  A={grading}  at ({i},{j})"
        for k, (grading, (i, j)) in enumerate(zip(c.gradings, c.placements))
    ]
    lines.extend(f"x{source} -> x{target}" for source, target in sorted(c.boundary))
    return "\n".join(lines)
