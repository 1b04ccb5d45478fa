import argparse
from enum import Enum
from typing import TYPE_CHECKING, Any, Dict, List, Optional, Tuple, no_type_check

from pydantic import BaseModel, Extra
from pydantic.main import ModelMetaclass

from lspace_knots.census import census, knot_record
from lspace_knots.cli.parser import parse_expression
from lspace_knots.cli.render import (
    dash,
    identity_mark,
    render_check,
    render_pairs,
    render_ranks,
    render_table,
    to_json,
    yes_no,
)
from lspace_knots.exceptions import ImproperlyConfigured, NotLSpaceKnot
from lspace_knots.knots import Cable, KnotExpr, alexander, render
from lspace_knots.lspace import (
    hfk_ranks,
    invariant_report,
    is_lspace_knot,
    minimal_lspace_slope,
)
from lspace_knots.registry import register
from lspace_knots.staircase import (
    a_hat_complex,
    build_staircase,
    homology_rank_gf2,
    render_complex,
)
from lspace_knots.surgery import (
    IdentityReport,
    Slope,
    cable_surgery_decomposition,
    is_lspace_surgery,
    lspace_slopes,
    main_identity_report,
    parse_slope,
    rank_surgery,
)
from lspace_knots.utils import to_kebab_case, validate_command_name


class OutputFormat(str, Enum):
    TABLE = "table"
    JSON = "json"


class CommandMetaclass(ModelMetaclass):
    """Command MetaClass that names and registers every concrete command"""

    if TYPE_CHECKING:  # pragma: no cover
        _command_name: str

    @property
    def command_name(self) -> str:
        """name of the sub command on the command line"""
        return self._command_name

    @no_type_check
    def __new__(mcs, name: str, bases: Tuple[type], attr: dict):
        meta_cls = attr.pop("Meta", None)
        if name == "Command" or getattr(meta_cls, "abstract", False):
            return super().__new__(mcs, name, bases, attr)

        command_name = getattr(meta_cls, "command_name", None) or to_kebab_case(name)
        validate_command_name(command_name, name)
        attr["_command_name"] = command_name
        created_class = super().__new__(mcs, name, bases, attr)
        register(created_class)
        return created_class


class Command(BaseModel, metaclass=CommandMetaclass):
    """Base cli command, a subclass becomes a sub command named after the class

    eg. class IsLspace(ExprCommand) is run as `lspace-knots is-lspace EXPR`

    with Meta class to override the name or to keep an intermediate base out of the cli:

    class StaircaseCommand(ExprCommand):
        class Meta:
            command_name = "staircase"
    """

    class Config:
        frozen = True
        extra = Extra.forbid

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser) -> None:
        """declare the sub command arguments"""

    @classmethod
    def from_namespace(cls, namespace: argparse.Namespace) -> "Command":
        """build the command from parsed arguments, parsing expressions and slopes"""
        raise NotImplementedError

    def execute(self, output_format: OutputFormat) -> str:
        raise NotImplementedError


class ExprCommand(Command):
    expr: KnotExpr

    class Meta:
        abstract = True

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("expr", help='knot expression, eg. "C(2,7;T(2,3))"')

    @classmethod
    def from_namespace(cls, namespace: argparse.Namespace) -> "Command":
        return cls(expr=parse_expression(namespace.expr))


def _identity_pairs(report: IdentityReport) -> List[Tuple[str, str]]:
    return [
        ("torsion", render_check(report.torsion_companion, report.torsion_cable)),
        ("rank", render_check(report.rank_direct, report.rank_decomposed)),
        ("s", render_check(report.s_cable, report.s_recursion)),
        ("identity", "holds" if report.holds else "fails"),
    ]


class Invariants(ExprCommand):
    """Alexander polynomial, genus, tau, s and HFK-hat ranks of a knot"""

    def execute(self, output_format: OutputFormat) -> str:
        if output_format == OutputFormat.JSON:
            return to_json(knot_record(self.expr).dict(exclude_none=True))

        report = invariant_report(self.expr)
        checks = (
            main_identity_report(self.expr) if isinstance(self.expr, Cable) else None
        )
        pairs = [
            ("expr", render(self.expr)),
            ("alexander", str(report.alexander)),
            ("genus", str(report.genus)),
            ("tau", str(report.tau)),
            ("s", str(report.s_invariant)),
            ("L-space", yes_no(report.is_lspace)),
        ]
        if report.hfk_ranks is not None:
            pairs.append(("hfk ranks", render_ranks(report.hfk_ranks)))
        if checks is not None:
            pairs.append(("identity", "holds" if checks.holds else "fails"))
        return render_pairs(pairs)


class IsLspace(ExprCommand):
    """Decide whether a knot admits a positive L-space surgery"""

    def execute(self, output_format: OutputFormat) -> str:
        lspace = is_lspace_knot(self.expr)
        slope = minimal_lspace_slope(self.expr)
        if output_format == OutputFormat.JSON:
            return to_json(
                {"expr": render(self.expr), "lspace": lspace, "min_lspace_slope": slope}
            )
        return render_pairs(
            [
                ("expr", render(self.expr)),
                ("L-space", yes_no(lspace)),
                ("min slope", dash(slope)),
            ]
        )


class Surgery(ExprCommand):
    """Rank of HF-hat of a/b surgery on a knot"""

    slope: Slope

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser) -> None:
        super().add_arguments(parser)
        parser.add_argument("slope", help="surgery slope A/B or A")

    @classmethod
    def from_namespace(cls, namespace: argparse.Namespace) -> "Command":
        return cls(
            expr=parse_expression(namespace.expr), slope=parse_slope(namespace.slope)
        )

    def execute(self, output_format: OutputFormat) -> str:
        rank = rank_surgery(self.expr, self.slope)
        lspace = is_lspace_surgery(self.expr, self.slope)
        if output_format == OutputFormat.JSON:
            return to_json(
                {
                    "expr": render(self.expr),
                    "slope": str(self.slope),
                    "rank": rank,
                    "h1_order": self.slope.a,
                    "lspace": lspace,
                }
            )
        return render_pairs(
            [
                ("expr", render(self.expr)),
                ("slope", str(self.slope)),
                ("rank", str(rank)),
                ("|H_1|", str(self.slope.a)),
                ("L-space", yes_no(lspace)),
            ]
        )


class Hfk(ExprCommand):
    """Ranks of HFK-hat of an L-space knot by Alexander grading"""

    def execute(self, output_format: OutputFormat) -> str:
        ranks = hfk_ranks(self.expr)
        total = sum(ranks.values())
        if output_format == OutputFormat.JSON:
            return to_json(
                {"expr": render(self.expr), "hfk_ranks": ranks, "total": total}
            )
        pairs = [("expr", render(self.expr)), ("total", str(total))]
        pairs.extend((f"s={s}", str(rank)) for s, rank in ranks.items())
        return render_pairs(pairs)


class StaircaseCommand(ExprCommand):
    """Staircase complex of an L-space knot and the homology of its A-hat_s slices"""

    s_min: Optional[int] = None
    s_max: Optional[int] = None

    class Meta:
        command_name = "staircase"

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser) -> None:
        super().add_arguments(parser)
        parser.add_argument("--s-min", type=int, default=None, dest="s_min")
        parser.add_argument("--s-max", type=int, default=None, dest="s_max")

    @classmethod
    def from_namespace(cls, namespace: argparse.Namespace) -> "Command":
        return cls(
            expr=parse_expression(namespace.expr),
            s_min=namespace.s_min,
            s_max=namespace.s_max,
        )

    def execute(self, output_format: OutputFormat) -> str:
        if not is_lspace_knot(self.expr):
            raise NotLSpaceKnot(f"{render(self.expr)} is not an L-space knot")
        st = build_staircase(alexander(self.expr))
        s_min = self.s_min if self.s_min is not None else -st.genus
        s_max = self.s_max if self.s_max is not None else st.genus
        if s_min > s_max:
            raise ImproperlyConfigured(
                f"empty Alexander grading range, s-min {s_min} > s-max {s_max}"
            )
        complexes = [(s, a_hat_complex(st, s)) for s in range(s_min, s_max + 1)]
        ranks = [(s, homology_rank_gf2(c)) for s, c in complexes]

        if output_format == OutputFormat.JSON:
            slices: List[Dict[str, Any]] = [
                {
                    "s": s,
                    "rank": rank,
                    "boundary": [list(arrow) for arrow in sorted(c.boundary)],
                }
                for (s, c), (_, rank) in zip(complexes, ranks)
            ]
            return to_json(
                {
                    "expr": render(self.expr),
                    "gradings": list(st.alexander_gradings),
                    "steps": list(st.step_lengths),
                    "slices": slices,
                }
            )

        blocks = [
            render_pairs(
                [
                    ("expr", render(self.expr)),
                    ("gradings", " ".join(map(str, st.alexander_gradings))),
                    ("steps", " ".join(map(str, st.step_lengths))),
                ]
            )
        ]
        for (s, c), (_, rank) in zip(complexes, ranks):
            body = "\n".join(f"  {line}" for line in render_complex(c).splitlines())
            blocks.append(f"A-hat_{s}  rank H_* = {rank}\n{body}")
        return "\n\n".join(blocks)


class Verify(ExprCommand):
    """Check the pq surgery identities on a cable"""

    def execute(self, output_format: OutputFormat) -> str:
        report = main_identity_report(self.expr)  # type: ignore
        decomposition = cable_surgery_decomposition(self.expr)  # type: ignore
        if output_format == OutputFormat.JSON:
            return to_json(
                {
                    "expr": render(self.expr),
                    "surgery": str(decomposition),
                    "checks": report.dict(),
                    "holds": report.holds,
                }
            )
        return render_pairs(
            [("expr", render(self.expr)), ("surgery", str(decomposition))]
            + _identity_pairs(report)
        )


class LspaceSlopes(ExprCommand):
    """Reduced positive slopes a/b with a <= max-a and b <= max-b giving L-spaces"""

    max_a: int
    max_b: int

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser) -> None:
        super().add_arguments(parser)
        parser.add_argument("--max-a", type=int, required=True, dest="max_a")
        parser.add_argument("--max-b", type=int, default=1, dest="max_b")

    @classmethod
    def from_namespace(cls, namespace: argparse.Namespace) -> "Command":
        return cls(
            expr=parse_expression(namespace.expr),
            max_a=namespace.max_a,
            max_b=namespace.max_b,
        )

    def execute(self, output_format: OutputFormat) -> str:
        found = lspace_slopes(self.expr, self.max_a, self.max_b)
        slopes = [str(slope) for slope in found]
        if output_format == OutputFormat.JSON:
            return to_json({"expr": render(self.expr), "lspace_slopes": slopes})
        return render_pairs(
            [("expr", render(self.expr)), ("L-space slopes", " ".join(slopes) or "-")]
        )


class Census(Command):
    """Every knot within the genus and parameter bounds, with its L-space verdict"""

    max_genus: int
    max_param: int

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--max-genus", type=int, required=True, dest="max_genus")
        parser.add_argument("--max-param", type=int, required=True, dest="max_param")

    @classmethod
    def from_namespace(cls, namespace: argparse.Namespace) -> "Command":
        return cls(max_genus=namespace.max_genus, max_param=namespace.max_param)

    def execute(self, output_format: OutputFormat) -> str:
        rows = census(self.max_genus, self.max_param)
        if output_format == OutputFormat.JSON:
            return to_json([row.dict(exclude_none=True) for row in rows])
        headers = ["expr", "genus", "tau", "s", "lspace", "min_slope", "identity"]
        cells = [
            [
                row.expr,
                str(row.genus),
                str(row.tau),
                str(row.s),
                yes_no(row.lspace),
                dash(row.min_lspace_slope),
                identity_mark(row.identity),
            ]
            for row in rows
        ]
        return render_table(headers, cells)
