"""Command line front end: lspace-knots [--format table|json] COMMAND ..."""
import argparse
import logging
import sys
from typing import List, Optional

from pydantic import BaseModel

from lspace_knots.cli.commands import Command, OutputFormat
from lspace_knots.cli.parser import parse_expression
from lspace_knots.exceptions import LSpaceKnotsError, ParseError
from lspace_knots.registry import COMMANDS_REGISTRY, get_command

logger = logging.getLogger("cli")

EXIT_OK = 0
EXIT_DOMAIN_ERROR = 1
EXIT_PARSE_ERROR = 2

__all__ = ["CommandResult", "build_parser", "main", "parse_expression", "run"]


class CommandResult(BaseModel):
    output: str = ""
    error: Optional[str] = None
    exit_code: int = EXIT_OK


def run(
    cmd: Command, output_format: OutputFormat = OutputFormat.TABLE
) -> CommandResult:
    """execute a parsed command, domain errors become exit code 1"""
    logger.debug("running %s %s", type(cmd).command_name, cmd)  # type: ignore
    try:
        return CommandResult(output=cmd.execute(output_format))
    except ParseError as e:
        return CommandResult(error=str(e), exit_code=EXIT_PARSE_ERROR)
    except LSpaceKnotsError as e:
        return CommandResult(error=str(e), exit_code=EXIT_DOMAIN_ERROR)


def build_parser() -> argparse.ArgumentParser:
    formats = [output_format.value for output_format in OutputFormat]
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=formats, default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(
        prog="lspace-knots",
        description="Heegaard Floer invariants of positive iterated torus knots",
    )
    parser.add_argument("--format", choices=formats, default=OutputFormat.TABLE.value)
    parser.add_argument(
        "--verbose", action="store_true", help="debug logging on stderr"
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    for name, command_cls in COMMANDS_REGISTRY.items():
        subparser = subparsers.add_parser(
            name, parents=[common], help=command_cls.__doc__
        )
        command_cls.add_arguments(subparser)  # type: ignore
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.verbose:
        logging.basicConfig(level=logging.DEBUG)

    command_cls = get_command(args.command)
    try:
        command = command_cls.from_namespace(args)  # type: ignore
    except ParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE_ERROR
    except LSpaceKnotsError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DOMAIN_ERROR

    result = run(command, OutputFormat(args.format))
    if result.error is not None:
        print(f"error: {result.error}", file=sys.stderr)
    else:
        print(result.output)
    return result.exit_code


def entrypoint() -> None:
    sys.exit(main())
