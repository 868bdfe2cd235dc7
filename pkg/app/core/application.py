import argparse
import sys
from typing import Sequence

from app.cli.cli import register_commands
from app.core.config import config
from app.core.exceptions import AppException, ExitCode, UsageException
from app.utils.logger import init_logging


class ArgumentParser(argparse.ArgumentParser):
    """argparse parser whose usage errors exit 1 through ``UsageException``."""

    def error(self, message: str):
        raise UsageException(f"{self.prog}: {message}")


def init_commands(parser: ArgumentParser) -> None:
    """
    Register every subcommand on the parser.
    - Each command module adds its own subparser and handler.
    """
    subparsers = parser.add_subparsers(dest="command", metavar="command")
    subparsers.required = True
    register_commands(subparsers)


def create_parser() -> ArgumentParser:
    parser = ArgumentParser(
        prog="social-filter",
        description=(
            "Remove random relationships from temporal interaction data and "
            "compare community detection before and after."
        ),
    )
    parser.add_argument(
        "--log-level", default=config.LOG_LEVEL, help="logging level for stderr records"
    )
    init_commands(parser)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    """Parse ``argv``, run the chosen command and return the process exit code."""
    try:
        args = create_parser().parse_args(argv)
        init_logging(args.log_level)
        args.handler(args)
    except AppException as error:
        sys.stderr.write(error.describe() + "\n")
        return int(error.exit_code)
    return int(ExitCode.SUCCESS)
