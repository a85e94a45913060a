"""
CLI package

`run` executes one command line and returns the exit code; `main` is the
console-script entry point.
"""

import logging
import sys
from typing import Optional, Sequence

import click

from app.core import get_settings
from app.core.config import TOOL_NAME

from .commands import cli

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def configure_logging() -> None:
    """Log to stderr; stdout carries the JSON envelope"""
    try:
        level = get_settings().log_level
    except ValueError:
        level = "INFO"
    if not isinstance(logging.getLevelName(level), int):
        level = "INFO"
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr)


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Run one command line; usage errors exit 2"""
    args = list(sys.argv[1:] if argv is None else argv)
    try:
        result = cli.main(args=args, prog_name=TOOL_NAME, standalone_mode=False)
    except click.ClickException as error:
        error.show()
        return error.exit_code
    except click.Abort:
        click.echo("Aborted!", err=True)
        return 1
    return result if isinstance(result, int) else 0


def main() -> None:
    """Console-script entry point"""
    configure_logging()
    sys.exit(run())


__all__ = ["cli", "run", "main", "configure_logging"]
