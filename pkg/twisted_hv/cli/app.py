"""argparse front end of the ``hv`` command."""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Any, Sequence

from .. import __version__
from ..config import settings
from .commands import COMMANDS, Command, config_from_mapping
from .errors import ConfigError
from .records import ExitStatus, canonical_json
from .runner import error_payload, run
from .sweep import sweep

logger = logging.getLogger(__name__)

_GLOBAL_DESTS = ("command", "debug", "record", "output")


class _Parser(argparse.ArgumentParser):
    """Reports usage errors as ConfigError instead of exiting with status 2."""

    def error(self, message: str):
        raise ConfigError(f"{self.prog}: {message}")


def _common_flags() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--debug", action="store_true", help="log at DEBUG level")
    common.add_argument("--record", action="store_true", help="print the full result record")
    common.add_argument("--output", help="write JSON to this path instead of stdout")
    return common


def _add_command(subparsers, cmd: Command, common: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser(cmd.name, help=cmd.help, description=cmd.help, parents=[common])
    for opt in cmd.options:
        kwargs: dict[str, Any] = {"dest": opt.name, "help": opt.help}
        if opt.kind == "flag":
            parser.add_argument(opt.flag_name, action="store_true", **kwargs)
            continue
        if opt.kind == "int":
            kwargs["type"] = int
        if opt.choices:
            kwargs["choices"] = opt.choices
        parser.add_argument(opt.flag_name, required=opt.required, **kwargs)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hv", description="Exact computations in twisted Heisenberg-Virasoro algebras.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = _common_flags()
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    for cmd in COMMANDS.values():
        _add_command(subparsers, cmd, common)
    sweep_parser = subparsers.add_parser(
        "sweep", help="run a subcommand over a parameter grid", parents=[common]
    )
    sweep_parser.add_argument("--grid", required=True, type=Path, help="YAML or JSON grid file")
    sweep_parser.add_argument("--out", required=True, type=Path, help="JSON-lines result file")
    sweep_parser.add_argument(
        "--workers", type=int, default=settings.SWEEP_WORKERS, help="worker threads"
    )
    return parser


def emit(value: Any, output: str | None) -> None:
    """Write canonical JSON plus a newline to ``output`` or stdout."""
    text = canonical_json(value) + "\n"
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def execute(args: argparse.Namespace) -> int:
    """Run a parsed command line; returns the exit status."""
    if args.command == "sweep":
        summary = sweep(args.grid, args.out, args.workers)
        emit(summary.to_json(), args.output)
        return int(summary.status)

    values = {k: v for k, v in vars(args).items() if k not in _GLOBAL_DESTS}
    config = config_from_mapping(args.command, values, output=args.output)
    record = run(config)
    emit(record.model_dump(mode="json") if args.record else record.payload, args.output)
    return int(record.status)


def main(argv: Sequence[str] | None = None) -> int:
    """Parse ``argv`` and run it; input errors print a JSON error body and return 4."""
    try:
        args = build_parser().parse_args(argv)
        if args.debug:
            logging.getLogger().setLevel(logging.DEBUG)
        return execute(args)
    except ConfigError as e:
        emit(error_payload(e), None)
        return int(ExitStatus.INPUT_ERROR)
