"""Command-line front end, run configurations and JSON-lines result persistence."""

from .app import build_parser, emit, execute, main
from .commands import COMMANDS, Command, Option, Outcome, config_from_mapping, get_command, validate_config
from .errors import ConfigError, ExpressionParseError
from .expressions import parse_lie_element, parse_vector
from .records import ExitStatus, ResultRecord, RunConfig, canonical_json
from .runner import error_payload, run
from .store import ResultStore
from .sweep import SweepGrid, SweepSummary, load_grid, sweep

__all__ = [
    # Errors
    "ConfigError",
    "ExpressionParseError",
    # Expressions
    "parse_lie_element",
    "parse_vector",
    # Configurations and records
    "ExitStatus",
    "ResultRecord",
    "RunConfig",
    "canonical_json",
    # Commands
    "COMMANDS",
    "Command",
    "Option",
    "Outcome",
    "config_from_mapping",
    "get_command",
    "validate_config",
    # Running
    "error_payload",
    "run",
    # Persistence and sweeps
    "ResultStore",
    "SweepGrid",
    "SweepSummary",
    "load_grid",
    "sweep",
    # Entry point
    "build_parser",
    "emit",
    "execute",
    "main",
]
