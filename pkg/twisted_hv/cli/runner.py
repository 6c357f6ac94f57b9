"""Run one configuration and turn its outcome or error into a ResultRecord."""

from __future__ import annotations

import logging
from typing import Any

from ..errors import HVError
from ..formaldist import InconclusiveWindowError
from ..tracing import trace_span
from ..vertexops import UntrustedWindowError
from .commands import Outcome, validate_config
from .errors import ExpressionParseError
from .records import ExitStatus, ResultRecord, RunConfig

logger = logging.getLogger(__name__)

INCONCLUSIVE_ERRORS = (InconclusiveWindowError, UntrustedWindowError)


def error_payload(error: Exception) -> dict[str, Any]:
    """JSON body reported for a failed run: message and originating class."""
    payload: dict[str, Any] = {"error": str(error), "type": type(error).__name__}
    if isinstance(error, ExpressionParseError):
        payload["line"] = error.line
        payload["column"] = error.column
    return payload


def execute(config: RunConfig) -> Outcome:
    """Dispatch ``config`` to its handler; library errors become a failing Outcome."""
    try:
        command = validate_config(config)
        return command.handler(config)
    except INCONCLUSIVE_ERRORS as e:
        logger.warning(f"{config.subcommand}: inconclusive: {e}")
        return Outcome(error_payload(e), ExitStatus.INCONCLUSIVE)
    except HVError as e:
        logger.error(f"{config.subcommand}: {type(e).__name__}: {e}")
        return Outcome(error_payload(e), ExitStatus.INPUT_ERROR)


def run(config: RunConfig) -> ResultRecord:
    """Execute one configuration inside a trace span."""
    attributes = {"hv.subcommand": config.subcommand, "hv.config_hash": config.config_hash}
    with trace_span(f"hv.{config.subcommand}", attributes) as span:
        outcome = execute(config)
        if span is not None:
            span.set_attribute("hv.status", int(outcome.status))
    if outcome.status is ExitStatus.DEFECT:
        logger.warning(f"{config.subcommand}: defects found")
    return ResultRecord.of(config, outcome.payload, outcome.status)
