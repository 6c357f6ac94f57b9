"""hv - exact computer algebra for twisted Heisenberg-Virasoro algebras."""

import logging
import sys
from typing import Sequence

from .cli import main as cli_main
from .config import settings
from .tracing import init_tracing

logging.basicConfig(
    level=logging.DEBUG if settings.DEBUG else logging.INFO,
    format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    stream=sys.stderr,
)
logger = logging.getLogger(__name__)


def main(argv: Sequence[str] | None = None) -> int:
    """Run the hv command line; stdout carries only JSON."""
    init_tracing()
    return cli_main(argv)


if __name__ == "__main__":
    sys.exit(main())
