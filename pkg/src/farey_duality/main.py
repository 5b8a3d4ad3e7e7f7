"""Main entry point for farey-duality."""

import logging
import sys

from .cli.app import cli

logger = logging.getLogger(__name__)


def main() -> None:
    """Main entry point."""
    try:
        cli(prog_name="farey-duality")
    except Exception as e:
        logger.exception(f"Unexpected error: {e}")
        sys.exit(1)


if __name__ == "__main__":
    main()
