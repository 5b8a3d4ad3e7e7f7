"""Logging setup."""

import logging
import sys
from pathlib import Path
from typing import Union


def setup_logging(log_dir: Path, level: Union[int, str] = logging.WARNING) -> None:
    """Set up logging to a file in ``log_dir`` and to stderr.

    Args:
        log_dir: Directory for farey-duality.log
        level: Root logger level
    """
    log_dir.mkdir(parents=True, exist_ok=True)
    log_file = log_dir / "farey-duality.log"

    logging.basicConfig(
        level=level,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        handlers=[
            logging.FileHandler(log_file),
            logging.StreamHandler(sys.stderr),
        ],
        force=True,
    )
