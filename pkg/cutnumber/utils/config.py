"""
Runtime settings for the cutnumber package.

Values come from the environment, after an optional ``.env`` file has been read.
"""

import os
from dataclasses import dataclass
from typing import Optional

from dotenv import load_dotenv

from cutnumber.utils.logger import get_logger

logger = get_logger("config")

ENV_OUTPUT_DIR = "CUTNUMBER_OUTPUT_DIR"
ENV_LOG_LEVEL = "CUTNUMBER_LOG_LEVEL"
ENV_SEED = "CUTNUMBER_SEED"
ENV_WORKERS = "CUTNUMBER_WORKERS"


@dataclass(frozen=True)
class Settings:
    """Settings shared by the command line front end and the sweep runner."""

    output_dir: str = "."
    log_level: str = "INFO"
    seed: int = 0
    workers: int = 1


def _int_from_env(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        logger.warning(f"Ignoring non-integer value {raw!r} for {name}")
        return default


def load_settings(dotenv_path: Optional[str] = None) -> Settings:
    """
    Build settings from the environment.

    Args:
        dotenv_path: Explicit ``.env`` file to read (default: search from the working directory)

    Returns:
        Populated settings
    """
    load_dotenv(dotenv_path=dotenv_path, override=False)
    return Settings(
        output_dir=os.environ.get(ENV_OUTPUT_DIR, "."),
        log_level=os.environ.get(ENV_LOG_LEVEL, "INFO"),
        seed=_int_from_env(ENV_SEED, 0),
        workers=max(1, _int_from_env(ENV_WORKERS, 1)),
    )
