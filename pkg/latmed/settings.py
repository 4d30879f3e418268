"""
Runtime configuration read from the environment.
"""
import logging
import os
from typing import Optional

from latmed.exceptions import ValidationError


DEFAULT_MAX_SIZE = 7
LEMMAS_MAX_SIZE = 6
DEFAULT_MAX_K = 3
EXTENDED_MAX_SIZE = 8
EXTENDED_MAX_K = 4
ENUMERATION_CAP = 8
BRUTEFORCE_MAX_SIZE = 7

THREADS_ENV = "LATMED_THREADS"
MAX_SIZE_ENV = "LATMED_MAX_SIZE"
REPRO_DIR_ENV = "LATMED_REPRO_DIR"
LOG_LEVEL_ENV = "LATMED_LOG_LEVEL"

DEFAULT_REPRO_DIR = "latmed-repro"


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ValidationError(
            "{name} must be a valid int, got {raw!r}".format(name=name, raw=raw)
        )
    if value < 1:
        raise ValidationError("{name} must be positive".format(name=name))
    return value


def worker_count() -> int:
    """
    Number of campaign workers: LATMED_THREADS or the available CPUs.
    """
    return _env_int(THREADS_ENV, os.cpu_count() or 1)


def enumeration_cap() -> int:
    return _env_int(MAX_SIZE_ENV, ENUMERATION_CAP)


def repro_dir() -> str:
    return os.environ.get(REPRO_DIR_ENV) or DEFAULT_REPRO_DIR


def log_level(verbosity: int = 0) -> int:
    """
    Resolves the CLI logging level: -v flags win over LATMED_LOG_LEVEL.
    """
    if verbosity >= 2:
        return logging.DEBUG
    if verbosity == 1:
        return logging.INFO
    name: Optional[str] = os.environ.get(LOG_LEVEL_ENV)
    if name:
        level = logging.getLevelName(name.upper())
        if isinstance(level, int):
            return level
    return logging.WARNING
