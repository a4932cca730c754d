#!/usr/bin/env python3
"""
Configuration for the coset leader toolkit
Settings come from the environment (optionally a .env file); explicit
function arguments always win over these defaults.
"""

import logging
import os
import sys
from typing import Optional, Union

from dotenv import load_dotenv

load_dotenv()

DEFAULT_ORACLE_CAP = 24
MAX_ORACLE_CAP = 40
DEFAULT_LOG_LEVEL = "WARNING"
DEFAULT_API_PORT = 8001

# Bundled parity-check matrices
MATRIX_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "matrices")
EXAMPLE_MATRIX_FILE = os.path.join(MATRIX_DIR, "example_10_4.txt")

TOOL_VERSION = "1.0.0"

_handler: Optional[logging.Handler] = None


class ConfigError(ValueError):
    pass


def _int_from_env(name: str, default: int, low: int, high: int) -> int:
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ConfigError(f"{name} must be an integer, got {raw!r}")
    if not low <= value <= high:
        raise ConfigError(f"{name} must be in {low}..{high}, got {value}")
    return value


def get_oracle_cap() -> int:
    """Largest n (or k) the brute-force oracle will enumerate over."""
    return _int_from_env("CLBC_ORACLE_CAP", DEFAULT_ORACLE_CAP, 1, MAX_ORACLE_CAP)


def check_oracle_cap(cap: int) -> int:
    """Same bounds as CLBC_ORACLE_CAP, for caps given on the command line or in code."""
    if not 1 <= cap <= MAX_ORACLE_CAP:
        raise ConfigError(f"Oracle cap must be in 1..{MAX_ORACLE_CAP}, got {cap}")
    return cap


def get_api_port() -> int:
    return _int_from_env("PORT", DEFAULT_API_PORT, 1, 65535)


def get_log_level() -> str:
    level = os.getenv("CLBC_LOG_LEVEL", DEFAULT_LOG_LEVEL).strip().upper()
    if not isinstance(logging.getLevelName(level), int):
        raise ConfigError(f"CLBC_LOG_LEVEL must be a logging level name, got {level!r}")
    return level


def configure_logging(level: Optional[Union[int, str]] = None) -> None:
    """Send library logs to stderr. Reports stay on stdout."""
    global _handler
    level = level or get_log_level()
    root = logging.getLogger()
    if _handler is not None:
        root.removeHandler(_handler)
    _handler = logging.StreamHandler(sys.stderr)
    _handler.setFormatter(logging.Formatter("%(asctime)s %(levelname)s %(name)s: %(message)s"))
    root.addHandler(_handler)
    root.setLevel(level)


if __name__ == "__main__":
    print("Coset Leader Toolkit Configuration")
    print("=" * 50)
    print(f"Oracle cap:  {get_oracle_cap()}")
    print(f"Log level:   {get_log_level()}")
    print(f"API port:    {get_api_port()}")
    print(f"Matrix dir:  {MATRIX_DIR}")
    print("=" * 50)
