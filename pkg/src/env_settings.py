"""Helpers for reading optional environment settings."""

import logging
from os import getenv
from typing import Literal, overload

LOG_LEVEL_VARIABLE = "CAT_GRAPE_LOG_LEVEL"
DEFAULT_LOG_LEVEL = "WARNING"
LOG_LEVELS = ("CRITICAL", "ERROR", "WARNING", "INFO", "DEBUG")


@overload
def read_env(var_name: str, require: Literal[True]) -> str: ...


@overload
def read_env(var_name: str, require: Literal[False] = ...) -> str | None: ...


def read_env(var_name: str, require: bool = False) -> str | None:
    """
    Return an environment variable, optionally raising when it is missing.

    Args:
        var_name: Name of the variable to read.
        require: When True an ``OSError`` is raised if the variable is unset.
            When False (the default) missing values return ``None``.

    Returns:
        The environment variable value or ``None`` when the variable is unset
        and not required.

    Raises:
        OSError: When the variable is required but missing.
    """
    value = getenv(var_name)
    if value is None and require:
        raise OSError(f"Environment variable '{var_name}' is required but not set.")
    return value


def resolve_log_level(cli_value: str | None = None) -> int:
    """
    Return the logging level from the command line, the environment, or the default.

    Raises:
        ValueError: if the chosen name is not a standard logging level.
    """
    name = (cli_value or read_env(LOG_LEVEL_VARIABLE) or DEFAULT_LOG_LEVEL).strip().upper()
    if name not in LOG_LEVELS:
        raise ValueError(f"Unrecognised log level value: {name!r}")
    return logging.getLevelName(name)
