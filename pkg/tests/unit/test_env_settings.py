"""Tests for environment setting helpers."""

import logging

import pytest

from env_settings import LOG_LEVEL_VARIABLE, read_env, resolve_log_level


def test_read_env_returns_value_when_present(monkeypatch):
    """Should return the variable when it exists."""
    monkeypatch.setenv("EXAMPLE_VAR", "value")

    assert read_env("EXAMPLE_VAR") == "value"


def test_read_env_optional_returns_none(monkeypatch):
    """Optional variables should return None when absent."""
    monkeypatch.delenv("OPTIONAL_VAR", raising=False)

    assert read_env("OPTIONAL_VAR") is None


def test_read_env_raises_when_required(monkeypatch):
    """Missing required variables should raise OSError."""
    monkeypatch.delenv("MISSING_VAR", raising=False)

    with pytest.raises(OSError, match="required but not set"):
        read_env("MISSING_VAR", require=True)


@pytest.mark.parametrize(
    ("cli_value", "env_value", "expected"),
    [
        (None, None, logging.WARNING),
        (None, "debug", logging.DEBUG),
        ("error", "debug", logging.ERROR),
        (" Info ", None, logging.INFO),
    ],
)
def test_resolve_log_level(monkeypatch, cli_value, env_value, expected):
    if env_value is None:
        monkeypatch.delenv(LOG_LEVEL_VARIABLE, raising=False)
    else:
        monkeypatch.setenv(LOG_LEVEL_VARIABLE, env_value)

    assert resolve_log_level(cli_value) == expected


def test_resolve_log_level_rejects_unknown_names(monkeypatch):
    monkeypatch.delenv(LOG_LEVEL_VARIABLE, raising=False)

    with pytest.raises(ValueError, match="Unrecognised log level value: 'LOUD'"):
        resolve_log_level("loud")
