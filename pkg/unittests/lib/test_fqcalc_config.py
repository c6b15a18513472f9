"""Unit tests for the fqcalc configuration layer."""

from __future__ import annotations

import json
from typing import TYPE_CHECKING

import pytest

from fqcalc.configs import BUILTIN_MODULI, DEFAULT_CONFIG
from fqcalc.exceptions import ConfigError
from fqcalc.lib.fqcalc_config import (
    Config,
    load_settings,
    parse_config,
    resolve_order,
)

if TYPE_CHECKING:
    from pathlib import Path


def test_defaults() -> None:
    """Ensure that the packaged defaults describe F_2 at precision 64."""
    config = parse_config(load_settings())
    assert config == Config()
    assert config.q == 2
    assert str(config.context) == "F_2"
    assert config.to_json()["precision"] == 64


def test_builtin_moduli() -> None:
    """Ensure that every non prime order up to 27 has a built-in modulus."""
    assert set(BUILTIN_MODULI) == {4, 8, 9, 16, 25, 27}
    assert DEFAULT_CONFIG["field"]["modulus"] is None


def test_user_file_is_merged(tmp_path: Path) -> None:
    """Ensure that a user file overrides only the keys it names."""
    user_file = tmp_path / "fqcalc.json"
    user_file.write_text(
        json.dumps({"precision": 32, "field": {"p": 3}}),
        encoding="utf-8",
    )
    config = parse_config(load_settings(str(user_file)))
    assert (config.p, config.gamma, config.precision) == (3, 1, 32)
    assert config.budget == DEFAULT_CONFIG["budget"]


def test_missing_user_file(tmp_path: Path) -> None:
    """Ensure that an unreadable user file raises a ConfigError."""
    with pytest.raises(ConfigError, match="Unable to read JSON"):
        load_settings(str(tmp_path / "missing.json"))


def test_command_line_wins(tmp_path: Path) -> None:
    """Ensure that command line values override the user file."""
    user_file = tmp_path / "fqcalc.json"
    user_file.write_text(json.dumps({"precision": 32}), encoding="utf-8")
    overrides = {"q": 9, "precision": 48, "seed": 7, "budget": None}
    config = parse_config(load_settings(str(user_file)), overrides)
    assert (config.p, config.gamma) == (3, 2)
    assert (config.precision, config.seed) == (48, 7)
    assert str(config.context) == "F_9 = F_3[u]/(u^2+1)"


@pytest.mark.parametrize(
    ("q", "expected"),
    [(2, (2, 1)), (8, (2, 3)), (25, (5, 2)), (49, (7, 2))],
)
def test_resolve_order(q: int, expected: tuple[int, int]) -> None:
    """Ensure that field orders split into characteristic and degree."""
    assert resolve_order(q) == expected


@pytest.mark.parametrize("q", [0, 1, 6, 12])
def test_resolve_order_rejects(q: int) -> None:
    """Ensure that non prime powers are refused."""
    with pytest.raises(ConfigError, match="not a prime power"):
        resolve_order(q)


@pytest.mark.parametrize(
    ("overrides", "message"),
    [
        ({"q": 4, "p": 3}, "conflicts with --p 3"),
        ({"precision": 4}, "at least 8"),
        ({"budget": 0}, "must be positive"),
        ({"output_format": "xml"}, "Unknown output format"),
        ({"q": 512}, "outside 2..256"),
        ({"q": 4, "modulus": "u^2+1"}, "Invalid coefficient field"),
    ],
)
def test_invalid_values(overrides: dict, message: str) -> None:
    """Ensure that each invalid setting raises a ConfigError."""
    with pytest.raises(ConfigError, match=message):
        parse_config(load_settings(), overrides)
