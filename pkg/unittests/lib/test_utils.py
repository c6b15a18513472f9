"""Unit tests for the utils module."""

from __future__ import annotations

import json
from typing import TYPE_CHECKING

import pytest

from fqcalc.exceptions import ConfigError
from fqcalc.lib.field import FqContext
from fqcalc.lib.utils import (
    get_json,
    get_value_from_dict,
    random_carlitz,
    random_poly,
    seeded_random,
)

if TYPE_CHECKING:
    from pathlib import Path


def test_get_json(tmp_path: Path) -> None:
    """Ensure that a JSON object is read from a system path."""
    path = tmp_path / "settings.json"
    path.write_text(json.dumps({"precision": 16}), encoding="utf-8")
    assert get_json(str(path)) == {"precision": 16}


@pytest.mark.parametrize(
    ("content", "message"),
    [("[1, 2]", "does not hold a JSON object"), ("{", "Unable to read JSON")],
)
def test_get_json_invalid(tmp_path: Path, content: str, message: str) -> None:
    """Ensure that malformed documents raise a ConfigError."""
    path = tmp_path / "settings.json"
    path.write_text(content, encoding="utf-8")
    with pytest.raises(ConfigError, match=message):
        get_json(str(path))


@pytest.mark.parametrize(
    ("key", "expected"),
    [("p", 3), ("precision", 16), ("gamma", None)],
)
def test_get_value_from_dict(key: str, expected: int | None) -> None:
    """Ensure that nested keys are found and missing keys give None."""
    settings = {"field": {"p": 3}, "precision": 16}
    assert get_value_from_dict(key, settings) == expected


def test_seeded_random_is_deterministic() -> None:
    """Ensure that the same seed and name draw the same sequence."""
    first = [seeded_random(5, "check").random() for _ in range(3)]
    second = [seeded_random(5, "check").random() for _ in range(3)]
    assert first == second
    assert seeded_random(5, "other").random() != first[0]


def test_random_poly_degree(ctx3: FqContext) -> None:
    """Ensure that drawn polynomials respect the degree bound."""
    rng = seeded_random(0, "poly")
    assert all(random_poly(ctx3, rng, 2).degree <= 2 for _ in range(20))


@pytest.mark.parametrize("q", [2, 3, 4])
def test_random_carlitz_support(q: int) -> None:
    """Ensure that random expansions have full support and constant option."""
    ctx = FqContext.from_order(q)
    rng = seeded_random(0, "carlitz")
    function = random_carlitz(ctx, rng, terms=4)
    assert len(function.coeffs) == 4
    constants = random_carlitz(ctx, rng, terms=3, constant_only=True)
    assert all(c.is_zero() or c.valuation == 0 for c in constants.coeffs)
    assert all(len(c.coeffs) <= 1 for c in constants.coeffs)
