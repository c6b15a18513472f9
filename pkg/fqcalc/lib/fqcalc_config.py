"""fqcalc configuration module.

Settings are layered: ``configs/defaults.json``, then an optional user JSON
file merged with jsonmerge, then the command line.
"""

from __future__ import annotations

import logging
from dataclasses import asdict, dataclass
from functools import cached_property
from typing import Any, Literal

import jsonmerge
from sympy import factorint

from fqcalc.configs import DEFAULT_CONFIG
from fqcalc.exceptions import ConfigError, FieldError
from fqcalc.lib.field import MAX_FIELD_ORDER, FqContext
from fqcalc.lib.utils import get_json, get_value_from_dict

_LOGGER = logging.getLogger(__name__)

MIN_PRECISION = 8
OUTPUT_FORMATS = ("text", "json")


@dataclass(frozen=True)
class Config:
    """Validated fqcalc settings."""

    p: int = 2
    gamma: int = 1
    modulus: str | None = None
    precision: int = 64
    budget: int = 4096
    output_format: Literal["text", "json"] = "text"
    seed: int = 0
    parallel: bool = True

    @property
    def q(self) -> int:
        """Order of the coefficient field."""
        return self.p**self.gamma

    @cached_property
    def context(self) -> FqContext:
        """The coefficient field these settings describe.

        :raises ConfigError: when the field data is invalid
        """
        try:
            return FqContext.create(self.p, self.gamma, self.modulus)
        except FieldError as e:
            msg = f"Invalid coefficient field: {e}"
            raise ConfigError(msg) from e

    def to_json(self) -> dict[str, Any]:
        """Return the settings as a JSON object."""
        return asdict(self)


def resolve_order(q: int) -> tuple[int, int]:
    """Split a field order into ``(p, gamma)``.

    :param q: the order
    :type q: int
    :return: characteristic and extension degree
    :rtype: tuple[int, int]
    :raises ConfigError: when q is not a prime power
    """
    if q < 2:  # noqa: PLR2004
        msg = f"q={q} is not a prime power"
        raise ConfigError(msg)
    factors = factorint(q)
    if len(factors) != 1:
        msg = f"q={q} is not a prime power"
        raise ConfigError(msg)
    ((p, gamma),) = factors.items()
    return int(p), int(gamma)


def load_settings(config_path: str | None = None) -> dict[str, Any]:
    """Return the defaults merged with an optional user JSON file.

    :param config_path: path of the user file
    :type config_path: str | None
    :return: merged settings
    :rtype: dict[str, Any]
    """
    # jsonmerge logs every merge step at debug level
    logging.getLogger("jsonmerge").setLevel(logging.WARNING)
    if config_path is None:
        return dict(DEFAULT_CONFIG)
    _LOGGER.debug("Merging user config %s", config_path)
    return jsonmerge.merge(DEFAULT_CONFIG, get_json(config_path))


def _field_overrides(overrides: dict[str, Any]) -> dict[str, Any]:
    field = {
        key: overrides[key]
        for key in ("p", "gamma", "modulus")
        if overrides.get(key) is not None
    }
    q = overrides.get("q")
    if q is not None:
        p, gamma = resolve_order(q)
        for key, value in (("p", p), ("gamma", gamma)):
            if field.get(key, value) != value:
                msg = f"--q {q} conflicts with --{key} {field[key]}"
                raise ConfigError(msg)
        field |= {"p": p, "gamma": gamma}
    return field


def parse_config(
    settings: dict[str, Any],
    overrides: dict[str, Any] | None = None,
) -> Config:
    """Validate merged settings and command line overrides.

    :param settings: defaults merged with the user file
    :type settings: dict[str, Any]
    :param overrides: command line values, None for unset
    :type overrides: dict[str, Any] | None
    :return: the validated configuration
    :rtype: Config
    :raises ConfigError: on any invalid value
    """
    overrides = overrides or {}
    field = _field_overrides(overrides)
    top = {
        key: value
        for key, value in overrides.items()
        if key in ("precision", "budget", "output_format", "seed", "parallel")
        and value is not None
    }
    merged = jsonmerge.merge(settings, {"field": field, **top})
    field_settings = get_value_from_dict("field", merged) or {}
    config = Config(
        p=int(field_settings.get("p", 2)),
        gamma=int(field_settings.get("gamma", 1)),
        modulus=field_settings.get("modulus"),
        precision=int(merged["precision"]),
        budget=int(merged["budget"]),
        output_format=merged["output_format"],
        seed=int(merged["seed"]),
        parallel=bool(merged["parallel"]),
    )
    _validate(config)
    return config


def _validate(config: Config) -> None:
    if config.gamma < 1 or config.q > MAX_FIELD_ORDER:
        msg = f"Field order {config.p}^{config.gamma} is outside 2..{MAX_FIELD_ORDER}"
        raise ConfigError(msg)
    if config.precision < MIN_PRECISION:
        msg = f"Precision must be at least {MIN_PRECISION}, got {config.precision}"
        raise ConfigError(msg)
    if config.budget < 1:
        msg = f"Budget must be positive, got {config.budget}"
        raise ConfigError(msg)
    if config.output_format not in OUTPUT_FORMATS:
        msg = f"Unknown output format {config.output_format!r}"
        raise ConfigError(msg)
    _LOGGER.debug("Using %s", config.context)
