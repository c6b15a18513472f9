"""fqcalc common utilities module."""

from __future__ import annotations

import json
import logging
import random
from pathlib import Path
from typing import TYPE_CHECKING, Any, cast

from fqcalc.exceptions import ConfigError
from fqcalc.lib.fqlinear import CarlitzExpansion
from fqcalc.lib.series import Laurent, Poly

if TYPE_CHECKING:
    from fqcalc.lib.field import FqContext

_LOGGER = logging.getLogger(__name__)


def get_json(resource_name: str) -> dict[str, Any]:
    """Read a JSON document from a system path.

    :param resource_name: path of the JSON file
    :type resource_name: str
    :return: the parsed document
    :rtype: dict[str, Any]
    :raises ConfigError: when the file is missing or not a JSON object
    """
    try:
        document = json.loads(Path(resource_name).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as e:
        msg = f"Unable to read JSON from {resource_name!r}: {e}"
        raise ConfigError(msg) from e
    if not isinstance(document, dict):
        msg = f"{resource_name!r} does not hold a JSON object"
        raise ConfigError(msg)
    return cast("dict[str, Any]", document)


def get_value_from_dict(key: str, dictionary: dict) -> Any:  # noqa: ANN401
    """Get value of given key from the dictionary recursively.

    :param key: name of the key
    :type key: str
    :param dictionary: dictionary instance
    :type dictionary: dict
    :return: value of given key if exists, otherwise None
    :rtype: Any
    """
    for name, value in dictionary.items():
        if name == key:
            return value
        if isinstance(value, dict):
            return_value = get_value_from_dict(key, value)
            if return_value is not None:
                return return_value
    return None


def seeded_random(seed: int, name: str) -> random.Random:
    """Return a generator private to one named computation.

    :param seed: the configured seed
    :type seed: int
    :param name: name of the computation
    :type name: str
    :return: a deterministic generator
    :rtype: random.Random
    """
    return random.Random(f"{seed}:{name}")  # noqa: S311


def random_poly(ctx: FqContext, rng: random.Random, max_degree: int = 2) -> Poly:
    """Draw a polynomial of degree at most ``max_degree``."""
    return Poly(ctx, tuple(rng.randrange(ctx.q) for _ in range(max_degree + 1)))


def random_carlitz(
    ctx: FqContext,
    rng: random.Random,
    terms: int = 4,
    max_degree: int = 2,
    *,
    constant_only: bool = False,
) -> CarlitzExpansion:
    """Draw a Carlitz expansion with F_q[x] (or F_q) coefficients.

    The last coefficient is non zero, so the support has ``terms`` entries.
    """
    degree = 0 if constant_only else max_degree
    coeffs = [random_poly(ctx, rng, degree).to_laurent() for _ in range(terms)]
    if coeffs[-1].is_zero():
        coeffs[-1] = Laurent.one(ctx)
    return CarlitzExpansion(ctx, tuple(coeffs))
