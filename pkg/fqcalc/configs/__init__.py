"""fqcalc configs package."""

import json
from pathlib import Path

LOGGING_CONFIG = json.loads(
    (Path(__file__).parent / "logging.json").read_text(encoding="utf-8"),
)

DEFAULT_CONFIG = json.loads(
    (Path(__file__).parent / "defaults.json").read_text(encoding="utf-8"),
)

BUILTIN_MODULI: dict[int, str] = {
    int(order): modulus for order, modulus in DEFAULT_CONFIG["moduli"].items()
}
