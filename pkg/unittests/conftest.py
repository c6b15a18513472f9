"""Shared fixtures of the fqcalc unit tests."""

from __future__ import annotations

import pytest

from fqcalc.lib.field import FqContext

SMALL_ORDERS = (2, 3, 4, 5)


@pytest.fixture(name="ctx2")
def fixture_ctx2() -> FqContext:
    """Return F_2."""
    return FqContext.from_order(2)


@pytest.fixture(name="ctx3")
def fixture_ctx3() -> FqContext:
    """Return F_3."""
    return FqContext.from_order(3)


@pytest.fixture(name="ctx4")
def fixture_ctx4() -> FqContext:
    """Return F_4 = F_2[u]/(u^2+u+1)."""
    return FqContext.from_order(4)


@pytest.fixture(name="ctx", params=SMALL_ORDERS, ids=lambda q: f"q={q}")
def fixture_ctx(request: pytest.FixtureRequest) -> FqContext:
    """Return each of the small fields in turn."""
    return FqContext.from_order(request.param)
