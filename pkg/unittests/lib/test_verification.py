"""Unit tests for the acceptance suite runner."""

from __future__ import annotations

from typing import TYPE_CHECKING

import pytest

from fqcalc.exceptions import DomainError
from fqcalc.lib.fqcalc_config import Config
from fqcalc.lib.verification import CHECKS, run_check, run_checks

if TYPE_CHECKING:
    import random

    from pytest_mock import MockerFixture


def test_checks_are_registered() -> None:
    """Ensure that the suite registers the acceptance checks once each."""
    assert len(CHECKS) == 17
    assert {"field_axioms", "gamma_identity", "closed_form_gate"} <= set(CHECKS)


@pytest.mark.parametrize("p", [2, 3])
def test_cheap_checks_pass(p: int) -> None:
    """Ensure that the field and constant checks pass over F_2 and F_3."""
    config = Config(p=p, parallel=False)
    for name in ("field_axioms", "gamma_identity", "ladder_relations"):
        result = run_check(name, config)
        assert result.status == "pass", result.failures
        assert result.cases > 0


def test_check_is_deterministic() -> None:
    """Ensure that a fixed seed gives the same report twice."""
    config = Config(seed=7)
    first = run_check("field_axioms", config).to_json()
    assert run_check("field_axioms", config).to_json() == first


def test_library_errors_fail_the_check(mocker: MockerFixture) -> None:
    """Ensure that a check raising a library error is reported as failed."""

    def broken(_config: Config, _rng: random.Random) -> None:
        msg = "outside O"
        raise DomainError(msg)

    mocker.patch.dict(CHECKS, {"broken": broken})
    result = run_check("broken", Config())
    assert result.status == "fail"
    assert result.detail == "DomainError: outside O"
    assert not result.passed


@pytest.mark.parametrize("parallel", [False, True])
def test_run_checks_sorted(parallel: bool) -> None:
    """Ensure that results come back sorted by name however they ran."""
    config = Config(parallel=parallel)
    results = run_checks(config, ["gamma_identity", "field_axioms"])
    assert [result.name for result in results] == ["field_axioms", "gamma_identity"]
    assert all(result.passed for result in results)


def test_run_checks_unknown_name() -> None:
    """Ensure that an unknown check name raises a KeyError."""
    with pytest.raises(KeyError, match="Unknown check"):
        run_checks(Config(), ["no_such_check"])
