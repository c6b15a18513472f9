"""Unit tests for the compute subcommands."""

from __future__ import annotations

from argparse import Namespace

import pytest

from fqcalc.exceptions import ConfigError
from fqcalc.lib.fqcalc_config import Config
from fqcalc.lib.fqlinear import CarlitzExpansion, QExpansion, ValueTable
from fqcalc.plugins import commands

_SOURCES = ("basis_index", "monomial", "carlitz", "qexp", "h_coeffs", "values")


def _args(command: str, **kwargs: object) -> Namespace:
    values: dict[str, object] = dict.fromkeys(_SOURCES)
    values |= {"command": command, **kwargs}
    return Namespace(**values)


@pytest.mark.parametrize(
    ("source", "text", "kind"),
    [
        ("basis_index", 2, CarlitzExpansion),
        ("monomial", 1, QExpansion),
        ("carlitz", "1, x", CarlitzExpansion),
        ("qexp", "x, 0, 1", QExpansion),
        ("h_coeffs", "1, x", QExpansion),
        ("values", "0, 1, x", ValueTable),
    ],
)
def test_parse_function(source: str, text: object, kind: type) -> None:
    """Ensure that each function source builds its representation."""
    function = commands.parse_function(Config(), _args("expand", **{source: text}))
    assert isinstance(function, kind)


def test_parse_function_invalid() -> None:
    """Ensure that malformed coefficients raise a ConfigError."""
    with pytest.raises(ConfigError, match="Invalid function"):
        commands.parse_function(Config(), _args("expand", carlitz="x, ?"))


def test_constants_rows() -> None:
    """Ensure that binomials are labelled with both indices."""
    output = commands._run_constants(
        Config(),
        Namespace(kind="binomial", i=2, j=1),
    )
    assert output.rows == [("binomial(2, 1)", "x^2 + x + 1")]
    assert output.result["degree"] == 2


def test_basis_at_point() -> None:
    """Ensure that f_1(x) = 1 is evaluated exactly."""
    output = commands._run_basis(Config(), Namespace(family="f", i=1, at="x"))
    assert output.result["value"] == "1"
    assert output.result["sup_norm_exponent"] == 0


def test_basis_invalid_point() -> None:
    """Ensure that an unparsable point raises a ConfigError."""
    with pytest.raises(ConfigError, match="Invalid point"):
        commands._run_basis(Config(), Namespace(family="f", i=1, at="x +"))


def test_expand_normalized() -> None:
    """Ensure that H-normalized coefficients can be shown."""
    args = _args("expand", basis_index=1, to="qexp", length=None, normalized=True)
    output = commands._run_expand(Config(precision=20), args)
    assert [name for name, _ in output.rows] == ["aH[0]", "aH[1]"]
    assert "h_coefficients" in output.result


def test_apply_commutator() -> None:
    """Ensure that the commutator of a basis vector is reported as zero."""
    args = _args("apply", basis_index=2, op="commutator", order=1, max_exponent=4)
    output = commands._run_apply(Config(), args)
    assert output.rows == [("defect", "0")]


def test_apply_norm() -> None:
    """Ensure that the D^k norm is reported with its sampled maximum."""
    args = _args("apply", basis_index=2, op="norm", order=1, max_exponent=4)
    output = commands._run_apply(Config(precision=20), args)
    assert output.result["norm"] == output.result["sampled"] == 2


def test_integral_exact_sign() -> None:
    """Ensure that the sign of int f_0 is dropped in characteristic 2."""
    assert commands._integral_exact_text(Config(), 0) == "1/(x^2 + x)"
    assert commands._integral_exact_text(Config(p=3), 0) == "-1/(x^3 + 2x)"


def test_carlitz_needs_polynomial_scalar() -> None:
    """Ensure that goss refuses a non polynomial scalar."""
    args = Namespace(command="carlitz", fn="goss", z="x", a="x^-1", b="x + 1")
    with pytest.raises(ConfigError, match="needs a polynomial --a"):
        commands._run_carlitz(Config(precision=20), args)


def test_other_commands_are_ignored() -> None:
    """Ensure that the plugin leaves verify to the verify plugin."""
    assert commands.fqcalc_run_command(Config(), Namespace(command="verify")) is None
