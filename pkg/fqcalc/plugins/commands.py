"""fqcalc compute subcommands plugin."""

from __future__ import annotations

import logging
from argparse import ArgumentParser, Namespace, _SubParsersAction
from typing import TYPE_CHECKING, Callable

from fqcalc import hookimpl
from fqcalc.exceptions import ConfigError, FqCalcException
from fqcalc.lib.basis import Fraction, get_basis
from fqcalc.lib.calculus import (
    integral_bound,
    integrate,
    invariance_check,
    results_agree,
    sum_uniqueness_check,
)
from fqcalc.lib.constants import get_constants
from fqcalc.lib.dataclass.results import CommandOutput, IdentityReport, SpecialValue
from fqcalc.lib.fqlinear import (
    CarlitzExpansion,
    LinearFunction,
    QExpansion,
    ValueTable,
    analyticity_bounds,
    analyticity_profile,
    apply_operator,
    carlitz_to_qexp,
    commutator_defect,
    convert,
    derivative_at_zero,
    difference_quotients,
    dk_norm,
    dk_sampled_max,
    qexp_to_carlitz,
    smoothness_profile,
    table_to_carlitz,
    taylor_sweep,
)
from fqcalc.lib.series import Laurent, Poly
from fqcalc.lib.specialfn import (
    carlitz_module,
    exp_c,
    exp_integral_identity,
    exp_log_roundtrip,
    goss_integral,
    integral_of_module,
    log_c,
    log_functional_equation,
    module_integral_check,
    module_law_check,
)

if TYPE_CHECKING:
    from fqcalc.lib.basis import LinearTPoly, TPoly
    from fqcalc.lib.constants import CarlitzConstants
    from fqcalc.lib.field import FqContext
    from fqcalc.lib.fqcalc_config import Config

_LOGGER = logging.getLogger(__name__)

_CONSTANTS: dict[str, Callable[[CarlitzConstants, int, int], Poly]] = {
    "bracket": lambda constants, i, _j: constants.bracket(i),
    "D": lambda constants, i, _j: constants.D(i),
    "L": lambda constants, i, _j: constants.L(i),
    "gamma": lambda constants, i, _j: constants.gamma(i),
    "falling": lambda constants, i, j: constants.falling_bracket(i, j),
    "binomial": lambda constants, i, j: constants.carlitz_binomial(i, j),
}
BASIS_FAMILIES = ("e", "e-product", "f", "G", "g", "h", "tau")
OPERATORS = (
    "delta",
    "frobenius",
    "a_plus",
    "a_minus",
    "commutator",
    "norm",
    "smoothness",
    "analyticity",
    "derivative",
)
SPECIAL_FUNCTIONS = (
    "module",
    "log",
    "exp",
    "goss",
    "funceq",
    "roundtrip",
    "module-integral",
    "exp-integral",
    "laws",
)


def _function_parser() -> ArgumentParser:
    parser = ArgumentParser(add_help=False)
    group = parser.add_argument_group("function")
    source = group.add_mutually_exclusive_group(required=True)
    source.add_argument("--basis-index", type=int, help="The Carlitz polynomial f_n")
    source.add_argument("--monomial", type=int, help="The monomial t^(q^n)")
    source.add_argument(
        "--carlitz",
        help="Comma separated Fourier-Carlitz coefficients c_0, c_1, ...",
    )
    source.add_argument("--qexp", help="Comma separated coefficients of t^(q^n)")
    source.add_argument(
        "--h-coeffs",
        help="Comma separated H-normalized coefficients a_n D_n",
    )
    source.add_argument("--values", help="Comma separated values u(1), u(x), ...")
    return parser


def _parse_list(ctx: FqContext, text: str) -> list[Laurent]:
    return [Laurent.parse(ctx, item.strip()) for item in text.split(",")]


def parse_function(config: Config, cmdline_args: Namespace) -> LinearFunction:
    """Build the function selected on the command line.

    :param config: the configuration
    :type config: Config
    :param cmdline_args: command line arguments
    :type cmdline_args: Namespace
    :return: the function in the representation it was given in
    :rtype: LinearFunction
    :raises ConfigError: on an unparsable coefficient list
    """
    ctx = config.context
    try:
        if cmdline_args.basis_index is not None:
            return CarlitzExpansion.basis_vector(ctx, cmdline_args.basis_index)
        if cmdline_args.monomial is not None:
            return QExpansion.monomial(ctx, cmdline_args.monomial)
        if cmdline_args.carlitz is not None:
            return CarlitzExpansion(ctx, tuple(_parse_list(ctx, cmdline_args.carlitz)))
        if cmdline_args.qexp is not None:
            return QExpansion(ctx, tuple(_parse_list(ctx, cmdline_args.qexp)))
        if cmdline_args.h_coeffs is not None:
            return QExpansion.from_h(
                ctx,
                _parse_list(ctx, cmdline_args.h_coeffs),
                config.precision,
            )
        return ValueTable(ctx, tuple(_parse_list(ctx, cmdline_args.values)))
    except (ValueError, FqCalcException) as e:
        msg = f"Invalid function: {e}"
        raise ConfigError(msg) from e


def _prefix(kind: str) -> str:
    return {"carlitz": "c", "qexp": "a", "table": "u(x^n)"}[kind]


def _coefficient_rows(function: LinearFunction) -> list[tuple[str, str]]:
    prefix = _prefix(function.kind)
    return [
        (f"{prefix}[{index}]", str(coef)) for index, coef in enumerate(function.coeffs)
    ]


def _function_json(function: LinearFunction) -> dict[str, object]:
    return {
        "representation": function.kind,
        "coefficients": [coef.to_json() for coef in function.coeffs],
    }


def _as_carlitz(function: LinearFunction, precision: int) -> CarlitzExpansion:
    if isinstance(function, QExpansion):
        return qexp_to_carlitz(function)
    if isinstance(function, ValueTable):
        return table_to_carlitz(function, precision)
    return function


def _as_qexp(function: LinearFunction, precision: int) -> QExpansion:
    if isinstance(function, QExpansion):
        return function
    return carlitz_to_qexp(_as_carlitz(function, precision), precision)


def _fraction_text(fraction: Fraction) -> str:
    numerator, denominator = fraction
    common = numerator.gcd(denominator) if numerator else denominator
    numerator, denominator = numerator // common, denominator // common
    if denominator == Poly.one(numerator.ctx):
        return str(numerator)
    return f"({numerator}) / ({denominator})"


def _run_constants(config: Config, cmdline_args: Namespace) -> CommandOutput:
    constants = get_constants(config.context)
    kind, index, lower = cmdline_args.kind, cmdline_args.i, cmdline_args.j
    value = _CONSTANTS[kind](constants, index, lower)
    if kind in ("falling", "binomial"):
        label = f"{kind}({index}, {lower})"
    else:
        label = f"{kind}({index})"
    return CommandOutput(
        "constants",
        {
            "kind": kind,
            "i": index,
            "j": lower,
            "value": str(value),
            "degree": value.degree,
        },
        [(label, str(value))],
    )


def _basis_poly(config: Config, family: str, index: int) -> TPoly | LinearTPoly:
    basis = get_basis(config.context)
    if family == "e":
        return basis.e_binomial(index)
    if family == "e-product":
        return basis.e_product(index, config.budget)
    if family == "f":
        return basis.f(index)
    if family == "G":
        return basis.G(index)
    if family == "g":
        return basis.g(index)
    if family == "h":
        return basis.h(index)
    return basis.tau(index)


def _run_basis(config: Config, cmdline_args: Namespace) -> CommandOutput:
    family, index = cmdline_args.family, cmdline_args.i
    poly = _basis_poly(config, family, index)
    norm = get_basis(config.context).sup_norm(poly)
    rows = [(f"{family}_{index}(t)", str(poly)), ("log_q sup norm", str(norm))]
    result: dict[str, object] = {
        "family": family,
        "index": index,
        "polynomial": str(poly),
        "sup_norm_exponent": norm,
    }
    if cmdline_args.at is not None:
        try:
            point = Poly.parse(config.context, cmdline_args.at)
        except (ValueError, FqCalcException) as e:
            msg = f"Invalid point {cmdline_args.at!r}: {e}"
            raise ConfigError(msg) from e
        value = _fraction_text(poly.evaluate_exact(point))
        rows.append((f"{family}_{index}({point})", value))
        result |= {"at": str(point), "value": value}
    return CommandOutput("basis", result, rows)


def _run_expand(config: Config, cmdline_args: Namespace) -> CommandOutput:
    function = parse_function(config, cmdline_args)
    image = convert(function, cmdline_args.to, config.precision, cmdline_args.length)
    rows = _coefficient_rows(image)
    result = {"input": _function_json(function), "output": _function_json(image)}
    if isinstance(image, QExpansion) and cmdline_args.normalized:
        h_coeffs = image.h_coefficients()
        rows = [(f"aH[{index}]", str(value)) for index, value in enumerate(h_coeffs)]
        result["h_coefficients"] = [value.to_json() for value in h_coeffs]
    return CommandOutput("expand", result, rows)


def _run_apply(config: Config, cmdline_args: Namespace) -> CommandOutput:
    function = parse_function(config, cmdline_args)
    operator, order, precision = cmdline_args.op, cmdline_args.order, config.precision
    result: dict[str, object] = {"operator": operator, "order": order}
    if operator in ("delta", "frobenius", "a_plus", "a_minus"):
        image = apply_operator(function, operator, order)
        rows = [
            (f"{_prefix(image.representation)}[{index}]", str(coef))
            for index, coef in enumerate(image.coefficients)
        ]
        result |= image.to_json()
    elif operator == "commutator":
        defect = commutator_defect(function)
        rows = _coefficient_rows(defect) or [("defect", "0")]
        result["defect"] = _function_json(defect)
    elif operator == "norm":
        sampled, attained = dk_sampled_max(function, order, precision=precision)
        norm = dk_norm(function, order)
        rows = [
            (f"log_q ||D^{order} u||", str(norm)),
            ("sampled max", str(sampled)),
            ("attained at m", str(attained)),
        ]
        result |= {"norm": norm, "sampled": sampled, "attained_at": attained}
    elif operator == "smoothness":
        profile = smoothness_profile(function, order)
        rows = [(f"n={index}", str(value)) for index, value in enumerate(profile)]
        result["profile"] = profile
    elif operator == "analyticity":
        report = analyticity_bounds(function, precision)
        profile = [str(value) for value in analyticity_profile(function)]
        rows = [("bounds hold", str(report.holds))]
        rows += [(f"n={index}", value) for index, value in enumerate(profile)]
        result |= {"bounds": report.to_json(), "profile": profile}
    else:
        value = derivative_at_zero(function, precision)
        quotients = difference_quotients(function, cmdline_args.max_exponent, precision)
        rows = [("u'(0)", str(value))]
        rows += [(f"u(x^{m}) / x^{m}", str(item)) for m, item in enumerate(quotients)]
        result |= {
            "derivative": value.to_json(),
            "quotients": [item.to_json() for item in quotients],
        }
    return CommandOutput("apply", result, rows)


def _run_recover(config: Config, cmdline_args: Namespace) -> CommandOutput:
    function = _as_qexp(parse_function(config, cmdline_args), config.precision)
    recovery = taylor_sweep(
        function,
        cmdline_args.index,
        config.precision,
        cmdline_args.max_exponent,
    )
    rows = [(f"m={m}", str(value)) for m, value in enumerate(recovery.trace, start=1)]
    rows += [
        ("recovered", str(recovery.value)),
        ("stabilized at m", str(recovery.stabilized_at)),
    ]
    if recovery.expected is not None:
        rows.append(("expected", str(recovery.expected)))
    return CommandOutput("recover", recovery.to_json(), rows)


def _integral_exact_text(config: Config, index: int) -> str:
    denominator = get_constants(config.context).L(index + 1)
    sign = "-" if index % 2 == 0 and config.p != 2 else ""  # noqa: PLR2004
    return f"{sign}1/({denominator})"


def _report_rows(reports: list[IdentityReport]) -> list[tuple[str, str]]:
    return [(report.name, f"{report.status}: {report.lhs}") for report in reports]


def _run_integrate(config: Config, cmdline_args: Namespace) -> CommandOutput:
    function = parse_function(config, cmdline_args)
    precision = config.precision
    results = integrate(function, cmdline_args.method, precision, cmdline_args.n_max)
    agree = results_agree(results)
    rows = [(result.method, str(result.value)) for result in results]
    rows += [
        (f"{result.method} stabilized at n", str(result.stabilized_at))
        for result in results
        if result.method == "limit-sequence"
    ]
    rows.append(("methods agree", str(agree)))
    result: dict[str, object] = {
        "results": [item.to_json() for item in results],
        "agree": agree,
    }
    if cmdline_args.basis_index is not None:
        exact = _integral_exact_text(config, cmdline_args.basis_index)
        rows.insert(0, ("exact", exact))
        result["exact"] = exact
    carlitz = _as_carlitz(function, precision)
    exponent, bound = integral_bound(carlitz, precision)
    rows.append(("log_q |integral| <= bound", f"{exponent} <= {bound}"))
    result |= {"exponent": exponent, "bound": bound}
    if cmdline_args.laws:
        reports = invariance_check(carlitz, precision) + sum_uniqueness_check(carlitz)
        rows += _report_rows(reports)
        result["laws"] = [report.to_json() for report in reports]
    return CommandOutput("integrate", result, rows)


def _special_value(value: SpecialValue) -> CommandOutput:
    rows = [(name, text) for name, text in sorted(value.arguments.items())]
    rows.append((value.function, str(value.value)))
    return CommandOutput("carlitz", value.to_json(), rows)


def _identity_output(reports: list[IdentityReport]) -> CommandOutput:
    rows = []
    for report in reports:
        rows.append((f"{report.name} [{report.status}]", str(report.lhs)))
        if report.detail:
            rows.append(("", report.detail))
    return CommandOutput(
        "carlitz",
        {"reports": [report.to_json() for report in reports]},
        rows,
    )


def _run_carlitz(config: Config, cmdline_args: Namespace) -> CommandOutput:
    ctx, precision, name = config.context, config.precision, cmdline_args.fn
    try:
        z = Laurent.parse(ctx, cmdline_args.z)
        scalar = Laurent.parse(ctx, cmdline_args.a)
        second = Poly.parse(ctx, cmdline_args.b)
    except (ValueError, FqCalcException) as e:
        msg = f"Invalid argument: {e}"
        raise ConfigError(msg) from e
    if name == "module":
        return _special_value(carlitz_module(scalar, z, precision))
    if name == "log":
        return _special_value(log_c(z, precision))
    if name == "exp":
        return _special_value(exp_c(z, precision))
    if name == "module-integral":
        output = _identity_output(module_integral_check(z, precision))
        value = integral_of_module(z, precision)
        output.rows.insert(0, (value.function, str(value.value)))
        output.result["value"] = value.to_json()
        return output
    if name == "exp-integral":
        return _identity_output(exp_integral_identity(z, precision))
    if name == "roundtrip":
        return _identity_output(exp_log_roundtrip(z, precision))
    if not scalar.is_exact() or scalar.valuation < 0:
        msg = f"--fn {name} needs a polynomial --a, got {scalar}"
        raise ConfigError(msg)
    polynomial = scalar.to_poly()
    if name == "goss":
        return _identity_output(goss_integral(polynomial, z, precision))
    if name == "funceq":
        return _identity_output(log_functional_equation(polynomial, z, precision))
    return _identity_output(module_law_check(polynomial, second, z, precision))


_COMMANDS: dict[str, Callable[[Config, Namespace], CommandOutput]] = {
    "constants": _run_constants,
    "basis": _run_basis,
    "expand": _run_expand,
    "apply": _run_apply,
    "recover": _run_recover,
    "integrate": _run_integrate,
    "carlitz": _run_carlitz,
}


@hookimpl
def fqcalc_add_subcommands(
    subparsers: _SubParsersAction[ArgumentParser],
    parent: ArgumentParser,
) -> None:
    """Add the compute subcommands.

    :param subparsers: subcommand registry of the main parser
    :type subparsers: _SubParsersAction[ArgumentParser]
    :param parent: parser holding the shared options
    :type parent: ArgumentParser
    """
    function = _function_parser()

    parser = subparsers.add_parser(
        "constants",
        parents=[parent],
        help="Carlitz constants [i], D_i, L_i, Gamma_j and binomials",
    )
    parser.add_argument("--kind", choices=sorted(_CONSTANTS), default="bracket")
    parser.add_argument("--i", type=int, required=True, help="Index")
    parser.add_argument("--j", type=int, default=0, help="Lower index")

    parser = subparsers.add_parser(
        "basis",
        parents=[parent],
        help="Carlitz polynomials and the orthonormal basis",
    )
    parser.add_argument("--family", choices=BASIS_FAMILIES, default="f")
    parser.add_argument("--i", type=int, required=True, help="Index")
    parser.add_argument("--at", help="Evaluate at this polynomial of F_q[x]")

    parser = subparsers.add_parser(
        "expand",
        parents=[parent, function],
        help="Convert between Q-expansion, Fourier-Carlitz and value table",
    )
    parser.add_argument("--to", choices=("carlitz", "qexp", "table"), default="carlitz")
    parser.add_argument("--length", type=int, help="Length of a value table")
    parser.add_argument(
        "--normalized",
        action="store_true",
        help="Show H-normalized Q-expansion coefficients",
    )

    parser = subparsers.add_parser(
        "apply",
        parents=[parent, function],
        help="Difference, ladder and smoothness operators",
    )
    parser.add_argument("--op", choices=OPERATORS, default="delta")
    parser.add_argument("--order", type=int, default=1, help="Operator order k")
    parser.add_argument(
        "--max-exponent",
        type=int,
        default=16,
        help="Last m of the difference quotients u(x^m) / x^m",
    )

    parser = subparsers.add_parser(
        "recover",
        parents=[parent, function],
        help="Recover a Taylor coefficient from difference quotients",
    )
    parser.add_argument("--index", type=int, required=True, help="Coefficient index n")
    parser.add_argument("--max-exponent", type=int, help="Last m of the sweep")

    parser = subparsers.add_parser(
        "integrate",
        parents=[parent, function],
        help="Volkenborn integral by closed form and limit sequence",
    )
    parser.add_argument(
        "--method",
        choices=("closed", "limit", "termwise", "both", "all"),
        default="both",
    )
    parser.add_argument("--n-max", type=int, help="Length of the limit sequence")
    parser.add_argument(
        "--laws",
        action="store_true",
        help="Also check the invariance and uniqueness laws",
    )

    parser = subparsers.add_parser(
        "carlitz",
        parents=[parent],
        help="Carlitz module, logarithm, exponential and their identities",
    )
    parser.add_argument("--fn", choices=SPECIAL_FUNCTIONS, default="module")
    parser.add_argument("--z", default="x", help="Argument z")
    parser.add_argument("--a", default="x", help="Scalar a of C_a")
    parser.add_argument("--b", default="x + 1", help="Second scalar of the module laws")


@hookimpl
def fqcalc_run_command(config: Config, cmdline_args: Namespace) -> CommandOutput | None:
    """Run a compute subcommand.

    :param config: the configuration
    :type config: Config
    :param cmdline_args: command line arguments
    :type cmdline_args: Namespace
    :return: the command output, None for other subcommands
    :rtype: CommandOutput | None
    """
    command = _COMMANDS.get(cmdline_args.command)
    if command is None:
        return None
    _LOGGER.debug("Running %s", cmdline_args.command)
    return command(config, cmdline_args)
