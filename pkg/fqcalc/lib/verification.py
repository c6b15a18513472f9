"""Acceptance suite: named checks of every identity the library implements.

Each check draws from its own generator seeded by ``(seed, name)``, so the
report does not depend on the order or concurrency of execution.
"""

from __future__ import annotations

import asyncio
import logging
import sys
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Callable

from fqcalc.exceptions import BudgetExceededError, FqCalcException
from fqcalc.lib.basis import get_basis
from fqcalc.lib.calculus import (
    indefinite_sum,
    indefinite_sum_values,
    integral_bound,
    integrate,
    invariance_check,
    results_agree,
    sum_uniqueness_check,
    volkenborn,
    volkenborn_limit,
    volkenborn_qexpansion,
)
from fqcalc.lib.constants import DEGREE_CAP, get_constants
from fqcalc.lib.dataclass.results import CheckResult, IdentityReport
from fqcalc.lib.field import FqElement, enumerate_fq
from fqcalc.lib.fqlinear import (
    CarlitzExpansion,
    LinearFunction,
    QExpansion,
    a_minus,
    a_plus,
    analyticity_bounds,
    binomial_exponent_matches,
    commutator_defect,
    derivative_at_zero,
    difference_quotients,
    dk_norm,
    dk_sampled_max,
    is_zero_function,
    qexp_to_carlitz,
    s_exponent_signs_hold,
    subtract,
    taylor_sweep,
    to_table,
)
from fqcalc.lib.series import Laurent, Poly
from fqcalc.lib.specialfn import (
    exp_integral_identity,
    exp_log_roundtrip,
    goss_integral,
    log_functional_equation,
    module_integral_check,
)
from fqcalc.lib.utils import random_carlitz, random_poly, seeded_random

if TYPE_CHECKING:
    import random

    from fqcalc.lib.field import FqContext
    from fqcalc.lib.fqcalc_config import Config

_LOGGER = logging.getLogger(__name__)

ACCEPTANCE_PRECISION = 40
RANDOM_TRIALS = 20
TAYLOR_CASES = 30
FIELD_SAMPLES = 64

CheckFunction = Callable[["Config", "random.Random"], CheckResult]
CHECKS: dict[str, CheckFunction] = {}


def _check(name: str) -> Callable[[CheckFunction], CheckFunction]:
    def register(function: CheckFunction) -> CheckFunction:
        CHECKS[name] = function
        return function

    return register


@dataclass
class _Tally:
    """Collect the cases of one check."""

    name: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)
    flagged: list[str] = field(default_factory=list)

    def record(self, label: str, passed: bool) -> None:
        self.cases += 1
        if not passed:
            _LOGGER.warning("%s: case %s failed", self.name, label)
            self.failures.append(label)

    def record_report(self, label: str, report: IdentityReport) -> None:
        self.record(f"{label}: {report.name}", report.passed)
        if report.status in ("vacuous", "not-applicable"):
            self.flagged.append(f"{label}: {report.name} {report.status}")

    def result(self, detail: str) -> CheckResult:
        if self.flagged:
            detail = f"{detail}; flagged: {', '.join(self.flagged)}"
        return CheckResult(
            self.name,
            "fail" if self.failures else "pass",
            detail,
            self.cases,
            self.failures,
        )


def _precision(config: Config) -> int:
    return min(config.precision, ACCEPTANCE_PRECISION)


def _same(first: LinearFunction, second: LinearFunction) -> bool:
    return is_zero_function(subtract(first, second))


def _tau_levels(q: int) -> int:
    return 4 if q <= 3 else 3 if q <= 5 else 2


def _corpus(ctx: FqContext, rng: random.Random) -> list[tuple[str, CarlitzExpansion]]:
    """Return f_0..f_5, t^(q^n) for n <= 3 and four random 4-term expansions."""
    top = min(5, get_constants(ctx).cap - 1)
    corpus = [
        (f"f_{index}", CarlitzExpansion.basis_vector(ctx, index))
        for index in range(top + 1)
    ]
    corpus += [
        (f"t^(q^{level})", qexp_to_carlitz(QExpansion.monomial(ctx, level)))
        for level in range(min(3, top) + 1)
    ]
    corpus += [
        (f"random_{trial}", random_carlitz(ctx, rng, terms=4))
        for trial in range(4)
    ]
    return corpus


@_check("field_axioms")
def _field_axioms(config: Config, rng: random.Random) -> CheckResult:
    ctx = config.context
    tally = _Tally("field_axioms")
    elements = enumerate_fq(ctx)
    one = FqElement(ctx, 1)
    for _ in range(FIELD_SAMPLES):
        a, b, c = (rng.choice(elements) for _ in range(3))
        tally.record(
            f"associativity({a}, {b}, {c})",
            (a + b) + c == a + (b + c) and (a * b) * c == a * (b * c),
        )
        tally.record(f"distributivity({a}, {b}, {c})", a * (b + c) == a * b + a * c)
        if a:
            tally.record(f"inverse({a})", a * a.inverse() == one)
    for trial in range(FIELD_SAMPLES):
        first = random_poly(ctx, rng, 4).to_laurent().shift(rng.randrange(-3, 4))
        second = random_poly(ctx, rng, 4).to_laurent().shift(rng.randrange(-3, 4))
        total = first + second
        if first and second and total:
            tally.record(
                f"ultrametric[{trial}]",
                total.abs_exponent()
                <= max(first.abs_exponent(), second.abs_exponent()),
            )
        tally.record(
            f"frobenius_additive[{trial}]",
            total.frobenius(1) == first.frobenius(1) + second.frobenius(1),
        )
        tally.record(f"q_root[{trial}]", first.frobenius(1).q_root() == first)
    return tally.result(f"{ctx}, {len(elements)} elements")


@_check("gamma_identity")
def _gamma_identity(config: Config, _rng: random.Random) -> CheckResult:
    constants = get_constants(config.context)
    tally = _Tally("gamma_identity")
    reached = 0
    for level in range(1, 7):
        try:
            holds = constants.gamma_identity_holds(level)
        except BudgetExceededError:
            _LOGGER.debug("Gamma identity stops at m=%d for q=%d", level, config.q)
            break
        tally.record(f"m={level}", holds)
        reached = level
    return tally.result(f"Gamma_(q^m-1) L_m = D_m for m = 1..{reached}")


@_check("basis_dual_path")
def _basis_dual_path(config: Config, _rng: random.Random) -> CheckResult:
    basis = get_basis(config.context)
    tally = _Tally("basis_dual_path")
    for index in range(4):
        try:
            product = basis.e_product(index, config.budget)
        except BudgetExceededError:
            break
        tally.record(f"e_{index}", product == basis.e_binomial(index).to_tpoly())
        tally.record(f"vanishing_{index}", basis.vanishes_below(index, config.budget))
    levels = _tau_levels(config.q)
    for level in range(1, levels + 1):
        tally.record(f"tau_{level}", basis.tau(level) == basis.tau_from_g(level))
    return tally.result(f"product and binomial forms of e_i; tau_m for m <= {levels}")


@_check("tau_orthonormality")
def _tau_orthonormality(config: Config, rng: random.Random) -> CheckResult:
    ctx = config.context
    basis = get_basis(ctx)
    tally = _Tally("tau_orthonormality")
    levels = _tau_levels(config.q)
    for level in range(1, levels + 1):
        tally.record(f"|tau_{level}| = 1", basis.sup_norm(basis.tau(level)) == 0)
    for level in range(1, min(levels, 3) + 1):
        for trial in range(RANDOM_TRIALS):
            weights = [random_poly(ctx, rng, 2) for _ in range(level + 1)]
            if not weights[-1]:
                weights[-1] = Poly.one(ctx)
            norm, bound = basis.orthonormality_bound(weights)
            tally.record(f"m={level} trial {trial}", norm >= bound)
    return tally.result(
        f"sup norm of tau_m for m <= {levels} and the orthonormality inequality",
    )


@_check("monic_sum_identity")
def _monic_sum_identity(config: Config, _rng: random.Random) -> CheckResult:
    basis = get_basis(config.context)
    tally = _Tally("monic_sum_identity")
    levels = 3 if config.q <= 3 else 2 if config.q <= 5 else 1
    for level in range(1, levels + 1):
        try:
            table = basis.monic_sum_table(level, config.budget)
        except BudgetExceededError:
            break
        for (lower, upper), value in sorted(table.items()):
            tally.record(
                f"m={level} l={lower} k={upper}",
                value == basis.monic_sum_expected(lower, upper, level),
            )
    return tally.result(f"all k, l < q^m for m <= {levels}")


@_check("ladder_relations")
def _ladder_relations(config: Config, rng: random.Random) -> CheckResult:
    ctx = config.context
    constants = get_constants(ctx)
    tally = _Tally("ladder_relations")
    top = 8
    while config.q ** (top + 2) > DEGREE_CAP:
        top -= 1
    for index in range(top + 1):
        basis_vector = CarlitzExpansion.basis_vector(ctx, index)
        tally.record(
            f"commutator f_{index}",
            is_zero_function(commutator_defect(basis_vector)),
        )
        if index == 0:
            tally.record("a+ a- f_0", is_zero_function(a_plus(a_minus(basis_vector))))
            tally.record("a- f_0", is_zero_function(a_minus(basis_vector)))
            continue
        scaled = CarlitzExpansion.basis_vector(ctx, index, constants.bracket(index))
        lower = CarlitzExpansion.basis_vector(ctx, index - 1)
        tally.record(f"a+ a- f_{index}", _same(a_plus(a_minus(basis_vector)), scaled))
        tally.record(f"a- f_{index}", _same(a_minus(basis_vector), lower))
        tally.record(f"a+ f_{index - 1}", _same(a_plus(lower), scaled))
    for trial in range(RANDOM_TRIALS):
        function = random_carlitz(ctx, rng, terms=5)
        tally.record(
            f"commutator random {trial}",
            is_zero_function(commutator_defect(function)),
        )
        tally.record(
            f"a- S random {trial}",
            _same(a_minus(indefinite_sum(function)), function),
        )
        constant = random_carlitz(ctx, rng, terms=5, constant_only=True)
        expected = CarlitzExpansion(
            ctx,
            tuple(
                coef * constants.bracket(index) if index else Laurent.zero(ctx)
                for index, coef in enumerate(constant.coeffs)
            ),
        )
        recovered = a_plus(a_minus(constant))
        tally.record(f"a+ a- random {trial}", _same(recovered, expected))
    return tally.result(
        f"f_0..f_{top} and {RANDOM_TRIALS} random expansions; "
        "the commutator in the form Delta a+ - a+ Delta = [1] R_q",
    )


@_check("taylor_recovery")
def _taylor_recovery(config: Config, rng: random.Random) -> CheckResult:
    ctx = config.context
    precision = _precision(config)
    tally = _Tally("taylor_recovery")
    latest = 0
    for case in range(TAYLOR_CASES):
        support = 1 + case % 3
        h_coeffs = [random_poly(ctx, rng, 2).to_laurent() for _ in range(support)]
        if h_coeffs[-1].is_zero():
            h_coeffs[-1] = Laurent.one(ctx)
        function = QExpansion.from_h(ctx, h_coeffs, precision)
        for index in range(support):
            recovery = taylor_sweep(function, index, precision)
            tally.record(
                f"case {case} n={index}",
                recovery.matches_expected and recovery.stabilized_at is not None,
            )
            latest = max(latest, recovery.stabilized_at or 0)
    return tally.result(f"{TAYLOR_CASES} cases, latest stabilization at m={latest}")


@_check("dk_norm_identity")
def _dk_norm_identity(config: Config, rng: random.Random) -> CheckResult:
    ctx = config.context
    precision = _precision(config)
    tally = _Tally("dk_norm_identity")
    for trial in range(RANDOM_TRIALS):
        function = random_carlitz(ctx, rng, terms=rng.randint(1, 4))
        for order in (0, 1, 2):
            sampled, _ = dk_sampled_max(function, order, precision=precision)
            tally.record(
                f"trial {trial} k={order}",
                dk_norm(function, order) == sampled,
            )
        exponent = max(0, int(-function.norm())) + get_constants(ctx).d_valuation(
            len(function.coeffs),
        )
        quotients = difference_quotients(
            function,
            (precision + exponent) // (ctx.q - 1) + 2,
            precision,
        )
        tally.record(
            f"trial {trial} u'(0)",
            quotients[-1].agrees_with(
                derivative_at_zero(function, precision),
                precision,
            ),
        )
    return tally.result(
        f"{RANDOM_TRIALS} expansions, k in (0, 1, 2), sampled at x^m for m <= 8",
    )


@_check("coefficient_bounds")
def _coefficient_bounds(config: Config, rng: random.Random) -> CheckResult:
    ctx = config.context
    precision = _precision(config)
    tally = _Tally("coefficient_bounds")
    for trial in range(RANDOM_TRIALS):
        coef = random_poly(ctx, rng, 2)
        if not coef:
            coef = Poly.one(ctx)
        value = coef.to_laurent().shift(-rng.randrange(3))
        function = QExpansion.monomial(ctx, rng.randrange(4), value)
        tally.record(f"forward {trial}", analyticity_bounds(function, precision).holds)
    for trial in range(5):
        function = random_carlitz(ctx, rng, terms=4)
        tally.record(f"backward {trial}", analyticity_bounds(function, precision).holds)
    tally.record("s_nj <= 0 for j < n <= 8", s_exponent_signs_hold(config.q, 8))
    top = min(4, get_constants(ctx).cap)
    for upper in range(1, top + 1):
        for lower in range(upper):
            tally.record(
                f"s_{upper}{lower} matches the binomial",
                binomial_exponent_matches(ctx, upper, lower),
            )
    return tally.result(f"{RANDOM_TRIALS} monomial inputs and exponents s_nj")


@_check("indefinite_sum")
def _indefinite_sum(config: Config, rng: random.Random) -> CheckResult:
    ctx = config.context
    precision = _precision(config)
    tally = _Tally("indefinite_sum")
    for index in range(7):
        tally.record(
            f"S f_{index}",
            _same(
                indefinite_sum(CarlitzExpansion.basis_vector(ctx, index)),
                CarlitzExpansion.basis_vector(ctx, index + 1),
            ),
        )
    for label, function in _corpus(ctx, rng):
        coefficient_form = to_table(indefinite_sum(function), 8, precision)
        interpolation_form = indefinite_sum_values(to_table(function, 8, precision))
        tally.record(
            f"{label} table",
            all(
                first.agrees_with(second, precision)
                for first, second in zip(
                    coefficient_form.values,
                    interpolation_form.values,
                )
            ),
        )
    return tally.result("S f_k = f_(k+1) for k <= 6, tables of length 8")


@_check("closed_form_integrals")
def _closed_form_integrals(config: Config, _rng: random.Random) -> CheckResult:
    ctx = config.context
    constants = get_constants(ctx)
    precision = _precision(config)
    tally = _Tally("closed_form_integrals")
    top = min(3, constants.cap - 1)
    for level in range(top + 1):
        bracket = constants.bracket(level + 1).to_laurent()
        expected = -Laurent.one(ctx).divide(bracket, precision)
        function = QExpansion.monomial(ctx, level)
        limit = volkenborn_limit(function, precision=precision)
        for result in (
            volkenborn(function, precision),
            limit,
            volkenborn_qexpansion(function, precision),
        ):
            tally.record(
                f"t^(q^{level}) {result.method}",
                result.value.agrees_with(expected, precision),
            )
        for step in range(1, 4):
            numerator = Laurent.monomial(ctx, step * (ctx.q ** (level + 1) - 1)) - 1
            tally.record(
                f"t^(q^{level}) trace n={step}",
                limit.trace[step - 1].agrees_with(
                    numerator.divide(bracket, precision),
                    precision,
                ),
            )
    for index in range(min(6, constants.cap)):
        function = CarlitzExpansion.basis_vector(ctx, index)
        expected = Laurent.one(ctx).divide(
            constants.L(index + 1).to_laurent(),
            precision,
        )
        if index % 2 == 0:
            expected = -expected
        tally.record(
            f"f_{index} closed form",
            volkenborn(function, precision).value.agrees_with(expected, precision),
        )
        tally.record(
            f"f_{index} limit",
            volkenborn_limit(function, precision=precision).value.agrees_with(
                expected,
                precision,
            ),
        )
    return tally.result(f"int t^(q^n) for n <= {top}, int f_n for n <= 5")


@_check("invariance_laws")
def _invariance_laws(config: Config, rng: random.Random) -> CheckResult:
    ctx = config.context
    precision = _precision(config)
    tally = _Tally("invariance_laws")
    for label, function in _corpus(ctx, rng):
        for report in invariance_check(function, precision):
            tally.record_report(label, report)
        for report in sum_uniqueness_check(function):
            tally.record_report(label, report)
    return tally.result(
        "translation, iterated, scalar twist, vanishing and uniqueness laws",
    )


@_check("integral_of_module")
def _integral_of_module(config: Config, _rng: random.Random) -> CheckResult:
    ctx = config.context
    precision = _precision(config)
    tally = _Tally("integral_of_module")
    for power in (1, 2, 3):
        z = Laurent.monomial(ctx, power)
        for report in module_integral_check(z, precision):
            tally.record_report(f"z={z}", report)
    return tally.result("int C_s(z) ds = log_C(z) - z for z in (x, x^2, x^3)")


def _scalars(ctx: FqContext) -> list[Poly]:
    variable = Poly.variable(ctx)
    return [Poly.one(ctx), variable, variable**2, variable**2 + 1]


@_check("goss_integral_identity")
def _goss_integral_identity(config: Config, _rng: random.Random) -> CheckResult:
    ctx = config.context
    precision = _precision(config)
    tally = _Tally("goss_integral_identity")
    for scalar in _scalars(ctx):
        for power in (2, 3):
            z = Laurent.monomial(ctx, power)
            for report in goss_integral(scalar, z, precision):
                tally.record_report(f"a={scalar} z={z}", report)
    return tally.result("a in (1, x, x^2, x^2 + 1), z in (x^2, x^3)")


@_check("log_functional_equation")
def _log_functional_equation(config: Config, _rng: random.Random) -> CheckResult:
    ctx = config.context
    precision = _precision(config)
    tally = _Tally("log_functional_equation")
    for scalar in _scalars(ctx):
        for power in (1, 2, 3):
            z = Laurent.monomial(ctx, power)
            for report in log_functional_equation(scalar, z, precision):
                tally.record_report(f"a={scalar} z={z}", report)
    return tally.result("a log_C(z) = log_C(C_a(z)) and the exponential identity")


@_check("exp_log_roundtrip")
def _exp_log_roundtrip(config: Config, _rng: random.Random) -> CheckResult:
    ctx = config.context
    precision = _precision(config)
    tally = _Tally("exp_log_roundtrip")
    for power in (1, 2, 3):
        z = Laurent.monomial(ctx, power)
        for report in exp_log_roundtrip(z, precision):
            tally.record_report(f"z={z}", report)
    for power in (1, 2):
        t = Laurent.monomial(ctx, power)
        for report in exp_integral_identity(t, precision):
            tally.record_report(f"t={t}", report)
    return tally.result(
        "e_C and log_C are mutually inverse; int e_C(st) ds = t - e_C(t)",
    )


@_check("closed_form_gate")
def _closed_form_gate(config: Config, rng: random.Random) -> CheckResult:
    ctx = config.context
    precision = _precision(config)
    tally = _Tally("closed_form_gate")
    for label, function in _corpus(ctx, rng):
        results = integrate(function, "all", precision)
        tally.record(f"{label} methods agree", results_agree(results))
        exponent, bound = integral_bound(function, precision)
        tally.record(f"{label} continuity bound", exponent <= bound)
    return tally.result("closed form matches the limit definition on the corpus")


def run_check(name: str, config: Config) -> CheckResult:
    """Run one named check, turning library errors into a failure.

    :param name: the check name
    :type name: str
    :param config: the configuration
    :type config: Config
    :return: the check result
    :rtype: CheckResult
    """
    rng = seeded_random(config.seed, name)
    _LOGGER.debug("Running check %s", name)
    try:
        return CHECKS[name](config, rng)
    except FqCalcException as e:
        _LOGGER.error("Check %s raised %s", name, e)  # noqa: TRY400
        return CheckResult(name, "fail", f"{type(e).__name__}: {e}", 0, [str(e)])


if sys.version_info >= (3, 11):

    async def _run_concurrently(names: list[str], config: Config) -> list[CheckResult]:
        async with asyncio.TaskGroup() as group:
            tasks = [
                group.create_task(asyncio.to_thread(run_check, name, config))
                for name in names
            ]
        return [task.result() for task in tasks]


def run_checks(config: Config, names: list[str] | None = None) -> list[CheckResult]:
    """Run the acceptance checks and return them sorted by name.

    :param config: the configuration
    :type config: Config
    :param names: subset of check names, all checks by default
    :type names: list[str] | None
    :return: the results
    :rtype: list[CheckResult]
    :raises KeyError: on an unknown check name
    """
    names = sorted(CHECKS) if names is None else sorted(names)
    for name in names:
        if name not in CHECKS:
            msg = f"Unknown check {name!r}"
            raise KeyError(msg)
    if config.parallel and sys.version_info >= (3, 11):
        results = asyncio.run(_run_concurrently(names, config))
    else:
        results = [run_check(name, config) for name in names]
    return sorted(results, key=lambda result: result.name)
