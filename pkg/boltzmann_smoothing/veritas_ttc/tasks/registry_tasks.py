"""
Registry of verification checks by inequality id.

Every runner takes a VerifyRequest and builds its families and parameters from it; parameter
values may arrive as strings (config files) or as numbers.
"""

from __future__ import annotations

from collections.abc import Callable, Sequence
from typing import Any

from boltzmann_smoothing.functionals_ttc.tools.request_tools import UniformClassParams
from boltzmann_smoothing.mollifier_ttc.tasks.bound_tasks import DEFAULT_DELTAS
from boltzmann_smoothing.mollifier_ttc.tasks.symbol_tasks import default_n0
from boltzmann_smoothing.mollifier_ttc.tools.sweep_tools import FrequencySample
from boltzmann_smoothing.mollifier_ttc.tools.symbol_tools import make_symbol
from boltzmann_smoothing.utils import log
from boltzmann_smoothing.veritas_ttc.tasks.coercivity_tasks import (
    check_coercivity,
    check_dissipation_lq,
    check_entropy_coercivity,
)
from boltzmann_smoothing.veritas_ttc.tasks.interpolation_tasks import (
    check_interpolation_lq,
    check_interpolation_lq_sweep,
    check_interpolation_sobolev,
)
from boltzmann_smoothing.veritas_ttc.tasks.operator_bound_tasks import (
    check_commutator,
    check_moment_bkw,
    check_tail_commutator,
    check_upper_bound,
)
from boltzmann_smoothing.veritas_ttc.tasks.symbol_check_tasks import (
    check_mollifier_difference,
    check_symbol_derivative,
)
from boltzmann_smoothing.veritas_ttc.tools.family_tools import (
    FunctionFamily,
    class_family_parameters,
)
from boltzmann_smoothing.veritas_ttc.tools.fit_tools import FitReport
from boltzmann_smoothing.veritas_ttc.tools.inequality_tools import (
    COERCIVITY,
    COERCIVITY_LQ,
    COMMUTATOR,
    DISSIPATION_LQ,
    ENTROPY_COERCIVITY,
    INEQUALITY_ALIASES,
    INTERP_LQ,
    INTERP_SOBOLEV,
    MOLLIFIER_DIFFERENCE,
    MOLLIFIER_DIFFERENCE_POWER,
    MOMENT_BKW,
    SYMBOL_DERIVATIVE,
    TAIL_COMMUTATOR,
    UPPER_BOUND,
    canonical_inequality,
)
from boltzmann_smoothing.veritas_ttc.tools.request_tools import VerifyRequest

Runner = Callable[[VerifyRequest], FitReport]

PARAMETER_KEYS = frozenset(
    {
        "case",
        "delta",
        "deltas",
        "doublings",
        "ell",
        "ells",
        "f_count",
        "f_generator",
        "g_count",
        "g_generator",
        "h_count",
        "h_generator",
        "k",
        "lambda",
        "moment_order",
        "n0",
        "order_gap",
        "p",
        "ps",
        "q",
        "q_points",
        "r",
        "radius",
        "s_prime",
        "shapes",
        "subfamilies",
        "uniform_D0",
        "uniform_E0",
    }
)
"""Parameter names the registered runners read from a VerifyRequest."""


def _float(req: VerifyRequest, name: str, default: float) -> float:
    value = req.get(name, default)
    try:
        return float(value)
    except (TypeError, ValueError) as exc:
        raise ValueError(f"verify parameter {name}={value!r} is not a number") from exc


def _optional_float(req: VerifyRequest, name: str) -> float | None:
    value = req.get(name)
    if value is None or value == "":
        return None
    return _float(req, name, 0.0)


def _floats(req: VerifyRequest, name: str, default: Sequence[float]) -> tuple[float, ...]:
    value = req.get(name, default)
    if isinstance(value, str):
        items: Sequence[Any] = [item for item in value.replace(";", ",").split(",") if item.strip()]
    else:
        items = value
    try:
        return tuple(float(item) for item in items)
    except (TypeError, ValueError) as exc:
        raise ValueError(f"verify parameter {name}={value!r} is not a list of numbers") from exc


def _family(req: VerifyRequest, role: str, generator: str, offset: int) -> FunctionFamily:
    return FunctionFamily(
        generator=str(req.get(f"{role}_generator", generator)),
        count=int(req.get(f"{role}_count", req.family_size)),
        seed=req.seed + offset,
    )


def _class_family(req: VerifyRequest) -> FunctionFamily:
    generator = str(req.get("g_generator", "gaussian_mixture"))
    parameters = class_family_parameters() if generator == "gaussian_mixture" else {}
    return FunctionFamily(
        generator=generator,
        count=int(req.get("g_count", req.family_size)),
        seed=req.seed,
        parameters=parameters,
    )


def _class(req: VerifyRequest) -> UniformClassParams:
    return UniformClassParams(D0=_float(req, "uniform_D0", 1.0), E0=_float(req, "uniform_E0", 4.0))


def _sample(req: VerifyRequest) -> FrequencySample:
    return FrequencySample(
        count=req.sample_count,
        radius=_float(req, "radius", 64.0),
        seed=req.seed,
    )


def _coercivity(req: VerifyRequest) -> FitReport:
    return check_coercivity(
        _class_family(req),
        _family(req, "f", "bump_sum", 1),
        req.ws,
        params=_class(req),
        subfamilies=int(req.get("subfamilies", 2)),
    )


def _coercivity_lq(req: VerifyRequest) -> FitReport:
    return check_coercivity(
        _class_family(req),
        _family(req, "f", "bump_sum", 1),
        req.ws,
        params=_class(req),
        variant="lq",
        s_prime=_float(req, "s_prime", 0.5 * req.ws.xs.s),
        subfamilies=int(req.get("subfamilies", 2)),
    )


def _entropy_coercivity(req: VerifyRequest) -> FitReport:
    return check_entropy_coercivity(_family(req, "f", "gaussian_mixture", 0), req.ws)


def _dissipation_lq(req: VerifyRequest) -> FitReport:
    return check_dissipation_lq(
        _family(req, "g", "gaussian_mixture", 0),
        req.ws,
        s_prime=_float(req, "s_prime", 0.5 * req.ws.xs.s),
        moment_order=_float(req, "moment_order", 4.0),
    )


def _upper_bound(req: VerifyRequest) -> FitReport:
    xs = req.ws.xs
    return check_upper_bound(
        _family(req, "f", "gaussian_mixture", 0),
        _family(req, "g", "bump_sum", 1),
        _family(req, "h", "random_band_limited", 2),
        req.ws,
        r=_float(req, "r", 2.0 * xs.s),
        ell=_float(req, "ell", 0.0),
        max_cases=req.sample_count,
    )


def _commutator(req: VerifyRequest) -> FitReport:
    xs = req.ws.xs
    lam = _float(req, "lambda", 1.0)
    case = req.get("case")
    return check_commutator(
        _family(req, "f", "gaussian_mixture", 0),
        _family(req, "g", "bump_sum", 1),
        _family(req, "h", "random_band_limited", 2),
        req.ws,
        lam=lam,
        n0=_float(req, "n0", default_n0(lam, xs.gamma)),
        s_prime=_float(req, "s_prime", 0.8 * xs.s),
        deltas=_floats(req, "deltas", DEFAULT_DELTAS),
        case=None if case in (None, "") else int(case),
        max_cases=req.sample_count,
    )


def _tail_commutator(req: VerifyRequest) -> FitReport:
    xs = req.ws.xs
    lam = _float(req, "lambda", 1.0)
    symbol = make_symbol(
        lam, _float(req, "delta", 0.1), _float(req, "n0", default_n0(lam, xs.gamma))
    )
    return check_tail_commutator(
        _family(req, "f", "gaussian_mixture", 0),
        _family(req, "g", "bump_sum", 1),
        _family(req, "h", "random_band_limited", 2),
        req.ws,
        M=symbol,
        order_gap=_float(req, "order_gap", 2.0),
        max_cases=req.sample_count,
    )


def _interp_sobolev(req: VerifyRequest) -> FitReport:
    return check_interpolation_sobolev(
        _family(req, "f", "gaussian_mixture", 0),
        req.ws.grid,
        k=_float(req, "k", 1.0),
        p=_float(req, "p", 1.0),
        delta=_float(req, "delta", 0.5),
    )


def _interp_lq(req: VerifyRequest) -> FitReport:
    family = _family(req, "f", "gaussian_mixture", 0)
    q = _optional_float(req, "q")
    if q is not None:
        return check_interpolation_lq(
            family, req.ws.grid, p=_float(req, "p", 2.0), q=q, ell=_float(req, "ell", 1.0)
        )
    return check_interpolation_lq_sweep(
        family,
        req.ws.grid,
        ps=_floats(req, "ps", (2.0, 3.0, 4.0)),
        ells=_floats(req, "ells", (0.0, 1.0, 2.0)),
        q_points=int(req.get("q_points", 3)),
    )


def _difference(form: str) -> Runner:
    def run(req: VerifyRequest) -> FitReport:
        return check_mollifier_difference(
            _float(req, "lambda", 2.0),
            _float(req, "n0", 4.0),
            _sample(req),
            form=form,
            p=_optional_float(req, "p") if form == "power" else None,
            deltas=_floats(req, "deltas", DEFAULT_DELTAS),
            doublings=int(req.get("doublings", 1)),
        )

    return run


def _symbol_derivative(req: VerifyRequest) -> FitReport:
    symbol = make_symbol(_float(req, "lambda", 2.0), 0.0, _float(req, "n0", 4.0))
    return check_symbol_derivative(
        symbol, _sample(req), deltas=_floats(req, "deltas", DEFAULT_DELTAS + (0.0,))
    )


def _moment_bkw(req: VerifyRequest) -> FitReport:
    return check_moment_bkw(req.ws, shapes=_floats(req, "shapes", (0.6, 0.7, 0.8, 0.9)))


INEQUALITIES: dict[str, Runner] = {
    COERCIVITY: _coercivity,
    COERCIVITY_LQ: _coercivity_lq,
    ENTROPY_COERCIVITY: _entropy_coercivity,
    UPPER_BOUND: _upper_bound,
    COMMUTATOR: _commutator,
    INTERP_SOBOLEV: _interp_sobolev,
    INTERP_LQ: _interp_lq,
    MOLLIFIER_DIFFERENCE: _difference("indicator"),
    MOLLIFIER_DIFFERENCE_POWER: _difference("power"),
    SYMBOL_DERIVATIVE: _symbol_derivative,
    TAIL_COMMUTATOR: _tail_commutator,
    DISSIPATION_LQ: _dissipation_lq,
    MOMENT_BKW: _moment_bkw,
}
"""Runners by canonical id; ``INEQUALITY_ALIASES`` maps the descriptive names onto these keys."""


def register_inequality(name: str, runner: Runner) -> None:
    if name in INEQUALITIES or name in INEQUALITY_ALIASES:
        raise ValueError(f"inequality {name!r} already registered")
    INEQUALITIES[name] = runner


def resolve_inequality(name: str) -> str:
    """Canonical id for ``name`` (an id or an alias); unknown names raise ValueError."""
    key = canonical_inequality(name)
    if key not in INEQUALITIES:
        known = ", ".join(sorted(INEQUALITIES))
        raise ValueError(f"unknown inequality {name!r}; known: {known}")
    return key


def run_check(req: VerifyRequest) -> FitReport:
    """Run the check registered under ``req.inequality`` or its alias."""
    req.validate()
    key = resolve_inequality(req.inequality)
    runner = INEQUALITIES[key]
    log(f"🧮 verify {key} (seed {req.seed}, family size {req.family_size})")
    report = runner(req)
    report.validate()
    mark = {"pass": "✅", "fail": "❌"}.get(report.verdict, "⚠️")
    log(f"{mark} {key}: {report.verdict}, sup ratio {report.sup_ratio:.4g}")
    return report
