"""FitReport wrappers for the pointwise symbol inequalities."""

from __future__ import annotations

import math
from collections.abc import Sequence

from boltzmann_smoothing.mollifier_ttc.tasks.bound_tasks import (
    DEFAULT_DELTAS,
    difference_bound_sweep,
    symbol_derivative_bound_check,
)
from boltzmann_smoothing.mollifier_ttc.tools.sweep_tools import FrequencySample
from boltzmann_smoothing.mollifier_ttc.tools.symbol_tools import MollifierSymbol
from boltzmann_smoothing.utils import log
from boltzmann_smoothing.veritas_ttc.tools.fit_tools import FitCase, FitReport, TrailLevel, decide
from boltzmann_smoothing.veritas_ttc.tools.inequality_tools import (
    MOLLIFIER_DIFFERENCE,
    MOLLIFIER_DIFFERENCE_POWER,
    SYMBOL_DERIVATIVE,
)


def check_mollifier_difference(
    lam: float,
    n0: float,
    sample: FrequencySample,
    *,
    form: str = "indicator",
    p: float | None = None,
    deltas: Sequence[float] = DEFAULT_DELTAS,
    doublings: int = 1,
) -> FitReport:
    """
    |M(xi) - M(xi - xi*)| against the region-wise bound, fitted per delta under sample doubling.

    ``form="indicator"`` uses the <xi>^lambda far-field term, ``form="power"`` the
    (<xi*>/<xi>)^p term with p >= n0 - lambda.
    """
    sweep = difference_bound_sweep(
        lam, n0, sample, p=p, deltas=deltas, doublings=doublings, form=form
    )
    trail: list[TrailLevel] = []
    for delta in sweep.deltas:
        trail.extend(
            TrailLevel(f"sample[delta={delta:g}]", size, value, size)
            for size, value in zip(sweep.sample_sizes, sweep.trail[delta])
        )
    fitted = sorted(sweep.fitted.items(), key=lambda item: -item[0])
    trail.extend(TrailLevel("delta", d, c, sweep.sample_sizes[-1]) for d, c in fitted)
    cases = tuple(
        FitCase(
            lhs=c,
            rhs=1.0,
            terms={f"region_{name}": v for name, v in sweep.region_sup[d].items()},
            label=f"delta={d:g}",
        )
        for d, c in fitted
    )
    verdict = decide(trail, extra_ok=sweep.stable)
    mark = "✅" if sweep.stable else "⚠️"
    log(f"{mark} difference bound ({form}): C={sweep.constant:.4g} -> {verdict}")
    return FitReport(
        inequality=MOLLIFIER_DIFFERENCE if form == "indicator" else MOLLIFIER_DIFFERENCE_POWER,
        cases=cases,
        constants={
            "C": sweep.constant,
            "sample_drift": sweep.sample_drift,
            "delta_drift": sweep.delta_drift,
        },
        trail=tuple(trail),
        verdict=verdict,
        parameters={**sweep.parameters, "form": form, "sample": sample.to_dict()},
        seeds=(sample.seed,),
    )


def check_symbol_derivative(
    M: MollifierSymbol,
    sample: FrequencySample,
    *,
    deltas: Sequence[float] = DEFAULT_DELTAS + (0.0,),
) -> FitReport:
    """
    |d^alpha M(xi)| <= C_alpha M(xi) <xi>^{-|alpha|} for |alpha| = 1, 2, uniformly in delta.

    The sample is refitted once at twice its size; both levels enter the trail.
    """
    M.validate()
    first = symbol_derivative_bound_check(M, sample, deltas=deltas)
    second = symbol_derivative_bound_check(M, sample.doubled(), deltas=deltas)
    trail: list[TrailLevel] = []
    cases: list[FitCase] = []
    ordered = sorted((float(d) for d in deltas), reverse=True)
    for order in (1, 2):
        key = f"C{order}"
        trail.append(TrailLevel(f"sample[{key}]", sample.count, first[key], sample.count))
        trail.append(
            TrailLevel(f"sample[{key}]", 2 * sample.count, second[key], 2 * sample.count)
        )
        for d in ordered:
            value = second["constants"][repr(d)][key]
            trail.append(TrailLevel(f"delta[{key}]", d, value, 2 * sample.count))
            cases.append(FitCase(lhs=value, rhs=1.0, label=f"{key}|delta={d:g}"))
    constants = {
        "C1": max(first["C1"], second["C1"]),
        "C2": max(first["C2"], second["C2"]),
        "delta_drift_1": second["delta_drift_1"],
        "delta_drift_2": second["delta_drift_2"],
    }
    finite = all(math.isfinite(constants[k]) for k in ("C1", "C2"))
    verdict = decide(trail, extra_ok=finite and first["stable"] and second["stable"])
    return FitReport(
        inequality=SYMBOL_DERIVATIVE,
        cases=tuple(cases),
        constants=constants,
        trail=tuple(trail),
        verdict=verdict,
        parameters={"symbol": M.to_dict(), "deltas": ordered, "sample": sample.to_dict()},
        seeds=(sample.seed,),
    )
