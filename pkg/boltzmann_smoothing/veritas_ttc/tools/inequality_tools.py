"""
Inequality ids accepted by ``verify --inequality``.

The canonical ids are the ones written into every FitReport and run summary. The descriptive
names are kept as aliases for configs written against them.
"""

from __future__ import annotations

COERCIVITY = "coer-2.2"
COERCIVITY_LQ = "coer-2.3"
ENTROPY_COERCIVITY = "entropy-2.6"
UPPER_BOUND = "upper-3.5"
COMMUTATOR = "commutator-3.4"
INTERP_SOBOLEV = "interp-3.5"
INTERP_LQ = "interp-3.6"
MOLLIFIER_DIFFERENCE = "mollifier-3.3"
MOLLIFIER_DIFFERENCE_POWER = "mollifier-3.4"
SYMBOL_DERIVATIVE = "symbol-3.2"
TAIL_COMMUTATOR = "tail-commutator"
DISSIPATION_LQ = "dissipation-lq"
MOMENT_BKW = "moment-bkw"

INEQUALITY_ALIASES: dict[str, str] = {
    "coercivity": COERCIVITY,
    "coercivity-lq": COERCIVITY_LQ,
    "entropy-coercivity": ENTROPY_COERCIVITY,
    "upper-bound": UPPER_BOUND,
    "commutator": COMMUTATOR,
    "interp-sobolev": INTERP_SOBOLEV,
    "interp-lq": INTERP_LQ,
    "mollifier-difference": MOLLIFIER_DIFFERENCE,
    "mollifier-difference-power": MOLLIFIER_DIFFERENCE_POWER,
    "symbol-derivative": SYMBOL_DERIVATIVE,
}


def canonical_inequality(name: str) -> str:
    """Canonical id for ``name``; names that are not aliases come back unchanged."""
    key = name.strip()
    return INEQUALITY_ALIASES.get(key, key)
