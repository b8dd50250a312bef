"""Closed-form complementarity quantities.

Everything here is evaluated directly from a = cos(g dt), b = -i sin(g dt).
The brute-force counterparts live in :mod:`mqeraser.oracle`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .core import ExperimentConfig, check_atom, check_n


@dataclass(frozen=True)
class ComplementarityReport:
    """Concurrence, visibility and predictability of S0 in a pure S0+F state."""

    concurrence_S0_F: float
    visibility: float
    predictability: float
    relation_residual: float


def _atom_weight(config: ExperimentConfig, i: int) -> float:
    return (config.a ** (i - 1) * abs(config.b)) ** 2


def distinguishability_S0_F(config: ExperimentConfig, n: int) -> float:
    n = check_n(config, n)
    return config.a ** (2 * n)


def distinguishability_S0_atom(config: ExperimentConfig, n: int, i: int) -> float:
    n = check_n(config, n)
    i = check_atom(n, i)
    return _atom_weight(config, i)


def total_distinguishability(config: ExperimentConfig, n: int) -> float:
    n = check_n(config, n)
    terms = [config.a ** (2 * n)] + [_atom_weight(config, i) for i in range(1, n + 1)]
    return math.fsum(terms)


def concurrence_S0_F(config: ExperimentConfig, n: int) -> float:
    n = check_n(config, n)
    return config.a**n


def concurrence_S0_atom(config: ExperimentConfig, n: int, i: int) -> float:
    n = check_n(config, n)
    i = check_atom(n, i)
    return config.a ** (i - 1) * abs(config.b)


def pre_measurement_visibility_predictability(config: ExperimentConfig, n: int) -> tuple[float, float]:
    # rho_S0 stays maximally mixed: the |e> branch always pairs with the
    # F+R vacuum, which the |g> branch never occupies
    check_n(config, n)
    return 0.0, 0.0


def K_sigma(config: ExperimentConfig, n: int, i: int, theta: float) -> float:
    """Which-way knowledge obtainable by measuring atom ``i`` along ``theta``."""
    n = check_n(config, n)
    i = check_atom(n, i)
    return _atom_weight(config, i) * abs(math.cos(2.0 * theta))


def complementarity_report(A: complex, B: complex, C: complex) -> ComplementarityReport:
    """Report for the S0+F state (A|g,1> + B|g,0> + C|e,0>)/N.

    Predictability is returned as a magnitude.
    """
    x, y, z = abs(A) ** 2, abs(B) ** 2, abs(C) ** 2
    norm_sq = x + y + z
    if not norm_sq > 0.0:
        raise ValueError("coefficients (A, B, C) are all zero")
    vis = 2.0 * abs(B) * abs(C) / norm_sq
    conc = 2.0 * abs(A) * abs(C) / norm_sq
    pred = abs(z - x - y) / norm_sq
    return ComplementarityReport(
        concurrence_S0_F=conc,
        visibility=vis,
        predictability=pred,
        relation_residual=conc**2 + vis**2 + pred**2 - 1.0,
    )


def _check_visibility(V: float) -> float:
    if not 0.0 <= V <= 1.0:
        raise ValueError(f"visibility must lie in [0, 1], got {V!r}")
    return V


def delta_D_total(V: float) -> float:
    V = _check_visibility(V)
    return math.sqrt(1.0 - V * V) - 1.0


def delta_D_F(config: ExperimentConfig, n: int, V: float) -> float:
    V = _check_visibility(V)
    return math.sqrt(1.0 - V * V) - distinguishability_S0_F(config, n)


def delta_D_R(config: ExperimentConfig, n: int, V: float) -> float:
    """Reservoir share of the change, taken as delta_D_total - delta_D_F."""
    return delta_D_total(V) - delta_D_F(config, n, V)
