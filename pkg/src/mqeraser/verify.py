"""Oracle-versus-closed-form cross checks over random configurations."""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import metrics
from .core import ExperimentConfig, ZeroProbabilityError, closed_form_state
from .dynamics import evolve_to
from .measurement import MeasurementBasis, project_all
from .oracle import (
    MAX_ORACLE_ATOMS,
    distinguishability_bruteforce,
    embed,
    evolve,
    partial_trace,
    project_bruteforce,
    visibility_predictability_bruteforce,
    wootters_concurrence,
)

TOLERANCE = 1e-10


@dataclass
class Check:
    name: str
    tolerance: float = TOLERANCE
    max_residual: float = 0.0
    count: int = 0

    def record(self, residual: float):
        self.max_residual = max(self.max_residual, float(residual))
        self.count += 1

    @property
    def passed(self) -> bool:
        return self.count > 0 and self.max_residual <= self.tolerance


@dataclass
class VerificationReport:
    checks: dict[str, Check] = field(default_factory=dict)

    def check(self, name: str, tolerance: float = TOLERANCE) -> Check:
        if name not in self.checks:
            self.checks[name] = Check(name, tolerance)
        return self.checks[name]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks.values())

    def lines(self) -> list[str]:
        return [
            f"{'PASS' if c.passed else 'FAIL'} {c.name}: max residual {c.max_residual:.3e} "
            f"(tol {c.tolerance:.0e}, {c.count} cases)"
            for c in self.checks.values()
        ]


def random_config(rng: np.random.Generator, min_N: int) -> ExperimentConfig:
    N = int(rng.integers(max(min_N, 1), max(min_N, 1) + 12))
    g_dt = rng.uniform(1e-3, math.pi / 2 - 1e-3)
    g = rng.uniform(0.2, 5.0)
    return ExperimentConfig(g_coupling=g, total_time_T=g_dt * N / g, reservoir_size_N=N)


def _random_basis(rng: np.random.Generator, n: int) -> MeasurementBasis:
    return MeasurementBasis(tuple(rng.uniform(0, math.pi / 2, n)), tuple(rng.uniform(0, 2 * math.pi, n)))


def run_verification(max_n: int = 8, trials: int = 50, seed: int = 0) -> VerificationReport:
    """Compare every closed-form quantity with the dense simulator for n <= max_n."""
    if not 0 <= max_n <= MAX_ORACLE_ATOMS:
        raise ValueError(f"max_n must lie in [0, {MAX_ORACLE_ATOMS}]")
    rng = np.random.default_rng(seed)
    rep = VerificationReport()
    rep.check("state: dense JC evolution vs closed form", 1e-12)
    rep.check("state: stepwise vs closed form", 1e-12)
    rep.check("state: excitation leakage", 1e-12)
    rep.check("D(S0,F) trace norm vs a^2n")
    rep.check("D(S0,a_i) trace norm vs |a^(i-1) b|^2")
    rep.check("conservation of distinguishability", 1e-12)
    rep.check("C(S0,F) Wootters vs a^n")
    rep.check("C(S0,a_i) Wootters vs |a^(i-1) b|")
    rep.check("V, P of S0 before measurement")
    rep.check("post-measurement V, P, C vs projection formulas")
    rep.check("post-measurement complementarity relation", 1e-12)

    for _ in range(trials):
        cfg = random_config(rng, max_n)
        for n in range(max_n + 1):
            closed = closed_form_state(cfg, n)
            dense = evolve(n, cfg.g_dt)
            rep.check("state: dense JC evolution vs closed form").record(
                np.max(np.abs(dense.amplitudes - embed(closed).amplitudes))
            )
            rep.check("state: stepwise vs closed form").record(
                np.max(np.abs(evolve_to(cfg, n).as_array() - closed.as_array()))
            )
            rep.check("state: excitation leakage").record(dense.excitation_leakage())

            d_field = distinguishability_bruteforce(dense, ["F"])
            rep.check("D(S0,F) trace norm vs a^2n").record(abs(d_field - metrics.distinguishability_S0_F(cfg, n)))
            total = metrics.distinguishability_S0_F(cfg, n)
            for i in range(1, n + 1):
                d_atom = distinguishability_bruteforce(dense, [i])
                rep.check("D(S0,a_i) trace norm vs |a^(i-1) b|^2").record(
                    abs(d_atom - metrics.distinguishability_S0_atom(cfg, n, i))
                )
                total += metrics.distinguishability_S0_atom(cfg, n, i)
                c_atom = wootters_concurrence(partial_trace(dense, ["S0", i]))
                rep.check("C(S0,a_i) Wootters vs |a^(i-1) b|").record(
                    abs(c_atom - metrics.concurrence_S0_atom(cfg, n, i))
                )
            rep.check("conservation of distinguishability").record(
                abs(metrics.total_distinguishability(cfg, n) - 1.0)
            )
            c_field = wootters_concurrence(partial_trace(dense, ["S0", "F"]))
            rep.check("C(S0,F) Wootters vs a^n").record(abs(c_field - metrics.concurrence_S0_F(cfg, n)))

            V, P = visibility_predictability_bruteforce(partial_trace(dense, ["S0"]))
            V0, P0 = metrics.pre_measurement_visibility_predictability(cfg, n)
            rep.check("V, P of S0 before measurement").record(max(abs(V - V0), abs(P - P0)))

            if n == 0:
                continue
            basis = _random_basis(rng, n)
            try:
                proj = project_all(closed, basis)
                post, _ = project_bruteforce(dense, basis)
            except ZeroProbabilityError:
                continue
            Vm, Pm = visibility_predictability_bruteforce(partial_trace(post, ["S0"]))
            Cm = wootters_concurrence(partial_trace(post, ["S0", "F"]))
            r = proj.report
            rep.check("post-measurement V, P, C vs projection formulas").record(
                max(abs(Vm - r.visibility), abs(Pm - r.predictability), abs(Cm - r.concurrence_S0_F))
            )
            rep.check("post-measurement complementarity relation").record(abs(r.relation_residual))
    return rep
