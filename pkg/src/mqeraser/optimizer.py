"""Multi-start simplex search for the visibility-maximizing probe bases.

The search runs over theta_1..theta_n in [0, pi/2] and phi_2..phi_n in
[0, 2 pi); phi_1 is pinned to 0 because a common phase shift of every phi_i
leaves the outcome unchanged.  Each start is a bounded Nelder-Mead run that
is restarted from its own result until the objective stops improving.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import minimize

from .core import ExperimentConfig, check_n, closed_form_state
from .measurement import MeasurementBasis, project_all, projection_coefficients
from .metrics import delta_D_F, delta_D_R, delta_D_total

HALF_PI = 0.5 * math.pi
TWO_PI = 2.0 * math.pi
CERTIFY_STEP = 1e-4
CERTIFY_GAIN = 1e-8
_MAX_RESTARTS = 50
_POLISHED = 3


@dataclass(frozen=True)
class OptimizationOptions:
    starts: int = 20
    max_iterations: int = 2000
    objective_tolerance: float = 1e-9
    seed: int = 0

    def __post_init__(self):
        if self.starts < 1 or self.max_iterations < 1:
            raise ValueError("starts and max_iterations must be positive")
        if not self.objective_tolerance > 0:
            raise ValueError("objective_tolerance must be positive")
        if self.seed < 0:
            raise ValueError("seed must be nonnegative")


@dataclass(frozen=True)
class EraserSolution:
    n: int
    basis: MeasurementBasis
    visibility: float
    predictability: float
    concurrence: float
    delta_D_T: float
    delta_D_F: float
    delta_D_R: float
    certified: bool = True
    evaluations: int = field(default=0, compare=False)


class _Objective:
    """Negated post-measurement visibility as a function of the packed angles."""

    def __init__(self, config: ExperimentConfig, n: int):
        state = closed_form_state(config, n)
        self.n = n
        self.amp_e = state.amp_S0_excited
        self.amp_photon = state.amp_photon
        self.amp_atom = state.atom_amplitudes()
        self.evaluations = 0

    def unpack(self, x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        thetas = np.clip(x[: self.n], 0.0, HALF_PI)
        phis = np.concatenate(([0.0], x[self.n :]))
        return thetas, phis

    def __call__(self, x: np.ndarray) -> float:
        self.evaluations += 1
        # scipy keeps the simplex inside the bounds, so no clipping here
        phis = np.concatenate(([0.0], x[self.n :]))
        A, B, C = projection_coefficients(self.amp_e, self.amp_photon, self.amp_atom, x[: self.n], phis)
        norm_sq = abs(A) ** 2 + abs(B) ** 2 + abs(C) ** 2
        if norm_sq == 0.0:
            # impossible outcome: worst possible value
            return 0.0
        return -2.0 * abs(B) * abs(C) / norm_sq


def _bounds(n: int) -> list[tuple[float, float]]:
    return [(0.0, HALF_PI)] * n + [(0.0, TWO_PI)] * (n - 1)


def _local_search(
    obj: _Objective, x0: np.ndarray, options: OptimizationOptions, restarts: int = _MAX_RESTARTS
) -> tuple[np.ndarray, float]:
    bounds = _bounds(obj.n)
    x, fx = x0, obj(x0)
    for _ in range(restarts):
        res = minimize(
            obj,
            x,
            method="Nelder-Mead",
            bounds=bounds,
            options={
                "maxiter": options.max_iterations,
                "xatol": 1e-8,
                "fatol": options.objective_tolerance,
                "adaptive": len(x) > 2,
            },
        )
        improved = fx - res.fun
        if res.fun < fx:
            x, fx = res.x, res.fun
        if improved <= options.objective_tolerance:
            break
    return x, fx


def _perturbation_gain(obj: _Objective, x: np.ndarray, fx: float) -> tuple[float, np.ndarray]:
    """Largest objective improvement among +-CERTIFY_STEP coordinate moves."""
    best_gain, best_x = 0.0, x
    for lo_hi, k in zip(_bounds(obj.n), range(len(x))):
        for step in (CERTIFY_STEP, -CERTIFY_STEP):
            y = x.copy()
            y[k] = min(max(y[k] + step, lo_hi[0]), lo_hi[1])
            gain = fx - obj(y)
            if gain > best_gain:
                best_gain, best_x = gain, y
    return best_gain, best_x


def _canonical(obj: _Objective, x: np.ndarray) -> np.ndarray:
    thetas, phis = obj.unpack(x)
    return np.concatenate((thetas, np.mod(phis[1:], TWO_PI)))


def _baseline(config: ExperimentConfig) -> EraserSolution:
    return EraserSolution(
        n=0,
        basis=MeasurementBasis((), ()),
        visibility=0.0,
        predictability=0.0,
        concurrence=1.0,
        delta_D_T=delta_D_total(0.0),
        delta_D_F=delta_D_F(config, 0, 0.0),
        delta_D_R=delta_D_R(config, 0, 0.0),
    )


def maximize_visibility(
    config: ExperimentConfig, n: int, options: OptimizationOptions | None = None
) -> EraserSolution:
    """Best product measurement of atoms 1..n for the visibility of S0.

    Starts are drawn from a generator seeded by (seed, n), so a row does not
    depend on which other rows were computed.  Among all local optima the
    largest visibility wins; exact ties go to the lexicographically smaller
    theta vector.
    """
    options = options or OptimizationOptions()
    n = check_n(config, n)
    if n == 0:
        raise ValueError("maximize_visibility needs at least one measured atom")
    obj = _Objective(config, n)
    rng = np.random.default_rng([options.seed, n])
    # one simplex run per start, then restart-polish only the most promising few
    rough = []
    for _ in range(options.starts):
        x0 = np.concatenate((rng.uniform(0.0, HALF_PI, n), rng.uniform(0.0, TWO_PI, n - 1)))
        rough.append(_local_search(obj, x0, options, restarts=1))
    rough.sort(key=lambda c: c[1])
    candidates = []
    for x, _ in rough[:_POLISHED]:
        x, fx = _local_search(obj, x, options)
        x = _canonical(obj, x)
        candidates.append((fx, tuple(x[:n]), x))
    candidates.sort(key=lambda c: (c[0], c[1]))
    fx, _, x = candidates[0]

    certified = False
    for _ in range(_MAX_RESTARTS):
        gain, y = _perturbation_gain(obj, x, fx)
        if gain < CERTIFY_GAIN:
            certified = True
            break
        x, fx = _local_search(obj, y, options)
        x = _canonical(obj, x)

    thetas, phis = obj.unpack(x)
    basis = MeasurementBasis(tuple(thetas), tuple(phis))
    return solution_for_basis(config, basis, certified=certified, evaluations=obj.evaluations)


def solution_for_basis(
    config: ExperimentConfig, basis: MeasurementBasis, certified: bool = False, evaluations: int = 0
) -> EraserSolution:
    n = len(basis)
    report = project_all(closed_form_state(config, n), basis).report
    V = min(report.visibility, 1.0)
    return EraserSolution(
        n=n,
        basis=basis,
        visibility=V,
        predictability=report.predictability,
        concurrence=report.concurrence_S0_F,
        delta_D_T=delta_D_total(V),
        delta_D_F=delta_D_F(config, n, V),
        delta_D_R=delta_D_R(config, n, V),
        certified=certified,
        evaluations=evaluations,
    )


def sweep(config: ExperimentConfig, n_range, options: OptimizationOptions | None = None) -> list[EraserSolution]:
    """One optimized row per n, ordered by n; n = 0 is the unmeasured baseline."""
    rows = []
    for n in sorted(set(n_range)):
        n = check_n(config, n)
        rows.append(_baseline(config) if n == 0 else maximize_visibility(config, n, options))
    return rows


def eraser_optimum(config: ExperimentConfig, n: int) -> tuple[float, float, float]:
    """Supremum of the visibility over all product outcomes and the (P, C) it forces.

    With t_i = beta_i*/alpha_i* every quantity depends on the single complex
    number s = b sum_i a^(i-1) t_i, and V = 2|s| / (1 + a^(2n) + |s|^2) peaks at
    |s|^2 = 1 + a^(2n), so with x = a^(2n):
    V = 1/sqrt(1+x), P = x/(1+x), C = sqrt(x)/(1+x).
    """
    n = check_n(config, n)
    if n == 0:
        return 0.0, 0.0, 1.0
    x = config.a ** (2 * n)
    return 1.0 / math.sqrt(1.0 + x), x / (1.0 + x), math.sqrt(x) / (1.0 + x)
