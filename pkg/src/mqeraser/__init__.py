"""Quantum eraser with a reservoir of sequentially interacting probe atoms."""
from .core import (
    ExperimentConfig,
    InvalidConfigError,
    SingleExcitationState,
    ZeroProbabilityError,
    closed_form_state,
    gamma,
    interaction_coefficients,
)
from .dynamics import apply_probe_atom, evolve_to, initial_state
from .measurement import MeasurementBasis, ProjectionResult, project_all, single_atom_visibility
from .metrics import ComplementarityReport, K_sigma, complementarity_report
from .optimizer import EraserSolution, OptimizationOptions, eraser_optimum, maximize_visibility, sweep
from .verify import run_verification

__all__ = [
    "ComplementarityReport",
    "EraserSolution",
    "ExperimentConfig",
    "InvalidConfigError",
    "K_sigma",
    "MeasurementBasis",
    "OptimizationOptions",
    "ProjectionResult",
    "SingleExcitationState",
    "ZeroProbabilityError",
    "apply_probe_atom",
    "closed_form_state",
    "complementarity_report",
    "eraser_optimum",
    "evolve_to",
    "gamma",
    "initial_state",
    "interaction_coefficients",
    "maximize_visibility",
    "project_all",
    "run_verification",
    "single_atom_visibility",
    "sweep",
]
