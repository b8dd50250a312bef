"""Projective product measurements on the probe atoms.

Atom i is projected on |M_i> = cos(theta_i)|g> + exp(i phi_i) sin(theta_i)|e>.
After projecting every interacted atom the S0+F pair is left in the pure state
(A|g,1> + B|g,0> + C|e,0>)/N, with the coefficients obtained as conjugated
overlaps <M| with each branch of psi(n).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .core import (
    ExperimentConfig,
    SingleExcitationState,
    ZeroProbabilityError,
    check_atom,
    check_n,
)
from .metrics import ComplementarityReport, complementarity_report

TWO_PI = 2.0 * math.pi
HALF_PI = 0.5 * math.pi
# theta this close to pi/2 projects exactly on |e>; cos(pi/2) is 6e-17 in floats
_EDGE = 1e-15


def cos_sin(thetas) -> tuple[np.ndarray, np.ndarray]:
    """cos and sin of the polar angles, exact at theta = pi/2."""
    thetas = np.asarray(thetas, dtype=float)
    edge = thetas >= HALF_PI - _EDGE
    return np.where(edge, 0.0, np.cos(thetas)), np.where(edge, 1.0, np.sin(thetas))


@dataclass(frozen=True)
class MeasurementBasis:
    """Per-atom angles (theta_i, phi_i); theta in [0, pi/2], phi in [0, 2 pi)."""

    thetas: tuple[float, ...]
    phis: tuple[float, ...]

    def __post_init__(self):
        thetas = tuple(float(t) for t in self.thetas)
        phis = tuple(float(p) % TWO_PI for p in self.phis)
        if len(thetas) != len(phis):
            raise ValueError("thetas and phis must have equal length")
        for t in thetas:
            if not -1e-12 <= t <= HALF_PI + 1e-12:
                raise ValueError(f"theta must lie in [0, pi/2], got {t!r}")
        thetas = tuple(min(max(t, 0.0), HALF_PI) for t in thetas)
        object.__setattr__(self, "thetas", thetas)
        object.__setattr__(self, "phis", phis)

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[float, float]]) -> "MeasurementBasis":
        pairs = list(pairs)
        return cls(tuple(p[0] for p in pairs), tuple(p[1] for p in pairs))

    @classmethod
    def uniform(cls, n: int, theta: float, phi: float = 0.0) -> "MeasurementBasis":
        return cls((theta,) * n, (phi,) * n)

    def __len__(self):
        return len(self.thetas)

    @property
    def alphas(self) -> np.ndarray:
        return cos_sin(self.thetas)[0]

    @property
    def betas(self) -> np.ndarray:
        return np.exp(1j * np.asarray(self.phis)) * cos_sin(self.thetas)[1]

    def orthogonal(self, i: int) -> "MeasurementBasis":
        """Same basis with atom ``i`` (1-based) flipped to the orthogonal outcome."""
        thetas, phis = list(self.thetas), list(self.phis)
        thetas[i - 1] = math.pi / 2 - thetas[i - 1]
        phis[i - 1] = phis[i - 1] + math.pi
        return MeasurementBasis(tuple(thetas), tuple(phis))

    def all_outcomes(self) -> list["MeasurementBasis"]:
        """The 2^n product outcomes of the orthonormal basis {|M_i>, |M_i^perp>}."""
        outcomes = [self]
        for i in range(1, len(self) + 1):
            outcomes = outcomes + [b.orthogonal(i) for b in outcomes]
        return outcomes


@dataclass(frozen=True)
class ProjectionResult:
    A: complex
    B: complex
    C: complex
    norm_sq: float
    probability: float
    report: ComplementarityReport


def _leave_one_out_products(values: np.ndarray) -> np.ndarray:
    """prod_{j != i} values[j] for every i, without dividing."""
    prefix = np.concatenate(([1.0], np.cumprod(values[:-1])))
    suffix = np.concatenate((np.cumprod(values[:0:-1])[::-1], [1.0]))
    return prefix * suffix


def projection_coefficients(
    amp_S0_excited: complex,
    amp_photon: complex,
    amp_atom: np.ndarray,
    thetas: np.ndarray,
    phis: np.ndarray,
) -> tuple[complex, complex, complex]:
    """Unnormalized (A, B, C) for the product outcome given by the angles."""
    # alpha_i is real by the phase convention
    alpha, sin = cos_sin(thetas)
    beta_c = np.exp(-1j * phis) * sin
    all_ground = np.prod(alpha)
    A = amp_photon * all_ground
    C = amp_S0_excited * all_ground
    B = np.sum(amp_atom * beta_c * _leave_one_out_products(alpha)) if len(amp_atom) else 0j
    return complex(A), complex(B), complex(C)


def project_all(state: SingleExcitationState, basis: MeasurementBasis) -> ProjectionResult:
    if len(basis) != state.n_interacted:
        raise ValueError(
            f"basis has {len(basis)} angle pairs but {state.n_interacted} atoms interacted"
        )
    A, B, C = projection_coefficients(
        state.amp_S0_excited,
        state.amp_photon,
        state.atom_amplitudes(),
        np.asarray(basis.thetas),
        np.asarray(basis.phis),
    )
    norm_sq = abs(A) ** 2 + abs(B) ** 2 + abs(C) ** 2
    if norm_sq == 0.0:
        raise ZeroProbabilityError("outcome has zero overlap with every branch")
    prob = norm_sq / state.norm_sq
    return ProjectionResult(A, B, C, norm_sq, prob, complementarity_report(A, B, C))


def single_atom_visibility(
    config: ExperimentConfig, n: int, i: int, theta: float, phi: float = 0.0
) -> float:
    """Visibility of S0 after measuring only atom ``i``, the others left untouched.

    V = 2 |alpha beta* c| / (|alpha|^2 (2 - |c|^2) + |beta|^2 |c|^2), c = a^(i-1) b.
    Independent of ``phi``.
    """
    n = check_n(config, n)
    i = check_atom(n, i)
    c = config.a ** (i - 1) * abs(config.b)
    alpha, beta = math.cos(theta), math.sin(theta)
    norm_sq = alpha**2 * (2.0 - c**2) + beta**2 * c**2
    if norm_sq <= 0.0:
        raise ZeroProbabilityError("degenerate single-atom outcome")
    return 2.0 * abs(alpha * beta * c) / norm_sq

