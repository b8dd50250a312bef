"""Experiment parameters and the closed-form single-excitation state.

The global register is the interferometric atom S0, the field mode F and the
probe atoms 1..n that have crossed the cavity.  Starting from
(|g,1> + |e,0>)/sqrt(2), every probe atom interacts resonantly with the field
for the same time dt = T/N, so the state stays in the one-excitation sector:

    psi(n) = (|e,0_R,0> + a^n |g,0_R,1> + sum_i a^(i-1) b |g,i_R,0>) / sqrt(2)

with a = cos(g dt) and b = -i sin(g dt).  Dynamics are in the interaction
picture at resonance, so the mode frequency never enters.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

SQRT_HALF = 1.0 / math.sqrt(2.0)


class InvalidConfigError(ValueError):
    """Raised when experiment parameters violate 0 < g*dt < pi/2."""


class ZeroProbabilityError(ValueError):
    """Raised when a requested measurement outcome has vanishing probability."""


@dataclass(frozen=True)
class ExperimentConfig:
    """Coupling, total interaction time and reservoir size.

    ``mode_frequency_omega`` is carried for bookkeeping only.
    """

    g_coupling: float
    total_time_T: float
    reservoir_size_N: int
    mode_frequency_omega: float = 0.0

    def __post_init__(self):
        if not self.g_coupling > 0:
            raise InvalidConfigError(f"g_coupling must be positive, got {self.g_coupling}")
        if not self.total_time_T > 0:
            raise InvalidConfigError(f"total_time_T must be positive, got {self.total_time_T}")
        if isinstance(self.reservoir_size_N, bool) or int(self.reservoir_size_N) != self.reservoir_size_N:
            raise InvalidConfigError(f"reservoir_size_N must be an integer, got {self.reservoir_size_N}")
        if self.reservoir_size_N < 1:
            raise InvalidConfigError(f"reservoir_size_N must be >= 1, got {self.reservoir_size_N}")
        object.__setattr__(self, "reservoir_size_N", int(self.reservoir_size_N))
        g_dt = self.g_dt
        if not 0.0 < g_dt < math.pi / 2:
            raise InvalidConfigError(f"g*dt = {g_dt!r} outside the open interval (0, pi/2)")

    @classmethod
    def from_gT(cls, gT: float, N: int, g: float = 1.0) -> "ExperimentConfig":
        """Build a config from the dimensionless product g*T."""
        return cls(g_coupling=g, total_time_T=gT / g, reservoir_size_N=N)

    @property
    def dt(self) -> float:
        return self.total_time_T / self.reservoir_size_N

    @property
    def g_dt(self) -> float:
        return self.g_coupling * self.total_time_T / self.reservoir_size_N

    @property
    def gT(self) -> float:
        return self.g_coupling * self.total_time_T

    @property
    def a(self) -> float:
        return math.cos(self.g_dt)

    @property
    def b(self) -> complex:
        return -1j * math.sin(self.g_dt)


@dataclass(frozen=True)
class InteractionCoefficients:
    a: float
    b: complex


@dataclass(frozen=True)
class SingleExcitationState:
    """Amplitudes of psi(n) in the one-excitation basis.

    ``amp_atom[i-1]`` is the amplitude of |g, i_R, 0>, the branch where probe
    atom ``i`` carries the excitation.
    """

    n_interacted: int
    amp_S0_excited: complex
    amp_photon: complex
    amp_atom: tuple[complex, ...] = ()

    def __post_init__(self):
        if len(self.amp_atom) != self.n_interacted:
            raise ValueError(
                f"expected {self.n_interacted} atom amplitudes, got {len(self.amp_atom)}"
            )

    @property
    def norm_sq(self) -> float:
        return (
            abs(self.amp_S0_excited) ** 2
            + abs(self.amp_photon) ** 2
            + sum(abs(c) ** 2 for c in self.amp_atom)
        )

    def atom_amplitudes(self) -> np.ndarray:
        return np.asarray(self.amp_atom, dtype=complex)

    def as_array(self) -> np.ndarray:
        """(amp_S0_excited, amp_photon, amp_atom[1..n]) as one vector."""
        return np.array([self.amp_S0_excited, self.amp_photon, *self.amp_atom], dtype=complex)


def check_n(config: ExperimentConfig, n: int) -> int:
    if isinstance(n, bool) or int(n) != n or not 0 <= n <= config.reservoir_size_N:
        raise ValueError(f"n must be an integer in [0, {config.reservoir_size_N}], got {n}")
    return int(n)


def check_atom(n: int, i: int) -> int:
    if isinstance(i, bool) or int(i) != i or not 1 <= i <= n:
        raise ValueError(f"atom index must be in [1, {n}], got {i}")
    return int(i)


def interaction_coefficients(config: ExperimentConfig) -> InteractionCoefficients:
    # the config constructor already enforces the bound; double check for
    # instances built by object.__new__ / replace tricks
    g_dt = config.g_dt
    if not 0.0 < g_dt < math.pi / 2:
        raise InvalidConfigError(f"g*dt = {g_dt!r} outside (0, pi/2)")
    return InteractionCoefficients(a=math.cos(g_dt), b=-1j * math.sin(g_dt))


def closed_form_state(config: ExperimentConfig, n: int) -> SingleExcitationState:
    n = check_n(config, n)
    coeff = interaction_coefficients(config)
    a, b = coeff.a, coeff.b
    atoms = tuple(complex(a ** (i - 1) * b * SQRT_HALF) for i in range(1, n + 1))
    return SingleExcitationState(
        n_interacted=n,
        amp_S0_excited=complex(SQRT_HALF),
        amp_photon=complex(a**n * SQRT_HALF),
        amp_atom=atoms,
    )


def gamma(config: ExperimentConfig, n: int) -> float:
    """Norm of the reservoir branch, sqrt(sum_i |a^(i-1) b|^2) = sqrt(1 - a^(2n))."""
    n = check_n(config, n)
    a = config.a
    # 1 - a^(2n) loses digits for small g*dt; sum the series instead
    weights = [(a ** (i - 1) * abs(config.b)) ** 2 for i in range(1, n + 1)]
    return math.sqrt(math.fsum(weights))
