"""Atom-by-atom Jaynes-Cummings evolution inside the one-excitation sector."""
from __future__ import annotations

import math

from .core import SQRT_HALF, ExperimentConfig, SingleExcitationState, check_n


def apply_probe_atom(state: SingleExcitationState, g_dt: float) -> SingleExcitationState:
    """Send one fresh ground-state atom through the cavity for a time g_dt/g.

    Only the photon branch couples: |g_k,1> -> cos|g_k,1> - i sin|e_k,0>.
    """
    if not 0.0 < g_dt < math.pi / 2:
        raise ValueError(f"g_dt must lie in (0, pi/2), got {g_dt!r}")
    c, s = math.cos(g_dt), math.sin(g_dt)
    photon = state.amp_photon
    return SingleExcitationState(
        n_interacted=state.n_interacted + 1,
        amp_S0_excited=state.amp_S0_excited,
        amp_photon=c * photon,
        amp_atom=state.amp_atom + (-1j * s * photon,),
    )


def initial_state() -> SingleExcitationState:
    return SingleExcitationState(0, complex(SQRT_HALF), complex(SQRT_HALF), ())


def evolve_to(config: ExperimentConfig, n: int) -> SingleExcitationState:
    n = check_n(config, n)
    state = initial_state()
    for _ in range(n):
        state = apply_probe_atom(state, config.g_dt)
    return state
