"""Brute-force dense statevector simulator used as ground truth.

The register is S0, probe atoms 1..n and the field mode truncated to Fock
levels {0, 1}.  Qubit 0 is S0, qubit k is probe atom k, qubit n+1 is the
field; basis index bits are big-endian in that order and bit value 1 means
excited / one photon.  Nothing here uses the one-excitation shortcut of
:mod:`mqeraser.core`; the truncation is certified instead by checking that
the excitation number stays 1 after every interaction.

Subsystems are labelled ``"S0"``, ``"F"`` and the integers ``1..n``.  Reduced
operators always order their factors as S0, atoms ascending, F.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .core import SingleExcitationState, ZeroProbabilityError
from .linalg import check_hermitian, trace_norm
from .measurement import MeasurementBasis

# 4096 * 4 = 16384 amplitudes
MAX_ORACLE_ATOMS = 12
MIN_PROBABILITY = 1e-15


@dataclass(frozen=True)
class DenseState:
    amplitudes: np.ndarray
    n_atoms: int

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=complex).reshape(-1)
        if amps.shape[0] != 2 ** (self.n_atoms + 2):
            raise ValueError(f"expected {2 ** (self.n_atoms + 2)} amplitudes, got {amps.shape[0]}")
        object.__setattr__(self, "amplitudes", amps)

    @property
    def labels(self) -> tuple:
        return ("S0", *range(1, self.n_atoms + 1), "F")

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def tensor(self) -> np.ndarray:
        return self.amplitudes.reshape((2,) * (self.n_atoms + 2))

    def excitation_leakage(self) -> float:
        """Total weight on basis states whose excitation count is not 1."""
        idx = np.arange(self.amplitudes.shape[0])
        counts = np.zeros_like(idx)
        for bit in range(self.n_atoms + 2):
            counts += (idx >> bit) & 1
        return float(np.sum(np.abs(self.amplitudes[counts != 1]) ** 2))


@dataclass(frozen=True)
class DensityMatrix:
    entries: np.ndarray
    labels: tuple

    def __post_init__(self):
        rho = np.asarray(self.entries, dtype=complex)
        dim = 2 ** len(self.labels)
        if rho.shape != (dim, dim):
            raise ValueError(f"expected a {dim}x{dim} matrix for labels {self.labels}, got {rho.shape}")
        check_hermitian(rho, tol=1e-12)
        tr = np.trace(rho).real
        if abs(tr - 1.0) > 1e-12:
            raise ValueError(f"density matrix trace is {tr!r}")
        if np.linalg.eigvalsh(rho).min() < -1e-10:
            raise ValueError("density matrix is not positive semidefinite")
        object.__setattr__(self, "entries", rho)

    @property
    def dim(self) -> int:
        return self.entries.shape[0]


@dataclass(frozen=True)
class ConditionalDecomposition:
    """rho_{S0,E} split on the S0 basis: weights, conditional states and coherence.

    Branch 1 is S0 in |g>, branch 2 is S0 in |e>.  A conditional state is
    ``None`` when its weight vanishes.
    """

    w1: float
    rho_E_1: DensityMatrix | None
    w2: float
    rho_E_2: DensityMatrix | None
    chi_E: np.ndarray


def embed(state: SingleExcitationState) -> DenseState:
    """Dense-register image of a single-excitation state."""
    n = state.n_interacted
    amps = np.zeros(2 ** (n + 2), dtype=complex)
    psi = amps.reshape((2,) * (n + 2))
    ground = (0,) * n
    psi[(1, *ground, 0)] = state.amp_S0_excited
    psi[(0, *ground, 1)] = state.amp_photon
    for i, amp in enumerate(state.amp_atom, start=1):
        atoms = [0] * n
        atoms[i - 1] = 1
        psi[(0, *atoms, 0)] = amp
    return DenseState(amps, n)


def _check_cap(n: int):
    if not 0 <= n <= MAX_ORACLE_ATOMS:
        raise ValueError(f"oracle supports 0..{MAX_ORACLE_ATOMS} probe atoms, got {n}")


def build_initial(n: int) -> DenseState:
    _check_cap(n)
    psi = np.zeros((2,) * (n + 2), dtype=complex)
    ground = (0,) * n
    psi[(0, *ground, 1)] = 1 / math.sqrt(2)
    psi[(1, *ground, 0)] = 1 / math.sqrt(2)
    return DenseState(psi.reshape(-1), n)


def jc_apply(state: DenseState, k: int, g_t: float) -> DenseState:
    """Resonant JC interaction of atom ``k`` with the field for time g_t/g.

    Rotates each pair (|g_k,1>, |e_k,0>) with every other label fixed.
    |g_k,0> is dark; |e_k,1> would couple outside the truncated space and is
    left untouched (it is never populated from the initial state).
    """
    if isinstance(k, bool) or int(k) != k or not 1 <= k <= state.n_atoms:
        raise ValueError(f"atom index must be in [1, {state.n_atoms}], got {k}")
    if not 0.0 < g_t < math.pi / 2:
        raise ValueError(f"g_t must lie in (0, pi/2), got {g_t!r}")
    c, s = math.cos(g_t), math.sin(g_t)
    psi = state.tensor().copy()
    f = state.n_atoms + 1
    psi = np.moveaxis(psi, (k, f), (-2, -1))
    g1 = psi[..., 0, 1].copy()
    e0 = psi[..., 1, 0].copy()
    psi[..., 0, 1] = c * g1 - 1j * s * e0
    psi[..., 1, 0] = -1j * s * g1 + c * e0
    psi = np.moveaxis(psi, (-2, -1), (k, f))
    return DenseState(psi.reshape(-1), state.n_atoms)


def evolve(n: int, g_dt: float) -> DenseState:
    """Initial state with atoms 1..n sent through in order."""
    state = build_initial(n)
    for k in range(1, n + 1):
        state = jc_apply(state, k, g_dt)
    return state


def _axes(labels: tuple, keep: Iterable) -> list[int]:
    keep = list(keep)
    if not keep:
        raise ValueError("keep must name at least one subsystem")
    index = {lab: ax for ax, lab in enumerate(labels)}
    axes = []
    for lab in keep:
        if lab not in index or isinstance(lab, bool):
            raise ValueError(f"unknown subsystem {lab!r}; available {labels}")
        axes.append(index[lab])
    if len(set(axes)) != len(axes):
        raise ValueError(f"duplicate subsystem in {keep}")
    return sorted(axes)


def partial_trace(obj: DenseState | DensityMatrix, keep: Iterable) -> DensityMatrix:
    """Reduced operator on the ``keep`` subsystems."""
    if isinstance(obj, DenseState):
        labels = obj.labels
        kept = _axes(labels, keep)
        traced = [ax for ax in range(len(labels)) if ax not in kept]
        psi = np.transpose(obj.tensor(), kept + traced).reshape(2 ** len(kept), -1)
        rho = psi @ psi.conj().T
    elif isinstance(obj, DensityMatrix):
        labels = obj.labels
        kept = _axes(labels, keep)
        traced = [ax for ax in range(len(labels)) if ax not in kept]
        m = len(labels)
        t = obj.entries.reshape((2,) * (2 * m))
        perm = kept + traced + [m + ax for ax in kept] + [m + ax for ax in traced]
        t = np.transpose(t, perm).reshape(2 ** len(kept), 2 ** len(traced), 2 ** len(kept), 2 ** len(traced))
        rho = np.einsum("ajbj->ab", t)
    else:
        raise TypeError(f"expected DenseState or DensityMatrix, got {type(obj).__name__}")
    rho = 0.5 * (rho + rho.conj().T)
    return DensityMatrix(rho, tuple(labels[ax] for ax in kept))


def conditional_decomposition(rho: DensityMatrix) -> ConditionalDecomposition:
    if rho.labels[0] != "S0":
        raise ValueError("decomposition needs S0 as the leading factor")
    half = rho.dim // 2
    gg = rho.entries[:half, :half]
    ee = rho.entries[half:, half:]
    eg = rho.entries[half:, :half]
    w1, w2 = float(np.trace(gg).real), float(np.trace(ee).real)
    rest = rho.labels[1:]
    rho1 = DensityMatrix(gg / w1, rest) if w1 > 1e-14 else None
    rho2 = DensityMatrix(ee / w2, rest) if w2 > 1e-14 else None
    scale = math.sqrt(w1 * w2)
    chi = eg / scale if scale > 0 else np.zeros_like(eg)
    return ConditionalDecomposition(w1, rho1, w2, rho2, chi)


def distinguishability_bruteforce(state: DenseState, probe: Iterable) -> float:
    """Trace norm of w1 rho_E_1 - w2 rho_E_2 for E = ``probe``."""
    probe = list(probe)
    if "S0" in probe:
        raise ValueError("probe must not include S0")
    dec = conditional_decomposition(partial_trace(state, ["S0", *probe]))
    dim = 2 ** len(probe)
    diff = np.zeros((dim, dim), dtype=complex)
    if dec.rho_E_1 is not None:
        diff += dec.w1 * dec.rho_E_1.entries
    if dec.rho_E_2 is not None:
        diff -= dec.w2 * dec.rho_E_2.entries
    return trace_norm(diff)


_YY = np.kron(np.array([[0, -1j], [1j, 0]]), np.array([[0, -1j], [1j, 0]]))


def wootters_concurrence(rho: DensityMatrix | np.ndarray) -> float:
    """Two-qubit concurrence max(0, l1 - l2 - l3 - l4).

    The l_i are the square roots of the eigenvalues of rho (YY) rho* (YY).
    With rho = W W^H they equal the singular values of W^H (YY) W*, which
    avoids taking square roots of eigenvalues that should be exactly zero.
    """
    entries = rho.entries if isinstance(rho, DensityMatrix) else np.asarray(rho, dtype=complex)
    if entries.shape != (4, 4):
        raise ValueError(f"concurrence needs a 4x4 two-qubit matrix, got {entries.shape}")
    evals, evecs = np.linalg.eigh(0.5 * (entries + entries.conj().T))
    # components below this are round-off of an exactly rank-deficient state
    keep = evals > 1e-14
    W = evecs[:, keep] * np.sqrt(evals[keep])
    lam = np.zeros(4)
    if W.shape[1]:
        sv = np.linalg.svd(W.conj().T @ _YY @ W.conj(), compute_uv=False)
        lam[: len(sv)] = sv
    lam = np.sort(lam)[::-1]
    return float(max(0.0, lam[0] - lam[1] - lam[2] - lam[3]))


def visibility_predictability_bruteforce(rho_S0: DensityMatrix | np.ndarray) -> tuple[float, float]:
    entries = rho_S0.entries if isinstance(rho_S0, DensityMatrix) else np.asarray(rho_S0, dtype=complex)
    if entries.shape != (2, 2):
        raise ValueError(f"expected a 2x2 matrix, got {entries.shape}")
    return 2.0 * abs(entries[0, 1]), abs(entries[1, 1].real - entries[0, 0].real)


def project_bruteforce(
    state: DenseState, basis: MeasurementBasis, atoms: Sequence[int] | None = None
) -> tuple[DenseState, float]:
    """Project probe atoms on their |M_i>; returns the normalized state and Born probability.

    ``atoms`` lists which atoms the basis entries refer to (default: all of
    them, in order); the other atoms are left unmeasured.
    """
    atoms = list(range(1, state.n_atoms + 1)) if atoms is None else list(atoms)
    if len(basis) != len(atoms):
        raise ValueError(f"basis has {len(basis)} angle pairs for {len(atoms)} atoms")
    for k in atoms:
        if not 1 <= k <= state.n_atoms:
            raise ValueError(f"atom index {k} out of range")
    psi = state.tensor()
    for k, alpha, beta in zip(atoms, basis.alphas, basis.betas):
        ket = np.array([alpha, beta], dtype=complex)
        proj = np.outer(ket, ket.conj())
        psi = np.moveaxis(np.tensordot(proj, psi, axes=([1], [k])), 0, k)
    amps = psi.reshape(-1)
    prob = float(np.vdot(amps, amps).real)
    if prob <= MIN_PROBABILITY:
        raise ZeroProbabilityError(f"outcome probability {prob:.3e} is zero")
    return DenseState(amps / math.sqrt(prob), state.n_atoms), prob
