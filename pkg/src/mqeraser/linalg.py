"""Cyclic Jacobi eigensolver for complex Hermitian matrices."""
from __future__ import annotations

import math

import numpy as np

HERMITIAN_TOL = 1e-10


class NotHermitianError(ValueError):
    pass


def check_hermitian(H: np.ndarray, tol: float = HERMITIAN_TOL) -> np.ndarray:
    H = np.asarray(H, dtype=complex)
    if H.ndim != 2 or H.shape[0] != H.shape[1]:
        raise NotHermitianError(f"expected a square matrix, got shape {H.shape}")
    dev = np.max(np.abs(H - H.conj().T)) if H.size else 0.0
    if dev > tol:
        raise NotHermitianError(f"matrix deviates from Hermitian by {dev:.3e}")
    return H


def _off_diagonal_mass(A: np.ndarray) -> float:
    off = A - np.diag(np.diag(A))
    return float(np.sqrt(np.sum(np.abs(off) ** 2)))


def jacobi_eigh(
    H: np.ndarray, tol: float = 1e-13, max_sweeps: int = 100, vectors: bool = True
) -> tuple[np.ndarray, np.ndarray | None]:
    """Eigen-decomposition of a Hermitian matrix by cyclic Jacobi rotations.

    Each rotation first removes the phase of the pivot A[p, q] with a diagonal
    unitary, then applies the real symmetric rotation that annihilates it.
    Iteration stops once the off-diagonal Frobenius mass drops below
    ``tol * max(1, ||H||_F)``.

    Returns ascending eigenvalues and, if requested, the unitary whose columns
    are the eigenvectors.
    """
    A = check_hermitian(H).copy()
    A = 0.5 * (A + A.conj().T)
    dim = A.shape[0]
    V = np.eye(dim, dtype=complex) if vectors else None
    threshold = tol * max(1.0, float(np.linalg.norm(A)))

    for _ in range(max_sweeps):
        if _off_diagonal_mass(A) < threshold:
            break
        for p in range(dim - 1):
            for q in range(p + 1, dim):
                z = A[p, q]
                mag = abs(z)
                if mag < 1e-300:
                    continue
                phase = z / mag
                app, aqq = A[p, p].real, A[q, q].real
                tau = (aqq - app) / (2.0 * mag)
                t = math.copysign(1.0, tau) / (abs(tau) + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                # G = diag(1, conj(phase)) @ [[c, s], [-s, c]] on the (p, q) plane
                g = np.array([[c, s], [-s * phase.conjugate(), c * phase.conjugate()]])
                cols = A[:, [p, q]] @ g
                A[:, p], A[:, q] = cols[:, 0], cols[:, 1]
                rows = g.conj().T @ A[[p, q], :]
                A[p, :], A[q, :] = rows[0], rows[1]
                A[p, q] = A[q, p] = 0.0
                A[p, p], A[q, q] = A[p, p].real, A[q, q].real
                if V is not None:
                    vcols = V[:, [p, q]] @ g
                    V[:, p], V[:, q] = vcols[:, 0], vcols[:, 1]
    else:
        if _off_diagonal_mass(A) >= threshold:
            raise RuntimeError("Jacobi iteration did not converge")

    evals = np.diag(A).real.copy()
    order = np.argsort(evals, kind="stable")
    evals = evals[order]
    if V is not None:
        V = V[:, order]
    return evals, V


def jacobi_eigvalsh(H: np.ndarray, tol: float = 1e-13) -> np.ndarray:
    return jacobi_eigh(H, tol=tol, vectors=False)[0]


def trace_norm(H: np.ndarray) -> float:
    """Sum of absolute eigenvalues of a Hermitian matrix."""
    H = check_hermitian(H)
    if H.shape == (1, 1):
        return abs(H[0, 0].real)
    return float(np.sum(np.abs(jacobi_eigvalsh(H))))
