"""Spectral norm of the symmetric integer matrices.

Production path: seeded power iteration with stall detection.  A symmetric
matrix whose extreme eigenvalues nearly tie at +L and -L defeats plain power
iteration (the iterate oscillates and the residual stops decaying), so on a
detected stall the iteration restarts on the shifted matrices m + cI and
m - cI with c = 1 + max|entry|.  Any positive shift separates such a pair;
running both shifts recovers the largest and smallest eigenvalues, and the
norm is the larger magnitude of the two.

Oracle path: dense cyclic Jacobi, quadratically convergent and free of the
tie problem, guarded to modest sizes.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from ._backend import kernels
from .algebra import IntegerMatrix

#: Largest integer magnitude that converts to float64 without rounding.
_EXACT_FLOAT_BOUND = 2**53

DEFAULT_TOL = 1e-10
DEFAULT_MAX_ITER = 100_000
DEFAULT_SEED = 42
DEFAULT_STALL_WINDOW = 250

#: Size guard for the dense oracle.
DENSE_MAX_DIM = 2048


class Method(enum.Enum):
    POWER = "power"
    DENSE_ORACLE = "dense"


@dataclass(frozen=True)
class SpectralResult:
    """Outcome of one norm computation.

    ``iterations`` counts matrix-vector products for the power method and is
    0 for the dense oracle.  ``residual`` is ||m v - lam v|| for the final
    unit iterate (0.0 for the oracle).
    """

    norm: float
    iterations: int
    method: Method
    converged: bool
    residual: float = 0.0


def _as_float_matrix(m) -> np.ndarray:
    """Validated fresh float64 copy of an IntegerMatrix or array."""
    entries = m.entries if isinstance(m, IntegerMatrix) else m
    entries = np.asarray(entries)
    if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
        raise ValueError(f"square matrix required, got shape {entries.shape}")
    if entries.shape[0] == 0:
        raise ValueError("empty matrix has no spectral norm")
    if not np.array_equal(entries, entries.T):
        raise ValueError("matrix is not symmetric")
    if entries.size and np.abs(entries).max() >= _EXACT_FLOAT_BOUND:
        raise ValueError("entries too large for exact float64 conversion")
    return np.array(entries, dtype=np.float64, order="C")


def _run_power(a, rng, tol, max_iter, stall_window):
    x = rng.standard_normal(a.shape[0])
    lam, it, converged, stalled, resid = kernels.power_iteration(
        a, x, tol, max_iter, stall_window
    )
    return x, float(lam), int(it), bool(converged), bool(stalled), float(resid)


def spectral_norm_power(
    m,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
    seed: int = DEFAULT_SEED,
    stall_window: int = DEFAULT_STALL_WINDOW,
) -> SpectralResult:
    """Spectral norm by power iteration with deterministic seeded start.

    Convergence requires both a small Rayleigh-quotient change and a small
    eigenpair residual, each relative to the current eigenvalue estimate.
    On a stall (residual not halving across a window) the computation
    restarts on the two shifted matrices as described in the module
    docstring; reported iterations accumulate across the phases.
    """
    if not 0.0 < tol < 1.0:
        raise ValueError(f"tol must be in (0, 1), got {tol}")
    if max_iter < 1:
        raise ValueError("max_iter must be positive")
    a = _as_float_matrix(m)
    rng = np.random.default_rng(seed)

    _, lam, total, converged, stalled, resid = _run_power(
        a, rng, tol, max_iter, stall_window
    )
    if converged or not stalled:
        return SpectralResult(abs(lam), total, Method.POWER, converged, resid)

    # Stall: suspected +/-L eigenvalue tie.  The shifted matrix b = a + sign*c*I
    # satisfies b x - lam x = a x - (lam - sign*c) x exactly, so the kernel's
    # residual already measures the unshifted eigenpair.
    c = 1.0 + float(np.abs(a).max())
    s = a.shape[0]
    candidates = []
    all_converged = True
    for sign in (1.0, -1.0):
        b = a.copy()
        b.flat[:: s + 1] += sign * c
        x, lam_b, it, conv, _, resid = _run_power(b, rng, tol, max_iter, stall_window)
        total += it
        est = lam_b - sign * c
        # the kernel converged relative to |lam_b|; tighten until the residual
        # is small relative to the unshifted estimate as well
        rounds = 0
        while conv and abs(est) > tol * abs(lam_b) and resid > tol * abs(est) and rounds < 3:
            tighter = tol * abs(est) / abs(lam_b)
            lam_b, it, conv, _, resid = kernels.power_iteration(
                b, x, tighter, max_iter, stall_window
            )
            total += int(it)
            lam_b, resid = float(lam_b), float(resid)
            est = lam_b - sign * c
            rounds += 1
        if not conv:
            all_converged = False
        candidates.append((abs(est), resid))
    best, best_resid = max(candidates)
    return SpectralResult(best, total, Method.POWER, all_converged, best_resid)


def spectral_norm_dense(
    m,
    tol_rel: float = 1e-12,
    max_sweeps: int = 64,
) -> SpectralResult:
    """Oracle: cyclic Jacobi sweeps until the off-diagonal Frobenius mass
    drops below tol_rel times the initial Frobenius norm."""
    a = _as_float_matrix(m)
    if a.shape[0] > DENSE_MAX_DIM:
        raise ValueError(f"dense oracle limited to s <= {DENSE_MAX_DIM}, got {a.shape[0]}")
    diag, _, converged = kernels.jacobi_eigenvalues(a, tol_rel, max_sweeps)
    norm = float(np.abs(diag).max())
    return SpectralResult(norm, 0, Method.DENSE_ORACLE, bool(converged))


def spectral_norm(m, method: Method = Method.POWER, **kwargs) -> SpectralResult:
    """Dispatch by method; keyword arguments pass through to the chosen path."""
    if method is Method.POWER:
        return spectral_norm_power(m, **kwargs)
    return spectral_norm_dense(m, **kwargs)
