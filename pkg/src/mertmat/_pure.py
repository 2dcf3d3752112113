"""NumPy fallbacks for the compiled kernels in ``_kernels.pyx``.

Same contracts as the compiled versions: exact integer output for the
sieve, identical convergence rules for the two eigenvalue loops.  Float
results agree with the compiled backend to rounding, not bit-for-bit.
"""

from __future__ import annotations

import math

import numpy as np

COMPILED = False


def mobius_sieve(limit: int) -> np.ndarray:
    """Mobius values mu(0..limit) as int8 (index 0 is unused, set to 0)."""
    sieve = np.ones(limit + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = False
    mu = np.ones(limit + 1, dtype=np.int8)
    mu[0] = 0
    for p in np.nonzero(sieve)[0]:
        p = int(p)
        mu[p::p] *= -1
        pp = p * p
        if pp <= limit:
            mu[pp::pp] = 0
    return mu


def jacobi_eigenvalues(a: np.ndarray, tol_rel: float, max_sweeps: int):
    """Cyclic Jacobi on the symmetric matrix ``a`` (destroyed in place).

    Sweeps until the off-diagonal Frobenius norm is at most
    ``tol_rel * ||a||_F`` (initial Frobenius norm).  Returns
    ``(eigenvalues, sweeps, converged)``.
    """
    n = a.shape[0]
    fro = float(np.linalg.norm(a))
    target = tol_rel * fro
    if n == 1 or fro == 0.0:
        return np.diagonal(a).copy(), 0, True
    skip = target / (n * n)

    def off_norm():
        # sum only the off-diagonal squares: subtracting the diagonal from
        # the full Frobenius norm cannot resolve off/fro ~ 1e-12 in doubles
        b = a.copy()
        np.fill_diagonal(b, 0.0)
        return float(np.linalg.norm(b))

    for sweep in range(1, max_sweeps + 1):
        if off_norm() <= target:
            return np.diagonal(a).copy(), sweep - 1, True
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= skip:
                    continue
                tau = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, tau) / (abs(tau) + math.sqrt(tau * tau + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                rp = a[p, :].copy()
                rq = a[q, :]
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
                cp = a[:, p].copy()
                cq = a[:, q]
                a[:, p] = c * cp - s * cq
                a[:, q] = s * cp + c * cq
    return np.diagonal(a).copy(), max_sweeps, off_norm() <= target


def power_iteration(a: np.ndarray, x: np.ndarray, tol: float, max_iter: int, stall_window: int):
    """Power iteration on symmetric ``a`` starting from ``x`` (updated in place).

    Convergence: successive Rayleigh-quotient magnitudes differ by at most
    ``tol * |lam|`` and the residual ``||a x - lam x||`` is at most
    ``tol * |lam|`` (x kept unit norm).  A residual that fails to halve over
    ``stall_window`` iterations reports a stall (dominant +/- pair suspected)
    so the caller can restart on a shifted matrix.

    Returns ``(rayleigh, iterations, converged, stalled, residual)``.
    """
    x /= np.linalg.norm(x)
    lam_prev = math.inf
    checkpoint = math.inf
    lam = 0.0
    resid = math.inf
    for it in range(1, max_iter + 1):
        y = a @ x
        lam = float(x @ y)
        resid = float(np.linalg.norm(y - lam * x))
        if resid <= tol * abs(lam) and abs(abs(lam) - abs(lam_prev)) <= tol * abs(lam):
            return lam, it, True, False, resid
        ynorm = float(np.linalg.norm(y))
        if ynorm == 0.0:
            return lam, it, False, True, resid
        x[:] = y / ynorm
        lam_prev = lam
        if it % stall_window == 0:
            if resid > 0.5 * checkpoint:
                return lam, it, False, True, resid
            checkpoint = resid
    return lam, max_iter, False, False, resid
