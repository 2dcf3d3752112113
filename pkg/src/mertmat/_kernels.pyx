# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loops: Mobius sieve, cyclic Jacobi sweeps, power iteration.

Contracts match ``_pure`` exactly; see the docstrings there.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport fabs, sqrt

cnp.import_array()

COMPILED = True


def mobius_sieve(Py_ssize_t limit):
    mu_arr = np.ones(limit + 1, dtype=np.int8)
    mu_arr[0] = 0
    comp_arr = np.zeros(limit + 1, dtype=np.uint8)
    cdef signed char[::1] mu = mu_arr
    cdef unsigned char[::1] comp = comp_arr
    cdef Py_ssize_t p, j, pp
    for p in range(2, limit + 1):
        if comp[p]:
            continue
        j = p
        while j <= limit:
            mu[j] = -mu[j]
            j += p
        if p > limit // p:
            continue
        pp = p * p
        j = pp
        while j <= limit:
            comp[j] = 1
            j += p
        j = pp
        while j <= limit:
            mu[j] = 0
            j += pp
    return mu_arr


def jacobi_eigenvalues(double[:, ::1] a, double tol_rel, int max_sweeps):
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t p, q, k, sweep
    cdef double fro2 = 0.0, off2, apq, tau, t, c, s, akp, akq, target, skip

    for p in range(n):
        for q in range(n):
            fro2 += a[p, q] * a[p, q]
    target = tol_rel * sqrt(fro2)
    if n == 1 or fro2 == 0.0:
        return np.diagonal(np.asarray(a)).copy(), 0, True
    skip = target / (n * n)

    off2 = _off2(a, n)
    for sweep in range(1, max_sweeps + 1):
        if sqrt(off2) <= target:
            return np.diagonal(np.asarray(a)).copy(), sweep - 1, True
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if fabs(apq) <= skip:
                    continue
                tau = (a[q, q] - a[p, p]) / (2.0 * apq)
                if tau >= 0.0:
                    t = 1.0 / (tau + sqrt(tau * tau + 1.0))
                else:
                    t = -1.0 / (-tau + sqrt(tau * tau + 1.0))
                c = 1.0 / sqrt(t * t + 1.0)
                s = t * c
                for k in range(n):
                    akp = a[p, k]
                    akq = a[q, k]
                    a[p, k] = c * akp - s * akq
                    a[q, k] = s * akp + c * akq
                for k in range(n):
                    akp = a[k, p]
                    akq = a[k, q]
                    a[k, p] = c * akp - s * akq
                    a[k, q] = s * akp + c * akq
        off2 = _off2(a, n)
    return np.diagonal(np.asarray(a)).copy(), max_sweeps, sqrt(off2) <= target


cdef double _off2(double[:, ::1] a, Py_ssize_t n):
    cdef Py_ssize_t i, j
    cdef double acc = 0.0
    for i in range(n):
        for j in range(i + 1, n):
            acc += 2.0 * a[i, j] * a[i, j]
    return acc


def power_iteration(double[:, ::1] a, double[::1] x, double tol, long max_iter,
                    long stall_window):
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t i, j
    cdef long it
    cdef double lam = 0.0, lam_prev = np.inf, resid = np.inf, checkpoint = np.inf
    cdef double acc, ynorm2, resid2, xnorm2, inv, d
    y_arr = np.empty(n, dtype=np.float64)
    cdef double[::1] y = y_arr

    xnorm2 = 0.0
    for i in range(n):
        xnorm2 += x[i] * x[i]
    inv = 1.0 / sqrt(xnorm2)
    for i in range(n):
        x[i] *= inv

    for it in range(1, max_iter + 1):
        lam = 0.0
        for i in range(n):
            acc = 0.0
            for j in range(n):
                acc += a[i, j] * x[j]
            y[i] = acc
            lam += x[i] * acc
        resid2 = 0.0
        ynorm2 = 0.0
        for i in range(n):
            d = y[i] - lam * x[i]
            resid2 += d * d
            ynorm2 += y[i] * y[i]
        resid = sqrt(resid2)
        if resid <= tol * fabs(lam) and fabs(fabs(lam) - fabs(lam_prev)) <= tol * fabs(lam):
            return lam, it, True, False, resid
        if ynorm2 == 0.0:
            return lam, it, False, True, resid
        inv = 1.0 / sqrt(ynorm2)
        for i in range(n):
            x[i] = y[i] * inv
        lam_prev = lam
        if it % stall_window == 0:
            if resid > 0.5 * checkpoint:
                return lam, it, False, True, resid
            checkpoint = resid
    return lam, max_iter, False, False, resid
