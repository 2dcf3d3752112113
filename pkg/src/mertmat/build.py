"""Construction of the symmetric matrices T, U, and M.

Two independent routes are provided for U and M:

* direct: entry (i, j) reads a floor quotient or a Mertens value straight
  off the representative pair, giving U[i,j] = n // (r_i * r_j) (0 once the
  product escapes past n) and M[i,j] = Mertens(n // (r_i * r_j));
* via the algebra: T times the regular representation of the projected
  all-ones or Mobius sequence.

The two routes agree entry for entry; ``verify_inverse_identity`` checks the
exact algebraic fact rho(u) rho(mu) = I that the agreement rests on.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import (
    IntegerMatrix,
    checked_matmul,
    class_sizes_vector,
    mertens_increments_vector,
    regular_representation,
)
from .classes import ClassStructure
from .sieve import MertensTable, build_mertens_table


def build_T(cs: ClassStructure) -> IntegerMatrix:
    """0/1 anti-triangular matrix: T[i,j] = 1 iff i + j <= s + 1 (1-based),
    equivalently iff reps[i] * reps[j] <= n."""
    s = cs.s
    i = np.arange(s)
    entries = ((i[:, None] + i[None, :]) <= s - 1).astype(np.int64)
    return IntegerMatrix(cs, entries)


def build_U_direct(cs: ClassStructure) -> IntegerMatrix:
    """U[i,j] = n // (r_i r_j) where the product stays within n, else 0."""
    prods = np.outer(cs.reps, cs.reps)
    entries = np.where(prods <= cs.n, cs.n // np.maximum(prods, 1), 0).astype(np.int64)
    return IntegerMatrix(cs, entries)


def build_M_direct(cs: ClassStructure, mt: MertensTable | None = None) -> IntegerMatrix:
    """M[i,j] = Mertens(n // (r_i r_j)), with Mertens(0) = 0 past n."""
    if mt is None:
        mt = build_mertens_table(cs.n)
    elif mt.limit < cs.n:
        raise ValueError(f"Mertens table limit {mt.limit} < n={cs.n}")
    u = build_U_direct(cs).entries
    return IntegerMatrix(cs, mt.mertens[u])


def build_U_via_rho(cs: ClassStructure) -> IntegerMatrix:
    """U as T rho(u), u the projected all-ones sequence."""
    rho_u = regular_representation(class_sizes_vector(cs))
    return checked_matmul(build_T(cs), rho_u)


def build_M_via_rho(cs: ClassStructure, mt: MertensTable | None = None) -> IntegerMatrix:
    """M as T rho(mu), mu the projected Mobius sequence."""
    if mt is None:
        mt = build_mertens_table(cs.n)
    rho_mu = regular_representation(mertens_increments_vector(cs, mt))
    return checked_matmul(build_T(cs), rho_mu)


def verify_inverse_identity(cs: ClassStructure, mt: MertensTable | None = None) -> bool:
    """Exact check that rho(u) rho(mu) = rho(mu) rho(u) = I."""
    if mt is None:
        mt = build_mertens_table(cs.n)
    rho_u = regular_representation(class_sizes_vector(cs))
    rho_mu = regular_representation(mertens_increments_vector(cs, mt))
    eye = np.eye(cs.s, dtype=np.int64)
    left = checked_matmul(rho_u, rho_mu).entries
    right = checked_matmul(rho_mu, rho_u).entries
    return bool(np.array_equal(left, eye) and np.array_equal(right, eye))


@dataclass(frozen=True)
class SymmetricMatrixPair:
    """U and M for one n, built directly, with their shared structure."""

    cs: ClassStructure
    U: IntegerMatrix
    M: IntegerMatrix


def build_pair(n: int, mt: MertensTable | None = None) -> SymmetricMatrixPair:
    cs = ClassStructure(n)
    if mt is None:
        mt = build_mertens_table(n)
    return SymmetricMatrixPair(cs, build_U_direct(cs), build_M_direct(cs, mt))
