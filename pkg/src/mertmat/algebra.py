"""Quotient semigroup algebra over the class representatives.

The bounded classes form a commutative semigroup once the unbounded class
is collapsed to zero: the product of representatives i and j is the class
of i*j when i*j <= n, and ZERO otherwise.  Integer sequences project onto
this algebra by summing over each class interval, and every element acts on
the algebra by an s x s integer matrix (its regular representation).

All integer work is exact: operations that could exceed 64 bits are guarded
by conservative bounds and re-run in arbitrary precision to decide whether
to raise, never wrapping silently.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .classes import ClassStructure

#: Image of the unbounded class; absorbing element of the quotient product.
ZERO = 0

_INT64_MAX = 2**63 - 1


@dataclass
class QuotientVector:
    """Coordinates of an algebra element on the canonical basis.

    ``coeffs[i]`` multiplies the basis vector of ``cs.reps[i]``.
    """

    cs: ClassStructure
    coeffs: np.ndarray

    def __post_init__(self):
        self.coeffs = np.asarray(self.coeffs, dtype=np.int64)
        if self.coeffs.shape != (self.cs.s,):
            raise ValueError(
                f"coefficient vector has shape {self.coeffs.shape}, expected ({self.cs.s},)"
            )

    def __eq__(self, other):
        return (
            isinstance(other, QuotientVector)
            and self.cs is other.cs
            and bool(np.array_equal(self.coeffs, other.coeffs))
        )


@dataclass
class IntegerMatrix:
    """Dense square int64 matrix indexed by position in ``cs.reps``."""

    cs: ClassStructure
    entries: np.ndarray

    def __post_init__(self):
        self.entries = np.asarray(self.entries, dtype=np.int64)
        s = self.cs.s
        if self.entries.shape != (s, s):
            raise ValueError(f"entries have shape {self.entries.shape}, expected ({s}, {s})")

    def is_symmetric(self) -> bool:
        return bool(np.array_equal(self.entries, self.entries.T))

    def __eq__(self, other):
        return (
            isinstance(other, IntegerMatrix)
            and self.cs is other.cs
            and bool(np.array_equal(self.entries, other.entries))
        )


def quotient_product(cs: ClassStructure, i: int, j: int):
    """Product of two representatives: the rep of i*j, or ZERO past n."""
    cs.index(i)
    cs.index(j)
    p = i * j
    return ZERO if p > cs.n else cs.class_of(p)


def product_label_table(cs: ClassStructure) -> np.ndarray:
    """s x s table of quotient products as rep labels, ZERO entries as 0.

    Built once per ClassStructure and cached on it.
    """
    table = getattr(cs, "_product_labels", None)
    if table is None:
        reps = cs.reps
        prods = np.outer(reps, reps)
        table = np.where(prods <= cs.n, cs.n // np.maximum(cs.n // np.maximum(prods, 1), 1), ZERO)
        table.setflags(write=False)
        cs._product_labels = table
    return table


def product_index_table(cs: ClassStructure) -> np.ndarray:
    """s x s table of result positions in ``cs.reps``; -1 where the product
    escapes to ZERO.  Cached alongside the label table."""
    table = getattr(cs, "_product_index", None)
    if table is None:
        labels = product_label_table(cs)
        idx = np.searchsorted(cs.reps, labels).astype(np.int64)
        idx[labels == ZERO] = -1
        idx.setflags(write=False)
        table = idx
        cs._product_index = table
    return table


def project(cs: ClassStructure, seq) -> QuotientVector:
    """Project an integer sequence onto the algebra by class-interval sums.

    ``seq[t]`` is the value at the integer t + 1; at least n values are
    required.  Coefficient of rep k is the sum of seq over (pred(k), k].
    """
    arr = np.asarray(seq, dtype=np.int64)
    if arr.ndim != 1 or arr.shape[0] < cs.n:
        raise ValueError(f"sequence of length >= n={cs.n} required, got {arr.shape}")
    prefix = np.cumsum(arr[: cs.n], dtype=np.int64)
    ends = prefix[cs.reps - 1]
    coeffs = np.diff(ends, prepend=np.int64(0))
    return QuotientVector(cs, coeffs)


def unit_vector(cs: ClassStructure) -> QuotientVector:
    """The multiplicative unit (basis vector of the class of 1)."""
    return basis_vector(cs, 1)


def basis_vector(cs: ClassStructure, k: int) -> QuotientVector:
    coeffs = np.zeros(cs.s, dtype=np.int64)
    coeffs[cs.index(k)] = 1
    return QuotientVector(cs, coeffs)


def class_sizes_vector(cs: ClassStructure) -> QuotientVector:
    """Image of the all-ones sequence: coefficient of k is its class size."""
    return QuotientVector(cs, np.diff(cs.reps, prepend=np.int64(0)))


def mertens_increments_vector(cs: ClassStructure, mt) -> QuotientVector:
    """Image of the Mobius sequence: coefficient of k is M(k) - M(pred(k)).

    Needs Mertens values only at the s representatives, not a length-n scan.
    """
    if mt.limit < cs.n:
        raise ValueError(f"Mertens table limit {mt.limit} < n={cs.n}")
    at_reps = mt.mertens[cs.reps]
    return QuotientVector(cs, np.diff(at_reps, prepend=np.int64(0)))


def _require_same_structure(x: QuotientVector, y: QuotientVector):
    if x.cs is not y.cs and (x.cs.n != y.cs.n):
        raise ValueError(f"mismatched class structures: n={x.cs.n} vs n={y.cs.n}")


def convolve(x: QuotientVector, y: QuotientVector) -> QuotientVector:
    """Product in the algebra: sum of x_i * y_j on the class of i*j,
    dropping the terms that escape to ZERO.  Commutative, bilinear."""
    _require_same_structure(x, y)
    cs = x.cs
    idx = product_index_table(cs)
    valid = idx >= 0
    bound = int(np.abs(x.coeffs).sum(dtype=object)) * int(np.abs(y.coeffs).sum(dtype=object))
    if bound <= _INT64_MAX:
        contrib = np.outer(x.coeffs, y.coeffs)
        out = np.zeros(cs.s, dtype=np.int64)
        np.add.at(out, idx[valid], contrib[valid])
        return QuotientVector(cs, out)
    # bound exceeded: redo exactly in Python ints and signal a real overflow
    xs = x.coeffs.astype(object)
    ys = y.coeffs.astype(object)
    exact = [0] * cs.s
    for i in range(cs.s):
        xi = xs[i]
        if xi == 0:
            continue
        row = idx[i]
        for j in range(cs.s):
            t = row[j]
            if t >= 0:
                exact[t] += xi * ys[j]
    if any(abs(v) > _INT64_MAX for v in exact):
        raise OverflowError("convolution coefficient exceeds 64-bit signed range")
    return QuotientVector(cs, np.array(exact, dtype=np.int64))


def regular_representation(x: QuotientVector) -> IntegerMatrix:
    """Matrix of "multiply by x": column j holds x convolved with basis j."""
    cs = x.cs
    if int(np.abs(x.coeffs).sum(dtype=object)) > _INT64_MAX:
        raise OverflowError("representation entries exceed 64-bit signed range")
    idx = product_index_table(cs)
    rows, cols = np.nonzero(idx >= 0)
    targets = idx[rows, cols]
    entries = np.zeros((cs.s, cs.s), dtype=np.int64)
    np.add.at(entries, (targets, cols), x.coeffs[rows])
    return IntegerMatrix(cs, entries)


def checked_matmul(a: IntegerMatrix, b: IntegerMatrix) -> IntegerMatrix:
    """Exact integer matrix product; raises instead of wrapping past 64 bits."""
    if a.cs is not b.cs and a.cs.n != b.cs.n:
        raise ValueError("mismatched class structures")
    s = a.cs.s
    amax = int(np.abs(a.entries).max(initial=0))
    bmax = int(np.abs(b.entries).max(initial=0))
    if amax * bmax * s <= _INT64_MAX:
        return IntegerMatrix(a.cs, a.entries @ b.entries)
    prod = a.entries.astype(object) @ b.entries.astype(object)
    if np.abs(prod).max(initial=0) > _INT64_MAX:
        raise OverflowError("matrix product entry exceeds 64-bit signed range")
    return IntegerMatrix(a.cs, prod.astype(np.int64))
