"""Floor-division congruence classes.

For a fixed n, two positive integers i and j are congruent when
``n // i == n // j``.  The bounded classes are integer intervals, and each
one is identified by its largest member.  The ascending list of those
representatives (about ``2 * sqrt(n)`` of them, from 1 up to n) indexes the
rows and columns of every matrix in this package.  Integers above n form a
single unbounded class represented by the :data:`INFINITY` marker.
"""

from __future__ import annotations

import math

import numpy as np

#: Marker returned by :meth:`ClassStructure.class_of` for integers above n.
#: Never a member of ``reps``; algebra code maps it to the zero element.
INFINITY = math.inf


class ClassStructure:
    """Representative set, involution and class sizes for one value of n.

    Attributes
    ----------
    n : int
        Parameter of the congruence.
    reps : numpy.ndarray
        Strictly increasing int64 array of the largest members of the
        bounded classes; ``reps[0] == 1`` and ``reps[-1] == n``.
    s : int
        ``len(reps)``, the dimension of every derived matrix.

    Immutable after construction; safe to share across threads.
    """

    def __init__(self, n: int):
        if n < 1:
            raise ValueError(f"n must be a positive integer, got {n}")
        r = math.isqrt(n)
        # Two arms: 1..r, then the quotients n//k for k = r..1 (ascending).
        # n//r duplicates r exactly when n < r*r + r.
        low = np.arange(1, r + 1, dtype=np.int64)
        high = n // np.arange(r, 0, -1, dtype=np.int64)
        if n < r * r + r:
            high = high[1:]
        reps = np.concatenate([low, high])
        reps.setflags(write=False)

        self.n = int(n)
        self.reps = reps
        self.s = int(reps.shape[0])
        self._pos = {int(k): i for i, k in enumerate(reps)}

        # Closed-form cardinality, kept in sync with the constructive arms.
        assert self.s == r + (math.isqrt(4 * n + 1) - 1) // 2

    def __repr__(self):
        return f"ClassStructure(n={self.n}, s={self.s})"

    def __contains__(self, k) -> bool:
        return k in self._pos

    def index(self, k: int) -> int:
        """Position of representative k in ``reps`` (matrix row/column)."""
        try:
            return self._pos[k]
        except KeyError:
            raise ValueError(f"{k} is not a class representative for n={self.n}") from None

    def bar(self, k: int) -> int:
        """The order-reversing involution ``k -> n // k`` on the reps."""
        self.index(k)
        return self.n // k

    def class_of(self, i: int):
        """Representative of the class containing i, or INFINITY if i > n."""
        if i < 1:
            raise ValueError(f"i must be a positive integer, got {i}")
        if i > self.n:
            return INFINITY
        return self.n // (self.n // i)

    def class_size(self, k: int) -> int:
        """Number of integers in the class of representative k."""
        return k - self.predecessor(k)

    def predecessor(self, k: int) -> int:
        """The previous representative below k, with predecessor(1) == 0."""
        i = self.index(k)
        return int(self.reps[i - 1]) if i > 0 else 0

    def intervals(self) -> list[tuple[int, int]]:
        """The bounded classes as closed intervals (lo, hi), ascending."""
        lo = np.concatenate(([1], self.reps[:-1] + 1))
        return [(int(a), int(b)) for a, b in zip(lo, self.reps)]


def floor_div_nested_check(n: int, i: int, j: int) -> bool:
    """Whether ``(n // i) // j == n // (i * j)``.  Holds for all positive
    integers; exists as a test utility."""
    if n < 1 or i < 1 or j < 1:
        raise ValueError("n, i, j must be positive integers")
    return (n // i) // j == n // (i * j)
