"""Mobius values and Mertens prefix sums from a sieve.

One table sized to the largest n of a sweep serves every smaller n, since
all arguments needed downstream are floor-division quotients of n.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from ._backend import kernels

#: Default ceiling on table length; override per call, via CLI flag, or with
#: the MERTMAT_SIEVE_CAP environment variable.
DEFAULT_MAX_ENTRIES = 10**8


def default_max_entries() -> int:
    env = os.environ.get("MERTMAT_SIEVE_CAP")
    return int(env) if env else DEFAULT_MAX_ENTRIES


@dataclass(frozen=True)
class MertensTable:
    """Exact mu(1..limit) and M(1..limit).

    ``mobius`` is int8 with index 0 unused; ``mertens`` is int64 with
    ``mertens[0] == 0`` so that fancy-indexing by a matrix of quotients maps
    the out-of-range quotient 0 to M(0) = 0.  Immutable; share freely.
    """

    limit: int
    mobius: np.ndarray
    mertens: np.ndarray

    def mobius_at(self, k: int) -> int:
        if not 1 <= k <= self.limit:
            raise ValueError(f"k={k} outside table range 1..{self.limit}")
        return int(self.mobius[k])

    def mertens_at(self, k: int) -> int:
        if not 0 <= k <= self.limit:
            raise ValueError(f"k={k} outside table range 0..{self.limit}")
        return int(self.mertens[k])


def build_mertens_table(limit: int, max_entries: int | None = None) -> MertensTable:
    """Sieve mu and accumulate M up to ``limit``.  Deterministic, exact."""
    if limit < 1:
        raise ValueError(f"limit must be a positive integer, got {limit}")
    cap = default_max_entries() if max_entries is None else max_entries
    if limit > cap:
        raise ValueError(
            f"limit {limit} exceeds the memory cap of {cap} entries "
            f"(~{9 * cap / 1e9:.1f} GB); raise the cap to proceed"
        )
    mobius = kernels.mobius_sieve(limit)
    mertens = np.concatenate(([0], np.cumsum(mobius[1:], dtype=np.int64)))
    mobius.setflags(write=False)
    mertens.setflags(write=False)
    return MertensTable(limit=limit, mobius=mobius, mertens=mertens)


def mobius_bruteforce(k: int) -> int:
    """mu(k) by trial-division factorization; test oracle for the sieve."""
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")
    if k == 1:
        return 1
    sign = 1
    rest = k
    p = 2
    while p * p <= rest:
        if rest % p == 0:
            rest //= p
            if rest % p == 0:
                return 0
            sign = -sign
        p += 1
    if rest > 1:
        sign = -sign
    return sign
