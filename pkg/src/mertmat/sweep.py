"""Sweep harness: norms, ratios, and the exponent w over ranges of n.

For each selected n the harness builds the Mertens matrix, computes its
spectral norm, and records

    ratio = norm / sqrt(n)        w = ln(norm) / ln(n) - 1/2

together with whether n has the form k*k or k*k + k (the points where the
matrix dimension grows).  Output is a fixed-schema CSV so any plotting tool
can regenerate the figures; rows are ascending in n and runs with identical
configuration are bit-identical.
"""

from __future__ import annotations

import enum
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .build import build_M_direct
from .classes import ClassStructure
from .sieve import MertensTable, build_mertens_table
from .spectral import (
    DEFAULT_MAX_ITER,
    DEFAULT_SEED,
    DEFAULT_TOL,
    Method,
    spectral_norm_dense,
    spectral_norm_power,
)

CSV_HEADER = "n,s,mertens_n,norm,ratio,w,restricted_form,converged"


class RestrictedForm(enum.Enum):
    SQUARE = "square"
    SQUARE_PLUS_ROOT = "square_plus_root"
    OTHER = "other"


def classify(n: int) -> RestrictedForm:
    k = math.isqrt(n)
    if k * k == n:
        return RestrictedForm.SQUARE
    if k * k + k == n:
        return RestrictedForm.SQUARE_PLUS_ROOT
    return RestrictedForm.OTHER


def restricted_values(n_from: int, n_to: int) -> list[int]:
    """All n of the form k*k or k*k + k in [n_from, n_to], ascending.

    These are exactly the n at which the class count s increases by one.
    """
    if n_from > n_to:
        raise ValueError(f"empty range: {n_from} > {n_to}")
    out = []
    for k in range(1, math.isqrt(n_to) + 1):
        for n in (k * k, k * k + k):
            if n_from <= n <= n_to:
                out.append(n)
    return out


@dataclass(frozen=True)
class SweepRecord:
    n: int
    s: int
    mertens_n: int
    norm: float
    ratio: float
    w: float
    restricted_form: RestrictedForm
    converged: bool


@dataclass
class SweepConfig:
    """Sweep settings.  With restrict=True the selected n are the k*k and
    k*k + k values in range and n_step is ignored; otherwise n runs from
    n_from to n_to in steps of n_step."""

    n_from: int
    n_to: int
    n_step: int = 1
    restrict: bool = False
    tol: float = DEFAULT_TOL
    max_iter: int = DEFAULT_MAX_ITER
    seed: int = DEFAULT_SEED
    method: Method = Method.POWER
    output_path: str | None = None
    jobs: int = 1

    def __post_init__(self):
        if self.n_from < 2:
            raise ValueError("n_from must be >= 2 (w is undefined at n = 1)")
        if self.n_from > self.n_to:
            raise ValueError(f"n_from {self.n_from} > n_to {self.n_to}")
        if self.n_step < 1:
            raise ValueError("n_step must be positive")
        if self.jobs < 1:
            raise ValueError("jobs must be positive")

    def selected_values(self) -> list[int]:
        if self.restrict:
            return restricted_values(self.n_from, self.n_to)
        return list(range(self.n_from, self.n_to + 1, self.n_step))


# Shared by sweep workers: set in the parent before the pool forks, rebuilt
# by the initializer only when absent (non-fork start methods).
_SHARED_TABLE: MertensTable | None = None


def _worker_init(limit: int):
    global _SHARED_TABLE
    if _SHARED_TABLE is None or _SHARED_TABLE.limit < limit:
        _SHARED_TABLE = build_mertens_table(limit)


def solve_record(
    n: int,
    mt: MertensTable,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
    seed: int = DEFAULT_SEED,
    method: Method = Method.POWER,
) -> SweepRecord:
    """Build the Mertens matrix for one n and measure it."""
    cs = ClassStructure(n)
    m = build_M_direct(cs, mt)
    if method is Method.POWER:
        res = spectral_norm_power(m, tol=tol, max_iter=max_iter, seed=seed)
    else:
        res = spectral_norm_dense(m)
    norm = res.norm
    return SweepRecord(
        n=n,
        s=cs.s,
        mertens_n=int(mt.mertens[n]),
        norm=norm,
        ratio=norm / math.sqrt(n),
        w=math.log(norm) / math.log(n) - 0.5,
        restricted_form=classify(n),
        converged=res.converged,
    )


def _solve_task(args) -> SweepRecord:
    n, tol, max_iter, seed, method_value = args
    return solve_record(
        n, _SHARED_TABLE, tol=tol, max_iter=max_iter, seed=seed, method=Method(method_value)
    )


def run_sweep(config: SweepConfig) -> list[SweepRecord]:
    """One record per selected n, ascending; a non-converged solve is kept
    as a flagged record rather than aborting the sweep."""
    values = config.selected_values()
    global _SHARED_TABLE
    if _SHARED_TABLE is None or _SHARED_TABLE.limit < config.n_to:
        _SHARED_TABLE = build_mertens_table(config.n_to)
    mt = _SHARED_TABLE
    if config.jobs > 1 and len(values) > 1:
        tasks = [
            (n, config.tol, config.max_iter, config.seed, config.method.value)
            for n in values
        ]
        with ProcessPoolExecutor(
            max_workers=config.jobs, initializer=_worker_init, initargs=(config.n_to,)
        ) as pool:
            records = list(pool.map(_solve_task, tasks, chunksize=16))
    else:
        records = [
            solve_record(
                n, mt, tol=config.tol, max_iter=config.max_iter,
                seed=config.seed, method=config.method,
            )
            for n in values
        ]
    records.sort(key=lambda r: r.n)
    if config.output_path is not None:
        write_csv(records, config.output_path)
    return records


def format_record(r: SweepRecord) -> str:
    return (
        f"{r.n},{r.s},{r.mertens_n},{r.norm:.15g},{r.ratio:.15g},{r.w:.15g},"
        f"{r.restricted_form.name},{'true' if r.converged else 'false'}"
    )


def write_csv(records, path):
    """Fixed schema, floats at 15 significant digits, newline-terminated."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(CSV_HEADER + "\n")
        for r in records:
            fh.write(format_record(r) + "\n")
