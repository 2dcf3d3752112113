"""Golden n=16 fixtures shared across test modules.

Every array here was transcribed by hand and double-checked against the
defining formulas; tests treat them as frozen oracles.
"""

import numpy as np

N = 16

REPS = [1, 2, 3, 4, 5, 8, 16]

# multiplication table of the representatives, ZERO as 0
TABLE = np.array(
    [
        [1, 2, 3, 4, 5, 8, 16],
        [2, 4, 8, 8, 16, 16, 0],
        [3, 8, 16, 16, 16, 0, 0],
        [4, 8, 16, 16, 0, 0, 0],
        [5, 16, 16, 0, 0, 0, 0],
        [8, 16, 0, 0, 0, 0, 0],
        [16, 0, 0, 0, 0, 0, 0],
    ],
    dtype=np.int64,
)

# coefficients of the projected all-ones and Mobius sequences
U_VEC = np.array([1, 1, 1, 1, 1, 3, 8], dtype=np.int64)
MU_VEC = np.array([1, -1, -1, 0, -1, 0, 1], dtype=np.int64)


def _ones_at(pairs):
    m = np.zeros((7, 7), dtype=np.int64)
    pos = {k: i for i, k in enumerate(REPS)}
    for row_label, col_label in pairs:
        m[pos[row_label], pos[col_label]] = 1
    return m


# rho(k) for the non-unit representatives; each column j holds a single 1 at
# the row of the class of k * reps[j], or is zero once the product passes n
RHO = {
    1: np.eye(7, dtype=np.int64),
    2: _ones_at([(2, 1), (4, 2), (8, 3), (8, 4), (16, 5), (16, 8)]),
    3: _ones_at([(3, 1), (8, 2), (16, 3), (16, 4), (16, 5)]),
    4: _ones_at([(4, 1), (8, 2), (16, 3), (16, 4)]),
    5: _ones_at([(5, 1), (16, 2), (16, 3)]),
    8: _ones_at([(8, 1), (16, 2)]),
    16: _ones_at([(16, 1)]),
}

RHO_U = np.array(
    [
        [1, 0, 0, 0, 0, 0, 0],
        [1, 1, 0, 0, 0, 0, 0],
        [1, 0, 1, 0, 0, 0, 0],
        [1, 1, 0, 1, 0, 0, 0],
        [1, 0, 0, 0, 1, 0, 0],
        [3, 2, 1, 1, 0, 1, 0],
        [8, 4, 3, 2, 2, 1, 1],
    ],
    dtype=np.int64,
)

RHO_MU = np.array(
    [
        [1, 0, 0, 0, 0, 0, 0],
        [-1, 1, 0, 0, 0, 0, 0],
        [-1, 0, 1, 0, 0, 0, 0],
        [0, -1, 0, 1, 0, 0, 0],
        [-1, 0, 0, 0, 1, 0, 0],
        [0, -1, -1, -1, 0, 1, 0],
        [1, -1, -2, -1, -2, -1, 1],
    ],
    dtype=np.int64,
)

T = np.array(
    [
        [1, 1, 1, 1, 1, 1, 1],
        [1, 1, 1, 1, 1, 1, 0],
        [1, 1, 1, 1, 1, 0, 0],
        [1, 1, 1, 1, 0, 0, 0],
        [1, 1, 1, 0, 0, 0, 0],
        [1, 1, 0, 0, 0, 0, 0],
        [1, 0, 0, 0, 0, 0, 0],
    ],
    dtype=np.int64,
)

U_MATRIX = np.array(
    [
        [16, 8, 5, 4, 3, 2, 1],
        [8, 4, 2, 2, 1, 1, 0],
        [5, 2, 1, 1, 1, 0, 0],
        [4, 2, 1, 1, 0, 0, 0],
        [3, 1, 1, 0, 0, 0, 0],
        [2, 1, 0, 0, 0, 0, 0],
        [1, 0, 0, 0, 0, 0, 0],
    ],
    dtype=np.int64,
)

M_MATRIX = np.array(
    [
        [-1, -2, -2, -1, -1, 0, 1],
        [-2, -1, 0, 0, 1, 1, 0],
        [-2, 0, 1, 1, 1, 0, 0],
        [-1, 0, 1, 1, 0, 0, 0],
        [-1, 1, 1, 0, 0, 0, 0],
        [0, 1, 0, 0, 0, 0, 0],
        [1, 0, 0, 0, 0, 0, 0],
    ],
    dtype=np.int64,
)

# Mertens function anchors: M(k) for k = 1..16, then selected larger k
MERTENS_SMALL = [1, 0, -1, -1, -2, -1, -2, -2, -2, -1, -2, -2, -3, -2, -1, -1]
MERTENS_ANCHORS = {10: -1, 100: 1, 1000: 2, 10**4: -23, 10**5: -48, 10**6: 212}
