"""Golden constants and independent oracles shared across the test suite.

The golden pipeline values (data vector, codeword array, received array,
1-D codeword and its encode intermediates) come from a fully
hand-checked worked example at n=9, q=7.  The oracles re-derive codec
answers by definition-level brute force -- trying every insertion,
every removal, or enumerating whole alphabets -- so they share no code
with the optimized paths they check.
"""

from __future__ import annotations

import itertools

from crisscodec import vt_core
from crisscodec.vt_core import DvtParams

GOLDEN_N = 9
GOLDEN_Q = 7

# 49 message symbols that encode to GOLDEN_ARRAY.
GOLDEN_DATA = [
    4, 2, 0, 2, 4, 4, 0, 4, 1, 2, 6, 0, 3, 2, 6, 1, 0, 3, 2, 4,
    6, 4, 3, 5, 6, 1, 6, 1, 1, 3, 2, 3, 2, 2, 6, 0, 0, 5, 0, 5,
    5, 3, 0, 6, 2, 3, 3, 0, 5,
]

GOLDEN_ARRAY = [
    [4, 2, 1, 4, 5, 2, 1, 0, 2],
    [5, 0, 2, 4, 4, 0, 4, 1, 1],
    [5, 1, 2, 6, 0, 3, 2, 2, 0],
    [5, 6, 1, 0, 3, 2, 4, 6, 1],
    [2, 4, 3, 5, 6, 1, 6, 1, 0],
    [3, 1, 3, 2, 3, 2, 2, 6, 6],
    [5, 0, 0, 5, 0, 5, 5, 3, 5],
    [3, 0, 6, 2, 3, 3, 0, 5, 6],
    [3, 0, 3, 0, 4, 3, 4, 4, 0],
]

# GOLDEN_ARRAY after deleting row 9 and column 9.
GOLDEN_RECEIVED_9_9 = [
    [4, 2, 1, 4, 5, 2, 1, 0],
    [5, 0, 2, 4, 4, 0, 4, 1],
    [5, 1, 2, 6, 0, 3, 2, 2],
    [5, 6, 1, 0, 3, 2, 4, 6],
    [2, 4, 3, 5, 6, 1, 6, 1],
    [3, 1, 3, 2, 3, 2, 2, 6],
    [5, 0, 0, 5, 0, 5, 5, 3],
    [3, 0, 6, 2, 3, 3, 0, 5],
]

# First row of GOLDEN_ARRAY: the 1-D codeword of the worked example
# (body 7, suffix (0, 2), residue 0) and its encode intermediates.
GOLDEN_CODEWORD_1D = [4, 2, 1, 4, 5, 2, 1, 0, 2]
GOLDEN_TRACE_1D = dict(residue=31, greedy=(5, 2, 0), remainder=1, remainder_digits=(1, 0))

# Reversed last column of GOLDEN_ARRAY (body 6, suffix (0, 1, 2)).
GOLDEN_COLUMN_1D = [0, 6, 5, 6, 0, 1, 0, 1, 2]

# Decode intermediates when row 9 and column 9 of GOLDEN_ARRAY are deleted.
GOLDEN_WALKTHROUGH = dict(
    column_word=[6, 5, 6, 0, 1, 0, 1, 2],
    row_index=9,
    row_values=[3, 0, 3, 0, 4, 3, 4, 4, 0],
)

# |code(4, 3)|, frozen after the first full 3^16 enumeration.
FROZEN_CODE_SIZE_4_3 = 0


def iter_words(n: int, q: int):
    """All q^n words of length n, as tuples."""
    return itertools.product(range(q), repeat=n)


def brute_deletion_candidates(received, params: DvtParams) -> list[list[int]]:
    """Definition-level oracle: try every (position, symbol) insertion."""
    seen = {}
    w = list(received)
    for p in range(1, params.n + 1):
        for s in range(params.q):
            cand = w[: p - 1] + [s] + w[p - 1 :]
            if vt_core.is_dvt_member(cand, params):
                seen[tuple(cand)] = cand
    return list(seen.values())


def brute_insertion_candidates(received, params: DvtParams) -> list[list[int]]:
    """Definition-level oracle: try every single-symbol removal."""
    seen = {}
    w = list(received)
    for d in range(len(w)):
        cand = w[:d] + w[d + 1 :]
        if is_member_quiet(cand, params):
            seen[tuple(cand)] = cand
    return list(seen.values())


def is_member_quiet(x, params: DvtParams) -> bool:
    return len(x) == params.n and vt_core.is_dvt_member(x, params)


def enumerate_protected_words(n: int, q: int, suffix: tuple[int, ...]) -> list[list[int]]:
    """Pure-Python enumeration of DVT_0 members with RLL + fixed suffix."""
    out = []
    m = len(suffix)
    for head in itertools.product(range(q), repeat=n - m):
        x = list(head) + list(suffix)
        if not vt_core.adjacent_distinct(x):
            continue
        if vt_core.syndrome(vt_core.diff(x, q)) % (q * n) == 0:
            out.append(x)
    return out


def build_structural_codeword(n: int, q: int, u, v, fill) -> list[list[int]]:
    """Assemble a codeword from a valid first row, valid reversed last
    column and interior fill values; parity cells are forced."""
    X = [[0] * n for _ in range(n)]
    X[0] = list(u)
    for r in range(n):
        X[r][n - 1] = v[n - 1 - r]
    X[1][n - 2] = 1
    X[2][n - 2] = 2
    free = [
        (i, j)
        for i in range(1, n - 1)
        for j in range(1, n - 1)
        if (i, j) not in ((1, n - 2), (2, n - 2))
    ]
    assert len(fill) == len(free)
    for (i, j), value in zip(free, fill):
        X[i][j] = value
    for j in range(1, n - 1):
        X[n - 1][j] = -sum(X[i][j] for i in range(n - 1)) % q
    for i in range(1, n):
        X[i][0] = -sum(X[i][1:]) % q
    return X
