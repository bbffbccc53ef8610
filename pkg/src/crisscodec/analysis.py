"""Redundancy analysis and exact code-size counting.

Redundancy rows report, per (n, q), the component message lengths, the
encoder redundancy 4n - 2 - k3 (in q-ary symbols) and the theoretical
lower/upper bounds it must sit between.  Floats appear only here, in
reporting; everything the codec itself computes stays in exact ints.

Code sizes are counted two ways: `formula` multiplies the brute-forced
counts of valid first rows and last columns by q^((n-2)^2 - 2) free
interior cells (the parity cells are then forced), while `bruteforce`
enumerates every q^(n^2) array and tests the codeword conditions
directly.  Both enumerations are vectorized with numpy and guarded so
they refuse work beyond ~10^8 candidates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import crisscross, rll_suffix
from .crisscross import CodeParams

ENUMERATION_GUARD = 10**8

CSV_FIELDS = (
    "n",
    "q",
    "k1",
    "k2",
    "k3",
    "message_length",
    "encoder_redundancy",
    "lower_bound",
    "upper_bound",
    "gap",
)


@dataclass(frozen=True)
class AnalysisRow:
    """Redundancy figures of one (n, q) parameter point."""

    n: int
    q: int
    k1: int
    k2: int
    k3: int
    message_length: int
    encoder_redundancy: int
    lower_bound: float
    upper_bound: float
    gap: float


def analysis_row(n: int, q: int, allow_unproven: bool = False) -> AnalysisRow:
    """Redundancy row at (n, q); bounds are floats, the rest exact ints."""
    ml = crisscross.message_lengths(CodeParams(n, q), allow_unproven)
    redundancy = 4 * n - 2 - ml.k3
    log_q = math.log(q)
    lower = 2 * n + 2 * math.log(n) / log_q - 3
    upper = 2 * n + 2 * math.log(n) / log_q + (2 * n - 13) * math.log(q / (q - 1)) / log_q + 12
    return AnalysisRow(
        n, q, ml.k1, ml.k2, ml.k3, ml.total, redundancy, lower, upper, redundancy - lower
    )


def analyze_range(
    n_values: range | list[int], q_values: list[int], allow_unproven: bool = False
) -> list[AnalysisRow]:
    """Redundancy rows over a grid of dimensions and alphabet sizes."""
    return [analysis_row(n, q, allow_unproven) for n in n_values for q in q_values]


def bounds_hold(row: AnalysisRow, slack: float = 1e-9) -> bool:
    """True iff lower - slack <= encoder_redundancy <= upper + slack."""
    return row.lower_bound - slack <= row.encoder_redundancy <= row.upper_bound + slack


def _row_cells(row: AnalysisRow) -> list[str]:
    return [
        str(row.n),
        str(row.q),
        str(row.k1),
        str(row.k2),
        str(row.k3),
        str(row.message_length),
        str(row.encoder_redundancy),
        f"{row.lower_bound:.6f}",
        f"{row.upper_bound:.6f}",
        f"{row.gap:.6f}",
    ]


def to_csv(rows: list[AnalysisRow]) -> str:
    lines = [",".join(CSV_FIELDS)]
    lines.extend(",".join(_row_cells(row)) for row in rows)
    return "\n".join(lines) + "\n"


def to_table(rows: list[AnalysisRow]) -> str:
    cells = [list(CSV_FIELDS)] + [_row_cells(row) for row in rows]
    widths = [max(len(line[c]) for line in cells) for c in range(len(CSV_FIELDS))]
    lines = ["  ".join(cell.rjust(w) for cell, w in zip(line, widths)) for line in cells]
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class CodeSize:
    """Exact size of one code instance and how it was obtained."""

    n: int
    q: int
    mode: str
    first_row_count: int
    last_column_count: int
    size: int
    redundancy: int | None  # n^2 - floor(log_q size); None for an empty code


def protected_row_count(
    n: int, q: int, suffix: tuple[int, ...], collect: bool = False
) -> tuple[int, list[list[int]] | None]:
    """Count (optionally collect) length-n words that protect a row/column.

    A word qualifies when it lies in DVT_0(n; q), has no equal adjacent
    symbols and ends with `suffix`.  Enumerates all q^n candidates in
    vectorized chunks; refuses when q^n exceeds the guard.
    """
    total = q**n
    if total > ENUMERATION_GUARD:
        raise ValueError(
            f"q^n = {total} exceeds the enumeration guard {ENUMERATION_GUARD}"
        )
    modulus = q * n
    weights = np.arange(1, n, dtype=np.int64)
    suffix_arr = np.asarray(suffix, dtype=np.int64)
    powers = [q**k for k in range(n)]
    count = 0
    rows: list[list[int]] | None = [] if collect else None
    chunk = 1 << 20
    for start in range(0, total, chunk):
        stop = min(start + chunk, total)
        idx = np.arange(start, stop, dtype=np.int64)
        digits = np.empty((stop - start, n), dtype=np.int64)
        for k in range(n):
            digits[:, k] = (idx // powers[k]) % q
        d = (digits[:, :-1] - digits[:, 1:]) % q
        syn = d @ weights + digits[:, -1] * n
        mask = (syn % modulus == 0) & (d != 0).all(axis=1)
        mask &= (digits[:, n - len(suffix) :] == suffix_arr).all(axis=1)
        count += int(mask.sum())
        if rows is not None:
            rows.extend(digits[mask].tolist())
    return count, rows


def _count_bruteforce(n: int, q: int) -> tuple[int, int, int]:
    """Count codewords by enumerating every q^(n^2) array."""
    cells = n * n
    total = q**cells
    if total > ENUMERATION_GUARD:
        raise ValueError(
            f"q^(n^2) = {total} exceeds the enumeration guard {ENUMERATION_GUARD}"
        )
    u_count, u_rows = protected_row_count(n, q, (0, 2), collect=True)
    v_count, v_rows = protected_row_count(n, q, (0, 1, 2), collect=True)
    assert u_rows is not None and v_rows is not None
    powers_n = [q**k for k in range(n)]
    u_codes = np.array(
        sorted(sum(s * powers_n[k] for k, s in enumerate(row)) for row in u_rows),
        dtype=np.int64,
    )
    v_codes = np.array(
        sorted(sum(s * powers_n[k] for k, s in enumerate(row)) for row in v_rows),
        dtype=np.int64,
    )

    powers = [q**k for k in range(cells)]
    count = 0
    chunk = 1 << 20
    for start in range(0, total, chunk):
        stop = min(start + chunk, total)
        idx = np.arange(start, stop, dtype=np.int64)
        digits = np.empty((stop - start, cells), dtype=np.int64)
        for k in range(cells):
            digits[:, k] = (idx // powers[k]) % q
        # cell k of a row-major flattening is entry (k // n, k % n)
        row1_code = sum(digits[:, c] * powers_n[c] for c in range(n))
        mask = np.isin(row1_code, u_codes)
        vcol_code = sum(digits[:, (n - 1 - k) * n + n - 1] * powers_n[k] for k in range(n))
        mask &= np.isin(vcol_code, v_codes)
        mask &= digits[:, n + n - 2] == 1
        mask &= digits[:, 2 * n + n - 2] == 2
        for i in range(1, n):
            mask &= digits[:, i * n : (i + 1) * n].sum(axis=1) % q == 0
        for j in range(1, n - 1):
            mask &= digits[:, j::n].sum(axis=1) % q == 0
        count += int(mask.sum())
    return count, u_count, v_count


def count_code_size(n: int, q: int, mode: str = "formula") -> CodeSize:
    """Exact |code(n, q)| via the structural formula or full enumeration."""
    params = CodeParams(n, q)  # validates n >= 4, q >= 3
    if mode == "formula":
        u_count, _ = protected_row_count(params.n, params.q, (0, 2))
        v_count, _ = protected_row_count(params.n, params.q, (0, 1, 2))
        size = u_count * v_count * q ** ((n - 2) ** 2 - 2)
    elif mode == "bruteforce":
        size, u_count, v_count = _count_bruteforce(n, q)
    else:
        raise ValueError(f'mode must be "formula" or "bruteforce", got {mode!r}')
    redundancy = n * n - rll_suffix.int_log_floor(q, size) if size > 0 else None
    return CodeSize(n, q, mode, u_count, v_count, size, redundancy)
