"""Two-dimensional codes correcting one row deletion plus one column deletion.

A codeword is an n x n array X over {0, ..., q-1} such that

  1. the first row belongs to RLL_DVT_0(n-2, 2; (0, 2)),
  2. the reversed last column (read bottom to top) belongs to
     RLL_DVT_0(n-3, 3; (0, 1, 2)),
  3. X[2][n-1] = 1 and X[3][n-1] = 2 (1-based),
  4. every row except the first sums to 0 (mod q), and
  5. every column except the first and last sums to 0 (mod q).

Conditions 1, 4 and 5 force *every* row and column to sum to 0 (mod q),
so a deleted row or column can be rebuilt from parity once its position
is known; the protected first row and last column pin those positions
down.  The corner entries fixed by conditions 1-3 let the decoder tell
from the received array alone whether the deleted column was the last
one.

Arrays are lists of row lists; positions are 1-based in the public API.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from . import rll_suffix, vt_core
from .errors import DecodingError, EncodingError, NotDecodableError
from .rll_suffix import RllSuffixParams, from_digits, int_log_floor, to_digits

#: Encoding below this array dimension is outside the proven parameter range.
PROVEN_MIN_DIMENSION = 11
#: Smallest dimension at which the encoder layout exists at all.
MIN_ENCODE_DIMENSION = 8

Array = list[list[int]]


@dataclass(frozen=True)
class CodeParams:
    """Array dimension n and alphabet size q of one code instance."""

    n: int
    q: int

    def __post_init__(self) -> None:
        if self.n < 4:
            raise ValueError(f"array dimension must be >= 4, got n={self.n}")
        if self.q < 3:
            raise ValueError(f"alphabet size must be >= 3, got q={self.q}")


class MessageLengths(NamedTuple):
    """Symbol counts carried by the protected row/column and the payload.

    k1 and k2 are the free symbol counts of the first row and last
    column, k3 the number of q-ary data symbols packed into them, and
    total = n^2 - 4n + 2 + k3 the full message length.
    """

    k1: int
    k2: int
    k3: int
    total: int


class ArrayEncodeTrace(NamedTuple):
    """Intermediates of one array encode call."""

    packed: int  # the first k3 data symbols packed into one integer
    digits: tuple[int, ...]  # its base-(q-1) expansion, split across row/column
    first_row: list[int]
    reversed_last_column: list[int]


class ArrayDecodeTrace(NamedTuple):
    """Intermediates of one array decode call."""

    column_restored: bool  # last column was deleted and rebuilt from parity
    column_word: list[int]  # received reversed last column fed to the 1-D decoder
    row_position: int  # deletion position inside the reversed last column
    row_index: int  # 1-based index where the missing row was reinserted
    row_values: list[int]
    col_index: int  # 1-based index of the missing column
    col_values: list[int]


def first_row_params(params: CodeParams) -> RllSuffixParams:
    """1-D code protecting the first row."""
    return RllSuffixParams(params.n - 2, 2, params.q, 0, (0, 2))


def last_column_params(params: CodeParams) -> RllSuffixParams:
    """1-D code protecting the reversed last column."""
    return RllSuffixParams(params.n - 3, 3, params.q, 0, (0, 1, 2))


def _check_array(X: Sequence[Sequence[int]], rows: int, cols: int, q: int) -> None:
    if len(X) != rows or any(len(r) != cols for r in X):
        shape = f"{len(X)}x{len(X[0]) if X else 0}"
        raise ValueError(f"expected a {rows}x{cols} array, got {shape}")
    for i, row in enumerate(X):
        vt_core.check_symbols(row, q, f"row {i + 1}")


def reversed_last_column(X: Sequence[Sequence[int]]) -> list[int]:
    """Last column of X read bottom to top."""
    return [row[-1] for row in reversed(X)]


def first_violation(X: Sequence[Sequence[int]], params: CodeParams) -> str | None:
    """Name of the first violated codeword condition, or None if valid."""
    n, q = params.n, params.q
    _check_array(X, n, n, q)
    if not rll_suffix.is_member(X[0], first_row_params(params)):
        return "condition 1: first row is not a protected 1-D codeword"
    if not rll_suffix.is_member(reversed_last_column(X), last_column_params(params)):
        return "condition 2: reversed last column is not a protected 1-D codeword"
    if X[1][n - 2] != 1 or X[2][n - 2] != 2:
        return "condition 3: marker entries next to the last column are wrong"
    for i in range(1, n):
        if sum(X[i]) % q != 0:
            return f"condition 4: row {i + 1} does not sum to 0 (mod q)"
    for j in range(1, n - 1):
        if sum(X[i][j] for i in range(n)) % q != 0:
            return f"condition 5: column {j + 1} does not sum to 0 (mod q)"
    return None


def is_codeword(X: Sequence[Sequence[int]], params: CodeParams) -> bool:
    """True iff X satisfies all five codeword conditions."""
    return first_violation(X, params) is None


def check_zero_sums(X: Sequence[Sequence[int]], q: int) -> bool:
    """True iff every row and every column of X sums to 0 (mod q)."""
    if any(sum(row) % q != 0 for row in X):
        return False
    return all(sum(row[j] for row in X) % q == 0 for j in range(len(X[0]) if X else 0))


def corrupt(X: Sequence[Sequence[int]], i: int, j: int) -> Array:
    """Delete row i and column j (1-based) from a square array."""
    n = len(X)
    if n < 2 or any(len(row) != n for row in X):
        raise ValueError("input must be a square array of dimension >= 2")
    if not 1 <= i <= n:
        raise ValueError(f"row index must lie in [1, {n}], got {i}")
    if not 1 <= j <= n:
        raise ValueError(f"column index must lie in [1, {n}], got {j}")
    return [
        list(row[: j - 1]) + list(row[j:])
        for r, row in enumerate(X)
        if r != i - 1
    ]


def deletion_ball(X: Sequence[Sequence[int]]) -> set[tuple[tuple[int, ...], ...]]:
    """All distinct arrays obtainable from X by one row+column deletion."""
    n = len(X)
    ball = set()
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            ball.add(tuple(tuple(row) for row in corrupt(X, i, j)))
    return ball


def message_lengths(params: CodeParams, allow_unproven: bool = False) -> MessageLengths:
    """Per-component message lengths of the encoder at these parameters.

    Proven for n >= 11; n in [8, 10] is accepted with allow_unproven.
    """
    n, q = params.n, params.q
    floor_n = PROVEN_MIN_DIMENSION if not allow_unproven else MIN_ENCODE_DIMENSION
    if n < floor_n:
        if allow_unproven:
            raise ValueError(
                f"the encoder layout needs n >= {MIN_ENCODE_DIMENSION}, got n={n}"
            )
        raise ValueError(
            f"encoding is proven for n >= {PROVEN_MIN_DIMENSION}, got n={n}; "
            f"pass allow_unproven=True for n >= {MIN_ENCODE_DIMENSION}"
        )
    k1 = n - 6 - int_log_floor(q - 1, n - 2)
    k2 = n - 7 - int_log_floor(q - 1, n - 3)
    if k1 < 1 or k2 < 1:
        raise ValueError(
            f"parameters n={n}, q={q} leave no data room in the protected row/column"
        )
    capacity = (q - 1) ** (k1 + k2)
    k3 = 0
    power = q
    while power <= capacity:
        k3 += 1
        power *= q
    return MessageLengths(k1, k2, k3, n * n - 4 * n + 2 + k3)


def encode_with_trace(
    data: Sequence[int], params: CodeParams, allow_unproven: bool = False
) -> tuple[Array, ArrayEncodeTrace]:
    """Encode message_lengths(params).total q-ary symbols, with intermediates.

    The first k3 symbols are packed into an integer, re-expanded in base
    q-1 and spread over the protected first row and last column; the
    rest fill the array interior directly.  Parity entries complete the
    last row first and the first column second -- the first-column
    parities depend on the completed last row.
    """
    n, q = params.n, params.q
    ml = message_lengths(params, allow_unproven)
    if len(data) != ml.total:
        raise ValueError(f"expected {ml.total} data symbols, got {len(data)}")
    vt_core.check_symbols(data, q, "data")

    packed = from_digits(data[: ml.k3], q)
    digits = to_digits(packed, q - 1, ml.k1 + ml.k2)
    u = rll_suffix.encode(digits[: ml.k1], first_row_params(params), allow_unproven)
    v = rll_suffix.encode(digits[ml.k1 :], last_column_params(params), allow_unproven)

    X: Array = [[0] * n for _ in range(n)]
    X[0] = list(u)
    for r in range(n):
        X[r][n - 1] = v[n - 1 - r]
    X[1][n - 2] = 1
    X[2][n - 2] = 2

    k3 = ml.k3
    for j in range(2, n - 1):
        X[1][j - 1] = data[k3 + j - 2]
        X[2][j - 1] = data[k3 + j + n - 5]
    for i in range(4, n):
        for j in range(2, n):
            X[i - 1][j - 1] = data[k3 + (n - 2) * i + j - 2 * n]

    for j in range(2, n):
        X[n - 1][j - 1] = -sum(X[i][j - 1] for i in range(n - 1)) % q
    for i in range(2, n + 1):
        X[i - 1][0] = -sum(X[i - 1][1:]) % q

    violation = first_violation(X, params)
    if violation is not None:
        if allow_unproven:
            raise EncodingError(
                f"encoding failed at the unproven parameters n={n}, q={q}: {violation}"
            )
        raise AssertionError(f"encoder produced an invalid array: {violation}")
    trace = ArrayEncodeTrace(packed, tuple(digits), list(u), list(v))
    return X, trace


def encode(data: Sequence[int], params: CodeParams, allow_unproven: bool = False) -> Array:
    """Encode message_lengths(params).total q-ary symbols into an array."""
    return encode_with_trace(data, params, allow_unproven)[0]


def decode_with_trace(
    Y: Sequence[Sequence[int]], params: CodeParams
) -> tuple[Array, ArrayDecodeTrace]:
    """Rebuild the codeword from an (n-1) x (n-1) received array.

    Steps: decide from the top right corner entries whether the last
    column was the deleted one (restoring it from row parity if so),
    locate the deleted row through the protected last column, rebuild it
    from column parity, then do the same for the deleted column through
    the protected first row.  The result is validated against the
    codeword conditions before being returned.
    """
    n, q = params.n, params.q
    _check_array(Y, n - 1, n - 1, q)
    work = [list(row) for row in Y]

    # The fixed entries next to the top right corner make the pair
    # (Y[1][n-1], Y[2][n-1]) increase exactly when the deleted column
    # was the last one.
    column_restored = work[0][-1] < work[1][-1]
    if column_restored:
        for row in work:
            row.append(-sum(row) % q)

    column_word = [row[-1] for row in reversed(work)]
    try:
        v_result = rll_suffix.decode(column_word, last_column_params(params))
    except DecodingError as exc:
        raise NotDecodableError(f"cannot locate the deleted row: {exc}") from exc
    row_index = n - v_result.position + 1
    row_values = [-sum(work[r][c] for r in range(n - 1)) % q for c in range(len(work[0]))]
    work.insert(row_index - 1, row_values)

    if column_restored:
        col_index = n
        col_values = [row[-1] for row in work]
    else:
        try:
            u_result = rll_suffix.decode(work[0], first_row_params(params))
        except DecodingError as exc:
            raise NotDecodableError(f"cannot locate the deleted column: {exc}") from exc
        col_index = u_result.position
        col_values = [-sum(row) % q for row in work]
        for row, value in zip(work, col_values):
            row.insert(col_index - 1, value)

    violation = first_violation(work, params)
    if violation is not None:
        raise NotDecodableError(f"reconstructed array is not a codeword: {violation}")
    trace = ArrayDecodeTrace(
        column_restored,
        column_word,
        v_result.position,
        row_index,
        row_values,
        col_index,
        col_values,
    )
    return work, trace


def decode(Y: Sequence[Sequence[int]], params: CodeParams) -> Array:
    """Rebuild the codeword from an (n-1) x (n-1) received array."""
    return decode_with_trace(Y, params)[0]


def recover_data(
    X: Sequence[Sequence[int]], params: CodeParams, allow_unproven: bool = False
) -> list[int]:
    """Read the message symbols back out of a codeword (inverse of encode)."""
    n, q = params.n, params.q
    ml = message_lengths(params, allow_unproven)
    violation = first_violation(X, params)
    if violation is not None:
        raise ValueError(f"input is not a codeword: {violation}")

    u_digits = rll_suffix.recover_data(X[0], first_row_params(params))
    v_digits = rll_suffix.recover_data(reversed_last_column(X), last_column_params(params))
    packed = from_digits(u_digits + v_digits, q - 1)
    if packed >= q**ml.k3:
        raise ValueError(
            "protected row/column carry a value outside the encoder image"
        )

    data = [0] * ml.total
    data[: ml.k3] = to_digits(packed, q, ml.k3)
    k3 = ml.k3
    for j in range(2, n - 1):
        data[k3 + j - 2] = X[1][j - 1]
        data[k3 + j + n - 5] = X[2][j - 1]
    for i in range(4, n):
        for j in range(2, n):
            data[k3 + (n - 2) * i + j - 2 * n] = X[i - 1][j - 1]
    return data
