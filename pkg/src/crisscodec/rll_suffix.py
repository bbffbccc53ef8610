"""Run-length-limited differential VT codes with a fixed suffix.

RLL_DVT_a(n, m; b) is the set of sequences x of length n + m over
{0, ..., q-1} such that

  * x belongs to DVT_a(n + m; q),
  * no two adjacent symbols of x are equal (the 1-RLL property), and
  * the last m symbols equal the fixed suffix b (itself 1-RLL).

Because codewords are 1-RLL, a single deletion can be located exactly,
which is what makes these sequences usable as the protected first row
and last column of the two-dimensional code.

The encoder is systematic on the differential side: data symbols are
written into the free positions, three high positions carry a greedy
expansion of the syndrome residue, and the power positions (q-1)^i
absorb the remainder in base q-1.  All differentials it writes are
nonzero, which yields the 1-RLL property after inverting the transform.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from . import vt_core
from .errors import EncodingError, NoCandidateError
from .vt_core import DvtParams

#: Encoding below this body length is outside the proven parameter range.
PROVEN_MIN_BODY = 8
#: Encoding above this suffix length is outside the proven parameter range.
PROVEN_MAX_SUFFIX = 3


@dataclass(frozen=True)
class RllSuffixParams:
    """Parameters of RLL_DVT_a(n, m; b) over the alphabet {0, ..., q-1}.

    n is the free body length, m the suffix length, a the syndrome
    residue modulo q*(n+m), and b the fixed suffix.
    """

    n: int
    m: int
    q: int
    a: int
    b: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "b", tuple(self.b))
        if self.q < 3:
            raise ValueError(f"alphabet size must be >= 3, got q={self.q}")
        if self.n < 1:
            raise ValueError(f"body length must be >= 1, got n={self.n}")
        if self.m < 1:
            raise ValueError(f"suffix length must be >= 1, got m={self.m}")
        if len(self.b) != self.m:
            raise ValueError(f"suffix has length {len(self.b)}, expected m={self.m}")
        vt_core.check_symbols(self.b, self.q, "suffix")
        if not vt_core.adjacent_distinct(self.b):
            raise ValueError(f"suffix {self.b} has equal adjacent symbols")
        if not 0 <= self.a < self.q * (self.n + self.m):
            raise ValueError(
                f"syndrome residue must lie in [0, {self.q * (self.n + self.m)}), got a={self.a}"
            )

    @property
    def length(self) -> int:
        return self.n + self.m

    def dvt(self) -> DvtParams:
        return DvtParams(self.length, self.q, self.a)


class IndexSets(NamedTuple):
    """Partition of the body positions 1..n used by the encoder.

    power positions: (q-1)^0, ..., (q-1)^t (absorb a base-(q-1) residue),
    high positions: the three largest non-power indices j1 < j2 < j3
    (absorb the bulk of the syndrome residue greedily), and
    data positions: everything else, one data symbol each.
    """

    t: int
    power: tuple[int, ...]
    high: tuple[int, int, int]
    data: tuple[int, ...]


def int_log_floor(base: int, value: int) -> int:
    """Largest t >= 0 with base**t <= value, computed with exact ints."""
    if base < 2:
        raise ValueError(f"base must be >= 2, got {base}")
    if value < 1:
        raise ValueError(f"value must be >= 1, got {value}")
    t = 0
    power = base
    while power <= value:
        t += 1
        power *= base
    return t


def to_digits(value: int, base: int, width: int) -> list[int]:
    """Little-endian base expansion of value into exactly `width` digits."""
    if value < 0 or value >= base**width:
        raise ValueError(f"{value} does not fit in {width} base-{base} digits")
    digits = []
    for _ in range(width):
        value, d = divmod(value, base)
        digits.append(d)
    return digits


def from_digits(digits: Sequence[int], base: int) -> int:
    """Inverse of to_digits: sum(digits[i] * base**i)."""
    value = 0
    for d in reversed(digits):
        value = value * base + d
    return value


def data_length(n: int, q: int) -> int:
    """Number of data symbols carried by a body of length n: n - t - 4."""
    return n - int_log_floor(q - 1, n) - 4


def index_sets(n: int, q: int) -> IndexSets:
    """Split body positions 1..n into power, high and data positions.

    Needs enough room for the three high positions and at least one
    data position, i.e. n >= t + 5 where t = floor(log_{q-1} n).
    """
    if q < 3:
        raise ValueError(f"alphabet size must be >= 3, got q={q}")
    if n < 1:
        raise ValueError(f"body length must be >= 1, got n={n}")
    t = int_log_floor(q - 1, n)
    power = tuple((q - 1) ** i for i in range(t + 1))
    power_set = set(power)
    high = []
    j = n
    while j >= 1 and len(high) < 3:
        if j not in power_set:
            high.append(j)
        j -= 1
    if len(high) < 3:
        raise ValueError(
            f"body length n={n} is too small to reserve three high positions"
        )
    high = tuple(sorted(high))
    reserved = power_set | set(high)
    data = tuple(i for i in range(1, n + 1) if i not in reserved)
    if not data:
        raise ValueError(
            f"body length n={n} leaves no data positions (need n >= t + 5 = {t + 5})"
        )
    return IndexSets(t, power, high, data)


class EncodeTrace(NamedTuple):
    """Intermediate values of one encode call, mainly for diagnostics."""

    residue: int  # syndrome residue still to place after data and suffix
    greedy: tuple[int, int, int]  # e-values written at the high positions
    remainder: int  # residue left for the power positions
    remainder_digits: tuple[int, ...]  # its base-(q-1) expansion


def _check_proven_range(params: RllSuffixParams, allow_unproven: bool) -> None:
    if allow_unproven:
        return
    if params.n < PROVEN_MIN_BODY or params.m > PROVEN_MAX_SUFFIX:
        raise ValueError(
            f"body length n={params.n} with suffix length m={params.m} is outside "
            f"the proven range (n >= {PROVEN_MIN_BODY}, m <= {PROVEN_MAX_SUFFIX}); "
            f"pass allow_unproven=True to try anyway"
        )


def encode_with_trace(
    data: Sequence[int], params: RllSuffixParams, allow_unproven: bool = False
) -> tuple[list[int], EncodeTrace]:
    """Encode data symbols into RLL_DVT_a(n, m; b), returning intermediates.

    Data symbols live in {0, ..., q-2}; there are data_length(n, q) of
    them.  Outside the proven parameter range (opt-in via
    allow_unproven) the residue left for the power positions may
    overflow, in which case EncodingError is raised; the output is
    always validated against is_member before being returned.
    """
    n, m, q, a, b = params.n, params.m, params.q, params.a, params.b
    _check_proven_range(params, allow_unproven)
    sets = index_sets(n, q)
    expected = len(sets.data)
    if len(data) != expected:
        raise ValueError(f"expected {expected} data symbols, got {len(data)}")
    for i, f in enumerate(data):
        if not 0 <= f <= q - 2:
            raise ValueError(f"data[{i}] = {f!r} is outside [0, {q - 2}]")

    total = n + m
    modulus = q * total
    y = [0] * (total + 1)  # 1-based differential word

    for pos, f in zip(sets.data, data):
        y[pos] = f + 1
    for i in range(n + 1, total):
        y[i] = (b[i - n - 1] - b[i - n]) % q
    y[total] = b[m - 1]

    placed = sum(i * y[i] for i in range(n + 1, total + 1))
    placed += sum(i * y[i] for i in sets.data)
    reserved_min = sum(sets.power) + sum(sets.high)
    residue = (a - placed - reserved_min) % modulus

    g = residue
    greedy = []
    for j in sets.high:
        e = min(q - 2, g // j)
        greedy.append(e)
        y[j] = e + 1
        g -= e * j
    remainder = g

    limit = (q - 1) ** (sets.t + 1) - 1
    if remainder > limit:
        if allow_unproven:
            raise EncodingError(
                f"residue {remainder} exceeds the power-position capacity {limit} "
                f"at the unproven parameters n={n}, m={m}, q={q}"
            )
        raise AssertionError(
            f"residue {remainder} exceeds capacity {limit} inside the proven range"
        )
    digits = to_digits(remainder, q - 1, sets.t + 1)
    for i, h in enumerate(digits):
        y[(q - 1) ** i] = h + 1

    x = vt_core.diff_inverse(y[1:], q)
    if not is_member(x, params):
        raise AssertionError("encoder produced a word outside its own code")
    trace = EncodeTrace(residue, tuple(greedy), remainder, tuple(digits))
    return x, trace


def encode(
    data: Sequence[int], params: RllSuffixParams, allow_unproven: bool = False
) -> list[int]:
    """Encode data symbols into a codeword of RLL_DVT_a(n, m; b)."""
    return encode_with_trace(data, params, allow_unproven)[0]


def is_member(x: Sequence[int], params: RllSuffixParams) -> bool:
    """Membership test: DVT syndrome, 1-RLL property and fixed suffix."""
    if len(x) != params.length:
        raise ValueError(f"expected a sequence of length {params.length}, got {len(x)}")
    return (
        vt_core.is_dvt_member(x, params.dvt())
        and vt_core.adjacent_distinct(x)
        and tuple(x[params.n :]) == params.b
    )


def decode(received: Sequence[int], params: RllSuffixParams) -> vt_core.DeletionDecode:
    """Recover codeword and exact deletion position from one deletion."""
    result = vt_core.decode_rll_deletion(received, params.dvt())
    if tuple(result.codeword[params.n :]) != params.b:
        raise NoCandidateError(
            f"the only consistent codeword does not end with the suffix {params.b}"
        ) from None
    return result


def recover_data(x: Sequence[int], params: RllSuffixParams) -> list[int]:
    """Read the data symbols back out of a codeword (inverse of encode)."""
    if not is_member(x, params):
        raise ValueError("input is not a codeword of this code")
    y = vt_core.diff(x, params.q)
    sets = index_sets(params.n, params.q)
    data = []
    for pos in sets.data:
        if y[pos - 1] == 0:
            raise ValueError(
                f"zero differential at data position {pos}: "
                f"the codeword is not an encoder output"
            )
        data.append(y[pos - 1] - 1)
    return data
