"""Randomized and exhaustive self-checks of the array codec.

The property suite drives the whole pipeline: random messages are
encoded, every one of the n^2 criss-cross deletions is applied, and the
decoder plus data recovery must reproduce the original exactly.  On top
of that it checks that codewords have all-zero row/column sums, that
the corner discriminator (which tells a deleted last column from the
other cases) always points the right way, and -- optionally -- that the
single-deletion balls of all structurally enumerated codewords at the
smallest parameters are pairwise disjoint.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass
from typing import Callable

from . import analysis, crisscross
from .crisscross import CodeParams

#: Test-only hook: when set, maps each decoded array to a replacement
#: before it is compared against the original.  Lets the test suite
#: confirm that the round-trip check actually notices wrong decodes.
_decode_tamper_hook: Callable[[list[list[int]]], list[list[int]]] | None = None

#: Parameters of the exhaustive structural enumeration suite.
EXHAUSTIVE_SMALL = (4, 3)


@dataclass(frozen=True)
class SuiteResult:
    name: str
    passed: bool
    detail: str
    seconds: float


@dataclass(frozen=True)
class SelfTestReport:
    n: int
    q: int
    seed: int
    results: tuple[SuiteResult, ...]

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results)

    def lines(self) -> list[str]:
        out = [f"selftest n={self.n} q={self.q} seed={self.seed}"]
        for r in self.results:
            status = "PASS" if r.passed else "FAIL"
            out.append(f"  {r.name}: {status} ({r.detail}) [{r.seconds:.2f}s]")
        return out


def _structural_codewords(n: int, q: int) -> list[tuple[tuple[int, ...], ...]]:
    """Every codeword at (n, q), assembled from its independent parts.

    Valid first rows, valid reversed last columns and free interior
    cells are independent; the remaining first-column and last-row
    entries are forced by the parity conditions.
    """
    params = CodeParams(n, q)
    _, u_rows = analysis.protected_row_count(n, q, (0, 2), collect=True)
    _, v_rows = analysis.protected_row_count(n, q, (0, 1, 2), collect=True)
    assert u_rows is not None and v_rows is not None
    free = [
        (i, j)
        for i in range(1, n - 1)
        for j in range(1, n - 1)
        if (i, j) not in ((1, n - 2), (2, n - 2))
    ]
    words = []
    for u in u_rows:
        for v in v_rows:
            for fill in itertools.product(range(q), repeat=len(free)):
                X = [[0] * n for _ in range(n)]
                X[0] = list(u)
                for r in range(n):
                    X[r][n - 1] = v[n - 1 - r]
                X[1][n - 2] = 1
                X[2][n - 2] = 2
                for (i, j), value in zip(free, fill):
                    X[i][j] = value
                for j in range(1, n - 1):
                    X[n - 1][j] = -sum(X[i][j] for i in range(n - 1)) % q
                for i in range(1, n):
                    X[i][0] = -sum(X[i][1:]) % q
                assert crisscross.is_codeword(X, params)
                words.append(tuple(tuple(row) for row in X))
    return words


def run_selftest(
    n: int,
    q: int,
    trials: int,
    seed: int = 0,
    exhaustive_small: bool = False,
    allow_unproven: bool = False,
) -> SelfTestReport:
    """Run the property suite at (n, q) and report per-suite outcomes."""
    params = CodeParams(n, q)
    ml = crisscross.message_lengths(params, allow_unproven)
    rng = random.Random(seed)
    results = []

    # Suite 1: encode -> corrupt -> decode -> recover round-trips over
    # every deletion position.  Discriminator observations are collected
    # along the way and judged in suite 3.
    start = time.perf_counter()
    failures: list[str] = []
    discriminator_bad: list[str] = []
    codewords = []
    for trial in range(trials):
        data = [rng.randrange(q) for _ in range(ml.total)]
        X = crisscross.encode(data, params, allow_unproven)
        codewords.append(X)
        if crisscross.recover_data(X, params, allow_unproven) != data:
            failures.append(f"recover(encode(data)) != data at trial={trial} seed={seed}")
            continue
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                received = crisscross.corrupt(X, i, j)
                pair = (received[0][-1], received[1][-1])
                if (pair[0] < pair[1]) != (j == n):
                    discriminator_bad.append(
                        f"pair {pair} at trial={trial} i={i} j={j} seed={seed}"
                    )
                try:
                    decoded = crisscross.decode(received, params)
                except Exception as exc:  # noqa: BLE001 - reported, not hidden
                    failures.append(
                        f"decode raised {type(exc).__name__} at "
                        f"trial={trial} i={i} j={j} seed={seed}"
                    )
                    continue
                if _decode_tamper_hook is not None:
                    decoded = _decode_tamper_hook(decoded)
                if decoded != X:
                    failures.append(
                        f"decode mismatch at trial={trial} i={i} j={j} seed={seed}"
                    )
                elif crisscross.recover_data(decoded, params, allow_unproven) != data:
                    failures.append(
                        f"recovered data mismatch at trial={trial} i={i} j={j} seed={seed}"
                    )
    detail = f"{trials} trials x {n * n} deletions"
    if failures:
        detail = f"{len(failures)} failures, first: {failures[0]}"
    results.append(
        SuiteResult("round-trip", not failures, detail, time.perf_counter() - start)
    )

    # Suite 2: every codeword must have all-zero row and column sums.
    start = time.perf_counter()
    bad_sums = [
        t for t, X in enumerate(codewords) if not crisscross.check_zero_sums(X, q)
    ]
    results.append(
        SuiteResult(
            "zero-sums",
            not bad_sums,
            f"{len(codewords)} codewords"
            if not bad_sums
            else f"violated at trials {bad_sums[:5]} seed={seed}",
            time.perf_counter() - start,
        )
    )

    # Suite 3: the corner discriminator collected during suite 1.
    results.append(
        SuiteResult(
            "discriminator",
            not discriminator_bad,
            f"{trials * n * n} observations"
            if not discriminator_bad
            else f"{len(discriminator_bad)} bad, first: {discriminator_bad[0]}",
            0.0,
        )
    )

    if exhaustive_small:
        start = time.perf_counter()
        small_n, small_q = EXHAUSTIVE_SMALL
        words = _structural_codewords(small_n, small_q)
        overlaps = 0
        balls = [crisscross.deletion_ball(w) for w in words]
        for a in range(len(balls)):
            for b in range(a + 1, len(balls)):
                if balls[a] & balls[b]:
                    overlaps += 1
        results.append(
            SuiteResult(
                "exhaustive-small",
                overlaps == 0,
                f"{len(words)} codewords at n={small_n} q={small_q}, "
                f"{overlaps} overlapping ball pairs",
                time.perf_counter() - start,
            )
        )

    return SelfTestReport(n, q, seed, tuple(results))
