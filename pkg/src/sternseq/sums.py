"""Partial sums of the Stern ratios t(n) = s(n)/s(n+1).

Rows sum exactly: the 2^r ratios of row r add to (3/2) 2^r - 1/2, and
the full prefix up to 2^r adds to (3/2) 2^r - (r+3)/2.  General prefix
sums are pinned between 3N/2 - (r^2 + 7r + 6)/4 and 3N/2 - 1/2 where
2^r <= N < 2^(r+1); the float path uses exact compensated summation so
its stated error bound is honest.  alpha_estimate generalises the mean
to the lag-t ratios s(n)/s(n+t); only t = 1 has a proven limit, so the
estimates are labeled empirical.
"""

import math
import sys
from dataclasses import dataclass
from fractions import Fraction

from .core import ResourceLimitError, stern_table

DEFAULT_EXACT_CAP = 1 << 20
_CHUNK = 1 << 16


@dataclass(frozen=True)
class SumReport:
    """Prefix-sum summary: exact value (when computed), compensated
    float value with its error bound, and the proven enclosure."""

    N: int
    exact_sum: Fraction | None
    float_sum: float
    float_error_bound: float
    lower: Fraction
    upper: Fraction


def row_sum(r: int) -> Fraction:
    """Sum of t(n) over row r (2^r <= n < 2^(r+1)): (3 * 2^r - 1) / 2."""
    if r < 0:
        raise ValueError("row exponent must be nonnegative")
    return Fraction(3 * (1 << r) - 1, 2)


def prefix_row_sum(r: int) -> Fraction:
    """Sum of t(n) over n < 2^r: (3 * 2^r - r - 3) / 2."""
    if r < 0:
        raise ValueError("row exponent must be nonnegative")
    return Fraction(3 * (1 << r) - r - 3, 2)


def theorem_bounds(N: int) -> tuple[Fraction, Fraction]:
    """Proven enclosure of the prefix sum over [0, N): lower bound
    3N/2 - (r^2 + 7r + 6)/4 (attained only asymptotically) and strict
    upper bound 3N/2 - 1/2, with 2^r <= N < 2^(r+1)."""
    if N < 1:
        raise ValueError("N must be positive")
    r = N.bit_length() - 1
    low = Fraction(3 * N, 2) - Fraction(r * r + 7 * r + 6, 4)
    high = Fraction(3 * N, 2) - Fraction(1, 2)
    return low, high


def _ratio_fsum(table, count, shift, threads=1):
    # deterministic for every thread count: fixed chunk boundaries,
    # exact fsum per chunk, exact fsum of the ordered chunk sums
    bounds = [(lo, min(lo + _CHUNK, count)) for lo in range(0, count, _CHUNK)]

    def one(b):
        lo, hi = b
        return math.fsum(table[n] / table[n + shift] for n in range(lo, hi))

    if threads > 1 and len(bounds) > 1:
        from concurrent.futures import ThreadPoolExecutor
        with ThreadPoolExecutor(max_workers=threads) as ex:
            sums = list(ex.map(one, bounds))
    else:
        sums = [one(b) for b in bounds]
    return math.fsum(sums)


def _pairwise_fraction_sum(terms) -> Fraction:
    # balanced merging keeps intermediate denominators small
    items = list(terms)
    if not items:
        return Fraction(0)
    while len(items) > 1:
        merged = [a + b for a, b in zip(items[0::2], items[1::2])]
        if len(items) % 2:
            merged.append(items[-1])
        items = merged
    return items[0]


def t_prefix_sum(N: int, mode: str = "exact",
                 exact_cap: int = DEFAULT_EXACT_CAP,
                 threads: int = 1) -> SumReport:
    """Sum of t(n) over n < N, exact and/or compensated float.

    mode "exact" computes the exact Fraction (subject to the cap) and
    the float alongside; mode "float" skips the exact value, so any N
    within table memory works.
    """
    if N < 1:
        raise ValueError("N must be positive")
    if mode not in ("exact", "float"):
        raise ValueError(f"unknown mode {mode!r}")
    if mode == "exact" and N > exact_cap:
        raise ResourceLimitError(
            f"exact sum of {N} terms exceeds cap {exact_cap}; "
            "use mode='float'")
    table = stern_table(N)
    float_sum = _ratio_fsum(table, N, 1, threads)
    bound = 2 * sys.float_info.epsilon * float_sum
    exact = None
    if mode == "exact":
        exact = _pairwise_fraction_sum(
            Fraction(table[n], table[n + 1]) for n in range(N))
    low, high = theorem_bounds(N)
    return SumReport(N, exact, float_sum, bound, low, high)


def alpha_estimate(t: int, N: int, threads: int = 1) -> float:
    """Empirical mean of s(n)/s(n+t) over n < N.

    Proven limit 3/2 for t = 1; other lags are conjectural, so treat
    the value as an experimental estimate.
    """
    if t < 1:
        raise ValueError("lag must be at least 1")
    if N < t:
        raise ValueError("need N >= t")
    table = stern_table(N - 1 + t)
    return _ratio_fsum(table, N, t, threads) / N
