"""Core sequence: bit scan, doubling table, diatomic rows, block splits."""
import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from oracles import insertion_row, naive_stern
from sternseq import (ResourceLimitError, SternPair, block_decompose,
                      diatomic_row, stern, stern_block, stern_pair,
                      stern_ratio, stern_table)

# first seventeen values, computable by hand from the recurrence
PREFIX = [0, 1, 1, 2, 1, 3, 2, 3, 1, 4, 3, 5, 2, 5, 3, 4, 1]


def test_small_values_by_hand():
    assert [stern(n) for n in range(17)] == PREFIX
    assert stern(11) == 5


def test_rejects_negative_index():
    with pytest.raises(ValueError):
        stern(-1)


@given(st.integers(min_value=0, max_value=1 << 40))
def test_bit_scan_agrees_with_recurrence(n):
    assert stern(n) == naive_stern(n)


@given(st.integers(min_value=0, max_value=1 << 40))
def test_pair_is_consecutive_values(n):
    p = stern_pair(n)
    assert isinstance(p, SternPair)
    assert (p.left, p.right) == (stern(n), stern(n + 1))


@given(st.integers(min_value=0, max_value=1 << 40))
def test_consecutive_values_coprime(n):
    assert math.gcd(*stern_pair(n)) == 1


def test_table_matches_pointwise(table16):
    idx = list(range(200)) + [4095, 10000, 65535, 65536]
    assert all(table16[n] == stern(n) for n in idx)
    assert len(table16) == (1 << 16) + 1


def test_table_mod_matches_plain(table16):
    for d in (2, 3, 7, 12):
        tm = stern_table(4096, mod=d)
        assert tm == [v % d for v in table16[:4097]]


def test_mirror_symmetry_within_rows(table16):
    for r in range(1, 16):
        for k in range(0, (1 << r) + 1, max(1, (1 << r) // 64)):
            assert table16[(1 << r) + k] == table16[(1 << (r + 1)) - k]


def test_ratio_recurrences():
    for n in range(1, 1 << 10):
        t = stern_ratio(n)
        assert stern_ratio(2 * n) == 1 / (1 + 1 / t)
        assert stern_ratio(2 * n + 1) == 1 + t


def test_ratio_at_zero_is_zero():
    assert stern_ratio(0) == Fraction(0)


def test_row_against_insertion_rule():
    for r in range(8):
        for a, b in ((0, 1), (1, 1), (2, 5)):
            assert diatomic_row(r, a, b) == insertion_row(r, a, b)


def test_row_entries_closed_form(table16):
    r = 9
    row = diatomic_row(r, 3, 4)
    for k in range(0, (1 << r) + 1):
        assert row[k] == table16[(1 << r) - k] * 3 + table16[k] * 4


def test_row_golden():
    assert diatomic_row(3, 0, 1) == [0, 1, 1, 2, 1, 3, 2, 3, 1]
    assert len(diatomic_row(10, 0, 1)) == (1 << 10) + 1


def test_row_cap():
    with pytest.raises(ResourceLimitError):
        diatomic_row(25, 0, 1)
    with pytest.raises(ResourceLimitError):
        diatomic_row(12, 0, 1, max_entries=1 << 10)
    assert diatomic_row(12, 0, 1, max_entries=(1 << 12) + 1)


@given(st.integers(min_value=0, max_value=12),
       st.integers(min_value=0, max_value=1 << 10),
       st.integers(min_value=0, max_value=1 << 12))
def test_block_entry_identity(r, n, k):
    k = k % (1 << r) if r else 0
    assert stern_block(r, n, k) == stern((n << r) + k)


@given(st.integers(min_value=1, max_value=1 << 48))
def test_block_decompose_tiles_the_prefix(N):
    blocks = block_decompose(N)
    edges = []
    for r, m in blocks:
        assert m % 2 == 0
        edges.append((m << r, (m + 1) << r))
    edges.sort()
    assert edges[0][0] == 0 and edges[-1][1] == N
    assert all(edges[i][1] == edges[i + 1][0] for i in range(len(edges) - 1))


def test_block_decompose_known_splits():
    assert block_decompose(13) == [(3, 0), (2, 2), (0, 12)]
    assert block_decompose(7) == [(2, 0), (1, 2), (0, 6)]
    assert block_decompose(1 << 10) == [(10, 0)]


def test_block_decompose_rejects_nonpositive():
    for bad in (0, -3):
        with pytest.raises(ValueError):
            block_decompose(bad)
