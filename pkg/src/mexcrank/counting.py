"""Closed-form partition-statistic counts from finite p(n) combinations.

Everything here reduces to finitely many exact evaluations of the partition
function, so each routine is a direct transcription of a classical formula
rather than an enumeration.  These are the "fast sides" that the verifier in
:mod:`mexcrank.verify` plays against brute-force counts.

All sums over an auxiliary index k stop at the first term whose p-argument
goes negative; since the subtracted offsets grow at least linearly in k,
every sum is finite.
"""

from __future__ import annotations

import math
from typing import Iterator, NamedTuple

from .partitions import partition_count


class TriangularIndex(NamedTuple):
    """A triangular number t = k(k+1)/2 together with its index k."""

    k: int
    value: int


def triangulars(bound: int) -> Iterator[TriangularIndex]:
    """Yield TriangularIndex(k, k(k+1)/2) for all k >= 0 with value <= bound."""
    k = 0
    t = 0
    while t <= bound:
        yield TriangularIndex(k, t)
        k += 1
        t += k


def triangular(k: int) -> int:
    """The k-th triangular number k(k+1)/2."""
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    return k * (k + 1) // 2


def crank_count(m: int, n: int) -> int:
    """M(m,n), the generating-function count of partitions of n with crank m.

    Alternating sum of p-differences:
    sum_{k>=1} (-1)^(k+1) [p(n - k(k+2|m|-1)/2) - p(n - k(k+2|m|+1)/2)].
    Agrees with the combinatorial crank for all n except n = 1, where the
    series assigns M(0,1) = -1 and M(1,1) = M(-1,1) = 1.
    """
    if n < 0:
        return 0
    m = abs(m)
    total = 0
    k = 1
    while True:
        lo = k * (k + 2 * m - 1) // 2
        if lo > n:
            break
        hi = lo + k  # k(k + 2m + 1)/2
        term = partition_count(n - lo) - partition_count(n - hi)
        total += term if k % 2 else -term
        k += 1
    return total


def crank_geq_count(j: int, n: int) -> int:
    """Generating-function count of partitions of n with crank >= j, j >= 0.

    sum_{k>=1} (-1)^(k+1) p(n - k(k-1)/2 - kj).  Matches the combinatorial
    count except at n = 1 with j in {0, 1}, inheriting the crank anomaly.
    """
    if j < 0:
        raise ValueError(f"j must be nonnegative, got {j}")
    if n < 0:
        return 0
    total = 0
    k = 1
    while True:
        offset = k * (k - 1) // 2 + k * j
        if offset > n:
            break
        term = partition_count(n - offset)
        total += term if k % 2 else -term
        k += 1
    return total


def mex_count(m: int, n: int) -> int:
    """Number of partitions of n with mex exactly m, for m >= 1.

    p(n - t_(m-1)) - p(n - t_m) with t the triangular numbers: a partition
    has mex >= m exactly when it contains 1..m-1, and removing one copy of
    each is a weight-preserving bijection onto partitions of n - t_(m-1).
    """
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    return partition_count(n - triangular(m - 1)) - partition_count(n - triangular(m))


def odd_mex_count(n: int) -> int:
    """Partitions of n whose mex is odd."""
    return _mex_residue_count(n, (1,), 2)


def even_mex_count(n: int) -> int:
    """Partitions of n whose mex is even."""
    return _mex_residue_count(n, (0,), 2)


def mex_1mod4_count(n: int) -> int:
    """Partitions of n whose mex is congruent to 1 mod 4."""
    return _mex_residue_count(n, (1,), 4)


def mex_3mod4_count(n: int) -> int:
    """Partitions of n whose mex is congruent to 3 mod 4."""
    return _mex_residue_count(n, (3,), 4)


def _mex_residue_count(n: int, residues: tuple[int, ...], modulus: int) -> int:
    if n < 0:
        return 0
    total = 0
    m = 1
    while triangular(m - 1) <= n:
        if m % modulus in residues:
            total += mex_count(m, n)
        m += 1
    return total


def crank_zero_expansion(n: int) -> int:
    """M(0,n) as p(n) + 2 sum_{k>=1} (-1)^k p(n - k(k+1)/2)."""
    if n < 0:
        return 0
    total = partition_count(n)
    for k, t in triangulars(n):
        if k == 0:
            continue
        term = 2 * partition_count(n - t)
        total += -term if k % 2 else term
    return total


def ewell_even_sum(k: int) -> int:
    """Ewell's even-index sum: sum_j (-1)^(t_j) p(2k - t_j), equal to q(k).

    The sign is -1 exactly when the triangular number t_j is odd, i.e. when
    j is congruent to 1 or 2 mod 4.
    """
    return _ewell_sum(2 * k)


def ewell_odd_sum(k: int) -> int:
    """Ewell's odd-index sum: sum_j (-1)^(t_j) p(2k + 1 - t_j), equal to 0."""
    return _ewell_sum(2 * k + 1)


def _ewell_sum(n: int) -> int:
    if n < 0:
        return 0
    total = 0
    for _, t in triangulars(n):
        term = partition_count(n - t)
        total += -term if t % 2 else term
    return total


def is_double_pentagonal(n: int) -> bool:
    """Whether n = j(3j +- 1) for some j >= 0 (twice a pentagonal number).

    These are exactly the n at which the count of odd-mex partitions of n
    has the opposite parity from p(n).  Solves the quadratic exactly with
    integer square roots; no floating point.
    """
    if n < 0:
        return False
    d = 12 * n + 1
    s = math.isqrt(d)
    if s * s != d:
        return False
    # n = j(3j+1) gives s = 6j+1; n = j(3j-1) gives s = 6j-1.
    return s % 6 in (1, 5)
