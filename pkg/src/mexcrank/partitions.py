"""Integer partitions and their statistics.

Partitions are immutable value objects.  Everything here is exact: the
partition counting functions run on Python's arbitrary-precision integers,
and the statistics (mex, crank, Durfee square, Frobenius symbol) are computed
combinatorially, with no generating-function shortcuts.  The series and
closed-form counterparts live in :mod:`mexcrank.qseries` and
:mod:`mexcrank.counting`; keeping them out of this module is what makes the
cross-checks in :mod:`mexcrank.verify` meaningful.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator


class UndefinedMexError(ValueError):
    """Raised by :func:`mex_above` when j > 0 is not a part of the partition."""


class MalformedSymbolError(ValueError):
    """Raised when two rows do not form a valid Frobenius symbol."""


@dataclass(frozen=True, slots=True)
class Partition:
    """A partition: positive parts in nonincreasing order.

    ``Partition((3, 1))`` is the partition 3+1 of weight 4; ``Partition()``
    is the empty partition of 0.  The constructor validates ordering and
    positivity; use :meth:`of` to build from parts in any order.
    """

    parts: tuple[int, ...] = ()
    weight: int = field(init=False)

    def __post_init__(self) -> None:
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        prev = None
        for p in parts:
            if p < 1:
                raise ValueError(f"parts must be positive, got {p}")
            if prev is not None and p > prev:
                raise ValueError(f"parts must be nonincreasing, got {parts}")
            prev = p
        object.__setattr__(self, "weight", sum(parts))

    @classmethod
    def of(cls, *parts: int) -> Partition:
        """Build a partition from parts given in any order."""
        return cls(tuple(sorted(parts, reverse=True)))

    def __len__(self) -> int:
        return len(self.parts)

    def __repr__(self) -> str:
        return f"Partition({self.parts!r})"


@dataclass(frozen=True, slots=True)
class FrobeniusSymbol:
    """Two-row partition notation: equal-length, strictly decreasing rows.

    Entries are nonnegative; a symbol with rows of length d represents a
    partition of ``d + sum(top) + sum(bottom)``.  The empty symbol represents
    the empty partition.
    """

    top: tuple[int, ...] = ()
    bottom: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        top = tuple(self.top)
        bottom = tuple(self.bottom)
        object.__setattr__(self, "top", top)
        object.__setattr__(self, "bottom", bottom)
        if len(top) != len(bottom):
            raise MalformedSymbolError(
                f"rows must have equal length, got {len(top)} and {len(bottom)}"
            )
        for row in (top, bottom):
            for a, b in zip(row, row[1:]):
                if a <= b:
                    raise MalformedSymbolError(f"rows must strictly decrease, got {row}")
            if row and row[-1] < 0:
                raise MalformedSymbolError(f"entries must be nonnegative, got {row}")

    @property
    def size(self) -> int:
        """Row length; equals the Durfee square side of the partition."""
        return len(self.top)

    @property
    def weight(self) -> int:
        """Weight of the represented partition."""
        return self.size + sum(self.top) + sum(self.bottom)


def enumerate_partitions(n: int) -> Iterator[Partition]:
    """Yield every partition of n exactly once, in reverse lexicographic order.

    The order is by parts sequence, largest first part first; for n=4 this is
    (4), (3,1), (2,2), (2,1,1), (1,1,1,1).  n=0 yields only the empty
    partition.  The order is deterministic and relied on by the report
    writers, so it must not change.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    for parts in _part_tuples(n, n):
        yield Partition(parts)


def _part_tuples(remaining: int, max_part: int) -> Iterator[tuple[int, ...]]:
    if remaining == 0:
        yield ()
        return
    for first in range(min(remaining, max_part), 0, -1):
        for rest in _part_tuples(remaining - first, first):
            yield (first,) + rest


# Partition numbers by Euler's pentagonal recurrence:
#   p(n) = sum_{k>=1} (-1)^(k+1) [ p(n - k(3k-1)/2) + p(n - k(3k+1)/2) ].
# The shared table only grows and is only appended to under the GIL, so
# concurrent reads are safe once a build call has returned; writers must not
# race with each other (the CLI and harness build single-threaded).
_PARTITION_TABLE: list[int] = [1]


def partition_count_table(limit: int) -> list[int]:
    """Fresh list of p(0..limit) computed by the pentagonal recurrence.

    Does not touch the shared cache; used where a cold, self-contained
    computation is wanted (timing, cross-checks).
    """
    table = [1]
    _extend_by_recurrence(table, limit)
    return table


def partition_count(n: int) -> int:
    """p(n), the number of partitions of n.  Zero for negative n."""
    if n < 0:
        return 0
    if n >= len(_PARTITION_TABLE):
        _extend_by_recurrence(_PARTITION_TABLE, n)
    return _PARTITION_TABLE[n]


def _extend_by_recurrence(table: list[int], limit: int) -> None:
    if limit < len(table):
        return
    pents: list[tuple[int, int]] = []  # (generalized pentagonal number, sign)
    k = 1
    while True:
        g = k * (3 * k - 1) // 2
        if g > limit:
            break
        sign = 1 if k % 2 else -1
        pents.append((g, sign))
        if g + k <= limit:
            pents.append((g + k, sign))
        k += 1
    for i in range(len(table), limit + 1):
        acc = 0
        for g, sign in pents:
            if g > i:
                break
            if sign > 0:
                acc += table[i - g]
            else:
                acc -= table[i - g]
        table.append(acc)


_DISTINCT_TABLE: list[int] = [1]


def distinct_parts_count(n: int) -> int:
    """q(n), the number of partitions of n into distinct parts.  Zero for n<0."""
    if n < 0:
        return 0
    if n >= len(_DISTINCT_TABLE):
        _rebuild_distinct_table(max(n, 2 * len(_DISTINCT_TABLE)))
    return _DISTINCT_TABLE[n]


def _rebuild_distinct_table(limit: int) -> None:
    # Product of (1 + q^k): descending update keeps each factor's reads
    # ahead of its writes.
    table = [1] + [0] * limit
    for k in range(1, limit + 1):
        for i in range(limit, k - 1, -1):
            table[i] += table[i - k]
    _DISTINCT_TABLE[:] = table


def mex(partition: Partition) -> int:
    """Smallest positive integer that is not a part.

    >>> mex(Partition((3, 2)))
    1
    >>> mex(Partition((2, 2, 1)))
    3
    """
    present = set(partition.parts)
    m = 1
    while m in present:
        m += 1
    return m


def mex_above(partition: Partition, j: int) -> int:
    """Least integer greater than j that is not a part.

    Defined when j = 0 (where it reduces to :func:`mex`, treating 0 as a
    part of every partition) or when j is itself a part; otherwise raises
    :class:`UndefinedMexError`.
    """
    if j < 0:
        raise ValueError(f"j must be nonnegative, got {j}")
    present = set(partition.parts)
    if j != 0 and j not in present:
        raise UndefinedMexError(f"{j} is not a part of {partition.parts}")
    m = j + 1
    while m in present:
        m += 1
    return m


def crank(partition: Partition) -> int:
    """The Andrews-Garvan crank.

    Largest part if there are no 1s; otherwise (number of parts larger than
    the number of 1s) minus (number of 1s).  The empty partition has crank 0,
    which matches the generating-function count at n=0.
    """
    parts = partition.parts
    if not parts:
        return 0
    ones = 0
    for p in reversed(parts):
        if p != 1:
            break
        ones += 1
    if ones == 0:
        return parts[0]
    larger = sum(1 for p in parts if p > ones)
    return larger - ones


def conjugate(partition: Partition) -> Partition:
    """Transpose of the Young diagram; an involution."""
    parts = partition.parts
    if not parts:
        return Partition()
    conj = []
    count = len(parts)
    for height in range(1, parts[0] + 1):
        while parts[count - 1] < height:
            count -= 1
        conj.append(count)
    return Partition(tuple(conj))


def durfee_size(partition: Partition) -> int:
    """Side of the Durfee square: the largest d with d-th part >= d."""
    d = 0
    for i, p in enumerate(partition.parts, start=1):
        if p < i:
            break
        d = i
    return d


def to_frobenius(partition: Partition) -> FrobeniusSymbol:
    """Frobenius symbol of a partition.

    With Durfee square side d, row i of the top is (part i) - i and of the
    bottom is (conjugate part i) - i, for i = 1..d.
    """
    d = durfee_size(partition)
    if d == 0:
        return FrobeniusSymbol()
    parts = partition.parts
    conj = conjugate(partition).parts
    top = tuple(parts[i] - i - 1 for i in range(d))
    bottom = tuple(conj[i] - i - 1 for i in range(d))
    return FrobeniusSymbol(top, bottom)


def from_frobenius(symbol: FrobeniusSymbol) -> Partition:
    """The unique partition with the given Frobenius symbol.

    Inverse of :func:`to_frobenius`; raises :class:`MalformedSymbolError`
    for rows that are not equal-length and strictly decreasing (enforced by
    the symbol type itself).
    """
    d = symbol.size
    if d == 0:
        return Partition()
    rows = [symbol.top[i] + i + 1 for i in range(d)]
    # Column heights of the first d columns; rows below the Durfee square
    # are read off as the number of columns still reaching that depth.
    heights = [symbol.bottom[i] + i + 1 for i in range(d)]
    tail = []
    reach = d
    for depth in range(d + 1, heights[0] + 1):
        while heights[reach - 1] < depth:
            reach -= 1
        tail.append(reach)
    return Partition(tuple(rows + tail))
