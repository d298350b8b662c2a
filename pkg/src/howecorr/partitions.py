"""Integer partitions, bipartitions and strip combinatorics.

Partitions are value-semantic: a :class:`Partition` is an immutable tuple of
weakly decreasing positive integers, equal to any other sequence with the
same entries.  Bipartitions are ordered pairs of partitions; they index both
the irreducible characters of the hyperoctahedral group W_n (with
``|alpha| + |beta| = n``) and its conjugacy classes (positive and negative
cycle type).

Enumeration orders are fixed once and used everywhere:

* partitions of n in decreasing lexicographic order, ``(n)`` first and
  ``(1, ..., 1)`` last;
* bipartitions of n by ``|alpha|`` descending, then each component in the
  partition order above.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Trailing zeros are trimmed on construction, anything else that is not
    weakly decreasing and positive is rejected.

    >>> Partition([3, 1, 0])
    (3, 1)
    >>> Partition([1, 2])
    Traceback (most recent call last):
        ...
    ValueError: parts must be weakly decreasing: (1, 2)
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for i, p in enumerate(parts):
            if p <= 0:
                raise ValueError(f"parts must be positive: {parts}")
            if i and parts[i - 1] < p:
                raise ValueError(f"parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    def part(self, i: int) -> int:
        """The i-th part (0-based), zero past the end."""
        return self[i] if i < len(self) else 0

    def conjugate(self) -> "Partition":
        """Transpose of the Young diagram.

        >>> Partition([3, 1]).conjugate()
        (2, 1, 1)
        """
        if not self:
            return self
        cols = [0] * self[0]
        for p in self:
            for j in range(p):
                cols[j] += 1
        return Partition(cols)

    def contains(self, other: "Partition") -> bool:
        """Containment of Young diagrams: every row of ``other`` fits."""
        other = Partition(other)
        return len(other) <= len(self) and all(
            self[i] >= other[i] for i in range(len(other))
        )


class Bipartition(NamedTuple):
    """An ordered pair of partitions."""

    alpha: Partition
    beta: Partition

    @property
    def size(self) -> int:
        return self.alpha.size + self.beta.size


def bipartition(alpha: Iterable[int], beta: Iterable[int]) -> Bipartition:
    """Coerce two part sequences into a :class:`Bipartition`."""
    return Bipartition(Partition(alpha), Partition(beta))


def conjugate(p: Iterable[int]) -> Partition:
    """Transpose of the Young diagram, as a free function."""
    return Partition(p).conjugate()


def _gen_partitions(n: int, max_part: int) -> Iterator[tuple]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in _gen_partitions(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _partitions_of(n: int) -> tuple:
    return tuple(Partition(p) for p in _gen_partitions(n, n))


def partitions_of(n: int) -> list:
    """All partitions of n, decreasing lexicographic.

    >>> partitions_of(3)
    [(3,), (2, 1), (1, 1, 1)]
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    return list(_partitions_of(n))


@lru_cache(maxsize=None)
def _bipartitions_of(n: int) -> tuple:
    out = []
    for a in range(n, -1, -1):
        for alpha in _partitions_of(a):
            for beta in _partitions_of(n - a):
                out.append(Bipartition(alpha, beta))
    return tuple(out)


def bipartitions_of(n: int) -> list:
    """All bipartitions of total size n in the canonical order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return list(_bipartitions_of(n))


def horizontal_strip_additions(p: Iterable[int], size: int) -> list:
    """All partitions obtained from ``p`` by adding a horizontal strip.

    A horizontal strip places ``size`` new cells with no two in the same
    column; equivalently the result interleaves with ``p``.  Output is in
    decreasing lexicographic order and duplicate-free.

    >>> horizontal_strip_additions((2, 1), 2)
    [(4, 1), (3, 2), (3, 1, 1), (2, 2, 1)]
    """
    p = Partition(p)
    if size < 0:
        raise ValueError("strip size must be nonnegative")
    rows = len(p) + 1
    results = []

    def extend(i, remaining, prev, acc):
        if i == rows:
            if remaining == 0:
                results.append(Partition(acc))
            return
        base = p.part(i)
        hi = min(base + remaining, prev)
        if i >= 1:
            # no two strip cells share a column: row i may not pass row i-1 of p
            hi = min(hi, p.part(i - 1))
        for val in range(hi, base - 1, -1):
            extend(i + 1, remaining - (val - base), val, acc + [val])

    extend(0, size, p.part(0) + size, [])
    return results


def vertical_strip_additions(p: Iterable[int], size: int) -> list:
    """All partitions obtained from ``p`` by adding a vertical strip
    (no two new cells in the same row, so each row grows by at most one).

    Conjugate-dual to :func:`horizontal_strip_additions`.

    >>> vertical_strip_additions((2,), 2)
    [(3, 1), (2, 1, 1)]
    """
    p = Partition(p)
    if size < 0:
        raise ValueError("strip size must be nonnegative")
    rows = len(p) + size
    results = []

    def extend(i, remaining, prev, acc):
        if remaining > rows - i:
            return
        if i == rows:
            if remaining == 0:
                results.append(Partition(acc))
            return
        base = p.part(i)
        hi = min(base + 1, prev, base + remaining)
        for val in range(hi, base - 1, -1):
            extend(i + 1, remaining - (val - base), val, acc + [val])

    extend(0, size, p.part(0) + 1, [])
    return results


def dominance_leq(a: Iterable[int], b: Iterable[int]) -> bool:
    """Dominance order on partitions of equal size: every prefix sum of
    ``a`` is at most the corresponding prefix sum of ``b``."""
    a, b = Partition(a), Partition(b)
    if a.size != b.size:
        raise ValueError(f"dominance needs equal sizes: {a.size} != {b.size}")
    ta = tb = 0
    for i in range(max(len(a), len(b))):
        ta += a.part(i)
        tb += b.part(i)
        if ta > tb:
            return False
    return True


def bipartition_dominance_leq(x: Bipartition, y: Bipartition) -> bool:
    """Dominance on bipartitions of equal total size, computed on the
    zero-padded concatenation (alpha then beta).

    This is a genuine partial order; incomparable pairs stay incomparable,
    there is no lexicographic tie-break.
    """
    if x.size != y.size:
        raise ValueError(f"dominance needs equal sizes: {x.size} != {y.size}")
    n = x.size
    tx = ty = 0
    for i in range(n):
        tx += x.alpha[i] if i < len(x.alpha) else 0
        ty += y.alpha[i] if i < len(y.alpha) else 0
        if tx > ty:
            return False
    for i in range(n):
        tx += x.beta[i] if i < len(x.beta) else 0
        ty += y.beta[i] if i < len(y.beta) else 0
        if tx > ty:
            return False
    return True


def swap_components(bp: Bipartition) -> Bipartition:
    """(alpha, beta) -> (beta, alpha)."""
    return Bipartition(Partition(bp.beta), Partition(bp.alpha))


def swap_conjugate(bp: Bipartition) -> Bipartition:
    """(alpha, beta) -> (beta', alpha')."""
    return Bipartition(Partition(bp.beta).conjugate(), Partition(bp.alpha).conjugate())
