"""Integer partitions: conjugation, dominance, horizontal strips, counts.

Partitions are plain tuples of weakly decreasing positive integers, stored
without trailing zeros; missing parts are treated as 0.  All counts are
exact Python integers.
"""

from __future__ import annotations

from functools import cache
from math import factorial
from typing import Iterator, Sequence

Partition = tuple[int, ...]


def normalize(parts: Sequence[int]) -> Partition:
    """Canonical form: drop trailing zeros, validate weak decrease."""
    p = tuple(parts)
    while p and p[-1] == 0:
        p = p[:-1]
    for i in range(len(p) - 1):
        if p[i] < p[i + 1]:
            raise ValueError(f"not weakly decreasing: {parts!r}")
    if p and p[-1] < 0:
        raise ValueError(f"negative part in {parts!r}")
    return p


def size(lam: Sequence[int]) -> int:
    return sum(lam)


def length(lam: Sequence[int]) -> int:
    """Number of nonzero parts."""
    return len(normalize(lam))


def part(lam: Sequence[int], i: int) -> int:
    """i-th part (0-based), 0 beyond the stored length."""
    return lam[i] if i < len(lam) else 0


def conjugate(lam: Sequence[int]) -> Partition:
    lam = normalize(lam)
    if not lam:
        return ()
    return tuple(sum(1 for v in lam if v > i) for i in range(lam[0]))


def add(lam: Sequence[int], mu: Sequence[int]) -> Partition:
    """Componentwise sum; valid whenever both inputs are partitions."""
    k = max(len(lam), len(mu))
    return normalize(tuple(part(lam, i) + part(mu, i) for i in range(k)))


def scale(k: int, lam: Sequence[int]) -> Partition:
    if k <= 0:
        raise ValueError("scale factor must be positive")
    return normalize(tuple(k * v for v in lam))


def dominates(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """Partial-sum dominance; requires equal sizes."""
    lam, mu = normalize(lam), normalize(mu)
    if sum(lam) != sum(mu):
        raise ValueError(f"size mismatch: {lam} vs {mu}")
    acc = 0
    for i in range(max(len(lam), len(mu))):
        acc += part(lam, i) - part(mu, i)
        if acc < 0:
            return False
    return True


def pieri(lam: Sequence[int], b: int) -> tuple[Partition, ...]:
    """All mu >= lam with mu/lam a horizontal strip of b boxes.

    Returned in decreasing lexicographic order; pieri(lam, 0) == (lam,).
    """
    lam = normalize(lam)
    if b < 0:
        raise ValueError("strip size must be nonnegative")
    out: list[Partition] = []
    rows = len(lam) + 1

    def rec(i: int, remaining: int, built: list[int]) -> None:
        if i == rows:
            if remaining == 0:
                out.append(normalize(built))
            return
        lo = part(lam, i)
        hi = lo + remaining if i == 0 else min(lam[i - 1], lo + remaining)
        for v in range(hi, lo - 1, -1):
            built.append(v)
            rec(i + 1, remaining - (v - lo), built)
            built.pop()

    rec(0, b, [])
    return tuple(out)


def partitions_of(n: int, max_parts: int | None = None,
                  max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n, in decreasing lexicographic order."""
    if n < 0:
        return
    first = n if max_part is None else min(max_part, n)

    def rec(remaining: int, bound: int, slots: int | None, built: list[int]):
        if remaining == 0:
            yield tuple(built)
            return
        if slots is not None and slots == 0:
            return
        for v in range(min(bound, remaining), 0, -1):
            built.append(v)
            yield from rec(remaining - v, v,
                           None if slots is None else slots - 1, built)
            built.pop()

    yield from rec(n, first, max_parts, [])


@cache
def _count_with_max_part(n: int, k: int) -> int:
    """Partitions of n with every part <= k."""
    if n == 0:
        return 1
    if k <= 0:
        return 0
    return sum(_count_with_max_part(n - v, v) for v in range(min(k, n), 0, -1))


def count_partitions(n: int, max_parts: int | None = None) -> int:
    """Exact partition count, optionally with at most max_parts parts."""
    if n < 0:
        return 0
    if max_parts is None:
        return _count_with_max_part(n, n)
    # conjugation swaps "at most m parts" with "parts <= m"
    return _count_with_max_part(n, max_parts)


def sym_group_irrep_dim(mu: Sequence[int]) -> int:
    """Number of standard Young tableaux of shape mu (hook lengths)."""
    mu = normalize(mu)
    n = sum(mu)
    if n == 0:
        return 1
    conj = conjugate(mu)
    denom = 1
    for i, row in enumerate(mu):
        for j in range(row):
            denom *= row - j + conj[j] - i - 1
    return factorial(n) // denom


def gl_dimension(lam: Sequence[int], n: int) -> int:
    """Dimension of the irreducible GL_n representation of highest weight lam."""
    lam = normalize(lam)
    if len(lam) > n:
        return 0
    num = den = 1
    for i in range(n):
        for j in range(i + 1, n):
            num *= part(lam, i) - part(lam, j) + j - i
            den *= j - i
    return num // den
