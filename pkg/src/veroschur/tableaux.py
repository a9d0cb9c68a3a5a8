"""Semistandard Young tableaux, Kostka numbers, and row-content matrices.

A tableau of weight (d, ..., d) with p rows is encoded by the p x p
upper-triangular matrix t where t[i][j] counts the labels j+1 in row i+1;
the diagonal is forced by the weight and the off-diagonal entries are the
lattice coordinates used by the multiplicity cone.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from veroschur.partitions import Partition, normalize, part


def offdiag_pairs(p: int) -> tuple[tuple[int, int], ...]:
    """Row-major (i, j) with i < j; the shared coordinate order (0-based)."""
    return tuple((i, j) for i in range(p) for j in range(i + 1, p))


@dataclass(frozen=True)
class Tableau:
    """Semistandard tableau: rows weakly increase, columns strictly increase."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        shape = tuple(len(r) for r in self.rows)
        if any(shape[i] < shape[i + 1] for i in range(len(shape) - 1)):
            raise ValueError(f"row lengths not weakly decreasing: {shape}")
        for i, row in enumerate(self.rows):
            if any(row[j] > row[j + 1] for j in range(len(row) - 1)):
                raise ValueError(f"row {i} not weakly increasing: {row}")
            if any(v < 1 for v in row):
                raise ValueError("labels must be positive")
            if i > 0:
                above = self.rows[i - 1]
                if any(above[j] >= row[j] for j in range(len(row))):
                    raise ValueError(f"column not strictly increasing at row {i}")

    @property
    def shape(self) -> Partition:
        return normalize(tuple(len(r) for r in self.rows))

    def weight(self, labels: int | None = None) -> tuple[int, ...]:
        top = labels or max((v for r in self.rows for v in r), default=0)
        counts = [0] * top
        for row in self.rows:
            for v in row:
                counts[v - 1] += 1
        return tuple(counts)


@dataclass(frozen=True)
class RowContentMatrix:
    """Upper-triangular label counts t[i][j] at level d, with both
    tableau conditions enforced at construction."""

    p: int
    d: int
    t: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        p, t = self.p, self.t
        if len(t) != p or any(len(row) != p for row in t):
            raise ValueError("matrix must be p x p")
        for i in range(p):
            for j in range(i):
                if t[i][j] != 0:
                    raise ValueError(f"entry below diagonal at ({i},{j})")
        for j in range(p):
            col = sum(t[k][j] for k in range(j))
            if t[j][j] != self.d - col:
                raise ValueError(f"diagonal entry {j} inconsistent with level {self.d}")
            if t[j][j] < 0:
                raise ValueError(f"condition (1) fails at diagonal index {j}")
        for i in range(p - 1):
            for j in range(p):
                lhs = sum(t[i][k] for k in range(i, j))
                rhs = sum(t[i + 1][k] for k in range(i + 1, j + 1))
                if lhs < rhs:
                    raise ValueError(f"condition (2) fails at (i={i}, j={j})")

    @classmethod
    def from_offdiag(cls, p: int, d: int, values: Sequence[int]) -> "RowContentMatrix":
        """Build from the strictly-upper entries in offdiag_pairs order."""
        pairs = offdiag_pairs(p)
        if len(values) != len(pairs):
            raise ValueError(f"expected {len(pairs)} entries, got {len(values)}")
        t = [[0] * p for _ in range(p)]
        for (i, j), v in zip(pairs, values):
            t[i][j] = v
        for j in range(p):
            t[j][j] = d - sum(t[k][j] for k in range(j))
        return cls(p, d, tuple(tuple(row) for row in t))

    def offdiag(self) -> tuple[int, ...]:
        return tuple(self.t[i][j] for i, j in offdiag_pairs(self.p))

    def shape(self) -> Partition:
        return normalize(tuple(sum(self.t[i][i:]) for i in range(self.p)))


def horizontal_strips_down(lam: Sequence[int], k: int) -> Iterator[Partition]:
    """All nu <= lam with lam/nu a horizontal strip of k boxes."""
    lam = normalize(lam)
    if k < 0 or k > sum(lam):
        return

    def rec(i: int, remaining: int, built: list[int]):
        if i == len(lam):
            if remaining == 0:
                yield normalize(built)
            return
        lo = max(part(lam, i + 1), lam[i] - remaining)
        for v in range(lam[i], lo - 1, -1):
            built.append(v)
            yield from rec(i + 1, remaining - (lam[i] - v), built)
            built.pop()

    yield from rec(0, k, [])


_kostka_memo: dict[tuple[Partition, tuple[int, ...]], int] = {}


def _kostka(lam: Partition, mu: tuple[int, ...]) -> int:
    # sizes agree by construction; only shapes with <= len(mu) rows can occur
    if len(lam) > len(mu):
        return 0
    if not mu:
        return 1
    if len(mu) == 1:
        return 1
    if len(mu) == 2:
        # two labels: at most one filling, which exists iff the second row
        # fits under the 1s and the 2s fit after them
        return 1 if part(lam, 1) <= min(mu) else 0
    key = (lam, mu)
    hit = _kostka_memo.get(key)
    if hit is not None:
        return hit
    rest = mu[:-1]
    total = sum(_kostka(nu, rest) for nu in horizontal_strips_down(lam, mu[-1]))
    _kostka_memo[key] = total
    return total


def kostka(lam: Sequence[int], mu: Sequence[int]) -> int:
    """Number of semistandard tableaux of shape lam and weight mu.

    mu may be any composition of size(lam); trailing zeros are ignored.
    """
    lam = normalize(lam)
    mu = tuple(mu)
    if any(v < 0 for v in mu):
        raise ValueError("weight entries must be nonnegative")
    if sum(lam) != sum(mu):
        raise ValueError(f"size mismatch: |{lam}| != sum{mu}")
    while mu and mu[-1] == 0:
        mu = mu[:-1]
    if len(lam) > len(mu):
        return 0
    return _kostka(lam, mu)


def enumerate_ssyt(lam: Sequence[int], mu: Sequence[int]) -> Iterator[Tableau]:
    """All SSYT of shape lam and weight mu, each exactly once.

    Deterministic order: chains of intermediate shapes are explored with the
    label-k strip chosen in decreasing lexicographic shape order.
    """
    lam = normalize(lam)
    mu = tuple(mu)
    if sum(lam) != sum(mu):
        raise ValueError(f"size mismatch: |{lam}| != sum{mu}")

    def chains(shape: Partition, k: int) -> Iterator[tuple[Partition, ...]]:
        if k == 0:
            if not shape:
                yield ()
            return
        for nu in horizontal_strips_down(shape, mu[k - 1]):
            for chain in chains(nu, k - 1):
                yield chain + (shape,)

    for chain in chains(lam, len(mu)):
        full = ((),) + chain
        nrows = len(lam)
        rows: list[list[int]] = [[] for _ in range(nrows)]
        for label in range(1, len(mu) + 1):
            prev, cur = full[label - 1], full[label]
            for i in range(nrows):
                rows[i].extend([label] * (part(cur, i) - part(prev, i)))
        yield Tableau(tuple(tuple(r) for r in rows if r))


def tableau_to_matrix(tab: Tableau, p: int, d: int) -> RowContentMatrix:
    """Row-content encoding of a weight-(d^p) tableau with at most p rows."""
    if len(tab.rows) > p:
        raise ValueError(f"tableau has more than {p} rows")
    if tab.weight(p) != (d,) * p:
        raise ValueError(f"tableau weight is not ({d}^{p})")
    t = [[0] * p for _ in range(p)]
    for i, row in enumerate(tab.rows):
        for v in row:
            t[i][v - 1] += 1
    return RowContentMatrix(p, d, tuple(tuple(row) for row in t))


def matrix_to_tableau(m: RowContentMatrix) -> Tableau:
    """Inverse of tableau_to_matrix; validity is rechecked by Tableau."""
    rows = []
    for i in range(m.p):
        row: list[int] = []
        for j in range(i, m.p):
            row.extend([j + 1] * m.t[i][j])
        if row:
            rows.append(tuple(row))
    return Tableau(tuple(rows))
