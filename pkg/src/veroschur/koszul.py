"""Syzygy functors of Veronese embeddings via per-weight Koszul ranks.

The three-term complex for parameters (p, q, b, d) is

    wedge^{p+1} S^d (x) S^{(q-1)d+b}  ->  wedge^p S^d (x) S^{qd+b}
                                      ->  wedge^{p-1} S^d (x) S^{(q+1)d+b},

with the convention that a negative exterior or symmetric degree gives the
zero space.  The differential sends f_0 ^ ... ^ f_{k-1} (x) g to the
alternating sum of f_0 ^ ... f_i-hat ... (x) f_i g.  Everything is graded
by the torus, so cohomology is computed blockwise per dominant weight and
assembled into a character.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from veroschur.characters import (SchurExpansion, Weight, WeightTable,
                                  char_sym_sym, is_dominant, monomials,
                                  schur_decompose)
from veroschur.config import DEFAULT_CONFIG, RunConfig
from veroschur.intrank import SparseCol, rank_sparse
from veroschur.partitions import add

Element = tuple[tuple[Weight, ...], Weight]  # (wedge tuple, symmetric factor)


@dataclass(frozen=True)
class KoszulSpec:
    """Parameters of one syzygy computation over C^n.

    n defaults to p + q + 1, which is faithful for the untwisted (b = 0)
    decompositions; for b > 0 the result is the length <= n truncation.
    """

    p: int
    q: int
    b: int
    d: int
    n: int = 0

    def __post_init__(self) -> None:
        if self.p < 0 or self.q < 0 or self.b < 0:
            raise ValueError("p, q, b must be nonnegative")
        if self.d < 1:
            raise ValueError("d must be positive")
        if self.n == 0:
            object.__setattr__(self, "n", self.p + self.q + 1)
        if self.n < 1:
            raise ValueError("n must be positive")

    @property
    def total_degree(self) -> int:
        return (self.p + self.q) * self.d + self.b

    def term_parameters(self) -> tuple[tuple[int, int], tuple[int, int], tuple[int, int]]:
        """(wedge exponent, symmetric degree) for left, middle, right."""
        return ((self.p + 1, (self.q - 1) * self.d + self.b),
                (self.p, self.q * self.d + self.b),
                (self.p - 1, (self.q + 1) * self.d + self.b))

    def is_faithful(self) -> bool:
        # untwisted first-strand types have length <= p+1 (middle-term Pieri)
        if self.b != 0:
            return False
        if self.q == 1:
            return self.n >= self.p + 1
        return self.n >= self.p + self.q + 1


@dataclass(frozen=True)
class SparseIntMatrix:
    """Columns as {row: value}; shapes explicit so zero blocks are typed."""

    nrows: int
    ncols: int
    cols: tuple[SparseCol, ...]

    def rank(self) -> int:
        return rank_sparse([dict(c) for c in self.cols])

    def compose(self, inner: "SparseIntMatrix") -> "SparseIntMatrix":
        """self @ inner (apply inner first)."""
        if inner.nrows != self.ncols:
            raise ValueError("shape mismatch")
        out = []
        for col in inner.cols:
            acc: SparseCol = {}
            for mid, v in col.items():
                for r, w in self.cols[mid].items():
                    nv = acc.get(r, 0) + v * w
                    if nv:
                        acc[r] = nv
                    else:
                        acc.pop(r, None)
            out.append(acc)
        return SparseIntMatrix(self.nrows, inner.ncols, tuple(out))

    def is_zero(self) -> bool:
        return all(not c for c in self.cols)

    def dense(self) -> list[list[int]]:
        m = [[0] * self.ncols for _ in range(self.nrows)]
        for j, col in enumerate(self.cols):
            for i, v in col.items():
                m[i][j] = v
        return m


@dataclass
class KoszulBlock:
    """One dominant weight block of the complex."""

    weight: Weight
    dims: tuple[int, int, int]
    d_in: SparseIntMatrix
    d_out: SparseIntMatrix

    def cohomology_dim(self) -> int:
        dim = self.dims[1] - self.d_in.rank() - self.d_out.rank()
        if dim < 0:
            raise RuntimeError(f"negative cohomology at weight {self.weight}")
        return dim


def _term_elements_by_weight(k: int, e: int, d: int, n: int,
                             config: RunConfig) -> dict[Weight, list[Element]]:
    """Basis of wedge^k S^d (x) S^e bucketed by dominant weight."""
    out: dict[Weight, list[Element]] = {}
    if k < 0 or e < 0:
        return out
    monos = monomials(d, n)
    if k > len(monos):
        return out
    symb = monomials(e, n)
    count = 0
    for wedge in combinations(monos, k):
        base = (0,) * n
        for m in wedge:
            base = tuple(x + y for x, y in zip(base, m))
        for g in symb:
            w = tuple(x + y for x, y in zip(base, g))
            if is_dominant(w):
                out.setdefault(w, []).append((wedge, g))
                count += 1
                if count % 4096 == 0:
                    config.check_table(count)
    config.check_table(count)
    return out


def _elements_at_weight(k: int, e: int, d: int, n: int,
                        target: Weight) -> list[Element]:
    """Basis elements of one (possibly non-dominant) weight."""
    out: list[Element] = []
    if k < 0 or e < 0:
        return out
    monos = monomials(d, n)
    if k > len(monos):
        return out
    for wedge in combinations(monos, k):
        g = list(target)
        ok = True
        for m in wedge:
            for i, v in enumerate(m):
                g[i] -= v
        if any(v < 0 for v in g) or sum(g) != e:
            ok = False
        if ok:
            out.append((wedge, tuple(g)))
    return out


def _differential(sources: list[Element], targets: list[Element],
                  config: RunConfig) -> SparseIntMatrix:
    """Matrix of the Koszul differential from sources to targets."""
    config.check_matrix(max(len(sources), len(targets), 1))
    index = {el: i for i, el in enumerate(targets)}
    cols = []
    for wedge, g in sources:
        col: SparseCol = {}
        for i, f in enumerate(wedge):
            rest = wedge[:i] + wedge[i + 1:]
            prod = tuple(x + y for x, y in zip(f, g))
            row = index.get((rest, prod))
            if row is not None:
                col[row] = 1 if i % 2 == 0 else -1
        cols.append(col)
    return SparseIntMatrix(len(targets), len(sources), tuple(cols))


def block_at_weight(spec: KoszulSpec, weight: Weight,
                    config: RunConfig = DEFAULT_CONFIG) -> KoszulBlock:
    """Single block of the complex at an arbitrary weight vector."""
    (kl, el), (km, em), (kr, er) = spec.term_parameters()
    left = _elements_at_weight(kl, el, spec.d, spec.n, weight)
    mid = _elements_at_weight(km, em, spec.d, spec.n, weight)
    right = _elements_at_weight(kr, er, spec.d, spec.n, weight)
    return KoszulBlock(weight, (len(left), len(mid), len(right)),
                       _differential(left, mid, config),
                       _differential(mid, right, config))


def build_blocks(spec: KoszulSpec,
                 config: RunConfig = DEFAULT_CONFIG) -> Iterator[KoszulBlock]:
    """One block per dominant weight of the middle term, decreasing lex."""
    (kl, el), (km, em), (kr, er) = spec.term_parameters()
    mid = _term_elements_by_weight(km, em, spec.d, spec.n, config)
    left = _term_elements_by_weight(kl, el, spec.d, spec.n, config)
    right = _term_elements_by_weight(kr, er, spec.d, spec.n, config)
    for w in sorted(mid, reverse=True):
        lw = left.get(w, [])
        mw = mid[w]
        rw = right.get(w, [])
        yield KoszulBlock(w, (len(lw), len(mw), len(rw)),
                          _differential(lw, mw, config),
                          _differential(mw, rw, config))


def cohomology_table(spec: KoszulSpec,
                     config: RunConfig = DEFAULT_CONFIG) -> WeightTable:
    """Character of the middle cohomology on dominant weights."""
    blocks = build_blocks(spec, config)
    if config.threads > 1:
        with ThreadPoolExecutor(max_workers=config.threads) as pool:
            results = list(pool.map(lambda bl: (bl.weight, bl.cohomology_dim()),
                                    blocks))
    else:
        results = [(bl.weight, bl.cohomology_dim()) for bl in blocks]
    entries = {w: c for w, c in results if c}
    return WeightTable(spec.n, spec.total_degree, entries)


def syzygy_decompose(spec: KoszulSpec,
                     config: RunConfig = DEFAULT_CONFIG) -> SchurExpansion:
    """Schur decomposition of the middle Koszul cohomology for spec."""
    return schur_decompose(cohomology_table(spec, config))


def green_vanishing_predicted(p: int, q: int, b: int, d: int) -> bool:
    """Classical vanishing for the untwisted case: true when q >= 2, d >= p."""
    if b != 0:
        raise ValueError("untwisted predicate requires b = 0; "
                         "see green_vanishing_predicted_twisted")
    return q >= 2 and d >= p


def green_vanishing_predicted_twisted(p: int, q: int, b: int, d: int) -> bool:
    """Conservative twisted variant: q >= 2 and d >= p + b.

    For b = 0 this agrees with green_vanishing_predicted; for b > 0 no
    sharp bound is asserted, only this sufficient one.
    """
    return q >= 2 and d >= p + b


def raicu_predicted_kp0(p: int, d: int, n: int,
                        config: RunConfig = DEFAULT_CONFIG) -> SchurExpansion:
    """Predicted decomposition of the (p+1)-st linear-strand kernel with
    twist 1: the decomposition of Sym^{p+1} Sym^{d-1} with every term
    shifted by a full column (1^{p+2})."""
    if n < p + 2:
        raise ValueError(f"need n >= {p + 2} to hold the shifted terms")
    if d < 2:
        raise ValueError("need d >= 2")
    base = schur_decompose(char_sym_sym(p + 1, d - 1, n, config))
    column = (1,) * (p + 2)
    shifted = {add(lam, column): c for lam, c in base.terms.items()}
    return SchurExpansion(n, (p + 1) * d + 1, shifted)
