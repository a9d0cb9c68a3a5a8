"""Exact integer matrix rank via fraction-free elimination.

Two routines: a dense Bareiss elimination (entries stay minors of the
input, division by the previous pivot is exact) and a sparse column
elimination using exact cross-multiplication with gcd reduction.  Both are
unconditional; the sparse one is the production path for Koszul blocks.
"""

from __future__ import annotations

from math import gcd

SparseCol = dict[int, int]


def rank_dense(rows: list[list[int]]) -> int:
    """Bareiss fraction-free elimination; input is not modified."""
    m = [list(r) for r in rows]
    nr = len(m)
    nc = len(m[0]) if nr else 0
    rank = 0
    prev = 1
    r = 0
    cols = list(range(nc))
    while r < nr:
        # smallest nonzero pivot in the remaining block limits growth
        best = None
        for i in range(r, nr):
            for cj in range(r, nc):
                v = m[i][cols[cj]]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, cj)
        if best is None:
            break
        _, pi, pj = best
        m[r], m[pi] = m[pi], m[r]
        cols[r], cols[pj] = cols[pj], cols[r]
        piv = m[r][cols[r]]
        for i in range(r + 1, nr):
            vi = m[i][cols[r]]
            row_i, row_r = m[i], m[r]
            for cj in range(r + 1, nc):
                c = cols[cj]
                row_i[c] = (piv * row_i[c] - vi * row_r[c]) // prev
            row_i[cols[r]] = 0
        prev = piv
        rank += 1
        r += 1
    return rank


def _normalize(col: SparseCol) -> SparseCol:
    g = 0
    for v in col.values():
        g = gcd(g, v)
        if g == 1:
            return col
    if g > 1:
        return {r: v // g for r, v in col.items()}
    return col


def _eliminate(col: SparseCol, piv: SparseCol, prow: int) -> SparseCol:
    """Exact combination cancelling the entry of col at prow."""
    pv = piv[prow]
    cv = col[prow]
    g = gcd(pv, cv)
    a, b = pv // g, cv // g
    out: SparseCol = {}
    for r, v in col.items():
        out[r] = a * v
    for r, v in piv.items():
        w = out.get(r, 0) - b * v
        if w:
            out[r] = w
        else:
            out.pop(r, None)
    return _normalize(out)


def rank_sparse(columns: list[SparseCol]) -> int:
    """Rank of the matrix whose columns are sparse {row: value} dicts.

    Pivot columns are kept clean of each other's pivot rows, so reducing a
    new column strictly shrinks its set of pivot rows and terminates.
    """
    pivots: dict[int, SparseCol] = {}
    for col in columns:
        col = _normalize({r: v for r, v in col.items() if v})
        while col:
            hit = None
            for r in sorted(col):
                if r in pivots:
                    hit = r
                    break
            if hit is None:
                break
            col = _eliminate(col, pivots[hit], hit)
        if not col:
            continue
        # prefer a unit pivot, then smallest magnitude, then smallest row
        prow = min(col, key=lambda r: (abs(col[r]), r))
        for existing in pivots.values():
            if prow in existing:
                new = _eliminate(existing, col, prow)
                existing.clear()
                existing.update(new)
        pivots[prow] = dict(col)
    return len(pivots)
