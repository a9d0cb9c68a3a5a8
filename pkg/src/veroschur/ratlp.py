"""Small exact rational linear programming and vertex enumeration.

Only what the cone module needs: maximize a linear functional over
{x >= 0 : Ax <= b} with b >= 0 (so the slack basis is feasible), and
enumerate the vertices of a low-dimensional polytope given by affine
functionals required >= 0.  Everything is Fraction arithmetic; Bland's
rule guarantees termination.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Sequence

Vector = tuple[Fraction, ...]


class Unbounded(Exception):
    """The linear program has unbounded objective."""


def simplex_max(objective: Sequence[Fraction],
                lhs: Sequence[Sequence[Fraction]],
                rhs: Sequence[Fraction]) -> tuple[Fraction, Vector]:
    """Maximize objective . x subject to lhs x <= rhs, x >= 0, rhs >= 0.

    Returns (optimum, maximizer); raises Unbounded.
    """
    m, n = len(lhs), len(objective)
    if any(r < 0 for r in rhs):
        raise ValueError("needs rhs >= 0")
    # tableau rows: constraints with slack identity, last row = -objective
    tab = [[Fraction(v) for v in row] +
           [Fraction(int(i == j)) for j in range(m)] +
           [Fraction(rhs[i])] for i, row in enumerate(lhs)]
    tab.append([-Fraction(v) for v in objective] + [Fraction(0)] * (m + 1))
    basis = list(range(n, n + m))
    total = n + m
    while True:
        enter = next((j for j in range(total) if tab[m][j] < 0), None)
        if enter is None:
            break
        best = None
        for i in range(m):
            if tab[i][enter] > 0:
                ratio = tab[i][total] / tab[i][enter]
                if best is None or ratio < best[0] or \
                        (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            raise Unbounded()
        _, leave = best
        piv = tab[leave][enter]
        tab[leave] = [v / piv for v in tab[leave]]
        for i in range(m + 1):
            if i != leave and tab[i][enter]:
                f = tab[i][enter]
                tab[i] = [a - f * b for a, b in zip(tab[i], tab[leave])]
        basis[leave] = enter
    x = [Fraction(0)] * n
    for i, bv in enumerate(basis):
        if bv < n:
            x[bv] = tab[i][total]
    return tab[m][total], tuple(x)


def solve_square(a: list[list[Fraction]], b: list[Fraction]) -> Vector | None:
    """Unique solution of a square system, or None if singular."""
    n = len(a)
    m = [row[:] + [b[i]] for i, row in enumerate(a)]
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] != 0), None)
        if piv is None:
            return None
        m[c], m[piv] = m[piv], m[c]
        pv = m[c][c]
        m[c] = [v / pv for v in m[c]]
        for r in range(n):
            if r != c and m[r][c]:
                f = m[r][c]
                m[r] = [v - f * w for v, w in zip(m[r], m[c])]
    return tuple(m[r][n] for r in range(n))


def polytope_vertices(functionals: Sequence[tuple[Vector, Fraction]],
                      dim: int) -> list[Vector]:
    """Vertices of {x : coeffs . x + const >= 0 for all functionals}.

    Brute force over dim-subsets of tight constraints; intended for the
    small ambient dimensions of the cone cross sections.
    """
    if dim == 0:
        return [()] if all(c >= 0 for _, c in functionals) else []
    verts: set[Vector] = set()
    for subset in combinations(functionals, dim):
        a = [list(coeffs) for coeffs, _ in subset]
        b = [-const for _, const in subset]
        x = solve_square(a, b)
        if x is None:
            continue
        if all(sum(c * v for c, v in zip(coeffs, x)) + const >= 0
               for coeffs, const in functionals):
            verts.add(x)
    return sorted(verts)
