"""The two rational cones whose slices count complexity and multiplicity.

The shape cone section parameterizes partitions of p*d with at most p
parts by (lam_2, ..., lam_p) at level d; its lattice points count the
distinct Schur types in the p-th tensor power of Sym^d.  The content cone
section lives on the strictly-upper entries of a row-content matrix and
its level-d lattice points are in bijection with weight-(d^p) tableaux,
i.e. they count total multiplicity.  The moment map projects the second
cone onto the first.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, comb, floor, gcd
from typing import Iterator, Sequence

from veroschur import ratlp
from veroschur.config import DEFAULT_CONFIG, RunConfig
from veroschur.partitions import Partition, normalize, partitions_of
from veroschur.tableaux import RowContentMatrix, kostka, offdiag_pairs

Functional = tuple[tuple[Fraction, ...], Fraction]  # coeffs . x + const >= 0


@dataclass(frozen=True)
class ConeCrossSection:
    """Level-1 slice of a rational cone, with boundedness certificates.

    upper_bounds are exact per-coordinate maxima over the slice (so the
    slice is bounded); interior_point satisfies every inequality strictly,
    certifying that the slice has full ambient dimension.
    """

    label: str
    ambient_dim: int
    inequalities: tuple[Functional, ...]
    interior_point: tuple[Fraction, ...]
    upper_bounds: tuple[Fraction, ...]

    def evaluate(self, x: Sequence[Fraction]) -> list[Fraction]:
        return [sum(c * v for c, v in zip(coeffs, x)) + const
                for coeffs, const in self.inequalities]


def _certify(label: str, dim: int, ineqs: list[Functional],
             interior: tuple[Fraction, ...]) -> ConeCrossSection:
    strict = [sum(c * v for c, v in zip(coeffs, interior)) + const
              for coeffs, const in ineqs]
    if any(s <= 0 for s in strict):
        raise ValueError(f"interior point fails strictly for {label}")
    # boundedness: maximize each coordinate over the slice by exact LP
    lhs, rhs = [], []
    for coeffs, const in ineqs:
        if const < 0:
            raise ValueError(f"{label}: slice constants must be nonnegative")
        lhs.append([-c for c in coeffs])
        rhs.append(const)
    bounds = []
    for j in range(dim):
        obj = [Fraction(int(i == j)) for i in range(dim)]
        try:
            val, _ = ratlp.simplex_max(obj, lhs, rhs)
        except ratlp.Unbounded as exc:
            raise ValueError(f"{label}: coordinate {j} unbounded on slice") from exc
        bounds.append(val)
    return ConeCrossSection(label, dim, tuple(ineqs), interior, tuple(bounds))


def shape_cone_section(p: int) -> ConeCrossSection:
    """Slice of the cone of shapes: coordinates (lam_2, ..., lam_p), with
    lam_1 := p - sum at level 1 and the chain lam_1 >= ... >= lam_p >= 0."""
    if p < 1:
        raise ValueError("p must be positive")
    dim = p - 1
    ineqs: list[Functional] = []
    zero = [Fraction(0)] * dim
    # lam_1 - lam_2 >= 0 with lam_1 substituted
    if dim:
        coeffs = zero[:]
        for k in range(dim):
            coeffs[k] = Fraction(-1)
        coeffs[0] -= 1
        ineqs.append((tuple(coeffs), Fraction(p)))
        for i in range(dim - 1):
            coeffs = zero[:]
            coeffs[i], coeffs[i + 1] = Fraction(1), Fraction(-1)
            ineqs.append((tuple(coeffs), Fraction(0)))
        coeffs = zero[:]
        coeffs[dim - 1] = Fraction(1)
        ineqs.append((tuple(coeffs), Fraction(0)))
    interior = tuple(Fraction(p + 1 - i, p + 2) for i in range(2, p + 1))
    return _certify(f"shapes(p={p})", dim, ineqs, interior)


def content_cone_section(p: int) -> ConeCrossSection:
    """Slice of the cone of row-content matrices on coordinates t_ij, i<j
    (row-major), with diagonals substituted at level 1."""
    if p < 1:
        raise ValueError("p must be positive")
    pairs = offdiag_pairs(p)
    dim = len(pairs)
    col = {pair: idx for idx, pair in enumerate(pairs)}
    zero = [Fraction(0)] * dim

    def diagonal(i: int) -> tuple[list[Fraction], Fraction]:
        """t_ii = 1 - sum_{k<i} t_ki as (coeffs, const) at level 1."""
        coeffs = zero[:]
        for k in range(i):
            coeffs[col[(k, i)]] -= 1
        return coeffs, Fraction(1)

    ineqs: list[Functional] = []
    for i, j in pairs:
        coeffs = zero[:]
        coeffs[col[(i, j)]] = Fraction(1)
        ineqs.append((tuple(coeffs), Fraction(0)))
    for i in range(p):
        coeffs, const = diagonal(i)
        ineqs.append((tuple(coeffs), const))
    # tableau condition; rows with j <= i are vacuous (empty sums)
    for i in range(p - 1):
        for j in range(i + 1, p):
            coeffs, const = zero[:], Fraction(0)
            for k in range(i, j):
                if k == i:
                    dc, dconst = diagonal(i)
                    coeffs = [a + b for a, b in zip(coeffs, dc)]
                    const += dconst
                else:
                    coeffs[col[(i, k)]] += 1
            for k in range(i + 1, j + 1):
                if k == i + 1:
                    dc, dconst = diagonal(i + 1)
                    coeffs = [a - b for a, b in zip(coeffs, dc)]
                    const -= dconst
                else:
                    coeffs[col[(i + 1, k)]] -= 1
            ineqs.append((tuple(coeffs), const))
    # row-geometric interior point: strictly inside for every p since the
    # slack of condition (2) at (i, j) is (a_i + (j-i-1)(a_i - a_{i+1})) eps
    # for row values a_i decreasing in i
    eps = Fraction(1, p ** (p + 2)) if p > 1 else Fraction(1)
    interior = tuple(Fraction(1, p ** (i + 1)) * eps for i, j in pairs)
    return _certify(f"contents(p={p})", dim, ineqs, interior)


def _integerized(cone: ConeCrossSection) -> list[tuple[tuple[int, ...], int]]:
    out = []
    for coeffs, const in cone.inequalities:
        denom = const.denominator
        for c in coeffs:
            denom = denom * c.denominator // gcd(denom, c.denominator)
        out.append((tuple(int(c * denom) for c in coeffs), int(const * denom)))
    return out


def enumerate_slice(cone: ConeCrossSection, level: int,
                    config: RunConfig = DEFAULT_CONFIG) -> Iterator[tuple[int, ...]]:
    """All integer points on the level-d slice, by interval propagation."""
    if level < 0:
        raise ValueError("level must be nonnegative")
    dim = cone.ambient_dim
    if dim == 0:
        yield ()
        return
    ineqs = _integerized(cone)
    caps = [int(floor(u * level)) for u in cone.upper_bounds]
    # suffix[f][k]: max possible contribution of coordinates >= k to f
    suffix = []
    for coeffs, _ in ineqs:
        row = [0] * (dim + 1)
        for k in range(dim - 1, -1, -1):
            row[k] = row[k + 1] + (coeffs[k] * caps[k] if coeffs[k] > 0 else 0)
        suffix.append(row)
    consts = [const * level for _, const in ineqs]
    point = [0] * dim
    nodes = 0

    def rec(k: int, partials: list[int]) -> Iterator[tuple[int, ...]]:
        nonlocal nodes
        nodes += 1
        config.check_nodes(nodes)
        if k == dim:
            yield tuple(point)
            return
        lo, hi = 0, caps[k]
        for f, (coeffs, _) in enumerate(ineqs):
            a = coeffs[k]
            slack = partials[f] + suffix[f][k + 1]
            if a < 0:
                hi = min(hi, slack // (-a))
            elif a > 0:
                need = -slack
                if need > 0:
                    lo = max(lo, (need + a - 1) // a)
            elif slack < 0:
                return
        for v in range(lo, hi + 1):
            point[k] = v
            new = [partials[f] + ineqs[f][0][k] * v for f in range(len(ineqs))]
            yield from rec(k + 1, new)
        point[k] = 0

    yield from rec(0, list(consts))


def lattice_count(cone: ConeCrossSection, level: int,
                  config: RunConfig = DEFAULT_CONFIG) -> int:
    """Exact number of integer points on the level-d slice."""
    return sum(1 for _ in enumerate_slice(cone, level, config))


def moment_map(m: RowContentMatrix) -> tuple[int, ...]:
    """Project a row-content matrix to (lam_2, ..., lam_p, d)."""
    shape = [sum(m.t[i][i:]) for i in range(m.p)]
    return tuple(shape[1:]) + (m.d,)


def content_points_as_matrices(p: int, d: int,
                               config: RunConfig = DEFAULT_CONFIG) -> Iterator[RowContentMatrix]:
    cone = content_cone_section(p)
    for point in enumerate_slice(cone, d, config):
        yield RowContentMatrix.from_offdiag(p, d, point)


@dataclass(frozen=True)
class MaxMultiplicityReport:
    value: int
    argmax: Partition
    box_constant: int | None
    bound: int | None
    bound_ok: bool | None
    skipped: str | None


def max_multiplicity(p: int, d: int) -> int:
    """Largest multiplicity of a Schur functor in the p-th tensor power of
    Sym^d, i.e. the largest Kostka number at weight (d^p)."""
    return max_multiplicity_report(p, d).value


def max_multiplicity_report(p: int, d: int) -> MaxMultiplicityReport:
    if p < 1 or d < 0:
        raise ValueError("need p >= 1, d >= 0")
    best, arg = 0, ()
    weight = (d,) * p
    for lam in partitions_of(p * d, max_parts=p):
        k = kostka(lam, weight)
        if k > best:
            best, arg = k, lam
    if best == 0:
        best, arg = 1, normalize(weight)
    exponent = comb(p - 1, 2) if p >= 2 else 0
    if p > 4:
        return MaxMultiplicityReport(best, arg, None, None, None,
                                     "box constant only certified for p <= 4")
    if exponent == 0:
        bound = 1
        return MaxMultiplicityReport(best, arg, 1, bound, best <= bound, None)
    cone = content_cone_section(p)
    verts = ratlp.polytope_vertices(cone.inequalities, cone.ambient_dim)
    pairs = offdiag_pairs(p)
    box_cols = [idx for idx, (i, j) in enumerate(pairs) if i >= 1]
    box = max(abs(v[idx]) for v in verts for idx in box_cols)
    l = int(ceil(box))
    bound = (3 * l) ** exponent * max(1, d ** exponent)
    return MaxMultiplicityReport(best, arg, l, bound, best <= bound, None)


@dataclass(frozen=True)
class FitResult:
    """Leading-coefficient estimate by divided differences on the last two
    windows of samples; relative_change is the convergence diagnostic."""

    degree: int
    estimate: Fraction
    previous: Fraction
    relative_change: Fraction


def _divided_difference(points: list[tuple[int, Fraction]]) -> Fraction:
    vals = [y for _, y in points]
    xs = [x for x, _ in points]
    for span in range(1, len(points)):
        vals = [(vals[i + 1] - vals[i]) / (xs[i + span] - xs[i])
                for i in range(len(vals) - 1)]
    return vals[0]


def fit_leading_coefficient(samples: Sequence[tuple[int, int]],
                            degree: int) -> FitResult:
    """Estimate lim count / level^degree by divided differences.

    The top divided difference over degree+1 samples equals the leading
    coefficient exactly for a degree-`degree` polynomial; the change
    between the last two windows is reported as the residual diagnostic.
    """
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    pts = sorted({(int(x), Fraction(y)) for x, y in samples})
    if len(pts) != len(set(x for x, _ in pts)):
        raise ValueError("sample levels must be distinct")
    if len(pts) < degree + 2:
        raise ValueError(f"need at least {degree + 2} samples, got {len(pts)}")
    last = _divided_difference(pts[-(degree + 1):])
    prev = _divided_difference(pts[-(degree + 2):-1])
    if last == 0:
        change = Fraction(0) if prev == 0 else Fraction(1)
    else:
        change = abs(last - prev) / abs(last)
    return FitResult(degree, last, prev, change)
