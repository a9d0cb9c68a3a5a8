"""Explicit subfunctor constructions and the ratio experiment harness.

Covers the duality between symmetric and exterior plethysms, positivity of
doubled partitions in even plethysms, the staircase-exponent membership
construction behind the twisted linear strand, the twin and almost-triplet
pattern censuses used for counting distinct Schur types, and exact ratio
tables with their theoretical limits.
"""

from __future__ import annotations

import random
import warnings
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import ceil, comb, factorial, floor
from typing import Callable, Sequence

from veroschur.characters import (SchurExpansion, char_sym_sym, char_tensor_sym,
                                  char_wedge_sym, complexity, schur_decompose,
                                  tensor_with_sym, total_multiplicity)
from veroschur.config import DEFAULT_CONFIG, RunConfig
from veroschur.koszul import KoszulSpec, syzygy_decompose
from veroschur.partitions import (Partition, add, conjugate, dominates, length,
                                  normalize, part, partitions_of,
                                  sym_group_irrep_dim)
from veroschur.tableaux import horizontal_strips_down


# ---------------------------------------------------------------------------
# plethysm identities

@dataclass(frozen=True)
class CheckReport:
    ok: bool
    failures: tuple[str, ...]


def newell_check(p: int, d: int, n: int,
                 config: RunConfig = DEFAULT_CONFIG) -> CheckReport:
    """Verify both shift identities between symmetric and exterior
    plethysms: multiplicities of lam in Sym^p Sym^d match those of
    lam + (1^p) in wedge^p Sym^{d+1}, and vice versa."""
    if n < p:
        raise ValueError("need n >= p")
    column = (1,) * p
    failures = []
    pairs = [
        ("wedge(d+1) vs sym(d)",
         schur_decompose(char_wedge_sym(p, d + 1, n, config)),
         schur_decompose(char_sym_sym(p, d, n, config))),
        ("sym(d+1) vs wedge(d)",
         schur_decompose(char_sym_sym(p, d + 1, n, config)),
         schur_decompose(char_wedge_sym(p, d, n, config))),
    ]
    for name, shifted_side, base_side in pairs:
        lams = set(base_side.terms)
        lams.update(normalize(tuple(v - 1 for v in mu))
                    for mu in shifted_side.terms
                    if len(mu) == p and mu[-1] >= 1)
        for lam in sorted(lams, reverse=True):
            lhs = shifted_side.multiplicity(add(lam, column))
            rhs = base_side.multiplicity(lam)
            if lhs != rhs:
                failures.append(f"{name} at {lam}: {lhs} != {rhs}")
    return CheckReport(not failures, tuple(failures))


def doubled_plethysm_check(p: int, d: int, n: int,
                           config: RunConfig = DEFAULT_CONFIG) -> CheckReport:
    """Every doubled partition 2*lam with lam |- p*d of length <= p occurs
    in Sym^p Sym^{2d}, together with the two exterior-power consequences."""
    if n < p:
        raise ValueError("need n >= p")
    column = (1,) * p
    row = (p,)
    sym_2d = schur_decompose(char_sym_sym(p, 2 * d, n, config))
    sym_2d1 = schur_decompose(char_sym_sym(p, 2 * d + 1, n, config))
    wedge_2d1 = schur_decompose(char_wedge_sym(p, 2 * d + 1, n, config))
    wedge_2d2 = schur_decompose(char_wedge_sym(p, 2 * d + 2, n, config))
    failures = []
    for lam in partitions_of(p * d, max_parts=p):
        dbl = tuple(2 * v for v in lam)
        m = sym_2d.multiplicity(dbl)
        if m <= 0:
            failures.append(f"2*{lam} missing from Sym^{p}Sym^{2*d}")
            continue
        padded = dbl + (0,) * (p - len(dbl))
        if wedge_2d1.multiplicity(add(padded, column)) != m:
            failures.append(f"first wedge identity fails at 2*{lam}")
        m1 = sym_2d1.multiplicity(add(dbl, row))
        if m1 <= 0:
            failures.append(f"2*{lam}+({p}) missing from Sym^{p}Sym^{2*d+1}")
        if wedge_2d2.multiplicity(add(add(padded, column), row)) != m1:
            failures.append(f"second wedge identity fails at 2*{lam}")
    return CheckReport(not failures, tuple(failures))


# ---------------------------------------------------------------------------
# visible boxes and the staircase membership construction

def remove_visible_boxes(lam: Sequence[int], k: int) -> Partition:
    """Remove the bottom box of each of the rightmost k columns."""
    lam = normalize(lam)
    if k < 0:
        raise ValueError("k must be nonnegative")
    if part(lam, 0) < k:
        raise ValueError(f"partition has only {part(lam, 0)} columns, need {k}")
    cols = list(conjugate(lam))
    for j in range(len(cols) - k, len(cols)):
        cols[j] -= 1
    return conjugate(normalize(tuple(cols)))


@dataclass(frozen=True)
class StaircaseWitness:
    """Strictly decreasing exponent staircase splitting L0 = |lam| - (b+1)."""

    lam: Partition
    b: int
    p: int
    exponents: tuple[int, ...]
    levels: tuple[int, ...]


def staircase_exponents(lam: Sequence[int], b: int, p: int) -> StaircaseWitness:
    """Greedy staircase split e_i = ceil(L_i/(p+1-i) + (p-i)/2).

    Yields e_0 > e_1 > ... > e_p >= 0 with sum L_0 whenever
    L_0 >= p(p+1)/2; the final level is always exactly zero.
    """
    lam = normalize(lam)
    if b < 0 or p < 0:
        raise ValueError("b, p must be nonnegative")
    level = sum(lam) - (b + 1)
    if level < p * (p + 1) // 2:
        raise ValueError(f"L0 = {level} below staircase minimum {p*(p+1)//2}")
    levels = [level]
    exponents = []
    for i in range(p + 1):
        r = p + 1 - i
        e = -((-2 * level - r * (r - 1)) // (2 * r))  # ceil(level/r + (r-1)/2)
        exponents.append(e)
        level -= e
        levels.append(level)
    if level != 0 or any(exponents[i] <= exponents[i + 1] for i in range(p)) \
            or exponents[-1] < 0:
        raise AssertionError(f"staircase split failed for {lam}, b={b}, p={p}")
    return StaircaseWitness(lam, b, p, tuple(exponents), tuple(levels))


@dataclass(frozen=True)
class MembershipResult:
    verdict: str  # constructed | conditions-fail | pieri-fail
    witness: StaircaseWitness
    reason: str
    chain: tuple[Partition, ...]


def _strip_chain(lam: Partition, sizes: Sequence[int]) -> tuple[Partition, ...] | None:
    """A chain () -> lam adding horizontal strips of the given sizes, or
    None; prunes with the dominance criterion so the search is guided."""
    if sum(sizes) != sum(lam):
        return None

    def feasible(shape: Partition, k: int) -> bool:
        rest = sorted(sizes[:k], reverse=True)
        if sum(rest) != sum(shape):
            return False
        return dominates(shape, tuple(rest))

    def descend(shape: Partition, k: int) -> list[Partition] | None:
        if k == 0:
            return [] if not shape else None
        for nu in horizontal_strips_down(shape, sizes[k - 1]):
            if feasible(nu, k - 1):
                tail = descend(nu, k - 1)
                if tail is not None:
                    return tail + [shape]
        return None

    chain = descend(lam, len(sizes))
    return None if chain is None else tuple(chain)


def staircase_membership(lam: Sequence[int], b: int, p: int, d: int,
                         n: int) -> MembershipResult:
    """Decide whether lam is reachable as a Schur type of the product of
    Sym^{b+1} with the staircase factors Sym^{e_0}, ..., Sym^{e_p}.

    Preconditions: length(lam) = n - 1 <= p + 2 and the last part exceeds
    b + 1.  Checks the partial-sum conditions on the partition with its
    last b+1 visible boxes removed and e_0 <= d - 1, then independently
    certifies membership by an explicit horizontal-strip chain.
    """
    lam = normalize(lam)
    if length(lam) != n - 1 or n - 1 > p + 2:
        raise ValueError(f"need length(lam) = n-1 <= p+2, got {lam} with n={n}")
    if part(lam, n - 2) <= b + 1:
        raise ValueError(f"need last part > {b + 1}")
    witness = staircase_exponents(lam, b, p)
    es = witness.exponents
    trimmed = remove_visible_boxes(lam, b + 1)
    for j in range(1, n - 1):
        if sum(trimmed[:j]) < sum(es[:j]):
            return MembershipResult(
                "conditions-fail", witness,
                f"partial sums fail at index {j}", ())
    if es[0] > d - 1:
        return MembershipResult(
            "conditions-fail", witness, f"e_0 = {es[0]} exceeds d-1 = {d-1}", ())
    sizes = [e for e in (b + 1,) + es if e > 0]
    chain = _strip_chain(lam, sizes)
    if chain is None:
        return MembershipResult("pieri-fail", witness,
                                "no horizontal-strip chain found", ())
    return MembershipResult("constructed", witness, "", chain)


def sample_staircase_inputs(count: int, seed: int) -> list[tuple[Partition, int, int, int, int]]:
    """Seeded (lam, b, p, d, n) samples meeting the membership
    preconditions with margin L0 >= p(p+1)/2 + p."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        p = rng.randint(1, 3)
        b = rng.randint(0, 2)
        m = rng.randint(1, p + 2)  # length of lam = n - 1
        tail = sorted((rng.randint(0, 8) for _ in range(m - 1)), reverse=True)
        head = (tail[0] if tail else 0) + rng.randint(0, 20)
        lam = [b + 2 + head] + [b + 2 + v for v in tail]
        margin = p * (p + 1) // 2 + p
        deficit = margin + (b + 1) - sum(lam)
        if deficit > 0:
            lam[0] += deficit
        lam_t = normalize(tuple(lam))
        witness = staircase_exponents(lam_t, b, p)
        d = witness.exponents[0] + 1 + rng.randint(0, 3)
        out.append((lam_t, b, p, d, m + 1))
    return out


# ---------------------------------------------------------------------------
# restriction bounds

def h0_projective(n: int, e: int) -> int:
    """Dimension of the degree-e forms in n variables."""
    if n < 1 or e < 0:
        raise ValueError("need n >= 1, e >= 0")
    return comb(n - 1 + e, n - 1)


def _integer_root(x: int, k: int) -> int:
    """floor(x**(1/k)) for nonnegative integers."""
    if x < 0 or k < 1:
        raise ValueError("bad root")
    r = round(x ** (1.0 / k))
    while r ** k > x:
        r -= 1
    while (r + 1) ** k <= x:
        r += 1
    return r


def max_n_green(p: int, b: int, q: int, d: int) -> int:
    """Largest n >= 2 with p + 1 >= h0 of degree b+1+(q-1)d on P^{n-1}.

    For q = 1 the result is at least the integer (b+1)-st root of
    (p+1)*(b+1)! except at a few boundary values, where a warning is
    emitted instead of failing.
    """
    e = b + 1 + (q - 1) * d
    if e < 0:
        raise ValueError("negative twist degree")
    n = None
    k = 2
    while p + 1 >= h0_projective(k, e):
        n = k
        k += 1
    if n is None:
        raise ValueError(f"no n >= 2 satisfies p+1 >= h0(P^(n-1), O({e}))")
    if q == 1:
        expected = _integer_root((p + 1) * factorial(b + 1), b + 1)
        if n < expected:
            warnings.warn(f"root lower bound {expected} exceeds computed n={n} "
                          f"at p={p}, b={b}; using the computed value")
    return n


# ---------------------------------------------------------------------------
# pattern censuses

@dataclass(frozen=True)
class PatternReport:
    n: int
    kind: str  # "twin" | "almost-triplet"
    partitions: int
    parameters: dict
    molds: int | None = None


def has_twin_pattern(lam: Sequence[int], n: int) -> bool:
    """Pairs of equal parts, with a final triple when n - 1 is odd."""
    lam = normalize(lam)
    if len(lam) != n - 1:
        return False
    for i in range(0, (n - 1) // 2):
        if lam[2 * i] != lam[2 * i + 1]:
            return False
    if (n - 1) % 2 == 1 and lam[n - 2] != lam[n - 3]:
        return False
    return True


def twin_expand(lam1: int, frees: Sequence[int], n: int) -> Partition:
    """Twin-pattern partition of length n-1 from its free values."""
    vals = [lam1] + list(frees)
    out = []
    for v in vals:
        out.extend([v, v])
    if (n - 1) % 2 == 1:
        out.append(vals[-1])
    return normalize(tuple(out[:n - 1]))


def _twin_bounds(p: int, b: int, d: int, n: int):
    B = max(Fraction(b + 2), Fraction(p * (p + 1) // 2 + b + 1, n - 1))
    lam1_lo = int(ceil(B))
    lam1_hi = int(floor((p * d - (n - 3) * B) / 2))

    def upper(lam1: int) -> int:
        terms = [Fraction(lam1), Fraction(p * d - 2 * lam1, n - 3)]
        terms.append(Fraction(2 * (p - n + 1), (n - 2) * (n - 3)) * lam1
                     - Fraction((p + 1) * (p + 2), 2 * (n - 3)))
        return int(floor(min(terms)))

    return B, lam1_lo, lam1_hi, upper


def twin_pattern_count_closed(p: int, b: int, d: int) -> tuple[int, dict]:
    """Closed-form twin census; see twin_pattern_census for the regime."""
    n = max_n_green(p, b, 1, d)
    if n == 2:
        count = (p + 1) * (d - 1 - p) + 1 if d >= p + 1 else 0
        return count, {"n": n, "B": None, "lam1_range": None}
    if n in (3, 4):
        raise ValueError("no closed form for n in {3, 4}; use enumeration")
    B, lo, hi, upper = _twin_bounds(p, b, d, n)
    k = (n - 3) // 2  # free values below lam1
    total = 0
    for lam1 in range(lo, hi + 1):
        top = min(upper(lam1), lam1)
        width = top - lo + 1
        if width > 0:
            total += comb(width - 1 + k, k)
    return total, {"n": n, "B": B, "lam1_range": (lo, hi)}


def twin_pattern_enumerate(p: int, b: int, d: int) -> int:
    """Independent direct enumeration of the twin census set."""
    n = max_n_green(p, b, 1, d)
    if n <= 4:
        return len(_restriction_types(p, b, d, n))
    B, lo, hi, upper = _twin_bounds(p, b, d, n)
    k = (n - 3) // 2
    count = 0
    for lam1 in range(lo, hi + 1):
        top = min(upper(lam1), lam1)

        def rec(remaining: int, bound: int) -> int:
            if remaining == 0:
                return 1
            return sum(rec(remaining - 1, v) for v in range(lo, bound + 1))

        if top >= lo:
            count += rec(k, top)
    return count


def _restriction_types(p: int, b: int, d: int, n: int) -> set[Partition]:
    """Distinct Schur types of length <= n-1 in the direct sum of
    Sym^{e_0} (x) ... (x) Sym^{e_p} (x) Sym^{b+1} over strictly decreasing
    exponent tuples in [0, d-1]."""
    types: set[Partition] = set()
    for es in combinations(range(d), p + 1):
        weight = tuple(sorted(es + (b + 1,), reverse=True))
        total = sum(weight)
        if n - 1 == 1:
            types.add((total,))
            continue
        for lam in partitions_of(total, max_parts=n - 1):
            if dominates(lam, weight):
                types.add(lam)
    return types


def twin_pattern_census(p: int, b: int, d: int,
                        sample_checks: int = 25) -> PatternReport:
    """Count the twin-pattern partitions used to certify many distinct
    Schur types in the twisted linear strand.

    For n >= 5 this is the closed-form count over the free values with a
    sampled pattern-predicate verification; for n in {2, 3, 4} it reduces
    to direct enumeration of the restriction types.
    """
    if not (p >= b + 1 >= 2):
        raise ValueError("census requires p >= b+1 >= 2")
    n = max_n_green(p, b, 1, d)
    if n <= 4:
        count = len(_restriction_types(p, b, d, n))
        return PatternReport(n, "twin", count,
                             {"p": p, "b": b, "d": d, "B": None,
                              "lam1_range": None, "path": "direct"})
    count, meta = twin_pattern_count_closed(p, b, d)
    B, lo, hi, upper = _twin_bounds(p, b, d, n)
    rng = random.Random(0)
    checked = 0
    for _ in range(sample_checks):
        if hi < lo:
            break
        lam1 = rng.randint(lo, hi)
        top = min(upper(lam1), lam1)
        if top < lo:
            continue
        frees = sorted((rng.randint(lo, top) for _ in range((n - 3) // 2)),
                       reverse=True)
        lam = twin_expand(lam1, frees, n)
        if not has_twin_pattern(lam, n):
            raise AssertionError(f"sampled census member {lam} fails predicate")
        if part(lam, n - 2) < B or (frees and not lo <= frees[0] <= top):
            raise AssertionError(f"sampled census member {lam} out of bounds")
        checked += 1
    return PatternReport(n, "twin", count,
                         {"p": p, "b": b, "d": d, "B": meta["B"],
                          "lam1_range": meta["lam1_range"],
                          "sampled_ok": checked, "path": "closed-form"})


def mold(lam: Sequence[int]) -> Partition:
    """Mold of an almost-triplet partition: subtract a full column, check
    the (pair, triples) grouping, then overwrite the first part with the
    second."""
    lam = normalize(lam)
    bar = normalize(tuple(v - 1 for v in lam))
    if len(bar) % 3 != 0:
        raise ValueError(f"reduced length {len(bar)} not divisible by 3")
    if bar:
        if bar[1] != bar[2]:
            raise ValueError("second and third reduced parts differ")
        for g in range(1, len(bar) // 3):
            i = 3 * g
            if not bar[i] == bar[i + 1] == bar[i + 2]:
                raise ValueError(f"triple group at {i} not constant")
    return normalize((bar[1],) + bar[1:]) if bar else ()


def _triple_expand(mu: Partition, copies: int) -> tuple[int, ...]:
    out = []
    for v in mu + (0,) * (copies - len(mu)):
        out.extend([v, v, v])
    return tuple(out)


def almost_triplet_census(p: int, b: int, n: int, d: int,
                          multi_wedge: bool = False) -> PatternReport:
    """Construct the almost-triplet family and count its distinct molds.

    Single-wedge path (default) requires d >= p + 2; the blocked multi
    wedge construction behind multi_wedge handles smaller d at the price
    of extra bookkeeping.
    """
    if n > p + 1:
        raise ValueError("requires n <= p + 1")
    if n < 4:
        raise ValueError("requires n >= 4 for triple groups")
    if d < 3 * ((p + 1) // (n - 3)) + 3:
        raise ValueError(f"requires d >= {3 * ((p + 1) // (n - 3)) + 3}")
    if multi_wedge:
        return _almost_triplet_multi(p, b, n, d)
    if d < p + 2:
        raise ValueError("single-wedge path requires d >= p + 2; "
                         "set multi_wedge=True")
    r = next(r for r in (1, 2, 3) if (d - r) % 3 == 1)
    eps = (d - r - 1) % 2
    raw = (n - 1) * (d - r - 1 - eps)
    if raw % 6:
        raise ValueError("triple size not integral here; need 3 | n-1 "
                         "when d - r - 1 is odd")
    s, copies = raw // 6, (n - 1) // 3
    extra = sum(d - r - 1 - k for k in range(p - n + 2)) + b + 1
    molds: set[Partition] = set()
    count = 0
    for mu in partitions_of(s, max_parts=copies):
        core = [1 + 2 * v for v in _triple_expand(mu, copies)]
        core += [1] * (n - 1 - len(core))
        core[0] += eps * (n - 1) + extra
        lam = normalize(tuple(core))
        molds.add(mold(lam))
        count += 1
    if len(molds) != count:
        raise AssertionError("distinct inputs produced colliding molds")
    return PatternReport(n, "almost-triplet", count,
                         {"p": p, "b": b, "d": d, "r": r, "epsilon": eps,
                          "mu_size": s, "path": "single-wedge"},
                         molds=len(molds))


def _almost_triplet_multi(p: int, b: int, n: int, d: int) -> PatternReport:
    """Blocked variant: one wedge block of size n-1 carrying the triple
    family, the rest covered by odd-degree rectangles of height 3 and
    single rows, all at distinct degrees."""
    d1 = next((v for v in range(d - 1, 0, -1) if v % 6 == 1), None)
    if d1 is None or d1 < 2:
        raise ValueError("no usable leading degree below d")
    s, copies = (n - 1) * (d1 - 1) // 6, (n - 1) // 3
    rest = p + 1 - (n - 1)
    heights = [3] * (rest // 3) + [1] * (rest % 3)
    degrees = []
    v = d1 - 2
    for h in heights:
        while v > 0 and (h == 3 and v % 2 == 0):
            v -= 1
        if v <= 0:
            raise ValueError("not enough degrees for the blocked construction")
        degrees.append(v)
        v -= 1
    offsets = [0] * (n - 1)
    for h, deg in zip(heights, degrees):
        for i in range(h):
            offsets[i] += deg
    offsets[0] += b + 1
    molds: set[Partition] = set()
    count = 0
    for mu in partitions_of(s, max_parts=copies):
        core = [1 + 2 * v for v in _triple_expand(mu, copies)]
        core += [1] * (n - 1 - len(core))
        lam = normalize(tuple(c + o for c, o in zip(core, offsets)))
        molds.add(mold(lam))
        count += 1
    if len(molds) != count:
        raise AssertionError("distinct inputs produced colliding molds")
    return PatternReport(n, "almost-triplet", count,
                         {"p": p, "b": b, "d": d, "d1": d1, "mu_size": s,
                          "heights": tuple(heights), "degrees": tuple(degrees),
                          "path": "multi-wedge"},
                         molds=len(molds))


# ---------------------------------------------------------------------------
# ratio experiments

@dataclass(frozen=True)
class RatioRow:
    d: int
    numerator: int
    denominator: int
    ratio: Fraction


@dataclass(frozen=True)
class RatioTable:
    experiment: str
    parameters: dict
    limit: Fraction
    rows: tuple[RatioRow, ...]


def _n_tensor(p: int, d: int, config: RunConfig) -> SchurExpansion:
    return schur_decompose(char_tensor_sym(p, d, p, config))


def _experiment_registry() -> dict[str, Callable]:
    def syzygy_share(params, d, config):
        p = params["p"]
        num = total_multiplicity(syzygy_decompose(KoszulSpec(p, 1, 0, d, p + 1),
                                                  config))
        den = total_multiplicity(_n_tensor(p + 1, d, config))
        return num, den

    def sym_vs_wedge(params, d, config):
        p = params["p"]
        num = total_multiplicity(schur_decompose(char_sym_sym(p, d, p, config)))
        den = total_multiplicity(schur_decompose(char_wedge_sym(p, d, p, config)))
        return num, den

    def twist(params, d, config, stat):
        p, b = params["p"], params["b"]
        base = _n_tensor(p, d, config)
        twisted = tensor_with_sym(base.with_n(p + 1), b)
        return stat(twisted), stat(base)

    def wedge_tensor_share(params, d, config):
        p = params["p"]
        w = schur_decompose(char_wedge_sym(p, d, p, config)).with_n(p + 1)
        num = total_multiplicity(tensor_with_sym(w, d))
        den = total_multiplicity(_n_tensor(p + 1, d, config))
        return num, den

    def schur_share(params, d, config):
        p, mu = params["p"], normalize(params["mu"])
        if sum(mu) != p:
            raise ValueError("mu must be a partition of p")
        nt = total_multiplicity(_n_tensor(p, d, config))
        if mu == (p,):
            num = total_multiplicity(schur_decompose(char_sym_sym(p, d, p, config)))
        elif mu == (1,) * p:
            num = total_multiplicity(schur_decompose(char_wedge_sym(p, d, p, config)))
        elif mu == (2, 1):
            ns = total_multiplicity(schur_decompose(char_sym_sym(3, d, 3, config)))
            nw = total_multiplicity(schur_decompose(char_wedge_sym(3, d, 3, config)))
            rem = nt - ns - nw
            if rem % 2:
                raise AssertionError("mixed component multiplicity not even")
            num = rem // 2
        else:
            raise ValueError(f"unsupported mu {mu}; use (p), (1^p) or (2,1)")
        return num, nt

    return {
        "syzygy-share": (syzygy_share,
                         lambda pr: Fraction(pr["p"], factorial(pr["p"] + 1))),
        "sym-vs-wedge": (sym_vs_wedge, lambda pr: Fraction(1)),
        "twist-total": (lambda pr, d, c: twist(pr, d, c, total_multiplicity),
                        lambda pr: Fraction(comb(pr["b"] + pr["p"], pr["p"]))),
        "twist-types": (lambda pr, d, c: twist(pr, d, c, complexity),
                        lambda pr: Fraction(pr["b"] + 1)),
        "wedge-tensor-share": (wedge_tensor_share,
                               lambda pr: Fraction(1, factorial(pr["p"]))),
        "schur-share": (schur_share,
                        lambda pr: Fraction(sym_group_irrep_dim(pr["mu"]),
                                            factorial(pr["p"]))),
    }


EXPERIMENTS = tuple(sorted(_experiment_registry()))


def ratio_experiment(experiment: str, parameters: dict,
                     d_values: Sequence[int],
                     config: RunConfig = DEFAULT_CONFIG) -> RatioTable:
    """Exact ratio table for one named limit statement.

    Each row holds the two exact counts at one d and their ratio; the
    theoretical limit is attached for comparison by the caller.
    """
    registry = _experiment_registry()
    if experiment not in registry:
        raise ValueError(f"unknown experiment {experiment!r}; "
                         f"choose from {', '.join(EXPERIMENTS)}")
    fn, limit_fn = registry[experiment]
    rows = []
    for d in sorted(set(d_values)):
        num, den = fn(parameters, d, config)
        rows.append(RatioRow(d, num, den, Fraction(num, den)))
    return RatioTable(experiment, dict(parameters), limit_fn(parameters),
                      tuple(rows))
