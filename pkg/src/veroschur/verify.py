"""Named verification suites bundling the library's cross-checks.

Each suite runs a fixed set of exact identities or tolerance checks at
desk-scale parameters and returns machine-readable verdicts.  The CLI
exposes them under `verify`; the acceptance tests call them directly.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from fractions import Fraction

from veroschur.characters import (char_tensor_sym, char_wedge_sym, complexity,
                                  schur_decompose, tensor_with_sym,
                                  total_multiplicity)
from veroschur.cones import (content_cone_section, content_points_as_matrices,
                             lattice_count, moment_map, shape_cone_section)
from veroschur.config import DEFAULT_CONFIG, RunConfig
from veroschur.constructions import (almost_triplet_census, doubled_plethysm_check,
                                     newell_check, ratio_experiment,
                                     sample_staircase_inputs, staircase_membership,
                                     twin_pattern_count_closed,
                                     twin_pattern_enumerate)
from veroschur.koszul import (KoszulSpec, green_vanishing_predicted,
                              raicu_predicted_kp0, syzygy_decompose)
from veroschur.partitions import count_partitions, normalize
from veroschur.tableaux import kostka


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str


def _ratio_within(ratio: Fraction, limit: Fraction, tol: Fraction) -> bool:
    return abs(ratio - limit) <= tol * abs(limit)


def suite_newell(config: RunConfig = DEFAULT_CONFIG) -> list[Check]:
    out = []
    for p in (1, 2, 3):
        for d in (1, 2, 3, 4):
            rep = newell_check(p, d, p, config)
            out.append(Check(f"newell p={p} d={d}", rep.ok,
                             "; ".join(rep.failures) or "all shifts match"))
    return out


def suite_doubling(config: RunConfig = DEFAULT_CONFIG) -> list[Check]:
    out = []
    for p in (1, 2, 3):
        for d in (1, 2, 3):
            rep = doubled_plethysm_check(p, d, p, config)
            out.append(Check(f"doubling p={p} d={d}", rep.ok,
                             "; ".join(rep.failures) or "all doubled types present"))
    return out


def suite_raicu(config: RunConfig = DEFAULT_CONFIG) -> list[Check]:
    out = []
    for p in (0, 1):
        for d in (2, 3, 4):
            for n in (p + 2, p + 3):
                predicted = raicu_predicted_kp0(p, d, n, config)
                direct = syzygy_decompose(KoszulSpec(p + 1, 0, 1, d, n), config)
                ok = predicted.terms == direct.terms
                out.append(Check(f"raicu-shift p={p} d={d} n={n}", ok,
                                 f"{len(direct.terms)} terms"))
    return out


def suite_green(config: RunConfig = DEFAULT_CONFIG) -> list[Check]:
    out = []
    e = syzygy_decompose(KoszulSpec(1, 1, 0, 2, 2), config)
    out.append(Check("first-syzygy of the conic", e.terms == {(2, 2): 1},
                     str(e.terms)))
    for p in (1, 2):
        for d in (2, 3):
            e = syzygy_decompose(KoszulSpec(p, 0, 0, d), config)
            out.append(Check(f"linear strand kernel p={p} d={d} empty",
                             not e.terms, str(e.terms)))
    e = syzygy_decompose(KoszulSpec(0, 0, 0, 5, 1), config)
    out.append(Check("degree-zero syzygy is the unit", e.terms == {(): 1},
                     str(e.terms)))
    for p in (1, 2, 3):
        for d in (p, p + 1):
            for n in (2, 3):
                assert green_vanishing_predicted(p, 2, 0, d)
                e = syzygy_decompose(KoszulSpec(p, 2, 0, d, n), config)
                out.append(Check(f"green vanishing p={p} q=2 d={d} n={n}",
                                 not e.terms, str(e.terms)))
    # kernel support: length-3 types of the twisted strand match the
    # horizontal-strip prediction from the exterior square
    for d in (2, 3, 4, 5, 6):
        direct = syzygy_decompose(KoszulSpec(2, 0, 1, d, 3), config)
        wedge = schur_decompose(char_wedge_sym(2, d, 2, config)).with_n(3)
        strip = tensor_with_sym(wedge, 1)
        want = {lam: c for lam, c in strip.terms.items() if len(lam) == 3}
        got = {lam: c for lam, c in direct.terms.items() if len(lam) == 3}
        ok = want == got and all(
            direct.multiplicity(lam + (1,)) >= c
            for lam, c in wedge.terms.items() if len(lam) == 2)
        out.append(Check(f"twisted kernel support d={d}", ok,
                         f"{len(got)} length-3 types"))
    return out


def suite_staircase(config: RunConfig = DEFAULT_CONFIG,
                    count: int = 100) -> list[Check]:
    samples = sample_staircase_inputs(count, seed=config.seed or 20240)
    constructed = conditions = 0
    bad: list[str] = []
    for lam, b, p, d, n in samples:
        res = staircase_membership(lam, b, p, d, n)
        w = res.witness
        es = w.exponents
        if sum(es) != w.levels[0] or w.levels[-1] != 0 or \
                any(es[i] <= es[i + 1] for i in range(len(es) - 1)) or es[-1] < 0:
            bad.append(f"exponent invariants fail for {lam} b={b} p={p}")
        if res.verdict == "constructed":
            constructed += 1
            if res.chain[-1] != lam:
                bad.append(f"chain does not end at {lam}")
        elif res.verdict == "conditions-fail":
            conditions += 1
        else:
            bad.append(f"pieri-fail at {lam} b={b} p={p} d={d} n={n}")
    return [Check("staircase membership suite", not bad,
                  "; ".join(bad) or
                  f"{constructed} constructed, {conditions} conditions-fail")]


def suite_kostka_cone(config: RunConfig = DEFAULT_CONFIG) -> list[Check]:
    out = []
    for p in (1, 2, 3, 4):
        shapes = shape_cone_section(p)
        contents = content_cone_section(p)
        ok = True
        details = []
        for d in range(1, 7):
            e = schur_decompose(char_tensor_sym(p, d, p, config))
            c_cone = lattice_count(shapes, d, config)
            n_cone = lattice_count(contents, d, config)
            if not (c_cone == complexity(e) == count_partitions(p * d, p)):
                ok = False
                details.append(f"d={d} type count {c_cone}")
            if n_cone != total_multiplicity(e):
                ok = False
                details.append(f"d={d} multiplicity {n_cone}")
        out.append(Check(f"cone duality p={p} d<=6", ok,
                         "; ".join(details) or "lattice counts match characters"))
    for p in (1, 2, 3):
        ok = True
        details = []
        for d in range(1, 6):
            fibers: dict[tuple[int, ...], int] = {}
            for m in content_points_as_matrices(p, d, config):
                key = moment_map(m)
                fibers[key] = fibers.get(key, 0) + 1
            shape_points = set()
            for pt in _shape_points(p, d, config):
                shape_points.add(pt)
            if set(fibers) != shape_points:
                ok = False
                details.append(f"d={d} image mismatch")
            for key, size in fibers.items():
                lam = normalize((p * d - sum(key[:-1]),) + key[:-1])
                if size != kostka(lam, (d,) * p):
                    ok = False
                    details.append(f"d={d} fiber at {lam}")
        out.append(Check(f"moment fibers p={p} d<=5", ok,
                         "; ".join(details) or "fibers are Kostka numbers"))
    return out


def _shape_points(p: int, d: int, config: RunConfig):
    from veroschur.cones import enumerate_slice
    cone = shape_cone_section(p)
    for pt in enumerate_slice(cone, d, config):
        yield pt + (d,)


def suite_ratios(config: RunConfig = DEFAULT_CONFIG) -> list[Check]:
    out = []

    def trend(name: str, experiment: str, params: dict, ds: tuple[int, ...],
              tol: Fraction, improving: bool = True) -> None:
        table = ratio_experiment(experiment, params, ds, config)
        gaps = {row.d: abs(row.ratio - table.limit) / table.limit
                for row in table.rows}
        final = table.rows[-1]
        ok = _ratio_within(final.ratio, table.limit, tol)
        if improving and gaps[ds[-1]] >= gaps[ds[0]]:
            ok = False
        out.append(Check(name, ok,
                         f"ratio {final.ratio} vs limit {table.limit}, "
                         f"relative gap {float(gaps[ds[-1]]):.4f}"))

    trend("syzygy share p=1 within 10% of 1/2 at d=30",
          "syzygy-share", {"p": 1}, (10, 30), Fraction(1, 10))
    trend("syzygy share p=2 within 35% of 1/3 at d=10",
          "syzygy-share", {"p": 2}, (6, 10), Fraction(35, 100))
    trend("sym vs wedge within 5% at d=40",
          "sym-vs-wedge", {"p": 2}, (20, 40), Fraction(5, 100))
    trend("wedge-tensor share within 15% of 1/2 at d=20",
          "wedge-tensor-share", {"p": 2}, (10, 20), Fraction(15, 100))
    for b in (1, 2):
        trend(f"twist total b={b} within 10% at d=40",
              "twist-total", {"p": 2, "b": b}, (40,), Fraction(1, 10),
              improving=False)
        trend(f"twist types b={b} within 10% at d=40",
              "twist-types", {"p": 2, "b": b}, (40,), Fraction(1, 10),
              improving=False)
    return out


def suite_patterns(config: RunConfig = DEFAULT_CONFIG) -> list[Check]:
    out = []
    ok = True
    details = []
    for d in range(5, 31):
        closed = twin_pattern_count_closed(3, 1, d)[0]
        direct = twin_pattern_enumerate(3, 1, d)
        if closed != direct:
            ok = False
            details.append(f"d={d}: {closed} != {direct}")
    out.append(Check("twin census closed form vs enumeration p=3 b=1 d<=30",
                     ok, "; ".join(details) or "all equal"))
    counts = {}
    for n in (7, 10, 13):
        p = n - 1
        d = max(p + 2, 3 * ((p + 1) // (n - 3)) + 3)
        rep = almost_triplet_census(p, 1, n, d)
        counts[n] = rep.molds
    increasing = counts[7] < counts[10] < counts[13]
    out.append(Check("mold counts strictly increase over n in {7,10,13}",
                     increasing, str(counts)))
    rep = almost_triplet_census(6, 1, 7, 9)
    out.append(Check("distinct inputs give distinct molds at n-1=6",
                     rep.molds == rep.partitions,
                     f"{rep.partitions} partitions, {rep.molds} molds"))
    return out


def single_ratio_check(experiment: str, parameters: dict, d_max: int,
                       tolerance: Fraction = Fraction(1, 10),
                       config: RunConfig = DEFAULT_CONFIG) -> list[Check]:
    """Targeted trend check for one experiment at explicit parameters."""
    ds = tuple(sorted({max(2, d_max // 3), d_max}))
    table = ratio_experiment(experiment, parameters, ds, config)
    final = table.rows[-1]
    ok = _ratio_within(final.ratio, table.limit, tolerance)
    return [Check(f"{experiment} {parameters} at d={d_max}", ok,
                  f"ratio {final.ratio} vs limit {table.limit}, "
                  f"tolerance {tolerance}")]


SUITES = {
    "newell": suite_newell,
    "doubling": suite_doubling,
    "raicu": suite_raicu,
    "green": suite_green,
    "staircase": suite_staircase,
    "kostka-cone": suite_kostka_cone,
    "ratios": suite_ratios,
    "patterns": suite_patterns,
}


def run_suite(name: str, config: RunConfig = DEFAULT_CONFIG,
              theorem: str | None = None, parameters: dict | None = None,
              d_max: int | None = None) -> dict:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from "
                         f"{', '.join(sorted(SUITES))}")
    if theorem is not None:
        if name != "ratios":
            raise ValueError("--theorem only applies to the ratios suite")
        checks = single_ratio_check(theorem, parameters or {}, d_max or 20,
                                    config=config)
    else:
        checks = SUITES[name](config)
    return {
        "suite": name,
        "seed": config.seed,
        "checks": [asdict(c) for c in checks],
        "passed": all(c.passed for c in checks),
    }
