"""Command line interface.

Subcommands: decompose (plethysm characters), syzygy (Koszul cohomology),
cones (lattice counts with cross-checks and leading-coefficient fits), and
verify (named check suites).  Output is deterministic for a fixed
configuration: JSON keys are sorted, counts are decimal strings, and no
timestamps are emitted.

Exit codes: 0 success, 1 check failure, 2 invalid arguments, 3 resource
cap exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from math import comb

from veroschur.characters import (SchurExpansion, char_sym_sym, char_tensor_sym,
                                  char_wedge_sym, complexity, schur_decompose,
                                  tensor_with_sym, total_multiplicity)
from veroschur.cones import (content_cone_section, fit_leading_coefficient,
                             lattice_count, shape_cone_section)
from veroschur.config import CapExceeded, RunConfig
from veroschur.koszul import KoszulSpec, syzygy_decompose
from veroschur.partitions import count_partitions
from veroschur.verify import SUITES, run_suite

EXIT_OK, EXIT_CHECK, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("json", "csv", "pretty"),
                        default="pretty", help="output format")
    parser.add_argument("--threads", type=int, default=None,
                        help="worker threads (default: VEROSCHUR_THREADS or all cores)")
    parser.add_argument("--seed", type=int, default=0, help="random seed")
    parser.add_argument("--max-entries", type=int, default=None,
                        help="cap on weight-table entries")
    parser.add_argument("--max-dim", type=int, default=None,
                        help="cap on matrix dimension")
    parser.add_argument("--max-nodes", type=int, default=None,
                        help="cap on enumeration nodes")
    parser.add_argument("--config", default=None,
                        help="key=value config file overriding defaults")
    parser.add_argument("--out", default=None, help="write output to a file")


def _build_config(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig()
    if args.config:
        with open(args.config) as fh:
            for line in fh:
                line = line.strip()
                if not line or line.startswith("#"):
                    continue
                key, _, value = line.partition("=")
                key = key.strip().replace("-", "_")
                if key in ("max_table_entries", "max_matrix_dim",
                           "max_enum_nodes", "threads", "seed"):
                    setattr(cfg, key, int(value.strip()))
                elif key == "format":
                    cfg.fmt = value.strip()
                else:
                    raise ValueError(f"unknown config key {key!r}")
    if args.max_entries is not None:
        cfg.max_table_entries = args.max_entries
    if args.max_dim is not None:
        cfg.max_matrix_dim = args.max_dim
    if args.max_nodes is not None:
        cfg.max_enum_nodes = args.max_nodes
    if args.threads is not None:
        cfg.threads = args.threads
    cfg.seed = args.seed
    cfg.fmt = args.format
    return cfg


def _expansion_payload(e: SchurExpansion) -> dict:
    return {
        "n": e.n,
        "degree": e.degree,
        "terms": [{"lambda": list(lam), "mult": str(c)}
                  for lam, c in e.terms.items()],
        "total_multiplicity": str(total_multiplicity(e)),
        "complexity": str(complexity(e)),
    }


def _emit(payload: dict, fmt: str, out_path: str | None,
          csv_rows: list[list[str]] | None = None) -> None:
    if fmt == "json":
        text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        for row in csv_rows or _payload_as_rows(payload):
            writer.writerow(row)
        text = buf.getvalue()
    else:
        text = _pretty(payload)
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _payload_as_rows(payload: dict) -> list[list[str]]:
    if "terms" in payload:
        rows = [["lambda", "mult"]]
        rows += [[" ".join(map(str, t["lambda"])), t["mult"]]
                 for t in payload["terms"]]
        rows.append(["total_multiplicity", payload["total_multiplicity"]])
        rows.append(["complexity", payload["complexity"]])
        return rows
    if "checks" in payload:
        rows = [["check", "passed", "detail"]]
        rows += [[c["name"], str(c["passed"]).lower(), c["detail"]]
                 for c in payload["checks"]]
        return rows
    raise ValueError("no CSV rendering for this payload")


def _pretty(payload: dict) -> str:
    lines = []
    if "terms" in payload:
        header = payload.get("command", "decomposition")
        lines.append(f"# {header}  n={payload['n']}  degree={payload['degree']}")
        if payload.get("truncation"):
            lines.append("# result is the length <= n truncation")
        for t in payload["terms"]:
            lam = "(" + ",".join(map(str, t["lambda"])) + ")"
            lines.append(f"{lam:<30} {t['mult']}")
        lines.append(f"N = {payload['total_multiplicity']}   "
                     f"c = {payload['complexity']}")
    elif "checks" in payload:
        lines.append(f"# suite {payload['suite']}")
        for c in payload["checks"]:
            mark = "PASS" if c["passed"] else "FAIL"
            lines.append(f"[{mark}] {c['name']}: {c['detail']}")
        lines.append("PASSED" if payload["passed"] else "FAILED")
    else:
        lines.append(json.dumps(payload, sort_keys=True, indent=2))
    return "\n".join(lines) + "\n"


def cmd_decompose(args: argparse.Namespace, cfg: RunConfig) -> int:
    n = args.n or (args.p + (1 if args.tensor_sym else 0))
    chars = {"tensor": char_tensor_sym, "sym": char_sym_sym,
             "wedge": char_wedge_sym}
    table = chars[args.kind](args.p, args.d, n, cfg)
    e = schur_decompose(table)
    if args.tensor_sym:
        e = tensor_with_sym(e, args.tensor_sym)
    payload = {"command": "decompose", "kind": args.kind,
               "parameters": {"p": args.p, "d": args.d, "n": n,
                              "tensor_sym": args.tensor_sym},
               **_expansion_payload(e)}
    _emit(payload, cfg.fmt, args.out)
    return EXIT_OK


def cmd_syzygy(args: argparse.Namespace, cfg: RunConfig) -> int:
    spec = KoszulSpec(args.p, args.q, args.b, args.d, args.n or 0)
    e = syzygy_decompose(spec, cfg)
    payload = {"command": "syzygy",
               "parameters": {"p": spec.p, "q": spec.q, "b": spec.b,
                              "d": spec.d, "n": spec.n},
               "truncation": not spec.is_faithful(),
               **_expansion_payload(e)}
    _emit(payload, cfg.fmt, args.out)
    return EXIT_OK


def cmd_cones(args: argparse.Namespace, cfg: RunConfig) -> int:
    p = args.p
    ds = list(range(args.d_min, args.d_max + 1, args.d_step))
    if not ds:
        raise ValueError("empty d range")
    shapes = shape_cone_section(p)
    contents = content_cone_section(p)
    rows = []
    mismatch = False
    for d in ds:
        e = schur_decompose(char_tensor_sym(p, d, p, cfg))
        shape_count = lattice_count(shapes, d, cfg)
        content_count = lattice_count(contents, d, cfg)
        c_ok = shape_count == complexity(e) == count_partitions(p * d, p)
        n_ok = content_count == total_multiplicity(e)
        mismatch = mismatch or not (c_ok and n_ok)
        rows.append({"d": d, "shape_count": str(shape_count),
                     "content_count": str(content_count),
                     "types_check": c_ok, "multiplicity_check": n_ok})
    fits = {}
    if len(ds) >= 2:
        for label, deg, key in (("types", p - 1, "shape_count"),
                                ("multiplicity", comb(p, 2), "content_count")):
            samples = [(r["d"], int(r[key])) for r in rows]
            if len(samples) >= deg + 2:
                fit = fit_leading_coefficient(samples, deg)
                fits[label] = {"degree": deg, "estimate": str(fit.estimate),
                               "relative_change": str(fit.relative_change)}
    payload = {"command": "cones", "parameters": {"p": p, "d_values": ds},
               "rows": rows, "fits": fits, "consistent": not mismatch}
    csv_rows = [["d", "shape_count", "content_count",
                 "types_check", "multiplicity_check"]]
    csv_rows += [[str(r["d"]), r["shape_count"], r["content_count"],
                  str(r["types_check"]).lower(), str(r["multiplicity_check"]).lower()]
                 for r in rows]
    for label, fit in sorted(fits.items()):
        csv_rows.append([f"fit_{label}_degree_{fit['degree']}",
                         fit["estimate"], fit["relative_change"], "", ""])
    _emit(payload, cfg.fmt, args.out, csv_rows=csv_rows)
    return EXIT_CHECK if mismatch else EXIT_OK


def cmd_verify(args: argparse.Namespace, cfg: RunConfig) -> int:
    params = {}
    if args.p is not None:
        params["p"] = args.p
    if args.b is not None:
        params["b"] = args.b
    payload = run_suite(args.suite, cfg, theorem=args.theorem,
                        parameters=params or None, d_max=args.d_max)
    _emit(payload, cfg.fmt, args.out)
    return EXIT_OK if payload["passed"] else EXIT_CHECK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="veroschur",
        description="Exact Schur decompositions of plethysms and Veronese "
                    "syzygies, cone lattice counts, and verification suites.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_dec = sub.add_parser("decompose", help="decompose a plethysm character")
    p_dec.add_argument("kind", choices=("tensor", "sym", "wedge"))
    p_dec.add_argument("-p", type=int, required=True, help="outer power")
    p_dec.add_argument("-d", type=int, required=True, help="inner degree")
    p_dec.add_argument("-n", type=int, default=None,
                       help="number of variables (default: faithful)")
    p_dec.add_argument("--tensor-sym", type=int, default=0, metavar="B",
                       help="tensor the result with Sym^B via horizontal strips")
    _add_common(p_dec)
    p_dec.set_defaults(fn=cmd_decompose)

    p_syz = sub.add_parser("syzygy", help="decompose a syzygy functor")
    p_syz.add_argument("-p", type=int, required=True)
    p_syz.add_argument("-q", type=int, required=True)
    p_syz.add_argument("-b", type=int, default=0)
    p_syz.add_argument("-d", type=int, required=True)
    p_syz.add_argument("-n", type=int, default=None,
                       help="number of variables (default: p+q+1)")
    _add_common(p_syz)
    p_syz.set_defaults(fn=cmd_syzygy)

    p_con = sub.add_parser("cones", help="lattice counts with cross-checks")
    p_con.add_argument("-p", type=int, required=True)
    p_con.add_argument("--d-min", type=int, required=True)
    p_con.add_argument("--d-max", type=int, required=True)
    p_con.add_argument("--d-step", type=int, default=1)
    _add_common(p_con)
    p_con.set_defaults(fn=cmd_cones)

    p_ver = sub.add_parser("verify", help="run a named check suite")
    p_ver.add_argument("suite", choices=sorted(SUITES))
    p_ver.add_argument("--theorem", default=None,
                       help="ratios suite: run a single named experiment")
    p_ver.add_argument("-p", type=int, default=None,
                       help="ratios suite: outer power for --theorem")
    p_ver.add_argument("-b", type=int, default=None,
                       help="ratios suite: twist degree for --theorem")
    p_ver.add_argument("--d-max", type=int, default=None,
                       help="ratios suite: largest level for --theorem")
    _add_common(p_ver)
    p_ver.set_defaults(fn=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _build_config(args)
        return args.fn(args, cfg)
    except CapExceeded as exc:
        print(f"resource cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
