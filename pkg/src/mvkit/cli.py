"""mvkit command-line interface.

Single-invocation batch tool over the library: dimensions, bounds, ideal
generators, special equations, and the empirical moment pipeline.  Output is
plain text or a single JSON document validating against mvkit.schema; runs
with the same --seed are byte-identical.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys

from . import equations as eq
from . import secant, stats, toric
from .errors import InternalInvariantError, MvkitError, PreconditionError
from .exact import DEFAULT_PRIME, is_prime
from .model import Partition, VarietySpec, format_index, parse_index
from .schema import SCHEMA_ID


def _parse_partition(text: str, n: int) -> Partition:
    return Partition(parse_index(text), n)


def _spec_from_args(args, r: int = 1) -> VarietySpec:
    if getattr(args, "lam", None):
        return VarietySpec.stratum(args.n, parse_index(args.lam), r=r)
    if getattr(args, "d", None) is None:
        raise PreconditionError("give either --d or --lambda")
    return VarietySpec.full_degree(args.n, args.d, r=r)


def _emit(args, doc: dict, text_lines: list[str]) -> int:
    if args.output == "json":
        print(json.dumps(doc, sort_keys=True))
    else:
        for line in text_lines:
            print(line)
    return 0


def _cmd_dim_toric(args, rng) -> int:
    spec = _spec_from_args(args)
    dim = secant.dim_rank_one(spec)
    check = toric.dim_from_a_matrix(spec)
    doc = {
        "schema": SCHEMA_ID,
        "command": "dim.toric",
        "n": args.n,
        "variety": spec.label(),
        "dim": dim,
        "dim_rank_check": check,
    }
    return _emit(args, doc, [f"dim {spec.label()} = {dim} (rank check {check})"])


def _cmd_dim_secant(args, rng) -> int:
    spec = _spec_from_args(args, r=args.r)
    dims = secant.dim_secant_trials(spec, args.trials, rng, prime=args.prime)
    dim = max(dims)
    doc = {
        "schema": SCHEMA_ID,
        "command": "dim.secant",
        "n": args.n,
        "r": args.r,
        "variety": spec.label(),
        "dim": dim,
        "trial_dims": dims,
        "trials_agree": len(set(dims)) == 1,
    }
    lines = [f"dim {spec.label()} = {dim} (trials: {dims})"]
    if len(set(dims)) > 1:
        lines.append("warning: trials disagree; reporting the maximum")
    return _emit(args, doc, lines)


def _cmd_bound(args, rng) -> int:
    n, d, r = args.n, args.d, args.r
    methods = (
        [args.method]
        if args.method
        else ["expected", "greedy", "ilp", "tropical"]
    )
    bounds: dict = {}
    lines = []
    for method in methods:
        if method == "expected":
            bounds["expected"] = secant.bound_expected(n, d, r)
        elif method == "greedy":
            result = secant.greedy_ilp(n, d, r)
            bounds["greedy"] = result.value
            bounds["greedy_c"] = list(result.c)
            if args.certify:
                inst = secant.IlpInstance.build(n, d, r)
                cert = secant.certify_greedy(inst, result.c)
                bounds["certificate"] = {
                    "saturated_set": sorted(cert.saturated_set),
                    "z": list(cert.z),
                    "objective": cert.objective,
                }
        elif method == "ilp":
            bounds["ilp"] = secant.bound_ilp_exhaustive(n, d, r)
        elif method == "tropical":
            if 1 <= d <= n - 1:
                bounds["tropical_ok"] = secant.tropical_guarantee(n, d, r)
            else:
                bounds["tropical_ok"] = None
    for key, val in bounds.items():
        lines.append(f"{key}: {val}")
    doc = {
        "schema": SCHEMA_ID,
        "command": "bound",
        "n": n,
        "d": d,
        "r": r,
        "bounds": bounds,
    }
    return _emit(args, doc, lines)


def _cmd_ideal(args, rng) -> int:
    spec = _spec_from_args(args)
    report = toric.ideal_generators_up_to(spec, args.max_degree)
    payload = report.to_json()
    doc = {"schema": SCHEMA_ID, "command": "ideal", **payload}
    if args.json_path:
        with open(args.json_path, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, sort_keys=True, indent=2)
    lines = [f"{report.variety}, generators up to degree {report.max_degree}:"]
    for deg, count in sorted(report.counts.items()):
        lines.append(f"  degree {deg}: {count}")
    return _emit(args, doc, lines)


def _cmd_degree(args, rng) -> int:
    value = toric.hypersimplex_degree(args.n, args.d)
    doc = {
        "schema": SCHEMA_ID,
        "command": "degree.hypersimplex",
        "n": args.n,
        "d": args.d,
        "degree": value,
    }
    return _emit(args, doc, [f"degree Delta({args.n},{args.d}) variety = {value}"])


_EQUATION_SPECS = {
    "pentad": lambda: [("pentad[0..4]", eq.pentad(range(5)))],
    "quartic": lambda: [("quadrilateral_quartic", eq.quadrilateral_set_quartic())],
    "m33": lambda: [("m33_cubic", eq.m33_cubic())],
    "m44": lambda: [
        (f"m44_cubic_{i + 1}", p) for i, p in enumerate(eq.sigma2_m44_cubics())
    ],
    "minors63": lambda: [
        (f"hankel63_3x3_{i + 1}", p)
        for i, p in enumerate(eq.visible_minors(eq.masked_hankel_63(), 3))
    ],
    "minors53": lambda: [
        (f"matrix53_3x3_{i + 1}", p)
        for i, p in enumerate(eq.visible_minors(eq.masked_matrix_53(), 3))
    ],
}

_EQUATION_VARIETY = {
    "pentad": lambda r: VarietySpec.stratum(5, (1, 1), r=r or 2),
    "quartic": lambda r: VarietySpec.stratum(6, (1, 1, 1), r=r or 3),
    "m33": lambda r: VarietySpec.full_degree(3, 3, r=r or 1),
    "m44": lambda r: VarietySpec.full_degree(4, 4, r=r or 2),
    "minors63": lambda r: VarietySpec.stratum(6, (1, 1, 1), r=r or 2),
    "minors53": lambda r: VarietySpec.full_degree(5, 3, r=r or 2),
}


def _cmd_equations(args, rng) -> int:
    named = _EQUATION_SPECS[args.which]()
    entries = []
    lines = []
    spec = _EQUATION_VARIETY[args.which](args.r) if args.verify else None
    for name, poly in named:
        entry = {"name": name, **poly.to_json()}
        line = f"{name}: {len(poly.terms)} terms, degree {poly.degree}"
        if spec is not None:
            verdict = eq.verify_vanishing(
                poly, spec, trials=args.trials, rng=rng, primes=[args.prime]
            )
            entry["vanishes_on"] = spec.label()
            entry["vanishes"] = verdict.vanishes
            line += f", vanishes on {spec.label()}: {verdict.vanishes}"
        entries.append(entry)
        lines.append(line)
    doc = {
        "schema": SCHEMA_ID,
        "command": "equations",
        "name": args.which,
        "polynomials": entries,
    }
    return _emit(args, doc, lines)


def _cmd_moments(args, rng) -> int:
    data = stats.read_samples(args.csv)
    lam = parse_index(args.lam) if args.lam else None
    moments = stats.empirical_moments(
        data, d=args.d, lam=lam
    )
    doc = {
        "schema": SCHEMA_ID,
        "command": "moments",
        "n": data.n,
        "T": data.T,
        "moments": {format_index(k): v for k, v in moments.values.items()},
    }
    lines = [f"read {data.T} samples of dimension {data.n}"]
    if args.test:
        statistics = stats.test_statistics(moments, args.test)
        doc["statistics"] = {name: value for name, value in statistics}
        lines += [f"{name} = {value:.6g}" for name, value in statistics]
    if args.hamburger is not None:
        verdicts = stats.hamburger_check(data, args.hamburger)
        doc["hamburger"] = verdicts
        lines += [
            f"coordinate {k}: {'PASS' if ok else 'FAIL'}"
            for k, ok in enumerate(verdicts)
        ]
    return _emit(args, doc, lines)


def _cmd_sweep(args, rng) -> int:
    rows = secant.conjecture_sweep(
        args.kind,
        range(2, args.n_max + 1),
        range(2, args.d_max + 1),
        range(1, args.r_max + 1),
        trials=args.trials,
        rng=rng,
    )
    doc = {"schema": SCHEMA_ID, "command": "sweep", "kind": args.kind, "rows": rows}
    lines = [
        "n=%(n)d d=%(d)d r=%(r)d dim=%(dim_numeric)d match=%(match)s" % row
        for row in rows
    ]
    return _emit(args, doc, lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mvkit",
        description="Exact toolkit for moment varieties of product mixtures.",
    )
    parser.add_argument(
        "--seed",
        type=int,
        default=int(os.environ.get("MVKIT_SEED", 42)),
        help="seed for all randomized operations (env MVKIT_SEED)",
    )
    parser.add_argument(
        "--prime",
        type=int,
        default=int(os.environ.get("MVKIT_PRIME", DEFAULT_PRIME)),
        help="default prime modulus (env MVKIT_PRIME)",
    )
    parser.add_argument(
        "--output", choices=("json", "text"), default="text", help="output format"
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    dim = sub.add_parser("dim", help="variety dimensions")
    dim_sub = dim.add_subparsers(dest="dim_cmd", required=True)
    p = dim_sub.add_parser("toric", help="rank-one dimension, formula and rank check")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int)
    p.add_argument("--lambda", dest="lam")
    p.set_defaults(func=_cmd_dim_toric)
    p = dim_sub.add_parser("secant", help="Jacobian-rank dimension of a mixture")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int)
    p.add_argument("--lambda", dest="lam")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--trials", type=int, default=3)
    p.set_defaults(func=_cmd_dim_secant)

    p = sub.add_parser("bound", help="upper bounds for secant dimensions")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--method", choices=("expected", "ilp", "greedy", "tropical"))
    p.add_argument("--certify", action="store_true")
    p.set_defaults(func=_cmd_bound)

    p = sub.add_parser("ideal", help="minimal binomial generators")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int)
    p.add_argument("--lambda", dest="lam")
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument("--json", dest="json_path")
    p.set_defaults(func=_cmd_ideal)

    deg = sub.add_parser("degree", help="toric degrees")
    deg_sub = deg.add_subparsers(dest="degree_cmd", required=True)
    p = deg_sub.add_parser("hypersimplex", help="normalized hypersimplex volume")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=_cmd_degree)

    p = sub.add_parser("equations", help="special defining polynomials")
    p.add_argument("which", choices=sorted(_EQUATION_SPECS))
    p.add_argument("--verify", action="store_true")
    p.add_argument("--r", type=int)
    p.add_argument("--trials", type=int, default=20)
    p.set_defaults(func=_cmd_equations)

    p = sub.add_parser("moments", help="empirical moment pipeline")
    p.add_argument("--csv", required=True)
    p.add_argument("--d", type=int)
    p.add_argument("--lambda", dest="lam")
    p.add_argument("--test", help="comma-separated statistics, e.g. pentad,m33")
    p.add_argument("--hamburger", type=int)
    p.set_defaults(func=_cmd_moments)

    p = sub.add_parser("sweep", help="numeric dimension vs conjectured value")
    p.add_argument("--kind", choices=("full", "hypersimplex"), required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--d-max", type=int, required=True)
    p.add_argument("--r-max", type=int, required=True)
    p.add_argument("--trials", type=int, default=3)
    p.set_defaults(func=_cmd_sweep)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not is_prime(args.prime) or args.prime >= 2**62:
        print(f"error: --prime {args.prime} is not an odd prime < 2^62", file=sys.stderr)
        return 2
    rng = random.Random(args.seed)
    try:
        return args.func(args, rng)
    except InternalInvariantError as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return 3
    except (MvkitError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
