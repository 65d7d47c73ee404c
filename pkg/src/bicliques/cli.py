"""Command-line front end. Every subcommand prints one JSON (or DOT/CSV) document.

Examples::

    bicliques solve --problem wbcbs --sense max -k 2 -i inst.json
    bicliques skeleton --balanced -n 4 -k 2 --method criterion --format dot
    bicliques family --kind min -n 10 -k 12 --certify
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from . import families, matching, reductions, skeleton, solvers
from .core import BicliqueError, BipartiteGraph, Kind, Sense, enumerate_feasible, format_weight
from .serialization import (
    biclique_from_json,
    biclique_to_json,
    dumps,
    instance_from_json,
    instance_to_json,
    load_json,
    unweighted_from_json,
    unweighted_to_json,
    weights_to_json,
)

PROBLEM_KIND = {"wbcbs": Kind.BALANCED, "maxwcbs": Kind.UNBALANCED, "minwcbs": Kind.UNBALANCED}


class UsageError(BicliqueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _need(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"--{name.replace('_', '-')} is required")


def _feasible_from_args(args):
    _need(args, "n", "k")
    kind = Kind.UNBALANCED if args.unbalanced else Kind.BALANCED
    return enumerate_feasible(args.n, args.k, kind)


def _problem_sense(args) -> Sense:
    if args.problem == "maxwcbs":
        return Sense.MAX
    if args.problem == "minwcbs":
        return Sense.MIN
    return Sense(args.sense)


def cmd_solve(args):
    _need(args, "input", "k")
    g = instance_from_json(load_json(args.input))
    return solvers.solve(g, args.k, args.problem, Sense(args.sense)).to_json()


def _random_instance(rng: random.Random, n: int, problem: str) -> BipartiteGraph:
    lo = -5 if problem == "wbcbs" else 0
    rows = [[Fraction(rng.randint(lo, 9), rng.randint(1, 4)) for _ in range(n)] for _ in range(n)]
    if problem == "minwcbs":
        rows = [[w if rng.random() > 0.15 else "inf" for w in row] for row in rows]
    return BipartiteGraph(rows)


def cmd_oracle(args):
    sense = _problem_sense(args)
    kind = PROBLEM_KIND[args.problem]
    if args.input is not None:
        _need(args, "k")
        g = instance_from_json(load_json(args.input))
        sol = solvers.brute_force_oracle(g, args.k, kind, sense)
        fast = solvers.solve(g, args.k, args.problem, sense)
        return {**sol.to_json(), "solver_agrees": fast == sol}
    rng = random.Random(args.seed)
    checked, mismatches = 0, []
    for trial in range(args.trials):
        n = args.n if args.n is not None else rng.randint(1, 4)
        g = _random_instance(rng, n, args.problem)
        ks = range(1, n + 1) if kind is Kind.BALANCED else range(2, 2 * n + 1)
        for k in ks:
            a = solvers.solve(g, k, args.problem, sense)
            b = solvers.brute_force_oracle(g, k, kind, sense)
            checked += 1
            if a != b:
                mismatches.append({"trial": trial, "k": k, "instance": instance_to_json(g)})
    return {"checked": checked, "mismatches": mismatches, "seed": args.seed}


METHODS = {m.value: m for m in skeleton.Method}


def cmd_skeleton(args):
    feasible = _feasible_from_args(args)
    sg = skeleton.build_skeleton(feasible, METHODS[args.method], workers=args.threads)
    if args.format == "dot":
        return sg.to_dot()
    if args.format == "csv":
        return sg.to_csv()
    return sg.to_json()


def cmd_clique(args):
    feasible = _feasible_from_args(args)
    sg = skeleton.build_skeleton(feasible, METHODS[args.method], workers=args.threads)
    report = skeleton.max_clique(sg)
    return {**report.to_json(), "members": [biclique_to_json(feasible[i]) for i in report.witness]}


def _family(args):
    _need(args, "n", "k")
    if args.kind == "balanced":
        return families.family_balanced(args.n, args.k)
    if args.kind == "max":
        return families.family_max(args.n, args.k)
    return families.family_min(args.n, args.k)


def cmd_family(args):
    fam = _family(args)
    doc = {
        "kind": fam.kind.value,
        "n": fam.n,
        "k": fam.k,
        "bound": fam.bound,
        "members": [biclique_to_json(b) for b in fam.members],
    }
    if fam.m is not None:
        doc["m"] = fam.m
    if args.certify:
        certs = families.certify_family(fam)
        doc["certificates"] = [
            {
                "x": biclique_to_json(p.x),
                "y": biclique_to_json(p.y),
                "value": format_weight(p.value),
                "margin": format_weight(p.margin),
                "source": p.source,
                "weights": weights_to_json(p.weights, fam.n)["weights"],
            }
            for p in certs
        ]
        doc["all_certified"] = all(p.certified for p in certs)
    if args.format == "csv":
        return "u,v\n" + "".join(
            f"{' '.join(map(str, b.u))},{' '.join(map(str, b.v))}\n" for b in fam.members
        )
    return doc


def cmd_certify(args):
    _need(args, "input", "k", "x", "y")
    cert = instance_from_json(load_json(args.input))
    x = biclique_from_json(json.loads(args.x))
    y = biclique_from_json(json.loads(args.y))
    kind = Kind.BALANCED if args.kind == "balanced" else Kind.UNBALANCED
    sense = Sense.MIN if args.kind == "min" else Sense.MAX
    feasible = enumerate_feasible(cert.n, args.k, kind)
    margin = skeleton.verify_certificate(cert.flat(), feasible.index(x), feasible.index(y), feasible, sense)
    return {"margin": format_weight(margin), "certified": bool(margin > 0), "sense": sense.value}


def cmd_reduce(args):
    _need(args, "input", "k")
    doc = load_json(args.input)
    if args.to == "qcover":
        h, q = reductions.minwcbs_to_qcover(instance_from_json(doc), args.k)
        return {**unweighted_to_json(h), "metadata": {"k": args.k, "q": q}}
    g = unweighted_from_json(doc)
    fn = reductions.bcbs_to_wbcbs if args.to == "wbcbs" else reductions.bcbs_to_maxwcbs
    out = fn(g, args.k)
    return {**instance_to_json(out.instance), "metadata": out.metadata()}


def cmd_matching(args):
    _need(args, "input")
    g = unweighted_from_json(load_json(args.input))
    m = matching.max_matching(g)
    cover = matching.min_vertex_cover(g, m)
    left, right = matching.max_independent_set(g)
    best = matching.max_unbalanced_biclique_unweighted(g)
    return {
        "matching": sorted(list(p) for p in m.pairs),
        "cover": {"left": sorted(cover.left), "right": sorted(cover.right)},
        "independent_set": {"left": sorted(left), "right": sorted(right)},
        "max_biclique": biclique_to_json(best) if best else None,
    }


COMMANDS = {
    "solve": cmd_solve,
    "oracle": cmd_oracle,
    "skeleton": cmd_skeleton,
    "clique": cmd_clique,
    "family": cmd_family,
    "certify": cmd_certify,
    "reduce": cmd_reduce,
    "matching": cmd_matching,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-i", "--input")
    common.add_argument("-n", type=int)
    common.add_argument("-k", type=int)
    common.add_argument("--format", choices=["json", "dot", "csv"], default="json")
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--seed", type=int, default=0)

    parser = _Parser(prog="bicliques", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    for name in ("solve", "oracle"):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("--problem", choices=list(PROBLEM_KIND), required=True)
        p.add_argument("--sense", choices=["max", "min"], default="max")
        if name == "oracle":
            p.add_argument("--trials", type=int, default=20)

    for name in ("skeleton", "clique"):
        p = sub.add_parser(name, parents=[common])
        g = p.add_mutually_exclusive_group()
        g.add_argument("--balanced", action="store_true")
        g.add_argument("--unbalanced", action="store_true")
        p.add_argument("--method", choices=list(METHODS), default="criterion")

    p = sub.add_parser("family", parents=[common])
    p.add_argument("--kind", choices=["balanced", "max", "min"], required=True)
    p.add_argument("--certify", action="store_true")

    p = sub.add_parser("certify", parents=[common])
    p.add_argument("--kind", choices=["balanced", "max", "min"], required=True)
    p.add_argument("--x", help='biclique JSON, e.g. \'{"u": [0, 1], "v": [0, 1]}\'')
    p.add_argument("--y")

    p = sub.add_parser("reduce", parents=[common])
    p.add_argument("--to", choices=["wbcbs", "maxwcbs", "qcover"], required=True)

    sub.add_parser("matching", parents=[common])
    return parser


def run(argv=None) -> tuple[int, str, str]:
    """Execute one command; returns ``(exit_code, stdout, stderr)``."""
    try:
        args = build_parser().parse_args(argv)
        result = COMMANDS[args.command](args)
    except (BicliqueError, OSError, json.JSONDecodeError) as exc:
        err = {"error": type(exc).__name__, "message": str(exc)}
        return 2, dumps(err), f"error: {exc}\n"
    return 0, result if isinstance(result, str) else dumps(result), ""


def main(argv=None) -> int:
    code, out, err = run(argv)
    sys.stdout.write(out)
    if err:
        sys.stderr.write(err)
    return code


if __name__ == "__main__":
    sys.exit(main())
