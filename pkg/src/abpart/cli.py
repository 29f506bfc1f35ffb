"""Command-line front end.

Instance files are JSON::

    {"n": 5, "edges": [[0, 1, 1], ...], "a": [2, ...], "b": [2, ...]}

with ``0 <= u < v < n``, ``mult >= 1`` and each pair listed once. A
partition file for ``verify`` is ``{"A": [ids]}``; B is the complement.

Exit codes: 0 feasible / clean, 1 infeasible / unknown / not feasible,
2 malformed input or a strict validation abort.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from . import __version__
from .generators import FAMILIES, assign_spec, fixture, fixtures, gen_structure, inflate_multiplicities
from .multigraph import DegreeSpec, Instance, Multigraph
from .oracle import MAX_PARTITION_N, brute_partition
from .partition import Partition, deficiency, deficiency_breakdown
from .patterns import find_forbidden
from .solver import FEASIBLE, DEFAULT_MAX_EXACT, SolveOptions, solve, validate

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INVALID = 2


class InputError(ValueError):
    pass


def instance_to_json(inst: Instance) -> dict[str, Any]:
    return {
        "n": inst.graph.n,
        "edges": [[u, v, m] for u, v, m in inst.graph.edges()],
        "a": list(inst.spec.a),
        "b": list(inst.spec.b),
    }


def _int(x: Any, what: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise InputError(f"{what} must be an integer, got {x!r}")
    return x


def instance_from_json(obj: Any) -> Instance:
    if not isinstance(obj, dict):
        raise InputError("instance must be a JSON object")
    for key in ("n", "edges", "a", "b"):
        if key not in obj:
            raise InputError(f"instance is missing {key!r}")
    n = _int(obj["n"], "n")
    if n < 0:
        raise InputError("n must be nonnegative")
    seen = set()
    edges = []
    for e in obj["edges"]:
        if not isinstance(e, list) or len(e) != 3:
            raise InputError(f"edge must be [u, v, mult]: {e!r}")
        u, v, m = (_int(x, "edge entry") for x in e)
        if not 0 <= u < v < n:
            raise InputError(f"edge {e!r} must satisfy 0 <= u < v < n")
        if m < 1:
            raise InputError(f"edge {e!r} has multiplicity < 1")
        if (u, v) in seen:
            raise InputError(f"pair ({u}, {v}) listed twice")
        seen.add((u, v))
        edges.append((u, v, m))
    a = [_int(x, "a entry") for x in obj["a"]]
    b = [_int(x, "b entry") for x in obj["b"]]
    if len(a) != n or len(b) != n:
        raise InputError("a and b must have length n")
    return Instance(Multigraph(n, edges), DegreeSpec(a, b))


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=False) + "\n"


def _load_json(path: str) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def _load_instance(args: argparse.Namespace) -> Instance:
    if getattr(args, "fixture", None):
        try:
            return fixture(args.fixture)
        except KeyError as exc:
            raise InputError(str(exc.args[0])) from exc
    if not args.file:
        raise InputError("give an instance file or --fixture NAME")
    return instance_from_json(_load_json(args.file))


def cmd_solve(args: argparse.Namespace) -> int:
    inst = _load_instance(args)
    opts = SolveOptions(
        strict=args.strict,
        seed=args.seed,
        budget=args.budget,
        max_exact=args.max_exact,
    )
    report = solve(inst, opts)
    sys.stdout.write(dumps(report.to_json()))
    if report.stats.aborted:
        return EXIT_INVALID
    return EXIT_OK if report.status == FEASIBLE else EXIT_NEGATIVE


def cmd_verify(args: argparse.Namespace) -> int:
    inst = _load_instance(args)
    part = _load_json(args.partition)
    if not isinstance(part, dict) or not isinstance(part.get("A"), list):
        raise InputError('partition file must look like {"A": [ids]}')
    A = [_int(x, "partition entry") for x in part["A"]]
    try:
        p = Partition(inst.graph, A)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    g, spec = inst.graph, inst.spec
    d = deficiency(g, p, spec)
    out = {
        "feasible": d == 0,
        "deficiency": d,
        "A": sorted(p.A),
        "B": sorted(p.B),
        "shortfall": {str(v): s for v, s in deficiency_breakdown(g, p, spec).items()},
    }
    sys.stdout.write(dumps(out))
    return EXIT_OK if d == 0 else EXIT_NEGATIVE


def cmd_check(args: argparse.Namespace) -> int:
    inst = _load_instance(args)
    violations = validate(inst, strict=True)
    forbidden = find_forbidden(inst.graph)
    out = {
        "valid": not violations,
        "violations": [v.to_json() for v in violations],
        "forbidden_subgraph": forbidden.to_json() if forbidden is not None else None,
    }
    sys.stdout.write(dumps(out))
    return EXIT_OK if not violations else EXIT_INVALID


def cmd_gen(args: argparse.Namespace) -> int:
    g = gen_structure(args.n, args.density, args.seed, args.family)
    if args.max_mult > 1:
        g = inflate_multiplicities(g, args.max_mult, args.seed)
    spec = assign_spec(g, args.seed)
    if spec is None:
        print("warning: no admissible (a, b) for this graph; using a = b = 2", file=sys.stderr)
        spec = DegreeSpec.constant(g.n, 2, 2)
    sys.stdout.write(dumps(instance_to_json(Instance(g, spec))))
    return EXIT_OK


def cmd_oracle(args: argparse.Namespace) -> int:
    inst = _load_instance(args)
    if inst.n > MAX_PARTITION_N:
        raise InputError(f"oracle is capped at n={MAX_PARTITION_N}")
    verdict = brute_partition(inst)
    out = {
        "status": "feasible" if verdict.feasible else "infeasible",
        "A": sorted(verdict.A) if verdict.feasible else [],
        "B": sorted(verdict.B) if verdict.feasible else [],
    }
    sys.stdout.write(dumps(out))
    return EXIT_OK if verdict.feasible else EXIT_NEGATIVE


def _add_source(p: argparse.ArgumentParser) -> None:
    p.add_argument("file", nargs="?", help="instance JSON file")
    p.add_argument("--fixture", metavar="NAME", help=f"bundled instance: {', '.join(sorted(fixtures()))}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="abpart", description="(a,b)-feasible partitions of multigraphs"
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="find a feasible partition")
    _add_source(p)
    p.add_argument("--strict", action="store_true", help="abort on any hypothesis violation")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=None, help="move limit (default 200 n^2)")
    p.add_argument("--max-exact", type=int, default=DEFAULT_MAX_EXACT)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check a partition against an instance")
    _add_source(p)
    p.add_argument("--partition", required=True, help='JSON file {"A": [ids]}')
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("check", help="validate the instance hypotheses")
    _add_source(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("gen", help="generate a random instance")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-mult", type=int, default=1)
    p.add_argument("--density", type=float, default=1.0)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("oracle", help="exhaustive feasibility verdict (small n)")
    _add_source(p)
    p.set_defaults(func=cmd_oracle)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
