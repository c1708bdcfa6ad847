"""Command-line front end with stable, machine-readable output.

Every run is deterministic given its flags. Exit codes: 0 success,
1 domain or usage error, 2 resource cap exceeded, 3 invariant violation.
The environment variable ZONOLAT_THREADS bounds internal parallelism
(currently used by `converge`); output never depends on it.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys

from .asymptotics import TableKind, convergence_table
from .errors import DomainError, InvariantViolationError, ResourceLimitError
from .extremal import DEFAULT_NODE_CAP, brute_force_max_diameter, special_box_optimum
from .graph import DEFAULT_GENERATOR_CAP, build_graph, graph_diameter
from .primitive import (
    DEFAULT_ENUM_CAP,
    Region,
    count_primitive,
    enumerate_primitive,
    norm_token,
    parse_norm,
)
from .zonotope import (
    counted_metrics,
    dominance_check,
    metrics,
    norm_sum_identity,
    orthant_split_check,
    positive_primitive_zonotope,
    primitive_zonotope,
    quadrant_identity_check,
    ball_split_check,
    random_generator_set,
)


class _UsageError(Exception):
    def __init__(self, message: str, usage: str):
        super().__init__(message)
        self.usage = usage


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit(2); the contract wants 1
        raise _UsageError(message, self.format_usage())


def _round12(x: float) -> float:
    return float(f"{x:.12g}")


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def _dump_json(obj, path: str | None) -> None:
    _emit(json.dumps(obj, indent=2) + "\n", path)


def _csv_lines(header: str, rows: list[str]) -> str:
    return "\n".join([header] + rows) + "\n"


def _common_flags() -> argparse.ArgumentParser:
    c = argparse.ArgumentParser(add_help=False)
    c.add_argument("--format", choices=("json", "csv"), default="json")
    c.add_argument("-o", "--output", metavar="PATH", help="write to PATH instead of stdout")
    return c


def _add_dpq(p: argparse.ArgumentParser, radius_help: str = "ball radius") -> None:
    p.add_argument("-d", type=int, required=True, help="dimension")
    p.add_argument("-p", type=int, required=True, help=radius_help)
    p.add_argument("-q", default="1", help="norm: 1, 2, ..., or inf")


# ---------------------------------------------------------------- commands


def _cmd_enumerate(args) -> int:
    vectors = enumerate_primitive(
        args.d, args.p, parse_norm(args.q), Region(args.region), args.cap
    )
    if args.format == "csv":
        _emit(_csv_lines(",".join(f"x{i}" for i in range(args.d)),
                         [",".join(map(str, v)) for v in vectors]), args.output)
    else:
        _dump_json([list(v) for v in vectors], args.output)
    return 0


def _cmd_count(args) -> int:
    report = count_primitive(
        args.d, args.p, parse_norm(args.q), Region(args.region), args.method, args.cap
    )
    rep = report.as_dict()
    if args.format == "csv":
        _emit(_csv_lines("d,p,q,region,count,method",
                         [",".join(str(rep[k]) for k in ("d", "p", "q", "region", "count", "method"))]),
              args.output)
    else:
        _dump_json(rep, args.output)
    return 0


def _cmd_zonotope(args) -> int:
    q = parse_norm(args.q)
    via = args.via
    if via == "auto":
        via = "sieve" if (q == 1 and not args.positive and args.d >= 2) else "enumeration"
    if via == "sieve":
        if q != 1 or args.positive:
            raise DomainError("sieve metrics cover the plain 1-norm zonotope only")
        m = counted_metrics(args.d, args.p)
    else:
        builder = positive_primitive_zonotope if args.positive else primitive_zonotope
        m = metrics(builder(args.d, args.p, q, args.cap))
    rep = m.as_dict()
    if args.format == "csv":
        _emit(_csv_lines("diameter,widths,k",
                         [f"{rep['diameter']},{' '.join(map(str, rep['widths']))},{rep['k']}"]),
              args.output)
    else:
        _dump_json(rep, args.output)
    return 0


def _cmd_graph_check(args) -> int:
    q = parse_norm(args.q)
    builder = positive_primitive_zonotope if args.positive else primitive_zonotope
    zono = builder(args.d, args.p, q, args.cap)
    g = build_graph(zono, args.max_generators)
    diam = graph_diameter(g)
    ok = diam == len(zono)
    rep = {
        "generators": len(zono),
        "vertices": len(g.sign_vectors),
        "edges": len(g.edges),
        "diameter": diam,
        "ok": ok,
    }
    if args.dump_graph:
        rep["graph"] = g.as_dict()
    _dump_json(rep, args.output)
    return 0 if ok else 3


def _verify_norm_sum(d: int, p_max: int) -> list[tuple[bool, str]]:
    out = []
    for p in range(1, p_max + 1):
        r = norm_sum_identity(d, p)
        out.append((r.equal, f"norm-sum d={d} p={p}: k*d={r.lhs} rhs={r.rhs}"))
    return out


def _verify_split(d: int, p_max: int, q, which: str) -> list[tuple[bool, str]]:
    check = orthant_split_check if which == "orthant-split" else ball_split_check
    out = []
    for p in range(1, p_max + 1):
        out.append((check(d, p, q), f"{which} d={d} p={p} q={norm_token(q)}"))
    return out


def _verify_base_case(p_max: int, q) -> list[tuple[bool, str]]:
    out = []
    for p in range(1, p_max + 1):
        out.append((quadrant_identity_check(p, q), f"base-case p={p} q={norm_token(q)}"))
    return out


def _verify_dominance(
    d: int, samples: int, seed: int, p_max: int, norm_max: int, m_max: int
) -> list[tuple[bool, str]]:
    rng = random.Random(seed)
    out = []
    for i in range(samples):
        zono = random_generator_set(rng, d, norm_max, m_max)
        for p in range(1, p_max + 1):
            try:
                verdict = dominance_check(zono, p)
                out.append((True, f"dominance d={d} sample={i} p={p}: {verdict.value}"))
            except InvariantViolationError as exc:
                out.append((False, f"dominance d={d} sample={i} p={p}: VIOLATION {exc}"))
    return out


def _cmd_verify(args) -> int:
    q = parse_norm(args.q)
    checks: list[tuple[bool, str]] = []
    suite = args.suite
    if suite in ("norm-sum", "all"):
        checks += _verify_norm_sum(args.d, args.p_max if args.p_max else 10)
    if suite in ("orthant-split", "all"):
        checks += _verify_split(args.d, args.p_max if args.p_max else 6, q, "orthant-split")
    if suite in ("ball-split", "all"):
        checks += _verify_split(args.d, args.p_max if args.p_max else 6, q, "ball-split")
    if suite in ("base-case", "all"):
        checks += _verify_base_case(args.p_max if args.p_max else 50, q)
    if suite in ("dominance", "all"):
        dom_p_max = 3 if suite == "all" else (args.p_max or 3)
        checks += _verify_dominance(
            args.d, args.samples, args.seed, dom_p_max, args.norm_max, args.m_max
        )
    lines = [("ok " if ok else "FAIL ") + text for ok, text in checks]
    passed = sum(1 for ok, _ in checks if ok)
    lines.append(f"{passed}/{len(checks)} identities hold")
    _emit("\n".join(lines) + "\n", args.output)
    return 0 if passed == len(checks) else 3


def _cmd_converge(args) -> int:
    q = parse_norm(args.q)
    try:
        p_list = [int(tok) for tok in args.p_values.split(",") if tok.strip()]
    except ValueError:
        raise DomainError(f"cannot parse radius list {args.p_values!r}") from None
    workers = _threads_from_env()
    rows = convergence_table(args.d, q, p_list, TableKind(args.which), args.cap, workers)
    if args.format == "csv":
        body = [
            f"{r.p},{r.empirical:.12g},{r.limit:.12g},{r.relative_gap:.12g}" for r in rows
        ]
        _emit(_csv_lines("p,empirical,limit,relative_gap", body), args.output)
    else:
        _dump_json(
            [
                {
                    "p": r.p,
                    "empirical": _round12(r.empirical),
                    "limit": _round12(r.limit),
                    "relative_gap": _round12(r.relative_gap),
                }
                for r in rows
            ],
            args.output,
        )
    return 0


def _cmd_extremal(args) -> int:
    if args.brute_force:
        if args.k is None:
            raise DomainError("--brute-force requires -k")
        result = brute_force_max_diameter(
            args.d, args.k, node_cap=args.node_cap, enum_cap=args.cap, force=args.force
        )
        _dump_json(result.as_dict(), args.output)
        return 0 if result.search_exhaustive else 2
    if args.p is None:
        raise DomainError("need -p for the special route or --brute-force with -k")
    k, diameter = special_box_optimum(args.d, args.p)
    _dump_json({"d": args.d, "p": args.p, "k": k, "diameter": diameter}, args.output)
    return 0


def _cmd_table(args) -> int:
    rows = [(p,) + tuple(_km(args.d, p)) for p in range(1, args.p_max + 1)]
    if args.format == "csv":
        _emit(_csv_lines("p,k,delta", [f"{p},{k},{delta}" for p, k, delta in rows]), args.output)
    else:
        _dump_json([{"p": p, "k": k, "delta": delta} for p, k, delta in rows], args.output)
    return 0


def _km(d: int, p: int) -> tuple[int, int]:
    m = counted_metrics(d, p)
    return m.k, m.diameter


def _threads_from_env() -> int:
    raw = os.environ.get("ZONOLAT_THREADS", "1")
    try:
        workers = int(raw)
    except ValueError:
        raise DomainError(f"ZONOLAT_THREADS must be an integer, got {raw!r}") from None
    if workers < 1:
        raise DomainError(f"ZONOLAT_THREADS must be >= 1, got {workers}")
    return workers


# ---------------------------------------------------------------- parser


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="zonolat",
        description="Exact primitive-zonotope toolkit: counts, metrics, graphs,"
        " identities, convergence tables, extremal search.",
    )
    common = _common_flags()
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    region_values = [r.value for r in Region]

    p_enum = sub.add_parser("enumerate", parents=[common], help="list primitive points")
    _add_dpq(p_enum)
    p_enum.add_argument("--region", choices=region_values, default="canonical_half")
    p_enum.add_argument("--cap", type=int, default=DEFAULT_ENUM_CAP)
    p_enum.set_defaults(func=_cmd_enumerate)

    p_count = sub.add_parser("count", parents=[common], help="count primitive points")
    _add_dpq(p_count)
    p_count.add_argument("--region", choices=region_values, default="canonical_half")
    p_count.add_argument("--method", choices=("auto", "sieve", "enumeration"), default="auto")
    p_count.add_argument("--cap", type=int, default=DEFAULT_ENUM_CAP)
    p_count.set_defaults(func=_cmd_count)

    p_zono = sub.add_parser("zonotope", parents=[common], help="metrics of a primitive zonotope")
    _add_dpq(p_zono)
    p_zono.add_argument("--positive", action="store_true", help="orthant variant")
    p_zono.add_argument("--via", choices=("auto", "enumeration", "sieve"), default="auto")
    p_zono.add_argument("--cap", type=int, default=DEFAULT_ENUM_CAP)
    p_zono.set_defaults(func=_cmd_zonotope)

    p_graph = sub.add_parser("graph-check", parents=[common],
                             help="build the vertex graph and check diameter = generators")
    _add_dpq(p_graph)
    p_graph.add_argument("--positive", action="store_true")
    p_graph.add_argument("--max-generators", type=int, default=DEFAULT_GENERATOR_CAP)
    p_graph.add_argument("--dump-graph", action="store_true", help="include vertices and edges")
    p_graph.add_argument("--cap", type=int, default=DEFAULT_ENUM_CAP)
    p_graph.set_defaults(func=_cmd_graph_check)

    p_verify = sub.add_parser("verify", parents=[common], help="run exact-identity suites")
    p_verify.add_argument(
        "suite",
        choices=("norm-sum", "orthant-split", "ball-split", "base-case", "dominance", "all"),
    )
    p_verify.add_argument("-d", type=int, default=2)
    p_verify.add_argument("-q", default="1")
    p_verify.add_argument("--p-max", type=int, default=0, help="largest radius (0 = suite default)")
    p_verify.add_argument("--samples", type=int, default=50)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--norm-max", type=int, default=5)
    p_verify.add_argument("--m-max", type=int, default=9)
    p_verify.set_defaults(func=_cmd_verify)

    p_conv = sub.add_parser("converge", parents=[common], help="empirical-vs-limit table")
    p_conv.add_argument("-d", type=int, required=True)
    p_conv.add_argument("-q", default="1")
    p_conv.add_argument("--which", choices=[k.value for k in TableKind], default="diameter")
    p_conv.add_argument("--p-values", required=True, help="comma-separated radii")
    p_conv.add_argument("--cap", type=int, default=DEFAULT_ENUM_CAP)
    p_conv.set_defaults(func=_cmd_converge)

    p_ext = sub.add_parser("extremal", parents=[common], help="largest diameter in [0,k]^d")
    p_ext.add_argument("-d", type=int, required=True)
    p_ext.add_argument("-k", type=int)
    p_ext.add_argument("-p", type=int)
    p_ext.add_argument("--brute-force", action="store_true")
    p_ext.add_argument("--node-cap", type=int, default=DEFAULT_NODE_CAP)
    p_ext.add_argument("--force", action="store_true", help="lift the default (d, k) envelope")
    p_ext.add_argument("--cap", type=int, default=DEFAULT_ENUM_CAP)
    p_ext.set_defaults(func=_cmd_extremal)

    p_table = sub.add_parser("table", parents=[common], help="(p, k, delta) rows of the 1-norm family")
    p_table.add_argument("-d", type=int, required=True)
    p_table.add_argument("--p-max", type=int, required=True)
    p_table.set_defaults(func=_cmd_table)

    return parser


def run(argv: list[str]) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        sys.stderr.write(exc.usage)
        sys.stderr.write(f"zonolat: error: {exc}\n")
        return 1
    except SystemExit as exc:  # argparse -h
        return int(exc.code or 0)
    try:
        return args.func(args)
    except DomainError as exc:
        sys.stderr.write(f"zonolat: error: {exc}\n")
        return 1
    except ResourceLimitError as exc:
        sys.stderr.write(f"zonolat: resource limit: {exc}\n")
        return 2
    except InvariantViolationError as exc:
        sys.stderr.write(f"zonolat: invariant violation: {exc}\n")
        return 3


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
