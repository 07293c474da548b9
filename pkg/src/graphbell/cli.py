"""Command-line surface: exact bounds, family table, verification, composition.

Exit codes: 0 success, 2 bound certifies no violation (D = 1), 3 size cap
exceeded, 4 parse/usage error, 5 verification or internal failure.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass
from fractions import Fraction

from .bounds import bridge_compose_bound
from .errors import CapExceededError, EdgeListParseError, InvalidGraphError
from .graph import (
    Graph,
    GraphFamily,
    build_family,
    local_complement,
    parse_edge_list,
    parse_graph6,
    render_edge_list,
)
from .lhv import (
    EXACT_SEARCH_CAP,
    UNREDUCED_SEARCH_CAP,
    apply_permutation,
    classical_bound,
    operator_bound,
)
from .oracle import DENSE_CAP, check_stabilized, quantum_bell_value
from .stabilizer import bell_terms
from .table import FAMILY_D, FAMILY_SIZES

EXIT_OK = 0
EXIT_NO_VIOLATION = 2
EXIT_CAP = 3
EXIT_PARSE = 4
EXIT_INTERNAL = 5

WORKERS_ENV = "GRAPHBELL_WORKERS"

_FAMILY_CODES = {f.value: f for f in GraphFamily}


@dataclass(frozen=True)
class RunConfig:
    """Resolved invocation: command, graph source, caps, workers, format."""

    command: str
    family: GraphFamily | None = None
    n: int | None = None
    edges_path: str | None = None
    graph6: str | None = None
    exact_cap: int = EXACT_SEARCH_CAP
    workers: int = 1
    fmt: str = "text"
    unreduced: bool = False
    method: str = "transform"
    check: bool = False
    reduced: bool = False
    exhaustive: bool = False
    vertex: int = 0


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit 2, which we reserve
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_PARSE)


def _add_graph_source(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", choices=sorted(_FAMILY_CODES), help="named family (lc, rc, st, fc)")
    p.add_argument("--n", type=int, help="vertex count for --family")
    p.add_argument("--edges", metavar="PATH", help="edge-list file")
    p.add_argument("--graph6", metavar="STR", help="graph6-encoded graph")


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--exact-cap", type=int, default=EXACT_SEARCH_CAP,
                   help=f"exact-search vertex cap (default {EXACT_SEARCH_CAP})")
    p.add_argument("--allow-large-cap", action="store_true",
                   help=f"permit --exact-cap above {EXACT_SEARCH_CAP} (memory grows as 4^n)")
    p.add_argument("--workers", type=int, default=None,
                   help=f"search workers (default ${WORKERS_ENV} or 1)")
    p.add_argument("--format", dest="fmt", choices=["text", "json", "csv"], default="text")


def _build_parser() -> _Parser:
    parser = _Parser(prog="graphbell", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bound", help="exact classical bound of one graph")
    _add_graph_source(p)
    _add_common(p)
    p.add_argument("--unreduced", action="store_true",
                   help=f"search all 8^n assignments instead of 4^n (n <= {UNREDUCED_SEARCH_CAP})")
    p.add_argument("--method", choices=["transform", "direct"], default="transform",
                   help="search engine (both exhaustive; direct honors --workers)")

    p = sub.add_parser("table", help="family-value table for 3..10 vertices")
    _add_common(p)
    p.add_argument("--check", action="store_true", help="compare against the golden values")
    p.add_argument("--reduced", action="store_true", help="print fractions in lowest terms")

    p = sub.add_parser("verify", help="oracle and invariance checks on one graph")
    _add_graph_source(p)
    _add_common(p)

    p = sub.add_parser("compose", help="bridge-composition upper bound")
    _add_graph_source(p)
    _add_common(p)
    p.add_argument("--exhaustive", action="store_true",
                   help="minimize over every bridge choice instead of greedy most-balanced")

    p = sub.add_parser("lc", help="local complementation; writes the new edge list")
    _add_graph_source(p)
    _add_common(p)
    p.add_argument("--vertex", type=int, required=True, help="complementation vertex")
    return parser


def _resolve_config(args: argparse.Namespace, parser: _Parser) -> RunConfig:
    if args.exact_cap > EXACT_SEARCH_CAP and not getattr(args, "allow_large_cap", False):
        parser.error(f"--exact-cap {args.exact_cap} exceeds {EXACT_SEARCH_CAP}; "
                     "pass --allow-large-cap to override")
    workers = args.workers
    if workers is None:
        workers = int(os.environ.get(WORKERS_ENV, "1"))
    if workers < 1:
        parser.error("--workers must be at least 1")
    family = _FAMILY_CODES[args.family] if getattr(args, "family", None) else None
    sources = [s for s in (family, getattr(args, "edges", None), getattr(args, "graph6", None)) if s]
    if args.command != "table":
        if len(sources) != 1:
            parser.error("exactly one of --family, --edges, --graph6 is required")
        if family is not None and getattr(args, "n", None) is None:
            parser.error("--family requires --n")
    return RunConfig(
        command=args.command,
        family=family,
        n=getattr(args, "n", None),
        edges_path=getattr(args, "edges", None),
        graph6=getattr(args, "graph6", None),
        exact_cap=args.exact_cap,
        workers=workers,
        fmt=args.fmt,
        unreduced=getattr(args, "unreduced", False),
        method=getattr(args, "method", "transform"),
        check=getattr(args, "check", False),
        reduced=getattr(args, "reduced", False),
        exhaustive=getattr(args, "exhaustive", False),
        vertex=getattr(args, "vertex", 0),
    )


def _load_graph(cfg: RunConfig) -> Graph:
    if cfg.family is not None:
        return build_family(cfg.family, cfg.n)
    if cfg.edges_path is not None:
        with open(cfg.edges_path, encoding="utf-8") as fh:
            return parse_edge_list(fh.read())
    return parse_graph6(cfg.graph6)


def _frac(d: Fraction) -> str:
    return f"{d.numerator}/{d.denominator}" if d.denominator > 1 else str(d.numerator)


def cmd_bound(cfg: RunConfig) -> int:
    g = _load_graph(cfg)
    report = classical_bound(
        g,
        pin_z=not cfg.unreduced,
        workers=cfg.workers,
        exact_cap=cfg.exact_cap,
        method=cfg.method,
    )
    payload = report.to_json_dict()
    if cfg.fmt == "json":
        print(json.dumps(payload, indent=2))
    elif cfg.fmt == "csv":
        keys = list(payload)
        print(",".join(keys))
        print(",".join(str(payload[k]) for k in keys))
    else:
        print(f"n = {report.n}")
        print(f"c = {report.c}")
        print(f"d = {_frac(report.d)}")
        print(f"argmax neg_x={report.argmax.neg_x:#x} neg_y={report.argmax.neg_y:#x} "
              f"neg_z={report.argmax.neg_z:#x}")
        print(f"search_space = {report.search_space}")
        print(f"method = {report.method}")
    return EXIT_NO_VIOLATION if report.d == 1 else EXIT_OK


def _table_values(cfg: RunConfig) -> dict[GraphFamily, dict[int, Fraction]]:
    return {
        fam: {n: classical_bound(build_family(fam, n), workers=cfg.workers).d for n in FAMILY_SIZES}
        for fam in GraphFamily
    }


def cmd_table(cfg: RunConfig) -> int:
    values = _table_values(cfg)
    if cfg.fmt == "json":
        payload = {
            fam.value: {str(n): [d.numerator, d.denominator] for n, d in row.items()}
            for fam, row in values.items()
        }
        print(json.dumps(payload, indent=2))
    elif cfg.fmt == "csv":
        print("family,n,d_num,d_den")
        for fam, row in values.items():
            for n, d in row.items():
                print(f"{fam.value},{n},{d.numerator},{d.denominator}")
    else:
        denoms = {
            n: math.lcm(*(values[fam][n].denominator for fam in GraphFamily))
            for n in FAMILY_SIZES
        }
        widths = {n: max(len(f"{values[f][n] * denoms[n]}/{denoms[n]}") for f in GraphFamily)
                  for n in FAMILY_SIZES}
        header = "n   " + "  ".join(str(n).ljust(widths[n]) for n in FAMILY_SIZES)
        print(header)
        for fam in GraphFamily:
            cells = []
            for n in FAMILY_SIZES:
                d = values[fam][n]
                if cfg.reduced:
                    cell = _frac(d)
                else:
                    cell = f"{d.numerator * (denoms[n] // d.denominator)}/{denoms[n]}"
                cells.append(cell.ljust(widths[n]))
            print(f"{fam.value}  " + "  ".join(cells))
    if cfg.check:
        mismatches = [
            (fam.value, n, values[fam][n], FAMILY_D[fam][n])
            for fam in GraphFamily
            for n in FAMILY_SIZES
            if values[fam][n] != FAMILY_D[fam][n]
        ]
        for fam, n, got, want in mismatches:
            print(f"MISMATCH {fam}_{n}: computed {_frac(got)}, expected {_frac(want)}",
                  file=sys.stderr)
        if mismatches:
            return EXIT_INTERNAL
        print("check: all entries match")
    return EXIT_OK


def _verify_checks(cfg: RunConfig, g: Graph) -> list[tuple[str, bool | None, str]]:
    """Run each verification; (name, passed-or-None-if-skipped, detail)."""
    checks: list[tuple[str, bool | None, str]] = []
    if g.n <= DENSE_CAP:
        residual = check_stabilized(g)
        checks.append(("stabilizer-eigenvalue", residual < 1e-12, f"max residual {residual:.3e}"))
        q = quantum_bell_value(g)
        checks.append(("quantum-bell-value", abs(q - (1 << g.n)) < 1e-9,
                       f"<B> = {q:.6f}, expected {1 << g.n}"))
    else:
        checks.append(("stabilizer-eigenvalue", None, f"skipped: n > dense cap {DENSE_CAP}"))
        checks.append(("quantum-bell-value", None, f"skipped: n > dense cap {DENSE_CAP}"))
    report = classical_bound(g, workers=cfg.workers, exact_cap=cfg.exact_cap)
    checks.append(("classical-bound", True, f"c = {report.c}, d = {_frac(report.d)}"))
    if g.n <= UNREDUCED_SEARCH_CAP:
        c_full, _, _ = operator_bound(bell_terms(g), pin_z=False,
                                      workers=cfg.workers)
        checks.append(("z-restriction-equivalence", c_full == report.c,
                       f"restricted c = {report.c}, unrestricted c = {c_full}"))
        permuted = apply_permutation(bell_terms(g), 0, "1YXZ")
        c_perm, _, _ = operator_bound(permuted, pin_z=False, workers=cfg.workers)
        checks.append(("observable-permutation-invariance", c_perm == report.c,
                       f"c after X<->Y swap on qubit 0 = {c_perm}"))
    else:
        detail = f"skipped: unrestricted search capped at n <= {UNREDUCED_SEARCH_CAP}"
        checks.append(("z-restriction-equivalence", None, detail))
        checks.append(("observable-permutation-invariance", None, detail))
    lc_report = classical_bound(local_complement(g, 0), workers=cfg.workers,
                                exact_cap=cfg.exact_cap)
    checks.append(("local-complementation-invariance", lc_report.c == report.c,
                   f"c at complemented vertex 0 = {lc_report.c}"))
    return checks


def cmd_verify(cfg: RunConfig) -> int:
    g = _load_graph(cfg)
    checks = _verify_checks(cfg, g)
    if cfg.fmt == "json":
        payload = [{"check": name, "passed": ok, "detail": detail} for name, ok, detail in checks]
        print(json.dumps(payload, indent=2))
    elif cfg.fmt == "csv":
        print("check,passed,detail")
        for name, ok, detail in checks:
            status = "skipped" if ok is None else str(ok).lower()
            print(f'{name},{status},"{detail}"')
    else:
        for name, ok, detail in checks:
            status = "SKIP" if ok is None else ("ok" if ok else "FAIL")
            print(f"{status:4s} {name}: {detail}")
    failed = [name for name, ok, _ in checks if ok is False]
    if failed:
        print(f"verification failed: {', '.join(failed)}", file=sys.stderr)
        return EXIT_INTERNAL
    return EXIT_OK


def cmd_compose(cfg: RunConfig) -> int:
    g = _load_graph(cfg)
    bound = bridge_compose_bound(g, exact_cap=cfg.exact_cap, exhaustive=cfg.exhaustive)
    payload = bound.to_json_dict()
    notes = _derivation_notes(payload["derivation"])
    if cfg.fmt == "json":
        print(json.dumps(payload, indent=2))
    elif cfg.fmt == "csv":
        print("value_num,value_den,is_exact")
        print(f"{bound.value.numerator},{bound.value.denominator},{bound.is_exact}")
    else:
        print(f"bound d <= {_frac(bound.value)}")
        print(f"exact = {bound.is_exact}")
        for note in notes:
            print(note)
    return EXIT_OK


def _derivation_notes(node: dict, depth: int = 0) -> list[str]:
    pad = "  " * depth
    if node["kind"] == "exact":
        num, den = node["d"]
        return [f"{pad}exact piece {node['vertices']}: d = {num}/{den}"]
    if node["kind"] == "bridge_product":
        lines = [f"{pad}bridge {tuple(node['bridge'])}:"]
        lines += _derivation_notes(node["left"], depth + 1)
        lines += _derivation_notes(node["right"], depth + 1)
        return lines
    num, den = node["d_sub"]
    return [
        f"{pad}piece {node['piece_vertices']}: {node['note']}",
        f"{pad}  induced subgraph {node['subgraph_vertices']} with d = {num}/{den}",
    ]


def cmd_lc(cfg: RunConfig) -> int:
    g = _load_graph(cfg)
    sys.stdout.write(render_edge_list(local_complement(g, cfg.vertex)))
    return EXIT_OK


_COMMANDS = {
    "bound": cmd_bound,
    "table": cmd_table,
    "verify": cmd_verify,
    "compose": cmd_compose,
    "lc": cmd_lc,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _resolve_config(args, parser)
        return _COMMANDS[cfg.command](cfg)
    except SystemExit:
        raise
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        print("hint: use `graphbell compose` for graphs beyond the exact cap", file=sys.stderr)
        return EXIT_CAP
    except (EdgeListParseError, InvalidGraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except AssertionError as exc:
        print(f"internal assertion failed: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
