"""Command-line front end.

Exit codes: 0 success, 1 domain or usage errors (bad spec, limit
exceeded), 2 when a verification run finds disagreeing counts.  The
ISOTEMP_HARD_CAP environment variable may lower (never raise) the
10-edge hard cap on enumeration.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass
from typing import Optional

from . import families, formulas
from .classes import (
    DEFAULT_EDGE_LIMIT,
    HARD_EDGE_CAP,
    brute_force_classes,
    compare_partitions,
    swap_closure_classes,
)
from .core import IsotemporalError, build_network, parse_network, serialize_network
from .families import Diaster, FamilySpec, generate, parse_family_spec, spec_string
from .iso import label_isomorphism_witness, temporal_isomorphism_witness
from .paths import temporal_paths

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_DISAGREE = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _hard_cap() -> int:
    raw = os.environ.get("ISOTEMP_HARD_CAP")
    if raw is None:
        return HARD_EDGE_CAP
    try:
        value = int(raw)
    except ValueError:
        raise IsotemporalError(f"ISOTEMP_HARD_CAP must be an integer, got {raw!r}") from None
    if value < 1:
        raise IsotemporalError(f"ISOTEMP_HARD_CAP must be >= 1, got {value}")
    return min(value, HARD_EDGE_CAP)


def _load_network(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return parse_network(fh.read())
    except OSError as exc:
        raise IsotemporalError(f"cannot read {path}: {exc}") from None


def _identity_network(spec: FamilySpec):
    graph = generate(spec)
    return build_network(graph, [(e, e + 1) for e in range(graph.edge_count)])


@dataclass(frozen=True)
class VerificationRow:
    """One family's cross-checked counts."""

    family: str
    formula: Optional[int]
    lattice: Optional[int]
    brute: int
    swap: int
    verdict: str
    elapsed: dict[str, float]


def verify(max_edges: int, limit_cap: Optional[int] = None) -> list[VerificationRow]:
    """Cross-check every applicable counting method over the family corpus."""
    cap = limit_cap if limit_cap is not None else _hard_cap()
    if max_edges > cap:
        raise IsotemporalError(f"max-edges {max_edges} exceeds the hard cap {cap}")
    rows = []
    for spec in families.enumerate_family_specs(max_edges):
        elapsed: dict[str, float] = {}

        def timed(name, fn):
            start = time.perf_counter()
            value = fn()
            elapsed[name] = time.perf_counter() - start
            return value

        formula = timed("formula", lambda: formulas.family_count(spec)).value
        lattice = None
        if isinstance(spec, Diaster):
            lattice = timed("lattice", lambda: formulas.lattice_count(spec.a, spec.b)).value
        graph = generate(spec)
        brute = timed("brute", lambda: brute_force_classes(graph, max_edges).class_count)
        swap = timed("swap", lambda: swap_closure_classes(graph, max_edges).class_count)
        computed = [v for v in (formula, lattice, brute, swap) if v is not None]
        if formula is None:
            verdict = "AGREE-partial" if brute == swap else "DISAGREE"
        else:
            verdict = "AGREE" if all(v == computed[0] for v in computed) else "DISAGREE"
        rows.append(VerificationRow(spec_string(spec), formula, lattice, brute, swap, verdict, elapsed))
    return rows


def _print_json(obj) -> None:
    print(json.dumps(obj, indent=2))


def _cmd_count(args) -> int:
    spec = parse_family_spec(args.family)
    limit = min(args.limit, _hard_cap())
    counts: dict[str, Optional[int]] = {}
    methods = ["formula", "lattice", "brute", "swap"] if args.method == "all" else [args.method]
    for method in methods:
        if method == "formula":
            counts["formula"] = formulas.family_count(spec).value
        elif method == "lattice":
            if isinstance(spec, Diaster):
                counts["lattice"] = formulas.lattice_count(spec.a, spec.b).value
            elif args.method == "lattice":
                counts["lattice"] = None
        elif method == "brute":
            counts["brute"] = brute_force_classes(generate(spec), limit).class_count
        elif method == "swap":
            counts["swap"] = swap_closure_classes(generate(spec), limit).class_count
    verdict = None
    if args.method == "all":
        computed = [v for v in counts.values() if v is not None]
        verdict = "AGREE" if all(v == computed[0] for v in computed) else "DISAGREE"
    if args.format == "json":
        payload = {"family": spec_string(spec), "counts": counts}
        if verdict is not None:
            payload["verdict"] = verdict
        _print_json(payload)
    elif args.method == "all":
        for method, value in counts.items():
            print(f"{method}: {'not-covered' if value is None else value}")
        print(f"verdict: {verdict}")
    else:
        value = counts[args.method]
        print("not-covered" if value is None else value)
    return EXIT_DISAGREE if verdict == "DISAGREE" else EXIT_OK


def _partition_payload(partition, representatives: bool):
    payload = {
        "method": partition.method,
        "count": partition.class_count,
        "sizes": list(partition.block_sizes),
    }
    if representatives:
        payload["representatives"] = [list(block[0]) for block in partition.blocks]
    return payload


def _cmd_classes(args) -> int:
    if args.family:
        graph = generate(parse_family_spec(args.family))
        name = args.family
    else:
        graph = _load_network(args.graph).graph
        name = args.graph
    limit = min(args.limit, _hard_cap())
    sections = []
    equal = None
    if args.method in ("brute", "both"):
        sections.append(brute_force_classes(graph, limit))
    if args.method in ("swap", "both"):
        sections.append(swap_closure_classes(graph, limit))
    if args.method == "both":
        equal = compare_partitions(graph, limit).equal
    if args.format == "json":
        payload = {"graph": name, "partitions": [_partition_payload(p, args.representatives) for p in sections]}
        if equal is not None:
            payload["equal"] = equal
        _print_json(payload)
    else:
        print(f"graph: {name}")
        for partition in sections:
            print(f"method: {partition.method}")
            print(f"classes: {partition.class_count}")
            print(f"sizes: {' '.join(str(s) for s in partition.block_sizes)}")
            if args.representatives:
                for block in partition.blocks:
                    print(f"representative: {' '.join(str(x) for x in block[0])}")
        if equal is not None:
            print(f"equal: {'yes' if equal else 'no'}")
    if equal is False:
        return EXIT_DISAGREE
    return EXIT_OK


def _format_bijection(edge_map) -> str:
    return " ".join(f"{e}->{img}" for e, img in enumerate(edge_map))


def _cmd_iso(args) -> int:
    n = _load_network(args.file_a)
    m = _load_network(args.file_b)
    label_witness = label_isomorphism_witness(n, m)
    temporal_witness = temporal_isomorphism_witness(n, m)
    print(f"label-isomorphic: {'yes' if label_witness else 'no'}")
    print(f"temporally-isomorphic: {'yes' if temporal_witness else 'no'}")
    if temporal_witness is not None:
        print(f"edge-bijection: {_format_bijection(temporal_witness.edge_map)}")
    return EXIT_OK


def _cmd_paths(args) -> int:
    network = _load_network(args.file)
    found = sorted(
        temporal_paths(network),
        key=lambda p: tuple(network.labeling[e] for e in p.edge_ids),
    )
    for path in found:
        labels = " ".join(str(network.labeling[e]) for e in path.edge_ids)
        trace = " ".join(str(v) for v in path.trace)
        print(f"{labels} | {trace}")
    return EXIT_OK


def _cmd_swapscript(args) -> int:
    n = _load_network(args.file_a)
    m = _load_network(args.file_b)
    try:
        script = families.diaster_swap_permutation(n, m)
    except families.NoSwapScriptError:
        print("NOT-ISOMORPHIC")
        return EXIT_OK
    print(f"steps: {len(script)}")
    for step in script:
        print(f"swap labels {step.labels[0]} {step.labels[1]} : edges {step.edges[0]} {step.edges[1]}")
    return EXIT_OK


def _cmd_generate(args) -> int:
    network = _identity_network(parse_family_spec(args.family))
    text = serialize_network(network)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        print(text, end="")
    return EXIT_OK


def _row_payload(row: VerificationRow, timing: bool):
    payload = {
        "family": row.family,
        "formula": row.formula,
        "lattice": row.lattice,
        "brute": row.brute,
        "swap": row.swap,
        "verdict": row.verdict,
    }
    if timing:
        payload["elapsed"] = {k: round(v, 6) for k, v in row.elapsed.items()}
    return payload


def _cmd_verify(args) -> int:
    rows = verify(args.max_edges)
    timing = not args.no_timing
    if args.format == "json":
        _print_json([_row_payload(row, timing) for row in rows])
    else:
        headers = ["family", "formula", "lattice", "brute", "swap", "verdict"]
        if timing:
            headers.append("seconds")
        table = []
        for row in rows:
            cells = [
                row.family,
                "-" if row.formula is None else str(row.formula),
                "-" if row.lattice is None else str(row.lattice),
                str(row.brute),
                str(row.swap),
                row.verdict,
            ]
            if timing:
                cells.append(f"{sum(row.elapsed.values()):.3f}")
            table.append(cells)
        widths = [max(len(h), *(len(r[i]) for r in table)) if table else len(h) for i, h in enumerate(headers)]
        print("  ".join(h.ljust(w) for h, w in zip(headers, widths)))
        for cells in table:
            print("  ".join(c.ljust(w) for c, w in zip(cells, widths)))
    if any(row.verdict == "DISAGREE" for row in rows):
        return EXIT_DISAGREE
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="isotemporal", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    count = sub.add_parser("count", help="count isotemporal classes of a family")
    count.add_argument("--family", required=True)
    count.add_argument("--method", choices=["formula", "lattice", "brute", "swap", "all"], default="all")
    count.add_argument("--format", choices=["text", "json"], default="text")
    count.add_argument("--limit", type=int, default=DEFAULT_EDGE_LIMIT)
    count.set_defaults(func=_cmd_count)

    cls = sub.add_parser("classes", help="partition labelings into isotemporal classes")
    target = cls.add_mutually_exclusive_group(required=True)
    target.add_argument("--family")
    target.add_argument("--graph")
    cls.add_argument("--method", choices=["brute", "swap", "both"], default="both")
    cls.add_argument("--representatives", action="store_true")
    cls.add_argument("--format", choices=["text", "json"], default="text")
    cls.add_argument("--limit", type=int, default=DEFAULT_EDGE_LIMIT)
    cls.set_defaults(func=_cmd_classes)

    iso = sub.add_parser("iso", help="test two network files for isomorphism")
    iso.add_argument("file_a")
    iso.add_argument("file_b")
    iso.set_defaults(func=_cmd_iso)

    paths = sub.add_parser("paths", help="list temporal paths of a network file")
    paths.add_argument("file")
    paths.set_defaults(func=_cmd_paths)

    swapscript = sub.add_parser("swapscript", help="construct a sequential-swap script between two labelings")
    swapscript.add_argument("file_a")
    swapscript.add_argument("file_b")
    swapscript.set_defaults(func=_cmd_swapscript)

    ver = sub.add_parser("verify", help="cross-check all counting methods over the family corpus")
    ver.add_argument("--max-edges", type=int, default=6)
    ver.add_argument("--format", choices=["text", "json"], default="text")
    ver.add_argument("--no-timing", action="store_true")
    ver.set_defaults(func=_cmd_verify)

    gen = sub.add_parser("generate", help="write a family graph as a network file")
    gen.add_argument("--family", required=True)
    gen.add_argument("-o", "--output")
    gen.set_defaults(func=_cmd_generate)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return EXIT_ERROR
    try:
        return args.func(args)
    except IsotemporalError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


def main() -> None:
    sys.exit(run())
