"""Command-line harness.

Subcommands: gen, maxdeg, color-delta, peel, color-arb, verify, oracle, sweep.
Exit codes: 0 success, 1 verification failure, 2 usage or input error,
3 abort or stall. Metrics files are JSON with sorted keys; identical config
plus seed reproduces byte-identical outputs.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .arb_color import run_arboricity_coloring
from .core import EdgeStream, StoredGraph, StreamFormatError, measure_max_degree, open_stream
from .corpus import FAMILIES, ORDERS, GenSpec, generate
from .delta_color import DEFAULT_C, ColoringAborted, run_delta_coloring
from .oracle import Coloring, degeneracy, greedy_color, nash_williams_arboricity, verify_proper
from .peel import PeelStalled, peel
from .sweep import run_sweep


def _write_lines(path: str, lines) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.writelines(lines)


def _write_json(path: str, payload: dict) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")


def write_coloring_file(path: str, coloring: Coloring) -> None:
    _write_lines(path, (f"{v} {c}\n" for v, c in enumerate(coloring.assignment)))


def read_coloring_file(path: str, n: int) -> Coloring:
    assignment: list[int | None] = [None] * n
    with open(path, encoding="utf-8") as fh:
        for line_no, raw in enumerate(fh, start=1):
            text = raw.strip()
            if not text or text.startswith("#"):
                continue
            parts = text.split()
            if len(parts) != 2:
                raise StreamFormatError("expected '<vertex> <color>'", line_no)
            try:
                v, color = int(parts[0]), int(parts[1])
            except ValueError:
                raise StreamFormatError("non-integer field", line_no) from None
            if not (0 <= v < n):
                raise StreamFormatError(f"vertex out of range [0, {n})", line_no)
            assignment[v] = color
    missing = [v for v, c in enumerate(assignment) if c is None]
    if missing:
        raise ValueError(f"coloring missing a vertex: first missing id {missing[0]}")
    filled = [int(c) for c in assignment]  # type: ignore[arg-type]
    return Coloring(assignment=filled, palette_size=max(filled) + 1 if filled else 0)


def _stored_from_stream(stream: EdgeStream) -> StoredGraph:
    g = StoredGraph(stream.n)
    for u, v in stream.pass_edges():
        g.add_edge(u, v)
    return g


def delta_metrics_payload(metrics) -> dict:
    return {
        "n": metrics.n, "m": metrics.m, "ell": metrics.ell, "r": metrics.r,
        "passes": metrics.passes, "colors_used": metrics.colors_used,
        "peak_stored_edges": metrics.peak_stored_edges,
        "max_class_degree": metrics.max_class_degree,
        "aborted": metrics.aborted, "seed": metrics.seed,
    }


def arb_metrics_payload(metrics) -> dict:
    return {
        "n": metrics.n, "m": metrics.m, "ell": metrics.ell, "k": metrics.k,
        "passes": metrics.passes, "colors_used": metrics.colors_used,
        "per_class_out_degree": metrics.per_class_out_degree,
        "peak_stored_edges": metrics.peak_stored_edges,
        "stalled": metrics.stalled, "seed": metrics.seed,
    }


def cmd_gen(args) -> int:
    spec = GenSpec(
        family=args.family, n=args.n, m=args.m, alpha=args.alpha,
        seed=args.seed, order=args.order,
    )
    edges, meta = generate(spec)
    lines = [f"{meta.n} {meta.m}\n"]
    lines.extend(f"{u} {v}\n" for u, v in edges.tolist())
    _write_lines(args.output, lines)
    print(f"wrote {args.output}: n={meta.n} m={meta.m} max_degree={meta.max_degree}")
    return 0


def cmd_maxdeg(args) -> int:
    stream = open_stream(args.input)
    print(measure_max_degree(stream))
    return 0


def cmd_color_delta(args) -> int:
    stream = open_stream(args.input)
    delta = args.delta if args.delta is not None else measure_max_degree(stream)
    try:
        coloring, metrics = run_delta_coloring(
            stream, delta, args.epsilon, args.c, args.seed
        )
    except ColoringAborted as exc:
        print(f"abort: {exc}", file=sys.stderr)
        if args.metrics and exc.metrics is not None:
            _write_json(args.metrics, delta_metrics_payload(exc.metrics))
        return 3
    write_coloring_file(args.output, coloring)
    if args.metrics:
        _write_json(args.metrics, delta_metrics_payload(metrics))
    print(
        f"colored n={metrics.n} m={metrics.m} with {metrics.colors_used} colors "
        f"(ell={metrics.ell}, r={metrics.r}, passes={metrics.passes})"
    )
    return 0


def cmd_peel(args) -> int:
    stream = open_stream(args.input)
    try:
        lp = peel(stream, args.alpha, args.gamma)
    except PeelStalled as exc:
        print(f"stall: {exc}", file=sys.stderr)
        return 3
    _write_lines(args.output, (f"{v} {layer}\n" for v, layer in enumerate(lp.layer)))
    print(f"peeled into k={lp.k} layers (threshold={lp.threshold}, passes={lp.passes})")
    return 0


def cmd_color_arb(args) -> int:
    stream = open_stream(args.input)
    try:
        coloring, metrics = run_arboricity_coloring(
            stream, args.alpha, args.epsilon, args.c, args.seed
        )
    except PeelStalled as exc:
        print(f"stall: {exc}", file=sys.stderr)
        if args.metrics and exc.metrics is not None:
            _write_json(args.metrics, arb_metrics_payload(exc.metrics))
        return 3
    write_coloring_file(args.output, coloring)
    if args.metrics:
        _write_json(args.metrics, arb_metrics_payload(metrics))
    print(
        f"colored n={metrics.n} m={metrics.m} with {metrics.colors_used} colors "
        f"(ell={metrics.ell}, k={metrics.k}, passes={metrics.passes})"
    )
    return 0


def cmd_verify(args) -> int:
    stream = open_stream(args.input)
    coloring = read_coloring_file(args.coloring, stream.n)
    violations = verify_proper(stream, coloring)
    if violations:
        for u, v in violations:
            print(f"conflict: {u} {v} color={coloring.assignment[u]}")
        print(f"improper: {len(violations)} conflicting edges")
        return 1
    print("proper")
    return 0


def cmd_oracle(args) -> int:
    stream = open_stream(args.input)
    g = _stored_from_stream(stream)
    if args.which == "arboricity":
        print(nash_williams_arboricity(g))
        return 0
    if args.which == "degeneracy":
        print(degeneracy(g).d)
        return 0
    if args.order == "reverse-degeneracy":
        order = list(reversed(degeneracy(g).order))
    else:
        order = list(range(g.n))
    coloring = greedy_color(g, order)
    if args.output:
        write_coloring_file(args.output, coloring)
    print(f"greedy used {coloring.colors_used} colors (palette {coloring.palette_size})")
    return 0


def cmd_sweep(args) -> int:
    doc = json.loads(Path(args.spec).read_text(encoding="utf-8"))
    out_dir = args.output or doc.get("output_dir")
    if not out_dir:
        raise ValueError("sweep needs an output directory (-o or 'output_dir' in the spec)")
    csv_path = run_sweep(doc, out_dir)
    print(f"wrote {csv_path}")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="streamcolor",
        description="Semi-streaming vertex coloring toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a corpus graph to an edge-list file")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, default=None, help="edge count (gnm)")
    p.add_argument("--alpha", type=int, default=None, help="forest count (forest-union)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--order", default="as-generated", choices=ORDERS)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("maxdeg", help="measure max degree in one pass")
    p.add_argument("-i", "--input", required=True)
    p.set_defaults(func=cmd_maxdeg)

    p = sub.add_parser("color-delta", help="one-pass coloring within (1+eps)*Delta")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("--delta", type=int, default=None,
                   help="max-degree upper bound (measured in an extra pass when omitted)")
    p.add_argument("--epsilon", type=float, required=True)
    p.add_argument("--c", type=float, default=DEFAULT_C)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output", required=True, help="coloring file")
    p.add_argument("--metrics", default=None, help="metrics JSON path")
    p.set_defaults(func=cmd_color_delta)

    p = sub.add_parser("peel", help="degree-peel into layers, one pass per round")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("--alpha", type=int, required=True, help="arboricity upper bound")
    p.add_argument("--gamma", type=float, required=True)
    p.add_argument("-o", "--output", required=True, help="layers file")
    p.set_defaults(func=cmd_peel)

    p = sub.add_parser("color-arb", help="k-pass coloring within (2+eps)*alpha")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("--alpha", type=int, required=True, help="arboricity upper bound")
    p.add_argument("--epsilon", type=float, required=True)
    p.add_argument("--c", type=float, default=DEFAULT_C)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output", required=True, help="coloring file")
    p.add_argument("--metrics", default=None, help="metrics JSON path")
    p.set_defaults(func=cmd_color_arb)

    p = sub.add_parser("verify", help="check a coloring file against an edge stream")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("-c", "--coloring", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="offline ground-truth computations")
    p.add_argument("which", choices=("arboricity", "degeneracy", "greedy"))
    p.add_argument("-i", "--input", required=True)
    p.add_argument("--order", default="id", choices=("id", "reverse-degeneracy"),
                   help="vertex order for greedy")
    p.add_argument("-o", "--output", default=None, help="coloring file (greedy)")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("sweep", help="run a JSON-specified grid of seeded runs")
    p.add_argument("-s", "--spec", required=True, help="sweep spec JSON")
    p.add_argument("-o", "--output", default=None,
                   help="output directory (falls back to 'output_dir' in the spec)")
    p.set_defaults(func=cmd_sweep)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (StreamFormatError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main(sys.argv[1:]))
