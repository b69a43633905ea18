"""Seed sweeps: run a grid of configurations, one metrics JSON per run plus
an aggregate CSV. Reruns skip cells whose metrics file already exists, so an
interrupted sweep resumes where it stopped.
"""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass
from pathlib import Path

from .arb_color import run_arboricity_coloring
from .core import EdgeStream
from .corpus import GenSpec, generate
from .delta_color import run_delta_coloring, ColoringAborted
from .peel import PeelStalled

CSV_COLUMNS = [
    "family", "n", "m", "alpha", "delta", "epsilon", "c", "seed", "algorithm",
    "passes", "colors_used", "bound", "within_bound", "peak_stored_edges", "aborted",
]

ALGORITHMS = ("delta", "arb")


@dataclass(frozen=True)
class SweepCell:
    """One run of the grid: a corpus instance plus algorithm parameters."""

    family: str
    n: int
    m: int | None
    alpha: int | None
    order: str
    gen_seed: int
    algorithm: str
    epsilon: float
    c: float
    seed: int

    def genspec(self) -> GenSpec:
        return GenSpec(
            family=self.family, n=self.n, m=self.m, alpha=self.alpha,
            seed=self.gen_seed, order=self.order,
        )

    def slug(self) -> str:
        return (
            f"{self.family}-n{self.n}-m{self.m or 0}-a{self.alpha or 0}"
            f"-{self.algorithm}-e{self.epsilon}-c{self.c}"
            f"-g{self.gen_seed}-s{self.seed}"
        )


def _as_list(value) -> list:
    return list(value) if isinstance(value, (list, tuple)) else [value]


def expand_spec(doc: dict) -> list[SweepCell]:
    """Cross the grid: epsilon, c and seed entries may be scalars or lists."""
    cells: list[SweepCell] = []
    for run in doc.get("runs", []):
        family = run["family"]
        if "algorithm" not in run:
            raise ValueError("each sweep run needs an 'algorithm' (delta or arb)")
        algorithm = run["algorithm"]
        if algorithm not in ALGORITHMS:
            raise ValueError(f"unknown algorithm {algorithm!r}; expected one of {ALGORITHMS}")
        seeds = run.get("seeds", [0])
        if isinstance(seeds, dict):  # {"start": a, "count": k}
            seeds = list(range(seeds["start"], seeds["start"] + seeds["count"]))
        for epsilon in _as_list(run.get("epsilon", 0.5)):
            for c in _as_list(run.get("c", 1.0)):
                for seed in _as_list(seeds):
                    cells.append(SweepCell(
                        family=family,
                        n=int(run["n"]),
                        m=run.get("m"),
                        alpha=run.get("alpha"),
                        order=run.get("order", "as-generated"),
                        gen_seed=int(run.get("gen_seed", 0)),
                        algorithm=algorithm,
                        epsilon=float(epsilon),
                        c=float(c),
                        seed=int(seed),
                    ))
    return cells


def _run_cell(cell: SweepCell, edges, meta) -> dict:
    """Execute one cell and return the sweep record (config + metrics)."""
    stream = EdgeStream.from_edges(cell.n, edges)
    delta = meta.max_degree or 0
    alpha = cell.alpha
    if alpha is None:
        # certified bound from the max degree when the family carries none
        alpha = math.ceil((delta + 1) / 2)
    config = {
        "family": cell.family, "n": cell.n, "m": meta.m, "order": cell.order,
        "gen_seed": cell.gen_seed, "algorithm": cell.algorithm,
        "epsilon": cell.epsilon, "c": cell.c, "seed": cell.seed,
        "delta": delta, "alpha": alpha,
    }
    if cell.algorithm == "delta":
        try:
            _, metrics = run_delta_coloring(
                stream, delta, cell.epsilon, cell.c, cell.seed
            )
        except ColoringAborted as exc:
            metrics = exc.metrics
        payload = {
            "n": metrics.n, "m": metrics.m, "ell": metrics.ell, "r": metrics.r,
            "passes": metrics.passes, "colors_used": metrics.colors_used,
            "peak_stored_edges": metrics.peak_stored_edges,
            "max_class_degree": metrics.max_class_degree,
            "aborted": metrics.aborted, "seed": metrics.seed,
        }
        failed = metrics.aborted
    else:
        try:
            _, metrics = run_arboricity_coloring(
                stream, alpha, cell.epsilon, cell.c, cell.seed
            )
        except PeelStalled as exc:
            metrics = exc.metrics
        payload = {
            "n": metrics.n, "m": metrics.m, "ell": metrics.ell, "k": metrics.k,
            "passes": metrics.passes, "colors_used": metrics.colors_used,
            "per_class_out_degree": metrics.per_class_out_degree,
            "peak_stored_edges": metrics.peak_stored_edges,
            "stalled": metrics.stalled, "seed": metrics.seed,
        }
        failed = metrics.stalled
    return {"config": config, "metrics": payload, "failed": failed}


def _record_to_row(record: dict) -> dict:
    cfg = record["config"]
    met = record["metrics"]
    failed = record["failed"]
    if cfg["algorithm"] == "delta":
        bound = (1.0 + cfg["epsilon"]) * cfg["delta"]
        alpha_field = ""
    else:
        bound = (2.0 + cfg["epsilon"]) * cfg["alpha"]
        alpha_field = cfg["alpha"]
    within = "" if failed else str(met["colors_used"] <= bound).lower()
    return {
        "family": cfg["family"], "n": cfg["n"], "m": cfg["m"],
        "alpha": alpha_field, "delta": cfg["delta"],
        "epsilon": cfg["epsilon"], "c": cfg["c"], "seed": cfg["seed"],
        "algorithm": cfg["algorithm"], "passes": met["passes"],
        "colors_used": met["colors_used"], "bound": bound,
        "within_bound": within,
        "peak_stored_edges": met["peak_stored_edges"],
        "aborted": str(bool(failed)).lower(),
    }


def run_sweep(doc: dict, out_dir: str | Path) -> Path:
    """Run (or resume) every cell; returns the path of the summary CSV."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    cells = expand_spec(doc)
    graph_cache: dict[GenSpec, tuple] = {}
    rows = []
    for cell in cells:
        metrics_path = out / f"{cell.slug()}.json"
        if metrics_path.exists():
            record = json.loads(metrics_path.read_text(encoding="utf-8"))
        else:
            spec = cell.genspec()
            if spec not in graph_cache:
                graph_cache[spec] = generate(spec)
            edges, meta = graph_cache[spec]
            record = _run_cell(cell, edges, meta)
            metrics_path.write_text(
                json.dumps(record, sort_keys=True, indent=2) + "\n", encoding="utf-8"
            )
        rows.append(_record_to_row(record))
    csv_path = out / "summary.csv"
    with open(csv_path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.DictWriter(fh, fieldnames=CSV_COLUMNS)
        writer.writeheader()
        writer.writerows(rows)
    return csv_path
