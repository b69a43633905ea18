"""Offline ground-truth oracles.

Everything here is slow-but-obviously-correct reference machinery: properness
checking, greedy coloring, degeneracy peeling, and brute-force Nash-Williams
arboricity on tiny graphs. The streaming algorithms are always judged against
these, never against themselves.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field

from .core import EdgeStream, StoredGraph, run_pass


@dataclass
class Coloring:
    """Total vertex -> color assignment plus the palette it came from."""

    assignment: list[int]
    palette_size: int

    @property
    def n(self) -> int:
        return len(self.assignment)

    @property
    def colors_used(self) -> int:
        return len(set(self.assignment)) if self.assignment else 0


@dataclass
class DegeneracyResult:
    d: int
    order: list[int] = field(repr=False)


def verify_proper(g: StoredGraph | EdgeStream, coloring: Coloring) -> list[tuple[int, int]]:
    """All edges whose endpoints share a color (empty list means proper).

    Accepts a stored graph or a stream; the stream route costs one pass.
    Duplicate stream edges report once.
    """
    n = g.n
    col = coloring.assignment
    if len(col) != n:
        raise ValueError(f"coloring missing a vertex: has {len(col)} entries for n={n}")
    bad: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    if isinstance(g, EdgeStream):
        def sink(u: int, v: int) -> None:
            if col[u] == col[v]:
                key = (u, v) if u < v else (v, u)
                if key not in seen:
                    seen.add(key)
                    bad.append(key)
        run_pass(g, sink)
        return bad
    for u, v in g.edges():
        if col[u] == col[v]:
            bad.append((u, v))
    return bad


def greedy_color(g: StoredGraph, order: list[int]) -> Coloring:
    """First-free greedy along the given vertex order.

    Uses at most max_degree + 1 colors regardless of order.
    """
    n = g.n
    if sorted(order) != list(range(n)):
        raise ValueError("order is not a permutation of the vertex set")
    assignment = [-1] * n
    for v in order:
        used = {assignment[w] for w in g.neighbors(v) if assignment[w] >= 0}
        c = 0
        while c in used:
            c += 1
        assignment[v] = c
    return Coloring(assignment=assignment, palette_size=g.max_degree() + 1)


def degeneracy(g: StoredGraph) -> DegeneracyResult:
    """Repeated min-degree removal; ties go to the lowest vertex id.

    d is the largest degree seen at removal time. Coloring greedily along
    the reversed removal order needs at most d + 1 colors.
    """
    n = g.n
    deg = [g.degree(v) for v in range(n)]
    heap = [(deg[v], v) for v in range(n)]
    heapq.heapify(heap)
    removed = [False] * n
    order: list[int] = []
    d = 0
    while heap:
        dv, v = heapq.heappop(heap)
        if removed[v] or dv != deg[v]:
            continue  # stale entry
        removed[v] = True
        order.append(v)
        if dv > d:
            d = dv
        for w in g.neighbors(v):
            if not removed[w]:
                deg[w] -= 1
                heapq.heappush(heap, (deg[w], w))
    return DegeneracyResult(d=d, order=order)


def nash_williams_arboricity(g: StoredGraph) -> int:
    """Exact arboricity: max over vertex sets S, |S| > 1, of
    ceil(|E(S)| / (|S| - 1)), by enumeration of all 2^n subsets.

    Hard-capped at n <= 20; beyond that use degeneracy (arboricity sits in
    [ceil(degeneracy/2) rounded up via d <= 2*arboricity - 1, degeneracy]).
    """
    n = g.n
    if n > 20:
        raise ValueError(
            "nash_williams_arboricity enumerates 2^n subsets and is capped at "
            "n <= 20; use degeneracy bounds for larger graphs"
        )
    if n < 2:
        return 0
    nbr = [0] * n
    for u, v in g.edges():
        nbr[u] |= 1 << v
        nbr[v] |= 1 << u
    best = 0
    inner = [0] * (1 << n)  # edges inside each subset
    for s in range(1, 1 << n):
        low = s & -s
        v = low.bit_length() - 1
        rest = s ^ low
        e = inner[rest] + (nbr[v] & rest).bit_count()
        inner[s] = e
        size = s.bit_count()
        if size > 1 and e:
            need = (e + size - 2) // (size - 1)  # ceil(e / (size - 1))
            if need > best:
                best = need
    return best
