"""Graph and stream primitives.

An EdgeStream is a fixed, re-traversable edge sequence with pass accounting:
the order is committed before any algorithm randomness is drawn, and every
traversal replays exactly the same sequence. StoredGraph is the in-memory
adjacency the algorithms are allowed to keep; it deduplicates edges and
tracks a stored-edge high-water mark so space claims are checkable.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Iterable, Iterator, Sequence

import numpy as np

EdgeSink = Callable[[int, int], None]

_EMPTY: frozenset[int] = frozenset()


class StreamFormatError(ValueError):
    """Bad edge-list input. Carries the 1-based line number when known."""

    def __init__(self, message: str, line_no: int | None = None):
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
        self.line_no = line_no


@dataclass
class StreamMeta:
    """Facts about a stream: vertex count, edge count, optional max degree."""

    n: int
    m: int | None = None
    max_degree: int | None = None


class EdgeStream:
    """Ordered edge source that can be traversed any number of times.

    ``pass_count`` goes up by one per traversal, whether or not the consumer
    finishes it (a started pass is a spent pass). Endpoint order within each
    edge is preserved as written, since the algorithms treat the first-listed
    endpoint specially.
    """

    def __init__(self, n: int, u: np.ndarray, v: np.ndarray, declared_m: int | None = None):
        self.n = int(n)
        self._u = u
        self._v = v
        self.declared_m = declared_m
        self.pass_count = 0

    @classmethod
    def from_edges(cls, n: int, edges, declared_m: int | None = None) -> "EdgeStream":
        """Wrap an in-memory edge sequence ((m, 2) array or iterable of pairs)."""
        arr = np.asarray(edges, dtype=np.int64)
        if arr.size == 0:
            arr = arr.reshape(0, 2)
        if arr.ndim != 2 or arr.shape[1] != 2:
            raise StreamFormatError("edges must be pairs of endpoints")
        u, v = arr[:, 0].copy(), arr[:, 1].copy()
        if len(u) and bool((u == v).any()):
            bad = int(u[np.argmax(u == v)])
            raise StreamFormatError(f"self-loop at vertex {bad}")
        if len(u) and (int(min(u.min(), v.min())) < 0 or int(max(u.max(), v.max())) >= n):
            raise StreamFormatError(f"endpoint out of range [0, {n})")
        return cls(n, u, v, declared_m)

    @property
    def m(self) -> int:
        return len(self._u)

    @property
    def meta(self) -> StreamMeta:
        return StreamMeta(n=self.n, m=self.m)

    def pass_edges(self) -> Iterator[tuple[int, int]]:
        """One full traversal, edge by edge."""
        self.pass_count += 1
        yield from zip(self._u.tolist(), self._v.tolist())

    def pass_chunks(self, chunk_size: int = 1 << 16) -> Iterator[tuple[np.ndarray, np.ndarray]]:
        """One full traversal in array chunks (same accounting as pass_edges)."""
        self.pass_count += 1
        u, v = self._u, self._v
        for lo in range(0, len(u), chunk_size):
            yield u[lo : lo + chunk_size], v[lo : lo + chunk_size]


def open_stream(source, n: int | None = None) -> EdgeStream:
    """Open an edge stream from a file path or an in-memory edge list.

    File format: first non-comment line is ``<n> <m>`` (m may be 0 when
    unknown), then one ``<u> <v>`` edge per line; ``#`` starts a comment.
    Parsing validates eagerly and reports the offending line; the validation
    read is part of opening and does not count as a pass.
    """
    if isinstance(source, (str, Path)):
        return _parse_edge_file(Path(source))
    if n is None:
        raise ValueError("in-memory streams need an explicit vertex count n")
    return EdgeStream.from_edges(n, source)


def _parse_edge_file(path: Path) -> EdgeStream:
    n: int | None = None
    declared_m = 0
    us: list[int] = []
    vs: list[int] = []
    with open(path, encoding="utf-8") as fh:
        for line_no, raw in enumerate(fh, start=1):
            text = raw.strip()
            if not text or text.startswith("#"):
                continue
            parts = text.split()
            if len(parts) != 2:
                raise StreamFormatError("expected two whitespace-separated fields", line_no)
            try:
                a, b = int(parts[0]), int(parts[1])
            except ValueError:
                raise StreamFormatError("non-integer field", line_no) from None
            if n is None:
                if a < 0 or b < 0:
                    raise StreamFormatError("header '<n> <m>' must be non-negative", line_no)
                n, declared_m = a, b
                continue
            if a == b:
                raise StreamFormatError(f"self-loop at vertex {a}", line_no)
            if not (0 <= a < n) or not (0 <= b < n):
                raise StreamFormatError(f"endpoint out of range [0, {n})", line_no)
            us.append(a)
            vs.append(b)
    if n is None:
        raise StreamFormatError("missing header line '<n> <m>'")
    if declared_m and len(us) != declared_m:
        raise StreamFormatError(f"header declares m={declared_m} but file has {len(us)} edges")
    u = np.asarray(us, dtype=np.int64)
    v = np.asarray(vs, dtype=np.int64)
    return EdgeStream(n, u, v, declared_m or None)


def run_pass(stream: EdgeStream, consumers: EdgeSink | Sequence[EdgeSink]) -> int:
    """Deliver every edge of one pass to each consumer, in stream order.

    Returns the number of edges delivered. Fan-out lets several consumers
    share a single traversal, which is how pass budgets are kept tight.
    """
    sinks: tuple[EdgeSink, ...]
    if callable(consumers):
        sinks = (consumers,)
    else:
        sinks = tuple(consumers)
    count = 0
    if len(sinks) == 1:
        sink = sinks[0]
        for u, v in stream.pass_edges():
            sink(u, v)
            count += 1
    else:
        for u, v in stream.pass_edges():
            for sink in sinks:
                sink(u, v)
            count += 1
    return count


def measure_max_degree(stream: EdgeStream) -> int:
    """Max degree in one pass with O(n) counters.

    Duplicate stream edges are counted again (counters cannot dedup), so on
    noisy input this is an upper bound on the simple-graph max degree, which
    is the safe direction for callers that use it as a palette bound.
    """
    counts = np.zeros(stream.n, dtype=np.int64)
    for u, v in stream.pass_chunks():
        counts += np.bincount(u, minlength=stream.n)
        counts += np.bincount(v, minlength=stream.n)
    return int(counts.max()) if stream.n else 0


class StoredGraph:
    """Undirected adjacency with dedup and a stored-edge high-water mark.

    add_edge is idempotent: a repeated edge changes nothing, so stream noise
    cannot inflate space accounting. The peak survives clear() by design.
    """

    def __init__(self, n: int):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        self.n = n
        self._adj: dict[int, set[int]] = {}
        self.stored_edges = 0
        self.peak_stored_edges = 0

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "StoredGraph":
        g = cls(n)
        for u, v in edges:
            g.add_edge(int(u), int(v))
        return g

    def add_edge(self, u: int, v: int) -> None:
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        n = self.n
        if not (0 <= u < n) or not (0 <= v < n):
            raise ValueError(f"endpoint out of range [0, {n})")
        adj = self._adj
        s = adj.get(u)
        if s is None:
            s = adj[u] = set()
        if v in s:
            return
        s.add(v)
        t = adj.get(v)
        if t is None:
            t = adj[v] = set()
        t.add(u)
        self.stored_edges += 1
        if self.stored_edges > self.peak_stored_edges:
            self.peak_stored_edges = self.stored_edges

    def has_edge(self, u: int, v: int) -> bool:
        s = self._adj.get(u)
        return s is not None and v in s

    def neighbors(self, v: int) -> frozenset[int] | set[int]:
        """Read-only view; do not mutate."""
        return self._adj.get(v, _EMPTY)

    def degree(self, v: int) -> int:
        s = self._adj.get(v)
        return len(s) if s else 0

    def max_degree(self) -> int:
        return max((len(s) for s in self._adj.values()), default=0)

    def adjacency_items(self) -> Iterator[tuple[int, set[int]]]:
        return iter(self._adj.items())

    def edges(self) -> Iterator[tuple[int, int]]:
        """Each stored edge once, as (u, v) with u < v, in sorted order."""
        for u in sorted(self._adj):
            for v in sorted(self._adj[u]):
                if u < v:
                    yield (u, v)

    def clear(self) -> None:
        """Drop all edges; the high-water mark stays where it was."""
        self._adj.clear()
        self.stored_edges = 0
