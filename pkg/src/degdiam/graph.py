"""Immutable simple graphs with exact BFS machinery.

A :class:`Graph` stores a CSR adjacency (sorted neighbour lists, ``int32``).
Diameter checks run an all-sources BFS through the backend chosen in
:mod:`degdiam._backend`; results are a pure max-reduction and therefore
identical for any thread count.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

from ._backend import get_backend
from .errors import InputError

DISCONNECTED = "disconnected"


class Graph:
    """Simple undirected graph on vertices ``0..vertex_count-1``."""

    __slots__ = ("_indptr", "_indices")

    def __init__(self, vertex_count: int, edges: Iterable[tuple[int, int]]):
        if vertex_count < 0:
            raise InputError("vertex_count must be non-negative")
        pairs = np.asarray(list(edges), dtype=np.int64).reshape(-1, 2)
        if len(pairs):
            if pairs.min() < 0 or pairs.max() >= vertex_count:
                raise InputError("edge endpoint out of range")
            if np.any(pairs[:, 0] == pairs[:, 1]):
                raise InputError("self-loops are not allowed")
        lo = np.minimum(pairs[:, 0], pairs[:, 1])
        hi = np.maximum(pairs[:, 0], pairs[:, 1])
        keys = lo * max(vertex_count, 1) + hi
        if len(np.unique(keys)) != len(keys):
            raise InputError("duplicate edges are not allowed")
        src = np.concatenate([lo, hi])
        dst = np.concatenate([hi, lo])
        order = np.lexsort((dst, src))
        src, dst = src[order], dst[order]
        indptr = np.zeros(vertex_count + 1, dtype=np.int32)
        np.cumsum(np.bincount(src, minlength=vertex_count), out=indptr[1:])
        self._indptr = indptr
        self._indices = dst.astype(np.int32)
        self._indptr.flags.writeable = False
        self._indices.flags.writeable = False

    @classmethod
    def from_adjacency(cls, adjacency: list[list[int]]) -> "Graph":
        edges = []
        for u, nbrs in enumerate(adjacency):
            for v in nbrs:
                if u < v:
                    edges.append((u, v))
                elif u not in adjacency[v]:
                    raise InputError(f"adjacency not symmetric at {u}-{v}")
        g = cls(len(adjacency), edges)
        if sum(len(n) for n in adjacency) != 2 * g.edge_count:
            raise InputError("adjacency is not a simple symmetric graph")
        return g

    @property
    def vertex_count(self) -> int:
        return len(self._indptr) - 1

    @property
    def edge_count(self) -> int:
        return len(self._indices) // 2

    @property
    def indptr(self) -> np.ndarray:
        return self._indptr

    @property
    def indices(self) -> np.ndarray:
        return self._indices

    def neighbors(self, v: int) -> np.ndarray:
        return self._indices[self._indptr[v]:self._indptr[v + 1]]

    def degree(self, v: int) -> int:
        return int(self._indptr[v + 1] - self._indptr[v])

    def degrees(self) -> np.ndarray:
        return np.diff(self._indptr)

    @property
    def adjacency(self) -> list[list[int]]:
        return [self.neighbors(v).tolist() for v in range(self.vertex_count)]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        for u in range(self.vertex_count):
            for v in self.neighbors(u).tolist():
                if u < v:
                    yield u, v

    def relabel(self, permutation) -> "Graph":
        """Graph with vertex ``v`` renamed to ``permutation[v]``."""
        perm = np.asarray(permutation)
        return Graph(self.vertex_count, ((int(perm[u]), int(perm[v])) for u, v in self.edges()))

    def __eq__(self, other) -> bool:
        return (isinstance(other, Graph)
                and np.array_equal(self._indptr, other._indptr)
                and np.array_equal(self._indices, other._indices))

    def __hash__(self):
        return hash((self._indptr.tobytes(), self._indices.tobytes()))

    def __repr__(self) -> str:
        return f"Graph(vertex_count={self.vertex_count}, edge_count={self.edge_count})"


@dataclass(frozen=True)
class DistanceProfile:
    """Hop distances from one source; ``-1`` marks unreachable vertices."""

    source: int
    distances: np.ndarray
    eccentricity: int

    @property
    def all_reached(self) -> bool:
        return bool(np.all(self.distances >= 0))


def bfs(graph: Graph, source: int, backend: str | None = None) -> DistanceProfile:
    if not 0 <= source < graph.vertex_count:
        raise InputError(f"source {source} out of range for {graph.vertex_count} vertices")
    out = np.empty(graph.vertex_count, dtype=np.int32)
    get_backend(backend).bfs_distances(graph.indptr, graph.indices, source, out)
    out.flags.writeable = False
    return DistanceProfile(source, out, int(out.max()))


def eccentricities(graph: Graph, threads: int = 1, backend: str | None = None) -> np.ndarray:
    """Eccentricity of every vertex, ``-1`` where some vertex is unreachable."""
    n = graph.vertex_count
    kernel = get_backend(backend)
    sources = np.arange(n, dtype=np.int32)
    ecc = np.zeros(n, dtype=np.int32)
    reached = np.zeros(n, dtype=np.int32)
    threads = max(1, min(int(threads), n))
    bounds = np.linspace(0, n, threads + 1).astype(int)

    def work(i: int) -> None:
        lo, hi = bounds[i], bounds[i + 1]
        kernel.eccentricities(graph.indptr, graph.indices, sources[lo:hi], ecc[lo:hi], reached[lo:hi])

    if threads == 1:
        work(0)
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            list(pool.map(work, range(threads)))
    ecc[reached < n] = -1
    return ecc


def diameter_exact(graph: Graph, threads: int = 1, backend: str | None = None) -> int | str:
    """Exact diameter by all-sources BFS, or :data:`DISCONNECTED`."""
    if graph.vertex_count == 0:
        raise InputError("diameter of the empty graph is undefined")
    ecc = eccentricities(graph, threads=threads, backend=backend)
    if np.any(ecc < 0):
        return DISCONNECTED
    return int(ecc.max())


def is_connected(graph: Graph) -> bool:
    if graph.vertex_count == 0:
        return True
    return bfs(graph, 0).all_reached


def degree_profile(graph: Graph) -> tuple[int, int, dict[int, int]]:
    """``(max degree, min degree, {degree: count})``."""
    deg = graph.degrees()
    if len(deg) == 0:
        return 0, 0, {}
    hist = Counter(deg.tolist())
    return int(deg.max()), int(deg.min()), dict(sorted(hist.items()))


def to_edge_list(graph: Graph) -> str:
    """Canonical text form: ``n m`` then one ``u v`` line per edge, ``u < v``."""
    lines = [f"{graph.vertex_count} {graph.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in graph.edges())
    return "\n".join(lines) + "\n"


def from_edge_list(text: str) -> Graph:
    rows = text.splitlines()
    if not rows:
        raise InputError("empty edge list")
    try:
        n, m = (int(t) for t in rows[0].split())
        edges = [tuple(int(t) for t in row.split()) for row in rows[1:] if row.strip()]
    except ValueError as exc:
        raise InputError(f"malformed edge list: {exc}") from None
    if len(edges) != m or any(len(e) != 2 for e in edges):
        raise InputError(f"edge list header declares {m} edges, found {len(edges)}")
    if any(u >= v for u, v in edges):
        raise InputError("edge list lines must satisfy u < v")
    return Graph(n, edges)
