"""Labelled multigraph diagrams and diameter-sufficiency checks.

A diagram edge carries a label ``alpha(delta, beta)``; ``alpha = beta = 1``
is a thin edge, anything else is thick. Expanding the diagram replaces a
thick edge by ``alpha`` pods whose root-to-root paths have length ``beta``
(see :mod:`degdiam.expansion`).

:func:`check_conditions` evaluates three closed-walk conditions that
together imply the expanded graph has diameter at most ``k``. Pairs of thick
edges that fail the first condition may still be cleared by
:func:`check_relaxed_pair`.
"""

from __future__ import annotations

import enum
import heapq
import itertools
import math
from dataclasses import dataclass, field
from functools import cached_property

from .errors import InputError


@dataclass(frozen=True)
class DiagramEdge:
    u: str
    v: str
    alpha: int = 1
    beta: int = 1

    @property
    def thin(self) -> bool:
        return self.alpha == 1 and self.beta == 1

    @property
    def thick(self) -> bool:
        return not self.thin

    @property
    def kind(self) -> str:
        return "thin" if self.thin else "thick"

    def other(self, w: str) -> str:
        return self.v if w == self.u else self.u


@dataclass(frozen=True)
class Diagram:
    """Immutable diagram: ``delta``, target diameter ``k``, vertices and edges.

    Vertices are string ids; edges reference them by id and are identified by
    their position in ``edges``.
    """

    delta: int
    k: int
    vertices: tuple[str, ...]
    edges: tuple[DiagramEdge, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(self.edges))

    @cached_property
    def _incidence(self) -> dict[str, list[int]]:
        inc: dict[str, list[int]] = {v: [] for v in self.vertices}
        for i, e in enumerate(self.edges):
            inc.setdefault(e.u, []).append(i)
            if e.v != e.u:
                inc.setdefault(e.v, []).append(i)
        return inc

    def incident(self, v: str) -> list[int]:
        return list(self._incidence.get(v, ()))

    def unlabelled_degree(self, v: str) -> int:
        return len(self._incidence.get(v, ()))

    def labelled_degree(self, v: str) -> int:
        return sum(self.edges[i].alpha for i in self._incidence.get(v, ()))

    def is_pending(self, i: int) -> bool:
        e = self.edges[i]
        return self.unlabelled_degree(e.u) == 1 or self.unlabelled_degree(e.v) == 1

    def pending_root(self, i: int) -> str:
        """Endpoint a pending edge hangs from (the first endpoint if both are leaves)."""
        e = self.edges[i]
        return e.v if self.unlabelled_degree(e.u) == 1 and self.unlabelled_degree(e.v) != 1 else e.u

    def pending_leaf(self, i: int) -> str:
        e = self.edges[i]
        return e.other(self.pending_root(i))

    def thick_edges(self) -> list[int]:
        return [i for i, e in enumerate(self.edges) if e.thick]

    def is_thin_vertex(self, v: str) -> bool:
        return all(self.edges[i].thin for i in self._incidence.get(v, ()))

    def thin_vertices(self) -> list[str]:
        return [v for v in self.vertices if self.is_thin_vertex(v)]

    def discarded_vertices(self) -> list[str]:
        """Leaf endpoints of thick pending edges; expansion replaces them by trees."""
        return [self.pending_leaf(i) for i in self.thick_edges() if self.is_pending(i)]

    def edge_name(self, i: int) -> str:
        e = self.edges[i]
        return f"{e.u}{e.v}" if len(e.u) == len(e.v) == 1 else f"{e.u}-{e.v}"

    def relabel(self, mapping: dict[str, str]) -> "Diagram":
        return Diagram(
            self.delta,
            self.k,
            tuple(mapping[v] for v in self.vertices),
            tuple(DiagramEdge(mapping[e.u], mapping[e.v], e.alpha, e.beta) for e in self.edges),
        )


def validate(diagram: Diagram) -> list[str]:
    """Every broken diagram rule, as human-readable strings (empty when valid)."""
    out: list[str] = []
    d = diagram
    if d.delta < 3:
        out.append(f"delta={d.delta} must be at least 3")
    if d.k < 2:
        out.append(f"k={d.k} must be at least 2")
    if len(set(d.vertices)) != len(d.vertices):
        out.append("duplicate vertex ids")
    known = set(d.vertices)
    thin_pairs: set[frozenset] = set()
    for i, e in enumerate(d.edges):
        name = f"edge {i} ({e.u},{e.v})"
        if e.u not in known or e.v not in known:
            out.append(f"{name}: endpoint not a diagram vertex")
            continue
        if e.u == e.v:
            out.append(f"{name}: self-loop")
            continue
        if e.alpha < 1 or e.beta < 1:
            out.append(f"{name}: alpha and beta must be positive")
            continue
        if d.is_pending(i):
            if e.beta > d.k // 2:
                out.append(f"{name}: pending beta {e.beta} exceeds floor(k/2)={d.k // 2}")
        else:
            if e.beta > d.k:
                out.append(f"{name}: beta {e.beta} exceeds k={d.k}")
            if e.beta == 1 and e.alpha > 1:
                out.append(f"{name}: thick edge with beta=1 would create parallel edges")
        if e.thin:
            pair = frozenset((e.u, e.v))
            if pair in thin_pairs:
                out.append(f"{name}: parallel thin edges would create parallel edges")
            thin_pairs.add(pair)
    for v in d.vertices:
        if d.labelled_degree(v) > d.delta:
            out.append(f"vertex {v}: labelled degree {d.labelled_degree(v)} exceeds delta={d.delta}")
    return out


def require_valid(diagram: Diagram) -> None:
    problems = validate(diagram)
    if problems:
        raise InputError("invalid diagram: " + "; ".join(problems))


def _dijkstra(diagram: Diagram, source: str) -> dict[str, float]:
    dist = {v: math.inf for v in diagram.vertices}
    dist[source] = 0
    heap = [(0, source)]
    while heap:
        d, u = heapq.heappop(heap)
        if d > dist[u]:
            continue
        for i in diagram.incident(u):
            e = diagram.edges[i]
            w = e.other(u)
            nd = d + e.beta
            if nd < dist[w]:
                dist[w] = nd
                heapq.heappush(heap, (nd, w))
    return dist


def weighted_distance(diagram: Diagram, u: str, v: str) -> float:
    """Minimum walk weight from ``u`` to ``v``; ``math.inf`` when unreachable."""
    for w in (u, v):
        if w not in diagram.vertices:
            raise InputError(f"{w!r} is not a diagram vertex")
    return _dijkstra(diagram, u)[v]


def distance_table(diagram: Diagram) -> dict[str, dict[str, float]]:
    return {v: _dijkstra(diagram, v) for v in diagram.vertices}


class Verdict(str, enum.Enum):
    PASS = "PASS"
    PASS_RELAXED = "PASS_RELAXED"
    UNKNOWN = "UNKNOWN"


@dataclass(frozen=True)
class ConditionReport:
    verdict: Verdict
    condition1_violations: tuple[tuple[int, int], ...] = ()
    condition2_violations: tuple[tuple[str, int], ...] = ()
    condition3_violations: tuple[tuple[str, str], ...] = ()
    relaxed_rescues: tuple[tuple[int, int], ...] = ()
    rescue_patterns: dict = field(default_factory=dict, compare=False)

    def named(self, diagram: Diagram) -> dict[str, list]:
        """Violation lists with edges rendered by endpoint names."""
        pair = lambda p: (diagram.edge_name(p[0]), diagram.edge_name(p[1]))
        return {
            "condition1": [pair(p) for p in self.condition1_violations],
            "condition2": [(v, diagram.edge_name(e)) for v, e in self.condition2_violations],
            "condition3": list(self.condition3_violations),
            "rescued": [pair(p) for p in self.relaxed_rescues],
        }


def closed_walk_weight(diagram: Diagram, dist, i: int, j: int) -> float:
    """Least weight of a closed walk through thick edges ``i`` and ``j``.

    A pending edge can only be walked out and back, so it contributes twice
    its weight and is anchored at its root.
    """
    e, f = diagram.edges[i], diagram.edges[j]
    pe, pf = diagram.is_pending(i), diagram.is_pending(j)
    if pe and pf:
        r, s = diagram.pending_root(i), diagram.pending_root(j)
        return 2 * e.beta + 2 * f.beta + 2 * dist[r][s]
    if pe or pf:
        if pf:
            i, j, e, f = j, i, f, e
        r = diagram.pending_root(i)
        return 2 * e.beta + f.beta + dist[r][f.u] + dist[f.v][r]
    return e.beta + f.beta + min(dist[e.u][f.u] + dist[e.v][f.v], dist[e.u][f.v] + dist[e.v][f.u])


def _vertex_walk_weight(diagram: Diagram, dist, v: str, i: int) -> float:
    e = diagram.edges[i]
    if diagram.is_pending(i):
        return 2 * e.beta + 2 * dist[v][diagram.pending_root(i)]
    return e.beta + dist[v][e.u] + dist[e.v][v]


def parallel_thin_pattern(diagram: Diagram, i: int, j: int) -> bool:
    """Thin edge between an endpoint of each, and a thin edge parallel to each."""
    e, f = diagram.edges[i], diagram.edges[j]
    thin = {frozenset((x.u, x.v)) for x in diagram.edges if x.thin}
    if frozenset((e.u, e.v)) not in thin or frozenset((f.u, f.v)) not in thin:
        return False
    return any(frozenset((x, y)) in thin for x in (e.u, e.v) for y in (f.u, f.v) if x != y)


def two_walk_pattern(diagram: Diagram, dist, i: int, j: int) -> bool:
    """Two closed walks of opposite relative orientation keep every pod pair within ``k``.

    A vertex at distance ``p`` from ``e.u`` on a vein of ``e`` and one at
    ``q`` from ``f.u`` on a vein of ``f`` are joined along each closed walk
    by its shorter arc. Every ``(p, q)`` is enumerated, so the parity
    argument is checked exactly rather than assumed.
    """
    e, f = diagram.edges[i], diagram.edges[j]
    k = diagram.k
    c_uu, c_vv = dist[e.u][f.u], dist[e.v][f.v]
    c_uv, c_vu = dist[e.u][f.v], dist[e.v][f.u]
    if math.inf in (c_uu, c_vv, c_uv, c_vu):
        return False
    b, b2 = e.beta, f.beta
    for p in range(b + 1):
        for q in range(b2 + 1):
            straight = min(p + c_uu + q, (b - p) + c_vv + (b2 - q))
            crossed = min(p + c_uv + (b2 - q), (b - p) + c_vu + q)
            if min(straight, crossed) > k:
                return False
    return True


def _relaxed_hypothesis(diagram: Diagram, i: int, j: int) -> str | None:
    k = diagram.k
    if k % 2 == 0:
        return f"k={k} is even; the relaxed test needs odd k"
    for x in (i, j):
        e = diagram.edges[x]
        if not e.thick:
            return f"edge {diagram.edge_name(x)} is thin"
        if diagram.is_pending(x):
            return f"edge {diagram.edge_name(x)} is pending"
        if e.beta != k - 1:
            return f"edge {diagram.edge_name(x)} has beta={e.beta}, need k-1={k - 1}"
    return None


def relaxed_pattern(diagram: Diagram, i: int, j: int, dist=None) -> str | None:
    """Name of the pattern clearing thick pair ``(i, j)``, or ``None``."""
    problem = _relaxed_hypothesis(diagram, i, j)
    if problem is not None:
        raise InputError(problem)
    if parallel_thin_pattern(diagram, i, j):
        return "parallel-thin"
    if dist is None:
        dist = distance_table(diagram)
    if two_walk_pattern(diagram, dist, i, j):
        return "two-walk"
    return None


def check_relaxed_pair(diagram: Diagram, i: int, j: int, dist=None) -> bool:
    return relaxed_pattern(diagram, i, j, dist) is not None


def check_conditions(diagram: Diagram) -> ConditionReport:
    require_valid(diagram)
    dist = distance_table(diagram)
    limit = 2 * diagram.k + 1
    thick = diagram.thick_edges()
    thin_vs = diagram.thin_vertices()

    c1 = [(i, j) for i, j in itertools.combinations(thick, 2)
          if closed_walk_weight(diagram, dist, i, j) > limit]
    c2 = [(v, i) for v in thin_vs for i in thick if _vertex_walk_weight(diagram, dist, v, i) > limit]
    c3 = [(v, w) for v, w in itertools.combinations(thin_vs, 2) if dist[v][w] > diagram.k]

    rescued, patterns = [], {}
    for i, j in c1:
        if _relaxed_hypothesis(diagram, i, j) is not None:
            continue
        name = relaxed_pattern(diagram, i, j, dist)
        if name is not None:
            rescued.append((i, j))
            patterns[(i, j)] = name

    if not (c1 or c2 or c3):
        verdict = Verdict.PASS
    elif not (c2 or c3) and len(rescued) == len(c1):
        verdict = Verdict.PASS_RELAXED
    else:
        verdict = Verdict.UNKNOWN
    return ConditionReport(verdict, tuple(c1), tuple(c2), tuple(c3), tuple(rescued), patterns)
