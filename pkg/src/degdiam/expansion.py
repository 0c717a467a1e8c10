"""Trees, pods, and the expansion of a diagram into its compound graph.

A ``(delta, gamma)``-tree has a root of degree 1, internal vertices of
degree ``delta`` and leaves at depth ``gamma``. A ``(delta, beta)``-pod glues
two such trees of depth ``beta // 2`` leaf to leaf (identifying leaves for
even ``beta``, matching them for odd ``beta``), left-to-right, so the pod
stays planar with both roots on the outer face.

While building, each vertex's neighbours are also recorded in clockwise
order for a drawing with the first root on top; :mod:`degdiam.embedding`
turns that into a rotation system for the expanded graph.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .diagram import Diagram, require_valid
from .errors import InputError
from .graph import Graph


def pending_count(delta: int, beta: int) -> int:
    """Non-root vertices of a ``(delta, beta)``-tree."""
    if delta < 3 or beta < 0:
        raise InputError("pending_count needs delta >= 3 and beta >= 0")
    num = (delta - 1) ** beta - 1
    assert num % (delta - 2) == 0
    return num // (delta - 2)


def internal_count(delta: int, beta: int) -> int:
    """Internal (non-root) vertices of a ``(delta, beta)``-pod."""
    if delta < 3 or beta < 1:
        raise InputError("internal_count needs delta >= 3 and beta >= 1")
    if beta == 1:
        return 0
    if beta % 2 == 0:
        num = delta * (delta - 1) ** ((beta - 2) // 2) - 2
    else:
        num = 2 * (delta - 1) ** ((beta - 1) // 2) - 2
    assert num % (delta - 2) == 0
    return num // (delta - 2)


class _Builder:
    """Accumulates vertices, edges, provenance and clockwise neighbour orders."""

    def __init__(self, delta: int):
        self.delta = delta
        self.edges: list[tuple[int, int]] = []
        self.tags: list[str] = []
        self.rotation: dict[int, list[int]] = {}

    def new(self, tag: str) -> int:
        self.tags.append(tag)
        return len(self.tags) - 1

    def link(self, u: int, v: int) -> None:
        self.edges.append((u, v))

    def _level_sizes(self, gamma: int) -> list[int]:
        return [(self.delta - 1) ** (t - 1) for t in range(1, gamma + 1)]

    def _children(self, level: list[int], nxt: list[int], j: int) -> list[int]:
        w = len(nxt) // len(level)
        return nxt[j * w:(j + 1) * w]

    def tree(self, root: int, gamma: int, tag: str) -> list[list[int]]:
        """Hang a ``(delta, gamma)``-tree below ``root``; returns its levels 1..gamma."""
        levels = []
        for t, size in enumerate(self._level_sizes(gamma), start=1):
            levels.append([self.new(f"{tag}@{t}") for _ in range(size)])
        self._wire_down(root, levels)
        return levels

    def _wire_down(self, root: int, levels: list[list[int]]) -> None:
        # root on top, children drawn below left to right
        self.link(root, levels[0][0])
        parent_of = {levels[0][0]: root}
        for t in range(len(levels) - 1):
            for j, u in enumerate(levels[t]):
                kids = self._children(levels[t], levels[t + 1], j)
                for c in kids:
                    self.link(u, c)
                    parent_of[c] = u
                self.rotation[u] = [parent_of[u]] + kids[::-1]
        for u in levels[-1]:
            self.rotation.setdefault(u, [parent_of[u]])

    def _wire_up(self, root: int, levels: list[list[int]], shared_last: bool) -> None:
        # root at the bottom, children drawn above left to right
        self.link(root, levels[0][0])
        parent_of = {levels[0][0]: root}
        for t in range(len(levels) - 1):
            for j, u in enumerate(levels[t]):
                kids = self._children(levels[t], levels[t + 1], j)
                for c in kids:
                    self.link(u, c)
                    parent_of[c] = u
                self.rotation[u] = [parent_of[u]] + kids
        for u in levels[-1]:
            if shared_last:
                self.rotation[u] = self.rotation[u] + [parent_of[u]]
            else:
                self.rotation[u] = [parent_of[u]]

    def pod(self, top: int, bottom: int, beta: int, tag: str) -> tuple[int, int]:
        """Add one pod between ``top`` and ``bottom``; returns the two root-adjacent vertices."""
        if beta % 2 == 0:
            gamma = beta // 2
            sizes = self._level_sizes(gamma)
            down = []
            for t, size in enumerate(sizes, start=1):
                down.append([self.new(f"{tag}@{t}") for _ in range(size)])
            up: list[list[int]] = [[] for _ in range(gamma)]
            up[gamma - 1] = down[gamma - 1]
            for t in range(gamma - 1, 0, -1):
                up[t - 1] = [self.new(f"{tag}@{beta - t}") for _ in range(sizes[t - 1])]
            self._wire_down(top, down)
            self._wire_up(bottom, up, shared_last=True)
        else:
            gamma = (beta - 1) // 2
            sizes = self._level_sizes(gamma)
            down = []
            for t, size in enumerate(sizes, start=1):
                down.append([self.new(f"{tag}@{t}") for _ in range(size)])
            up = [[] for _ in range(gamma)]
            for t in range(gamma, 0, -1):
                up[t - 1] = [self.new(f"{tag}@{beta - t}") for _ in range(sizes[t - 1])]
            self._wire_down(top, down)
            self._wire_up(bottom, up, shared_last=False)
            for a, b in zip(down[-1], up[-1]):
                self.link(a, b)
                self.rotation[a].append(b)
                self.rotation[b].append(a)
        return down[0][0], up[0][0]


@dataclass(frozen=True)
class TreeFragment:
    delta: int
    gamma: int
    graph: Graph
    root: int
    leaves: tuple[int, ...]


@dataclass(frozen=True)
class Pod:
    delta: int
    beta: int
    graph: Graph
    roots: tuple[int, int]
    internal_count: int


def build_tree(delta: int, gamma: int) -> TreeFragment:
    if delta < 3:
        raise InputError("delta must be at least 3")
    if gamma < 1:
        raise InputError("tree depth gamma must be at least 1")
    b = _Builder(delta)
    root = b.new("root")
    levels = b.tree(root, gamma, "tree")
    return TreeFragment(delta, gamma, Graph(len(b.tags), b.edges), root, tuple(levels[-1]))


def build_pod(delta: int, beta: int) -> Pod:
    if delta < 3:
        raise InputError("delta must be at least 3")
    if beta < 2:
        raise InputError("pods need beta >= 2; beta=1 veins are single edges")
    b = _Builder(delta)
    top, bottom = b.new("root"), b.new("root")
    b.pod(top, bottom, beta, "pod")
    n = len(b.tags)
    return Pod(delta, beta, Graph(n, b.edges), (top, bottom), n - 2)


@dataclass(frozen=True)
class CompoundGraph:
    """Expanded graph with a provenance tag per vertex.

    Tags read ``diagram:<id>``, ``pod:e<i>/<copy>@<depth>`` (depth measured
    from the edge's first endpoint) or ``tree:e<i>/<copy>@<depth>``.
    """

    graph: Graph
    provenance: tuple[str, ...]
    source_diagram: Diagram
    vertex_map: dict[str, int]
    slots: dict[tuple[int, str], tuple[int, ...]] = field(repr=False, compare=False)
    local_rotation: dict[int, tuple[int, ...]] = field(repr=False, compare=False)

    def provenance_text(self) -> str:
        return "".join(f"{v}\t{tag}\n" for v, tag in enumerate(self.provenance))


def expected_order(diagram: Diagram) -> int:
    """Order of the compound graph computed from labels alone."""
    n = len(diagram.vertices) - len(diagram.discarded_vertices())
    for i in diagram.thick_edges():
        e = diagram.edges[i]
        if diagram.is_pending(i):
            n += e.alpha * pending_count(diagram.delta, e.beta)
        else:
            n += e.alpha * internal_count(diagram.delta, e.beta)
    return n


def expand(diagram: Diagram) -> CompoundGraph:
    require_valid(diagram)
    b = _Builder(diagram.delta)
    discarded = set(diagram.discarded_vertices())
    vmap = {v: b.new(f"diagram:{v}") for v in diagram.vertices if v not in discarded}
    slots: dict[tuple[int, str], tuple[int, ...]] = {}

    for i, e in enumerate(diagram.edges):
        if e.thin:
            b.link(vmap[e.u], vmap[e.v])
            slots[(i, e.u)] = (vmap[e.v],)
            slots[(i, e.v)] = (vmap[e.u],)
        elif diagram.is_pending(i):
            r = diagram.pending_root(i)
            firsts = [b.tree(vmap[r], e.beta, f"tree:e{i}/{c}")[0][0] for c in range(e.alpha)]
            slots[(i, r)] = tuple(reversed(firsts))
        else:
            ends = [b.pod(vmap[e.u], vmap[e.v], e.beta, f"pod:e{i}/{c}") for c in range(e.alpha)]
            slots[(i, e.u)] = tuple(top for top, _ in reversed(ends))
            slots[(i, e.v)] = tuple(bottom for _, bottom in ends)

    graph = Graph(len(b.tags), b.edges)
    return CompoundGraph(
        graph,
        tuple(b.tags),
        diagram,
        vmap,
        slots,
        {v: tuple(r) for v, r in b.rotation.items()},
    )
