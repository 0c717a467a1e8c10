"""Rotation systems with edge signs, face tracing and vertex splitting.

An :class:`EmbeddingScheme` gives, for each vertex, the cyclic order of its
edge-ends ("darts" ``(edge index, end)``) and a sign per edge; a ``-1`` edge
reverses the local orientation when crossed. Faces are traced on flags
``(dart, side)`` so nonorientable schemes need no special casing.
"""

from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Hashable

import networkx as nx

from .diagram import Diagram
from .errors import InputError
from .expansion import CompoundGraph, expand

Dart = tuple[int, int]


@dataclass(frozen=True)
class SurfaceSpec:
    """A surface up to homeomorphism: orientability and Euler genus."""

    orientable: bool
    euler_genus: int

    def __post_init__(self):
        if self.euler_genus < 0:
            raise InputError("Euler genus must be non-negative")
        if self.orientable and self.euler_genus % 2:
            raise InputError("orientable surfaces have even Euler genus")
        if not self.orientable and self.euler_genus == 0:
            raise InputError("there is no nonorientable surface of Euler genus 0")

    @property
    def heawood(self) -> int:
        return heawood_number(self.euler_genus)

    @property
    def chi(self) -> int:
        """Chromatic number of the surface (6 on the Klein bottle, else Heawood)."""
        if self.is_klein_bottle:
            return 6
        return self.heawood

    @property
    def is_klein_bottle(self) -> bool:
        return not self.orientable and self.euler_genus == 2

    def contains(self, other: "SurfaceSpec") -> bool:
        """Whether every graph embeddable in ``other`` embeds in this surface."""
        if self.orientable:
            return other.orientable and other.euler_genus <= self.euler_genus
        if other.orientable:
            return other.euler_genus < self.euler_genus
        return other.euler_genus <= self.euler_genus

    def name(self) -> str:
        special = {(True, 0): "sphere", (True, 2): "torus", (False, 1): "projective plane",
                   (False, 2): "Klein bottle"}
        key = (self.orientable, self.euler_genus)
        if key in special:
            return special[key]
        kind = "orientable" if self.orientable else "nonorientable"
        return f"{kind} surface of Euler genus {self.euler_genus}"


SPHERE = SurfaceSpec(True, 0)
TORUS = SurfaceSpec(True, 2)
PROJECTIVE_PLANE = SurfaceSpec(False, 1)
KLEIN_BOTTLE = SurfaceSpec(False, 2)


def heawood_number(g: int) -> int:
    """``floor((7 + sqrt(1 + 24 g)) / 2)`` in exact integer arithmetic."""
    if g < 0:
        raise InputError("Euler genus must be non-negative")
    return (7 + math.isqrt(1 + 24 * g)) // 2


@dataclass(frozen=True)
class EmbeddingScheme:
    vertices: tuple[Hashable, ...]
    edges: tuple[tuple[Hashable, Hashable], ...]
    rotation: dict[Hashable, tuple[Dart, ...]]
    signs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(tuple(e) for e in self.edges))
        object.__setattr__(self, "signs", tuple(self.signs))
        object.__setattr__(self, "rotation", {v: tuple(tuple(d) for d in self.rotation.get(v, ()))
                                              for v in self.vertices})
        if len(self.signs) != len(self.edges):
            raise InputError("one sign per edge required")
        if any(s not in (1, -1) for s in self.signs):
            raise InputError("edge signs must be +1 or -1")
        seen = set()
        for v, darts in self.rotation.items():
            for d in darts:
                i, end = d
                if not 0 <= i < len(self.edges) or end not in (0, 1):
                    raise InputError(f"bad dart {d} at {v!r}")
                if self.edges[i][end] != v:
                    raise InputError(f"dart {d} listed at {v!r} but belongs to {self.edges[i][end]!r}")
                if d in seen:
                    raise InputError(f"dart {d} appears twice")
                seen.add(d)
        if len(seen) != 2 * len(self.edges):
            raise InputError("every edge-end must appear in exactly one rotation")

    @cached_property
    def _position(self) -> dict[Dart, tuple[Hashable, int]]:
        return {d: (v, k) for v, darts in self.rotation.items() for k, d in enumerate(darts)}

    @cached_property
    def _turns(self) -> tuple[list[int], list[int]]:
        """Successor and predecessor of each dart, darts encoded as ``2 * edge + end``."""
        succ = [0] * (2 * len(self.edges))
        pred = [0] * (2 * len(self.edges))
        for darts in self.rotation.values():
            ids = [2 * i + end for i, end in darts]
            for a, b in zip(ids, ids[1:] + ids[:1]):
                succ[a] = b
                pred[b] = a
        return succ, pred

    def succ(self, d: Dart) -> Dart:
        v, k = self._position[d]
        r = self.rotation[v]
        return r[(k + 1) % len(r)]

    def pred(self, d: Dart) -> Dart:
        v, k = self._position[d]
        r = self.rotation[v]
        return r[(k - 1) % len(r)]

    def degree(self, v) -> int:
        return len(self.rotation[v])

    def is_connected(self) -> bool:
        if not self.vertices:
            return False
        parent = {v: v for v in self.vertices}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        parts = len(self.vertices)
        for a, b in self.edges:
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
                parts -= 1
        return parts == 1


def _face_orbits(scheme: EmbeddingScheme) -> list[list[int]]:
    """Facial walks as lists of dart ids ``2 * edge + end`` (the dart leaving each corner)."""
    if not scheme.is_connected():
        raise InputError("face tracing needs a connected graph")
    succ, pred = scheme._turns
    positive = [s == 1 for s in scheme.signs]
    n_flags = 4 * len(scheme.edges)
    used = bytearray(n_flags)
    faces = []
    # flag = 2 * dart + side. Crossing an edge swaps its end; the left side
    # seen from one end is the right side seen from the other, unless the
    # edge is twisted. Turning at a vertex moves to the neighbouring dart.
    for start in range(n_flags):
        if used[start]:
            continue
        walk, flag = [], start
        while True:
            used[flag] = 1
            dart, side = flag >> 1, flag & 1
            walk.append(dart)
            dart ^= 1
            if positive[dart >> 1]:
                side ^= 1
            used[2 * dart + side] = 1
            flag = 2 * succ[dart] if side else 2 * pred[dart] + 1
            if flag == start:
                break
        faces.append(walk)
    return faces


def trace_faces(scheme: EmbeddingScheme) -> list[list]:
    """Facial walks as vertex sequences, each edge side used exactly once."""
    if not scheme.edges:
        if not scheme.is_connected():
            raise InputError("face tracing needs a connected graph")
        return [[scheme.vertices[0]]]
    edges = scheme.edges
    return [[edges[d >> 1][d & 1] for d in walk] for walk in _face_orbits(scheme)]


def face_count(scheme: EmbeddingScheme) -> int:
    if not scheme.edges:
        return 1 if scheme.is_connected() else 0
    return len(_face_orbits(scheme))


def flip_vertex(scheme: EmbeddingScheme, v) -> EmbeddingScheme:
    """Reverse ``v``'s rotation and negate the signs of its non-loop edges."""
    return _flip_all(scheme, {v})


def _flip_all(scheme: EmbeddingScheme, flipped: set) -> EmbeddingScheme:
    signs = [s * (-1 if (a in flipped) != (b in flipped) else 1)
             for s, (a, b) in zip(scheme.signs, scheme.edges)]
    rotation = {v: tuple(reversed(r)) if v in flipped else r for v, r in scheme.rotation.items()}
    return EmbeddingScheme(scheme.vertices, scheme.edges, rotation, tuple(signs))


def _spanning_flips(scheme: EmbeddingScheme) -> set:
    """Vertices to flip so that a BFS spanning forest carries only +1 signs."""
    flipped, seen = set(), set()
    for root in scheme.vertices:
        if root in seen:
            continue
        seen.add(root)
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for i, end in scheme.rotation[u]:
                w = scheme.edges[i][1 - end]
                if w in seen:
                    continue
                seen.add(w)
                # sign of edge i once u's own flip is applied
                if scheme.signs[i] * (-1 if u in flipped else 1) == -1:
                    flipped.add(w)
                queue.append(w)
    return flipped


def normalize_signs(scheme: EmbeddingScheme) -> EmbeddingScheme:
    """Equivalent scheme in which every edge of a BFS spanning forest has sign +1."""
    return _flip_all(scheme, _spanning_flips(scheme))


def is_orientable(scheme: EmbeddingScheme) -> bool:
    """True when some set of vertex flips makes every sign +1."""
    flipped = _spanning_flips(scheme)
    return all(s * (-1 if (a in flipped) != (b in flipped) else 1) == 1
               for s, (a, b) in zip(scheme.signs, scheme.edges))


def euler_genus(scheme: EmbeddingScheme) -> SurfaceSpec:
    """Surface of the embedding: Euler genus ``2 - V + E - F`` and orientability."""
    g = 2 - len(scheme.vertices) + len(scheme.edges) - face_count(scheme)
    return SurfaceSpec(is_orientable(scheme), g)


def _rotate_to(darts: tuple[Dart, ...], start: Dart) -> tuple[Dart, ...]:
    k = darts.index(start)
    return darts[k:] + darts[:k]


def split_vertex(scheme: EmbeddingScheme, v, first_part_size: int, start_edge: int | None = None,
                 names: tuple | None = None) -> EmbeddingScheme:
    """Replace ``v`` by adjacent ``v'`` and ``v''``, splitting its rotation.

    Reading ``v``'s rotation from the dart of ``start_edge`` (default: the
    lowest-numbered incident edge), ``v'`` keeps the first
    ``first_part_size`` darts and ``v''`` the rest; the new edge ``v'v''``
    (appended last, sign +1) closes both rotations. The change is local to
    ``v``, so the Euler genus and orientability are unchanged.
    """
    darts = scheme.rotation[v]
    if not 1 <= first_part_size < len(darts):
        raise InputError(f"first_part_size must lie in 1..{len(darts) - 1}")
    if start_edge is None:
        start = min(darts)
    else:
        matches = [d for d in darts if d[0] == start_edge]
        if not matches:
            raise InputError(f"edge {start_edge} is not incident with {v!r}")
        start = matches[0]
    if names is None:
        names = (f"{v}'", f"{v}''") if isinstance(v, str) else ((v, 0), (v, 1))
    v1, v2 = names
    order = _rotate_to(darts, start)
    first, second = order[:first_part_size], order[first_part_size:]
    owner = {d: v1 for d in first} | {d: v2 for d in second}

    edges = []
    for i, (a, b) in enumerate(scheme.edges):
        a2 = owner.get((i, 0), a) if a == v else a
        b2 = owner.get((i, 1), b) if b == v else b
        edges.append((a2, b2))
    new = len(edges)
    edges.append((v1, v2))

    vertices = []
    for w in scheme.vertices:
        vertices.extend((v1, v2) if w == v else (w,))
    rotation = {w: r for w, r in scheme.rotation.items() if w != v}
    rotation[v1] = first + ((new, 0),)
    rotation[v2] = second + ((new, 1),)
    return EmbeddingScheme(tuple(vertices), tuple(edges), rotation, scheme.signs + (1,))


def add_parallel_edge(scheme: EmbeddingScheme, i: int) -> EmbeddingScheme:
    """Append an edge parallel to edge ``i`` bounding a digon face with it."""
    a, b = scheme.edges[i]
    if a == b:
        raise InputError("cannot add a parallel copy of a loop")
    new = len(scheme.edges)
    sign = scheme.signs[i]
    rotation = dict(scheme.rotation)

    def insert(v, anchor, dart, after):
        r = list(rotation[v])
        k = r.index(anchor)
        r.insert(k + 1 if after else k, dart)
        rotation[v] = tuple(r)

    insert(a, (i, 0), (new, 0), after=True)
    insert(b, (i, 1), (new, 1), after=(sign == -1))
    return EmbeddingScheme(scheme.vertices, scheme.edges + ((a, b),), rotation, scheme.signs + (sign,))


def add_pendant_edge(scheme: EmbeddingScheme, v, leaf) -> EmbeddingScheme:
    """Append an edge from ``v`` to a new degree-1 vertex ``leaf``."""
    if leaf in scheme.rotation:
        raise InputError(f"vertex {leaf!r} already exists")
    new = len(scheme.edges)
    rotation = dict(scheme.rotation)
    rotation[v] = scheme.rotation[v] + ((new, 0),)
    rotation[leaf] = ((new, 1),)
    return EmbeddingScheme(scheme.vertices + (leaf,), scheme.edges + ((v, leaf),), rotation,
                           scheme.signs + (1,))


def planar_scheme(vertices, edges) -> EmbeddingScheme:
    """Genus-0 scheme for a planar multigraph (parallel edges drawn as nested digons)."""
    vertices = tuple(vertices)
    simple = nx.Graph()
    simple.add_nodes_from(vertices)
    simple.add_edges_from(edges)
    ok, emb = nx.check_planarity(simple)
    if not ok:
        raise InputError("graph is not planar")
    rank = {v: k for k, v in enumerate(vertices)}
    bundles: dict[frozenset, list[int]] = {}
    for i, (a, b) in enumerate(edges):
        if a == b:
            raise InputError("loops are not supported")
        bundles.setdefault(frozenset((a, b)), []).append(i)
    rotation = {}
    for v in vertices:
        darts = []
        for w in (emb.neighbors_cw_order(v) if v in emb else ()):
            idx = bundles[frozenset((v, w))]
            if rank[v] > rank[w]:
                idx = idx[::-1]
            darts.extend((i, 0 if edges[i][0] == v else 1) for i in idx)
        rotation[v] = tuple(darts)
    return EmbeddingScheme(vertices, tuple(tuple(e) for e in edges), rotation, (1,) * len(edges))


def diagram_scheme_matches(diagram: Diagram, scheme: EmbeddingScheme) -> bool:
    return (tuple(scheme.vertices) == tuple(diagram.vertices)
            and tuple(scheme.edges) == tuple((e.u, e.v) for e in diagram.edges))


def expand_with_embedding(diagram: Diagram, scheme: EmbeddingScheme,
                          compound: CompoundGraph | None = None) -> EmbeddingScheme:
    """Rotation system for ``expand(diagram)`` induced by a scheme of the diagram.

    Each thick edge's dart is replaced by its pods' (or trees') first edges,
    laid side by side as parallel ribbons; inside a pod every edge has sign
    +1 except those meeting the second root, which inherit the diagram edge's
    sign.
    """
    if not diagram_scheme_matches(diagram, scheme):
        raise InputError("scheme does not describe this diagram's multigraph")
    if compound is None:
        compound = expand(diagram)
    graph = compound.graph
    edges = tuple(graph.edges())
    index = {e: k for k, e in enumerate(edges)}
    signs = [1] * len(edges)

    def dart(u: int, w: int) -> Dart:
        return (index[(u, w)], 0) if u < w else (index[(w, u)], 1)

    for i, e in enumerate(diagram.edges):
        if diagram.edges[i].thin:
            u, w = compound.vertex_map[e.u], compound.vertex_map[e.v]
            signs[index[(min(u, w), max(u, w))]] = scheme.signs[i]
        elif not diagram.is_pending(i):
            y = compound.vertex_map[e.v]
            for nbr in compound.slots[(i, e.v)]:
                signs[index[(min(y, nbr), max(y, nbr))]] = scheme.signs[i]

    rotation = {}
    for v, gv in compound.vertex_map.items():
        darts = []
        for i, _ in scheme.rotation[v]:
            slot = compound.slots.get((i, v), ())
            e = diagram.edges[i]
            if e.thick and not diagram.is_pending(i) and v == e.v and scheme.signs[i] == -1:
                slot = slot[::-1]
            darts.extend(dart(gv, nbr) for nbr in slot)
        rotation[gv] = tuple(darts)
    for gv, nbrs in compound.local_rotation.items():
        rotation[gv] = tuple(dart(gv, nbr) for nbr in nbrs)
    return EmbeddingScheme(tuple(range(graph.vertex_count)), edges, rotation, tuple(signs))


def complete_graph_scheme(n: int, offsets: tuple[int, ...]) -> EmbeddingScheme:
    """Orientable scheme of K_n where vertex i lists ``i + offsets[0], ...`` (mod n)."""
    vertices = tuple(str(i) for i in range(n))
    edges = tuple((str(a), str(b)) for a in range(n) for b in range(a + 1, n))
    index = {frozenset(e): k for k, e in enumerate(edges)}
    rotation = {}
    for i in range(n):
        darts = []
        for off in offsets:
            j = (i + off) % n
            k = index[frozenset((str(i), str(j)))]
            darts.append((k, 0 if i < j else 1))
        rotation[str(i)] = tuple(darts)
    return EmbeddingScheme(vertices, edges, rotation, (1,) * len(edges))


def k7_torus_scheme() -> EmbeddingScheme:
    """The triangular embedding of K7 in the torus (14 faces)."""
    return complete_graph_scheme(7, (1, 3, 2, 6, 4, 5))


def k4_sphere_scheme() -> EmbeddingScheme:
    return planar_scheme([str(i) for i in range(4)],
                         [(str(a), str(b)) for a in range(4) for b in range(a + 1, 4)])


def faces_text(faces: list[list]) -> str:
    return "".join(" ".join(str(v) for v in face) + "\n" for face in faces)


def triangulation_scheme(triangles) -> EmbeddingScheme:
    """Signed scheme of a simple graph from the faces of a triangulation.

    At each vertex the triangles around it are chained into a single cycle
    of neighbours; an edge gets sign -1 exactly when its two incident
    triangles are traversed in clashing directions at its two ends.
    """
    triangles = [tuple(str(x) for x in t) for t in triangles]
    vertices = tuple(sorted({v for t in triangles for v in t}, key=lambda s: (len(s), s)))
    pairs = sorted({tuple(sorted((a, b), key=vertices.index))
                    for t in triangles for a, b in itertools.combinations(t, 2)},
                   key=lambda e: (vertices.index(e[0]), vertices.index(e[1])))
    index = {frozenset(e): k for k, e in enumerate(pairs)}
    around: dict[str, dict[str, list[str]]] = {v: {} for v in vertices}
    for t in triangles:
        for v in t:
            a, b = (x for x in t if x != v)
            around[v].setdefault(a, []).append(b)
            around[v].setdefault(b, []).append(a)
    cyc = {}
    for v in vertices:
        link = around[v]
        if any(len(ns) != 2 for ns in link.values()):
            raise InputError(f"link of {v!r} is not a cycle")
        start = min(link, key=vertices.index)
        order, prev, cur = [start], None, start
        while True:
            a, b = link[cur]
            if prev is None:
                nxt = min(a, b, key=vertices.index)
            elif a == prev:
                nxt = b
            else:
                nxt = a
            if nxt == start:
                break
            order.append(nxt)
            prev, cur = cur, nxt
        if len(order) != len(link):
            raise InputError(f"link of {v!r} is not a single cycle")
        cyc[v] = order
    signs = []
    for u, v in pairs:
        ru, rv = cyc[u], cyc[v]
        k = ru.index(v)
        before, after = ru[k - 1], ru[(k + 1) % len(ru)]
        j = rv.index(u)
        # consistent orientation reverses the flanking pair at the far end
        signs.append(1 if rv[(j + 1) % len(rv)] == before and rv[j - 1] == after else -1)
    rotation = {}
    for v in vertices:
        darts = []
        for w in cyc[v]:
            k = index[frozenset((v, w))]
            darts.append((k, 0 if pairs[k][0] == v else 1))
        rotation[v] = tuple(darts)
    return EmbeddingScheme(vertices, tuple(pairs), rotation, tuple(signs))


K6_PROJECTIVE_TRIANGLES = ("012", "023", "034", "045", "051", "124", "235", "341", "452", "513")


def k6_projective_scheme() -> EmbeddingScheme:
    """The triangular embedding of K6 in the projective plane (10 faces)."""
    return triangulation_scheme(K6_PROJECTIVE_TRIANGLES)
