"""Generate the shipped C/Y/Z diagram files and their oracle certificates.

The planar families are kept as data. This script is the one place that
knows how they are put together; every file it writes is checked by exact
BFS, degree count and face tracing before its certificate is written, and
the test suite re-checks each certificate against a fresh expansion.

Layout (vertex ``a`` shown on the left)::

    outer thin triangle b, c, h      (Y and Z subdivide it with x, y, z)
    thin crosses a-b, g-h, c-i
    thin hexagon a-d-g-e-i-f-a
    thick spokes a-c, b-g, h-i       (delta-3)(delta, k-1)
    thick inner triangle d, e, f     labels summing to delta-2 at each corner

For odd delta the inner triangle cannot be balanced and ``f`` is one short;
Y spends that slack on a pending edge ``1(delta, (k-3)/2)`` at ``f``. Z adds
a pending edge ``(delta-2)(delta, (k-5)/2)`` at each subdivision vertex.

Run from the repository root::

    python tools/build_reconstructions.py
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from degdiam.diagram import Diagram, DiagramEdge, check_conditions
from degdiam.diagram_io import dumps
from degdiam.embedding import euler_genus, expand_with_embedding, planar_scheme
from degdiam.expansion import expand
from degdiam.formulas import family_order
from degdiam.graph import degree_profile, diameter_exact

OUT = Path(__file__).resolve().parent.parent / "src" / "degdiam" / "data" / "reconstructions"

CROSSES = [("a", "b"), ("g", "h"), ("c", "i")]
HEXAGON = [("a", "d"), ("d", "g"), ("g", "e"), ("e", "i"), ("i", "f"), ("f", "a")]
OUTER = [("b", "c"), ("c", "h"), ("b", "h")]
SUBDIVIDE = {("b", "c"): "x", ("c", "h"): "y", ("b", "h"): "z"}


def planar_diagram(family: str, delta: int, k: int) -> Diagram:
    vertices = list("abcdefghi")
    thin = list(CROSSES) + list(HEXAGON)
    if family == "C":
        thin += OUTER
    else:
        for u, v in OUTER:
            m = SUBDIVIDE[(u, v)]
            vertices.append(m)
            thin += [(u, m), (m, v)]
    edges = [DiagramEdge(u, v) for u, v in thin]
    edges += [DiagramEdge(u, v, delta - 3, k - 1) for u, v in (("a", "c"), ("b", "g"), ("h", "i"))]
    if delta % 2 == 0:
        inner = [(delta - 2) // 2] * 3
    else:
        inner = [(delta - 1) // 2, (delta - 3) // 2, (delta - 3) // 2]
    edges += [DiagramEdge(u, v, al, k - 1) for (u, v), al in zip((("d", "e"), ("e", "f"), ("f", "d")), inner)]
    if family in ("Y", "Z") and delta % 2 == 1:
        vertices.append("f+")
        edges.append(DiagramEdge("f", "f+", 1, (k - 3) // 2))
    if family == "Z":
        for m in ("x", "y", "z"):
            vertices.append(f"{m}+")
            edges.append(DiagramEdge(m, f"{m}+", delta - 2, (k - 5) // 2))
    return Diagram(delta, k, tuple(vertices), tuple(edges))


def certify_file(family: str, delta: int, k: int) -> tuple[str, str]:
    diagram = planar_diagram(family, delta, k)
    scheme = planar_scheme(diagram.vertices, [(e.u, e.v) for e in diagram.edges])
    compound = expand(diagram)
    graph = compound.graph
    order = graph.vertex_count
    dmax, _, _ = degree_profile(graph)
    diameter = diameter_exact(graph)
    surface = euler_genus(expand_with_embedding(diagram, scheme, compound))
    report = check_conditions(diagram)
    expected = family_order(family, delta, k)
    problems = []
    if order != expected:
        problems.append(f"order {order} != closed form {expected}")
    if dmax > delta:
        problems.append(f"max degree {dmax} > {delta}")
    if diameter != k:
        problems.append(f"diameter {diameter} != {k}")
    if surface.euler_genus != 0:
        problems.append(f"traced Euler genus {surface.euler_genus}")
    if problems:
        raise SystemExit(f"{family} delta={delta} k={k}: " + "; ".join(problems))
    cert = "".join(f"{key}: {value}\n" for key, value in (
        ("family", family), ("delta", delta), ("k", k), ("order", order), ("max_degree", dmax),
        ("diameter", diameter), ("euler_genus", surface.euler_genus),
        ("orientable", str(surface.orientable).lower()), ("checker_verdict", report.verdict.value),
    ))
    return dumps(diagram, scheme), cert


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", type=Path, default=OUT)
    parser.add_argument("--max-delta", type=int, default=10)
    args = parser.parse_args(argv)
    args.out.mkdir(parents=True, exist_ok=True)
    for family, ks in (("C", (5, 7, 9)), ("Y", (5, 7, 9)), ("Z", (7, 9))):
        for k in ks:
            for delta in range(4, args.max_delta + 1):
                text, cert = certify_file(family, delta, k)
                stem = f"{family}_D{delta}_k{k}"
                (args.out / f"{stem}.json").write_text(text, encoding="utf-8")
                (args.out / f"{stem}.cert").write_text(cert, encoding="utf-8")
                print(stem, cert.split("order: ")[1].split("\n")[0], file=sys.stderr)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
