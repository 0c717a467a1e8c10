"""Exhaustive label search over a small skeleton multigraph.

Given the unlabelled skeleton of a diagram, try every labelling ``alpha(delta,
beta)`` of its edges that respects the degree and ``beta`` limits, and
return the one with the largest expanded order whose condition report is
PASS or PASS_RELAXED.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Sequence

from .diagram import ConditionReport, Diagram, DiagramEdge, Verdict, check_conditions, validate
from .errors import InputError
from .expansion import expected_order

MAX_SKELETON_VERTICES = 16
INFEASIBLE = "infeasible"


@dataclass(frozen=True)
class LabelBounds:
    alpha_min: int = 1
    alpha_max: int | None = None
    beta_min: int = 1
    beta_max: int | None = None


@dataclass(frozen=True)
class SearchResult:
    status: str  # "found" or INFEASIBLE
    diagram: Diagram | None
    report: ConditionReport | None
    order: int | None
    candidates: int
    checked: int

    @property
    def infeasible(self) -> bool:
        return self.status == INFEASIBLE


def _labels_for(pending: bool, delta: int, k: int, bounds: LabelBounds):
    beta_cap = k // 2 if pending else k
    a_hi = delta if bounds.alpha_max is None else min(delta, bounds.alpha_max)
    b_hi = beta_cap if bounds.beta_max is None else min(beta_cap, bounds.beta_max)
    out = []
    for a in range(bounds.alpha_min, a_hi + 1):
        for b in range(bounds.beta_min, b_hi + 1):
            if b == 1 and a > 1 and not pending:
                continue
            out.append((a, b))
    return out


def search_labels(vertices: Sequence[str], edges: Sequence[tuple[str, str]], delta: int, k: int,
                  orbits: Sequence[Sequence[int]] | None = None,
                  bounds: dict[int, LabelBounds] | None = None,
                  max_assignments: int = 2_000_000) -> SearchResult:
    """Best labelling of a skeleton by expanded order.

    Parameters
    ----------
    vertices, edges
        The skeleton multigraph; at most 16 vertices.
    delta, k
        Maximum degree and target diameter.
    orbits
        Groups of edge indices forced to carry the same label (for example
        the edge orbits of a symmetry group). Defaults to one group per edge.
    bounds
        Optional per-edge limits on ``alpha`` and ``beta``.
    max_assignments
        Refuse to run when the raw label space is larger than this.

    Returns
    -------
    SearchResult
        ``status`` is ``"found"`` with the best diagram, or ``"infeasible"``
        when no labelling passes the checker. Ties in order go to the
        lexicographically smallest label vector ``((alpha, beta), ...)`` in
        edge order.
    """
    vertices = tuple(vertices)
    edges = [tuple(e) for e in edges]
    if len(vertices) > MAX_SKELETON_VERTICES:
        raise InputError(f"skeleton has {len(vertices)} vertices; the search is limited to "
                         f"{MAX_SKELETON_VERTICES}")
    if orbits is None:
        orbits = [[i] for i in range(len(edges))]
    orbits = [list(o) for o in orbits]
    if sorted(i for o in orbits for i in o) != list(range(len(edges))):
        raise InputError("orbits must partition the edge indices")
    bounds = bounds or {}

    skeleton = Diagram(delta, k, vertices, tuple(DiagramEdge(u, v) for u, v in edges))
    pending = [skeleton.is_pending(i) for i in range(len(edges))]
    choices = []
    for orb in orbits:
        per_edge = [set(_labels_for(pending[i], delta, k, bounds.get(i, LabelBounds()))) for i in orb]
        choices.append(sorted(set.intersection(*per_edge)))
    space = math.prod(len(c) for c in choices)
    if space > max_assignments:
        raise InputError(f"label space has {space} assignments, above max_assignments={max_assignments}")

    candidates = []
    for pick in itertools.product(*choices):
        labels = [None] * len(edges)
        for orb, lab in zip(orbits, pick):
            for i in orb:
                labels[i] = lab
        diagram = Diagram(delta, k, vertices,
                          tuple(DiagramEdge(u, v, a, b) for (u, v), (a, b) in zip(edges, labels)))
        if validate(diagram):
            continue
        candidates.append((-expected_order(diagram), labels, diagram))
    candidates.sort(key=lambda c: (c[0], c[1]))

    for checked, (neg_order, _, diagram) in enumerate(candidates, start=1):
        report = check_conditions(diagram)
        if report.verdict in (Verdict.PASS, Verdict.PASS_RELAXED):
            return SearchResult("found", diagram, report, -neg_order, len(candidates), checked)
    return SearchResult(INFEASIBLE, None, None, None, len(candidates), len(candidates))
