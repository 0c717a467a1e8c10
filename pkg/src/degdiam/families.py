"""Named diagram families and the vertex-splitting surface construction.

``P`` is built from the Petersen graph, ``Q`` and ``QGEN`` by splitting every
vertex of a triangular embedding of a complete graph, and ``C``/``Y``/``Z``
are read from the shipped reconstruction files under
``data/reconstructions`` (each accompanied by a ``.cert`` oracle
certificate).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cache
from importlib import resources

from .diagram import Diagram, DiagramEdge
from .diagram_io import loads
from .embedding import (
    PROJECTIVE_PLANE,
    SPHERE,
    TORUS,
    EmbeddingScheme,
    SurfaceSpec,
    add_parallel_edge,
    add_pendant_edge,
    euler_genus,
    k4_sphere_scheme,
    k6_projective_scheme,
    k7_torus_scheme,
    split_vertex,
)
from .errors import InputError, ReconstructionUnavailable

FAMILIES = ("C", "Y", "Z", "P", "Q", "QGEN", "QGEN_EVEN")
PLANAR_FAMILIES = ("C", "Y", "Z")

ADMISSIBILITY = {
    "C": "odd k >= 5, delta >= 4",
    "Y": "odd k >= 5, delta >= 4",
    "Z": "odd k >= 7, delta >= 4",
    "P": "k >= 3, delta >= 3",
    "Q": "odd k >= 3, delta >= 5",
    "QGEN": "odd k >= 3, delta > ceil((chi - 1) / 2) + 1",
    "QGEN_EVEN": "as QGEN, and chi of the surface even",
}


def _ceil_half(n: int) -> int:
    return (n + 1) // 2


@dataclass(frozen=True)
class FamilySpec:
    """A family name with its parameters; ``surface`` is only read by QGEN variants."""

    name: str
    delta: int
    k: int
    surface: SurfaceSpec | None = None

    def __post_init__(self):
        if self.name not in FAMILIES:
            raise InputError(f"unknown family {self.name!r}; expected one of {', '.join(FAMILIES)}")

    @property
    def chi(self) -> int:
        if self.name == "Q":
            return 7
        if self.surface is None:
            raise InputError(f"family {self.name} needs a surface")
        return self.surface.chi

    def problems(self) -> list[str]:
        """Violated admissibility bounds (empty when admissible)."""
        n, d, k = self.name, self.delta, self.k
        out = []
        if n in ("C", "Y", "Z"):
            low = 7 if n == "Z" else 5
            if k % 2 == 0 or k < low:
                out.append(f"{n} needs odd k >= {low}, got k={k}")
            if d < 4:
                out.append(f"{n} needs delta >= 4, got delta={d}")
        elif n == "P":
            if k < 3:
                out.append(f"P needs k >= 3, got k={k}")
            if d < 3:
                out.append(f"P needs delta >= 3, got delta={d}")
        else:
            if k % 2 == 0 or k < 3:
                out.append(f"{n} needs odd k >= 3, got k={k} (even k has no diameter guarantee)")
            if n == "Q":
                if d < 5:
                    out.append(f"Q needs delta >= 5, got delta={d}")
            else:
                if self.surface is None:
                    return out + [f"{n} needs a surface"]
                chi = self.chi
                if d <= _ceil_half(chi - 1) + 1:
                    out.append(f"{n} on the {self.surface.name()} (chi={chi}) needs "
                               f"delta > {_ceil_half(chi - 1) + 1}, got delta={d}")
                if n == "QGEN_EVEN" and chi % 2:
                    out.append(f"QGEN_EVEN needs an even chi, the {self.surface.name()} has chi={chi}")
        return out

    def require_admissible(self) -> None:
        problems = self.problems()
        if problems:
            raise InputError("; ".join(problems))

    def label(self) -> str:
        base = f"{self.name}(delta={self.delta}, k={self.k})"
        if self.name in ("QGEN", "QGEN_EVEN") and self.surface is not None:
            base += f" on the {self.surface.name()}"
        return base


@dataclass(frozen=True)
class FamilyInstance:
    spec: FamilySpec
    diagram: Diagram
    scheme: EmbeddingScheme | None
    notes: tuple[str, ...] = field(default=())


# --- Petersen-based family P -------------------------------------------------

PETERSEN_VERTICES = tuple(f"o{j}" for j in range(5)) + tuple(f"i{j}" for j in range(5))


def petersen_edges() -> list[tuple[str, str]]:
    """Outer 5-cycle, inner pentagram, then the five spokes."""
    outer = [(f"o{j}", f"o{(j + 1) % 5}") for j in range(5)]
    inner = [(f"i{j}", f"i{(j + 2) % 5}") for j in range(5)]
    spokes = [(f"o{j}", f"i{j}") for j in range(5)]
    return outer + inner + spokes


@cache
def petersen_torus_scheme() -> EmbeddingScheme:
    """First orientable rotation system of the Petersen graph tracing to the torus.

    Vertex rotations are enumerated in a fixed order (each vertex keeps or
    reverses its sorted dart list), so the result is deterministic.
    """
    edges = petersen_edges()
    base = {v: [] for v in PETERSEN_VERTICES}
    for i, (a, b) in enumerate(edges):
        base[a].append((i, 0))
        base[b].append((i, 1))
    for choice in itertools.product((False, True), repeat=len(PETERSEN_VERTICES)):
        rotation = {v: tuple(reversed(base[v])) if flip else tuple(base[v])
                    for v, flip in zip(PETERSEN_VERTICES, choice)}
        scheme = EmbeddingScheme(PETERSEN_VERTICES, tuple(edges), rotation, (1,) * len(edges))
        if euler_genus(scheme) == TORUS:
            return scheme
    raise AssertionError("the Petersen graph embeds in the torus")


def petersen_diagram(delta: int, k: int) -> Diagram:
    edges = [DiagramEdge(a, b) for a, b in petersen_edges()[:10]]
    edges += [DiagramEdge(a, b, delta - 2, k - 1) for a, b in petersen_edges()[10:]]
    return Diagram(delta, k, PETERSEN_VERTICES, tuple(edges))


# --- vertex-splitting construction ------------------------------------------

BUILTIN_COMPLETE_SCHEMES = {
    4: (SPHERE, k4_sphere_scheme),
    6: (PROJECTIVE_PLANE, k6_projective_scheme),
    7: (TORUS, k7_torus_scheme),
}


def builtin_complete_scheme(surface: SurfaceSpec) -> EmbeddingScheme:
    """Shipped embedding of the complete graph on ``chi(surface)`` vertices, if one fits."""
    entry = BUILTIN_COMPLETE_SCHEMES.get(surface.chi)
    if entry is None or not surface.contains(entry[0]):
        raise InputError(f"no built-in embedding of K_{surface.chi} in the {surface.name()}; "
                         "pass a complete-graph scheme explicitly")
    return entry[1]()


def _is_complete(scheme: EmbeddingScheme) -> bool:
    n = len(scheme.vertices)
    pairs = {frozenset(e) for e in scheme.edges}
    return (len(scheme.edges) == n * (n - 1) // 2 and len(pairs) == len(scheme.edges)
            and all(len(p) == 2 for p in pairs))


def generalized_q(surface: SurfaceSpec, delta: int, k: int, complete_scheme: EmbeddingScheme | None = None,
                  even_variant: bool = False) -> tuple[Diagram, EmbeddingScheme]:
    """Split every vertex of a complete-graph embedding into a thin/thick pair.

    Each vertex ``v`` of ``K_chi`` becomes ``v'`` (its first
    ``floor((chi-1)/2)`` edges in rotation order) and ``v''`` (the rest),
    joined by a thin edge and a parallel thick edge labelled
    ``(delta - 1 - ceil((chi-1)/2))(delta, k-1)``. With ``even_variant`` (even
    chi only) ``v'``, which is one short of ``delta``, also receives a pending
    edge ``1(delta, (k-3)/2)`` when ``k >= 5``.

    Returns the diagram and a scheme embedding it on ``surface``.
    """
    spec = FamilySpec("QGEN_EVEN" if even_variant else "QGEN", delta, k, surface)
    spec.require_admissible()
    chi = surface.chi
    if complete_scheme is None:
        complete_scheme = builtin_complete_scheme(surface)
    if len(complete_scheme.vertices) != chi or not _is_complete(complete_scheme):
        raise InputError(f"the scheme must embed the complete graph on chi={chi} vertices")
    if not surface.contains(euler_genus(complete_scheme)):
        raise InputError(f"the scheme does not embed in the {surface.name()}")

    alpha = delta - 1 - _ceil_half(chi - 1)
    first = (chi - 1) // 2
    labels: list[tuple[int, int]] = [(1, 1)] * len(complete_scheme.edges)
    scheme = complete_scheme
    for v in complete_scheme.vertices:
        a, b = f"{v}'", f"{v}''"
        scheme = split_vertex(scheme, v, first, names=(a, b))
        split_edge = len(scheme.edges) - 1
        scheme = add_parallel_edge(scheme, split_edge)
        labels += [(1, 1), (alpha, k - 1)]
        if even_variant and k >= 5:
            scheme = add_pendant_edge(scheme, a, f"{v}*")
            labels.append((1, (k - 3) // 2))
    edges = tuple(DiagramEdge(u, w, al, be) for (u, w), (al, be) in zip(scheme.edges, labels))
    return Diagram(delta, k, scheme.vertices, edges), scheme


# --- shipped reconstructions ------------------------------------------------

def reconstruction_name(name: str, delta: int, k: int) -> str:
    return f"{name}_D{delta}_k{k}"


def parse_certificate(text: str) -> dict[str, str]:
    out = {}
    for line in text.splitlines():
        if line.strip() and not line.startswith("#"):
            key, _, value = line.partition(":")
            out[key.strip()] = value.strip()
    return out


def load_reconstruction(name: str, delta: int, k: int) -> tuple[Diagram, EmbeddingScheme | None, dict[str, str]]:
    """Read a shipped C/Y/Z diagram together with its oracle certificate."""
    stem = reconstruction_name(name, delta, k)
    folder = resources.files("degdiam") / "data" / "reconstructions"
    diagram_file, cert_file = folder / f"{stem}.json", folder / f"{stem}.cert"
    if not diagram_file.is_file():
        raise ReconstructionUnavailable(f"no shipped reconstruction {stem}.json")
    if not cert_file.is_file():
        raise ReconstructionUnavailable(f"{stem}.json has no oracle certificate {stem}.cert")
    doc = loads(diagram_file.read_text(encoding="utf-8"))
    cert = parse_certificate(cert_file.read_text(encoding="utf-8"))
    if (doc.diagram.delta, doc.diagram.k) != (delta, k):
        raise ReconstructionUnavailable(f"{stem}.json holds delta={doc.diagram.delta}, k={doc.diagram.k}")
    for key in ("order", "max_degree", "diameter", "euler_genus"):
        if key not in cert:
            raise ReconstructionUnavailable(f"{stem}.cert lacks the {key} field")
    if cert["diameter"] != str(k) or int(cert["max_degree"]) > delta or cert["euler_genus"] != "0":
        raise ReconstructionUnavailable(f"{stem}.cert does not certify a planar graph of "
                                        f"degree <= {delta} and diameter {k}")
    return doc.diagram, doc.scheme, cert


def available_reconstructions() -> list[tuple[str, int, int]]:
    folder = resources.files("degdiam") / "data" / "reconstructions"
    if not folder.is_dir():
        return []
    found = []
    for entry in folder.iterdir():
        if entry.name.endswith(".json"):
            fam, d, k = entry.name[:-5].split("_")
            found.append((fam, int(d[1:]), int(k[1:])))
    return sorted(found)


# --- dispatcher --------------------------------------------------------------

def family_diagram(spec: FamilySpec, complete_scheme: EmbeddingScheme | None = None) -> FamilyInstance:
    """Build the diagram (and an embedding scheme where one is known) for ``spec``."""
    spec.require_admissible()
    n, d, k = spec.name, spec.delta, spec.k
    if n == "P":
        return FamilyInstance(spec, petersen_diagram(d, k), petersen_torus_scheme())
    if n == "Q":
        diagram, scheme = generalized_q(TORUS, d, k, complete_scheme or k7_torus_scheme())
        return FamilyInstance(spec, diagram, scheme, (
            "order coefficient 7(delta-4) from chi(torus)=7; a printed variant with 5(delta-4) "
            "disagrees with every tabulated Q value",))
    if n in ("QGEN", "QGEN_EVEN"):
        diagram, scheme = generalized_q(spec.surface, d, k, complete_scheme, even_variant=(n == "QGEN_EVEN"))
        return FamilyInstance(spec, diagram, scheme)
    diagram, scheme, cert = load_reconstruction(n, d, k)
    return FamilyInstance(spec, diagram, scheme, (
        f"reconstructed diagram; shipped certificate records order {cert['order']}",))
