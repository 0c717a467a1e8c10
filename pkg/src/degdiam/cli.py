"""Command-line entry point: ``degdiam {generate,verify,table,bound,search}``.

Exit status is 0 when every requested check passes, 1 when a verification
fails (its certificate is still written) and 2 for usage or input errors.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction
from pathlib import Path

from . import diagram_io
from ._backend import BACKENDS, DEFAULT_BACKEND
from .embedding import SurfaceSpec, expand_with_embedding, faces_text, trace_faces
from .errors import InputError, ReconstructionUnavailable
from .expansion import expand
from .families import ADMISSIBILITY, FAMILIES, FamilySpec, family_diagram
from .formulas import bounds
from .graph import to_edge_list
from .search import search_labels
from .tables import DEFAULT_SIZE_CAP, certify, render_table

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2

_RULES = "admissibility:\n" + "\n".join(f"  {name:<10} {rule}" for name, rule in ADMISSIBILITY.items())


def _surface(text: str) -> SurfaceSpec:
    try:
        genus, kind = text.split(",")
        orientable = {"orientable": True, "o": True, "true": True,
                      "nonorientable": False, "n": False, "false": False}[kind.strip().lower()]
        return SurfaceSpec(orientable, int(genus))
    except (ValueError, KeyError, InputError) as exc:
        raise argparse.ArgumentTypeError(
            f"expected EULER_GENUS,orientable|nonorientable (e.g. 2,orientable): {exc}") from None


def _bool(text: str) -> bool:
    low = text.lower()
    if low in ("true", "yes", "1"):
        return True
    if low in ("false", "no", "0"):
        return False
    raise argparse.ArgumentTypeError(f"expected true or false, got {text!r}")


def _positive(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return n


def _add_family_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--delta", required=True, type=int, help="maximum degree")
    p.add_argument("--k", required=True, type=int, help="target diameter")
    p.add_argument("--surface", type=_surface, metavar="G,ORIENT",
                   help="surface for QGEN/QGEN_EVEN, e.g. 1,nonorientable")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="degdiam",
        description="Build and verify large graphs of given maximum degree and diameter on surfaces.",
        epilog=_RULES, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--threads", type=_positive, default=os.cpu_count() or 1,
                        help="worker threads for diameter computation (default: available cores)")
    parser.add_argument("--backend", choices=sorted(BACKENDS), default=DEFAULT_BACKEND,
                        help=f"BFS kernel (default: {DEFAULT_BACKEND})")
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="write the expanded graph of a family member",
                       epilog=_RULES, formatter_class=argparse.RawDescriptionHelpFormatter)
    _add_family_args(g)
    g.add_argument("--out", type=Path,
                   help="edge list path; PATH.provenance.tsv, PATH.diagram.json and PATH.faces "
                        "are written next to it (default: edge list on stdout)")

    v = sub.add_parser("verify", help="write a verification certificate",
                       epilog=_RULES, formatter_class=argparse.RawDescriptionHelpFormatter)
    _add_family_args(v)
    v.add_argument("--size-cap", type=int, default=DEFAULT_SIZE_CAP,
                   help=f"largest order whose diameter is computed (default {DEFAULT_SIZE_CAP})")
    v.add_argument("--out", type=Path, help="certificate path (default: stdout)")

    t = sub.add_parser("table", help="rebuild a record table and diff it against the reference")
    which = t.add_mutually_exclusive_group(required=True)
    which.add_argument("--planar", action="store_const", dest="table", const="planar")
    which.add_argument("--toroidal", action="store_const", dest="table", const="toroidal")
    t.add_argument("--rows", action="store_true",
                   help="print machine-readable rows table,delta,k,value,attribution,computed|static")
    t.add_argument("--out", type=Path, help="output path (default: stdout)")

    b = sub.add_parser("bound", help="print every order bound for one surface")
    b.add_argument("--genus", required=True, type=int, help="Euler genus")
    b.add_argument("--orientable", required=True, type=_bool)
    b.add_argument("--delta", required=True, type=int)
    b.add_argument("--k", required=True, type=int)
    b.add_argument("--c", type=Fraction, default=Fraction(1),
                   help="constant of the general upper bound (unspecified at its source; default 1)")

    s = sub.add_parser("search", help="best thick labelling of a skeleton diagram file")
    s.add_argument("--skeleton", required=True, type=Path,
                   help="diagram file; only its vertices and edges are used")
    s.add_argument("--delta", type=int, help="override the file's delta")
    s.add_argument("--k", type=int, help="override the file's k")
    s.add_argument("--orbits", help="edge groups sharing one label, e.g. '0,1,2;3,4'")
    s.add_argument("--out", type=Path, help="write the best diagram here (default: stdout)")
    return parser


def _emit(text: str, path: Path | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        path.write_text(text, encoding="utf-8")


def _spec(args) -> FamilySpec:
    return FamilySpec(args.family, args.delta, args.k, args.surface)


def _generate(args) -> int:
    inst = family_diagram(_spec(args))
    compound = expand(inst.diagram)
    _emit(to_edge_list(compound.graph), args.out)
    if args.out is not None:
        base = str(args.out)
        Path(base + ".provenance.tsv").write_text(compound.provenance_text(), encoding="utf-8")
        diagram_io.dump(base + ".diagram.json", inst.diagram, inst.scheme)
        if inst.scheme is not None:
            emb = expand_with_embedding(inst.diagram, inst.scheme, compound)
            Path(base + ".faces").write_text(faces_text(trace_faces(emb)), encoding="utf-8")
    return EXIT_OK


def _verify(args) -> int:
    cert = certify(_spec(args), size_cap=args.size_cap, threads=args.threads, backend=args.backend)
    _emit(cert.to_text(), args.out)
    return EXIT_OK if cert.passed else EXIT_FAILED


def _table(args) -> int:
    rendered = render_table(args.table)
    _emit(rendered.rows() if args.rows else rendered.text(), args.out)
    return EXIT_OK if not rendered.diff else EXIT_FAILED


def _bound(args) -> int:
    surface = SurfaceSpec(args.orientable, args.genus)
    sys.stdout.write(bounds(surface, args.delta, args.k, args.c).render())
    return EXIT_OK


def _search(args) -> int:
    doc = diagram_io.load(args.skeleton)
    d = doc.diagram
    orbits = None
    if args.orbits:
        orbits = [[int(x) for x in grp.split(",")] for grp in args.orbits.split(";")]
    result = search_labels(d.vertices, [(e.u, e.v) for e in d.edges],
                           args.delta or d.delta, args.k or d.k, orbits=orbits)
    if result.infeasible:
        sys.stderr.write(f"infeasible: none of {result.candidates} labellings passes the checker\n")
        return EXIT_FAILED
    _emit(diagram_io.dumps(result.diagram), args.out)
    sys.stderr.write(f"order {result.order}, verdict {result.report.verdict.value}, "
                     f"{result.checked} of {result.candidates} labellings checked\n")
    return EXIT_OK


COMMANDS = {"generate": _generate, "verify": _verify, "table": _table, "bound": _bound, "search": _search}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except ReconstructionUnavailable as exc:
        sys.stderr.write(f"degdiam: reconstruction unavailable: {exc}\n")
        return EXIT_FAILED
    except (InputError, OSError) as exc:
        sys.stderr.write(f"degdiam: error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
