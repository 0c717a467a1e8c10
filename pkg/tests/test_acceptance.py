"""Acceptance suite: criteria 1 to 10, each at its stated tolerance and time budget.

Every criterion is a function returning ``(passed, detail)``. Under pytest
each one is a test and the conftest prints one ``criterion N: PASS|FAIL``
line per criterion in the terminal summary. Run directly to get the same
lines without pytest::

    python3 tests/test_acceptance.py

Expected values are literals transcribed from the record tables and closed
forms written out here, not read back from the package. Diameters computed
for one criterion are cached and reused by the soundness check of
criterion 8, whose budget excludes BFS time.
"""

from __future__ import annotations

import math
import os
import subprocess
import sys
import time
from fractions import Fraction

import pytest

from degdiam import (
    BACKENDS,
    FamilySpec,
    Verdict,
    check_conditions,
    degree_profile,
    diameter_exact,
    euler_genus,
    expand,
    expand_with_embedding,
    family_diagram,
    family_order,
    generalized_q,
    improvement_ratio,
    moore,
)
from degdiam.embedding import (
    PROJECTIVE_PLANE,
    SPHERE,
    TORUS,
    SurfaceSpec,
    face_count,
    k7_torus_scheme,
    triangulation_scheme,
)
from degdiam.expansion import build_pod
from degdiam.families import available_reconstructions, load_reconstruction
from degdiam.formulas import bounds
from degdiam.graph import to_edge_list
from degdiam.tables import load_reference, render_table

THREADS = os.cpu_count() or 1
BFS_CAP_TOROIDAL = int(os.environ.get("DEGDIAM_ACCEPTANCE_BFS_CAP", 25_000))  # raise to include Q(10,9)
BFS_CAP_PLANAR = 31_000

# Toroidal table cells produced by P and Q, transcribed from the table.
P_CELLS = {
    (3, 9): 120, (3, 10): 160,
    (4, 6): 90, (4, 7): 180, (4, 8): 270, (4, 9): 540, (4, 10): 810,
    (5, 5): 100, (5, 6): 160, (5, 7): 400, (5, 8): 640, (5, 9): 1600, (5, 10): 2560,
    (6, 5): 150, (6, 7): 750, (6, 9): 3750,
    (7, 3): 35, (7, 5): 210, (7, 7): 1260, (7, 9): 7560,
    (8, 3): 40, (8, 5): 280, (8, 7): 1960, (8, 9): 13720,
    (9, 3): 45, (10, 3): 50,
}
Q_CELLS = {(9, 5): 364, (9, 7): 2884, (9, 9): 23044, (10, 5): 476, (10, 7): 4256, (10, 9): 38276}

# Planar table: underlined records and the values they replaced, by k then delta 6..10.
PLANAR_RECORDS = {5: (117, 165, 228, 293, 375), 7: (579, 984, 1590, 2338, 3369),
                  9: (2889, 5898, 11124, 18698, 30315)}
PLANAR_SUPERSEDED = {5: (114, 161, 225, 289, 372), 7: (564, 959, 1569, 2305, 3342),
                     9: (2814, 5747, 10977, 18433, 30072)}

# name -> (order, max degree, diameter, diagram verdict); filled lazily
_MEASURED: dict[tuple, tuple[int, int, int, Verdict]] = {}


def _key(spec: FamilySpec) -> tuple:
    return (spec.name, spec.delta, spec.k, None if spec.surface is None else spec.surface.name())


def _measure(spec: FamilySpec, diagram=None) -> tuple[int, int, int, Verdict]:
    key = _key(spec)
    if key not in _MEASURED:
        diagram = family_diagram(spec).diagram if diagram is None else diagram
        g = expand(diagram).graph
        _MEASURED[key] = (g.vertex_count, degree_profile(g)[0], diameter_exact(g, threads=THREADS),
                          check_conditions(diagram).verdict)
    return _MEASURED[key]


def _pod_internal_closed_form(delta: int, beta: int) -> int:
    # a pod is two depth-floor(beta/2) trees glued at their leaves
    # level i (1-based, below the degree-1 root) of a tree holds (delta-1)^(i-1) vertices
    half = beta // 2
    per_tree = sum((delta - 1) ** i for i in range(half - 1))  # levels 1..half-1
    leaves = (delta - 1) ** (half - 1)
    if beta % 2 == 0:
        return 2 * per_tree + leaves
    return 2 * (per_tree + leaves)


def _toroidal_specs():
    specs = [FamilySpec("P", d, k) for d in range(3, 11) for k in range(3, 11)]
    specs += [FamilySpec("Q", d, k) for d in range(5, 11) for k in (3, 5, 7, 9)]
    return specs


def _reference_pq_specs():
    return [FamilySpec("P", d, k) for d, k in P_CELLS] + [FamilySpec("Q", d, k) for d, k in Q_CELLS]


# --- criteria -----------------------------------------------------------------

def criterion_1():
    t = time.perf_counter()
    bad = []
    for delta in range(3, 11):
        for beta in range(2, 10):
            pod = build_pod(delta, beta)
            built = pod.graph.vertex_count - 2
            expected = _pod_internal_closed_form(delta, beta)
            if beta % 2 == 0:
                printed = Fraction(delta * (delta - 1) ** ((beta - 2) // 2) - 2, delta - 2)
            else:
                printed = Fraction(2 * (delta - 1) ** ((beta - 1) // 2) - 2, delta - 2)
            if not built == expected == printed:
                bad.append(f"({delta},{beta}): built {built}, closed form {printed}")
    elapsed = time.perf_counter() - t
    ok = not bad and elapsed < 1.0
    return ok, f"64 pods, {elapsed:.2f}s (budget 1s)" + (f"; mismatches {bad[:3]}" if bad else "")


def criterion_2():
    t = time.perf_counter()
    bad = []
    for (d, k), cell in P_CELLS.items():
        n = expand(family_diagram(FamilySpec("P", d, k)).diagram).graph.vertex_count
        if n != cell:
            bad.append(f"P({d},{k})={n}!={cell}")
    for (d, k), cell in Q_CELLS.items():
        inst = family_diagram(FamilySpec("Q", d, k))
        n = expand(inst.diagram).graph.vertex_count
        printed_five = 5 * (d - 4) * Fraction(d * (d - 1) ** ((k - 3) // 2) - 2, d - 2) + 14
        if n != cell or n != 7 * (d - 4) * Fraction(d * (d - 1) ** ((k - 3) // 2) - 2, d - 2) + 14:
            bad.append(f"Q({d},{k})={n}!={cell}")
        if printed_five == cell:
            bad.append(f"Q({d},{k}): 5(delta-4) unexpectedly matches")
        if not any("7(delta-4)" in note for note in inst.notes):
            bad.append(f"Q({d},{k}) lacks the coefficient note")
    elapsed = time.perf_counter() - t
    ok = not bad and elapsed < 10.0
    return ok, (f"{len(P_CELLS)} P and {len(Q_CELLS)} Q cells, coefficient 7(delta-4), "
                f"{elapsed:.2f}s (budget 10s)" + (f"; {bad[:3]}" if bad else ""))


def criterion_3():
    t = time.perf_counter()
    bad, checked, skipped = [], 0, []
    for spec in _toroidal_specs():
        if family_order(spec) > BFS_CAP_TOROIDAL:
            skipped.append(f"{spec.name}({spec.delta},{spec.k})")
            continue
        n, _, diam, _ = _measure(spec)
        checked += 1
        if diam != spec.k:
            bad.append(f"{spec.name}({spec.delta},{spec.k}) diameter {diam}")
    missing = [f"{s.name}({s.delta},{s.k})" for s in _reference_pq_specs()
               if family_order(s) <= BFS_CAP_TOROIDAL and _key(s) not in _MEASURED]
    elapsed = time.perf_counter() - t
    ok = not bad and not missing and elapsed < 300
    return ok, (f"{checked} P/Q instances of order <= {BFS_CAP_TOROIDAL} have diameter k, "
                f"{elapsed:.1f}s (budget 300s); above cap, not run: {', '.join(skipped)}"
                + (f"; {bad[:3]}" if bad else ""))


def criterion_4():
    # Pod vertices at the leaf level have degree 2, so pods reach degree delta
    # internally only when beta >= 4; with beta <= 3 the maximum sits at
    # diagram vertices instead.
    bad, checked, inside = [], 0, 0
    specs = _reference_pq_specs() + [s for s in _toroidal_specs() if family_order(s) <= BFS_CAP_TOROIDAL]
    for spec in dict.fromkeys(specs):
        compound = expand(family_diagram(spec).diagram)
        g = compound.graph
        deg = [0] * g.vertex_count
        for line in to_edge_list(g).splitlines()[1:]:
            u, v = map(int, line.split())
            deg[u] += 1
            deg[v] += 1
        checked += 1
        if max(deg) != spec.delta:
            bad.append(f"{spec.name}({spec.delta},{spec.k}) max degree {max(deg)}")
        if any(e.beta >= 4 for e in compound.source_diagram.edges):
            inside += 1
            if not any(d == spec.delta and compound.provenance[v].startswith("pod:") for v, d in enumerate(deg)):
                bad.append(f"{spec.name}({spec.delta},{spec.k}) no pod-internal vertex of degree delta")
    return not bad, (f"{checked} instances have max degree exactly delta; in the {inside} with pods of "
                     f"beta >= 4 it is attained at pod-internal vertices" + (f"; {bad[:3]}" if bad else ""))


def criterion_5():
    t = time.perf_counter()
    bad = []
    k7 = k7_torus_scheme()
    s = euler_genus(k7)
    if face_count(k7) != 14 or s.euler_genus != 2 or not s.orientable:
        bad.append(f"K7 scheme: {face_count(k7)} faces, {s.name()}")
    q_count = 0
    for d in range(5, 11):
        for k in (3, 5, 7, 9):
            inst = family_diagram(FamilySpec("Q", d, k))
            traced = euler_genus(expand_with_embedding(inst.diagram, inst.scheme))
            q_count += 1
            if not TORUS.contains(traced):
                bad.append(f"Q({d},{k}) traces to {traced.name()}")
    recon = available_reconstructions()
    for name, d, k in recon:
        diagram, scheme, _ = load_reconstruction(name, d, k)
        traced = euler_genus(expand_with_embedding(diagram, scheme))
        if traced.euler_genus != 0:
            bad.append(f"{name}({d},{k}) traces to {traced.name()}")
    if not recon:
        bad.append("no C/Y/Z reconstruction data present")
    elapsed = time.perf_counter() - t
    ok = not bad and elapsed < 5.0
    return ok, (f"K7 14 faces genus 2; {q_count} Q embeddings on the torus; {len(recon)} C/Y/Z "
                f"reconstructions planar; {elapsed:.2f}s (budget 5s)" + (f"; {bad[:3]}" if bad else ""))


def criterion_6():
    t = time.perf_counter()
    bad = []
    for k, values in PLANAR_RECORDS.items():
        fam = "Y" if k == 5 else "Z"
        for d, v in zip(range(6, 11), values):
            if family_order(fam, d, k) != v:
                bad.append(f"{fam}({d},{k})={family_order(fam, d, k)}!={v}")
    for k, values in PLANAR_SUPERSEDED.items():
        for d, v in zip(range(6, 11), values):
            if family_order("C", d, k) != v:
                bad.append(f"C({d},{k})={family_order('C', d, k)}!={v}")
    formula_time = time.perf_counter() - t
    if formula_time >= 1.0:
        bad.append(f"formula checks took {formula_time:.2f}s")
    certified = 0
    for fam, ks in (("Y", (5, 7, 9)), ("Z", (7, 9))):
        for k in ks:
            for d in range(4, 11):
                if family_order(fam, d, k) > BFS_CAP_PLANAR:
                    continue
                try:
                    diagram, _, _ = load_reconstruction(fam, d, k)
                except Exception as exc:  # absence must fail loudly
                    bad.append(f"{fam}({d},{k}) reconstruction missing: {exc}")
                    continue
                n, dmax, diam, _ = _measure(FamilySpec(fam, d, k), diagram)
                certified += 1
                if (n, diam) != (family_order(fam, d, k), k) or dmax > d:
                    bad.append(f"{fam}({d},{k}) order {n} diameter {diam} max degree {dmax}")
    return not bad, (f"30 table values by formula in {formula_time:.3f}s (budget 1s); "
                     f"{certified} Y/Z reconstructions BFS-certified" + (f"; {bad[:3]}" if bad else ""))


K6_TRIANGLES = [(0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 5, 1),
                (1, 2, 4), (2, 3, 5), (3, 4, 1), (4, 5, 2), (5, 1, 3)]


def _display_order(chi, delta, k, even):
    alpha = delta - 1 - math.ceil((chi - 1) / 2)
    n = Fraction(chi * alpha * (delta * (delta - 1) ** ((k - 3) // 2) - 2), delta - 2) + 2 * chi
    if even:
        n += Fraction(chi * ((delta - 1) ** ((k - 3) // 2) - 1), delta - 2)
    return n


def criterion_7():
    t = time.perf_counter()
    bad = []
    for (d, k), cell in Q_CELLS.items():
        diagram, _ = generalized_q(TORUS, d, k)
        if expand(diagram).graph.vertex_count != cell:
            bad.append(f"torus ({d},{k}) != {cell}")
    user_k6 = triangulation_scheme(K6_TRIANGLES)
    if euler_genus(user_k6) != PROJECTIVE_PLANE:
        bad.append("supplied K6 scheme is not the projective plane")
    cases = [(SPHERE, None, d, k, False) for d in range(4, 8) for k in (3, 5)]
    cases += [(PROJECTIVE_PLANE, user_k6, d, k, even) for d in range(5, 8) for k in (3, 5) for even in (False, True)]
    for surface, scheme, d, k, even in cases:
        diagram, _ = generalized_q(surface, d, k, scheme, even_variant=even)
        n = expand(diagram).graph.vertex_count
        if n != _display_order(surface.chi, d, k, even):
            bad.append(f"{surface.name()} ({d},{k}) even={even}: {n}")
    desk = [(FamilySpec("QGEN", 4, 3, SPHERE), None, 12),
            (FamilySpec("QGEN_EVEN", 6, 5, PROJECTIVE_PLANE), user_k6, 102)]
    for spec, scheme, expected in desk:
        diagram, emb = generalized_q(spec.surface, spec.delta, spec.k, scheme,
                                     even_variant=spec.name == "QGEN_EVEN")
        n, _, diam, _ = _measure(spec, diagram)
        traced = euler_genus(expand_with_embedding(diagram, emb))
        if (n, diam) != (expected, spec.k) or not spec.surface.contains(traced):
            bad.append(f"{spec.label()}: order {n}, diameter {diam}, {traced.name()}")
    elapsed = time.perf_counter() - t
    ok = not bad and elapsed < 5.0
    return ok, (f"torus matches Q; {len(cases)} sphere/projective orders match; orders 12 and 102 "
                f"have diameter k; {elapsed:.2f}s (budget 5s)" + (f"; {bad[:3]}" if bad else ""))


def criterion_8():
    # diameters come from the cache; fill it first so BFS is outside the timed region
    for fn in (criterion_3, criterion_6, criterion_7):
        if not _CRITERION_RAN.get(fn.__name__):
            fn()
    t = time.perf_counter()
    bad = []
    for d in range(3, 11):
        for k in range(3, 11):
            v = check_conditions(family_diagram(FamilySpec("P", d, k)).diagram).verdict
            if v is not Verdict.PASS:
                bad.append(f"P({d},{k}) {v.value}")
    gq = 0
    for surface, delta_range, even_options in ((SPHERE, range(4, 11), (False,)),
                                               (PROJECTIVE_PLANE, range(5, 11), (False, True)),
                                               (TORUS, range(5, 11), (False,)),
                                               (SurfaceSpec(False, 2), range(5, 11), (False, True))):
        for d in delta_range:
            for k in (3, 5, 7, 9):
                for even in even_options:
                    diagram, _ = generalized_q(surface, d, k, even_variant=even)
                    r = check_conditions(diagram)
                    gq += 1
                    if r.verdict not in (Verdict.PASS, Verdict.PASS_RELAXED) or \
                            set(r.rescue_patterns.values()) - {"parallel-thin"}:
                        bad.append(f"{surface.name()} ({d},{k}) even={even}: {r.verdict.value}")
    sound = 0
    for key, (_, _, diam, verdict) in _MEASURED.items():
        if verdict in (Verdict.PASS, Verdict.PASS_RELAXED):
            sound += 1
            if diam > key[2]:
                bad.append(f"{key}: verdict {verdict.value} but diameter {diam}")
    elapsed = time.perf_counter() - t
    ok = not bad and elapsed < 10.0 and sound > 0
    return ok, (f"64 P diagrams PASS; {gq} generalized diagrams rescued by parallel-thin only; "
                f"{sound} passing instances all have diameter <= k; {elapsed:.2f}s excluding BFS "
                f"(budget 10s)" + (f"; {bad[:3]}" if bad else ""))


def criterion_9():
    t = time.perf_counter()
    bad = []
    r = improvement_ratio(10 ** 6)
    if not 3.96 <= r <= 4.04:
        bad.append(f"ratio {r}")
    if bounds(TORUS, 9, 5).lower_thm7 != 364:
        bad.append("torus (9,5) bound")
    if moore(3, 2) != 10:
        bad.append("moore(3,2)")
    ref = load_reference()
    if not ref[("planar", 3, 2)].value <= moore(3, 2):
        bad.append("planar (3,2) above Moore")
    over = [key for key, c in ref.items() if c.value > moore(key[1], key[2])]
    for table in ("planar", "toroidal"):
        over += [(table, c.delta, c.k) for c in render_table(table, ref).cells if c.value > moore(c.delta, c.k)]
    if over:
        bad.append(f"above Moore: {over[:3]}")
    elapsed = time.perf_counter() - t
    ok = not bad and elapsed < 1.0
    return ok, (f"ratio(1e6)={r:.4f}; torus (9,5) bound 364; Moore(3,2)=10; no cell above Moore; "
                f"{elapsed:.2f}s (budget 1s)" + (f"; {bad}" if bad else ""))


_PIPELINE = """
import sys
from degdiam import FamilySpec, expand, family_diagram
from degdiam.graph import to_edge_list
from degdiam.tables import certify, render_table
threads, backend = int(sys.argv[1]), sys.argv[2]
out = []
for spec in (FamilySpec("P", 5, 7), FamilySpec("Q", 9, 7), FamilySpec("Z", 6, 7),
             FamilySpec("QGEN_EVEN", 6, 5, __import__("degdiam").embedding.PROJECTIVE_PLANE)):
    out.append(to_edge_list(expand(family_diagram(spec).diagram).graph))
    out.append(certify(spec, threads=threads, backend=backend).to_text())
for table in ("planar", "toroidal"):
    rendered = render_table(table)
    out += [rendered.text(), rendered.rows()]
sys.stdout.write("\\x00".join(out))
"""


def criterion_10():
    outputs = {}
    configs = [(threads, backend, seed) for backend in sorted(BACKENDS)
               for threads, seed in ((1, "0"), (4, "1"), (1, "2"))]
    for threads, backend, seed in configs:
        env = dict(os.environ, PYTHONHASHSEED=seed)
        proc = subprocess.run([sys.executable, "-c", _PIPELINE, str(threads), backend],
                              capture_output=True, env=env, check=False)
        if proc.returncode != 0:
            return False, f"pipeline run failed: {proc.stderr.decode()[-300:]}"
        outputs[(threads, backend, seed)] = proc.stdout
    distinct = len(set(outputs.values()))
    return distinct == 1, (f"{len(configs)} separate runs (threads 1/4, backends {sorted(BACKENDS)}, "
                           f"varied hash seeds): {distinct} distinct output(s), "
                           f"{len(next(iter(outputs.values())))} bytes")


CRITERIA = {n: globals()[f"criterion_{n}"] for n in range(1, 11)}
RESULTS: dict[int, tuple[bool, str]] = {}
_CRITERION_RAN: dict[str, bool] = {}


def run_criterion(n: int) -> tuple[bool, str]:
    try:
        result = CRITERIA[n]()
    except Exception as exc:  # a crash is a failure, reported like any other
        result = (False, f"raised {type(exc).__name__}: {exc}")
    _CRITERION_RAN[CRITERIA[n].__name__] = True
    RESULTS[n] = result
    return result


def format_line(n: int, result: tuple[bool, str]) -> str:
    return f"criterion {n}: {'PASS' if result[0] else 'FAIL'} - {result[1]}"


@pytest.mark.acceptance
@pytest.mark.parametrize("n", sorted(CRITERIA))
def test_criterion(n):
    ok, detail = run_criterion(n)
    print(format_line(n, (ok, detail)))
    assert ok, detail


if __name__ == "__main__":
    failures = 0
    for n in sorted(CRITERIA):
        result = run_criterion(n)
        print(format_line(n, result), flush=True)
        failures += not result[0]
    raise SystemExit(1 if failures else 0)
