"""Time the all-sources BFS on both backends and check they agree.

    python benchmarks/bench_bfs.py [--repeat N] [--largest]

Instances are expanded family graphs of increasing order. ``--largest``
adds the 38 276-vertex Q(10, 9) graph.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from degdiam import BACKENDS, FamilySpec, expand, family_diagram
from degdiam.graph import eccentricities

INSTANCES = [("P", 5, 7), ("Q", 9, 7), ("Z", 8, 9), ("Q", 9, 9), ("Z", 10, 9)]


def best_of(fn, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main(argv=None) -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--largest", action="store_true")
    args = parser.parse_args(argv)
    instances = INSTANCES + ([("Q", 10, 9)] if args.largest else [])

    names = sorted(BACKENDS)
    print(f"{'instance':<12}{'order':>8}" + "".join(f"{n + ' (s)':>16}" for n in names) + f"{'speedup':>10}")
    for fam, delta, k in instances:
        graph = expand(family_diagram(FamilySpec(fam, delta, k)).diagram).graph
        results, timings = {}, {}
        for name in names:
            results[name] = eccentricities(graph, backend=name)
            timings[name] = best_of(lambda: eccentricities(graph, backend=name), args.repeat)
        ref = results[names[0]]
        assert all(np.array_equal(ref, r) for r in results.values()), "backends disagree"
        assert int(ref.max()) == k
        speed = timings["python"] / timings["compiled"] if "compiled" in timings else float("nan")
        label = f"{fam}({delta},{k})"
        print(f"{label:<12}{graph.vertex_count:>8}" + "".join(f"{timings[n]:>16.3f}" for n in names)
              + f"{speed:>9.1f}x")


if __name__ == "__main__":
    main()
