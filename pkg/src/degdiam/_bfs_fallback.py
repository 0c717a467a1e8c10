"""Pure-Python BFS backend.

Single-source BFS is a deque walk. All-sources eccentricities use a
bit-parallel multi-source BFS: 64 sources share one ``uint64`` word per
vertex, and each BFS level is a vectorised OR over the CSR neighbour lists.
"""

from __future__ import annotations

from collections import deque

import numpy as np

_WORD = 64


def bfs_distances(indptr: np.ndarray, indices: np.ndarray, source: int, out: np.ndarray) -> None:
    out.fill(-1)
    out[source] = 0
    ptr = indptr.tolist()
    nbr = indices.tolist()
    queue = deque([source])
    while queue:
        u = queue.popleft()
        d = out[u] + 1
        for j in range(ptr[u], ptr[u + 1]):
            v = nbr[j]
            if out[v] < 0:
                out[v] = d
                queue.append(v)


def eccentricities(indptr, indices, sources, ecc, reached) -> None:
    indptr = np.asarray(indptr, dtype=np.int64)
    indices = np.asarray(indices, dtype=np.int64)
    sources = np.asarray(sources, dtype=np.int64)
    n = len(indptr) - 1
    degree = np.diff(indptr)
    starts = indptr[:-1][degree > 0]
    has_nbr = degree > 0
    bits = np.left_shift(np.uint64(1), np.arange(_WORD, dtype=np.uint64))

    for lo in range(0, len(sources), _WORD):
        chunk = sources[lo:lo + _WORD]
        width = len(chunk)
        visited = np.zeros(n, dtype=np.uint64)
        np.bitwise_or.at(visited, chunk, bits[:width])
        frontier = visited.copy()
        chunk_ecc = np.zeros(width, dtype=np.int32)
        level = 0
        while True:
            gathered = np.zeros(n, dtype=np.uint64)
            if len(indices):
                gathered[has_nbr] = np.bitwise_or.reduceat(frontier[indices], starts)
            frontier = gathered & ~visited
            active = np.bitwise_or.reduce(frontier)
            if not active:
                break
            level += 1
            visited |= frontier
            for b in range(width):
                if int(active) >> b & 1:
                    chunk_ecc[b] = level
        ecc[lo:lo + width] = chunk_ecc
        everywhere = int(np.bitwise_and.reduce(visited))
        for b in range(width):
            if everywhere >> b & 1:
                reached[lo + b] = n
            else:
                reached[lo + b] = int(np.count_nonzero(visited & bits[b]))
