# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled all-sources BFS kernel.

Single-source distances use a plain queue BFS over the CSR adjacency.
All-sources eccentricities use the same bit-parallel scheme as the numpy
fallback, without the GIL, so callers may split the source range across
threads.
"""

from libc.stdint cimport uint64_t
from libc.stdlib cimport free, malloc


cdef void _bfs_one(const int[::1] indptr, const int[::1] indices, int n,
                   int source, int* dist, int* queue,
                   int* ecc, int* reached) noexcept nogil:
    cdef int head = 0
    cdef int tail = 0
    cdef int u, v, j, d, i
    for i in range(n):
        dist[i] = -1
    dist[source] = 0
    queue[tail] = source
    tail += 1
    while head < tail:
        u = queue[head]
        head += 1
        d = dist[u] + 1
        for j in range(indptr[u], indptr[u + 1]):
            v = indices[j]
            if dist[v] < 0:
                dist[v] = d
                queue[tail] = v
                tail += 1
    ecc[0] = dist[queue[tail - 1]]
    reached[0] = tail


def bfs_distances(const int[::1] indptr, const int[::1] indices, int source, int[::1] out):
    """Fill ``out`` with hop distances from ``source`` (-1 when unreachable)."""
    cdef int n = indptr.shape[0] - 1
    cdef int ecc, reached
    cdef int* queue = <int*>malloc(n * sizeof(int))
    if queue == NULL:
        raise MemoryError()
    try:
        with nogil:
            _bfs_one(indptr, indices, n, source, &out[0], queue, &ecc, &reached)
    finally:
        free(queue)


def eccentricities(const int[::1] indptr, const int[::1] indices,
                   const int[::1] sources, int[::1] ecc, int[::1] reached):
    """Eccentricity and reached-vertex count for every source in ``sources``.

    Bit-parallel: 64 sources advance together, one ``uint64`` word per vertex.
    """
    cdef int n = indptr.shape[0] - 1
    cdef Py_ssize_t m = sources.shape[0]
    cdef uint64_t* visited = <uint64_t*>malloc(n * sizeof(uint64_t))
    cdef uint64_t* frontier = <uint64_t*>malloc(n * sizeof(uint64_t))
    cdef uint64_t* nxt = <uint64_t*>malloc(n * sizeof(uint64_t))
    cdef Py_ssize_t lo, b, width
    cdef int v, j, level
    cdef uint64_t acc, active, bit
    if visited == NULL or frontier == NULL or nxt == NULL:
        free(visited)
        free(frontier)
        free(nxt)
        raise MemoryError()
    try:
        with nogil:
            lo = 0
            while lo < m:
                width = m - lo
                if width > 64:
                    width = 64
                for v in range(n):
                    visited[v] = 0
                    frontier[v] = 0
                for b in range(width):
                    bit = (<uint64_t>1) << b
                    visited[sources[lo + b]] |= bit
                    frontier[sources[lo + b]] |= bit
                    ecc[lo + b] = 0
                level = 0
                while True:
                    active = 0
                    for v in range(n):
                        acc = 0
                        for j in range(indptr[v], indptr[v + 1]):
                            acc = acc | frontier[indices[j]]
                        acc = acc & ~visited[v]
                        nxt[v] = acc
                        active = active | acc
                    if active == 0:
                        break
                    level += 1
                    for v in range(n):
                        visited[v] |= nxt[v]
                        frontier[v] = nxt[v]
                    for b in range(width):
                        if (active >> b) & 1:
                            ecc[lo + b] = level
                for b in range(width):
                    reached[lo + b] = 0
                for v in range(n):
                    acc = visited[v]
                    for b in range(width):
                        if (acc >> b) & 1:
                            reached[lo + b] += 1
                lo += width
    finally:
        free(visited)
        free(frontier)
        free(nxt)
