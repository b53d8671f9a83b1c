# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: square linear-assignment solve and BM25 accumulation.

Mirrors ``pure.py`` exactly; see that module for the algorithm notes.
"""

from libc.stdlib cimport free, malloc

cdef double INF = float("inf")


def solve_dense(double[::1] cost, Py_ssize_t n):
    cdef double *u = <double *> malloc((n + 1) * sizeof(double))
    cdef double *v = <double *> malloc((n + 1) * sizeof(double))
    cdef double *minv = <double *> malloc((n + 1) * sizeof(double))
    cdef Py_ssize_t *p = <Py_ssize_t *> malloc((n + 1) * sizeof(Py_ssize_t))
    cdef Py_ssize_t *way = <Py_ssize_t *> malloc((n + 1) * sizeof(Py_ssize_t))
    cdef char *used = <char *> malloc(n + 1)
    if u == NULL or v == NULL or minv == NULL or p == NULL or way == NULL or used == NULL:
        free(u); free(v); free(minv); free(p); free(way); free(used)
        raise MemoryError()

    cdef Py_ssize_t i, j, i0, j0, j1, off
    cdef double cur, delta

    for j in range(n + 1):
        u[j] = 0.0
        v[j] = 0.0
        p[j] = 0
        way[j] = 0

    try:
        for i in range(1, n + 1):
            p[0] = i
            j0 = 0
            for j in range(n + 1):
                minv[j] = INF
                used[j] = 0
            while True:
                used[j0] = 1
                i0 = p[j0]
                delta = INF
                j1 = 0
                off = (i0 - 1) * n
                for j in range(1, n + 1):
                    if not used[j]:
                        cur = cost[off + j - 1] - u[i0] - v[j]
                        if cur < minv[j]:
                            minv[j] = cur
                            way[j] = j0
                        if minv[j] < delta:
                            delta = minv[j]
                            j1 = j
                for j in range(n + 1):
                    if used[j]:
                        u[p[j]] += delta
                        v[j] -= delta
                    else:
                        minv[j] -= delta
                j0 = j1
                if p[j0] == 0:
                    break
            while j0:
                j1 = way[j0]
                p[j0] = p[j1]
                j0 = j1

        row_to_col = [0] * n
        for j in range(1, n + 1):
            row_to_col[p[j] - 1] = j - 1
        return row_to_col
    finally:
        free(u); free(v); free(minv); free(p); free(way); free(used)


def bm25_accumulate(double[::1] scores, long long[::1] positions,
                    double[::1] tfs, double[::1] norms,
                    double idf, double k1_plus_1, double weight):
    cdef Py_ssize_t i, d
    cdef double tf
    cdef double scale = weight * idf * k1_plus_1
    for i in range(positions.shape[0]):
        d = positions[i]
        tf = tfs[i]
        scores[d] += scale * tf / (tf + norms[d])
