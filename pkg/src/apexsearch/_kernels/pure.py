"""Pure-Python kernels: square linear-assignment solve and BM25 accumulation.

Same signatures as the compiled versions in ``_native``; the public package
selects whichever is importable. Inputs are flat ``array``/sequence buffers so
both implementations can share them without conversion.
"""

INF = float("inf")


def solve_dense(cost, n):
    """Minimum-cost assignment on an n*n matrix flattened row-major.

    Shortest-augmenting-path method with dual potentials. Returns a list
    ``row_to_col`` of length n. Deterministic: column scans run in ascending
    index order and all comparisons are strict, so ties resolve to the
    lowest-index alternative discovered first.
    """
    u = [0.0] * (n + 1)
    v = [0.0] * (n + 1)
    p = [0] * (n + 1)  # p[j] = row (1-based) assigned to column j; 0 = free
    way = [0] * (n + 1)

    for i in range(1, n + 1):
        p[0] = i
        j0 = 0
        minv = [INF] * (n + 1)
        used = [False] * (n + 1)
        while True:
            used[j0] = True
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


def bm25_accumulate(scores, positions, tfs, norms, idf, k1_plus_1, weight):
    """Add one query term's BM25 contribution into the dense ``scores`` buffer.

    ``positions``/``tfs`` are the term's postings (parallel arrays of document
    position and term frequency); ``norms`` holds the precomputed per-document
    length normalization k1*(1-b+b*len/avgdl); ``weight`` is the term's
    multiplicity in the query.
    """
    scale = weight * idf * k1_plus_1
    for i in range(len(positions)):
        d = positions[i]
        tf = tfs[i]
        scores[d] += scale * tf / (tf + norms[d])
