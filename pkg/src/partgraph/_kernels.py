"""Hot loops: partition enumeration and ranking, adjacency construction,
local clique search and rooted motif backtracking.

Everything here takes and returns numpy arrays so the same source runs
compiled (numba) or interpreted (``PARTGRAPH_BACKEND=python``).  Partitions
are stored as zero-padded rows of a 2-D ``int16`` array, largest part first.
"""

import numpy as np

from ._jit import jit, prange

# bitset words used by the clique kernel
MASK_BITS = 64


@jit
def count_table(nmax):
    """``T[m, k]`` = number of partitions of ``m`` with every part <= ``k``."""
    t = np.zeros((nmax + 1, nmax + 1), dtype=np.int64)
    for k in range(nmax + 1):
        t[0, k] = 1
    for m in range(1, nmax + 1):
        for k in range(1, nmax + 1):
            t[m, k] = t[m, k - 1]
            if m >= k:
                t[m, k] += t[m - k, k]
    return t


@jit
def enumerate_rows(n, count, width):
    """All partitions of ``n`` in descending lexicographic order."""
    out = np.zeros((count, width), dtype=np.int16)
    if n == 0:
        return out
    cur = np.zeros(width, dtype=np.int16)
    cur[0] = n
    length = 1
    for r in range(count):
        out[r, :] = cur
        # rightmost part that is > 1
        i = length - 1
        while i >= 0 and cur[i] == 1:
            i -= 1
        if i < 0:
            break
        rem = length - 1 - i + 1
        cur[i] -= 1
        v = cur[i]
        for j in range(i + 1, length):
            cur[j] = 0
        j = i + 1
        while rem > 0:
            take = v if rem >= v else rem
            cur[j] = take
            rem -= take
            j += 1
        length = j
    return out


@jit
def rank_row(row, n, table):
    """Position of ``row`` in the descending-lex enumeration of partitions of ``n``."""
    rank = 0
    remaining = n
    bound = n
    for i in range(row.shape[0]):
        a = row[i]
        if a == 0:
            break
        rank += table[remaining, bound] - table[remaining, a]
        remaining -= a
        bound = a
    return rank


@jit
def rank_rows(rows, n, table):
    out = np.empty(rows.shape[0], dtype=np.int64)
    for r in range(rows.shape[0]):
        out[r] = rank_row(rows[r], n, table)
    return out


@jit
def _row_length(row):
    length = 0
    while length < row.shape[0] and row[length] != 0:
        length += 1
    return length


@jit
def _neighbor_ranks(row, n, table, scratch, out):
    """Write the ranks of all single-unit-transfer neighbours of ``row``.

    A transfer takes one unit from a part of value ``a`` and gives it to a
    part of value ``b`` (``b = 0`` creates a new part).  Distinct (a, b)
    value pairs give distinct neighbours; ``b = a - 1`` is the identity and
    ``a == b`` needs two copies of that value.
    """
    length = _row_length(row)
    count = 0
    for i in range(length):
        if i + 1 < length and row[i + 1] == row[i]:
            continue  # i must be the last copy of its value
        a = row[i]
        for j in range(length + 1):
            if j < length and j > 0 and row[j - 1] == row[j]:
                continue  # j must be the first copy of its value
            b = row[j] if j < length else 0
            if b == a - 1 or i == j:
                continue
            for c in range(scratch.shape[0]):
                scratch[c] = row[c]
            scratch[i] -= 1
            scratch[j] += 1
            out[count] = rank_row(scratch, n, table)
            count += 1
    return count


@jit
def build_adjacency(rows, n, table):
    """CSR adjacency (``indptr``, ``indices``) with sorted neighbour lists."""
    p = rows.shape[0]
    width = rows.shape[1]
    scratch = np.zeros(width + 1, dtype=np.int16)
    buf = np.empty((width + 1) * (width + 1), dtype=np.int64)
    padded = np.zeros(width + 1, dtype=np.int16)
    degree = np.zeros(p, dtype=np.int64)
    for v in range(p):
        padded[:width] = rows[v]
        degree[v] = _neighbor_ranks(padded, n, table, scratch, buf)
    indptr = np.zeros(p + 1, dtype=np.int64)
    for v in range(p):
        indptr[v + 1] = indptr[v] + degree[v]
    indices = np.empty(indptr[p], dtype=np.int64)
    for v in range(p):
        padded[:width] = rows[v]
        d = _neighbor_ranks(padded, n, table, scratch, buf)
        indices[indptr[v]:indptr[v] + d] = np.sort(buf[:d])
    return indptr, indices


@jit
def has_edge(indptr, indices, a, b):
    lo = indptr[a]
    hi = indptr[a + 1]
    while lo < hi:
        mid = (lo + hi) // 2
        x = indices[mid]
        if x == b:
            return True
        if x < b:
            lo = mid + 1
        else:
            hi = mid
    return False


@jit
def _bit(v):
    return np.uint64(1) << np.uint64(v)


# recursive kernels cannot be reloaded from numba's on-disk cache
@jit(cache=False)
def _clique_expand(adj, cand, size, best):
    """Tomita-style max-clique branch and bound over a <=64-vertex bitset graph."""
    k = adj.shape[0]
    order = np.empty(k, dtype=np.int64)
    colors = np.empty(k, dtype=np.int64)
    zero = np.uint64(0)
    # greedy colouring gives the bound
    uncolored = cand
    filled = 0
    color = 0
    while uncolored != zero:
        color += 1
        q = uncolored
        for v in range(k):
            if q == zero:
                break
            if q & _bit(v):
                uncolored &= ~_bit(v)
                q &= ~adj[v]
                q &= ~_bit(v)
                order[filled] = v
                colors[filled] = color
                filled += 1
    p = cand
    for idx in range(filled - 1, -1, -1):
        if size + colors[idx] <= best:
            return best
        v = order[idx]
        nxt = p & adj[v]
        if nxt == zero:
            if size + 1 > best:
                best = size + 1
        else:
            best = _clique_expand(adj, nxt, size + 1, best)
        p &= ~_bit(v)
    return best


@jit(cache=False)
def local_clique(indptr, indices, v):
    """Largest clique containing ``v``; neighbourhood must fit in 64 bits."""
    lo = indptr[v]
    k = indptr[v + 1] - lo
    if k == 0:
        return 1
    adj = np.zeros(k, dtype=np.uint64)
    for a in range(k):
        na = indices[lo + a]
        for b in range(a + 1, k):
            if has_edge(indptr, indices, na, indices[lo + b]):
                adj[a] |= _bit(b)
                adj[b] |= _bit(a)
    full = np.uint64(0)
    for a in range(k):
        full |= _bit(a)
    return 1 + _clique_expand(adj, full, 0, 0)


@jit(parallel=True, cache=False)
def local_cliques(indptr, indices, vertices):
    out = np.empty(vertices.shape[0], dtype=np.int64)
    for i in prange(vertices.shape[0]):
        out[i] = local_clique(indptr, indices, vertices[i])
    return out


@jit
def motif_search(indptr, indices, tadj, order, anchor, mindeg, limit, out):
    """Depth-first rooted induced-subgraph search.

    ``order`` lists template vertices in assignment order (roots first);
    ``anchor[p]`` is an earlier position whose template vertex is adjacent
    to ``order[p]`` (candidates then come from its neighbour list) or -1
    (candidates are all vertices).  Matches are written as rows of graph
    ids indexed by template vertex, up to ``out.shape[0]`` of them; the
    return value is the number found, stopping at ``limit`` if >= 0.
    """
    k = order.shape[0]
    nverts = indptr.shape[0] - 1
    assign = np.full(k, -1, dtype=np.int64)
    pos = np.zeros(k, dtype=np.int64)
    count = 0
    if k == 0 or limit == 0:
        return count
    p = 0
    while p >= 0:
        t = order[p]
        if anchor[p] >= 0:
            base = assign[order[anchor[p]]]
            lo = indptr[base]
            size = indptr[base + 1] - lo
        else:
            lo = 0
            size = nverts
        found = False
        while pos[p] < size:
            i = pos[p]
            pos[p] += 1
            c = indices[lo + i] if anchor[p] >= 0 else i
            if indptr[c + 1] - indptr[c] < mindeg[t]:
                continue
            ok = True
            for q in range(p):
                s = order[q]
                g = assign[s]
                if g == c:
                    ok = False
                    break
                if has_edge(indptr, indices, g, c) != (tadj[t, s] != 0):
                    ok = False
                    break
            if ok:
                assign[t] = c
                found = True
                break
        if not found:
            assign[t] = -1
            p -= 1
            continue
        if p == k - 1:
            if count < out.shape[0]:
                out[count, :] = assign
            count += 1
            if limit >= 0 and count >= limit:
                break
        else:
            p += 1
            pos[p] = 0
    return count
