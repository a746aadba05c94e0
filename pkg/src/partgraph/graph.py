"""Level graphs G_n: vertices are the partitions of n in descending
lexicographic order, edges join partitions one unit transfer apart."""

import json
from collections import Counter
from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np

from . import _kernels
from .config import resolve
from .errors import DomainError
from .partitions import as_partition, count_table, partition_rows, rows_to_partitions


@dataclass(frozen=True, eq=False)
class LevelGraph:
    n: int
    rows: np.ndarray  # (p(n), n) int16 partition matrix
    indptr: np.ndarray
    indices: np.ndarray

    @property
    def vertex_count(self):
        return self.rows.shape[0]

    @property
    def edge_count(self):
        return len(self.indices) // 2

    @cached_property
    def vertices(self):
        return rows_to_partitions(self.rows)

    @cached_property
    def index(self):
        return {lam: i for i, lam in enumerate(self.vertices)}

    @cached_property
    def degree(self):
        deg = np.diff(self.indptr)
        deg.setflags(write=False)
        return deg

    def neighbors(self, v):
        return self.indices[self.indptr[v]:self.indptr[v + 1]]

    @property
    def adjacency(self):
        return [self.neighbors(v).tolist() for v in range(self.vertex_count)]

    def vertex_id(self, lam):
        lam = as_partition(lam)
        try:
            return self.index[lam]
        except KeyError:
            raise DomainError(f"{lam} is not a partition of {self.n}") from None

    def has_edge(self, a, b):
        return bool(_kernels.has_edge(self.indptr, self.indices, a, b))

    def edges(self):
        """Edge list ``(a, b)`` with ``a < b``, sorted."""
        src = np.repeat(np.arange(self.vertex_count), self.degree)
        keep = src < self.indices
        return list(zip(src[keep].tolist(), self.indices[keep].tolist()))

    def dense(self):
        mat = np.zeros((self.vertex_count, self.vertex_count), dtype=bool)
        src = np.repeat(np.arange(self.vertex_count), self.degree)
        mat[src, self.indices] = True
        return mat


@lru_cache(maxsize=64)
def _build(n):
    rows = partition_rows(n)
    indptr, indices = _kernels.build_adjacency(rows, n, count_table(n))
    for arr in (indptr, indices):
        arr.setflags(write=False)
    return LevelGraph(n, rows, indptr, indices)


def build_graph(n, caps=None):
    if n < 1:
        raise DomainError(f"level must be >= 1, got {n}")
    resolve(caps).check("graph", n)
    return _build(int(n))


def degree_spectrum(g):
    """``{degree: number of vertices}`` in ascending degree order."""
    return dict(sorted(Counter(g.degree.tolist()).items()))


def graph_payload(g):
    return {
        "n": g.n,
        "vertex_count": g.vertex_count,
        "vertices": [str(lam) for lam in g.vertices],
        "edges": [list(e) for e in g.edges()],
    }


def export_graph(g, fmt="json"):
    if fmt == "json":
        return (json.dumps(graph_payload(g)) + "\n").encode()
    if fmt == "dot":
        lines = [f"graph G{g.n} {{"]
        lines += [f'  v{i} [label="{lam}"];' for i, lam in enumerate(g.vertices)]
        lines += [f"  v{a} -- v{b};" for a, b in g.edges()]
        lines.append("}")
        return ("\n".join(lines) + "\n").encode()
    raise DomainError(f"unknown graph export format {fmt!r}; expected 'dot' or 'json'")
