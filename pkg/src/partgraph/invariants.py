"""Local clique numbers and the extremal sequences Delta_n, Omega_n, S_n."""

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from . import _kernels
from .config import resolve
from .errors import CapacityError, DomainError
from .graph import _build, build_graph
from .partitions import as_partition, ferrers_translate


@dataclass(frozen=True)
class LocalComplexity:
    vertex: int
    degree: int
    omega_loc: int

    @property
    def s_loc(self):
        return self.omega_loc - 1


@dataclass(frozen=True)
class ExtremalRecord:
    n: int
    delta: int
    omega: int
    delta_witness: object
    omega_witness: object

    @property
    def s(self):
        return self.omega - 1

    @property
    def s_witness(self):
        return self.omega_witness

    def to_dict(self):
        return {
            "n": self.n,
            "delta": self.delta,
            "omega": self.omega,
            "s": self.s,
            "delta_witness": str(self.delta_witness),
            "omega_witness": str(self.omega_witness),
        }


def _check_neighborhood(g, vertices, caps):
    cap = resolve(caps).neighborhood
    deg = g.degree[vertices]
    if deg.size and deg.max() > cap:
        worst = int(np.asarray(vertices)[int(np.argmax(deg))])
        raise CapacityError(
            f"neighbourhood of vertex {worst} ({g.vertices[worst]}) in G_{g.n} has "
            f"{int(deg.max())} vertices, above the neighborhood cap of {cap}"
        )


def _clique_bigint(g, v):
    """Same branch and bound as the kernel, on Python-int bitsets of any width."""
    nb = g.neighbors(v).tolist()
    pos = {u: i for i, u in enumerate(nb)}
    adj = [0] * len(nb)
    for a, u in enumerate(nb):
        for w in g.neighbors(u).tolist():
            b = pos.get(w)
            if b is not None:
                adj[a] |= 1 << b

    def expand(cand, size, best):
        order, colors = [], []
        uncolored, color = cand, 0
        while uncolored:
            color += 1
            q = uncolored
            while q:
                low = q & -q
                x = low.bit_length() - 1
                uncolored &= ~low
                q &= ~adj[x] & ~low
                order.append(x)
                colors.append(color)
        for x, c in zip(reversed(order), reversed(colors)):
            if size + c <= best:
                return best
            nxt = cand & adj[x]
            best = max(best, size + 1) if not nxt else expand(nxt, size + 1, best)
            cand &= ~(1 << x)
        return best

    return 1 + expand((1 << len(nb)) - 1, 0, 0)


def _cliques_for(g, vertices):
    vertices = np.asarray(vertices, dtype=np.int64)
    out = np.empty(len(vertices), dtype=np.int64)
    small = g.degree[vertices] <= _kernels.MASK_BITS
    if small.any():
        out[small] = _kernels.local_cliques(g.indptr, g.indices, vertices[small])
    for i in np.flatnonzero(~small):
        out[i] = _clique_bigint(g, int(vertices[i]))
    return out


def local_clique_number(g, v, caps=None):
    """Size of the largest clique of ``g`` containing vertex ``v``."""
    if not 0 <= v < g.vertex_count:
        raise DomainError(f"vertex id {v} out of range for G_{g.n}")
    _check_neighborhood(g, [v], caps)
    return int(_cliques_for(g, [v])[0])


def local_complexity(g, v, caps=None):
    return LocalComplexity(v, int(g.degree[v]), local_clique_number(g, v, caps))


@lru_cache(maxsize=64)
def _level_cliques(n):
    g = _build(n)
    arr = _cliques_for(g, np.arange(g.vertex_count))
    arr.setflags(write=False)
    return arr


def local_clique_numbers(n, caps=None):
    """``omega_loc`` for every vertex of G_n, indexed by vertex id."""
    caps = resolve(caps)
    caps.check("clique_level", n)
    g = build_graph(n, caps)
    _check_neighborhood(g, np.arange(g.vertex_count), caps)
    return _level_cliques(n)


def extremal_record(n, caps=None):
    g = build_graph(n, caps)
    omegas = local_clique_numbers(n, caps)
    dv = int(np.argmax(g.degree))  # argmax picks the lowest id on ties
    ov = int(np.argmax(omegas))
    return ExtremalRecord(n, int(g.degree[dv]), int(omegas[ov]), g.vertices[dv], g.vertices[ov])


@dataclass
class MonotonicityReport:
    n_from: int
    n_to: int
    records: list
    comparisons: list = field(default_factory=list)

    @property
    def passed(self):
        return all(c["ok"] for c in self.comparisons)

    def to_dict(self):
        return {
            "range": [self.n_from, self.n_to],
            "passed": self.passed,
            "records": [r.to_dict() for r in self.records],
            "comparisons": self.comparisons,
        }


def monotonicity_check(n_from, n_to, caps=None):
    """Compare Delta, Omega and S at consecutive levels of ``[n_from, n_to]``."""
    if not 1 <= n_from <= n_to:
        raise DomainError(f"need 1 <= n_from <= n_to, got [{n_from}, {n_to}]")
    records = [extremal_record(n, caps) for n in range(n_from, n_to + 1)]
    report = MonotonicityReport(n_from, n_to, records)
    for a, b in zip(records, records[1:]):
        for name in ("delta", "omega", "s"):
            x, y = getattr(a, name), getattr(b, name)
            report.comparisons.append({"quantity": name, "n": a.n, "value": x, "next_value": y, "ok": x <= y})
    return report


@dataclass
class TranslationCheckReport:
    n: int
    tau: object
    rows: list

    @property
    def passed(self):
        return all(r["degree_margin"] >= 0 and r["omega_margin"] >= 0 for r in self.rows)

    def to_dict(self):
        return {"n": self.n, "tau": str(self.tau), "passed": self.passed, "vertices": self.rows}


def local_translation_check(n, tau, caps=None):
    """Check ``deg`` and ``omega_loc`` do not drop under translation by ``tau``."""
    tau = as_partition(tau)
    src, dst = build_graph(n, caps), build_graph(n + tau.n, caps)
    src_omega = local_clique_numbers(n, caps)
    dst_omega = local_clique_numbers(n + tau.n, caps)
    rows = []
    for v, lam in enumerate(src.vertices):
        image = ferrers_translate(lam, tau)
        w = dst.vertex_id(image)
        rows.append({
            "vertex": str(lam),
            "image": str(image),
            "degree": int(src.degree[v]),
            "image_degree": int(dst.degree[w]),
            "degree_margin": int(dst.degree[w] - src.degree[v]),
            "omega_loc": int(src_omega[v]),
            "image_omega_loc": int(dst_omega[w]),
            "omega_margin": int(dst_omega[w] - src_omega[v]),
        })
    return TranslationCheckReport(n, tau, rows)
