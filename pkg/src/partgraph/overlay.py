"""Ferrers-translation overlay maps between levels and their certification."""

from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .config import resolve
from .errors import DomainError
from .graph import build_graph
from .motifs import CanonicalFamily, Occurrence, find_occurrences, validate_assignment
from .partitions import (
    as_partition,
    conjugate,
    conjugate_rows,
    count_table,
    enumerate_partitions,
    ferrers_translate,
)

MAX_LISTED_VIOLATIONS = 10


@dataclass(frozen=True)
class OverlayMap:
    n_source: int
    tau: object
    pairs: tuple  # (source id, target id) per source vertex

    @property
    def n_target(self):
        return self.n_source + self.tau.n

    @property
    def targets(self):
        return np.array([t for _, t in self.pairs], dtype=np.int64)


def _image_ids(src, tau, n_target):
    """Target vertex ids of every source vertex, computed in conjugate coordinates."""
    width = max(n_target, 1)
    cols = conjugate_rows(src.rows, width)
    tau_cols = np.zeros(width, dtype=np.int16)
    tc = conjugate(tau)
    tau_cols[: len(tc)] = tc
    image_cols = cols + tau_cols
    # back to row form: image part i = number of columns of height > i
    image_rows = conjugate_rows(image_cols, width)
    return _kernels.rank_rows(image_rows, n_target, count_table(n_target))


def overlay_map(n, tau, caps=None):
    tau = as_partition(tau)
    src = build_graph(n, caps)
    build_graph(n + tau.n, caps)
    ids = _image_ids(src, tau, n + tau.n)
    return OverlayMap(n, tau, tuple(zip(range(src.vertex_count), ids.tolist())))


@dataclass
class OverlayReport:
    n: int
    tau: object
    injective: bool
    preserved_edges: int
    reflected_nonedges: int
    violations: list
    violation_count: int = 0

    @property
    def passed(self):
        return self.injective and self.violation_count == 0

    def to_dict(self):
        return {
            "n": self.n,
            "tau": str(self.tau),
            "n_target": self.n + self.tau.n,
            "passed": self.passed,
            "injective": self.injective,
            "preserved_edges": self.preserved_edges,
            "reflected_nonedges": self.reflected_nonedges,
            "violations": self.violations,
            "violation_count": self.violation_count,
        }


def verify_induced_embedding(n, tau, caps=None):
    """All-pairs check that translation by ``tau`` is an injective induced embedding."""
    caps = resolve(caps)
    tau = as_partition(tau)
    caps.check("verify", n, "source level")
    src = build_graph(n, caps)
    dst = build_graph(n + tau.n, caps)
    omap = overlay_map(n, tau, caps)
    img = omap.targets
    # the image of each vertex must also agree with the direct translation
    verts = src.vertices
    violations = []
    count = 0
    for v, t in omap.pairs:
        if dst.vertices[t] != ferrers_translate(verts[v], tau):
            count += 1
            if len(violations) < MAX_LISTED_VIOLATIONS:
                violations.append({"kind": "image", "source": str(verts[v]), "target": str(dst.vertices[t])})
    injective = len(np.unique(img)) == len(img)

    # target adjacency restricted to the image, relabelled by source id
    inv = np.full(dst.vertex_count, -1, dtype=np.int64)
    inv[img] = np.arange(len(img))
    rows = np.repeat(np.arange(dst.vertex_count), dst.degree)
    keep = (inv[rows] >= 0) & (inv[dst.indices] >= 0)
    induced = np.zeros((src.vertex_count, src.vertex_count), dtype=bool)
    induced[inv[rows[keep]], inv[dst.indices[keep]]] = True
    source = src.dense()

    iu, ju = np.triu_indices(src.vertex_count, k=1)
    s, t = source[iu, ju], induced[iu, ju]
    preserved = int(np.count_nonzero(s & t))
    reflected = int(np.count_nonzero(~s & ~t))
    bad = np.flatnonzero(s != t)
    count += len(bad)
    for k in bad[: max(0, MAX_LISTED_VIOLATIONS - len(violations))].tolist():
        a, b = int(iu[k]), int(ju[k])
        violations.append({
            "kind": "edge_lost" if s[k] else "edge_created",
            "source": [str(verts[a]), str(verts[b])],
            "target": [str(dst.vertices[img[a]]), str(dst.vertices[img[b]])],
        })
    return OverlayReport(n, tau, injective, preserved, reflected, violations, count)


def partitions_up_to(k_max):
    """Every partition of every k in ``0..k_max``; the sweep family for certification."""
    return [tau for k in range(k_max + 1) for tau in enumerate_partitions(k)]


def verify_sweep(n, k_max, caps=None):
    return [verify_induced_embedding(n, tau, caps) for tau in partitions_up_to(k_max)]


def translate_occurrence(occ, tau):
    tau = as_partition(tau)
    return Occurrence(occ.n + tau.n, tuple(ferrers_translate(lam, tau) for lam in occ.assignment), occ.roots)


@dataclass
class PersistenceReport:
    template: str
    n_found: int
    n_to: int
    levels: list = field(default_factory=list)

    @property
    def passed(self):
        return all(lv["occurs"] and lv["translated_witness_valid"] for lv in self.levels)

    def to_dict(self):
        return {
            "template": self.template,
            "range": [self.n_found, self.n_to],
            "passed": self.passed,
            "levels": self.levels,
        }


def persistence_check(template, n_found, n_to, caps=None):
    """Confirm ``template`` occurs at every level in ``[n_found, n_to]``.

    At each level the first witness found at ``n_found`` is also pushed up
    by a single row of length ``m - n_found`` and re-validated.
    """
    if n_to < n_found:
        raise DomainError(f"need n_found <= n_to, got [{n_found}, {n_to}]")
    shape = template.template if isinstance(template, CanonicalFamily) else template
    base = find_occurrences(build_graph(n_found, caps), shape, limit=1)
    if not base:
        raise DomainError(f"template {shape.name!r} does not occur in G_{n_found}")
    witness = base[0]
    report = PersistenceReport(shape.name, n_found, n_to)
    for m in range(n_found, n_to + 1):
        g = build_graph(m, caps)
        occurs = bool(find_occurrences(g, shape, limit=1))
        tau = (m - n_found,) if m > n_found else ()
        moved = translate_occurrence(witness, tau)
        report.levels.append({
            "n": m,
            "occurs": occurs,
            "tau": str(as_partition(tau)),
            "translated_witness": [str(lam) for lam in moved.assignment],
            "translated_witness_valid": validate_assignment(g, shape, moved.assignment),
        })
    return report
