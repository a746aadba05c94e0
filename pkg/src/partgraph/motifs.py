"""Rooted templates and exact rooted induced-subgraph search on level graphs."""

import json
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path

import numpy as np

from . import _kernels
from .errors import DomainError, InvariantViolation, TemplateError
from .partitions import Partition, conjugate

#: Names kept for atlas-only motifs that have no built-in graph definition.
RESERVED_NAMES = ("a1", "a2", "p3", "e2", "rrec")


@dataclass(frozen=True)
class RootedTemplate:
    name: str
    vertex_count: int
    edges: tuple
    roots: tuple
    min_n: int = None
    induced: bool = True

    def __post_init__(self):
        k = self.vertex_count
        if not isinstance(k, int) or k < 1:
            raise TemplateError(f"{self.name}: vertex count must be a positive integer, got {k!r}")
        seen = set()
        for idx, edge in enumerate(self.edges):
            if len(edge) != 2:
                raise TemplateError(f"{self.name}: edges[{idx}] must have two endpoints")
            a, b = edge
            if not (0 <= a < k and 0 <= b < k):
                raise TemplateError(f"{self.name}: edges[{idx}] = {list(edge)} references a vertex out of range 0..{k - 1}")
            if a == b:
                raise TemplateError(f"{self.name}: edges[{idx}] = {list(edge)} is a self-loop")
            key = (min(a, b), max(a, b))
            if key in seen:
                raise TemplateError(f"{self.name}: edges[{idx}] = {list(edge)} duplicates an earlier edge")
            seen.add(key)
        if not self.roots:
            raise TemplateError(f"{self.name}: at least one root is required")
        for idx, r in enumerate(self.roots):
            if not 0 <= r < k:
                raise TemplateError(f"{self.name}: roots[{idx}] = {r} is out of range 0..{k - 1}")
        if len(set(self.roots)) != len(self.roots):
            raise TemplateError(f"{self.name}: roots must be distinct")
        if self.min_n is not None and self.min_n < 1:
            raise TemplateError(f"{self.name}: min_n must be >= 1 or null")
        object.__setattr__(self, "edges", tuple(sorted(seen)))
        object.__setattr__(self, "roots", tuple(self.roots))

    @cached_property
    def adjacency(self):
        mat = np.zeros((self.vertex_count, self.vertex_count), dtype=np.uint8)
        for a, b in self.edges:
            mat[a, b] = mat[b, a] = 1
        mat.setflags(write=False)
        return mat

    @cached_property
    def search_plan(self):
        """Assignment order (roots, then the rest by id) and anchor positions."""
        order = list(self.roots) + [v for v in range(self.vertex_count) if v not in self.roots]
        anchor = []
        for p, t in enumerate(order):
            anchor.append(next((q for q in range(p) if self.adjacency[order[q], t]), -1))
        return np.array(order, dtype=np.int64), np.array(anchor, dtype=np.int64)

    def to_dict(self):
        return {
            "name": self.name,
            "vertices": self.vertex_count,
            "edges": [list(e) for e in self.edges],
            "roots": list(self.roots),
            "min_n": self.min_n,
        }


@dataclass(frozen=True)
class Occurrence:
    n: int
    assignment: tuple  # one Partition per template vertex
    roots: tuple  # template root ids, in root order

    @property
    def root_assignment(self):
        return tuple(self.assignment[r] for r in self.roots)

    def to_dict(self):
        return {
            "n": self.n,
            "assignment": [str(lam) for lam in self.assignment],
            "roots": [str(lam) for lam in self.root_assignment],
        }


def _complete(name, k):
    return RootedTemplate(name, k, tuple((a, b) for a in range(k) for b in range(a + 1, k)), (0,))


def builtin_templates():
    """Fixed rooted templates, keyed by their CLI alias."""
    return {
        # x0 - x1 - x2, ordered roots (x0, x2)
        "p2": RootedTemplate("p2", 3, ((0, 1), (1, 2)), (0, 2)),
        # rooted triangle
        "e1": RootedTemplate("e1", 3, ((0, 1), (0, 2), (1, 2)), (0,)),
        # q=0 adjacent exactly to u=1, v=2; {u, v, w1=3, w2=4} complete
        "rsq": RootedTemplate(
            "rsq", 5, ((0, 1), (0, 2), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)), (0,)
        ),
        "k3": _complete("k3", 3),
        "k4": _complete("k4", 4),
        "k5": _complete("k5", 5),
    }


#: Realizations used to state first-appearance bounds for the weak templates.
REFERENCE_REALIZATIONS = {
    "p2": (8, ("3,3,2", "4,3,1", "4,2,1,1")),
    "e1": (6, ("2,2,2", "3,2,1", "2,2,1,1")),
    "rsq": (9, ("3,3,3", "4,3,2", "3,3,2,1", "4,3,1,1", "4,2,2,1")),
}


def _triangle(name):
    return RootedTemplate(name, 3, ((0, 1), (0, 2), (1, 2)), (0,), min_n=4)


def _bl1_assignment(n):
    return (Partition((n - 1, 1)), Partition((n - 2, 1, 1)), Partition((n - 2, 2)))


def _br1_assignment(n):
    return tuple(conjugate(lam) for lam in _bl1_assignment(n))


@dataclass(frozen=True)
class CanonicalFamily:
    """A level-dependent motif given by explicit per-level vertices."""

    name: str
    template: RootedTemplate
    builder: object

    @property
    def min_n(self):
        return self.template.min_n

    def assignment(self, n):
        if n < self.min_n:
            raise DomainError(f"{self.name} is defined only for n >= {self.min_n}, got n={n}")
        return self.builder(n)

    def realize(self, g):
        """The canonical occurrence in ``g``, or ``None`` below ``min_n``.

        Raises :class:`InvariantViolation` if the canonical vertices fail to
        form the template."""
        if g.n < self.min_n:
            return None
        assignment = self.assignment(g.n)
        if not validate_assignment(g, self.template, assignment):
            raise InvariantViolation(f"canonical {self.name} vertices {[str(x) for x in assignment]} do not form an induced triangle in G_{g.n}")
        return Occurrence(g.n, assignment, self.template.roots)


BL1 = CanonicalFamily("bl1", _triangle("bl1"), _bl1_assignment)
BR1 = CanonicalFamily("br1", _triangle("br1"), _br1_assignment)


def canonical_bl1(n):
    """Triangle rooted at (n-1,1) with ordered secondaries (n-2,1,1), (n-2,2)."""
    return BL1.template, Occurrence(n, BL1.assignment(n), BL1.template.roots)


def canonical_br1(n):
    """Conjugate-side triangle rooted at (2,1^(n-2))."""
    return BR1.template, Occurrence(n, BR1.assignment(n), BR1.template.roots)


def validate_assignment(g, template, assignment):
    """True when ``assignment`` is an induced, injective copy of ``template`` in ``g``."""
    if len(assignment) != template.vertex_count:
        return False
    ids = []
    for lam in assignment:
        lam = Partition(lam) if not isinstance(lam, Partition) else lam
        if lam.n != g.n:
            return False
        ids.append(g.index[lam])
    if len(set(ids)) != len(ids):
        return False
    adj = template.adjacency
    for a in range(len(ids)):
        for b in range(a + 1, len(ids)):
            if g.has_edge(ids[a], ids[b]) != bool(adj[a, b]):
                return False
    return True


def _search(g, template, limit):
    order, anchor = template.search_plan
    mindeg = template.adjacency.sum(axis=1).astype(np.int64)
    lim = -1 if limit is None else int(limit)
    if lim < 0:
        total = _kernels.motif_search(
            g.indptr, g.indices, template.adjacency, order, anchor, mindeg, -1,
            np.empty((0, template.vertex_count), dtype=np.int64),
        )
        cap = total
    else:
        cap = lim
    out = np.empty((cap, template.vertex_count), dtype=np.int64)
    found = _kernels.motif_search(g.indptr, g.indices, template.adjacency, order, anchor, mindeg, lim, out)
    return out[:found]


def count_occurrences(g, template):
    """Number of raw root-respecting induced assignments (no automorphism quotient)."""
    if isinstance(template, CanonicalFamily):
        return int(template.realize(g) is not None)
    order, anchor = template.search_plan
    mindeg = template.adjacency.sum(axis=1).astype(np.int64)
    return int(_kernels.motif_search(
        g.indptr, g.indices, template.adjacency, order, anchor, mindeg, -1,
        np.empty((0, template.vertex_count), dtype=np.int64),
    ))


def find_occurrences(g, template, limit=None):
    """Induced rooted copies of ``template`` in ``g``.

    Ordered by root candidate id, then by the ids chosen for the remaining
    template vertices.  A :class:`CanonicalFamily` yields its canonical
    realization only.
    """
    if limit is not None and limit < 0:
        raise DomainError(f"limit must be nonnegative, got {limit}")
    if isinstance(template, CanonicalFamily):
        occ = template.realize(g)
        return [] if occ is None or limit == 0 else [occ]
    if template.min_n is not None and g.n < template.min_n:
        return []
    verts = g.vertices
    return [
        Occurrence(g.n, tuple(verts[i] for i in row), template.roots)
        for row in _search(g, template, limit).tolist()
    ]


def parse_template(payload, source="<template>"):
    """Build a template from a decoded JSON object."""
    if not isinstance(payload, dict):
        raise TemplateError(f"{source}: top level must be an object")
    missing = [k for k in ("name", "vertices", "edges", "roots") if k not in payload]
    if missing:
        raise TemplateError(f"{source}: missing field(s) {', '.join(missing)}")
    unknown = set(payload) - {"name", "vertices", "edges", "roots", "min_n"}
    if unknown:
        raise TemplateError(f"{source}: unknown field(s) {', '.join(sorted(unknown))}")
    name, k, edges, roots = payload["name"], payload["vertices"], payload["edges"], payload["roots"]
    if not isinstance(name, str) or not name:
        raise TemplateError(f"{source}: 'name' must be a nonempty string")
    if not isinstance(k, int) or isinstance(k, bool):
        raise TemplateError(f"{source}: 'vertices' must be an integer")
    if not isinstance(edges, list) or not all(
        isinstance(e, list) and all(isinstance(x, int) and not isinstance(x, bool) for x in e) for e in edges
    ):
        raise TemplateError(f"{source}: 'edges' must be a list of [int, int] pairs")
    if not isinstance(roots, list) or not all(isinstance(r, int) and not isinstance(r, bool) for r in roots):
        raise TemplateError(f"{source}: 'roots' must be a list of integers")
    min_n = payload.get("min_n")
    if min_n is not None and (not isinstance(min_n, int) or isinstance(min_n, bool)):
        raise TemplateError(f"{source}: 'min_n' must be an integer or null")
    try:
        return RootedTemplate(name, k, tuple(tuple(e) for e in edges), tuple(roots), min_n)
    except TemplateError as exc:
        raise TemplateError(f"{source}: {exc}") from None


def load_template(file):
    """Read a template from a path or an open text file."""
    if hasattr(file, "read"):
        source, text = getattr(file, "name", "<stream>"), file.read()
    else:
        source = str(file)
        try:
            text = Path(file).read_text()
        except OSError as exc:
            raise TemplateError(f"{source}: cannot read template ({exc.strerror})") from None
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise TemplateError(f"{source}:{exc.lineno}:{exc.colno}: invalid JSON: {exc.msg}") from None
    return parse_template(payload, source)


class TemplateRegistry:
    """Built-in templates, the two canonical families and user templates."""

    def __init__(self):
        self._entries = {"bl1": BL1, "br1": BR1, **builtin_templates()}

    def __contains__(self, name):
        return name in self._entries

    def names(self):
        return list(self._entries)

    def register(self, template):
        if template.name in self._entries:
            raise TemplateError(f"a template named {template.name!r} is already registered")
        self._entries[template.name] = template
        return template

    def get(self, name):
        if name in self._entries:
            return self._entries[name]
        if name in RESERVED_NAMES:
            raise DomainError(f"{name!r} is reserved for an atlas-only motif with no built-in definition; load it from a template file")
        raise DomainError(f"unknown template {name!r}; known: {', '.join(self._entries)}")

    def resolve(self, selector):
        """A registered name, or a path to a template JSON file."""
        if selector in self._entries or not Path(selector).is_file():
            return self.get(selector)
        template = load_template(selector)
        existing = self._entries.get(template.name)
        if existing is None:
            return self.register(template)
        if existing == template:
            return existing
        raise TemplateError(f"{selector}: name {template.name!r} clashes with a registered template")
