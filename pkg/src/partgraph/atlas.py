"""Per-level atlas: zone labels, carrier distributions, growth profiles and
the threshold registry table.

The zone rules are operational stand-ins for informal positional language
and every output carries that caveat.
"""

import csv
import io
import json
from dataclasses import dataclass, field
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from enum import Enum
from fractions import Fraction

import numpy as np

from .config import resolve
from .errors import DomainError
from .graph import build_graph, degree_spectrum
from .invariants import extremal_record, local_clique_numbers
from .motifs import REFERENCE_REALIZATIONS, CanonicalFamily, TemplateRegistry, count_occurrences, find_occurrences
from .partitions import as_partition, conjugate, l1_conjugate_distance
from .thresholds import motif_threshold

ZONE_NOTE = "atlas-level heuristic: zone rules are operational conventions, not proved structure"
DEFAULT_TEMPLATES = ("bl1", "br1", "p2", "e1", "rsq", "k3", "k4", "k5")

# proved exact thresholds, and proved upper bounds from explicit realizations
PROVED_EXACT = {"bl1": 4, "br1": 4}
PROVED_BOUND = {name: level for name, (level, _) in REFERENCE_REALIZATIONS.items()}


class Zone(str, Enum):
    AXIS = "axis"
    AXIS_NEAR = "axis_near"
    BOUNDARY_FRONT = "boundary_front"
    REAR = "rear"
    INTERIOR = "interior"


def _rectangles(n):
    return [(a,) * (n // a) for a in range(1, n + 1) if n % a == 0]


def classify_zone(lam):
    """First matching rule wins: axis, axis_near, boundary_front, rear, interior."""
    lam = as_partition(lam)
    n = lam.n
    if n < 1:
        raise DomainError("zones are defined for partitions of n >= 1")
    conj = conjugate(lam)
    if lam == conj:
        return Zone.AXIS
    if l1_conjugate_distance(lam, conj) == 2:
        return Zone.AXIS_NEAR
    if lam[0] >= n - 2 or len(lam) >= n - 2:
        return Zone.BOUNDARY_FRONT
    if len(set(lam)) == 1 or any(l1_conjugate_distance(lam, r) <= 2 for r in _rectangles(n)):
        return Zone.REAR
    return Zone.INTERIOR


def zone_histogram(partitions):
    hist = {z.value: 0 for z in Zone}
    for lam in partitions:
        hist[classify_zone(lam).value] += 1
    return hist


def _registry_entries(templates, registry):
    registry = registry or TemplateRegistry()
    names = DEFAULT_TEMPLATES if templates is None else templates
    return [(registry.resolve(t) if isinstance(t, str) else t) for t in names]


def _carriers(g, omegas, templates):
    verts = g.vertices
    carriers = {
        "max_degree": zone_histogram(verts[v] for v in np.flatnonzero(g.degree == g.degree.max())),
        "max_omega": zone_histogram(verts[v] for v in np.flatnonzero(omegas == omegas.max())),
    }
    counts = {}
    for t in templates:
        occs = find_occurrences(g, t)
        counts[t.name] = len(occs)
        roots = {lam for occ in occs for lam in occ.root_assignment}
        carriers[f"roots:{t.name}"] = zone_histogram(sorted(roots, reverse=True))
    return carriers, counts


def carrier_distribution(n, templates=None, registry=None, caps=None):
    """Zone histograms of max-degree vertices, max-omega_loc vertices and motif roots."""
    carriers, _ = _carriers(build_graph(n, caps), local_clique_numbers(n, caps), _registry_entries(templates, registry))
    return carriers


PROFILE_KINDS = ("vertices", "edges", "delta", "omega", "s")


def _profile_value(kind, n, registry, caps):
    if kind == "vertices":
        return build_graph(n, caps).vertex_count
    if kind == "edges":
        return build_graph(n, caps).edge_count
    if kind in ("delta", "omega", "s"):
        return getattr(extremal_record(n, caps), kind)
    if kind.startswith("motif:"):
        template = (registry or TemplateRegistry()).resolve(kind[len("motif:"):])
        return count_occurrences(build_graph(n, caps), template)
    raise DomainError(f"unknown profile kind {kind!r}; expected one of {', '.join(PROFILE_KINDS)} or motif:<name>")


def growth_profile(kind, n_from, n_to, registry=None, caps=None):
    """The sequence ``a_n`` for ``n`` in ``[n_from, n_to]``."""
    if not 1 <= n_from <= n_to:
        raise DomainError(f"need 1 <= n_from <= n_to, got [{n_from}, {n_to}]")
    return [_profile_value(kind, n, registry, caps) for n in range(n_from, n_to + 1)]


def normalized_profile(a, b, n_from, n_to, registry=None, caps=None):
    """Exact ratios ``a_n / b_n``."""
    num = growth_profile(a, n_from, n_to, registry, caps)
    den = growth_profile(b, n_from, n_to, registry, caps)
    out = []
    for n, x, y in zip(range(n_from, n_to + 1), num, den):
        if y == 0:
            raise DomainError(f"profile {b!r} is zero at n={n}")
        out.append(Fraction(x, y))
    return out


def render_ratio(fr, places=6):
    with localcontext() as ctx:
        ctx.prec = 50
        value = Decimal(fr.numerator) / Decimal(fr.denominator)
        return str(value.quantize(Decimal(1).scaleb(-places), rounding=ROUND_HALF_EVEN))


def ratio_payload(fr):
    return {"num": fr.numerator, "den": fr.denominator, "value": render_ratio(fr)}


@dataclass
class AtlasRecord:
    n: int
    vertex_count: int
    edge_count: int
    extremal: object
    degree_spectrum: dict
    motif_counts: dict
    zone_histogram: dict
    carrier_zones: dict
    carriers: dict
    profiles: dict

    def to_dict(self):
        return {
            "n": self.n,
            "vertex_count": self.vertex_count,
            "edge_count": self.edge_count,
            "extremal": self.extremal.to_dict(),
            "degree_spectrum": [[d, c] for d, c in self.degree_spectrum.items()],
            "motif_counts": self.motif_counts,
            "zone_histogram": self.zone_histogram,
            "carrier_zones": self.carrier_zones,
            "carrier_distribution": self.carriers,
            "profiles": {k: ratio_payload(v) for k, v in self.profiles.items()},
        }


def atlas_record(n, templates, caps=None):
    g = build_graph(n, caps)
    ext = extremal_record(n, caps)
    carriers, counts = _carriers(g, local_clique_numbers(n, caps), templates)
    verts = g.vertices
    return AtlasRecord(
        n=n,
        vertex_count=g.vertex_count,
        edge_count=g.edge_count,
        extremal=ext,
        degree_spectrum=degree_spectrum(g),
        motif_counts=counts,
        zone_histogram=zone_histogram(verts),
        carrier_zones={
            "delta_witness": classify_zone(ext.delta_witness).value,
            "omega_witness": classify_zone(ext.omega_witness).value,
        },
        carriers=carriers,
        profiles={
            "edges/vertices": Fraction(g.edge_count, g.vertex_count),
            "delta/vertices": Fraction(ext.delta, g.vertex_count),
        },
    )


def threshold_entry(template, n_from, n_to, caps=None):
    """One row of the registry table.

    ``value`` is either proved (``value_source == "proved"``) or
    computed in this run; ``paper_bound`` is the proved upper bound where
    one exists.
    """
    name = template.name
    if name in PROVED_EXACT:
        scan = motif_threshold(template, n_to, caps=caps)
        return {
            "name": name,
            "status": "exact_threshold",
            "value": PROVED_EXACT[name],
            "paper_bound": PROVED_EXACT[name],
            "value_source": "proved",
            "computed_first_n": scan.first_n,
            "scan_range": [1, n_to],
        }
    if name in PROVED_BOUND and not isinstance(template, CanonicalFamily):
        scan = motif_threshold(template, n_to, caps=caps)
        return {
            "name": name,
            "status": "stable_threshold_bounded",
            "value": scan.first_n,
            "paper_bound": PROVED_BOUND[name],
            "value_source": "computed_this_run",
            "computed_first_n": scan.first_n,
            "scan_range": [1, n_to],
        }
    first = None
    for n in range(n_from, n_to + 1):
        if find_occurrences(build_graph(n, caps), template, limit=1):
            first = n
            break
    return {
        "name": name,
        "status": "atlas_only",
        "value": first,
        "paper_bound": None,
        "value_source": "computed_this_run",
        "computed_first_n": first,
        "scan_range": [n_from, n_to],
    }


@dataclass
class Atlas:
    n_from: int
    n_to: int
    records: list
    thresholds: list = field(default_factory=list)

    def to_dict(self):
        return {
            "range": [self.n_from, self.n_to],
            "records": [r.to_dict() for r in self.records],
            "summary": {
                "thresholds": self.thresholds,
                "zone_rules": ZONE_NOTE,
                "threshold_note": "values not marked proved are first levels observed in scan_range, never claims of nonexistence beyond it",
            },
        }

    def to_json(self):
        return (json.dumps(self.to_dict(), indent=2) + "\n").encode()

    def to_csv(self):
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "metric", "value"])
        for r in self.records:
            rows = [
                ("vertex_count", r.vertex_count),
                ("edge_count", r.edge_count),
                ("delta", r.extremal.delta),
                ("omega", r.extremal.omega),
                ("s", r.extremal.s),
            ]
            rows += [(f"motif:{k}", v) for k, v in r.motif_counts.items()]
            rows += [(f"zone:{k}", v) for k, v in r.zone_histogram.items()]
            rows += [(f"profile:{k}", render_ratio(v)) for k, v in r.profiles.items()]
            for metric, value in rows:
                w.writerow([r.n, metric, value])
        return buf.getvalue().encode()


def build_atlas(n_from, n_to, templates=None, registry=None, caps=None):
    if not 1 <= n_from <= n_to:
        raise DomainError(f"need 1 <= n_from <= n_to, got [{n_from}, {n_to}]")
    caps = resolve(caps)
    caps.check("clique_level", n_to)
    entries = _registry_entries(templates, registry)
    records = [atlas_record(n, entries, caps) for n in range(n_from, n_to + 1)]
    atlas = Atlas(n_from, n_to, records)
    atlas.thresholds = [threshold_entry(t, n_from, n_to, caps) for t in entries]
    return atlas
