"""First-appearance scans for motifs and extremal lower bounds."""

from dataclasses import dataclass

from .errors import DomainError, InvariantViolation
from .graph import build_graph
from .invariants import extremal_record
from .motifs import CanonicalFamily, find_occurrences

EXTREMAL_KINDS = ("delta", "omega", "s")


@dataclass
class ThresholdResult:
    descriptor: str
    first_n: int
    scanned_to: int
    stability_verified_to: int = None
    witness: object = None

    @property
    def found(self):
        return self.first_n is not None

    def to_dict(self):
        return {
            "property": self.descriptor,
            "first_n": self.first_n,
            "scanned_to": self.scanned_to,
            "stability_verified_to": self.stability_verified_to,
            "status": "found" if self.found else f"not found up to {self.scanned_to}",
            "witness": None if self.witness is None else self.witness.to_dict(),
        }


def _first_occurrence(template, n, caps):
    g = build_graph(n, caps)
    if isinstance(template, CanonicalFamily):
        return template.realize(g)
    hits = find_occurrences(g, template, limit=1)
    return hits[0] if hits else None


def motif_threshold(template, n_max, verify_to=None, caps=None):
    """Smallest level in ``1..n_max`` containing ``template``.

    Once found, every level up to ``verify_to`` (default ``n_max``) is
    re-checked; a miss there contradicts overlay persistence and raises
    :class:`InvariantViolation`.  Level-dependent families are checked by
    validating their canonical vertices at each level instead of searching.
    """
    if n_max < 1:
        raise DomainError(f"n_max must be >= 1, got {n_max}")
    verify_to = n_max if verify_to is None else verify_to
    first = witness = None
    for n in range(1, n_max + 1):
        occ = _first_occurrence(template, n, caps)
        if occ is not None:
            first, witness = n, occ
            break
    if first is None:
        return ThresholdResult(template.name, None, n_max)
    for m in range(first + 1, verify_to + 1):
        if _first_occurrence(template, m, caps) is None:
            raise InvariantViolation(f"{template.name} occurs in G_{first} but not in G_{m}")
    return ThresholdResult(template.name, first, n_max, max(verify_to, first), witness)


def extremal_threshold(kind, bound, n_max, caps=None):
    """Smallest ``n <= n_max`` with Delta_n, Omega_n or S_n at least ``bound``.

    The whole range is scanned so that nondecrease is re-checked past the
    threshold as well.
    """
    if kind not in EXTREMAL_KINDS:
        raise DomainError(f"unknown extremal kind {kind!r}; expected one of {', '.join(EXTREMAL_KINDS)}")
    if bound < 0:
        raise DomainError(f"bound must be nonnegative, got {bound}")
    descriptor = f"{kind} >= {bound}"
    first = witness = previous = None
    for n in range(1, n_max + 1):
        rec = extremal_record(n, caps)
        value = getattr(rec, kind)
        if previous is not None and value < previous:
            raise InvariantViolation(f"{kind} decreased from {previous} at n={n - 1} to {value} at n={n}")
        previous = value
        if first is None and value >= bound:
            first, witness = n, rec
    if first is None:
        return ThresholdResult(descriptor, None, n_max)
    return ThresholdResult(descriptor, first, n_max, n_max, witness)
