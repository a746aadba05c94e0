"""Size caps.  Defaults may be overridden through environment variables or
:func:`set_caps`; explicit ``caps=`` arguments win over both."""

import os
from dataclasses import dataclass, fields, replace

from .errors import CapacityError, DomainError

_ENV = {
    "enumeration": "PARTGRAPH_ENUM_CAP",
    "graph": "PARTGRAPH_GRAPH_CAP",
    "clique_level": "PARTGRAPH_CLIQUE_CAP",
    "neighborhood": "PARTGRAPH_NEIGHBORHOOD_CAP",
    "verify": "PARTGRAPH_VERIFY_CAP",
}


@dataclass(frozen=True)
class Caps:
    enumeration: int = 60  # largest n for enumerate_partitions
    graph: int = 40  # largest n for build_graph
    clique_level: int = 25  # largest n for clique-based invariants
    neighborhood: int = 64  # largest open neighbourhood for local clique search
    verify: int = 12  # largest source level for all-pairs overlay certification

    def __post_init__(self):
        for f in fields(self):
            if getattr(self, f.name) < 1:
                raise DomainError(f"cap {f.name!r} must be positive")

    @classmethod
    def from_env(cls):
        kw = {}
        for name, var in _ENV.items():
            raw = os.environ.get(var)
            if raw:
                try:
                    kw[name] = int(raw)
                except ValueError:
                    raise DomainError(f"{var} must be an integer, got {raw!r}") from None
        return cls(**kw)

    def check(self, name, n, what="n"):
        cap = getattr(self, name)
        if n > cap:
            raise CapacityError(f"{what}={n} exceeds the {name} cap of {cap}")


_current = Caps.from_env()


def get_caps():
    return _current


def set_caps(caps=None, **overrides):
    """Replace the process-wide caps; returns the previous value."""
    global _current
    previous = _current
    _current = replace(caps or _current, **overrides)
    return previous


def resolve(caps):
    return _current if caps is None else caps
