class PartGraphError(Exception):
    """Base class for errors raised by partgraph."""


class DomainError(PartGraphError, ValueError):
    """An argument lies outside the domain of the operation."""


class CapacityError(PartGraphError):
    """A configured size cap would be exceeded."""


class TemplateError(DomainError):
    """A template file or payload failed validation."""


class InvariantViolation(PartGraphError, AssertionError):
    """A proved structural property failed to hold; indicates a bug."""
