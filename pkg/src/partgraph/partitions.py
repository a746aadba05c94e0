"""Integer partitions: enumeration, conjugation, the conjugate L1 adjacency
test and Ferrers translations."""

from functools import lru_cache
from itertools import zip_longest

import numpy as np

from . import _kernels
from .config import resolve
from .errors import DomainError


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Hashes and compares as a plain tuple, so ``Partition((3, 1)) == (3, 1)``.
    """

    __slots__ = ()

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        for i, p in enumerate(parts):
            if p < 1:
                raise DomainError(f"partition parts must be positive, got {parts}")
            if i and parts[i - 1] < p:
                raise DomainError(f"partition parts must be weakly decreasing, got {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def _trusted(cls, parts):
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, literal):
        """Parse a literal such as ``"4,2,1,1"``; the empty string is ``()``."""
        literal = literal.strip()
        if not literal:
            return cls()
        try:
            parts = [int(tok) for tok in literal.split(",")]
        except ValueError:
            raise DomainError(f"bad partition literal {literal!r}") from None
        return cls(parts)

    @property
    def n(self):
        return sum(self)

    def conjugate(self):
        return conjugate(self)

    def __str__(self):
        return ",".join(map(str, self))

    def __repr__(self):
        return f"Partition({str(self)!r})"


def as_partition(value):
    if isinstance(value, Partition):
        return value
    if isinstance(value, str):
        return Partition.parse(value)
    return Partition(value)


@lru_cache(maxsize=None)
def count_table(nmax):
    """Restricted partition counts ``T[m, k]`` (parts <= k) for m, k <= nmax."""
    table = _kernels.count_table(max(int(nmax), 1))
    table.setflags(write=False)
    return table


def partition_count(n):
    return int(count_table(n)[n, n])


def partition_rows(n, caps=None):
    """All partitions of ``n`` as a zero-padded ``int16`` matrix, descending lex."""
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")
    resolve(caps).check("enumeration", n)
    rows = _kernels.enumerate_rows(n, partition_count(n), max(n, 1))
    rows.setflags(write=False)
    return rows


def rows_to_partitions(rows):
    return [Partition._trusted(tuple(x for x in r if x)) for r in rows.tolist()]


def enumerate_partitions(n, caps=None):
    """Every partition of ``n`` exactly once, in descending lexicographic order."""
    return rows_to_partitions(partition_rows(n, caps))


def conjugate(lam):
    lam = as_partition(lam)
    if not lam:
        return Partition()
    return Partition._trusted(tuple(sum(1 for p in lam if p > j) for j in range(lam[0])))


def _same_size(lam, mu):
    if lam.n != mu.n:
        raise DomainError(f"partitions of different sizes: {lam} ({lam.n}) vs {mu} ({mu.n})")


def l1_conjugate_distance(lam, mu):
    """``sum_j |lam'_j - mu'_j|`` after zero padding."""
    lam, mu = as_partition(lam), as_partition(mu)
    _same_size(lam, mu)
    return sum(abs(a - b) for a, b in zip_longest(conjugate(lam), conjugate(mu), fillvalue=0))


def is_adjacent(lam, mu):
    return l1_conjugate_distance(lam, mu) == 2


def unit_transfers(lam):
    """Distinct partitions reachable from ``lam`` by moving one unit between
    two parts.  One trailing zero part is available as a target, and a part
    reduced to zero disappears."""
    lam = as_partition(lam)
    padded = list(lam) + [0]
    seen = set()
    for i, src in enumerate(padded):
        if src == 0:
            continue
        for j in range(len(padded)):
            if j == i:
                continue
            moved = padded.copy()
            moved[i] -= 1
            moved[j] += 1
            mu = tuple(sorted((p for p in moved if p), reverse=True))
            if mu != lam:
                seen.add(mu)
    return sorted((Partition._trusted(mu) for mu in seen), reverse=True)


def ferrers_translate(lam, tau):
    """The partition whose conjugate is ``lam' + tau'`` (coordinatewise, zero padded)."""
    lam, tau = as_partition(lam), as_partition(tau)
    cols = [a + b for a, b in zip_longest(conjugate(lam), conjugate(tau), fillvalue=0)]
    return conjugate(Partition._trusted(tuple(cols)))


def row_growth(lam, k):
    if k < 1:
        raise DomainError(f"growth length must be >= 1, got {k}")
    return ferrers_translate(lam, (k,))


def column_growth(lam, k):
    if k < 1:
        raise DomainError(f"growth length must be >= 1, got {k}")
    return ferrers_translate(lam, (1,) * k)


def conjugate_rows(rows, width=None):
    """Column heights for each row of a partition matrix, as a matrix."""
    width = rows.shape[1] if width is None else width
    cols = np.arange(width)
    return (rows[:, None, :] > cols[None, :, None]).sum(axis=2).astype(np.int16)
