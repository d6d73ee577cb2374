"""Partitions and (semi)standard Young tableaux.

A partition is a weakly decreasing tuple of positive integers; the empty
tuple is the empty partition.  Tableaux follow the transposed convention
used throughout this package: every column is strictly increasing and
every row is weakly increasing, so that determinants and Pfaffians attach
to tableau *columns*.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Iterator, Optional, Sequence

from .errors import ShapeError, SizeLimitError

Shape = tuple[int, ...]

#: Upper bound on the number of boxes accepted by the enumeration helpers.
DEFAULT_ENUM_LIMIT = 30


def partition(parts: Sequence[int]) -> Shape:
    """Validate ``parts`` as a partition and return it as a tuple."""
    lam = tuple(int(p) for p in parts)
    for i, p in enumerate(lam):
        if p < 1:
            raise ShapeError(f"partition parts must be positive, got {lam}")
        if i + 1 < len(lam) and lam[i + 1] > p:
            raise ShapeError(f"partition parts must be weakly decreasing, got {lam}")
    return lam


def is_partition(parts: Sequence[int]) -> bool:
    try:
        partition(parts)
    except ShapeError:
        return False
    return True


def conjugate(lam: Shape) -> Shape:
    """Transpose a partition: column lengths become the parts."""
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > i) for i in range(lam[0]))


def has_even_rows(lam: Shape) -> bool:
    return all(p % 2 == 0 for p in lam)


def has_odd_rows(lam: Shape) -> bool:
    return all(p % 2 == 1 for p in lam)


def has_even_columns(lam: Shape) -> bool:
    """True iff every column length is even, i.e. rows pair up equal."""
    if len(lam) % 2 != 0:
        return False
    return all(lam[i] == lam[i + 1] for i in range(0, len(lam), 2))


def partitions(
    m: int,
    max_length: Optional[int] = None,
    max_part: Optional[int] = None,
) -> Iterator[Shape]:
    """Yield all partitions of ``m`` with the given bounds, largest part first."""
    limit_len = m if max_length is None else max_length
    limit_part = m if max_part is None else max_part

    def rec(remaining: int, largest: int, length: int) -> Iterator[Shape]:
        if remaining == 0:
            yield ()
            return
        if length == 0:
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in rec(remaining - first, first, length - 1):
                yield (first,) + rest

    yield from rec(m, limit_part, limit_len)


def add_rectangle(lam: Shape, d: int, n: int) -> Shape:
    """Add ``d`` boxes to each of the first ``n`` rows (the shape ``lam + d^n``)."""
    if len(lam) > n:
        raise ShapeError(f"partition {lam} has more than {n} rows")
    if d < 0:
        raise ShapeError("cannot add a negative rectangle")
    if d == 0:
        return lam
    padded = lam + (0,) * (n - len(lam))
    return tuple(p + d for p in padded)


@lru_cache(maxsize=None)
def hook_product(lam: Shape) -> int:
    mu = conjugate(lam)
    prod = 1
    for i, row in enumerate(lam):
        for j in range(row):
            prod *= row - j + mu[j] - i - 1
    return prod


@lru_cache(maxsize=None)
def count_syt(lam: Shape) -> int:
    """Number of standard Young tableaux of shape ``lam`` (hook lengths, exact)."""
    if not lam:
        return 1
    return factorial(sum(lam)) // hook_product(lam)


@dataclass(frozen=True)
class Tableau:
    """A filling of a partition shape by positive integers, stored by rows."""

    rows: tuple[tuple[int, ...], ...]

    @staticmethod
    def from_rows(rows: Sequence[Sequence[int]]) -> "Tableau":
        return Tableau(tuple(tuple(int(x) for x in row) for row in rows))

    @property
    def shape(self) -> Shape:
        return partition(tuple(len(row) for row in self.rows))

    @property
    def size(self) -> int:
        return sum(len(row) for row in self.rows)

    def column(self, k: int) -> tuple[int, ...]:
        """The entries of column ``k`` (0-based), top to bottom."""
        return tuple(row[k] for row in self.rows if len(row) > k)

    def columns(self) -> list[tuple[int, ...]]:
        width = len(self.rows[0]) if self.rows else 0
        return [self.column(k) for k in range(width)]

    def weight(self, m: Optional[int] = None) -> tuple[int, ...]:
        """Occurrence counts of 1..m (m defaults to the largest entry)."""
        entries = [x for row in self.rows for x in row]
        if m is None:
            m = max(entries, default=0)
        counts = [0] * m
        for x in entries:
            if not 1 <= x <= m:
                raise ShapeError(f"entry {x} outside 1..{m}")
            counts[x - 1] += 1
        return tuple(counts)

    def is_ssyt(self) -> bool:
        """Rows weakly increasing, columns strictly increasing, valid shape."""
        try:
            shape = self.shape
        except ShapeError:
            return False
        for row in self.rows:
            if any(row[j] > row[j + 1] for j in range(len(row) - 1)):
                return False
            if any(x < 1 for x in row):
                return False
        for i in range(1, len(shape)):
            if any(self.rows[i - 1][j] >= self.rows[i][j] for j in range(shape[i])):
                return False
        return True

    def is_syt(self) -> bool:
        """SSYT whose entries are exactly 1..size, each used once."""
        return self.is_ssyt() and sorted(x for row in self.rows for x in row) == list(
            range(1, self.size + 1)
        )

    def row_reading_word(self) -> tuple[int, ...]:
        return tuple(x for row in self.rows for x in row)

    def to_json(self) -> dict:
        return {"shape": list(self.shape), "rows": [list(row) for row in self.rows]}

    @staticmethod
    def from_json(data: dict) -> "Tableau":
        tab = Tableau.from_rows(data["rows"])
        if list(tab.shape) != list(data.get("shape", tab.shape)):
            raise ShapeError("declared shape does not match rows")
        return tab


EMPTY_TABLEAU = Tableau(())


def enumerate_ssyt(
    lam: Shape,
    max_entry: int,
    weight: Optional[Sequence[int]] = None,
    limit: int = DEFAULT_ENUM_LIMIT,
) -> list[Tableau]:
    """All SSYT of shape ``lam`` with entries in 1..max_entry.

    With ``weight`` given (length ``max_entry``), only fillings with exactly
    that occurrence vector are returned.  Output is sorted lexicographically
    by row-reading word; this is the order the backtracking produces.
    """
    lam = partition(lam)
    size = sum(lam)
    if size > limit:
        raise SizeLimitError(f"shape {lam} has {size} boxes, limit is {limit}")
    if weight is not None:
        weight = tuple(int(w) for w in weight)
        if len(weight) != max_entry:
            raise ShapeError("weight vector length must equal max_entry")
        if sum(weight) != size:
            return []
    if not lam:
        return [EMPTY_TABLEAU]

    remaining = list(weight) if weight is not None else None
    rows: list[list[int]] = [[0] * p for p in lam]
    cells = [(i, j) for i, p in enumerate(lam) for j in range(p)]
    out: list[Tableau] = []

    def fill(pos: int) -> None:
        if pos == size:
            out.append(Tableau.from_rows(rows))
            return
        i, j = cells[pos]
        low = rows[i][j - 1] if j > 0 else 1
        if i > 0:
            low = max(low, rows[i - 1][j] + 1)
        for val in range(low, max_entry + 1):
            if remaining is not None:
                if remaining[val - 1] == 0:
                    continue
                remaining[val - 1] -= 1
            rows[i][j] = val
            fill(pos + 1)
            rows[i][j] = 0
            if remaining is not None:
                remaining[val - 1] += 1

    fill(0)
    return out


def enumerate_syt(lam: Shape, limit: int = DEFAULT_ENUM_LIMIT) -> list[Tableau]:
    """All standard Young tableaux of shape ``lam``, in row-reading order."""
    lam = partition(lam)
    size = sum(lam)
    if size > limit:
        raise SizeLimitError(f"shape {lam} has {size} boxes, limit is {limit}")
    return enumerate_ssyt(lam, size, weight=(1,) * size, limit=limit)


def count_ssyt(lam: Shape, weight: Sequence[int]) -> int:
    """Number of SSYT of shape ``lam`` with the exact weight (Kostka number)."""
    lam = partition(lam)
    if sum(lam) != sum(weight):
        return 0
    return len(enumerate_ssyt(lam, len(weight), weight=weight, limit=max(sum(lam), 1)))
