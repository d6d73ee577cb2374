"""Nonnegative integer matrices with the predicates the correspondences need."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import ShapeError


@dataclass(frozen=True)
class NatMatrix:
    """An r x c matrix of nonnegative integers."""

    entries: tuple[tuple[int, ...], ...]

    @staticmethod
    def from_rows(rows: Sequence[Sequence[int]]) -> "NatMatrix":
        entries = tuple(tuple(int(x) for x in row) for row in rows)
        if entries:
            width = len(entries[0])
            if any(len(row) != width for row in entries):
                raise ShapeError("ragged matrix")
        if any(x < 0 for row in entries for x in row):
            raise ShapeError("entries must be nonnegative")
        return NatMatrix(entries)

    @staticmethod
    def zero(rows: int, cols: int) -> "NatMatrix":
        return NatMatrix(tuple((0,) * cols for _ in range(rows)))

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def __getitem__(self, pos: tuple[int, int]) -> int:
        return self.entries[pos[0]][pos[1]]

    def row_sums(self) -> tuple[int, ...]:
        return tuple(sum(row) for row in self.entries)

    def col_sums(self) -> tuple[int, ...]:
        return tuple(sum(row[j] for row in self.entries) for j in range(self.cols))

    def trace(self) -> int:
        return sum(self.entries[i][i] for i in range(min(self.rows, self.cols)))

    def transpose(self) -> "NatMatrix":
        return NatMatrix(tuple(zip(*self.entries)) if self.entries else ())

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and self.entries == self.transpose().entries

    def has_even_diagonal(self) -> bool:
        return all(self.entries[i][i] % 2 == 0 for i in range(min(self.rows, self.cols)))

    def has_zero_diagonal(self) -> bool:
        return all(self.entries[i][i] == 0 for i in range(min(self.rows, self.cols)))

    def support(self) -> list[tuple[int, int]]:
        """Positions (0-based) of the nonzero entries, row-major order."""
        return [
            (i, j)
            for i, row in enumerate(self.entries)
            for j, x in enumerate(row)
            if x
        ]

    def to_lists(self) -> list[list[int]]:
        return [list(row) for row in self.entries]


def matrices_with_row_sums(
    row_sums: Sequence[int], col_sums: Sequence[int]
) -> Iterator[NatMatrix]:
    """All N-matrices with the prescribed row and column sums, row-major lex order."""
    p, q = len(row_sums), len(col_sums)
    if sum(row_sums) != sum(col_sums):
        return
    if q == 0:
        yield NatMatrix(tuple(() for _ in range(p)))
        return
    col_left = list(col_sums)
    rows: list[tuple[int, ...]] = []

    def row_fills(total: int, caps: list[int], j: int) -> Iterator[tuple[int, ...]]:
        if j == q - 1:
            if total <= caps[j]:
                yield (total,)
            return
        for x in range(min(total, caps[j]) + 1):
            for rest in row_fills(total - x, caps, j + 1):
                yield (x,) + rest

    def rec(i: int) -> Iterator[NatMatrix]:
        if i == p:
            if all(c == 0 for c in col_left):
                yield NatMatrix(tuple(rows))
            return
        for fill in row_fills(row_sums[i], col_left, 0):
            for j in range(q):
                col_left[j] -= fill[j]
            rows.append(fill)
            yield from rec(i + 1)
            rows.pop()
            for j in range(q):
                col_left[j] += fill[j]

    yield from rec(0)


def symmetric_matrices_with_row_sums(
    row_sums: Sequence[int], diagonal: str = "even"
) -> Iterator[NatMatrix]:
    """All symmetric N-matrices with the given row sums, row-major lex order.

    ``diagonal`` is ``"even"``, ``"zero"``, or ``"any"``.
    """
    m = len(row_sums)
    grid = [[0] * m for _ in range(m)]
    left = list(row_sums)

    def diag_values(cap: int) -> range:
        if diagonal == "zero":
            return range(0, 1)
        step = 2 if diagonal == "even" else 1
        return range(0, cap + 1, step)

    def fill_row(i: int, j: int) -> Iterator[NatMatrix]:
        if j == m:
            if left[i] == 0:
                yield from rec(i + 1)
            return
        if j < i:
            yield from fill_row(i, j + 1)
            return
        if j == i:
            choices = diag_values(left[i])
        else:
            choices = range(min(left[i], left[j]) + 1)
        for x in choices:
            grid[i][j] = grid[j][i] = x
            left[i] -= x
            if i != j:
                left[j] -= x
            yield from fill_row(i, j + 1)
            left[i] += x
            if i != j:
                left[j] += x
            grid[i][j] = grid[j][i] = 0

    def rec(i: int) -> Iterator[NatMatrix]:
        if i == m:
            yield NatMatrix.from_rows(grid)
            return
        yield from fill_row(i, i)

    if all(x >= 0 for x in row_sums):
        yield from rec(0)
