"""The three RSK-type correspondences and the support statistics they preserve.

``rsk_a`` is Knuth's correspondence between N-matrices and pairs of
semistandard tableaux of a common shape (recording tableau from row
indices, insertion tableau from column indices).  ``rsk_b`` is the dual,
column-insertion correspondence restricted to the diagonal, which pairs
even-rowed tableaux with symmetric even-diagonal matrices.  ``rsk_c`` is
the diagonal restriction of ``rsk_a`` to even-columned tableaux, landing
in symmetric zero-diagonal matrices.

The module-level contracts (weight = row sums, shape length = support
width under the appropriate partial order, exact invertibility) are what
the test suite pins down; the insertion internals are standard.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ShapeError
from .natmatrix import NatMatrix
from .partitions import Tableau


@dataclass(frozen=True)
class Bitableau:
    """A (recording, insertion) pair of SSYT with a common shape."""

    recording: Tableau
    insertion: Tableau

    def __post_init__(self) -> None:
        if self.recording.shape != self.insertion.shape:
            raise ShapeError(
                f"bitableau shapes differ: {self.recording.shape} vs {self.insertion.shape}"
            )


# -- flat insertion primitives ------------------------------------------------
#
# Tableaux are handled as lists of row lists during insertion.  The same
# primitives drive the public API and the exhaustive verification suite.


def row_insert(rows: list[list[int]], x: int) -> tuple[int, int]:
    """Schensted row insertion; returns the (row, col) of the new box."""
    r = 0
    while r < len(rows):
        row = rows[r]
        # bump the leftmost entry strictly greater than x
        k = len(row)
        lo = 0
        while lo < k and row[lo] <= x:
            lo += 1
        if lo == k:
            row.append(x)
            return r, k
        row[lo], x = x, row[lo]
        r += 1
    rows.append([x])
    return r, 0


def row_uninsert(rows: list[list[int]], r: int) -> int:
    """Reverse row insertion starting at the last box of row ``r``."""
    x = rows[r].pop()
    if not rows[r]:
        rows.pop()
    for i in range(r - 1, -1, -1):
        row = rows[i]
        k = len(row) - 1
        while k >= 0 and row[k] >= x:
            k -= 1
        if k < 0:
            raise ShapeError("reverse insertion fell off the tableau")
        row[k], x = x, row[k]
    return x


def col_insert(cols: list[list[int]], x: int) -> tuple[int, int]:
    """Column insertion (bump the topmost entry >= x); returns the new box."""
    c = 0
    while c < len(cols):
        col = cols[c]
        k = len(col)
        lo = 0
        while lo < k and col[lo] < x:
            lo += 1
        if lo == k:
            col.append(x)
            return k, c
        col[lo], x = x, col[lo]
        c += 1
    cols.append([x])
    return 0, c


def col_uninsert(cols: list[list[int]], c: int) -> int:
    """Reverse column insertion starting at the bottom box of column ``c``."""
    x = cols[c].pop()
    if not cols[c]:
        cols.pop()
    for i in range(c - 1, -1, -1):
        col = cols[i]
        k = len(col) - 1
        while k >= 0 and col[k] > x:
            k -= 1
        if k < 0:
            raise ShapeError("reverse column insertion fell off the tableau")
        col[k], x = x, col[k]
    return x


def _rows_to_tableau(rows: list[list[int]]) -> Tableau:
    return Tableau.from_rows(rows)


def _cols_to_rows(cols: list[list[int]]) -> list[list[int]]:
    if not cols:
        return []
    out = [[] for _ in range(len(cols[0]))]
    for col in cols:
        for i, x in enumerate(col):
            out[i].append(x)
    return out


def _rows_to_cols(rows: list[list[int]]) -> list[list[int]]:
    if not rows:
        return []
    out = [[] for _ in range(len(rows[0]))]
    for row in rows:
        for j, x in enumerate(row):
            out[j].append(x)
    return out


# -- RSK_A ---------------------------------------------------------------------


def rsk_a(matrix: NatMatrix) -> Bitableau:
    """Knuth's correspondence: N-matrix -> (recording, insertion) pair.

    Row sums of the matrix give the weight of the recording tableau and
    column sums the weight of the insertion tableau.
    """
    p_rows: list[list[int]] = []
    q_rows: list[list[int]] = []
    for i, row in enumerate(matrix.entries, start=1):
        for j, mult in enumerate(row, start=1):
            for _ in range(mult):
                r, c = row_insert(p_rows, j)
                if r == len(q_rows):
                    q_rows.append([])
                q_rows[r].append(i)
    return Bitableau(_rows_to_tableau(q_rows), _rows_to_tableau(p_rows))


def rsk_a_inv(pair: Bitableau, rows: int | None = None, cols: int | None = None) -> NatMatrix:
    """Inverse of ``rsk_a``; optional dimensions pad the resulting matrix."""
    recording, insertion = pair.recording, pair.insertion
    if not (recording.is_ssyt() and insertion.is_ssyt()):
        raise ShapeError("inverse input must be a pair of SSYT")
    p_rows = [list(row) for row in insertion.rows]
    q_rows = [list(row) for row in recording.rows]
    pairs: list[tuple[int, int]] = []
    while q_rows:
        i = max(x for row in q_rows for x in row)
        boxes = [r for r, row in enumerate(q_rows) if row and row[-1] == i]
        # boxes of one recording entry form a horizontal strip; peel right to left
        r = min(boxes)
        q_rows[r].pop()
        if not q_rows[r]:
            q_rows.pop()
        j = row_uninsert(p_rows, r)
        pairs.append((i, j))
    nrows = rows if rows is not None else max((i for i, _ in pairs), default=0)
    ncols = cols if cols is not None else max((j for _, j in pairs), default=0)
    grid = [[0] * ncols for _ in range(nrows)]
    for i, j in pairs:
        grid[i - 1][j - 1] += 1
    return NatMatrix.from_rows(grid)


# -- Burge's dual correspondence (RSK_B) ----------------------------------------


def burge_insert(matrix: NatMatrix) -> Bitableau:
    """Column-insertion analogue of ``rsk_a``; pairs (i, j) are processed with
    i ascending and j descending, so the shape length is the largest set of
    support points increasing in both coordinates."""
    p_cols: list[list[int]] = []
    q_rows: list[list[int]] = []
    for i, row in enumerate(matrix.entries, start=1):
        for j in range(len(row), 0, -1):
            for _ in range(row[j - 1]):
                r, c = col_insert(p_cols, j)
                if r == len(q_rows):
                    q_rows.append([])
                q_rows[r].append(i)
    return Bitableau(_rows_to_tableau(q_rows), _rows_to_tableau(_cols_to_rows(p_cols)))


def burge_uninsert(pair: Bitableau, size: int | None = None) -> NatMatrix:
    """Inverse of ``burge_insert``."""
    recording, insertion = pair.recording, pair.insertion
    if not (recording.is_ssyt() and insertion.is_ssyt()):
        raise ShapeError("inverse input must be a pair of SSYT")
    p_cols = _rows_to_cols([list(row) for row in insertion.rows])
    q_rows = [list(row) for row in recording.rows]
    pairs: list[tuple[int, int]] = []
    while q_rows:
        i = max(x for row in q_rows for x in row)
        # boxes of one recording entry were added left to right; peel right to left
        best = None
        for r, row in enumerate(q_rows):
            if row and row[-1] == i:
                c = len(row) - 1
                if best is None or c > best[1]:
                    best = (r, c)
        r, c = best  # type: ignore[misc]
        q_rows[r].pop()
        if not q_rows[r]:
            q_rows.pop()
        j = col_uninsert(p_cols, c)
        pairs.append((i, j))
    n = size if size is not None else max((max(i, j) for i, j in pairs), default=0)
    grid = [[0] * n for _ in range(n)]
    for i, j in pairs:
        grid[i - 1][j - 1] += 1
    return NatMatrix.from_rows(grid)


def rsk_b(tableau: Tableau, size: int | None = None) -> NatMatrix:
    """Even-rowed SSYT -> symmetric N-matrix with even diagonal."""
    if not tableau.is_ssyt():
        raise ShapeError("rsk_b input must be an SSYT")
    if any(p % 2 for p in tableau.shape):
        raise ShapeError(f"rsk_b requires even row lengths, got shape {tableau.shape}")
    out = burge_uninsert(Bitableau(tableau, tableau), size=size)
    return out


def rsk_b_inv(matrix: NatMatrix) -> Tableau:
    """Symmetric even-diagonal N-matrix -> even-rowed SSYT."""
    if not matrix.is_symmetric():
        raise ShapeError("rsk_b_inv input must be symmetric")
    if not matrix.has_even_diagonal():
        raise ShapeError("rsk_b_inv input must have an even diagonal")
    return burge_insert(matrix).recording


# -- diagonal RSK (RSK_C) --------------------------------------------------------


def rsk_c(tableau: Tableau, size: int | None = None) -> NatMatrix:
    """Even-columned SSYT -> symmetric N-matrix with zero diagonal."""
    if not tableau.is_ssyt():
        raise ShapeError("rsk_c input must be an SSYT")
    lam = tableau.shape
    if any(c % 2 for c in _column_lengths(lam)):
        raise ShapeError(f"rsk_c requires even column lengths, got shape {lam}")
    out = rsk_a_inv(Bitableau(tableau, tableau))
    n = size if size is not None else max(out.rows, out.cols)
    grid = [[0] * n for _ in range(n)]
    for (i, j) in out.support():
        grid[i][j] = out[i, j]
    return NatMatrix.from_rows(grid)


def rsk_c_inv(matrix: NatMatrix) -> Tableau:
    """Symmetric zero-diagonal N-matrix -> even-columned SSYT."""
    if not matrix.is_symmetric():
        raise ShapeError("rsk_c_inv input must be symmetric")
    if not matrix.has_zero_diagonal():
        raise ShapeError("rsk_c_inv input must have a zero diagonal (zero trace)")
    return rsk_a(matrix).recording


def rsk_a_diagonal(tableau: Tableau, size: int | None = None) -> NatMatrix:
    """Diagonal RSK_A on an arbitrary SSYT (trace counts its odd columns)."""
    if not tableau.is_ssyt():
        raise ShapeError("input must be an SSYT")
    out = rsk_a_inv(Bitableau(tableau, tableau))
    n = size if size is not None else max(out.rows, out.cols)
    grid = [[0] * n for _ in range(n)]
    for (i, j) in out.support():
        grid[i][j] = out[i, j]
    return NatMatrix.from_rows(grid)


def _column_lengths(lam: tuple[int, ...]) -> tuple[int, ...]:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


# -- support statistics ----------------------------------------------------------


def support_width(matrix: NatMatrix, order: str = "product") -> int:
    """Largest antichain in the support of ``matrix``.

    Under the product order an antichain has strictly increasing row indices
    and strictly decreasing column indices; under the reversed order both
    coordinates strictly increase.
    """
    if order not in ("product", "reversed"):
        raise ValueError(f"unknown order {order!r}")
    points = matrix.support()
    points.sort()
    best = [0] * len(points)
    result = 0
    for k, (i, j) in enumerate(points):
        longest = 0
        for l in range(k):
            i2, j2 = points[l]
            if i2 < i and ((j2 > j) if order == "product" else (j2 < j)):
                longest = max(longest, best[l])
        best[k] = longest + 1
        result = max(result, best[k])
    return result
