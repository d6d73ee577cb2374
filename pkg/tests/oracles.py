"""Brute-force reference implementations used to pin expected values.

Everything here is deliberately naive (permutation fillings, subset
checks, matching sums) and shares no code with the library paths it is
used to validate.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations, product


def brute_syt(shape: tuple[int, ...]) -> list[tuple[tuple[int, ...], ...]]:
    """All standard fillings, by trying every permutation of the cells."""
    size = sum(shape)
    cells = [(i, j) for i, p in enumerate(shape) for j in range(p)]
    out = []
    for perm in permutations(range(1, size + 1)):
        grid = {}
        for cell, value in zip(cells, perm):
            grid[cell] = value
        ok = True
        for (i, j), value in grid.items():
            if j > 0 and grid[(i, j - 1)] > value:
                ok = False
                break
            if i > 0 and (i - 1, j) in grid and grid[(i - 1, j)] >= value:
                ok = False
                break
        if ok:
            out.append(tuple(tuple(grid[(i, j)] for j in range(p)) for i, p in enumerate(shape)))
    return out


def brute_ssyt(shape: tuple[int, ...], max_entry: int) -> list[tuple[tuple[int, ...], ...]]:
    """All semistandard fillings, by trying every assignment of values."""
    cells = [(i, j) for i, p in enumerate(shape) for j in range(p)]
    out = []
    for values in product(range(1, max_entry + 1), repeat=len(cells)):
        grid = dict(zip(cells, values))
        ok = True
        for (i, j), value in grid.items():
            if j > 0 and grid[(i, j - 1)] > value:
                ok = False
                break
            if i > 0 and (i - 1, j) in grid and grid[(i - 1, j)] >= value:
                ok = False
                break
        if ok:
            out.append(tuple(tuple(grid[(i, j)] for j in range(p)) for i, p in enumerate(shape)))
    return out


def is_strict_nesting_pair(x: tuple[int, int], y: tuple[int, int]) -> bool:
    (a, b), (c, d) = sorted(x), sorted(y)
    return (a < c and d < b) or (c < a and b < d)


def is_weak_nesting_pair(x: tuple[int, int], y: tuple[int, int]) -> bool:
    (a, b), (c, d) = sorted(x), sorted(y)
    return (a <= c and d <= b) or (c <= a and b <= d)


def brute_max_strict_nesting(arcs) -> int:
    arcs = [tuple(sorted(a)) for a in arcs]
    best = 0
    for size in range(1, len(arcs) + 1):
        for subset in combinations(range(len(arcs)), size):
            if all(
                is_strict_nesting_pair(arcs[i], arcs[j])
                for i, j in combinations(subset, 2)
            ):
                best = max(best, size)
    return best


def brute_weak_nonnesting_number(arcs) -> int:
    arcs = [tuple(sorted(a)) for a in arcs]
    best = 0
    for size in range(1, len(arcs) + 1):
        for subset in combinations(range(len(arcs)), size):
            if not any(
                is_weak_nesting_pair(arcs[i], arcs[j])
                for i, j in combinations(subset, 2)
            ):
                best = max(best, size)
    return best


def brute_so_hyperedge_ok(arcs, hyperedge) -> bool:
    """The per-level rule: fewer than l pairwise weakly-nonnesting arcs may
    start strictly left of the l-th hyperedge vertex."""
    for level, vertex in enumerate(hyperedge, start=1):
        before = [a for a in arcs if min(a) < vertex]
        if brute_weak_nonnesting_number(before) >= level:
            return False
    return True


def brute_longest_monotone(word, decreasing: bool) -> int:
    best = 0
    for size in range(1, len(word) + 1):
        for subset in combinations(range(len(word)), size):
            vals = [word[i] for i in subset]
            pairs = zip(vals, vals[1:])
            if all((a > b) if decreasing else (a < b) for a, b in pairs):
                best = max(best, size)
    return best


def brute_pfaffian(matrix) -> Fraction:
    """Sum over perfect matchings with crossing signs."""
    size = len(matrix)
    if size % 2:
        raise ValueError("odd order")

    def matchings(vertices):
        if not vertices:
            yield ()
            return
        first = vertices[0]
        for k in range(1, len(vertices)):
            rest = vertices[1:k] + vertices[k + 1 :]
            for sub in matchings(rest):
                yield ((first, vertices[k]),) + sub

    total = Fraction(0)
    for matching in matchings(tuple(range(size))):
        crossings = sum(
            1
            for (a, b), (c, d) in combinations(matching, 2)
            if a < c < b < d or c < a < d < b
        )
        term = Fraction(1) if crossings % 2 == 0 else Fraction(-1)
        for a, b in matching:
            term *= matrix[a][b]
        total += term
    return total


def brute_det(matrix) -> Fraction:
    size = len(matrix)
    total = Fraction(0)
    for perm in permutations(range(size)):
        sign = 1
        seen = [False] * size
        for start in range(size):
            if seen[start]:
                continue
            length = 0
            k = start
            while not seen[k]:
                seen[k] = True
                k = perm[k]
                length += 1
            if length % 2 == 0:
                sign = -sign
        term = Fraction(sign)
        for i in range(size):
            term *= matrix[i][perm[i]]
        total += term
    return total
