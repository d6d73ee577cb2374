"""Dimension formulas for the invariant spaces, each with cross-checkable
alternative counting models (restricted permutations and involutions,
noncrossing matchings, oscillating tableaux, chamber walks)."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Iterator, Optional

from .diagrams import GroupKind
from .errors import ShapeError, SizeLimitError, UnsupportedGroupError
from .partitions import (
    Shape,
    add_rectangle,
    count_ssyt,
    count_syt,
    has_even_columns,
    has_even_rows,
    has_odd_rows,
    partitions,
)

#: Largest m accepted by the brute-force counting models.
BRUTE_FORCE_LIMIT = 10


@dataclass(frozen=True)
class InvariantQuery:
    """A tensor-invariant dimension question.

    O/SO/Sp queries carry the tensor order ``m``; GL/SL queries carry the
    bidegree ``(p, q)`` of vector and covector slots.
    """

    group: GroupKind
    m: Optional[int] = None
    p: Optional[int] = None
    q: Optional[int] = None

    def __post_init__(self) -> None:
        if self.group.bipartite:
            if self.m is not None and (self.p is not None or self.q is not None):
                raise ShapeError("give either m or (p, q), not both")
            if self.m is None and (self.p is None or self.q is None):
                raise ShapeError(f"{self.group.tag} queries need (p, q) or m")
        else:
            if self.m is None:
                raise ShapeError(f"{self.group.tag} queries need the tensor order m")

    def bidegree(self) -> tuple[int, int]:
        if self.m is not None:
            return self.m, self.m
        return self.p, self.q  # type: ignore[return-value]


def dim_invariants(query: InvariantQuery) -> int:
    """Dimension of the invariant subspace, by the tableau-sum formulas."""
    group = query.group
    n = group.n
    if group.tag == "gl":
        p, q = query.bidegree()
        if p != q:
            return 0
        return sum(count_syt(lam) ** 2 for lam in partitions(p, max_length=n))
    if group.tag == "sl":
        p, q = query.bidegree()
        diff = abs(p - q)
        if diff % n != 0:
            return 0
        d = diff // n
        total = 0
        for lam in partitions(min(p, q), max_length=n):
            total += count_syt(add_rectangle(lam, d, n)) * count_syt(lam)
        return total
    m = query.m
    if group.tag == "o":
        return sum(
            count_syt(lam) for lam in partitions(m, max_length=n) if has_even_rows(lam)
        )
    if group.tag == "sp":
        return sum(
            count_syt(lam)
            for lam in partitions(m, max_length=2 * n)
            if has_even_columns(lam)
        )
    # SO: even tableaux of length <= n plus odd tableaux of length exactly n
    total = sum(
        count_syt(lam) for lam in partitions(m, max_length=n) if has_even_rows(lam)
    )
    total += sum(
        count_syt(lam)
        for lam in partitions(m, max_length=n)
        if len(lam) == n and has_odd_rows(lam)
    )
    return total


def graded_dim(group: GroupKind, degree) -> int:
    """Number of weight-restricted (bi)tableaux: the graded dimension of the
    polynomial invariant ring in the given multidegree."""
    n = group.n
    if group.bipartite:
        d, e = degree
        d, e = tuple(int(x) for x in d), tuple(int(x) for x in e)
        sd, se = sum(d), sum(e)
        if group.tag == "gl":
            if sd != se:
                return 0
            return sum(
                count_ssyt(lam, d) * count_ssyt(lam, e)
                for lam in partitions(sd, max_length=n)
            )
        if (sd - se) % n != 0:
            return 0
        k = abs(sd - se) // n
        heavy, light = (d, e) if sd >= se else (e, d)
        total = 0
        for lam in partitions(min(sd, se), max_length=n):
            total += count_ssyt(add_rectangle(lam, k, n), heavy) * count_ssyt(lam, light)
        return total
    d = tuple(int(x) for x in degree)
    s = sum(d)
    if group.tag == "o":
        return sum(
            count_ssyt(lam, d) for lam in partitions(s, max_length=n) if has_even_rows(lam)
        )
    if group.tag == "sp":
        return sum(
            count_ssyt(lam, d)
            for lam in partitions(s, max_length=2 * n)
            if has_even_columns(lam)
        )
    total = sum(
        count_ssyt(lam, d) for lam in partitions(s, max_length=n) if has_even_rows(lam)
    )
    total += sum(
        count_ssyt(lam, d)
        for lam in partitions(s, max_length=n)
        if len(lam) == n and has_odd_rows(lam)
    )
    return total


# -- alternative counting models ------------------------------------------------


def _longest_monotone(word: tuple[int, ...], decreasing: bool) -> int:
    best = [0] * len(word)
    out = 0
    for i, x in enumerate(word):
        longest = 0
        for j in range(i):
            if (word[j] > x) if decreasing else (word[j] < x):
                longest = max(longest, best[j])
        best[i] = longest + 1
        out = max(out, best[i])
    return out


def _permutations(m: int) -> Iterator[tuple[int, ...]]:
    from itertools import permutations as iperm

    yield from iperm(range(1, m + 1))


def count_restricted_permutations(m: int, n: int) -> int:
    """Permutations of [m] whose decreasing subsequences have length <= n."""
    if m > BRUTE_FORCE_LIMIT:
        raise SizeLimitError(f"m={m} exceeds the brute-force limit {BRUTE_FORCE_LIMIT}")
    if m == 0:
        return 1
    return sum(1 for w in _permutations(m) if _longest_monotone(w, True) <= n)


def _involutions(m: int, fixed_allowed: bool) -> Iterator[tuple[int, ...]]:
    """Involution words on [m]; without fixed points these are the perfect
    matchings."""

    def rec(free: tuple[int, ...], word: dict[int, int]) -> Iterator[tuple[int, ...]]:
        if not free:
            yield tuple(word[i] for i in range(1, m + 1))
            return
        a = free[0]
        if fixed_allowed:
            word[a] = a
            yield from rec(free[1:], word)
            del word[a]
        for idx in range(1, len(free)):
            b = free[idx]
            word[a], word[b] = b, a
            yield from rec(free[1:idx] + free[idx + 1 :], word)
            del word[a], word[b]

    yield from rec(tuple(range(1, m + 1)), {})


def count_restricted_involutions(m: int, n: int, mode: str) -> int:
    """Involutions on [m] filtered by monotone-subsequence bounds.

    ``fpf-increasing``: fixed-point-free, increasing subsequences <= n.
    ``fpf-decreasing``: fixed-point-free, decreasing subsequences <= n.
    ``so-fixed-points``: increasing subsequences <= n and 0 or n fixed points.
    """
    if m > BRUTE_FORCE_LIMIT:
        raise SizeLimitError(f"m={m} exceeds the brute-force limit {BRUTE_FORCE_LIMIT}")
    if mode not in ("fpf-increasing", "fpf-decreasing", "so-fixed-points"):
        raise UnsupportedGroupError(f"unknown involution mode {mode!r}")
    if m == 0:
        return 1
    total = 0
    fixed_allowed = mode == "so-fixed-points"
    for word in _involutions(m, fixed_allowed):
        if mode == "fpf-decreasing":
            if _longest_monotone(word, True) <= n:
                total += 1
            continue
        if _longest_monotone(word, False) > n:
            continue
        if mode == "so-fixed-points":
            fixed = sum(1 for i, x in enumerate(word, start=1) if x == i)
            if fixed not in (0, n):
                continue
        total += 1
    return total


def _perfect_matchings(m: int) -> Iterator[tuple[tuple[int, int], ...]]:
    def rec(free: tuple[int, ...]) -> Iterator[tuple[tuple[int, int], ...]]:
        if not free:
            yield ()
            return
        a = free[0]
        for idx in range(1, len(free)):
            b = free[idx]
            for rest in rec(free[1:idx] + free[idx + 1 :]):
                yield ((a, b),) + rest

    yield from rec(tuple(range(1, m + 1)))


def _max_crossing(arcs: tuple[tuple[int, int], ...]) -> int:
    """Largest k with arcs a_1 < ... < a_k < b_1 < ... < b_k (a k-crossing)."""
    best = 0
    m = max((b for _, b in arcs), default=0)
    for t in range(1, m):
        straddle = sorted((a, b) for a, b in arcs if a <= t < b)
        length = [0] * len(straddle)
        for i, (a, b) in enumerate(straddle):
            longest = 0
            for j in range(i):
                if straddle[j][0] < a and straddle[j][1] < b:
                    longest = max(longest, length[j])
            length[i] = longest + 1
            best = max(best, length[i])
    return best


def count_noncrossing_matchings(m: int, k: int) -> int:
    """Perfect matchings on [m] with no k pairwise-crossing arcs."""
    if m > 2 * BRUTE_FORCE_LIMIT:
        raise SizeLimitError(f"m={m} exceeds the brute-force limit")
    if m % 2 != 0:
        return 0
    if m == 0:
        return 1
    return sum(1 for arcs in _perfect_matchings(m) if _max_crossing(arcs) < k)


def count_oscillating_tableaux(m: int, n: int) -> int:
    """Length-m sequences of partitions from the empty shape to itself,
    consecutive shapes differing by one box, every shape with at most n
    columns."""
    counts: dict[Shape, int] = {(): 1}
    for step in range(m):
        nxt: dict[Shape, int] = {}
        budget = min(step + 1, m - step - 1)
        for lam, ways in counts.items():
            for mu in _adjacent_shapes(lam, n):
                if sum(mu) <= budget:
                    nxt[mu] = nxt.get(mu, 0) + ways
        counts = nxt
    return counts.get((), 0)


@lru_cache(maxsize=None)
def _adjacent_shapes(lam: Shape, max_part: int) -> tuple[Shape, ...]:
    """Shapes one box away from ``lam``, keeping every part <= max_part."""
    out = []
    for i in range(len(lam)):
        if lam[i] < max_part and (i == 0 or lam[i - 1] > lam[i]):
            out.append(lam[:i] + (lam[i] + 1,) + lam[i + 1 :])
    if max_part >= 1:
        out.append(lam + (1,))
    for i in range(len(lam)):
        if lam[i] > (lam[i + 1] if i + 1 < len(lam) else 0):
            smaller = lam[:i] + (lam[i] - 1,) + lam[i + 1 :]
            out.append(tuple(p for p in smaller if p))
    return tuple(dict.fromkeys(out))


def count_lattice_walks(m: int, group: GroupKind) -> int:
    """Closed m-step walks with steps +-e_i inside the group's chamber.

    Sp(n): the region {x in N^n : x_1 >= ... >= x_n}.
    SO(2r): the region {x in Z^r : x_1 >= ... >= x_r, x_{r-1} >= -x_r}.
    """
    if group.tag == "sp":
        n = group.n

        def ok(x: tuple[int, ...]) -> bool:
            return all(x[i] >= x[i + 1] for i in range(n - 1)) and x[-1] >= 0

    elif group.tag == "so":
        if group.n % 2 != 0:
            raise UnsupportedGroupError("the SO walk model needs even n = 2r")
        n = group.n // 2

        def ok(x: tuple[int, ...]) -> bool:
            if any(x[i] < x[i + 1] for i in range(n - 1)):
                return False
            if n >= 2 and x[n - 2] < -x[n - 1]:
                return False
            return True

    else:
        raise UnsupportedGroupError(f"no walk model for group {group.tag!r}")

    counts: dict[tuple[int, ...], int] = {(0,) * n: 1}
    for _ in range(m):
        nxt: dict[tuple[int, ...], int] = {}
        for x, ways in counts.items():
            for i in range(n):
                for delta in (1, -1):
                    y = x[:i] + (x[i] + delta,) + x[i + 1 :]
                    if ok(y):
                        nxt[y] = nxt.get(y, 0) + ways
        counts = nxt
    return counts.get((0,) * n, 0)


def double_factorial_odd(m: int) -> int:
    """(m-1)!! for even m, the count of perfect matchings on [m]."""
    out = 1
    for k in range(1, m, 2):
        out *= k
    return out


def stable_dim(group: GroupKind | str, m: int, n: Optional[int] = None) -> int:
    """Dimension in the stable range, where the length cut is vacuous.

    GL: m!.  O and Sp: (m-1)!! for even m, 0 otherwise.  SL with ``n``:
    the pure-power case dim (V^(x)m)^SL = #SYT of the n x (m/n) rectangle
    (0 unless n divides m); without ``n`` the balanced p = q value m!.
    """
    tag = group.tag if isinstance(group, GroupKind) else group
    if tag == "gl":
        return factorial(m)
    if tag in ("o", "sp", "so"):
        return double_factorial_odd(m) if m % 2 == 0 else 0
    if tag == "sl":
        if n is None:
            return factorial(m)
        if m % n != 0:
            return 0
        return count_syt(tuple([m // n] * n))
    raise UnsupportedGroupError(f"unknown group {tag!r}")
