"""Arc diagrams and the basis-admissibility predicates of the five groups.

An arc diagram lives on vertices 1..m drawn left to right.  Arcs form a
multiset of unordered pairs {i, j} with i <= j (i == j is a self-loop,
contributing 2 to the degree of its vertex).  A diagram may carry
hyperedges: strictly increasing tuples of vertices, each contributing 1
to the degree of its members.  A (p,q)-bipartite diagram additionally
records p; vertices 1..p are "starred", p+1..p+q are not, every arc joins
the two sides, and loops are forbidden.

Admissibility for a group with parameter n:

* GL   -- bipartite, no hyperedges, no strict (n+1)-nesting;
* SL   -- as GL, plus order-n hyperedges on one side forming a chain under
          componentwise <=, whose maximal element respects the per-level
          nesting thresholds;
* O    -- no hyperedges, weak nonnesting number at most n;
* SO   -- as O, plus at most one order-n hyperedge whose l-th vertex sees
          fewer than l pairwise weakly-nonnesting arcs starting strictly to
          its left;
* Sp   -- no loops, no hyperedges, no strict (n+1)-nesting (dim V = 2n).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence

from .errors import MalformedDiagramError, SizeLimitError, UnsupportedGroupError
from .natmatrix import (
    NatMatrix,
    matrices_with_row_sums,
    symmetric_matrices_with_row_sums,
)

GROUP_TAGS = ("gl", "sl", "o", "so", "sp")

#: Per-entry bound accepted by ``enumerate_basis``.
DEFAULT_DEGREE_LIMIT = 8


@dataclass(frozen=True)
class GroupKind:
    """One of the five classical groups with its integer parameter.

    ``n`` is dim V except for Sp, where dim V = 2n.
    """

    tag: str
    n: int

    def __post_init__(self) -> None:
        if self.tag not in GROUP_TAGS:
            raise UnsupportedGroupError(f"unknown group tag {self.tag!r}")
        if self.n < 1:
            raise UnsupportedGroupError("group parameter n must be positive")

    @property
    def dim_v(self) -> int:
        return 2 * self.n if self.tag == "sp" else self.n

    @property
    def bipartite(self) -> bool:
        return self.tag in ("gl", "sl")


@dataclass(frozen=True)
class ArcDiagram:
    """Vertices 1..m with a multiset of arcs, optional hyperedges and split."""

    m: int
    arcs: tuple[tuple[int, int], ...] = ()
    hyperedges: tuple[tuple[int, ...], ...] = ()
    p: Optional[int] = None

    @staticmethod
    def build(
        m: int,
        arcs: Iterable[Sequence[int]] = (),
        hyperedges: Iterable[Sequence[int]] = (),
        p: Optional[int] = None,
    ) -> "ArcDiagram":
        norm_arcs = tuple(sorted(tuple(sorted((int(a), int(b)))) for a, b in arcs))
        norm_hyper = tuple(sorted(tuple(int(v) for v in h) for h in hyperedges))
        diagram = ArcDiagram(m, norm_arcs, norm_hyper, p)
        diagram.validate()
        return diagram

    def validate(self) -> None:
        if self.m < 0:
            raise MalformedDiagramError("vertex count must be nonnegative")
        for a, b in self.arcs:
            if not (1 <= a <= b <= self.m):
                raise MalformedDiagramError(f"arc ({a},{b}) outside 1..{self.m}")
        for h in self.hyperedges:
            if any(h[i] >= h[i + 1] for i in range(len(h) - 1)):
                raise MalformedDiagramError(f"hyperedge {h} is not strictly increasing")
            if h and not (1 <= h[0] and h[-1] <= self.m):
                raise MalformedDiagramError(f"hyperedge {h} outside 1..{self.m}")
        if self.p is not None:
            if not 0 <= self.p <= self.m:
                raise MalformedDiagramError("bipartite split outside the vertex range")
            for a, b in self.arcs:
                if a == b:
                    raise MalformedDiagramError("bipartite diagrams cannot carry loops")
                if not (a <= self.p < b):
                    raise MalformedDiagramError(
                        f"arc ({a},{b}) does not cross the bipartite split at {self.p}"
                    )

    @property
    def q(self) -> Optional[int]:
        return None if self.p is None else self.m - self.p

    def loops(self) -> list[int]:
        return [a for a, b in self.arcs if a == b]

    def is_one_regular(self) -> bool:
        degrees = degree_sequence(self)
        if self.p is not None:
            return all(d == 1 for part in degrees for d in part)
        return all(d == 1 for d in degrees)

    def sort_key(self):
        return (self.arcs, self.hyperedges)

    def to_json(self) -> dict:
        data: dict = {"m": self.m, "arcs": [list(a) for a in self.arcs]}
        if self.hyperedges:
            data["hyperedges"] = [list(h) for h in self.hyperedges]
        if self.p is not None:
            data["p"] = self.p
        return data

    @staticmethod
    def from_json(data: dict) -> "ArcDiagram":
        return ArcDiagram.build(
            data["m"],
            data.get("arcs", ()),
            data.get("hyperedges", ()),
            data.get("p"),
        )

    def to_dot(self) -> str:
        """A plain graphviz rendering; layout fidelity is not a contract."""
        lines = ["graph arcdiagram {", "  rankdir=LR;"]
        for v in range(1, self.m + 1):
            star = "*" if self.p is not None and v <= self.p else ""
            lines.append(f'  v{v} [label="{v}{star}", shape=circle];')
        for a, b in self.arcs:
            lines.append(f"  v{a} -- v{b};")
        for idx, h in enumerate(self.hyperedges):
            lines.append(f'  h{idx} [label="det", shape=diamond];')
            for v in h:
                lines.append(f"  h{idx} -- v{v} [style=dashed];")
        lines.append("}")
        return "\n".join(lines)


def degree_sequence(diagram: ArcDiagram):
    """Per-vertex degrees: loops count twice, hyperedge membership once.

    Returns a pair of tuples (starred side, unstarred side) for bipartite
    diagrams and a single tuple otherwise.
    """
    deg = [0] * diagram.m
    for a, b in diagram.arcs:
        deg[a - 1] += 1
        deg[b - 1] += 1
    for h in diagram.hyperedges:
        for v in h:
            deg[v - 1] += 1
    if diagram.p is None:
        return tuple(deg)
    return tuple(deg[: diagram.p]), tuple(deg[diagram.p :])


def _support(arcs: Iterable[tuple[int, int]]) -> list[tuple[int, int]]:
    return sorted(set(tuple(sorted(a)) for a in arcs))


def max_strict_nesting(arcs: Iterable[tuple[int, int]]) -> int:
    """Size of the largest set of arcs pairwise in strict nesting position.

    Arcs {a,b} and {c,d} (endpoints sorted) strictly nest iff a < c and
    d < b; shared endpoints never nest, so multiplicities are irrelevant.
    """
    support = _support(arcs)
    best = 0
    depth = [0] * len(support)
    for k, (a, b) in enumerate(support):
        deepest = 0
        for l in range(k):
            c, d = support[l]
            if c < a and b < d:
                deepest = max(deepest, depth[l])
        depth[k] = deepest + 1
        best = max(best, depth[k])
    return best


def weak_nonnesting_number(arcs: Iterable[tuple[int, int]]) -> int:
    """Largest number of arcs that are pairwise not weak nestings.

    Equivalently the longest sequence of arcs whose left endpoints and
    right endpoints are both strictly increasing.
    """
    support = _support(arcs)
    best = 0
    length = [0] * len(support)
    for k, (a, b) in enumerate(support):
        longest = 0
        for l in range(k):
            c, d = support[l]
            if c < a and d < b:
                longest = max(longest, length[l])
        length[k] = longest + 1
        best = max(best, length[k])
    return best


def _outward_depths(support: list[tuple[int, int]]) -> list[int]:
    """For each arc, the largest strict nesting chain having it innermost."""
    depth = [1] * len(support)
    order = sorted(range(len(support)), key=lambda k: (support[k][0], -support[k][1]))
    for pos, k in enumerate(order):
        a, b = support[k]
        for prev in order[:pos]:
            c, d = support[prev]
            if c < a and b < d:
                depth[k] = max(depth[k], depth[prev] + 1)
    return depth


def _inward_depths(support: list[tuple[int, int]]) -> list[int]:
    """For each arc, the largest strict nesting chain having it outermost."""
    depth = [1] * len(support)
    order = sorted(range(len(support)), key=lambda k: (-support[k][0], support[k][1]))
    for pos, k in enumerate(order):
        a, b = support[k]
        for prev in order[:pos]:
            c, d = support[prev]
            if a < c and d < b:
                depth[k] = max(depth[k], depth[prev] + 1)
    return depth


def hyperedge_thresholds(
    diagram: ArcDiagram, group: GroupKind, side: Optional[str] = None
):
    """Per-level upper bounds t_1..t_n for the vertices of a hyperedge.

    For SL (``side`` required), level l bounds the l-th vertex of the
    maximal hyperedge: on the starred side by the innermost starred
    endpoint of every strict l-nesting, on the unstarred side by the
    outermost unstarred endpoint (indices local to the side).  For SO,
    t_l is the rightmost position v such that the arcs starting strictly
    left of v contain no l pairwise weakly-nonnesting arcs.  Levels with
    no constraining nesting give ``math.inf``.
    """
    n = group.n
    if group.tag == "sl":
        if side not in ("starred", "unstarred"):
            raise UnsupportedGroupError("SL thresholds need side='starred'|'unstarred'")
        if diagram.p is None:
            raise MalformedDiagramError("SL thresholds need a bipartite diagram")
        support = _support(diagram.arcs)
        out: list[float] = []
        if side == "starred":
            depths = _outward_depths(support)
            for level in range(1, n + 1):
                candidates = [
                    support[k][0] for k in range(len(support)) if depths[k] >= level
                ]
                out.append(min(candidates) if candidates else math.inf)
        else:
            depths = _inward_depths(support)
            for level in range(1, n + 1):
                candidates = [
                    support[k][1] - diagram.p
                    for k in range(len(support))
                    if depths[k] >= level
                ]
                out.append(min(candidates) if candidates else math.inf)
        return tuple(out)
    if group.tag == "so":
        arcs = diagram.arcs
        prefix_wnn = [
            weak_nonnesting_number([arc for arc in arcs if arc[0] < v])
            for v in range(1, diagram.m + 2)
        ]
        out = []
        for level in range(1, n + 1):
            if prefix_wnn[diagram.m] < level:
                out.append(math.inf)
            else:
                out.append(max(v for v in range(1, diagram.m + 1) if prefix_wnn[v - 1] < level))
        return tuple(out)
    raise UnsupportedGroupError(f"no hyperedge thresholds for group {group.tag!r}")


def _is_chain(hyperedges: Sequence[tuple[int, ...]]) -> bool:
    ordered = sorted(hyperedges)
    for prev, nxt in zip(ordered, ordered[1:]):
        if any(a > b for a, b in zip(prev, nxt)):
            return False
    return True


def is_admissible(diagram: ArcDiagram, group: GroupKind) -> bool:
    """Whether the diagram is a basis element for the group.

    Structural mismatches (wrong bipartite flag, loops for Sp, hyperedges
    for GL/O/Sp) raise :class:`MalformedDiagramError`; everything else is a
    plain membership answer.
    """
    n = group.n
    if group.bipartite:
        if diagram.p is None:
            raise MalformedDiagramError(f"{group.tag} diagrams must be bipartite")
    else:
        if diagram.p is not None:
            raise MalformedDiagramError(f"{group.tag} diagrams must not be bipartite")
    if group.tag in ("gl", "o", "sp") and diagram.hyperedges:
        raise MalformedDiagramError(f"{group.tag} diagrams cannot carry hyperedges")
    if group.tag == "sp" and diagram.loops():
        raise MalformedDiagramError("Sp diagrams cannot carry loops")

    if group.tag in ("gl", "sl", "sp"):
        if max_strict_nesting(diagram.arcs) > n:
            return False
    else:
        if weak_nonnesting_number(diagram.arcs) > n:
            return False

    if group.tag == "sl" and diagram.hyperedges:
        if any(len(h) != n for h in diagram.hyperedges):
            return False
        starred = all(h[-1] <= diagram.p for h in diagram.hyperedges)
        unstarred = all(h[0] > diagram.p for h in diagram.hyperedges)
        if not (starred or unstarred):
            return False
        if not _is_chain(diagram.hyperedges):
            return False
        side = "starred" if starred else "unstarred"
        bounds = hyperedge_thresholds(diagram, group, side)
        maximal = max(diagram.hyperedges)
        if side == "unstarred":
            maximal = tuple(v - diagram.p for v in maximal)
        if any(v > t for v, t in zip(maximal, bounds)):
            return False
    if group.tag == "so" and diagram.hyperedges:
        if len(diagram.hyperedges) > 1:
            return False
        hyper = diagram.hyperedges[0]
        if len(hyper) != n:
            return False
        bounds = hyperedge_thresholds(diagram, group)
        if any(v > t for v, t in zip(hyper, bounds)):
            return False
    return True


def diagram_to_matrix(diagram: ArcDiagram) -> NatMatrix:
    """Biadjacency (bipartite) or adjacency (symmetric, loop = 2 on the
    diagonal) matrix of the arcs.  Hyperedges have no matrix encoding."""
    if diagram.hyperedges:
        raise MalformedDiagramError("hyperedges cannot be encoded in a matrix")
    if diagram.p is not None:
        grid = [[0] * (diagram.m - diagram.p) for _ in range(diagram.p)]
        for a, b in diagram.arcs:
            grid[a - 1][b - diagram.p - 1] += 1
        return NatMatrix.from_rows(grid)
    grid = [[0] * diagram.m for _ in range(diagram.m)]
    for a, b in diagram.arcs:
        if a == b:
            grid[a - 1][a - 1] += 2
        else:
            grid[a - 1][b - 1] += 1
            grid[b - 1][a - 1] += 1
    return NatMatrix.from_rows(grid)


def matrix_to_diagram(matrix: NatMatrix, bipartite: bool = False) -> ArcDiagram:
    """Inverse of :func:`diagram_to_matrix` on its admissible inputs."""
    if bipartite:
        p, q = matrix.rows, matrix.cols
        arcs = []
        for i in range(p):
            for j in range(q):
                arcs.extend([(i + 1, p + j + 1)] * matrix[i, j])
        return ArcDiagram.build(p + q, arcs, p=p)
    if not matrix.is_symmetric():
        raise MalformedDiagramError("adjacency input must be symmetric")
    if not matrix.has_even_diagonal():
        raise MalformedDiagramError("adjacency input must have an even diagonal")
    m = matrix.rows
    arcs = []
    for i in range(m):
        arcs.extend([(i + 1, i + 1)] * (matrix[i, i] // 2))
        for j in range(i + 1, m):
            arcs.extend([(i + 1, j + 1)] * matrix[i, j])
    return ArcDiagram.build(m, arcs)


def _chains_with_incidence(
    vertices: list[int], order: int, count: int, incidence: dict[int, int]
) -> Iterator[list[tuple[int, ...]]]:
    """All chains S_1 <= ... <= S_count of order-``order`` subsets with the
    given vertex multiplicities."""

    def rec(
        remaining: int, minimum: Optional[tuple[int, ...]], left: dict[int, int]
    ) -> Iterator[list[tuple[int, ...]]]:
        if remaining == 0:
            if all(v == 0 for v in left.values()):
                yield []
            return
        available = [v for v in vertices if left.get(v, 0) > 0]
        for subset in _increasing_subsets(available, order):
            if minimum is not None and any(a < b for a, b in zip(subset, minimum)):
                continue
            for v in subset:
                left[v] -= 1
            if all(0 <= c <= remaining - 1 for c in left.values()):
                for rest in rec(remaining - 1, subset, left):
                    yield [subset] + rest
            for v in subset:
                left[v] += 1

    yield from rec(count, None, dict(incidence))


def _increasing_subsets(pool: list[int], size: int) -> Iterator[tuple[int, ...]]:
    from itertools import combinations

    yield from combinations(sorted(pool), size)


def enumerate_basis(group: GroupKind, degree, limit: int = DEFAULT_DEGREE_LIMIT):
    """All admissible diagrams with the given degree sequence.

    ``degree`` is a pair of vectors for GL/SL and a single vector otherwise.
    Output order is deterministic: sorted by the arc matrix in row-major
    lexicographic order, then by hyperedges.
    """
    if group.bipartite:
        d, e = degree
        d, e = tuple(int(x) for x in d), tuple(int(x) for x in e)
        if any(x > limit for x in d + e):
            raise SizeLimitError(f"degree entries exceed the limit {limit}")
        return _enumerate_bipartite(group, d, e)
    d = tuple(int(x) for x in degree)
    if any(x > limit for x in d):
        raise SizeLimitError(f"degree entries exceed the limit {limit}")
    return _enumerate_symmetric(group, d)


def _enumerate_bipartite(group: GroupKind, d: tuple[int, ...], e: tuple[int, ...]):
    p, q = len(d), len(e)
    n = group.n
    out = []
    if group.tag == "gl" or sum(d) == sum(e):
        if sum(d) == sum(e):
            for matrix in matrices_with_row_sums(d, e):
                diagram = matrix_to_diagram(matrix, bipartite=True)
                diagram = ArcDiagram(p + q, diagram.arcs, (), p)
                if is_admissible(diagram, group):
                    out.append(diagram)
        return sorted(out, key=ArcDiagram.sort_key)
    # SL with hyperedges on the heavier side
    heavier_starred = sum(d) > sum(e)
    heavy, light = (d, e) if heavier_starred else (e, d)
    excess = sum(heavy) - sum(light)
    if excess % n != 0:
        return []
    count = excess // n
    side_len = len(heavy)
    for incidence in _bounded_vectors(heavy, count, count * n):
        arc_heavy = tuple(h - inc for h, inc in zip(heavy, incidence))
        row_sums, col_sums = (
            (arc_heavy, light) if heavier_starred else (light, arc_heavy)
        )
        matrices = list(matrices_with_row_sums(row_sums, col_sums))
        if not matrices:
            continue
        inc_map = {v + 1: incidence[v] for v in range(side_len)}
        for chain in _chains_with_incidence(
            [v + 1 for v in range(side_len)], n, count, inc_map
        ):
            hyper = tuple(
                sorted(h if heavier_starred else tuple(v + p for v in h) for h in chain)
            )
            for matrix in matrices:
                arcs = matrix_to_diagram(matrix, bipartite=True).arcs
                diagram = ArcDiagram(p + q, arcs, hyper, p)
                if is_admissible(diagram, group):
                    out.append(diagram)
    dedup = sorted(set(out), key=ArcDiagram.sort_key)
    return dedup


def _bounded_vectors(
    caps: tuple[int, ...], per_entry_cap: int, total: int
) -> Iterator[tuple[int, ...]]:
    def rec(i: int, left: int) -> Iterator[tuple[int, ...]]:
        if i == len(caps):
            if left == 0:
                yield ()
            return
        top = min(caps[i], per_entry_cap, left)
        for x in range(top + 1):
            for rest in rec(i + 1, left - x):
                yield (x,) + rest

    yield from rec(0, total)


def _enumerate_symmetric(group: GroupKind, d: tuple[int, ...]):
    m = len(d)
    n = group.n
    out = []
    hyper_choices: list[tuple[tuple[int, ...], ...]] = [()]
    if group.tag == "so":
        from itertools import combinations

        eligible = [v for v in range(1, m + 1) if d[v - 1] >= 1]
        hyper_choices += [(h,) for h in combinations(eligible, n)]
    diagonal = "zero" if group.tag == "sp" else "even"
    for hyper in hyper_choices:
        used = [0] * m
        for h in hyper:
            for v in h:
                used[v - 1] += 1
        arc_deg = tuple(x - u for x, u in zip(d, used))
        if any(x < 0 for x in arc_deg):
            continue
        for matrix in symmetric_matrices_with_row_sums(arc_deg, diagonal=diagonal):
            arcs = matrix_to_diagram(matrix).arcs
            diagram = ArcDiagram(m, arcs, hyper, None)
            if is_admissible(diagram, group):
                out.append(diagram)
    return sorted(out, key=ArcDiagram.sort_key)
