"""Exact-rational realization of diagrams and tableaux as invariant
functions, plus invariance witnesses, linear-independence certificates,
and an independent Lie-algebra dimension oracle.

Conventions.  A GL/SL diagram on p starred and q unstarred vertices is a
polynomial function of p covectors and q vectors: an arc {i*, j} is the
contraction phi_i(v_j), a starred hyperedge is det(phi_{i_1},...,phi_{i_n}),
an unstarred one det(v_{j_1},...,v_{j_n}).  O/SO/Sp diagrams are functions
of m vectors, arcs contracting through the bilinear form.  Group elements
act by v -> g v and phi -> phi o g^{-1}, so contractions are manifestly
preserved and determinant factors scale by det(g)^{+-1}.

All arithmetic is exact over Q; invariance is equality, not tolerance.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Callable, Optional, Sequence, Union

from . import linalg
from .diagrams import ArcDiagram, GroupKind, degree_sequence, is_admissible
from .errors import ShapeError, SizeLimitError, UnsupportedGroupError
from .partitions import Tableau, has_even_columns, has_even_rows, has_odd_rows
from .rsk import Bitableau

Vector = tuple[Fraction, ...]
Matrix = list[list[Fraction]]

ORACLE_CAP_ENV = "CLASSINV_ORACLE_CAP"
DEFAULT_ORACLE_CAP = 4096


def _as_rng(seed: Union[int, random.Random]) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def _rational(rng: random.Random) -> Fraction:
    # small heights keep the exact arithmetic fast
    return Fraction(rng.randint(-7, 7), rng.randint(1, 7))


@dataclass(frozen=True)
class FormSpec:
    """The bilinear form preserved by the group: none (GL/SL), a symmetric
    Gram matrix (O/SO), or a skew one (Sp)."""

    kind: str
    gram: tuple[tuple[Fraction, ...], ...] = ()

    def __post_init__(self) -> None:
        if self.kind not in ("none", "symmetric", "skew"):
            raise UnsupportedGroupError(f"unknown form kind {self.kind!r}")
        if self.kind == "none":
            return
        g = self.gram
        n = len(g)
        if any(len(row) != n for row in g):
            raise ShapeError("Gram matrix must be square")
        for i in range(n):
            for j in range(n):
                if self.kind == "symmetric" and g[i][j] != g[j][i]:
                    raise ShapeError("symmetric form needs a symmetric Gram matrix")
                if self.kind == "skew" and g[i][j] != -g[j][i]:
                    raise ShapeError("skew form needs a skew-symmetric Gram matrix")
        if linalg.det([list(row) for row in g]) == 0:
            raise ShapeError("the Gram matrix must be nondegenerate")

    @property
    def dim(self) -> int:
        return len(self.gram)

    @staticmethod
    def none() -> "FormSpec":
        return FormSpec("none")

    @staticmethod
    def symmetric_identity(n: int) -> "FormSpec":
        gram = tuple(
            tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)
        )
        return FormSpec("symmetric", gram)

    @staticmethod
    def skew_standard(n: int) -> "FormSpec":
        """The 2n x 2n block form [[0, I], [-I, 0]]."""
        size = 2 * n
        rows = []
        for i in range(size):
            row = [Fraction(0)] * size
            if i < n:
                row[n + i] = Fraction(1)
            else:
                row[i - n] = Fraction(-1)
            rows.append(tuple(row))
        return FormSpec("skew", tuple(rows))

    @staticmethod
    def for_group(group: GroupKind) -> "FormSpec":
        if group.tag in ("gl", "sl"):
            return FormSpec.none()
        if group.tag in ("o", "so"):
            return FormSpec.symmetric_identity(group.n)
        return FormSpec.skew_standard(group.n)

    def pairing(self, u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
        total = Fraction(0)
        for i, ui in enumerate(u):
            if ui:
                row = self.gram[i]
                for j, vj in enumerate(v):
                    if vj:
                        total += ui * row[j] * vj
        return total


@dataclass(frozen=True)
class ArgumentTuple:
    """Evaluation points: q (or m) vectors and, for GL/SL, p covectors."""

    vectors: tuple[Vector, ...] = ()
    covectors: tuple[Vector, ...] = ()

    @staticmethod
    def random(
        dim: int, n_vectors: int, n_covectors: int, rng: Union[int, random.Random]
    ) -> "ArgumentTuple":
        rng = _as_rng(rng)
        vecs = tuple(
            tuple(_rational(rng) for _ in range(dim)) for _ in range(n_vectors)
        )
        covs = tuple(
            tuple(_rational(rng) for _ in range(dim)) for _ in range(n_covectors)
        )
        return ArgumentTuple(vecs, covs)

    def transformed(self, g: Matrix) -> "ArgumentTuple":
        """Apply v -> g v to vectors and phi -> phi o g^{-1} to covectors."""
        g_inv = linalg.inverse(g)
        vecs = tuple(tuple(linalg.mat_vec(g, list(v))) for v in self.vectors)
        covs = tuple(tuple(linalg.vec_mat(list(c), g_inv)) for c in self.covectors)
        return ArgumentTuple(vecs, covs)

    def scaled(self, index: int, c: Fraction, covector: bool = False) -> "ArgumentTuple":
        if covector:
            covs = list(self.covectors)
            covs[index] = tuple(c * x for x in covs[index])
            return ArgumentTuple(self.vectors, tuple(covs))
        vecs = list(self.vectors)
        vecs[index] = tuple(c * x for x in vecs[index])
        return ArgumentTuple(tuple(vecs), self.covectors)


def pfaffian(matrix: Sequence[Sequence[Fraction]]) -> Fraction:
    """Pfaffian of a skew-symmetric matrix of even order (pf^2 = det)."""
    size = len(matrix)
    if size % 2 != 0:
        raise ShapeError("the Pfaffian needs an even-order matrix")
    for i in range(size):
        if len(matrix[i]) != size:
            raise ShapeError("the Pfaffian needs a square matrix")
        for j in range(i, size):
            if matrix[i][j] != -matrix[j][i]:
                raise ShapeError("the Pfaffian needs a skew-symmetric matrix")

    def rec(rows: tuple[int, ...]) -> Fraction:
        if not rows:
            return Fraction(1)
        first = rows[0]
        rest = rows[1:]
        total = Fraction(0)
        for pos, j in enumerate(rest):
            entry = matrix[first][j]
            if entry:
                sign = -1 if pos % 2 else 1
                total += sign * entry * rec(rest[:pos] + rest[pos + 1 :])
        return total

    return rec(tuple(range(size)))


def _det_of_tuples(columns: Sequence[Sequence[Fraction]]) -> Fraction:
    return linalg.det([[col[i] for col in columns] for i in range(len(columns))])


def evaluate_diagram_functional(
    diagram: ArcDiagram,
    group: GroupKind,
    form: FormSpec,
    args: ArgumentTuple,
) -> Fraction:
    """Value of the 1-regular basis diagram at the given points: the product
    of its arc contractions and hyperedge determinants."""
    if not diagram.is_one_regular():
        raise ShapeError("diagram functionals are defined for 1-regular diagrams")
    if not is_admissible(diagram, group):
        raise ShapeError("diagram is not admissible for the group")
    n = group.n
    if group.bipartite:
        p = diagram.p
        if len(args.covectors) != p or len(args.vectors) != diagram.m - p:
            raise ShapeError("argument counts do not match the bipartite split")
        if any(len(v) != n for v in args.vectors + args.covectors):
            raise ShapeError(f"points must live in dimension {n}")
        value = Fraction(1)
        for a, b in diagram.arcs:
            phi = args.covectors[a - 1]
            vec = args.vectors[b - p - 1]
            value *= sum((phi[k] * vec[k] for k in range(n)), Fraction(0))
        for h in diagram.hyperedges:
            if h[-1] <= p:
                value *= _det_of_tuples([args.covectors[i - 1] for i in h])
            else:
                value *= _det_of_tuples([args.vectors[j - p - 1] for j in h])
        return value
    if len(args.vectors) != diagram.m:
        raise ShapeError("argument count does not match the diagram")
    dim = group.dim_v
    if any(len(v) != dim for v in args.vectors):
        raise ShapeError(f"points must live in dimension {dim}")
    value = Fraction(1)
    for a, b in diagram.arcs:
        value *= form.pairing(args.vectors[a - 1], args.vectors[b - 1])
    for h in diagram.hyperedges:
        value *= _det_of_tuples([args.vectors[i - 1] for i in h])
    return value


MonomialSpec = Union[Bitableau, Tableau, tuple[Tableau, Tableau]]


def evaluate_standard_monomial(
    spec: MonomialSpec,
    group: GroupKind,
    form: FormSpec,
    points: ArgumentTuple,
) -> Fraction:
    """Value of the standard monomial attached to a tableau (O/SO/Sp) or a
    tableau pair (GL/SL): the product of column minors of the contraction
    matrix, Pfaffians for Sp, with leading columns of an oversized tableau
    contributing plain determinant factors (SL/SO)."""
    if group.bipartite:
        if isinstance(spec, Bitableau):
            first, second = spec.recording, spec.insertion
        elif isinstance(spec, tuple):
            first, second = spec
        else:
            raise ShapeError("GL/SL standard monomials need a tableau pair")
        return _bitableau_monomial(first, second, group, points)
    if not isinstance(spec, Tableau):
        raise ShapeError("O/SO/Sp standard monomials need a single tableau")
    if group.tag == "sp":
        return _pfaffian_monomial(spec, group, form, points)
    return _orthogonal_monomial(spec, group, form, points)


def _contraction(points: ArgumentTuple, i: int, j: int) -> Fraction:
    phi, vec = points.covectors[i - 1], points.vectors[j - 1]
    return sum((phi[k] * vec[k] for k in range(len(phi))), Fraction(0))


def _bitableau_monomial(
    first: Tableau, second: Tableau, group: GroupKind, points: ArgumentTuple
) -> Fraction:
    n = group.n
    a, b = first.shape, second.shape
    cols_a, cols_b = first.columns(), second.columns()
    value = Fraction(1)
    if sum(a) == sum(b):
        if a != b:
            raise ShapeError("tableau pair must share a shape (up to a rectangle)")
    else:
        heavier_first = sum(a) > sum(b)
        heavy, light = (a, b) if heavier_first else (b, a)
        k, rem = divmod(sum(heavy) - sum(light), n)
        if rem:
            raise ShapeError("shape sizes must differ by a multiple of n")
        heavy_cols = cols_a if heavier_first else cols_b
        if any(len(heavy_cols[c]) != n for c in range(k)):
            raise ShapeError("leading determinant columns must have length n")
        trimmed = tuple(p - k for p in heavy if p > k)
        if trimmed != light:
            raise ShapeError("shapes must differ by an n-row rectangle")
        if group.tag != "sl":
            raise ShapeError("only SL monomials carry determinant columns")
        for c in range(k):
            col = heavy_cols[c]
            if heavier_first:
                value *= _det_of_tuples([points.covectors[i - 1] for i in col])
            else:
                value *= _det_of_tuples([points.vectors[j - 1] for j in col])
        if heavier_first:
            cols_a = cols_a[k:]
        else:
            cols_b = cols_b[k:]
    if len(cols_a) != len(cols_b):
        raise ShapeError("column counts must agree after removing the rectangle")
    for col_t, col_u in zip(cols_a, cols_b):
        if len(col_t) != len(col_u):
            raise ShapeError("paired columns must have equal length")
        minor = [[_contraction(points, i, j) for j in col_u] for i in col_t]
        value *= linalg.det(minor)
    return value


def _orthogonal_monomial(
    tableau: Tableau, group: GroupKind, form: FormSpec, points: ArgumentTuple
) -> Fraction:
    lam = tableau.shape
    value = Fraction(1)
    working = tableau
    if group.tag == "so" and lam and not has_even_rows(lam):
        if len(lam) != group.n or not has_odd_rows(lam):
            raise ShapeError(
                "SO monomials need even rows, or odd rows with length exactly n"
            )
        first_col = working.column(0)
        value *= _det_of_tuples([points.vectors[i - 1] for i in first_col])
        working = Tableau.from_rows(
            [row[1:] for row in working.rows if len(row) > 1]
        )
        lam = working.shape
    if not has_even_rows(lam):
        raise ShapeError("orthogonal monomials need even row lengths")
    cols = working.columns()
    for k in range(0, len(cols), 2):
        left, right = cols[k], cols[k + 1]
        minor = [
            [form.pairing(points.vectors[i - 1], points.vectors[j - 1]) for j in right]
            for i in left
        ]
        value *= linalg.det(minor)
    return value


def _pfaffian_monomial(
    tableau: Tableau, group: GroupKind, form: FormSpec, points: ArgumentTuple
) -> Fraction:
    if not has_even_columns(tableau.shape):
        raise ShapeError("Sp monomials need even column lengths")
    value = Fraction(1)
    for col in tableau.columns():
        minor = [
            [form.pairing(points.vectors[i - 1], points.vectors[j - 1]) for j in col]
            for i in col
        ]
        value *= pfaffian(minor)
    return value


# -- exact group elements --------------------------------------------------------


def form_algebra_basis(form: FormSpec) -> list[Matrix]:
    """Basis of the Lie algebra {X : X^T G + G X = 0} of the form's isometry
    group, solved exactly."""
    n = form.dim
    g = [list(row) for row in form.gram]
    rows = []
    for i in range(n):
        for j in range(n):
            row = [Fraction(0)] * (n * n)
            # (X^T G + G X)[i][j] = sum_k X[k][i] G[k][j] + G[i][k] X[k][j]
            for k in range(n):
                row[k * n + i] += g[k][j]
                row[k * n + j] += g[i][k]
            rows.append(row)
    basis = linalg.nullspace(rows, n * n)
    return [[vec[i * n : (i + 1) * n] for i in range(n)] for vec in basis]


def reflection(form: FormSpec) -> Matrix:
    """A determinant -1 isometry of a symmetric form: reflection in an
    anisotropic vector."""
    if form.kind != "symmetric":
        raise UnsupportedGroupError("reflections need a symmetric form")
    n = form.dim
    candidates = [tuple(Fraction(int(k == i)) for k in range(n)) for i in range(n)]
    candidates += [
        tuple(Fraction(int(k == i or k == j)) for k in range(n))
        for i in range(n)
        for j in range(i + 1, n)
    ]
    for w in candidates:
        norm = form.pairing(w, w)
        if norm:
            gw = [
                sum((form.gram[a][k] * w[k] for k in range(n)), Fraction(0))
                for a in range(n)
            ]
            return [
                [Fraction(int(a == b)) - 2 * w[a] * gw[b] / norm for b in range(n)]
                for a in range(n)
            ]
    raise ShapeError("could not find an anisotropic vector")


def sample_group_element(
    group: GroupKind, form: FormSpec, seed: Union[int, random.Random]
) -> Matrix:
    """An exact rational element of the group: random invertible (GL),
    product of elementary shears (SL), or a Cayley transform of a random
    form-skew matrix (O/SO/Sp), composed for O with a reflection half the
    time."""
    rng = _as_rng(seed)
    n = group.dim_v
    if group.tag == "gl":
        while True:
            g = [[_rational(rng) for _ in range(n)] for _ in range(n)]
            if linalg.det(g) != 0:
                return g
    if group.tag == "sl":
        g = linalg.identity(n)
        for _ in range(max(2, 2 * n)):
            i = rng.randrange(n)
            j = rng.randrange(n)
            if i == j:
                continue
            shear = linalg.identity(n)
            shear[i][j] = _rational(rng)
            g = linalg.mat_mul(g, shear)
        return g
    if form.dim != n:
        raise ShapeError(f"form dimension {form.dim} does not match dim V = {n}")
    basis = form_algebra_basis(form)
    while True:
        s = [[Fraction(0)] * n for _ in range(n)]
        for b in basis:
            c = Fraction(rng.randint(-3, 3), rng.randint(1, 3))
            for i in range(n):
                for j in range(n):
                    s[i][j] += c * b[i][j]
        i_plus = linalg.mat_add(linalg.identity(n), s)
        if linalg.det(i_plus) == 0:
            continue
        i_minus = linalg.mat_sub(linalg.identity(n), s)
        g = linalg.mat_mul(i_minus, linalg.inverse(i_plus))
        if group.tag == "o" and rng.random() < 0.5:
            g = linalg.mat_mul(g, reflection(form))
        return g


@dataclass(frozen=True)
class InvarianceResult:
    ok: bool
    witness: Optional[dict] = None

    def __bool__(self) -> bool:
        return self.ok


def _functional_evaluator(
    functional, group: GroupKind, form: FormSpec
) -> tuple[Callable[[ArgumentTuple], Fraction], int, int]:
    """Evaluator plus the (vector, covector) arity of a functional spec."""
    if isinstance(functional, ArcDiagram):
        if functional.p is not None:
            arity = (functional.m - functional.p, functional.p)
        else:
            arity = (functional.m, 0)
        return (
            lambda args: evaluate_diagram_functional(functional, group, form, args),
            arity[0],
            arity[1],
        )
    if isinstance(functional, (Tableau, Bitableau, tuple)):
        if isinstance(functional, Bitableau):
            n_cov = max((x for row in functional.recording.rows for x in row), default=0)
            n_vec = max((x for row in functional.insertion.rows for x in row), default=0)
        elif isinstance(functional, tuple):
            n_cov = max((x for row in functional[0].rows for x in row), default=0)
            n_vec = max((x for row in functional[1].rows for x in row), default=0)
        else:
            n_vec = max((x for row in functional.rows for x in row), default=0)
            n_cov = 0
        return (
            lambda args: evaluate_standard_monomial(functional, group, form, args),
            n_vec,
            n_cov,
        )
    raise ShapeError(f"cannot evaluate functionals of type {type(functional)!r}")


def check_invariance(
    functional,
    group: GroupKind,
    form: FormSpec,
    trials: int = 20,
    tuples: int = 5,
    seed: Union[int, random.Random] = 0,
    n_vectors: Optional[int] = None,
    n_covectors: Optional[int] = None,
    sample_group: Optional[GroupKind] = None,
) -> InvarianceResult:
    """Exact invariance under ``trials`` sampled group elements, each tested
    on ``tuples`` random argument tuples.  Failures carry a witness.

    ``sample_group`` draws the group elements from a different (larger)
    group than the one the functional belongs to, e.g. O elements against
    an SO functional to detect the determinant sign.
    """
    rng = _as_rng(seed)
    evaluator, vec_arity, cov_arity = _functional_evaluator(functional, group, form)
    if n_vectors is not None:
        vec_arity = n_vectors
    if n_covectors is not None:
        cov_arity = n_covectors
    dim = group.dim_v
    for _ in range(trials):
        g = sample_group_element(sample_group or group, form, rng)
        for _ in range(tuples):
            args = ArgumentTuple.random(dim, vec_arity, cov_arity, rng)
            base = evaluator(args)
            moved = evaluator(args.transformed(g))
            if base != moved:
                witness = {
                    "group_element": [[str(x) for x in row] for row in g],
                    "vectors": [[str(x) for x in v] for v in args.vectors],
                    "covectors": [[str(x) for x in c] for c in args.covectors],
                    "expected": str(base),
                    "got": str(moved),
                }
                return InvarianceResult(False, witness)
    return InvarianceResult(True)


def evaluation_rank(
    functionals: Sequence,
    group: GroupKind,
    form: FormSpec,
    sample_count: Optional[int] = None,
    seed: Union[int, random.Random] = 0,
) -> int:
    """Rank of the evaluation matrix of the functionals on shared random
    argument tuples; equality with ``len(functionals)`` certifies linear
    independence."""
    if not functionals:
        return 0
    rng = _as_rng(seed)
    evaluators = []
    vec_arity = cov_arity = 0
    for f in functionals:
        ev, nv, nc = _functional_evaluator(f, group, form)
        evaluators.append(ev)
        vec_arity, cov_arity = max(vec_arity, nv), max(cov_arity, nc)
    count = sample_count if sample_count is not None else 2 * len(functionals)
    dim = group.dim_v
    columns = [
        ArgumentTuple.random(dim, vec_arity, cov_arity, rng) for _ in range(count)
    ]
    matrix = [[ev(args) for args in columns] for ev in evaluators]
    return linalg.rank(matrix)


# -- the Lie-algebra oracle -------------------------------------------------------
#
# Invariant vectors are exactly the weight-zero vectors killed by the
# raising operators (complete reducibility: a weight-zero highest-weight
# vector spans a trivial submodule).  The oracle therefore intersects the
# kernels of the raising actions on the zero-weight subspace of the tensor
# power, over a split form, where the Cartan subalgebra is diagonal.  O(V)
# additionally fixes a determinant -1 isometry.

GeneratorMap = dict[tuple[int, int], int]


def _gl_generators(n: int):
    weights = [tuple(int(i == k) for i in range(n)) for k in range(n)]
    raising: list[GeneratorMap] = [
        {(i, j): 1} for i in range(n) for j in range(i + 1, n)
    ]
    return weights, raising


def _so_split_generators(n: int):
    r = n // 2
    sigma = lambda i: n - 1 - i

    def weight(k: int) -> tuple[int, ...]:
        w = [0] * r
        if k < r:
            w[k] = 1
        elif sigma(k) < r:
            w[sigma(k)] = -1
        return tuple(w)

    weights = [weight(k) for k in range(n)]
    raising: list[GeneratorMap] = []
    for i in range(n):
        for j in range(i + 1, n):
            if j == sigma(i):
                continue
            mirror = (sigma(j), sigma(i))
            if (i, j) > mirror:
                continue
            raising.append({(i, j): 1, mirror: -1})
    return weights, raising


def _sp_split_generators(n: int):
    # dim V = 2n with the block form [[0, I], [-I, 0]]
    weights = []
    for k in range(2 * n):
        w = [0] * n
        if k < n:
            w[k] = 1
        else:
            w[k - n] = -1
        weights.append(tuple(w))
    raising: list[GeneratorMap] = []
    for i in range(n):
        for j in range(i + 1, n):
            raising.append({(i, j): 1, (n + j, n + i): -1})
            raising.append({(i, n + j): 1, (j, n + i): 1})
    for i in range(n):
        raising.append({(i, n + i): 1})
    return weights, raising


def lie_invariant_dim(
    group: GroupKind,
    signature: Union[int, tuple[int, int]],
    limit: Optional[int] = None,
) -> int:
    """Dimension of the invariant subspace of the tensor power, computed as
    the joint kernel of the Lie-algebra action by exact integer elimination.

    ``signature`` is the tensor order m (O/SO/Sp) or the pair (p, q) of
    vector and covector slots (GL/SL).
    """
    cap = limit if limit is not None else int(os.environ.get(ORACLE_CAP_ENV, DEFAULT_ORACLE_CAP))
    n = group.dim_v
    if group.bipartite:
        p, q = signature  # type: ignore[misc]
    else:
        p, q = int(signature), 0  # type: ignore[arg-type]
    slots = [True] * p + [False] * q  # True = vector slot, False = covector slot
    total = n ** (p + q)
    if total > cap:
        raise SizeLimitError(f"tensor space of size {total} exceeds the cap {cap}")

    if group.tag in ("gl", "sl"):
        letter_weights, raising = _gl_generators(n)
    elif group.tag in ("o", "so"):
        letter_weights, raising = _so_split_generators(n)
    else:
        letter_weights, raising = _sp_split_generators(group.n)
    rank_w = len(letter_weights[0]) if letter_weights else 0

    def word_weight(word: tuple[int, ...]) -> tuple[int, ...]:
        w = [0] * rank_w
        for slot, letter in enumerate(word):
            sign = 1 if slots[slot] else -1
            lw = letter_weights[letter]
            for i in range(rank_w):
                w[i] += sign * lw[i]
        return tuple(w)

    if group.tag == "sl":
        def is_zero_weight(w: tuple[int, ...]) -> bool:
            return all(x == w[0] for x in w)
    else:
        def is_zero_weight(w: tuple[int, ...]) -> bool:
            return all(x == 0 for x in w)

    zero_words = [
        word for word in product(range(n), repeat=p + q) if is_zero_weight(word_weight(word))
    ]
    index = {word: k for k, word in enumerate(zero_words)}

    rows_by_target: dict[tuple[int, tuple[int, ...]], dict[int, int]] = {}
    for gen_id, gen in enumerate(raising):
        by_source: dict[int, list[tuple[int, int]]] = {}
        by_source_cov: dict[int, list[tuple[int, int]]] = {}
        for (a, b), coeff in gen.items():
            by_source.setdefault(b, []).append((a, coeff))
            by_source_cov.setdefault(a, []).append((b, -coeff))
        for word in zero_words:
            src = index[word]
            for slot, letter in enumerate(word):
                actions = by_source if slots[slot] else by_source_cov
                for new_letter, coeff in actions.get(letter, ()):  # type: ignore[call-overload]
                    target = word[:slot] + (new_letter,) + word[slot + 1 :]
                    row = rows_by_target.setdefault((gen_id, target), {})
                    row[src] = row.get(src, 0) + coeff

    rows = [row for row in rows_by_target.values() if any(row.values())]

    if group.tag == "o":
        # O(V) = SO(V) extended by one determinant -1 isometry
        if n == 1:
            if (p + q) % 2 == 1:
                rows.extend({index[word]: 1} for word in zero_words)
        else:
            swap = {0: n - 1, n - 1: 0}
            for word in zero_words:
                target = tuple(swap.get(letter, letter) for letter in word)
                if target == word:
                    continue
                row = {index[word]: 1}
                row[index[target]] = row.get(index[target], 0) - 1
                rows.append(row)

    return len(zero_words) - linalg.sparse_int_rank(rows)
