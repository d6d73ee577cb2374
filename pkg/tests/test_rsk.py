import random
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from classinv.errors import ShapeError
from classinv.natmatrix import (
    NatMatrix,
    matrices_with_row_sums,
    symmetric_matrices_with_row_sums,
)
from classinv.partitions import Tableau, enumerate_ssyt, partitions, has_even_rows, has_even_columns
from classinv.rsk import (
    Bitableau,
    burge_insert,
    rsk_a,
    rsk_a_inv,
    rsk_a_diagonal,
    rsk_b,
    rsk_b_inv,
    rsk_c,
    rsk_c_inv,
    support_width,
)


def all_matrices(rows, cols, top):
    for vals in product(range(top + 1), repeat=rows * cols):
        yield NatMatrix(tuple(vals[r * cols : (r + 1) * cols] for r in range(rows)))


def test_rsk_a_zero_and_identity():
    pair = rsk_a(NatMatrix.zero(2, 3))
    assert pair.recording.rows == () and pair.insertion.rows == ()
    pair = rsk_a(NatMatrix.from_rows([[1, 0], [0, 1]]))
    # both tableaux are the single row [1, 2]; the support is a chain
    assert pair.recording.rows == ((1, 2),)
    assert pair.insertion.rows == ((1, 2),)
    assert support_width(NatMatrix.from_rows([[1, 0], [0, 1]]), "product") == 1


def test_rsk_a_antidiagonal_gives_a_column():
    anti = NatMatrix.from_rows([[0, 0, 1], [0, 1, 0], [1, 0, 0]])
    pair = rsk_a(anti)
    assert pair.recording.shape == (1, 1, 1)
    assert support_width(anti, "product") == 3


def test_rsk_a_sum_and_width_properties_exhaustive_01():
    # row sums give the recording weight, column sums the insertion weight,
    # and the shape length is the product-order support width; checked over
    # every 2x2 and 3x3 zero-one matrix
    for rows, cols in [(2, 2), (3, 3)]:
        for matrix in all_matrices(rows, cols, 1):
            pair = rsk_a(matrix)
            if pair.recording.rows:
                assert pair.recording.weight(rows) == matrix.row_sums()
                assert pair.insertion.weight(cols) == matrix.col_sums()
                assert len(pair.recording.shape) == support_width(matrix, "product")
            assert pair.recording.is_ssyt() and pair.insertion.is_ssyt()


def test_rsk_a_round_trip_exhaustive_3x3():
    for matrix in all_matrices(3, 3, 2):
        back = rsk_a_inv(rsk_a(matrix), rows=3, cols=3)
        assert back.entries == matrix.entries


@settings(max_examples=60)
@given(
    st.integers(1, 4),
    st.integers(1, 4),
    st.data(),
)
def test_rsk_a_round_trip_random(rows, cols, data):
    vals = data.draw(
        st.lists(st.integers(0, 3), min_size=rows * cols, max_size=rows * cols)
    )
    matrix = NatMatrix(tuple(tuple(vals[r * cols : (r + 1) * cols]) for r in range(rows)))
    back = rsk_a_inv(rsk_a(matrix), rows=rows, cols=cols)
    assert back.entries == matrix.entries


def test_rsk_a_inv_rejects_mismatched_shapes():
    with pytest.raises(ShapeError):
        Bitableau(Tableau.from_rows([[1, 2]]), Tableau.from_rows([[1], [2]]))
    with pytest.raises(ShapeError):
        rsk_a_inv(Bitableau(Tableau.from_rows([[2, 1]]), Tableau.from_rows([[1, 1]])))


def test_rsk_b_examples():
    assert rsk_b(Tableau(()), size=2).entries == ((0, 0), (0, 0))
    assert rsk_b(Tableau.from_rows([[1, 2]]), size=2).entries == ((0, 1), (1, 0))
    assert rsk_b(Tableau.from_rows([[1, 1]]), size=2).entries == ((2, 0), (0, 0))


def test_rsk_b_rejects_odd_rows_and_bad_matrices():
    with pytest.raises(ShapeError):
        rsk_b(Tableau.from_rows([[1, 2, 3]]))
    with pytest.raises(ShapeError):
        rsk_b_inv(NatMatrix.from_rows([[0, 1], [0, 0]]))
    with pytest.raises(ShapeError):
        rsk_b_inv(NatMatrix.from_rows([[1, 1], [1, 0]]))


def even_row_tableaux(weight):
    m = len(weight)
    out = []
    for lam in partitions(sum(weight), max_length=m):
        if has_even_rows(lam):
            out.extend(enumerate_ssyt(lam, m, weight=weight))
    return out


def compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for x in range(total + 1):
        for rest in compositions(total - x, parts - 1):
            yield (x,) + rest


def test_rsk_b_is_a_weight_preserving_bijection_small_grid():
    # exhaustive bijectivity between even-rowed SSYT of weight d and
    # symmetric even-diagonal matrices with row sums d
    for m in range(1, 5):
        for total in range(0, 7, 2):
            for d in compositions(total, m):
                tableaux = even_row_tableaux(d)
                mats = list(symmetric_matrices_with_row_sums(d, diagonal="even"))
                assert len(tableaux) == len(mats)
                seen = set()
                for t in tableaux:
                    a = rsk_b(t, size=m)
                    assert a.is_symmetric() and a.has_even_diagonal()
                    assert a.row_sums() == d
                    assert support_width(a, "reversed") == len(t.shape)
                    assert rsk_b_inv(a) == t
                    seen.add(a.entries)
                assert len(seen) == len(tableaux)


def test_burge_recording_equals_insertion_on_symmetric_input():
    for d in [(1, 1), (2, 0, 2), (1, 2, 1), (2, 2, 2)]:
        for matrix in symmetric_matrices_with_row_sums(d, diagonal="any"):
            pair = burge_insert(matrix)
            assert pair.recording == pair.insertion


def test_rsk_c_examples():
    assert rsk_c(Tableau(()), size=2).entries == ((0, 0), (0, 0))
    assert rsk_c(Tableau.from_rows([[1], [2]]), size=2).entries == ((0, 1), (1, 0))
    got = rsk_c(Tableau.from_rows([[1], [2], [3], [4]]), size=4)
    # the full nesting: 1 matched with 4, 2 with 3
    assert got.entries == (
        (0, 0, 0, 1),
        (0, 0, 1, 0),
        (0, 1, 0, 0),
        (1, 0, 0, 0),
    )


def test_rsk_c_rejects_odd_columns_and_nonzero_trace():
    with pytest.raises(ShapeError):
        rsk_c(Tableau.from_rows([[1, 2]]))
    with pytest.raises(ShapeError):
        rsk_c_inv(NatMatrix.from_rows([[1, 0], [0, 1]]))


def test_rsk_c_round_trip_and_properties():
    for m in range(1, 5):
        for total in range(0, 7, 2):
            for d in compositions(total, m):
                for lam in partitions(total, max_length=m):
                    if not has_even_columns(lam):
                        continue
                    for t in enumerate_ssyt(lam, m, weight=d):
                        a = rsk_c(t, size=m)
                        assert a.is_symmetric() and a.has_zero_diagonal()
                        assert a.row_sums() == d
                        assert support_width(a, "product") == len(lam)
                        assert rsk_c_inv(a) == t


def test_diagonal_rsk_trace_counts_odd_columns():
    from classinv.partitions import conjugate

    for m in range(1, 5):
        for total in range(0, 7):
            for lam in partitions(total, max_length=m):
                odd_cols = sum(1 for c in conjugate(lam) if c % 2)
                for d in compositions(total, m):
                    for t in enumerate_ssyt(lam, m, weight=d):
                        assert rsk_a_diagonal(t, size=m).trace() == odd_cols


def test_support_width_examples():
    ident = NatMatrix.from_rows([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    anti = NatMatrix.from_rows([[0, 0, 1], [0, 1, 0], [1, 0, 0]])
    assert support_width(ident, "product") == 1
    assert support_width(ident, "reversed") == 3
    assert support_width(anti, "product") == 3
    assert support_width(anti, "reversed") == 1
    with pytest.raises(ValueError):
        support_width(ident, "sideways")


def test_rsk_b_fixed_degree_bijection_matches_sides():
    # both sides of the even-diagonal correspondence, counted independently
    rng = random.Random(1)
    for _ in range(10):
        m = rng.randint(2, 4)
        d = tuple(rng.randint(0, 2) for _ in range(m))
        if sum(d) % 2:
            continue
        lhs = len(even_row_tableaux(d))
        rhs = sum(1 for _ in symmetric_matrices_with_row_sums(d, diagonal="even"))
        assert lhs == rhs
