from math import factorial

import pytest
from hypothesis import given, strategies as st

from classinv.errors import ShapeError, SizeLimitError
from classinv.partitions import (
    Tableau,
    add_rectangle,
    conjugate,
    count_ssyt,
    count_syt,
    enumerate_ssyt,
    enumerate_syt,
    has_even_columns,
    has_even_rows,
    partition,
    partitions,
)
from oracles import brute_ssyt, brute_syt


@st.composite
def partition_strategy(draw, max_size=12):
    size = draw(st.integers(min_value=0, max_value=max_size))
    parts = []
    remaining = size
    cap = size
    while remaining > 0:
        part = draw(st.integers(min_value=1, max_value=min(cap, remaining)))
        parts.append(part)
        cap = part
        remaining -= part
    return tuple(parts)


def test_partition_validation():
    assert partition([3, 1]) == (3, 1)
    assert partition([]) == ()
    with pytest.raises(ShapeError):
        partition([1, 2])
    with pytest.raises(ShapeError):
        partition([2, 0])


def test_conjugate_examples():
    assert conjugate((3, 1)) == (2, 1, 1)
    assert conjugate(()) == ()
    assert conjugate((2, 2)) == (2, 2)


@given(partition_strategy())
def test_conjugate_is_an_involution(lam):
    assert conjugate(conjugate(lam)) == lam


def test_row_and_column_parity_predicates():
    assert has_even_rows((4, 2, 2))
    assert not has_even_rows((3, 2))
    assert has_even_columns((2, 2))
    assert has_even_columns((3, 3, 1, 1))
    assert not has_even_columns((2, 2, 2))


def test_partitions_generator_counts():
    # partition numbers p(0..8) = 1,1,2,3,5,7,11,15,22
    expected = [1, 1, 2, 3, 5, 7, 11, 15, 22]
    for m, count in enumerate(expected):
        assert sum(1 for _ in partitions(m)) == count
    assert list(partitions(4, max_length=2)) == [(4,), (3, 1), (2, 2)]
    assert list(partitions(4, max_part=2)) == [(2, 2), (2, 1, 1), (1, 1, 1, 1)]


def test_count_syt_small_values():
    assert count_syt((2, 2)) == 2  # brute enumeration gives the same below
    assert count_syt((2, 2, 2, 2)) == 14
    assert count_syt((1,)) == 1
    assert count_syt(()) == 1


def test_count_syt_matches_enumeration_up_to_size_8():
    for m in range(9):
        for lam in partitions(m):
            assert count_syt(lam) == len(enumerate_syt(lam)), lam


def test_count_syt_matches_brute_force_fillings():
    for lam in [(2, 2), (3, 1), (2, 1), (3, 2, 1)]:
        assert count_syt(lam) == len(brute_syt(lam))


def test_rsk_cardinality_identity():
    # sum over shapes of the squared SYT count is the size of the symmetric group
    for m in range(7):
        total = sum(count_syt(lam) ** 2 for lam in partitions(m))
        assert total == factorial(m)


def test_enumerate_syt_examples():
    assert [t.rows for t in enumerate_syt((2,))] == [((1, 2),)]
    assert [t.rows for t in enumerate_syt((1, 1))] == [((1,), (2,))]
    assert len(enumerate_syt((2, 1))) == 2


def test_enumerate_syt_is_sorted_by_row_reading_word():
    for lam in [(3, 2), (2, 2, 1), (4, 1)]:
        words = [t.row_reading_word() for t in enumerate_syt(lam)]
        assert words == sorted(words)
        assert len(set(words)) == len(words)


def test_enumerate_ssyt_examples():
    assert len(enumerate_ssyt((1, 1), 2)) == 1
    rows = [t.rows for t in enumerate_ssyt((2,), 2)]
    assert rows == [((1, 1),), ((1, 2),), ((2, 2),)]
    weighted = enumerate_ssyt((2,), 2, weight=(1, 1))
    assert [t.rows for t in weighted] == [((1, 2),)]


def test_enumerate_ssyt_matches_brute_force():
    for lam, max_entry in [((2, 1), 3), ((2, 2), 3), ((3,), 2), ((1, 1, 1), 4)]:
        ours = [t.rows for t in enumerate_ssyt(lam, max_entry)]
        assert sorted(ours) == sorted(brute_ssyt(lam, max_entry))


def test_all_ones_weight_restricts_to_standard_tableaux():
    for lam in [(2, 1), (2, 2), (3, 1, 1)]:
        size = sum(lam)
        restricted = enumerate_ssyt(lam, size, weight=(1,) * size)
        assert [t.rows for t in restricted] == [t.rows for t in enumerate_syt(lam)]
        assert all(t.is_syt() for t in restricted)


def test_count_ssyt_weight_zero_cases():
    assert count_ssyt((2,), (1, 1)) == 1
    assert count_ssyt((2,), (1, 0)) == 0


def test_add_rectangle():
    assert add_rectangle((2,), 1, 4) == (3, 1, 1, 1)
    assert add_rectangle((), 2, 4) == (2, 2, 2, 2)
    assert add_rectangle((1, 1), 0, 4) == (1, 1)
    with pytest.raises(ShapeError):
        add_rectangle((1, 1, 1), 1, 2)


def test_enumeration_size_limit():
    with pytest.raises(SizeLimitError):
        enumerate_syt((20, 20))
    with pytest.raises(SizeLimitError):
        enumerate_ssyt((20, 20), 3)


def test_tableau_predicates_and_weight():
    t = Tableau.from_rows([[1, 1, 2], [2, 3]])
    assert t.is_ssyt() and not t.is_syt()
    assert t.weight() == (2, 2, 1)
    assert t.weight(5) == (2, 2, 1, 0, 0)
    assert t.shape == (3, 2)
    assert t.column(0) == (1, 2)
    bad = Tableau.from_rows([[1, 2], [1, 3]])
    assert not bad.is_ssyt()
    assert Tableau.from_rows([[2, 1]]).is_ssyt() is False


def test_tableau_json_round_trip():
    t = Tableau.from_rows([[1, 2, 2], [3, 4]])
    data = t.to_json()
    assert data == {"shape": [3, 2], "rows": [[1, 2, 2], [3, 4]]}
    assert Tableau.from_json(data) == t
    with pytest.raises(ShapeError):
        Tableau.from_json({"shape": [2], "rows": [[1, 2, 3]]})
