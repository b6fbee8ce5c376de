from itertools import product

import pytest

from realtypes.counting import count_exact_degree, count_exact_degree_roots, count_family_roots
from realtypes.errors import BudgetExceeded, DimensionMismatch
from realtypes.sign_core import condense, validate_sign_matrix
from realtypes.typecheck import (
    enumerate_family_types,
    enumerate_real_types,
    is_family_type,
    is_real_type,
    min_realizing_degree,
    oracle_count_any_degree,
)

from conftest import SAMPLE_TYPE, SAMPLE_ROWS


@pytest.mark.parametrize(
    "s, witness",
    [
        ([1, 0, 1], (2, 0, 0)),
        ([-1, 0, 1], (1, 1, 1)),
        (SAMPLE_TYPE, (4, 0, 2)),
        ([1], (0, 0, 0)),
    ],
)
def test_min_realizing_degree(s, witness):
    w = min_realizing_degree(s)
    assert (w.min_degree, w.parity, w.sign_changes) == witness


@pytest.mark.parametrize(
    "s, d, expected",
    [
        ([-1, 0, 1], 3, True),
        ([-1, 0, 1], 1, True),
        ([-1, 0, 1], 2, False),
        (SAMPLE_TYPE, 3, False),
        (SAMPLE_TYPE, 4, True),
        ([1, 0, 1], 2, True),
        ([1, 0, 1], 1, False),
        ([1], 0, True),
        ([1], 1, False),
    ],
)
def test_is_real_type(s, d, expected):
    assert is_real_type(s, d) is expected


def test_enumerate_small():
    assert [s.to_json() for s in enumerate_real_types(2, 1)] == [[-1, 0, -1], [1, 0, 1]]
    assert enumerate_real_types(3, 0) == []
    assert [s.to_json() for s in enumerate_real_types(0, 0)] == [[-1], [1]]


def test_enumeration_is_lexicographic():
    got = [s.entries for s in enumerate_real_types(5, 3)]
    assert got == sorted(got)


@pytest.mark.parametrize("d", range(9))
def test_enumeration_matches_counts(d):
    total = 0
    for m in range(d + 1):
        n = len(enumerate_real_types(d, m))
        assert n == count_exact_degree_roots(d, m)
        total += n
    assert total == count_exact_degree(d)


def test_monotone_embedding_and_parity():
    for d in range(9):
        for m in range(d + 1):
            for s in enumerate_real_types(d, m):
                assert is_real_type(s, d + 2)
                assert not any(is_real_type(s, e) for e in range(d % 2 == 0, 12, 2))
                assert (s.first == s.last) == (d % 2 == 0)
                w = min_realizing_degree(s)
                assert is_real_type(s, w.min_degree)
                if w.min_degree >= 2:
                    assert not is_real_type(s, w.min_degree - 2)


def test_family_type_sample(sample_matrix):
    assert is_family_type(sample_matrix, (1, 1, 2))
    assert not is_family_type(sample_matrix, (1, 1, 1))
    assert is_family_type([[1]], (2,))
    with pytest.raises(DimensionMismatch):
        is_family_type(sample_matrix, (1, 1))


def test_enumerate_family_small():
    assert [A.to_json() for A in enumerate_family_types((1,), 1)] == [[[-1, 0, 1]], [[1, 0, -1]]]
    assert enumerate_family_types((1, 1), 0) == []
    assert [A.to_json() for A in enumerate_family_types((2, 2), 0)] == [
        [[-1], [-1]], [[-1], [1]], [[1], [-1]], [[1], [1]],
    ]


def test_enumerate_family_order_and_validity():
    got = enumerate_family_types((2, 1), 2)
    keys = [A.rows for A in got]
    assert keys == sorted(keys)
    for A in got:
        assert is_family_type(A, (2, 1))


def test_budget_guard():
    with pytest.raises(BudgetExceeded):
        enumerate_family_types((2, 3, 2), 4)
    with pytest.raises(BudgetExceeded):
        oracle_count_any_degree(3, 4)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_family_enumeration_matches_inclusion_exclusion(n):
    for degrees in product(range(4), repeat=n):
        for m in range(3):
            assert len(enumerate_family_types(degrees, m)) == count_family_roots(degrees, m)


def _literal_family_scan(degrees, m):
    # no row pruning at all: scan every matrix in Sigma^(n x (2m+1))
    width = 2 * m + 1
    n = len(degrees)
    hits = 0
    for cells in product((-1, 0, 1), repeat=n * width):
        rows = [cells[i * width:(i + 1) * width] for i in range(n)]
        try:
            A = validate_sign_matrix(rows)
        except ValueError:
            continue
        hits += is_family_type(A, degrees)
    return hits


@pytest.mark.parametrize("degrees, m", [((1, 1), 1), ((2, 1), 2), ((2, 3), 1), ((1, 1, 2), 1)])
def test_row_pruned_enumeration_matches_full_scan(degrees, m):
    assert len(enumerate_family_types(degrees, m)) == _literal_family_scan(degrees, m)


@pytest.mark.parametrize(
    "n, m, expected",
    [(1, 2, 8), (2, 1, 32), (2, 0, 4), (1, 0, 2), (1, 3, 16), (2, 2, 256), (3, 1, 208)],
)
def test_oracle_count_any_degree(n, m, expected):
    assert oracle_count_any_degree(n, m) == expected


def test_condensed_rows_of_enumerated_matrices_are_types():
    for A in enumerate_family_types((3, 2), 2):
        assert is_real_type(condense(A.rows[0]), 3)
        assert is_real_type(condense(A.rows[1]), 2)
