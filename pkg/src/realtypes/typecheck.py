"""Deciding and enumerating real d-types and real (d_1, ..., d_n)-types.

A sign sequence with ``m`` roots and ``c`` sign changes across its roots is
realized by giving each sign-changing root an odd multiplicity and every
other root an even one.  The cheapest choice (1 and 2) has degree
``2m - c``; any rootless factor adds an even degree.  Hence the sequence is
a real d-type exactly when ``d >= 2m - c`` and ``d = c (mod 2)``.

The enumerators here scan sign sequences exhaustively and apply that rule
row by row; they never touch the counting formulas, which makes them the
brute-force oracles for :mod:`realtypes.counting`.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Sequence

from .errors import BudgetExceeded, DimensionMismatch, DomainError, EmptyFamily
from .sign_core import (
    SIGNS,
    RealType,
    SignMatrix,
    condense,
    is_valid_sign_matrix,
    validate_real_type,
    validate_sign_matrix,
)

#: Maximum number of matrix cells ``n * (2m + 1)`` an exhaustive scan may cover.
DEFAULT_BUDGET = 24


@dataclass(frozen=True)
class DegreeWitness:
    """Smallest realizing degree of a sign sequence and the forced degree parity."""

    min_degree: int
    parity: int  # 0 even, 1 odd
    sign_changes: int

    @property
    def parity_name(self) -> str:
        return "odd" if self.parity else "even"

    def admits(self, d: int) -> bool:
        return d >= self.min_degree and d % 2 == self.parity

    def to_dict(self) -> dict:
        return {
            "min_degree": self.min_degree,
            "parity": self.parity_name,
            "sign_changes": self.sign_changes,
        }


def min_realizing_degree(s) -> DegreeWitness:
    s = validate_real_type(s)
    signs = s.interval_signs()
    c = sum(1 for a, b in zip(signs, signs[1:]) if a != b)
    return DegreeWitness(2 * s.m - c, c % 2, c)


def is_real_type(s, d: int) -> bool:
    """True iff some polynomial of degree exactly ``d`` has real type ``s``."""
    if d < 0:
        raise DomainError(f"degree must be nonnegative, got {d}")
    return min_realizing_degree(s).admits(d)


def iter_real_types(d: int, m: int) -> Iterator[RealType]:
    """Real d-types with ``m`` roots in lexicographic order (-1 < 0 < 1)."""
    if d < 0 or m < 0:
        raise DomainError("degree and root count must be nonnegative")
    for odd in product((-1, 1), repeat=m + 1):
        entries = [0] * (2 * m + 1)
        entries[::2] = odd
        s = RealType(tuple(entries))
        if is_real_type(s, d):
            yield s


def enumerate_real_types(d: int, m: int) -> list[RealType]:
    return list(iter_real_types(d, m))


def _check_degrees(degrees, n=None) -> tuple[int, ...]:
    degrees = tuple(int(d) for d in degrees)
    if not degrees:
        raise EmptyFamily("a family needs at least one polynomial")
    if any(d < 0 for d in degrees):
        raise DomainError("degrees must be nonnegative")
    if n is not None and len(degrees) != n:
        raise DimensionMismatch(f"{len(degrees)} degrees given for {n} rows")
    return degrees


def is_family_type(A, degrees: Sequence[int]) -> bool:
    """True iff the sign matrix ``A`` is realized by a family of the given degrees."""
    A = validate_sign_matrix(A)
    degrees = _check_degrees(degrees, A.n)
    return all(is_real_type(condense(row), d) for row, d in zip(A.rows, degrees))


def _row_ok(row: Sequence[int]) -> bool:
    # odd positions nonzero and no sign change without a zero in between
    if any(row[j] == 0 for j in range(0, len(row), 2)):
        return False
    return all(not (a and b and a != b) for a, b in zip(row, row[1:]))


def _candidate_rows(d: int, m: int) -> list[tuple[int, ...]]:
    width = 2 * m + 1
    return [
        row
        for row in product(SIGNS, repeat=width)
        if _row_ok(row) and is_real_type(condense(row), d)
    ]


def _check_budget(n: int, m: int, budget: int) -> None:
    cells = n * (2 * m + 1)
    if cells > budget:
        raise BudgetExceeded(
            f"{n} x {2 * m + 1} matrices ({cells} cells) exceed the budget of {budget}"
        )


def iter_family_types(
    degrees: Sequence[int], m: int, *, budget: int = DEFAULT_BUDGET
) -> Iterator[SignMatrix]:
    """All real (d_1, ..., d_n)-types of width ``2m+1``, row-major lexicographic.

    Each row is drawn from an exhaustive scan of Sigma^(2m+1); a matrix is
    kept when every even column holds a zero.
    """
    degrees = _check_degrees(degrees)
    if m < 0:
        raise DomainError("root count must be nonnegative")
    _check_budget(len(degrees), m, budget)
    rows_per_degree = {d: _candidate_rows(d, m) for d in set(degrees)}
    choices = [rows_per_degree[d] for d in degrees]
    even_cols = range(1, 2 * m + 1, 2)
    for rows in product(*choices):
        if all(any(row[j] == 0 for row in rows) for j in even_cols):
            yield SignMatrix(rows)


def enumerate_family_types(
    degrees: Sequence[int], m: int, *, budget: int = DEFAULT_BUDGET
) -> list[SignMatrix]:
    return list(iter_family_types(degrees, m, budget=budget))


def oracle_count_any_degree(n: int, m: int, *, budget: int = DEFAULT_BUDGET) -> int:
    """Count structurally valid matrices in Sigma^(n x (2m+1)) by a full scan.

    Every condensed row of a valid matrix is realizable in its minimal
    degree, so no degree test is needed beyond the structural check, which
    is nevertheless applied to keep the oracle literal.
    """
    if n < 1:
        raise EmptyFamily("a family needs at least one polynomial")
    if m < 0:
        raise DomainError("root count must be nonnegative")
    _check_budget(n, m, budget)
    width = 2 * m + 1
    count = 0
    for cells in product(SIGNS, repeat=n * width):
        rows = [cells[i * width : (i + 1) * width] for i in range(n)]
        if not is_valid_sign_matrix(rows):
            continue
        if all(
            is_real_type(condense(row), min_realizing_degree(condense(row)).min_degree)
            for row in rows
        ):
            count += 1
    return count
