"""Signs, real-type sequences and sign matrices.

Signs are plain integers -1, 0, +1.  A :class:`RealType` is the sign
sequence of one polynomial read from -infinity to +infinity, alternating
between open intervals (odd positions) and roots (even positions).  A
:class:`SignMatrix` stacks the signs of a family of polynomials over the
union of their roots.

Positions in error messages are 1-based, so that position 1 is the
leftmost unbounded interval.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    EvenColumnWithoutZero,
    InvalidShape,
    MisplacedZero,
    SignChangeWithoutRoot,
    ZeroInOddColumn,
)

SIGNS = (-1, 0, 1)


def sign(x) -> int:
    """Sign of a real number (int, Fraction, ...) as -1, 0 or +1."""
    return (x > 0) - (x < 0)


def _as_sign(value) -> int:
    # bool is an int subclass; reject it so True never sneaks in as +1
    if isinstance(value, bool) or not isinstance(value, int) or value not in SIGNS:
        raise InvalidShape(f"{value!r} is not a sign (expected -1, 0 or 1)")
    return value


def _check_real_type(entries: Sequence[int]) -> None:
    if len(entries) % 2 == 0:
        raise InvalidShape(f"a real type has odd length, got {len(entries)}")
    for pos, s in enumerate(entries, start=1):
        if pos % 2 == 0 and s != 0:
            raise MisplacedZero(f"position {pos} is a root and must be 0, got {s}")
        if pos % 2 == 1 and s == 0:
            raise MisplacedZero(f"position {pos} is an interval and must be nonzero")


@dataclass(frozen=True)
class RealType:
    """Sign sequence ``s_1, ..., s_{2m+1}`` of a single nonzero polynomial."""

    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(_as_sign(s) for s in self.entries)
        object.__setattr__(self, "entries", entries)
        _check_real_type(entries)

    @property
    def m(self) -> int:
        """Number of distinct real roots."""
        return (len(self.entries) - 1) // 2

    @property
    def first(self) -> int:
        return self.entries[0]

    @property
    def last(self) -> int:
        return self.entries[-1]

    def interval_signs(self) -> tuple[int, ...]:
        """Signs on the m+1 open intervals, left to right."""
        return self.entries[::2]

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def to_json(self) -> list[int]:
        return list(self.entries)

    def __str__(self):
        return "[" + ", ".join(map(str, self.entries)) + "]"


@dataclass(frozen=True)
class SignMatrix:
    """An ``n x (2m+1)`` sign matrix of a family of nonzero polynomials.

    Construction enforces the three structural invariants: odd columns hold
    no zero, every even column holds at least one zero, and no row switches
    sign between two of its own zeros (or on its outer segments).
    """

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(_as_sign(s) for s in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        _check_sign_matrix(rows)

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def m(self) -> int:
        return (len(self.rows[0]) - 1) // 2

    @property
    def width(self) -> int:
        return len(self.rows[0])

    def column(self, j: int) -> tuple[int, ...]:
        """Column ``j`` (0-based)."""
        return tuple(row[j] for row in self.rows)

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(j) for j in range(self.width)]

    def __iter__(self):
        return iter(self.rows)

    def __getitem__(self, i):
        return self.rows[i]

    def to_json(self) -> list[list[int]]:
        return [list(row) for row in self.rows]


def _check_sign_matrix(rows) -> None:
    if len(rows) == 0:
        raise InvalidShape("a sign matrix needs at least one row")
    width = len(rows[0])
    if any(len(row) != width for row in rows):
        raise InvalidShape("sign matrix rows have different lengths")
    if width % 2 == 0:
        raise InvalidShape(f"sign matrix width must be odd, got {width}")
    for j in range(width):
        col = [row[j] for row in rows]
        if j % 2 == 0 and 0 in col:
            raise ZeroInOddColumn(f"column {j + 1} must not contain a zero")
        if j % 2 == 1 and 0 not in col:
            raise EvenColumnWithoutZero(f"column {j + 1} must contain a zero")
    for i, row in enumerate(rows):
        prev = row[0]
        for j in range(1, width):
            s = row[j]
            if s != 0 and prev != 0 and s != prev:
                raise SignChangeWithoutRoot(i + 1, j + 1)
            prev = s


def validate_real_type(entries: Iterable[int]) -> RealType:
    """Check a sign sequence and wrap it as a :class:`RealType`.

    Raises :class:`InvalidShape` for even length or non-sign entries and
    :class:`MisplacedZero` when zeros are not exactly at even positions.
    """
    if isinstance(entries, RealType):
        return entries
    return RealType(tuple(entries))


def validate_sign_matrix(rows: Iterable[Iterable[int]]) -> SignMatrix:
    if isinstance(rows, SignMatrix):
        return rows
    return SignMatrix(tuple(tuple(row) for row in rows))


def is_valid_sign_matrix(rows: Sequence[Sequence[int]]) -> bool:
    """Non-raising variant of :func:`validate_sign_matrix` for brute-force scans."""
    try:
        _check_sign_matrix(rows)
    except (InvalidShape, ZeroInOddColumn, EvenColumnWithoutZero, SignChangeWithoutRoot):
        return False
    return True


def condense(row: Sequence[int]) -> RealType:
    """Collapse each run of equal nonzero entries of ``row`` to one entry."""
    out = [row[0]]
    for s in row[1:]:
        if s == 0 or out[-1] == 0:
            out.append(s)
    return RealType(tuple(out))


def condense_row(matrix: SignMatrix, i: int) -> RealType:
    """Real type of the ``i``-th family member (0-based row index).

    >>> A = validate_sign_matrix([[-1, 0, 1, 1, 1, 1, 1],
    ...                           [-1, -1, -1, 0, 1, 1, 1],
    ...                           [1, 0, -1, -1, -1, 0, 1]])
    >>> condense_row(A, 2).to_json()
    [1, 0, -1, 0, 1]
    """
    matrix = validate_sign_matrix(matrix)
    return condense(matrix.rows[i])
