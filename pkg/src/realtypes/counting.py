"""Exact counts of real types of single polynomials and of families.

Every function returns a Python ``int`` so results are exact at any size.
Notation used in the names:

* ``count_exact_degree_roots(d, m)``: sequences realized in degree exactly
  ``d`` with exactly ``m`` distinct real roots.
* ``count_family_roots(degrees, m)``: ``n x (2m+1)`` sign matrices realized
  by families with exactly the given degrees.
* ``count_bar`` / ``count_bar_bar``: upper bounds on the number of sign
  matrices a parametric enumeration visits when leading coefficients, or
  whole polynomials, may vanish.
"""

from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from typing import Sequence

from .errors import DomainError, EmptyFamily

#: The empty sublist (every polynomial of the family vanishes) contributes
#: exactly one sign matrix to :func:`count_bar_bar`.
EMPTY_SUBLIST_CONTRIBUTION = 1

BARBAR_CONVENTION = (
    "sum of count_bar over all order-preserving index subsequences of the "
    "degree list, full list included, counted with multiplicity; "
    f"the empty subsequence contributes {EMPTY_SUBLIST_CONTRIBUTION}"
)


class FormulaId(str, enum.Enum):
    Rdm = "Rdm"
    Rd = "Rd"
    RdHat = "RdHat"
    RFamM = "RFamM"
    RFam = "RFam"
    RFamHat = "RFamHat"
    Snm = "Snm"
    Bar = "Bar"
    BarBar = "BarBar"
    Fib = "Fib"


@dataclass(frozen=True)
class CountReport:
    """A named counting result.

    ``params`` is the flat integer tuple the formula was evaluated at:
    ``(d, m)`` for Rdm, ``(d,)`` for Rd/RdHat, the degree list for the
    family formulas, the degree list followed by ``m`` for RFamM, ``(n, m)``
    for Snm and ``(n,)`` for Fib.
    """

    formula_id: FormulaId
    params: tuple[int, ...]
    value: int
    note: str | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.value < 0:
            raise ValueError("counts are nonnegative")

    def to_dict(self) -> dict:
        out = {
            "formula_id": self.formula_id.value,
            "params": list(self.params),
            "value": str(self.value),
        }
        if self.note:
            out["note"] = self.note
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))


def binomial(n: int, k: int) -> int:
    """``C(n, k)``, zero outside ``0 <= k <= n``."""
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def fib(n: int) -> int:
    """Fibonacci number with ``F_1 = F_2 = 1``, by exact iteration."""
    if n <= 0:
        raise DomainError(f"Fibonacci index must be positive, got {n}")
    a, b = 0, 1
    for _ in range(n - 1):
        a, b = b, a + b
    return b


def _check_nonneg(**kw):
    for name, v in kw.items():
        if v < 0:
            raise DomainError(f"{name} must be nonnegative, got {v}")


def _degrees(degrees: Sequence[int]) -> tuple[int, ...]:
    degrees = tuple(int(d) for d in degrees)
    if not degrees:
        raise EmptyFamily("a family needs at least one polynomial")
    for d in degrees:
        _check_nonneg(degree=d)
    return degrees


@lru_cache(maxsize=None)
def count_exact_degree_roots(d: int, m: int) -> int:
    """Number of real d-types with exactly ``m`` roots.

    ``2 * sum_j C(m, 2m - d + 2j)``; zero when ``m > d``.
    """
    _check_nonneg(d=d, m=m)
    # terms vanish once 2m - d + 2j > m
    start = 2 * m - d
    k = start if start >= 0 else start % 2
    if k > m:
        return 0
    c = binomial(m, k)
    total = 0
    while k <= m:
        total += c
        # C(m, k+2) from C(m, k)
        c = c * (m - k) * (m - k - 1) // ((k + 1) * (k + 2))
        k += 2
    return 2 * total


def count_exact_degree_sum(d: int) -> int:
    """Number of real d-types as the explicit sum over root counts."""
    _check_nonneg(d=d)
    return sum(count_exact_degree_roots(d, m) for m in range(d + 1))


def count_exact_degree(d: int) -> int:
    """Number of real d-types: ``2F(d+2)`` for even d, ``2F(d+2) - 2`` for odd d."""
    _check_nonneg(d=d)
    r = 2 * fib(d + 2)
    return r if d % 2 == 0 else r - 2


def count_up_to_degree(d: int) -> int:
    """Number of real types realized in degree at most ``d``: ``2F(d+3) - 2``."""
    _check_nonneg(d=d)
    return 2 * fib(d + 3) - 2


def _row_sum(d: int, free: int) -> int:
    # rows of degree d whose zeros lie in `free` allowed root columns
    return sum(binomial(free, k) * count_exact_degree_roots(d, k) for k in range(free + 1))


def count_family_roots(degrees: Sequence[int], m: int) -> int:
    """Number of ``n x (2m+1)`` real (d_1, ..., d_n)-types, by inclusion-exclusion.

    The i-th term counts matrices that keep ``i`` chosen root columns free of
    zeros; the alternating sum leaves exactly those whose every root column
    holds a zero.
    """
    degrees = _degrees(degrees)
    _check_nonneg(m=m)
    total = 0
    for i in range(m + 1):
        term = binomial(m, i)
        for d in degrees:
            term *= _row_sum(d, m - i)
            if term == 0:
                break
        total += -term if i % 2 else term
    return total


@lru_cache(maxsize=None)
def _count_family_sorted(degrees: tuple[int, ...]) -> int:
    return sum(count_family_roots(degrees, m) for m in range(sum(degrees) + 1))


def count_family(degrees: Sequence[int]) -> int:
    """Number of real (d_1, ..., d_n)-types of any width."""
    # the count is symmetric in the degrees; sort for the memo key
    return _count_family_sorted(tuple(sorted(_degrees(degrees))))


def count_family_up_to(degrees: Sequence[int]) -> int:
    """Number of sign matrices of families with ``deg f_i <= d_i`` (each ``d_i >= 1``)."""
    degrees = _degrees(degrees)
    if any(d < 1 for d in degrees):
        raise DomainError("count_family_up_to needs every degree >= 1")
    return sum(
        count_family([d - e for d, e in zip(degrees, delta)])
        for delta in product((0, 1), repeat=len(degrees))
    )


def count_any_degree(n: int, m: int) -> int:
    """``2^n (3^n - 1)^m`` sign matrices of n polynomials of arbitrary degree."""
    if n < 1:
        raise EmptyFamily("a family needs at least one polynomial")
    _check_nonneg(m=m)
    return 2**n * (3**n - 1) ** m


def count_bar(degrees: Sequence[int]) -> int:
    """Sum of :func:`count_family` over all ``0 <= e_i <= d_i``."""
    degrees = _degrees(degrees)
    return sum(count_family(e) for e in product(*(range(d + 1) for d in degrees)))


def count_bar_bar(degrees: Sequence[int]) -> int:
    """:func:`count_bar` summed over every sublist of ``degrees``.

    Sublists are index subsequences, so repeated degrees are counted once per
    position; see :data:`BARBAR_CONVENTION`.
    """
    degrees = _degrees(degrees)
    total = EMPTY_SUBLIST_CONTRIBUTION
    for r in range(1, len(degrees) + 1):
        for idx in combinations(range(len(degrees)), r):
            total += count_bar([degrees[i] for i in idx])
    return total


# -- golden ratio ----------------------------------------------------------

PHI_DIGITS = 80


def golden_ratio(digits: int = PHI_DIGITS) -> Fraction:
    """Rational approximation of (1 + sqrt 5)/2, accurate to ``digits`` digits."""
    scale = 10**digits
    return Fraction(scale + math.isqrt(5 * scale * scale), 2 * scale)


@dataclass(frozen=True)
class GoldenRatioGap:
    d: int
    ratio: Fraction
    phi: Fraction
    gap: Fraction

    def __float__(self):
        return float(self.gap)

    def decimal(self, digits: int = 20) -> str:
        """``gap`` as a fixed-point decimal string."""
        scaled = self.gap * 10**digits
        q = scaled.numerator // scaled.denominator
        s = str(q).rjust(digits + 1, "0")
        return f"{s[:-digits]}.{s[-digits:]}"


def golden_ratio_gap(d: int) -> GoldenRatioGap:
    """``|R_{d+1}/R_d - phi|`` from exact counts and an 80-digit phi."""
    if d < 2:
        raise DomainError("golden_ratio_gap needs d >= 2")
    ratio = Fraction(count_exact_degree(d + 1), count_exact_degree(d))
    phi = golden_ratio()
    return GoldenRatioGap(d, ratio, phi, abs(ratio - phi))


# -- reports ---------------------------------------------------------------


def report(formula: FormulaId | str, params: Sequence[int]) -> CountReport:
    """Evaluate ``formula`` at flat integer ``params`` (see :class:`CountReport`)."""
    formula = FormulaId(formula)
    params = tuple(int(p) for p in params)
    note = None
    if formula is FormulaId.Rdm:
        d, m = params
        value = count_exact_degree_roots(d, m)
    elif formula is FormulaId.Rd:
        (d,) = params
        value = count_exact_degree(d)
    elif formula is FormulaId.RdHat:
        (d,) = params
        value = count_up_to_degree(d)
    elif formula is FormulaId.RFamM:
        if len(params) < 2:
            raise EmptyFamily("RFamM needs degrees followed by m")
        value = count_family_roots(params[:-1], params[-1])
    elif formula is FormulaId.RFam:
        value = count_family(params)
    elif formula is FormulaId.RFamHat:
        value = count_family_up_to(params)
    elif formula is FormulaId.Snm:
        n, m = params
        value = count_any_degree(n, m)
    elif formula is FormulaId.Bar:
        value = count_bar(params)
    elif formula is FormulaId.BarBar:
        value = count_bar_bar(params)
        note = BARBAR_CONVENTION
    else:
        (n,) = params
        value = fib(n)
    return CountReport(formula, params, value, note)
