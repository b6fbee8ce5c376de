"""Integer witness polynomials for real types and sign matrices.

A sign sequence with roots at positions 1..m is realized by placing the
roots at the integers 1..m, giving multiplicity 1 where the sign changes
and 2 where it does not, fixing the leading sign to the rightmost sign and
padding the degree with factors ``x^2 + 1``, which are positive everywhere.
"""

from __future__ import annotations

from typing import Sequence

from .errors import DimensionMismatch, NotRealizable
from .exact_poly import Poly
from .sign_core import validate_real_type, validate_sign_matrix
from .typecheck import min_realizing_degree

_X2_PLUS_1 = Poly((1, 0, 1))


def _witness(roots: Sequence[tuple[int, int]], lead: int, d: int) -> Poly:
    # roots: (location, multiplicity) pairs
    f = Poly.const(lead)
    for r, k in roots:
        f = f * Poly((-r, 1)) ** k
    pad = d - f.degree
    assert pad >= 0 and pad % 2 == 0
    return f * _X2_PLUS_1 ** (pad // 2)


def realize_type(s, d: int) -> Poly:
    """Integer polynomial of degree exactly ``d`` whose real type is ``s``.

    >>> realize_type([1, 0, 1], 2).to_json()
    [1, -2, 1]
    """
    s = validate_real_type(s)
    w = min_realizing_degree(s)
    if not w.admits(d):
        raise NotRealizable(
            f"{s} is not a real {d}-type: it needs degree >= {w.min_degree} "
            f"of {w.parity_name} parity",
            min_degree=w.min_degree,
            parity=w.parity,
        )
    signs = s.interval_signs()
    roots = [(j, 1 if signs[j - 1] != signs[j] else 2) for j in range(1, s.m + 1)]
    return _witness(roots, s.last, d)


def realize_family(A, degrees: Sequence[int]) -> list[Poly]:
    """Integer polynomials ``f_1..f_n`` of the given degrees with sign matrix ``A``.

    Row ``i`` gets a root at the integer ``j`` for every even column ``2j``
    where it vanishes, so the combined roots are exactly ``1..m``.
    """
    A = validate_sign_matrix(A)
    degrees = [int(d) for d in degrees]
    if len(degrees) != A.n:
        raise DimensionMismatch(f"{len(degrees)} degrees given for {A.n} rows")
    out = []
    for i, (row, d) in enumerate(zip(A.rows, degrees)):
        roots = []
        for j in range(1, A.m + 1):
            if row[2 * j - 1] == 0:
                roots.append((j, 1 if row[2 * j - 2] != row[2 * j] else 2))
        if not roots:
            # rootless row: constant sign, needs even degree
            if d % 2:
                raise NotRealizable(
                    f"row {i + 1} has no zero but degree {d} is odd",
                    row=i + 1, min_degree=0, parity=0,
                )
            out.append(_witness([], row[0], d))
            continue
        M = sum(k for _, k in roots)
        parity = sum(k for _, k in roots) % 2
        if d < M or d % 2 != parity:
            raise NotRealizable(
                f"row {i + 1} is not a real {d}-type (needs degree >= {M}, "
                f"{'odd' if parity else 'even'})",
                row=i + 1, min_degree=M, parity=parity,
            )
        out.append(_witness(roots, row[-1], d))
    return out
