"""Exact univariate polynomials over Q and their real roots.

Coefficients are :class:`fractions.Fraction` in ascending order.  Real roots
are isolated by Sturm-sequence bisection on the square-free part, so every
answer is exact: a root is reported by an isolating interval with rational
endpoints, collapsed to a point when the root is rational.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence

from .errors import EndpointIsRoot, InvalidShape, NotSquarefree, ZeroPolynomial
from .sign_core import RealType, SignMatrix, sign, validate_sign_matrix


def _frac(c) -> Fraction:
    if isinstance(c, bool):
        raise InvalidShape(f"{c!r} is not a coefficient")
    if isinstance(c, str):
        try:
            return Fraction(c.strip())
        except ValueError:
            raise InvalidShape(f"cannot parse coefficient {c!r}") from None
    if isinstance(c, (int, Fraction)):
        return Fraction(c)
    raise InvalidShape(f"{c!r} is not an exact coefficient")


class Poly:
    """Immutable dense polynomial with rational coefficients, ascending order."""

    __slots__ = ("coeffs", "_ints")

    def __init__(self, coeffs: Iterable = ()):
        cs = [c if type(c) is Fraction else _frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)
        self._ints = None

    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def const(cls, c) -> "Poly":
        return cls((c,))

    @classmethod
    def from_roots(cls, roots: Iterable, lead=1) -> "Poly":
        p = cls.const(lead)
        for r in roots:
            p = p * cls((-_frac(r), 1))
        return p

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({[str(c) for c in self.coeffs]})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            if k == 0 or mag != 1:
                body = str(mag)
                if k:
                    body += "*"
            else:
                body = ""
            if k:
                body += "x" if k == 1 else f"x^{k}"
            terms.append(("-" if c < 0 else "+", body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sg, body in terms[1:]:
            out += f" {sg} {body}"
        return out

    # arithmetic

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __add__(self, other):
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return Poly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        if not self.coeffs or not other.coeffs:
            return Poly()
        if self.is_integral() and other.is_integral():
            xs = [c.numerator for c in self.coeffs]
            ys = [c.numerator for c in other.coeffs]
            acc = [0] * (len(xs) + len(ys) - 1)
            for i, a in enumerate(xs):
                if a:
                    for j, b in enumerate(ys):
                        acc[i + j] += a * b
            return Poly(Fraction(c) for c in acc)
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result, base = Poly.const(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other):
        other = _coerce(other)
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lc = other.lc
        if len(rem) - 1 < dq:
            return Poly(), self
        quot = [Fraction(0)] * (len(rem) - dq)
        for k in range(len(rem) - 1 - dq, -1, -1):
            c = rem[k + dq] / lc
            quot[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return Poly(quot), Poly(rem[:dq])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def sign_at(self, x) -> int:
        """Exact sign of ``self(x)``, evaluated in integers."""
        if self._ints is None:
            den = reduce(math.lcm, (c.denominator for c in self.coeffs), 1)
            self._ints = [int(c * den) for c in self.coeffs]
        if not self._ints:
            return 0
        x = x if type(x) is Fraction else Fraction(x)
        p, q = x.numerator, x.denominator
        # q^deg * f(p/q), a positive multiple of f(x)
        acc, qk = 0, 1
        for c in reversed(self._ints):
            acc = acc * p + c * qk
            qk *= q
        return (acc > 0) - (acc < 0)

    def derivative(self) -> "Poly":
        return Poly(k * c for k, c in enumerate(self.coeffs) if k)

    def monic(self) -> "Poly":
        if not self.coeffs:
            return self
        return Poly(c / self.lc for c in self.coeffs)

    def primitive(self) -> "Poly":
        """Integer coefficients with gcd 1 and positive leading coefficient."""
        if not self.coeffs:
            return self
        den = reduce(math.lcm, (c.denominator for c in self.coeffs), 1)
        ints = [int(c * den) for c in self.coeffs]
        g = reduce(math.gcd, ints, 0)
        if ints[-1] < 0:
            g = -g
        return Poly(Fraction(c // g) for c in ints)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def to_json(self) -> list:
        """Ascending coefficients: ints, or ``"p/q"`` strings for non-integers."""
        return [int(c) if c.denominator == 1 else f"{c.numerator}/{c.denominator}" for c in self.coeffs]

    @classmethod
    def from_json(cls, coeffs: Sequence) -> "Poly":
        if isinstance(coeffs, (str, bytes)) or not isinstance(coeffs, Sequence):
            raise InvalidShape("a polynomial is an array of ascending coefficients")
        return cls(coeffs)


def _coerce(p) -> Poly:
    return p if isinstance(p, Poly) else Poly.const(p)


def _nonzero(f: Poly) -> Poly:
    f = _as_poly(f)
    if f.is_zero():
        raise ZeroPolynomial()
    return f


def gcd(f: Poly, g: Poly) -> Poly:
    """Monic gcd (zero if both inputs are zero)."""
    while g:
        f, g = g, (f % g).primitive()
    return f.monic()


def squarefree_part(f: Poly) -> Poly:
    f = _nonzero(f)
    if f.degree <= 0:
        return Poly.const(1)
    return (f // gcd(f, f.derivative())).primitive()


def squarefree_decomposition(f: Poly) -> list[tuple[Poly, int]]:
    """Yun's algorithm: ``f = c * prod(g_k ** k)`` with square-free, coprime ``g_k``.

    Factors are primitive with positive leading coefficient and are listed
    by ascending multiplicity; constant factors are dropped.
    """
    f = _nonzero(f)
    if f.degree <= 0:
        return []
    out = []
    df = f.derivative()
    a = gcd(f, df)
    b = f // a
    c = df // a
    k = 1
    while b.degree > 0:
        d = c - b.derivative()
        g = gcd(b, d)
        if g.degree > 0:
            out.append((g.primitive(), k))
        b = b // g
        c = d // g
        k += 1
    return out


def sturm_sequence(f: Poly) -> list[Poly]:
    """Negated remainder chain ``f, f', -rem(f, f'), ...`` with primitive scaling.

    Positive rescaling keeps every sign variation count intact while
    bounding coefficient growth.
    """
    seq = [_scaled(f), _scaled(f.derivative())]
    while seq[-1].degree > 0:
        r = seq[-2] % seq[-1]
        if r.is_zero():
            break
        seq.append(_scaled(-r))
    return [p for p in seq if p]


def _scaled(p: Poly) -> Poly:
    # divide by a positive constant so that coefficients are coprime integers
    q = p.primitive()
    return q if sign(q.lc) == sign(p.lc) else -q


def _variations(seq: Sequence[Poly], x) -> int:
    v, prev = 0, 0
    for p in seq:
        s = p.sign_at(x)
        if s:
            if prev and s != prev:
                v += 1
            prev = s
    return v


def _is_squarefree(f: Poly) -> bool:
    return gcd(f, f.derivative()).degree <= 0


def sturm_root_count(f: Poly, lo, hi) -> int:
    """Number of distinct real roots of square-free ``f`` in ``(lo, hi)``."""
    f = _nonzero(f)
    lo, hi = Fraction(lo), Fraction(hi)
    if not lo < hi:
        raise ValueError("need lo < hi")
    if not _is_squarefree(f):
        raise NotSquarefree(f"{f} has repeated roots")
    if not f.sign_at(lo) or not f.sign_at(hi):
        raise EndpointIsRoot("Sturm counts need non-root endpoints")
    seq = sturm_sequence(f)
    return _variations(seq, lo) - _variations(seq, hi)


@dataclass(frozen=True)
class RootRecord:
    """One distinct real root: inside ``[lo, hi]``, with its multiplicity.

    ``lo == hi`` exactly when the root is rational; otherwise the root lies
    strictly inside ``(lo, hi)`` and neither endpoint is a root.
    """

    lo: Fraction
    hi: Fraction
    multiplicity: int = 1

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    @property
    def value(self) -> Fraction | None:
        return self.lo if self.is_exact else None

    def to_dict(self) -> dict:
        return {
            "interval": [_fmt(self.lo), _fmt(self.hi)],
            "multiplicity": self.multiplicity,
        }


def _fmt(q: Fraction):
    return int(q) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def cauchy_bound(f: Poly) -> Fraction:
    """All real roots of ``f`` lie strictly inside ``(-B, B)``."""
    lc = abs(f.lc)
    return 1 + max((abs(c) / lc for c in f.coeffs[:-1]), default=Fraction(0))


def _split_point(p: Poly, a: Fraction, b: Fraction) -> Fraction:
    # a point strictly between a and b that is not a root of p
    for num, den in ((1, 2), (1, 3), (2, 3), (1, 4), (3, 4)):
        x = a + (b - a) * num / den
        if p.sign_at(x):
            return x
    k = 5
    while True:  # p has finitely many roots
        x = a + (b - a) / k
        if p.sign_at(x):
            return x
        k += 1


def _bisect_once(p: Poly, a: Fraction, b: Fraction) -> tuple[Fraction, Fraction]:
    """Halve a single-root interval of square-free ``p`` (endpoints non-roots)."""
    mid = _split_point(p, a, b)
    if p.sign_at(a) != p.sign_at(mid):
        return a, mid
    return mid, b


def _exact_root(p: Poly, a: Fraction, b: Fraction) -> tuple[Fraction, Fraction]:
    """Shrink an isolating interval of primitive square-free ``p``.

    A rational root of a primitive integer polynomial has a denominator that
    divides the leading coefficient ``L``, so it has the form ``k / L``.
    Once the interval is shorter than ``1/L`` at most one such point lies in
    it, and testing that point decides rationality.
    """
    L = int(abs(p.lc))
    step = Fraction(1, L)
    while b - a >= step:
        a, b = _bisect_once(p, a, b)
    k = math.floor(a * L) + 1
    x = Fraction(k, L)
    if a < x < b and not p.sign_at(x):
        return x, x
    return a, b


def _isolate_squarefree(p: Poly) -> list[tuple[Fraction, Fraction]]:
    """Sorted isolating intervals ``[lo, hi]`` of the roots of square-free ``p``."""
    if p.degree <= 0:
        return []
    p = p.primitive()
    seq = sturm_sequence(p)
    B = cauchy_bound(p)
    found = []
    stack = [(-B, B, _variations(seq, -B), _variations(seq, B))]
    while stack:
        a, b, va, vb = stack.pop()
        count = va - vb
        if count == 0:
            continue
        if count == 1:
            found.append(_exact_root(p, a, b))
            continue
        mid = _split_point(p, a, b)
        vm = _variations(seq, mid)
        stack.append((a, mid, va, vm))
        stack.append((mid, b, vm, vb))
    found.sort()
    return found


def isolate_real_roots(f: Poly) -> list[RootRecord]:
    """All distinct real roots of ``f``, sorted, with multiplicities."""
    f = _nonzero(f)
    factors = squarefree_decomposition(f)
    if not factors:
        return []
    p = reduce(lambda acc, gk: acc * gk[0], factors, Poly.const(1))
    records = []
    for lo, hi in _isolate_squarefree(p):
        for g, k in factors:
            if _vanishes_in(g, lo, hi):
                records.append(RootRecord(lo, hi, k))
                break
        else:  # pragma: no cover - every root of p is a root of some factor
            raise AssertionError("root not attributed to a square-free factor")
    return records


def _vanishes_in(g: Poly, lo: Fraction, hi: Fraction) -> bool:
    """Whether square-free ``g`` has a root in ``[lo, hi]``.

    The interval is assumed to isolate one root of a multiple of ``g``, so
    its endpoints are non-roots unless ``lo == hi``.
    """
    if lo == hi:
        return not g.sign_at(lo)
    if g.degree <= 0:
        return False
    return g.sign_at(lo) != g.sign_at(hi) or sturm_root_count(g, lo, hi) > 0


def sign_at(f: Poly, q) -> int:
    """Exact sign of ``f(q)`` for rational ``q``."""
    return _as_poly(f).sign_at(Fraction(q))


def _as_poly(f) -> Poly:
    if isinstance(f, Poly):
        return f
    if isinstance(f, (list, tuple)):
        return Poly(f)
    return Poly.const(f)


def _samples(intervals: Sequence[tuple[Fraction, Fraction]]) -> list[Fraction]:
    """Rational points in the open regions around and between the roots."""
    if not intervals:
        return [Fraction(0)]
    pts = [intervals[0][0] - 1]
    for (_, hi), (lo, _) in zip(intervals, intervals[1:]):
        pts.append((hi + lo) / 2)
    pts.append(intervals[-1][1] + 1)
    return pts


def real_type_of(f: Poly) -> RealType:
    """Signs of ``f`` on the 2m+1 regions cut out by its real roots.

    >>> real_type_of(Poly([0, 0, -4, 0, 1])).to_json()
    [1, 0, -1, 0, -1, 0, 1]
    """
    f = _nonzero(_as_poly(f))
    intervals = [(r.lo, r.hi) for r in isolate_real_roots(f)]
    entries = []
    for k, x in enumerate(_samples(intervals)):
        s = f.sign_at(x)
        assert s != 0, "sample point landed on a root"
        if k:
            entries.append(0)
        entries.append(s)
    return RealType(tuple(entries))


@dataclass(frozen=True)
class FamilyRegions:
    """Sign matrix of a family together with the regions of each column.

    ``roots[j]`` is the isolating interval of the j-th combined root and
    ``samples[j]`` a rational point of the j-th open region;
    ``defining_factor`` is the square-free polynomial whose roots these are.
    """

    matrix: SignMatrix
    roots: tuple[tuple[Fraction, Fraction], ...]
    samples: tuple[Fraction, ...]
    defining_factor: Poly


def _sign_near_root(f: Poly, p: Poly, lo: Fraction, hi: Fraction) -> int:
    """Sign of ``f`` at the unique root of ``p`` in ``(lo, hi)``, given ``f`` is nonzero there."""
    g = squarefree_part(f)
    while True:
        if f.sign_at(lo) == f.sign_at(hi) != 0 and (
            g.degree <= 0 or sturm_root_count(g, lo, hi) == 0
        ):
            return f.sign_at(lo)
        lo, hi = _bisect_once(p, lo, hi)


def family_regions(fs: Sequence[Poly]) -> FamilyRegions:
    fs = [_as_poly(f) for f in fs]
    if not fs:
        raise InvalidShape("a family needs at least one polynomial")
    for i, f in enumerate(fs):
        if f.is_zero():
            raise ZeroPolynomial(f"family member {i + 1} is the zero polynomial", index=i + 1)
    parts = [squarefree_part(f) for f in fs]
    # square-free part of the product: lcm of the members' square-free parts
    p = Poly.const(1)
    for g in parts:
        if g.degree > 0:
            p = (p * (g // gcd(p, g))).primitive()
    intervals = _isolate_squarefree(p) if p.degree > 0 else []
    samples = _samples(intervals)
    n = len(fs)
    rows = [[] for _ in range(n)]
    for j, x in enumerate(samples):
        for i, f in enumerate(fs):
            rows[i].append(f.sign_at(x))
        if j == len(intervals):
            break
        lo, hi = intervals[j]
        for i, (f, g) in enumerate(zip(fs, parts)):
            if lo == hi:
                rows[i].append(f.sign_at(lo))
            elif g.degree > 0 and _vanishes_in(g, lo, hi):
                rows[i].append(0)
            else:
                rows[i].append(_sign_near_root(f, p, lo, hi))
    matrix = validate_sign_matrix(rows)
    return FamilyRegions(matrix, tuple(intervals), tuple(samples), p)


def family_real_type(fs: Sequence[Poly]) -> SignMatrix:
    """Sign matrix of ``f_1, ..., f_n`` over the union of their real roots."""
    return family_regions(fs).matrix
