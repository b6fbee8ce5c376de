"""Satisfiability of conjunctions of univariate sign constraints over Q.

The system ``f_1 rel_1 0, ..., f_n rel_n 0`` has a real solution iff some
column of the family's sign matrix satisfies every relation.
"""

from __future__ import annotations

import enum
import json
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import InvalidShape, ZeroPolynomial
from .exact_poly import Poly, _fmt, family_regions, squarefree_part


class Relation(str, enum.Enum):
    EQ = "="
    NE = "!="
    LT = "<"
    LE = "<="
    GT = ">"
    GE = ">="

    @classmethod
    def parse(cls, text: str) -> "Relation":
        text = text.strip()
        aliases = {"==": "=", "≠": "!=", "<>": "!=", "≤": "<=", "≥": ">="}
        try:
            return cls(aliases.get(text, text))
        except ValueError:
            raise InvalidShape(f"unknown relation {text!r}") from None

    def holds(self, s: int) -> bool:
        return s in _ALLOWED[self]


_ALLOWED = {
    Relation.EQ: {0},
    Relation.NE: {-1, 1},
    Relation.LT: {-1},
    Relation.LE: {-1, 0},
    Relation.GT: {1},
    Relation.GE: {0, 1},
}


@dataclass(frozen=True)
class Constraint:
    poly: Poly
    relation: Relation

    def __post_init__(self):
        if not isinstance(self.poly, Poly):
            object.__setattr__(self, "poly", Poly(self.poly))
        object.__setattr__(self, "relation", Relation.parse(self.relation))
        if self.poly.is_zero():
            raise ZeroPolynomial("constraints need a nonzero polynomial")

    def holds_at(self, x: Fraction) -> bool:
        v = self.poly(Fraction(x))
        return self.relation.holds((v > 0) - (v < 0))

    def __str__(self):
        return f"{self.poly} {self.relation.value} 0"


_CONSTRAINT_RE = re.compile(r"^\s*(\[.*\])\s*(!=|<=|>=|==|<>|=|<|>|≠|≤|≥)\s*0\s*$")


def parse_constraint(text) -> Constraint:
    """Parse ``"[1,1] = 0"`` or a JSON object ``{"poly": [...], "rel": "="}``."""
    if isinstance(text, dict):
        return Constraint(Poly.from_json(text["poly"]), text.get("rel", text.get("relation")))
    stripped = text.strip()
    if stripped.startswith("{"):
        return parse_constraint(json.loads(stripped))
    m = _CONSTRAINT_RE.match(text)
    if not m:
        raise InvalidShape(f"cannot parse constraint {text!r}; expected '<coeffs> <rel> 0'")
    try:
        coeffs = json.loads(m.group(1))
    except json.JSONDecodeError as exc:
        raise InvalidShape(f"bad coefficient array in {text!r}: {exc}") from None
    return Constraint(Poly.from_json(coeffs), m.group(2))


@dataclass(frozen=True)
class Region:
    """Where a satisfying column lives on the real line.

    ``kind`` is ``"root"`` for a combined root (an isolating interval
    ``[lo, hi]`` of ``defining_factor``, collapsed when the root is
    rational) or ``"interval"`` for an open region between roots.  For an
    interval region every point of ``(lo, hi)`` lies in the region (``None``
    marks an unbounded side) and ``sample`` is one such point.
    """

    kind: str
    lo: Fraction | None
    hi: Fraction | None
    sample: Fraction | None
    defining_factor: Poly | None = None

    def to_dict(self) -> dict:
        out = {"kind": self.kind}
        if self.kind == "root":
            out["interval"] = [_fmt(self.lo), _fmt(self.hi)]
            out["defining_factor"] = self.defining_factor.to_json()
            if self.sample is not None:
                out["point"] = _fmt(self.sample)
        else:
            out["bounds"] = [None if b is None else _fmt(b) for b in (self.lo, self.hi)]
            out["sample"] = _fmt(self.sample)
        return out


@dataclass(frozen=True)
class Verdict:
    satisfiable: bool
    column: int | None = None  # 1-based
    region: Region | None = None

    def __bool__(self):
        return self.satisfiable

    def to_dict(self) -> dict:
        if not self.satisfiable:
            return {"satisfiable": False}
        return {"satisfiable": True, "column": self.column, "region": self.region.to_dict()}


def decide(system: Sequence[Constraint]) -> Verdict:
    """Decide ``exists x: and_i f_i rel_i 0`` exactly.

    Returns the leftmost satisfying column with its region.
    """
    system = [c if isinstance(c, Constraint) else parse_constraint(c) for c in system]
    if not system:
        raise InvalidShape("the constraint system is empty")
    fam = family_regions([c.poly for c in system])
    for j, col in enumerate(fam.matrix.columns()):
        if all(c.relation.holds(s) for c, s in zip(system, col)):
            return Verdict(True, j + 1, _region(fam, [c.poly for c in system], j))
    return Verdict(False)


def _region(fam, polys, j: int) -> Region:
    if j % 2 == 0:
        k = j // 2
        lo = fam.roots[k - 1][1] if k > 0 else None
        hi = fam.roots[k][0] if k < len(fam.roots) else None
        return Region("interval", lo, hi, fam.samples[k])
    lo, hi = fam.roots[j // 2]
    point = lo if lo == hi else None
    if point is not None:
        factor = Poly((-lo, 1)).primitive()
    else:
        i = fam.matrix.column(j).index(0)
        factor = squarefree_part(polys[i])
    return Region("root", lo, hi, point, factor)


def region_points(region: Region, count: int = 8) -> list[Fraction]:
    """Rational points of ``region`` for spot-checking a verdict.

    An irrational root has no rational point; its isolating interval's
    endpoints are returned instead and are *not* inside the region.
    """
    if region.kind == "root":
        return [region.sample] if region.sample is not None else [region.lo, region.hi]
    lo = region.lo if region.lo is not None else region.sample - count
    hi = region.hi if region.hi is not None else region.sample + count
    step = (hi - lo) / (count + 1)
    return [region.sample] + [lo + step * k for k in range(1, count + 1)]
