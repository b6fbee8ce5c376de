from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from realtypes.errors import InvalidShape, ZeroPolynomial
from realtypes.exact_poly import Poly, isolate_real_roots
from realtypes.satisfy import Constraint, Relation, decide, parse_constraint, region_points

X = Poly.x()


def test_parse():
    c = parse_constraint("[1,1] = 0")
    assert c.poly == X + 1 and c.relation is Relation.EQ
    assert parse_constraint('[1, "1/2"] <= 0').relation is Relation.LE
    assert parse_constraint('{"poly": [0, 1], "rel": ">"}').relation is Relation.GT
    assert parse_constraint("[1,0,1] ≥ 0").relation is Relation.GE
    with pytest.raises(InvalidShape):
        parse_constraint("x + 1 = 0")
    with pytest.raises(InvalidShape):
        parse_constraint("[1,1] ~ 0")
    with pytest.raises(ZeroPolynomial):
        parse_constraint("[0] = 0")


@pytest.mark.parametrize(
    "rel, signs",
    [("=", {0}), ("!=", {-1, 1}), ("<", {-1}), ("<=", {-1, 0}), (">", {1}), (">=", {0, 1})],
)
def test_relation_table(rel, signs):
    r = Relation.parse(rel)
    assert {s for s in (-1, 0, 1) if r.holds(s)} == signs


def test_sample_system_satisfiable():
    v = decide(["[1,1] = 0", "[1,2] < 0", "[-1,0,1] = 0"])
    assert v.satisfiable and v.column == 2
    assert v.region.kind == "root" and v.region.sample == -1


def test_sample_pair_unsatisfiable():
    assert not decide(["[1,1] = 0", "[1,2] = 0"])


def test_positive_definite():
    assert not decide([Constraint(X**2 + 1, "<=")])


def test_irrational_witness():
    v = decide([Constraint(X**2 - 2, "="), Constraint(X, ">")])
    r = v.region
    assert v and r.kind == "root" and r.sample is None
    assert 0 < r.lo < r.hi and r.lo**2 < 2 < r.hi**2
    assert (X**2 - 2).sign_at(r.lo) != (X**2 - 2).sign_at(r.hi)
    assert r.defining_factor.to_json() == [-2, 0, 1]


def _satisfied(system, region):
    return all(all(c.holds_at(x) for c in system) for x in region_points(region))


constraint = st.builds(
    Constraint,
    st.lists(st.integers(-4, 4), min_size=1, max_size=4).filter(any).map(Poly),
    st.sampled_from(list(Relation)),
)


@settings(max_examples=200, deadline=None)
@given(st.lists(constraint, min_size=1, max_size=3))
def test_witnesses_and_falsifier(system):
    v = decide(system)
    if v and (v.region.kind == "interval" or v.region.sample is not None):
        assert _satisfied(system, v.region)
    if not v:
        # dense rational sampling never finds a solution
        grid = [Fraction(k, 8) for k in range(-80, 81)]
        assert not any(all(c.holds_at(x) for c in system) for x in grid)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(-5, 5), min_size=1, max_size=5).filter(any).map(Poly))
def test_equation_solvable_iff_real_root(f):
    assert bool(decide([Constraint(f, "=")])) == bool(isolate_real_roots(f))


@settings(max_examples=80, deadline=None)
@given(st.lists(constraint, min_size=1, max_size=2), st.lists(st.integers(-3, 3), min_size=1, max_size=3).filter(any))
def test_tautology_does_not_change_verdict(system, coeffs):
    f = Poly(coeffs)
    assert bool(decide(system)) == bool(decide(system + [Constraint(f * f + 1, ">")]))
