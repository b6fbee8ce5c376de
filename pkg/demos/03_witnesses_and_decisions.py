"""From sign patterns to polynomials and back, and deciding constraint systems.

Run with ``python demos/03_witnesses_and_decisions.py``.
"""

from realtypes import (
    Constraint,
    Poly,
    decide,
    family_real_type,
    is_family_type,
    isolate_real_roots,
    realize_family,
    realize_type,
    real_type_of,
)

x = Poly.x()

# %% Integer witnesses for a sign sequence
s = [1, 0, -1, 0, -1, 0, 1]
for d in (4, 6):
    g = realize_type(s, d)
    print(f"degree {d} witness: {g}   -> {real_type_of(g)}")

# %% A family and its sign matrix
family = [x + 1, 2 * x + 1, x**2 - 1]
A = family_real_type(family)
print("\nsign matrix of", ", ".join(map(str, family)))
for row in A.rows:
    print("   ", " ".join(f"{v:2d}" for v in row))
print("realizable with degrees (1, 1, 1)?", is_family_type(A, (1, 1, 1)))

# %% Canonical integer witnesses reproduce the same matrix
ws = realize_family(A, (1, 1, 2))
print("witnesses:", [str(w) for w in ws])
print("same matrix:", family_real_type(ws) == A)

# %% Root isolation reports exact rational roots and intervals for the rest
for r in isolate_real_roots((x**2 - 2) * (2 * x + 1) ** 2):
    print(f"root in [{r.lo}, {r.hi}] with multiplicity {r.multiplicity}")

# %% Satisfiability by scanning sign matrix columns
systems = {
    "x+1 = 0, 2x+1 < 0, x^2-1 = 0": [Constraint(x + 1, "="), Constraint(2 * x + 1, "<"), Constraint(x**2 - 1, "=")],
    "x+1 = 0, 2x+1 = 0": [Constraint(x + 1, "="), Constraint(2 * x + 1, "=")],
    "x^2-2 = 0, x > 0": [Constraint(x**2 - 2, "="), Constraint(x, ">")],
}
for name, system in systems.items():
    print(f"{name:32s} -> {decide(system).to_dict()}")
