"""How many sign patterns can one polynomial of degree d produce?

Walks from a concrete polynomial to the counting formulas:

1. compute the real type of x^4 - 4x^2 exactly,
2. list every real 2-type by brute force,
3. compare the binomial sum with the Fibonacci closed form,
4. watch R_{d+1}/R_d approach the golden ratio.

Run with ``python demos/01_single_polynomial_counts.py``.
"""

from realtypes import (
    Poly,
    count_exact_degree,
    count_exact_degree_roots,
    count_exact_degree_sum,
    count_up_to_degree,
    enumerate_real_types,
    golden_ratio_gap,
    min_realizing_degree,
    real_type_of,
)

x = Poly.x()

# %% A real type is read off at and between the real roots
f = x**4 - 4 * x**2
s = real_type_of(f)
print(f"real type of {f}: {s}")
w = min_realizing_degree(s)
print(f"  needs degree >= {w.min_degree}, {w.parity_name} degrees only")

# %% Every real 2-type, grouped by the number of distinct roots
for m in range(3):
    types = enumerate_real_types(2, m)
    print(f"degree 2, {m} roots: {[t.to_json() for t in types]}  (formula: {count_exact_degree_roots(2, m)})")

# %% Binomial sum versus Fibonacci closed form
print("\n d   sum   closed   up-to-d")
for d in range(11):
    print(f"{d:2d} {count_exact_degree_sum(d):5d} {count_exact_degree(d):8d} {count_up_to_degree(d):9d}")

# %% Growth rate
for d in (10, 50, 200):
    g = golden_ratio_gap(d)
    print(f"d={d:3d}: |R_(d+1)/R_d - phi| = {g.decimal(50)[:24]}...")
