"""Counting sign matrices of polynomial families.

Reproduces the complexity bounds for two quantifier elimination benchmarks
with parametric quadratics and cubics, and checks the inclusion-exclusion
formula against exhaustive enumeration on a small case.

Run with ``python demos/02_family_counts.py``.
"""

from realtypes import (
    count_any_degree,
    count_bar,
    count_bar_bar,
    count_family,
    count_family_roots,
    enumerate_family_types,
    oracle_count_any_degree,
)
from realtypes.counting import BARBAR_CONVENTION

# %% Small case: two linear polynomials
for m in range(3):
    mats = enumerate_family_types((1, 1), m)
    print(f"(1,1), m={m}: {len(mats)} matrices enumerated, formula says {count_family_roots((1, 1), m)}")
    for A in mats[:2]:
        print("   ", A.to_json())

# %% Degrees (2, 3, 2): a quadratic, a cubic and a quadratic
print("\nR_(2,3,2)        =", count_family((2, 3, 2)))
print("bar R_(2,3,2)    =", count_bar((2, 3, 2)))
print("barbar R_(2,3,2) =", count_bar_bar((2, 3, 2)))

# %% Five parametric quadratics
print("barbar R_(2,2,2,2,2) =", count_bar_bar((2, 2, 2, 2, 2)))
print("  convention:", BARBAR_CONVENTION)

# %% Arbitrary degrees: closed form against a full scan
for n, m in [(1, 3), (2, 1), (2, 2), (3, 1)]:
    print(f"S_{n}^({m}) = {count_any_degree(n, m)}  (scan: {oracle_count_any_degree(n, m)})")
