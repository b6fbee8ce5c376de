"""Real types of univariate polynomials: counting, enumeration, witnesses.

The package is organized by task:

* :mod:`realtypes.sign_core`: sign sequences and sign matrices
* :mod:`realtypes.counting`: exact counting formulas
* :mod:`realtypes.typecheck`: decision procedures and brute-force enumerators
* :mod:`realtypes.realize`: integer witness polynomials
* :mod:`realtypes.exact_poly`: exact polynomials, root isolation, real types
* :mod:`realtypes.satisfy`: satisfiability of sign-constraint systems
* :mod:`realtypes.cli`: the ``realtypes`` command
"""

from .counting import (
    CountReport,
    FormulaId,
    count_any_degree,
    count_bar,
    count_bar_bar,
    count_exact_degree,
    count_exact_degree_roots,
    count_exact_degree_sum,
    count_family,
    count_family_roots,
    count_family_up_to,
    count_up_to_degree,
    fib,
    golden_ratio_gap,
)
from .errors import RealTypeError
from .exact_poly import (
    Poly,
    RootRecord,
    family_real_type,
    isolate_real_roots,
    real_type_of,
    sign_at,
    squarefree_decomposition,
    sturm_root_count,
)
from .realize import realize_family, realize_type
from .satisfy import Constraint, Relation, Verdict, decide, parse_constraint
from .sign_core import RealType, SignMatrix, condense_row, validate_real_type, validate_sign_matrix
from .typecheck import (
    DegreeWitness,
    enumerate_family_types,
    enumerate_real_types,
    is_family_type,
    is_real_type,
    min_realizing_degree,
    oracle_count_any_degree,
)

__version__ = "0.1.0"
