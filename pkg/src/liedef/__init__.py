"""Complete solvability of real Lie algebras and definability of solvable Lie groups.

Exact rational arithmetic throughout; floating point only where a mode or
function name says so.
"""

__version__ = "0.1.0"

from .errors import LieDefError  # noqa: E402
from .exact import ExpNumber, Poly, RatMatrix, char_poly  # noqa: E402
from .liealg import LieAlgebra, Subspace, abelian, load_algebra, semidirect_sum  # noqa: E402
from .solvclass import is_completely_solvable, sampled_eigenvalue_check, search_flag  # noqa: E402
from .triangular import (exp_triangular, faithful_triangular_rep, jordan_chevalley,  # noqa: E402
                         log_triangular_positive)
from .groups import GroupPresentation, catalog, classify_group  # noqa: E402

__all__ = [
    "__version__", "LieDefError", "ExpNumber", "Poly", "RatMatrix", "char_poly", "LieAlgebra",
    "Subspace", "abelian", "load_algebra", "semidirect_sum", "is_completely_solvable",
    "sampled_eigenvalue_check", "search_flag", "exp_triangular", "faithful_triangular_rep",
    "jordan_chevalley", "log_triangular_positive", "GroupPresentation", "catalog",
    "classify_group",
]
